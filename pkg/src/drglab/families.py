"""Constructors for the concrete graph families, plus antipodal folding.

Vertex numbering is always the lexicographic rank of the combinatorial label
(subset, word, grid coordinate, ...), so golden files are stable.
"""

from __future__ import annotations

import itertools
import os
import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import InputError, ResourceError
from .graph import Graph

DEFAULT_VERTEX_CAP = 2_000_000
#: above this size, folding constructors switch to label-derived antipodal
#: classes with sampled distance verification
EXHAUSTIVE_FOLD_CAP = 10_000


def vertex_cap() -> int:
    env = os.environ.get("DRG_LAB_VERTEX_CAP")
    return int(env) if env else DEFAULT_VERTEX_CAP


@dataclass(frozen=True)
class FamilySpec:
    """Tagged family descriptor; ``data`` carries Steiner blocks or OA rows."""

    name: str
    params: Tuple[int, ...] = ()
    data: Optional[tuple] = None

    @classmethod
    def parse(cls, text: str, data=None) -> "FamilySpec":
        name, _, rest = text.partition(":")
        params = tuple(int(t) for t in rest.split(",") if t) if rest else ()
        if data is not None:
            data = tuple(tuple(row) for row in data)
        return cls(name.strip().lower().replace("-", "_"), params, data)


def _check_cap(n: int):
    if n > vertex_cap():
        raise ResourceError(f"construction of {n} vertices exceeds cap {vertex_cap()}")


def johnson(n: int, d: int) -> Graph:
    if not 1 <= d <= n:
        raise InputError("Johnson graph needs 1 <= d <= n")
    from math import comb
    _check_cap(comb(n, d))
    labels = list(itertools.combinations(range(n), d))
    index = {lab: i for i, lab in enumerate(labels)}
    adj: List[List[int]] = []
    full = set(range(n))
    for lab in labels:
        inside = set(lab)
        nbs = []
        for a in lab:
            rest = inside - {a}
            for b in full - inside:
                nbs.append(index[tuple(sorted(rest | {b}))])
        adj.append(sorted(nbs))
    return Graph(adj, validate=False)


def hamming(D: int, q: int) -> Graph:
    if D < 1 or q < 2:
        raise InputError("Hamming graph needs D >= 1, q >= 2")
    _check_cap(q ** D)
    labels = list(itertools.product(range(q), repeat=D))
    index = {lab: i for i, lab in enumerate(labels)}
    adj = []
    for lab in labels:
        nbs = []
        for pos in range(D):
            for val in range(q):
                if val != lab[pos]:
                    nbs.append(index[lab[:pos] + (val,) + lab[pos + 1:]])
        adj.append(sorted(nbs))
    return Graph(adj, validate=False)


def hypercube(length: int) -> Graph:
    return hamming(length, 2)


def halved_cube(length: int) -> Graph:
    """Even-weight binary words of the given length, adjacent at Hamming
    distance 2."""
    if length < 2:
        raise InputError("halved cube needs length >= 2")
    _check_cap(2 ** (length - 1))
    labels = [w for w in itertools.product((0, 1), repeat=length) if sum(w) % 2 == 0]
    index = {lab: i for i, lab in enumerate(labels)}
    adj = []
    for lab in labels:
        nbs = []
        for i, j in itertools.combinations(range(length), 2):
            flipped = list(lab)
            flipped[i] ^= 1
            flipped[j] ^= 1
            nbs.append(index[tuple(flipped)])
        adj.append(sorted(nbs))
    return Graph(adj, validate=False)


def grid(p: int, q: int) -> Graph:
    if p < 1 or q < 1:
        raise InputError("grid needs positive side lengths")
    _check_cap(p * q)
    adj = []
    for i in range(p):
        for j in range(q):
            nbs = [i * q + jj for jj in range(q) if jj != j]
            nbs += [ii * q + j for ii in range(p) if ii != i]
            adj.append(sorted(nbs))
    return Graph(adj, validate=False)


def complete_multipartite(t: int, m: int) -> Graph:
    if t < 2 or m < 1:
        raise InputError("complete multipartite needs t >= 2, m >= 1")
    _check_cap(t * m)
    n = t * m
    adj = [[u for u in range(n) if u // m != v // m] for v in range(n)]
    return Graph(adj, validate=False)


def cocktail_party(t: int) -> Graph:
    return complete_multipartite(t, 2)


def triangular(n: int) -> Graph:
    return johnson(n, 2)


def complete(n: int) -> Graph:
    if n < 1:
        raise InputError("complete graph needs n >= 1")
    return Graph([[u for u in range(n) if u != v] for v in range(n)], validate=False)


def cycle(n: int) -> Graph:
    if n < 3:
        raise InputError("cycle needs n >= 3")
    return Graph([sorted({(v - 1) % n, (v + 1) % n}) for v in range(n)], validate=False)


def petersen() -> Graph:
    """Kneser graph K(5, 2)."""
    labels = list(itertools.combinations(range(5), 2))
    adj = [[j for j, other in enumerate(labels) if not set(lab) & set(other)]
           for lab in labels]
    return Graph(adj, validate=False)


_ICOSAHEDRON_ADJ = [
    [1, 2, 3, 4, 5], [0, 2, 5, 6, 7], [0, 1, 3, 7, 8], [0, 2, 4, 8, 9],
    [0, 3, 5, 9, 10], [0, 1, 4, 6, 10], [1, 5, 7, 10, 11], [1, 2, 6, 8, 11],
    [2, 3, 7, 9, 11], [3, 4, 8, 10, 11], [4, 5, 6, 9, 11], [6, 7, 8, 9, 10],
]


def icosahedron() -> Graph:
    return Graph(_ICOSAHEDRON_ADJ)


# -- design-backed families -------------------------------------------------


def validate_orthogonal_array(rows: Sequence[Sequence[int]]) -> Tuple[int, int]:
    """Check OA(m, n) row-pair axioms; returns (m, n)."""
    m = len(rows)
    if m < 2:
        raise InputError("orthogonal array needs at least 2 rows")
    ncols = len(rows[0])
    if any(len(r) != ncols for r in rows):
        raise InputError("orthogonal array rows have unequal length")
    import math
    n = math.isqrt(ncols)
    if n * n != ncols:
        raise InputError("orthogonal array must have n^2 columns")
    for r in rows:
        if any(not (0 <= v < n) for v in r):
            raise InputError("orthogonal array entries must lie in 0..n-1")
    for i in range(m):
        for j in range(i + 1, m):
            pairs = set(zip(rows[i], rows[j]))
            if len(pairs) != n * n:
                raise InputError(
                    f"rows {i}, {j} do not hit every ordered pair exactly once")
    return m, n


def latin_square_graph(m: int = None, n: int = None,
                       oa: Optional[Sequence[Sequence[int]]] = None) -> Graph:
    """Block graph of an orthogonal array.

    With (m, n) given and no OA data, the cyclic table over Z_n supplies
    OA(m, n) for m <= 3 (rows, columns, symbols); larger m needs caller data.
    """
    if oa is None:
        if m is None or n is None:
            raise InputError("latin square graph needs (m, n) or OA data")
        if not 2 <= m <= 3:
            raise InputError(
                "cyclic construction only covers m in {2, 3}; supply OA data for larger m")
        if n < 2:
            raise InputError("latin square graph needs n >= 2")
        cols = list(itertools.product(range(n), repeat=2))
        oa = [[x for x, _ in cols], [y for _, y in cols]]
        if m == 3:
            oa.append([(x + y) % n for x, y in cols])
    m, n = validate_orthogonal_array(oa)
    _check_cap(n * n)
    ncols = n * n
    cols = list(zip(*oa))
    adj: List[List[int]] = [[] for _ in range(ncols)]
    for i in range(ncols):
        for j in range(i + 1, ncols):
            agree = sum(1 for a, b in zip(cols[i], cols[j]) if a == b)
            if agree == 1:
                adj[i].append(j)
                adj[j].append(i)
    return Graph([sorted(x) for x in adj], validate=False)


def validate_steiner_blocks(blocks: Sequence[Sequence[int]]) -> Tuple[int, int]:
    """Check the blocks form a 2-(n, m, 1) design; returns (m, n)."""
    if not blocks:
        raise InputError("no blocks given")
    sizes = {len(b) for b in blocks}
    if len(sizes) != 1:
        raise InputError("blocks must have a common size")
    m = sizes.pop()
    if m < 2:
        raise InputError("blocks must have size >= 2")
    points = sorted({p for b in blocks for p in b})
    if any(len(set(b)) != len(b) for b in blocks):
        raise InputError("repeated point inside a block")
    cover: Dict[Tuple[int, int], int] = {}
    for b in blocks:
        for pair in itertools.combinations(sorted(b), 2):
            cover[pair] = cover.get(pair, 0) + 1
            if cover[pair] > 1:
                raise InputError(f"point pair {pair} covered twice (lambda must be 1)")
    for pair in itertools.combinations(points, 2):
        if pair not in cover:
            raise InputError(f"point pair {pair} not covered by any block")
    return m, len(points)


def steiner_block_graph(blocks: Sequence[Sequence[int]]) -> Graph:
    """Block graph of a Steiner system: blocks adjacent iff they share a point."""
    validate_steiner_blocks(blocks)
    bsets = [frozenset(b) for b in blocks]
    _check_cap(len(bsets))
    nb = len(bsets)
    adj: List[List[int]] = [[] for _ in range(nb)]
    for i in range(nb):
        for j in range(i + 1, nb):
            if len(bsets[i] & bsets[j]) == 1:
                adj[i].append(j)
                adj[j].append(i)
    return Graph([sorted(x) for x in adj], validate=False)


# -- antipodal folding ------------------------------------------------------


def _classes_from_distances(g: Graph) -> List[Tuple[int, ...]]:
    dm = g.distance_matrix()
    D = int(dm.max())
    classes: List[Tuple[int, ...]] = []
    assigned = [None] * g.n
    for v in range(g.n):
        if assigned[v] is not None:
            continue
        cls = (v,) + tuple(int(u) for u in (dm[v] == D).nonzero()[0])
        for u in cls:
            if assigned[u] is not None:
                raise InputError("not antipodal: distance-D relation is not an equivalence")
            assigned[u] = len(classes)
        classes.append(tuple(sorted(cls)))
    # transitivity: each member must see exactly its own class
    for cls in classes:
        for u in cls:
            far = {int(w) for w in (dm[u] == D).nonzero()[0]} | {u}
            if far != set(cls):
                raise InputError("not antipodal: distance-D relation is not an equivalence")
    return classes


def antipodal_quotient(g: Graph, classes: Optional[Sequence[Sequence[int]]] = None,
                       sample_checks: int = 64, seed: int = 0) -> Graph:
    """Quotient on antipodal classes; classes adjacent iff some
    representatives are adjacent.

    When ``classes`` is supplied (large parents), the partition is validated
    structurally and distance-D membership is verified on a seeded sample of
    classes instead of all of them.
    """
    if classes is None:
        if g.n > EXHAUSTIVE_FOLD_CAP:
            raise ResourceError(
                "exhaustive antipodal class computation capped; supply classes")
        classes = _classes_from_distances(g)
    classes = [tuple(sorted(c)) for c in classes]
    sizes = {len(c) for c in classes}
    if len(sizes) != 1 or sizes == {1}:
        raise InputError("not antipodal: classes must have a common size >= 2")
    seen = sorted(v for c in classes for v in c)
    if seen != list(range(g.n)):
        raise InputError("classes do not partition the vertex set")
    rng = random.Random(seed)
    check = classes if len(classes) <= sample_checks else rng.sample(classes, sample_checks)
    for cls in check:
        dist = g.distances_from(cls[0])
        Dv = max(dist)
        far = {u for u in range(g.n) if dist[u] == Dv} | {cls[0]}
        if far != set(cls):
            raise InputError("not antipodal: supplied class mismatches distance-D relation")
    classes.sort(key=lambda c: c[0])
    cls_of = [0] * g.n
    for i, c in enumerate(classes):
        for v in c:
            cls_of[v] = i
    adj = [set() for _ in classes]
    for v in range(g.n):
        cv = cls_of[v]
        for u in g.neighbors(v):
            cu = cls_of[u]
            if cu != cv:
                adj[cv].add(cu)
    return Graph([sorted(s) for s in adj], validate=False)


def folded_johnson(n: int, d: int) -> Graph:
    if n != 2 * d:
        raise InputError("folded Johnson graph is defined for J(2d, d)")
    parent = johnson(n, d)
    from math import comb
    if parent.n > EXHAUSTIVE_FOLD_CAP:
        labels = list(itertools.combinations(range(n), d))
        index = {lab: i for i, lab in enumerate(labels)}
        full = set(range(n))
        classes = []
        for i, lab in enumerate(labels):
            j = index[tuple(sorted(full - set(lab)))]
            if i < j:
                classes.append((i, j))
        return antipodal_quotient(parent, classes)
    return antipodal_quotient(parent)


def folded_halved_cube(length: int) -> Graph:
    parent = halved_cube(length)
    if parent.n > EXHAUSTIVE_FOLD_CAP:
        labels = [w for w in itertools.product((0, 1), repeat=length)
                  if sum(w) % 2 == 0]
        index = {lab: i for i, lab in enumerate(labels)}
        if length % 2:
            raise InputError("folded halved cube needs even length")
        classes = []
        for i, lab in enumerate(labels):
            j = index[tuple(1 - x for x in lab)]
            if i < j:
                classes.append((i, j))
        return antipodal_quotient(parent, classes)
    return antipodal_quotient(parent)


_BUILDERS = {
    "johnson": lambda spec: johnson(*spec.params),
    "hamming": lambda spec: hamming(*spec.params),
    "hypercube": lambda spec: hypercube(*spec.params),
    "halved_cube": lambda spec: halved_cube(*spec.params),
    "halvedcube": lambda spec: halved_cube(*spec.params),
    "folded_johnson": lambda spec: folded_johnson(*spec.params),
    "folded_halved_cube": lambda spec: folded_halved_cube(*spec.params),
    "grid": lambda spec: grid(*spec.params),
    "complete_multipartite": lambda spec: complete_multipartite(*spec.params),
    "cocktail_party": lambda spec: cocktail_party(*spec.params),
    "triangular": lambda spec: triangular(*spec.params),
    "latin_square": lambda spec: (
        latin_square_graph(oa=spec.data) if spec.data
        else latin_square_graph(*spec.params)),
    "steiner_block_graph": lambda spec: steiner_block_graph(spec.data),
    "cycle": lambda spec: cycle(*spec.params),
    "complete": lambda spec: complete(*spec.params),
    "icosahedron": lambda spec: icosahedron(),
    "petersen": lambda spec: petersen(),
}


def build_family(spec: FamilySpec) -> Graph:
    builder = _BUILDERS.get(spec.name)
    if builder is None:
        raise InputError(f"unknown family {spec.name!r}; known: {sorted(_BUILDERS)}")
    try:
        return builder(spec)
    except TypeError as exc:
        raise InputError(f"bad parameters for family {spec.name!r}: {exc}") from exc
