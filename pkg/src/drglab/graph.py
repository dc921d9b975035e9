"""Graph representation and the empirical machinery: BFS, distance partitions,
equitable quotients, distance-regularity testing, local and mu-graphs, and
exact small-graph spectra.

Adjacency is kept both as sorted neighbor tuples and (lazily) as per-vertex
bitset rows; dense numpy kernels back the all-pairs work.  Integer numpy
arithmetic and Python bigints keep every verdict exact; the only float
operation is a 0/1 reachability matmul whose entries stay far below 2**53.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from .arrays import IntersectionArray
from .errors import InputError, PreconditionError, ResourceError
from .polys import charpoly_dense, rational_nullity, real_roots
from .scalars import ExactScalar, Surd, exact_cmp

GRAPH_FORMAT = "drg-graph-v1"

#: default vertex cap for the exact characteristic polynomial path
SPECTRUM_EXACT_CAP = 5000
_DENSE_CAP = 6000


class Graph:
    """Immutable simple graph with sorted neighbor lists and bitset rows."""

    __slots__ = ("n", "_adj", "_rows", "_np_adj", "_dm")

    def __init__(self, adjacency: Sequence[Sequence[int]], validate: bool = True):
        self.n = len(adjacency)
        self._adj = tuple(tuple(nb) for nb in adjacency)
        if validate:
            self._validate()
        self._rows = None
        self._np_adj = None
        self._dm = None

    def _validate(self):
        seen = set()
        for v, nbs in enumerate(self._adj):
            last = -1
            for u in nbs:
                if not (0 <= u < self.n):
                    raise InputError(f"neighbor {u} of {v} out of range")
                if u == v:
                    raise InputError(f"loop at vertex {v}")
                if u <= last:
                    raise InputError(f"neighbor list of {v} not strictly ascending")
                last = u
                seen.add((v, u))
        for v, u in seen:
            if (u, v) not in seen:
                raise InputError(f"adjacency not symmetric: {v}->{u}")

    # -- accessors ---------------------------------------------------------

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    @property
    def edge_count(self) -> int:
        return sum(len(nb) for nb in self._adj) // 2

    def edges(self):
        for v in range(self.n):
            for u in self._adj[v]:
                if u > v:
                    yield (v, u)

    def bitrows(self) -> List[int]:
        if self._rows is None:
            rows = []
            for nbs in self._adj:
                r = 0
                for u in nbs:
                    r |= 1 << u
                rows.append(r)
            self._rows = rows
        return self._rows

    def adjacency_matrix(self) -> np.ndarray:
        if self._np_adj is None:
            a = np.zeros((self.n, self.n), dtype=np.int64)
            for v, nbs in enumerate(self._adj):
                a[v, list(nbs)] = 1
            self._np_adj = a
        return self._np_adj

    def is_adjacent(self, u: int, v: int) -> bool:
        return (self.bitrows()[u] >> v) & 1 == 1

    # -- distances ---------------------------------------------------------

    def distances_from(self, x: int) -> List[int]:
        """BFS distance vector; unreachable vertices get -1."""
        if not (0 <= x < self.n):
            raise InputError(f"vertex {x} out of range")
        dist = [-1] * self.n
        dist[x] = 0
        queue = deque([x])
        while queue:
            v = queue.popleft()
            dv = dist[v]
            for u in self._adj[v]:
                if dist[u] < 0:
                    dist[u] = dv + 1
                    queue.append(u)
        return dist

    def distance_matrix(self) -> np.ndarray:
        """Dense all-pairs distance matrix (-1 for unreachable)."""
        if self._dm is not None:
            return self._dm
        n = self.n
        if n > _DENSE_CAP:
            raise ResourceError(f"dense distance matrix capped at {_DENSE_CAP} vertices")
        A = self.adjacency_matrix()
        Ab = A.astype(bool)
        # 0/1 reachability products are exact in float64 for n < 2**53
        Af = A.astype(np.float64)
        dist = np.full((n, n), -1, dtype=np.int16)
        np.fill_diagonal(dist, 0)
        dist[Ab] = 1
        reach = Ab | np.eye(n, dtype=bool)
        d = 1
        while True:
            new_reach = (reach.astype(np.float64) @ Af) > 0
            new_reach |= reach
            frontier = new_reach & ~reach
            if not frontier.any():
                break
            d += 1
            dist[frontier] = d
            reach = new_reach
        self._dm = dist
        return dist

    def is_connected(self) -> bool:
        return self.n == 0 or min(self.distances_from(0)) >= 0

    def diameter(self) -> int:
        dm = self.distance_matrix()
        if (dm < 0).any():
            raise InputError("diameter undefined for a disconnected graph")
        return int(dm.max())

    # -- construction / serialization -------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        adj = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise InputError(f"loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls([sorted(s) for s in adj], validate=False)

    def to_json(self) -> dict:
        return {"format": GRAPH_FORMAT, "n": self.n,
                "adj": [list(nb) for nb in self._adj]}

    @classmethod
    def from_json(cls, obj: dict) -> "Graph":
        if not isinstance(obj, dict) or obj.get("format") != GRAPH_FORMAT:
            raise InputError(f'expected a JSON object with "format": "{GRAPH_FORMAT}"')
        n, adj = obj.get("n"), obj.get("adj")
        if not isinstance(n, int) or not isinstance(adj, list) or len(adj) != n:
            raise InputError('"n" must match the length of "adj"')
        return cls(adj)

    @classmethod
    def load(cls, path: str) -> "Graph":
        with open(path) as fh:
            return cls.from_json(json.load(fh))

    def dump(self, path: str) -> None:
        with open(path, "w") as fh:
            json.dump(self.to_json(), fh)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count})"


# -- partitions and quotients ---------------------------------------------


@dataclass(frozen=True)
class VertexPartition:
    cells: Tuple[Tuple[int, ...], ...]
    labels: Tuple[object, ...]

    def __post_init__(self):
        seen = set()
        for cell in self.cells:
            if not cell:
                raise InputError("empty cell in partition")
            for v in cell:
                if v in seen:
                    raise InputError(f"vertex {v} appears in two cells")
                seen.add(v)

    @property
    def ground_set(self) -> Tuple[int, ...]:
        return tuple(sorted(v for cell in self.cells for v in cell))


@dataclass(frozen=True)
class QuotientParameters:
    matrix: Tuple[Tuple[int, ...], ...]
    labels: Tuple[object, ...]


@dataclass(frozen=True)
class EquitabilityWitness:
    cell_index: int
    vertex_a: int
    vertex_b: int
    counts_a: Tuple[int, ...]
    counts_b: Tuple[int, ...]


def distance_partition(g: Graph, x: int, y: int) -> VertexPartition:
    """Cells D^h_j(x, y) = Gamma_j(x) n Gamma_h(y), ordered lex by (j, h)."""
    dx = g.distances_from(x)
    dy = g.distances_from(y)
    if min(dx) < 0:
        raise InputError("distance partition requires a connected graph")
    cells: Dict[Tuple[int, int], List[int]] = {}
    for v in range(g.n):
        cells.setdefault((dx[v], dy[v]), []).append(v)
    keys = sorted(cells)
    return VertexPartition(tuple(tuple(cells[k]) for k in keys), tuple(keys))


def equitable_quotient(g: Graph, p: VertexPartition
                       ) -> Union[QuotientParameters, EquitabilityWitness]:
    """Quotient parameters of p within the induced subgraph on its ground set,
    or the lexicographically smallest witness of inequitability."""
    ground = 0
    for cell in p.cells:
        for v in cell:
            ground |= 1 << v
    masks = []
    for cell in p.cells:
        m = 0
        for v in cell:
            m |= 1 << v
        masks.append(m)
    rows = g.bitrows()
    matrix = []
    for ci, cell in enumerate(p.cells):
        ordered = sorted(cell)
        ref = None
        for v in ordered:
            counts = tuple((rows[v] & mask).bit_count() for mask in masks)
            if ref is None:
                ref = counts
            elif counts != ref:
                return EquitabilityWitness(ci, ordered[0], v, ref, counts)
        matrix.append(ref)
    return QuotientParameters(tuple(matrix), p.labels)


# -- distance-regularity ----------------------------------------------------


@dataclass(frozen=True)
class DistanceRegularityWitness:
    x: int
    y: int
    distance: int
    counts: Tuple[int, int, int]
    expected: Tuple[int, int, int]
    reason: str


def check_distance_regular(g: Graph
                           ) -> Union[IntersectionArray, DistanceRegularityWitness]:
    """The intersection array, or the first (lex smallest) violating pair."""
    if not g.is_connected():
        raise InputError("distance-regularity is defined for connected graphs")
    n = g.n
    dm = g.distance_matrix()
    D = int(dm.max())
    if D == 0:
        raise InputError("single-vertex graph has no intersection array")
    A = g.adjacency_matrix()
    d0 = dm[0]
    # propose the array from vertex 0
    onehot = np.zeros((n, D + 2), dtype=np.int64)
    onehot[np.arange(n), d0] = 1
    M0 = A @ onehot
    b = []
    c = []
    a = []
    for i in range(D + 1):
        ys = np.flatnonzero(d0 == i)
        y = int(ys[0])
        ci = int(M0[y, i - 1]) if i > 0 else 0
        ai = int(M0[y, i])
        bi = int(M0[y, i + 1])
        c.append(ci)
        a.append(ai)
        b.append(bi)
    idx = np.arange(n)
    for x in range(n):
        dx = dm[x].astype(np.int64)
        oh = np.zeros((n, D + 2), dtype=np.int64)
        oh[idx, dx] = 1
        M = A @ oh
        cvals = M[idx, np.maximum(dx - 1, 0)]
        avals = M[idx, dx]
        bvals = M[idx, dx + 1]
        exp_c = np.array(c, dtype=np.int64)[dx]
        exp_a = np.array(a, dtype=np.int64)[dx]
        exp_b = np.array(b, dtype=np.int64)[dx]
        ok = (avals == exp_a) & (bvals == exp_b) & ((dx == 0) | (cvals == exp_c))
        ok[x] = True
        if not ok.all():
            y = int(np.flatnonzero(~ok)[0])
            i = int(dx[y])
            got = (int(cvals[y]) if i > 0 else 0, int(avals[y]), int(bvals[y]))
            want = (c[i], a[i], b[i])
            return DistanceRegularityWitness(x, y, i, got, want,
                                             "intersection numbers depend on the pair")
    try:
        return IntersectionArray(tuple(b[:D]), tuple(c[1:]))
    except InputError as exc:  # pragma: no cover - structurally impossible
        raise InputError(f"inconsistent counts: {exc}") from exc


# -- induced subgraphs -------------------------------------------------------


@dataclass(frozen=True)
class InducedSubgraph:
    graph: Graph
    vertex_map: Tuple[int, ...]  # position -> original vertex id


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> InducedSubgraph:
    vs = sorted(vertices)
    index = {v: i for i, v in enumerate(vs)}
    adj = [[index[u] for u in g.neighbors(v) if u in index] for v in vs]
    return InducedSubgraph(Graph(adj, validate=False), tuple(vs))


def local_graph(g: Graph, x: int) -> InducedSubgraph:
    """Subgraph induced on Gamma(x)."""
    return induced_subgraph(g, g.neighbors(x))


def mu_graph(g: Graph, x: int, y: int) -> InducedSubgraph:
    """Subgraph induced on Gamma(x) n Gamma(y); requires d(x, y) = 2."""
    if g.is_adjacent(x, y) or x == y:
        raise InputError(f"vertices {x}, {y} are not at distance 2")
    common = g.bitrows()[x] & g.bitrows()[y]
    if common == 0:
        raise InputError(f"vertices {x}, {y} are not at distance 2")
    verts = [v for v in range(g.n) if (common >> v) & 1]
    return induced_subgraph(g, verts)


# -- mu-graph regularity -----------------------------------------------------


@dataclass(frozen=True)
class C2RegularityReport:
    c2: int
    regular: bool
    kappa: Optional[int]
    terwilliger: bool
    t_max: int


def _max_coclique_rows(rows: Sequence[int], universe: int) -> int:
    best = 0

    def grow(candidates: int, size: int):
        nonlocal best
        if size + candidates.bit_count() <= best:
            return
        if candidates == 0:
            best = max(best, size)
            return
        v = (candidates & -candidates).bit_length() - 1
        # branch: exclude v, then include v
        grow(candidates & ~(1 << v), size)
        grow(candidates & ~(1 << v) & ~rows[v], size + 1)

    grow(universe, 0)
    return best


def max_coclique(g: Graph) -> int:
    """Exact maximum coclique size, branch-and-bound with a greedy bound."""
    return _max_coclique_rows(g.bitrows(), (1 << g.n) - 1)


def c2_regularity_report(g: Graph) -> C2RegularityReport:
    """mu-graph valency/completeness survey over all distance-2 pairs."""
    dm = g.distance_matrix()
    if int(dm.max()) < 2:
        raise InputError("c2-graph analysis requires diameter >= 2")
    rows = g.bitrows()
    c2 = None
    kappa: Optional[int] = None
    regular = True
    terwilliger = True
    t_max = 0
    xs, ys = np.nonzero(dm == 2)
    for x, y in zip(xs.tolist(), ys.tolist()):
        if y <= x:
            continue
        common = rows[x] & rows[y]
        size = common.bit_count()
        if c2 is None:
            c2 = size
        elif size != c2:
            raise InputError("graph is not distance-regular: |mu-graph| varies")
        verts = []
        m = common
        while m:
            v = (m & -m).bit_length() - 1
            verts.append(v)
            m &= m - 1
        degs = {(rows[v] & common).bit_count() for v in verts}
        if len(degs) > 1:
            regular = False
            terwilliger = False
        else:
            d = degs.pop()
            if kappa is None:
                kappa = d
            elif kappa != d:
                regular = False
            if d != size - 1:
                terwilliger = False
        # relabel the mu-graph onto bits 0..size-1 for the coclique search
        pos = {v: i for i, v in enumerate(verts)}
        small = [0] * size
        for i, v in enumerate(verts):
            mm = rows[v] & common
            while mm:
                u = (mm & -mm).bit_length() - 1
                small[i] |= 1 << pos[u]
                mm &= mm - 1
        t_max = max(t_max, _max_coclique_rows(small, (1 << size) - 1))
    if not regular:
        kappa = None
        terwilliger = False
    return C2RegularityReport(c2, regular, kappa, terwilliger, t_max)


# -- spectra -----------------------------------------------------------------


@dataclass(frozen=True)
class SpectrumReport:
    values: Tuple[Tuple[ExactScalar, int], ...]  # (eigenvalue, multiplicity), descending
    exact: bool
    tolerance: Optional[float] = None


def _spectrum_by_verification(g: Graph) -> Optional[List[Tuple[ExactScalar, int]]]:
    """Numeric hints + exact nullity verification.

    Floats only generate candidates; every multiplicity is certified by an
    exact rational rank computation, and the result is accepted only when the
    certified multiplicities sum to n.
    """
    n = g.n
    A = g.adjacency_matrix()
    vals = np.linalg.eigvalsh(A.astype(np.float64))
    clusters: List[float] = []
    for v in sorted(vals.tolist()):
        if not clusters or v - clusters[-1] > 1e-7:
            clusters.append(v)
    ints = [c for c in clusters if abs(c - round(c)) < 1e-6]
    others = [c for c in clusters if abs(c - round(c)) >= 1e-6]
    out: List[Tuple[ExactScalar, int]] = []
    total = 0
    Al = A.tolist()
    for c in ints:
        t = round(c)
        m = [[Al[i][j] - (t if i == j else 0) for j in range(n)] for i in range(n)]
        mult = rational_nullity(m)
        if mult == 0:
            return None
        out.append((Fraction(t), mult))
        total += mult
    # pair leftover clusters into conjugate quadratics x^2 - s x + p
    used = [False] * len(others)
    A2 = (A @ A).tolist()
    for i, ci in enumerate(others):
        if used[i]:
            continue
        hit = False
        for j in range(i + 1, len(others)):
            if used[j]:
                continue
            s, p = ci + others[j], ci * others[j]
            if abs(s - round(s)) < 1e-6 and abs(p - round(p)) < 1e-6:
                si, pi = round(s), round(p)
                disc = si * si - 4 * pi
                if disc <= 0:
                    continue
                fmat = [[A2[r][col] - si * Al[r][col] + (pi if r == col else 0)
                         for col in range(n)] for r in range(n)]
                nullity = rational_nullity(fmat)
                if nullity == 0 or nullity % 2:
                    continue
                mult = nullity // 2
                out.append((Surd(si, 1, disc, 2), mult))
                out.append((Surd(si, -1, disc, 2), mult))
                total += nullity
                used[i] = used[j] = True
                hit = True
                break
        if not hit:
            return None
    if total != n:
        return None
    import functools
    out.sort(key=functools.cmp_to_key(lambda a, b: exact_cmp(a[0], b[0])), reverse=True)
    return out


def graph_spectrum(g: Graph, precision: int = 9, cap: int = SPECTRUM_EXACT_CAP,
                   numeric_fallback: bool = False) -> SpectrumReport:
    """Exact adjacency spectrum with multiplicities (descending)."""
    if g.n > cap:
        if not numeric_fallback:
            raise ResourceError(
                f"exact spectrum capped at {cap} vertices; enable numeric_fallback")
        vals = np.linalg.eigvalsh(g.adjacency_matrix().astype(np.float64))
        tol = 1e-8 * max(1.0, float(np.abs(vals).max()))
        grouped: List[Tuple[float, int]] = []
        for v in vals.tolist():
            if grouped and abs(v - grouped[-1][0]) <= tol:
                grouped[-1] = (grouped[-1][0], grouped[-1][1] + 1)
            else:
                grouped.append((v, 1))
        grouped.reverse()
        return SpectrumReport(tuple((Fraction(v).limit_denominator(10 ** 12), m)
                                    for v, m in grouped), exact=False, tolerance=tol)
    verified = _spectrum_by_verification(g)
    if verified is not None:
        return SpectrumReport(tuple(verified), exact=True)
    coeffs = charpoly_dense(g.adjacency_matrix().tolist())
    roots = real_roots(coeffs, precision)
    return SpectrumReport(tuple(roots), exact=True)


# -- clique unions -----------------------------------------------------------


def clique_union_structure(g: Graph) -> Optional[Tuple[int, int]]:
    """(s, t) if the graph is the disjoint union of t+1 cliques of size s."""
    if g.n == 0:
        return None
    seen = [False] * g.n
    sizes = []
    for v in range(g.n):
        if seen[v]:
            continue
        comp = [v]
        seen[v] = True
        queue = deque([v])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        s = len(comp)
        for u in comp:
            if g.degree(u) != s - 1:
                return None
        sizes.append(s)
    if len(set(sizes)) != 1:
        return None
    return sizes[0], len(sizes) - 1
