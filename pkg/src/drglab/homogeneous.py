"""Joint distance partitions pi(x, y), near-polygon analysis, named-family
recognition from intersection arrays, and the diameter-5 classifier for
graphs whose pi(x, y) partitions are equitable with pair-independent
parameters ("1-homogeneous" graphs).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from .arrays import IntersectionArray
from .bounds import F_bound, G_bound
from .cab import cab_partition_check
from .eigen import b_parameter, eigenvalues
from .errors import (InputError, PreconditionError, ResourceError,
                     ScopeError)
from .graph import (Graph, check_distance_regular, graph_spectrum, local_graph)
from .scalars import exact_cmp, scalar_str


@dataclass(frozen=True)
class HomogeneityReport:
    level: int
    holds: bool
    labels: Tuple[Tuple[int, int], ...] = ()
    matrix: Tuple[Tuple[int, ...], ...] = ()
    witness: Optional[tuple] = None  # (x, y, cell-label, vertex_a, vertex_b) or reason
    mode: str = "exhaustive"
    pairs_checked: int = 0

    def __post_init__(self):
        assert (self.witness is not None) == (not self.holds)


def _pair_table(Af, dm, x, y, span):
    """Cell labels and per-vertex neighbour counts into each cell of pi(x,y)."""
    dx = dm[x]
    dy = dm[y]
    keys = dx * span + dy
    labels, cells = np.unique(keys, return_inverse=True)
    onehot = np.zeros((len(keys), len(labels)))
    onehot[np.arange(len(keys)), cells] = 1.0
    counts = (Af @ onehot).astype(np.int64)
    return labels, cells, counts


# above this many vertices the dense distance matrix is unaffordable and
# sampled checks run pair-by-pair from per-vertex breadth-first searches
SPARSE_HOMOGENEITY_THRESHOLD = 20_000


def _check_pair_sparse(g: Graph, src, dst, x: int, y: int):
    """Cell labels and the per-cell count rows for pi(x, y), or an
    inequitability witness, computed without any n-by-n matrices."""
    dx = np.asarray(g.distances_from(x), dtype=np.int64)
    dy = np.asarray(g.distances_from(y), dtype=np.int64)
    span = int(max(dx.max(), dy.max())) + 1
    keys = dx * span + dy
    labels, cells = np.unique(keys, return_inverse=True)
    ncells = len(labels)
    flat = src.astype(np.int64) * ncells + cells[dst]
    counts = np.bincount(flat, minlength=g.n * ncells).reshape(g.n, ncells)
    rows = []
    for ci in range(ncells):
        members = np.flatnonzero(cells == ci)
        block = counts[members]
        same = (block == block[0]).all(axis=1)
        if not same.all():
            bad = int(members[np.flatnonzero(~same)[0]])
            lab = (int(labels[ci]) // span, int(labels[ci]) % span)
            return None, (x, y, lab, int(members[0]), bad)
        rows.append(tuple(int(v) for v in block[0]))
    lab_tuples = tuple((int(l) // span, int(l) % span) for l in labels)
    return (lab_tuples, tuple(rows)), None


def _check_i_homogeneous_sparse(g: Graph, i: int, seed: int, count: int
                                ) -> HomogeneityReport:
    rng = random.Random(seed)
    src = np.fromiter((u for u in range(g.n) for _ in g.neighbors(u)),
                      dtype=np.int64)
    dst = np.fromiter((v for u in range(g.n) for v in g.neighbors(u)),
                      dtype=np.int64)
    ref = None
    checked = 0
    attempts = 0
    while checked < count:
        attempts += 1
        if attempts > 50 * count:
            raise InputError(f"could not sample pairs at distance {i}")
        x = rng.randrange(g.n)
        dx = g.distances_from(x)
        at_i = [v for v, d in enumerate(dx) if d == i]
        if not at_i:
            continue
        y = rng.choice(at_i)
        table, witness = _check_pair_sparse(g, src, dst, x, y)
        if witness is not None:
            return HomogeneityReport(i, False, witness=witness,
                                     mode="sampled", pairs_checked=0)
        if ref is None:
            ref = table
        elif table != ref:
            return HomogeneityReport(i, False, witness=(x, y, None, None, None),
                                     mode="sampled", pairs_checked=0)
        checked += 1
    return HomogeneityReport(i, True, ref[0], ref[1], None, "sampled", checked)


def check_i_homogeneous(g: Graph, i: int, mode: str = "exhaustive",
                        seed: Optional[int] = None,
                        count: Optional[int] = None) -> HomogeneityReport:
    """Verify the joint distance partition pi(x, y) is equitable with the
    same parameters for every ordered pair at distance i.

    Sampled mode draws ``count`` pairs with the given seed; it can refute but
    only exhaustive mode confirms over all pairs.
    """
    if mode not in ("exhaustive", "sampled"):
        raise InputError(f"unknown mode {mode!r}")
    if mode == "sampled" and (seed is None or count is None):
        raise InputError("sampled mode requires both seed and count")
    if not g.is_connected():
        raise InputError("homogeneity is defined for connected graphs")
    if g.n > SPARSE_HOMOGENEITY_THRESHOLD:
        if mode != "sampled":
            raise ResourceError(
                f"exhaustive check on {g.n} vertices is unaffordable; "
                "use sampled mode")
        return _check_i_homogeneous_sparse(g, i, seed, count)
    dm = g.distance_matrix().astype(np.int64)
    span = int(dm.max()) + 1
    pairs = np.argwhere(dm == i)
    if len(pairs) == 0:
        raise InputError(f"no pair of vertices at distance {i}")
    if mode == "sampled":
        rng = random.Random(seed)
        idx = rng.sample(range(len(pairs)), min(count, len(pairs)))
        pairs = pairs[sorted(idx)]
    Af = g.adjacency_matrix().astype(np.float64)
    ref_labels = None
    ref_matrix = None
    for x, y in pairs:
        x, y = int(x), int(y)
        labels, cells, counts = _pair_table(Af, dm, x, y, span)
        rows = []
        for ci in range(len(labels)):
            members = np.flatnonzero(cells == ci)
            block = counts[members]
            same = (block == block[0]).all(axis=1)
            if not same.all():
                bad = int(members[np.flatnonzero(~same)[0]])
                lab = (int(labels[ci]) // span, int(labels[ci]) % span)
                return HomogeneityReport(
                    i, False, witness=(x, y, lab, int(members[0]), bad),
                    mode=mode, pairs_checked=0)
            rows.append(tuple(int(v) for v in block[0]))
        lab_tuples = tuple((int(l) // span, int(l) % span) for l in labels)
        if ref_labels is None:
            ref_labels, ref_matrix = lab_tuples, tuple(rows)
        elif (lab_tuples, tuple(rows)) != (ref_labels, ref_matrix):
            return HomogeneityReport(
                i, False, witness=(x, y, None, None, None), mode=mode,
                pairs_checked=0)
    return HomogeneityReport(i, True, ref_labels, ref_matrix, None, mode,
                             len(pairs))


def cab_equivalence_check(g: Graph) -> bool:
    """Confirm the 1-homogeneity verdict agrees with the full local
    three-cell partition verdict, and return it."""
    homog = check_i_homogeneous(g, 1, "exhaustive")
    cab = cab_partition_check(g)
    assert homog.holds == cab.holds, \
        "1-homogeneity and CAB verdicts disagree"
    return homog.holds


# -- near polygons ----------------------------------------------------------


def near_polygon_analysis(ia: IntersectionArray,
                          local_structure: Optional[Tuple[int, int]] = None) -> dict:
    """Test a_i = c_i * a1 for i < D, decide 2D- vs (2D+1)-gon by the i = D
    case, derive the order (s, t), and name the refinement when it applies."""
    a1 = ia.a_at(1)
    D = ia.D
    near = all(ia.a_at(i) == ia.c_at(i) * a1 for i in range(1, D))
    out = {"near_polygon": near}
    if not near:
        return out
    gon = 2 * D if ia.a_at(D) == ia.c_at(D) * a1 else 2 * D + 1
    out["gon"] = gon
    s = a1 + 1
    order = (s, ia.k // s - 1) if ia.k % s == 0 else None
    if local_structure is not None and order != local_structure:
        order = None
    out["order"] = order
    refinement = None
    if gon == 2 * D:
        if ia.c_at(2) >= 3:
            refinement = "dual polar"
        elif ia.c_at(2) == 2 and ia.c_at(3) == 3:
            refinement = "Hamming"
    out["refinement"] = refinement
    return out


# -- named families from arrays ---------------------------------------------


def _johnson_array(n: int, d: int) -> Optional[IntersectionArray]:
    D = min(d, n - d)
    if D < 1:
        return None
    return IntersectionArray(
        tuple((d - i) * (n - d - i) for i in range(D)),
        tuple((i + 1) ** 2 for i in range(D)))


def _hamming_array(D: int, q: int) -> IntersectionArray:
    return IntersectionArray(
        tuple((D - i) * (q - 1) for i in range(D)),
        tuple(range(1, D + 1)))


def _halved_cube_array(length: int) -> Optional[IntersectionArray]:
    D = length // 2
    if D < 1:
        return None
    b = tuple((length - 2 * i) * (length - 2 * i - 1) // 2 for i in range(D))
    c = tuple(i * (2 * i - 1) for i in range(1, D + 1))
    if any(x <= 0 for x in b):
        return None
    return IntersectionArray(b, c)


def _folded_array(parent: IntersectionArray) -> Optional[IntersectionArray]:
    """Quotient rule for a 2-antipodal parent of even diameter 2e:
    b and c are inherited below level e, and c_e picks up b_e."""
    if parent.D % 2:
        return None
    e = parent.D // 2
    b = parent.b[:e]
    c = list(parent.c[:e])
    c[e - 1] = parent.c[e - 1] + parent.b[e]
    return IntersectionArray(tuple(b), tuple(c))


def recognize_named_family(ia: IntersectionArray) -> List[str]:
    """Tags among Johnson J(2D,D), Hamming, halved cubes, folded Johnson,
    and folded halved cubes whose generated arrays equal ia."""
    tags = []
    D, k = ia.D, ia.k
    # Johnson J(n, D): k = D(n - D)
    if k % D == 0:
        n = k // D + D
        if _johnson_array(n, D) == ia:
            tags.append(f"Johnson J({n},{D})")
    # Hamming H(D, q)
    if k % D == 0 and _hamming_array(D, k // D + 1) == ia:
        tags.append(f"Hamming H({D},{k // D + 1})")
    for length in (2 * D, 2 * D + 1):
        if _halved_cube_array(length) == ia:
            tags.append(f"halved {length}-cube")
    fj = _johnson_array(4 * D, 2 * D)
    if fj is not None and _folded_array(fj) == ia:
        tags.append(f"folded Johnson J({4 * D},{2 * D})")
    fh = _halved_cube_array(4 * D)
    if fh is not None and _folded_array(fh) == ia:
        tags.append(f"folded halved {4 * D}-cube")
    return tags


#: diameter-2/3 arrays from the classification of graphs whose c2-graphs are
#: Cocktail Party graphs: K_{t x 2} itself, the Schlafli graph, the Gosset
#: graph (the remaining branches are covered by recognize_named_family)
def small_diameter_lookup(ia: IntersectionArray) -> List[str]:
    tags = []
    if ia.D == 2 and ia.k % 2 == 0:
        t = ia.k // 2 + 1
        if ia == IntersectionArray((2 * t - 2, 1), (1, 2 * t - 2)):
            tags.append(f"Cocktail Party K_{{{t}x2}}")
    if ia == IntersectionArray((16, 5), (1, 8)):
        tags.append("Schlafli graph")
    if ia == IntersectionArray((27, 10, 1), (1, 10, 27)):
        tags.append("Gosset graph")
    return tags


# -- local spectral checks --------------------------------------------------


def local_spectral_checks(g: Graph) -> dict:
    """Locally-SRG diagnostics: smallest local eigenvalue against -1-b,
    c_2 >= mu'+1 with the complete-mu-graph equality case, and the
    conference-local and grid-local flags."""
    ia = check_distance_regular(g)
    if not isinstance(ia, IntersectionArray):
        raise InputError("graph is not distance-regular")
    if ia.D < 3:
        raise InputError("local spectral checks need diameter >= 3")
    b = b_parameter(ia)
    out: dict = {"b": b, "c2": ia.c_at(2)}
    from .srg import recognize_srg_family, srg_from_graph
    params = None
    for x in range(g.n):
        loc = local_graph(g, x).graph
        try:
            p, _ = srg_from_graph(loc)
        except InputError:
            params = None
            break
        if params is None:
            params = p
        elif params != p:
            params = None
            break
    out["locally_srg"] = params is not None
    loc0 = local_graph(g, 0).graph
    spec = graph_spectrum(loc0)
    smallest = spec.values[-1][0]
    out["min_local_eig"] = smallest
    # smallest local eigenvalue >= -1 - b
    out["min_local_eig_ok"] = exact_cmp(smallest, -1 - b) >= 0
    if params is None:
        out["reason"] = "not locally SRG"
        return out
    out["local_params"] = params.as_tuple()
    mu_p = params.mu
    out["mu_prime"] = mu_p
    out["c2_ge_mu_plus_1"] = ia.c_at(2) >= mu_p + 1
    out["terwilliger"] = ia.c_at(2) == mu_p + 1
    out["conference_local"] = params.as_tuple() == (
        4 * mu_p + 1, 2 * mu_p, mu_p - 1, mu_p)
    tags = recognize_srg_family(params)
    grid_local = any(t.startswith("LatinSquare(m=2,") for t in tags)
    out["grid_local_with_c2_4"] = grid_local and ia.c_at(2) == 4
    out["local_family_tags"] = tags
    return out


# -- the diameter >= 5 classifier -------------------------------------------


@dataclass(frozen=True)
class Evidence:
    rule: str
    claim: str
    values: tuple


@dataclass(frozen=True)
class ClassificationOutcome:
    theorem: str
    branch: str
    name: str
    branches: Tuple[str, ...]
    evidence: Tuple[Evidence, ...]

    def as_json(self) -> dict:
        def conv(v):
            if v is None or isinstance(v, (str, bool, int)):
                return v
            if isinstance(v, (tuple, list)):
                return [conv(x) for x in v]
            return scalar_str(v)

        return {
            "theorem": self.theorem,
            "branch": self.branch,
            "name": self.name,
            "branches": list(self.branches),
            "evidence": [
                {"rule": e.rule, "claim": e.claim,
                 "values": conv(list(e.values))}
                for e in self.evidence],
        }


@dataclass(frozen=True)
class ClassifierBundle:
    """Inputs for the classifier: the array, how homogeneity was established,
    and (optionally) whether the local graphs are connected."""

    ia: IntersectionArray
    homogeneity: str = "asserted"  # "verified" | "asserted"
    locally_connected: Optional[bool] = None


def classify_main(bundle: ClassifierBundle) -> ClassificationOutcome:
    """Decide which branch of the diameter >= 5 classification a verified
    (or asserted) 1-homogeneous array falls into, with reproducible evidence."""
    ia = bundle.ia
    if ia.D < 5:
        raise ScopeError(f"classifier requires diameter >= 5, got {ia.D}")
    a1 = ia.a_at(1)
    if a1 <= 0:
        raise ScopeError("classifier requires a_1 > 0")
    evidence = []
    if ia.c_at(2) == 1:
        evidence.append(Evidence("c2", "c_2 = 1 branch", (1,)))
        return ClassificationOutcome("main", "c2=1", "c_2 = 1", ("c2=1",),
                                     tuple(evidence))
    b = b_parameter(ia)
    evidence.append(Evidence("b-param", "b = b_1/(theta_1+1)", (b,)))
    assert exact_cmp(b, 1) >= 0, "b >= 1 must hold when c_2 >= 2"
    theta1 = eigenvalues(ia)[1]
    # a quadrangle forces theta_1 <= b_1 - 1, i.e. b >= 1
    evidence.append(Evidence(
        "quadrangle", "theta_1 <= b_1 - 1",
        (theta1, ia.b[1] - 1, exact_cmp(theta1, ia.b[1] - 1) <= 0)))
    branches: List[Tuple[str, str]] = []
    tags = recognize_named_family(ia)
    for t in tags:
        if t.startswith("Johnson"):
            branches.append(("ii", t))
        elif t.startswith("halved"):
            branches.append(("iii", t))
        elif t.startswith("folded Johnson"):
            branches.append(("iv", t))
        elif t.startswith("folded halved"):
            branches.append(("v", t))
    if tags:
        evidence.append(Evidence("family", "named-family array match",
                                 tuple(tags)))
    npa = near_polygon_analysis(ia)
    if npa["near_polygon"] and npa.get("gon") == 2 * ia.D:
        name = f"regular near {2 * ia.D}-gon"
        if npa.get("refinement"):
            name += f" ({npa['refinement']})"
        locally_ok = bundle.locally_connected is not True
        if locally_ok:
            branches.insert(0, ("i", name))
        evidence.append(Evidence(
            "near-polygon", "a_i = c_i a_1 for all i",
            (npa.get("order"), npa.get("refinement"))))
    F = F_bound(b)
    k_le_F = exact_cmp(ia.k, F) <= 0
    evidence.append(Evidence("F-bound", "k <= F(b)", (ia.k, F, k_le_F)))
    evidence.append(Evidence("G-bound", "G(b) < F(b)", (G_bound(b), F)))
    if k_le_F:
        branches.append(("vi", "k <= F(b)"))
    # stable order: structural branches first, bound branch last
    prio = {"i": 1, "ii": 2, "iii": 3, "iv": 4, "v": 5, "vi": 6}
    branches.sort(key=lambda t: prio[t[0]])
    evidence.sort(key=lambda e: e.rule)
    if not branches:
        return ClassificationOutcome(
            "main", "contradiction", "contradiction -- check inputs", (),
            tuple(evidence))
    # primary = most specific structural branch; (vi) only as fallback
    primary = branches[0]
    return ClassificationOutcome(
        "main", primary[0], primary[1], tuple(bid for bid, _ in branches),
        tuple(evidence))
