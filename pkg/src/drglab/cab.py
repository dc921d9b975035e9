"""Local three-cell (C, A, B) partitions: empirical equitability checks on
graphs, the closed-form parameter recursion driven by the local eigenvalues,
quotient matrices, and the level-2 predictions for the two local shapes.

For vertices x, y at distance i, the local graph at y splits into
C = neighbours of y at distance i-1 from x, A = those at distance i,
B = those at distance i+1.  The level-i parameters are

    gamma_i : neighbours inside C of a C-vertex,
    alpha_i : neighbours inside C of an A-vertex,
    beta_i  : neighbours inside B of an A-vertex,
    delta_i : neighbours inside A of a B-vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import DomainError, InputError, PreconditionError, SingularityError
from .graph import Graph
from .polys import real_roots
from .scalars import ExactScalar, exact_eq


def _as_exact(x):
    if isinstance(x, Rational):
        f = Fraction(x)
        return int(f) if f.denominator == 1 else f
    return x


def _div(a, b):
    """Exact division: rational operands stay rational (never float)."""
    if isinstance(a, Rational) and isinstance(b, Rational):
        return _as_exact(Fraction(a) / Fraction(b))
    return _as_exact(a / b)


@dataclass(frozen=True)
class CabLevelParams:
    level: int
    gamma: ExactScalar
    alpha: Optional[ExactScalar]
    beta: Optional[ExactScalar]
    delta: Optional[ExactScalar]

    def as_tuple(self):
        return (self.gamma, self.alpha, self.beta, self.delta)


@dataclass(frozen=True)
class CabDeviation:
    """Lex-first pair and vertex whose cell counts break the pattern."""

    level: int
    x: int
    y: int
    vertex: int
    counts: Tuple[int, int, int]
    expected: Tuple[int, int, int]
    reason: str


@dataclass(frozen=True)
class CabReport:
    holds: bool
    levels: Tuple[CabLevelParams, ...] = ()
    deviation: Optional[CabDeviation] = None
    pairs_checked: int = 0


@dataclass(frozen=True)
class LocalSrgData:
    """Host valency, local valency a_1, and local SRG data (lam', mu', r, s)."""

    k: ExactScalar
    a1: int
    lam: ExactScalar
    mu: ExactScalar
    r: ExactScalar
    s: ExactScalar

    @classmethod
    def from_eigenvalues(cls, a1: int, r, s) -> "LocalSrgData":
        """mu' = a1 + rs, lam' = mu' + r + s, k = (a1 - r)(a1 - s)/mu'."""
        if isinstance(r, Rational):
            r = _as_exact(Fraction(r))
        if isinstance(s, Rational):
            s = _as_exact(Fraction(s))
        mu = _as_exact(a1 + r * s)
        if exact_eq(mu, 0):
            raise SingularityError("mu' = a1 + rs vanishes; local graph is not coedge-regular")
        lam = _as_exact(mu + r + s)
        k = _div((a1 - r) * (a1 - s), mu)
        return cls(k, a1, lam, mu, r, s)

    @classmethod
    def from_params(cls, k: int, a1: int, lam: int, mu: int) -> "LocalSrgData":
        """Recover r > s from x^2 - (lam - mu)x - (a1 - mu)."""
        roots = real_roots((-(a1 - mu), -(lam - mu), 1))
        if len(roots) != 2:
            raise InputError("local parameters do not give two distinct eigenvalues")
        (r, _), (s, _) = roots
        return cls(k, a1, _as_exact(Fraction(lam)), _as_exact(Fraction(mu)), r, s)


# -- empirical check --------------------------------------------------------


def _distance_masks(g: Graph, x: int, cache: Dict[int, List[int]]) -> List[int]:
    if x not in cache:
        dist = g.distances_from(x)
        masks = [0] * (max(dist) + 2)
        for v, d in enumerate(dist):
            masks[d] |= 1 << v
        cache[x] = masks
    return cache[x]


def cab_partition_check(g: Graph, i_max: Optional[int] = None,
                        max_pairs: Optional[int] = None) -> CabReport:
    """Check the three-cell local partitions are equitable with
    pair-independent parameters at every level 1..i_max.

    ``i_max`` defaults to the diameter.  At the top level the B cell is empty
    and only (gamma, alpha) are constrained.  ``max_pairs`` caps the ordered
    pairs examined per level (lex order); None means exhaustive.
    """
    rows = g.bitrows()
    deg0 = g.degree(0)
    if any(g.degree(v) != deg0 for v in range(g.n)):
        raise PreconditionError("graph is not regular")
    a1 = (rows[0] & rows[g.neighbors(0)[0]]).bit_count()
    if a1 == 0:
        raise PreconditionError("a_1 = 0: local graphs are edgeless, partition degenerates")
    D = g.diameter()
    levels = list(range(1, (i_max if i_max is not None else D) + 1))
    cache: Dict[int, List[int]] = {}
    out_levels = []
    pairs_total = 0
    for i in levels:
        if not 1 <= i <= D:
            raise InputError(f"level {i} outside 1..{D}")
        params = None
        count = 0
        for x in range(g.n):
            masks = _distance_masks(g, x, cache)
            sphere = masks[i]
            y = -1
            while True:
                nxt = sphere >> (y + 1)
                if nxt == 0:
                    break
                y += 1 + (nxt & -nxt).bit_length() - 1
                count += 1
                pairs_total += 1
                ny = rows[y]
                cmask = ny & masks[i - 1]
                amask = ny & masks[i]
                bmask = ny & (masks[i + 1] if i + 1 < len(masks) else 0)
                if params is None:
                    params = {}
                for name, mask in (("C", cmask), ("A", amask), ("B", bmask)):
                    m = mask
                    while m:
                        v = (m & -m).bit_length() - 1
                        m &= m - 1
                        nv = rows[v]
                        counts = (
                            (nv & cmask).bit_count(),
                            (nv & amask).bit_count(),
                            (nv & bmask).bit_count(),
                        )
                        prev = params.setdefault(name, counts)
                        if prev != counts:
                            return CabReport(
                                False, tuple(out_levels),
                                CabDeviation(i, x, y, v, counts, prev,
                                             f"counts differ within cell {name}"),
                                pairs_total)
                if max_pairs is not None and count >= max_pairs:
                    break
            if max_pairs is not None and count >= max_pairs:
                break
        params = params or {}
        gamma = params["C"][0] if "C" in params else 0
        alpha = params["A"][0] if "A" in params else None
        beta = params["A"][2] if "A" in params else None
        delta = params["B"][1] if "B" in params else None
        out_levels.append(CabLevelParams(i, gamma, alpha, beta, delta))
    return CabReport(True, tuple(out_levels), None, pairs_total)


# -- closed-form recursion --------------------------------------------------


def cab_formula_params(local: LocalSrgData, c: Sequence[int],
                       levels: Optional[int] = None
                       ) -> Tuple[List[CabLevelParams], List[ExactScalar]]:
    """Predicted parameters at levels 1..levels from the local eigenvalues
    and the c-sequence (c_1..c_D), via the recursion

        gamma_i = delta_{i-1},   delta_0 = 0,
        b_i = k - c_i - c_i (a1-d)^2 / ((a1-d)(a1-r-s+d) - mu'(k-c_i)),
        alpha_i = c_i (a1-d) / (k - c_i - b_i),
        beta_i = mu' b_i / (a1-d),
        delta_i = mu' (k-c_i)/(a1-d) - beta_i,       with d = delta_{i-1}.

    Raises SingularityError naming the level when a denominator vanishes.
    """
    k, a1, mu, r, s = local.k, local.a1, local.mu, local.r, local.s
    if levels is None:
        levels = len(c)
    if levels > len(c):
        raise InputError("more levels requested than c-values supplied")
    trace = _as_exact(a1 - r - s)
    delta_prev: ExactScalar = 0
    out = []
    b_pred: List[ExactScalar] = []
    for i in range(1, levels + 1):
        ci = c[i - 1]
        d = delta_prev
        ad = _as_exact(a1 - d)
        if exact_eq(ad, 0):
            raise SingularityError(f"level {i}: a_1 - delta_{i-1} vanishes")
        den = _as_exact(ad * (trace + d) - mu * (k - ci))
        if exact_eq(den, 0):
            raise SingularityError(f"level {i}: quadratic denominator vanishes")
        bi = _as_exact(k - ci - _div(ci * ad * ad, den))
        kb = _as_exact(k - ci - bi)
        if exact_eq(kb, 0):
            raise SingularityError(f"level {i}: a-cell size k - c_i - b_i vanishes")
        alpha = _div(ci * ad, kb)
        beta = _div(mu * bi, ad)
        delta = _as_exact(_div(mu * (k - ci), ad) - beta)
        # row sums of the quotient matrix force this trace identity
        assert exact_eq(_as_exact(alpha + beta + delta - d), trace), \
            f"trace identity fails at level {i}"
        out.append(CabLevelParams(i, d, alpha, beta, delta))
        b_pred.append(bi)
        delta_prev = delta
    return out, b_pred


def quotient_matrix(a1: int, p: CabLevelParams) -> Tuple[Tuple[ExactScalar, ...], ...]:
    """3x3 quotient matrix of the level's partition; rows C, A, B."""
    if p.alpha is None or p.beta is None or p.delta is None:
        raise DomainError(f"level {p.level} has an empty cell; no 3x3 quotient")
    g_, al, be, de = p.gamma, p.alpha, p.beta, p.delta
    return (
        (_as_exact(g_), _as_exact(a1 - g_), 0),
        (_as_exact(al), _as_exact(a1 - al - be), _as_exact(be)),
        (0, _as_exact(de), _as_exact(a1 - de)),
    )


def quotient_spectrum(Q: Sequence[Sequence[ExactScalar]]) -> List[ExactScalar]:
    """Exact eigenvalues of a 3x3 rational matrix, descending."""
    m = [[Fraction(x) for x in row] for row in Q]
    tr = m[0][0] + m[1][1] + m[2][2]
    c2 = (m[0][0] * m[1][1] - m[0][1] * m[1][0]
          + m[0][0] * m[2][2] - m[0][2] * m[2][0]
          + m[1][1] * m[2][2] - m[1][2] * m[2][1])
    det = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
           - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
           + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
    roots = real_roots((-det, c2, -tr, 1))
    out = []
    for val, mult in roots:
        out.extend([val] * mult)
    return out


# -- level-2 shapes ---------------------------------------------------------


@dataclass(frozen=True)
class Cab2Prediction:
    alpha2: ExactScalar
    beta2: ExactScalar
    delta2: ExactScalar
    a2: ExactScalar
    b2: ExactScalar
    c2: ExactScalar


def predict_cab2(kind: str, m: int, n: int) -> Cab2Prediction:
    """Level-2 parameters when the local graph has Latin-square shape LS_m(n)
    or Steiner shape S_m(n)."""
    if n <= m:
        raise DomainError(f"need n > m, got m={m}, n={n}")
    if kind == "latin_square":
        return Cab2Prediction(
            m, (m - 1) * (n - m * m + m), m * m * (m - 1),
            m * m * (n - m), (n - m) * (n - m * m + m), m * m)
    if kind == "steiner":
        b2 = Fraction((m - 1) * (n - m) * (n - m * m + 1), m)
        return Cab2Prediction(
            m + 1, (m - 1) * (n - m * m + 1), m ** 3,
            m * m * (n - m), _as_exact(b2), m * (m + 1))
    raise InputError(f"unknown level-2 shape {kind!r}")


def cab2_closed_form(local: LocalSrgData, c2) -> Tuple[ExactScalar, ...]:
    """(gamma2, alpha2, beta2, delta2, b2) straight from the recursion with
    c = (1, c2)."""
    levels, b_pred = cab_formula_params(local, (1, c2))
    p = levels[1]
    return (p.gamma, p.alpha, p.beta, p.delta, b_pred[1])


def c2_bound(b: ExactScalar, mu: ExactScalar) -> ExactScalar:
    """c_2 <= (4b^2 + 1)(mu' + 1)."""
    return _as_exact((4 * b * b + 1) * (mu + 1))


def triple_intersection_number(g: Graph) -> Optional[int]:
    """The number of common neighbours of (x, y, z) where x ~ y and z is at
    distance 2 from both, if that count is constant over all such triples;
    None when it varies.  Requires at least one such triple."""
    rows = g.bitrows()
    dist2 = []
    for v in range(g.n):
        d = g.distances_from(v)
        m = 0
        for u, du in enumerate(d):
            if du == 2:
                m |= 1 << u
        dist2.append(m)
    gamma = None
    seen = False
    for x in range(g.n):
        for y in g.neighbors(x):
            if y < x:
                continue
            zs = dist2[x] & dist2[y]
            common_xy = rows[x] & rows[y]
            m = zs
            while m:
                z = (m & -m).bit_length() - 1
                m &= m - 1
                seen = True
                val = (common_xy & rows[z]).bit_count()
                if gamma is None:
                    gamma = val
                elif gamma != val:
                    return None
    if not seen:
        raise InputError("no triple (x~y, z at distance 2 from both) exists")
    return gamma
