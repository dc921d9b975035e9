"""Classical parameters (D, b, alpha, beta): generated arrays and spectra,
recognition from arrays, the beta lower bound, the fundamental bound and
tightness, and the classifiers for classical / tight arrays of diameter >= 5.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import List, Optional, Tuple

from .arrays import IntersectionArray, basic_feasibility
from .bounds import F_bound
from .eigen import EigenvalueList, b_parameter, eigenvalues
from .errors import InputError, PreconditionError, ScopeError
from .homogeneous import (ClassificationOutcome, Evidence,
                          recognize_named_family)
from .scalars import ExactScalar, exact_cmp, exact_eq


def gaussian_binomial(i: int, b) -> Fraction:
    """[i; 1]_b = i if b = 1, else (b^i - 1)/(b - 1)."""
    if i < 0:
        raise InputError("index must be nonnegative")
    b = Fraction(b)
    if b == 1:
        return Fraction(i)
    return (b ** i - 1) / (b - 1)


@dataclass(frozen=True)
class ClassicalParams:
    D: int
    b: int
    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        if self.D < 3:
            raise InputError("classical parameters need D >= 3")
        if self.b in (0, -1):
            raise InputError("the base b cannot be 0 or -1")
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "beta", Fraction(self.beta))

    def as_tuple(self):
        return (self.D, self.b, self.alpha, self.beta)


def classical_array(cp: ClassicalParams) -> IntersectionArray:
    """b_i = ([D]-[i])(beta - alpha [i]), c_i = [i](1 + alpha [i-1])."""
    D, b, al, be = cp.D, cp.b, cp.alpha, cp.beta
    gb = [gaussian_binomial(i, b) for i in range(D + 1)]
    bs = []
    cs = []
    for i in range(D):
        val = (gb[D] - gb[i]) * (be - al * gb[i])
        if val <= 0 or val.denominator != 1:
            raise InputError(f"b_{i} = {val} is not a positive integer")
        bs.append(int(val))
    for i in range(1, D + 1):
        val = gb[i] * (1 + al * gb[i - 1])
        if val <= 0 or val.denominator != 1:
            raise InputError(f"c_{i} = {val} is not a positive integer")
        cs.append(int(val))
    return IntersectionArray(tuple(bs), tuple(cs))


def a1_zero_criterion(cp: ClassicalParams) -> dict:
    """a_1 = 0 holds exactly when beta = 1 - alpha*b*[D-1]."""
    ia = classical_array(cp)
    threshold = 1 - cp.alpha * cp.b * gaussian_binomial(cp.D - 1, cp.b)
    crit = cp.beta == threshold
    assert (ia.a_at(1) == 0) == crit
    return {"a1": ia.a_at(1), "a1_zero": ia.a_at(1) == 0,
            "beta_threshold": threshold, "criterion": crit}


def classical_eigenvalues(cp: ClassicalParams) -> EigenvalueList:
    """theta_i = [D-i](beta - alpha [i]) - [i], sorted descending."""
    D, b, al, be = cp.D, cp.b, cp.alpha, cp.beta
    gb = [gaussian_binomial(i, b) for i in range(D + 1)]
    thetas = [gb[D - i] * (be - al * gb[i]) - gb[i] for i in range(D + 1)]
    ordered = sorted(thetas, reverse=True)
    if b > 0:
        assert thetas == ordered, "natural ordering must hold for b > 0"
    vals = tuple(int(t) if t.denominator == 1 else t for t in ordered)
    return EigenvalueList(vals)


def recognize_classical(ia: IntersectionArray) -> List[ClassicalParams]:
    """All (D, b, alpha, beta) whose generated array equals ia, found by
    enumerating the integer base b in [-k, k] \\ {0, -1} and solving
    alpha from c_2, beta from k."""
    if ia.D < 3:
        raise InputError("classical recognition needs D >= 3")
    out = []
    k = ia.k
    for b in range(-k, k + 1):
        if b in (0, -1):
            continue
        alpha = Fraction(ia.c_at(2)) / (1 + b) - 1
        gD = gaussian_binomial(ia.D, b)
        if gD == 0:
            continue
        beta = Fraction(k) / gD
        cand = ClassicalParams(ia.D, b, alpha, beta)
        try:
            if classical_array(cand) == ia:
                out.append(cand)
        except InputError:
            continue
    return out


def beta_bound_check(cp: ClassicalParams) -> dict:
    """beta >= 1 + alpha [D-1], with equality exactly when a_D = 0."""
    if cp.b <= 0:
        raise PreconditionError("beta bound requires b > 0")
    bound = 1 + cp.alpha * gaussian_binomial(cp.D - 1, cp.b)
    ia = classical_array(cp)
    aD = ia.a_at(cp.D)
    eq = cp.beta == bound
    assert eq == (aD == 0)
    return {"ok": cp.beta >= bound, "equality": eq, "a_D": aD,
            "bound": bound}


@dataclass(frozen=True)
class TightReport:
    lhs: ExactScalar
    rhs: ExactScalar
    tight: bool
    bipartite: bool
    a_D: int
    r: Optional[ExactScalar]
    s: Optional[ExactScalar]

    def __post_init__(self):
        if self.tight:
            assert not self.bipartite and exact_eq(self.lhs, self.rhs)


def fundamental_bound(ia: IntersectionArray) -> TightReport:
    """(theta_1 + k/(a_1+1))(theta_D + k/(a_1+1)) >= -k a_1 b_1/(a_1+1)^2,
    with equality on a non-bipartite graph defining tightness; the predicted
    local eigenvalues r = -1 - b_1/(theta_D+1), s = -1 - b_1/(theta_1+1)."""
    if ia.D < 3:
        raise InputError("fundamental bound needs diameter >= 3")
    ev = eigenvalues(ia)
    theta1, thetaD = ev[1], ev[ia.D]
    k, a1, b1 = ia.k, ia.a_at(1), ia.b[1]
    shift = Fraction(k, a1 + 1)
    lhs = (theta1 + shift) * (thetaD + shift)
    rhs = Fraction(-k * a1 * b1, (a1 + 1) ** 2)
    assert exact_cmp(lhs, rhs) >= 0, "fundamental bound violated"
    tight = (not ia.is_bipartite) and exact_eq(lhs, rhs)
    r = s = None
    if not exact_eq(thetaD + 1, 0):
        r = -1 - b1 / (thetaD + 1)
    if not exact_eq(theta1 + 1, 0):
        s = -1 - b1 / (theta1 + 1)
    return TightReport(lhs, rhs, tight, ia.is_bipartite, ia.a_at(ia.D), r, s)


def classify_classical(cp: ClassicalParams) -> ClassificationOutcome:
    """Branch decision for a 1-homogeneous array with classical parameters,
    diameter >= 5, a_1 > 0, and b >= 1."""
    if cp.D < 5:
        raise ScopeError(f"classifier requires D >= 5, got {cp.D}")
    if cp.b < 1:
        raise ScopeError("classifier requires b >= 1")
    ia = classical_array(cp)
    if ia.a_at(1) <= 0 and cp.alpha != 0:
        raise ScopeError("classifier requires a_1 > 0")
    evidence = []
    ab = cp.alpha * (1 + cp.b)
    evidence.append(Evidence("alpha-integrality",
                             "alpha(1+b) is a nonnegative integer",
                             (ab, ab.denominator == 1 and ab >= 0)))
    if cp.alpha == 0:
        evidence.sort(key=lambda e: e.rule)
        return ClassificationOutcome("classical", "i", "alpha = 0", ("i",),
                                     tuple(evidence))
    tags = recognize_named_family(ia)
    branch_of = {"Johnson": "ii", "halved": "iii",
                 "folded Johnson": "iv", "folded halved": "v"}
    branches = []
    for t in tags:
        for prefix in ("folded Johnson", "folded halved", "Johnson", "halved"):
            if t.startswith(prefix):
                branches.append((branch_of[prefix], t))
                break
    if tags:
        evidence.append(Evidence("family", "named-family array match",
                                 tuple(tags)))
    if branches:
        prio = {"ii": 2, "iii": 3, "iv": 4, "v": 5}
        branches.sort(key=lambda t: prio[t[0]])
        evidence.sort(key=lambda e: e.rule)
        return ClassificationOutcome(
            "classical", branches[0][0], branches[0][1],
            tuple(bid for bid, _ in branches), tuple(evidence))
    if cp.b >= 2:
        lower = Fraction((cp.b ** cp.D - 1) * (cp.b ** (cp.D - 1) - 1),
                         (cp.b + 1) * (cp.b - 1) ** 2)
        F = F_bound(cp.b)
        evidence.append(Evidence(
            "valency-growth", "k lower bound vs F(b) forces D <= 9",
            (lower, F, lower > F)))
        assert cp.D <= 9, "D <= 9 must hold in the alpha>0, b>=2 branch"
        evidence.sort(key=lambda e: e.rule)
        return ClassificationOutcome(
            "classical", "vi", "D <= 9, alpha > 0, b >= 2", ("vi",),
            tuple(evidence))
    evidence.sort(key=lambda e: e.rule)
    return ClassificationOutcome(
        "classical", "contradiction", "contradiction -- check inputs", (),
        tuple(evidence))


def classify_tight(ia: IntersectionArray) -> ClassificationOutcome:
    """Branch decision for a tight array of diameter >= 5: Johnson J(2D,D),
    halved 2D-cube, or locally connected with k <= F(b)."""
    if ia.D < 5:
        raise ScopeError(f"classifier requires D >= 5, got {ia.D}")
    rep = fundamental_bound(ia)
    if not rep.tight:
        raise PreconditionError("array is not tight")
    evidence = [
        Evidence("a_D", "tight implies a_D = 0", (rep.a_D, rep.a_D == 0)),
        Evidence("bound", "fundamental bound equality", (rep.lhs, rep.rhs)),
        Evidence("local-eigs", "predicted local eigenvalues (r, s)",
                 (rep.r, rep.s)),
    ]
    assert rep.a_D == 0
    tags = recognize_named_family(ia)
    if tags:
        evidence.append(Evidence("family", "named-family array match",
                                 tuple(tags)))
    evidence.sort(key=lambda e: e.rule)
    for t in tags:
        if t == f"Johnson J({2 * ia.D},{ia.D})":
            return ClassificationOutcome("tight", "i", t, ("i",),
                                         tuple(evidence))
    for t in tags:
        if t == f"halved {2 * ia.D}-cube":
            return ClassificationOutcome("tight", "ii", t, ("ii",),
                                         tuple(evidence))
    b = b_parameter(ia)
    F = F_bound(b)
    assert exact_cmp(ia.k, F) <= 0, "k <= F(b) must hold in the fallback branch"
    return ClassificationOutcome(
        "tight", "iii", "locally connected with k <= F(b)", ("iii",),
        tuple(evidence) + (Evidence("F-bound", "k <= F(b)", (ia.k, F)),))
