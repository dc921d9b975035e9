"""Intersection arrays of distance-regular graphs and basic sanity checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from .errors import InputError


@dataclass(frozen=True)
class IntersectionArray:
    """The array {b_0,...,b_{D-1}; c_1,...,c_D}.

    Structural validity (positive entries, c_1 = 1, D >= 1) is enforced here;
    feasibility conditions such as a_i >= 0 are the job of
    :func:`basic_feasibility`, so that infeasible arrays remain representable
    as witnesses.
    """

    b: Tuple[int, ...]
    c: Tuple[int, ...]

    def __post_init__(self):
        if len(self.b) != len(self.c) or not self.b:
            raise InputError("b and c sequences must be nonempty and of equal length")
        if any(x <= 0 for x in self.b) or any(x <= 0 for x in self.c):
            raise InputError("intersection numbers b_i, c_i must be positive")
        if self.c[0] != 1:
            raise InputError("c_1 must equal 1")
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))
        object.__setattr__(self, "c", tuple(int(x) for x in self.c))

    @property
    def D(self) -> int:
        return len(self.b)

    @property
    def k(self) -> int:
        return self.b[0]

    def b_at(self, i: int) -> int:
        """b_i with the convention b_D = 0."""
        return self.b[i] if i < self.D else 0

    def c_at(self, i: int) -> int:
        """c_i with the convention c_0 = 0."""
        return self.c[i - 1] if i >= 1 else 0

    def a_at(self, i: int) -> int:
        return self.k - self.b_at(i) - self.c_at(i) if i > 0 else 0

    @property
    def a(self) -> Tuple[int, ...]:
        """a_0..a_D."""
        return tuple(self.a_at(i) for i in range(self.D + 1))

    @property
    def is_bipartite(self) -> bool:
        return all(x == 0 for x in self.a)

    def subconstituent_sizes(self) -> List[Fraction]:
        """k_0..k_D from the recurrence k_i = k_{i-1} b_{i-1} / c_i."""
        ks = [Fraction(1)]
        for i in range(1, self.D + 1):
            ks.append(ks[-1] * self.b[i - 1] / self.c[i - 1])
        return ks

    @classmethod
    def parse(cls, text: str) -> "IntersectionArray":
        """Parse "b0,b1,...;c1,...,cD" (spaces tolerated)."""
        parts = text.split(";")
        if len(parts) != 2:
            raise InputError(f"expected one ';' in intersection array string: {text!r}")
        try:
            b = tuple(int(t) for t in parts[0].replace(" ", "").split(",") if t)
            c = tuple(int(t) for t in parts[1].replace(" ", "").split(",") if t)
        except ValueError as exc:
            raise InputError(f"non-integer entry in {text!r}") from exc
        return cls(b, c)

    def __str__(self):
        return ",".join(map(str, self.b)) + ";" + ",".join(map(str, self.c))


@dataclass(frozen=True)
class FeasibilityReport:
    passed: bool
    v: Optional[int] = None
    k_i: Tuple[int, ...] = ()
    witness: Optional[str] = None
    warnings: Tuple[str, ...] = ()


def basic_feasibility(ia: IntersectionArray) -> FeasibilityReport:
    """Standard sanity checks: a_i >= 0 and integral subconstituent sizes.

    Non-monotone c (must be nondecreasing) or b (nonincreasing) is only
    warned about, never failed.
    """
    for i in range(1, ia.D + 1):
        if ia.a_at(i) < 0:
            return FeasibilityReport(False, witness=f"a_{i} = {ia.a_at(i)} < 0")
    ks = ia.subconstituent_sizes()
    for i, kf in enumerate(ks):
        if kf.denominator != 1:
            return FeasibilityReport(False, witness=f"k_{i} = {kf} not an integer")
    warnings = []
    if any(ia.c[i] > ia.c[i + 1] for i in range(ia.D - 1)):
        warnings.append("c sequence not nondecreasing")
    if any(ia.b[i] < ia.b[i + 1] for i in range(ia.D - 1)):
        warnings.append("b sequence not nonincreasing")
    k_i = tuple(int(x) for x in ks)
    return FeasibilityReport(True, v=sum(k_i), k_i=k_i, warnings=tuple(warnings))
