"""Bound polynomials: F, G, the mu-bound, claw bound, and vertex bound."""

from fractions import Fraction

import pytest

from drglab.bounds import (F_bound, G_bound, claw_f, homogeneity_bounds,
                           mu_bound, phi, srg_bounds)
from drglab.errors import DomainError


def test_F_at_one():
    assert F_bound(1) == 861


def test_G_at_one():
    assert G_bound(1) == 169


def test_G_is_square_of_quintic():
    for b in range(1, 11):
        assert G_bound(b) == (4 * b**5 + 4 * b**4 + 4 * b**3 + 1) ** 2


def test_F_dominates_G_for_positive_b():
    for b in range(1, 11):
        assert F_bound(b) > G_bound(b)
    assert F_bound(Fraction(3, 2)) > G_bound(Fraction(3, 2))


def test_homogeneity_bounds_pair():
    f, g = homogeneity_bounds(1)
    assert (f, g) == (861, 169)


def test_phi_two_evaluation_forms():
    m = 2
    direct = phi(m)
    # half-integer factored form: m(m-1)(mu+1)/2 + m - 1 evaluated inside phi
    # check against the expanded polynomial value
    expanded = sum(c * Fraction(m) ** i
                   for i, c in enumerate((
                       Fraction(1), Fraction(-1, 2), Fraction(-5, 2),
                       Fraction(-1, 2), Fraction(1), Fraction(4),
                       Fraction(-4), Fraction(-7, 2), Fraction(15, 2),
                       Fraction(-9, 2), Fraction(1))))
    assert direct == 66
    assert Fraction(direct) == expanded


def test_phi_below_tenth_power():
    for m in range(2, 11):
        assert phi(m) < m ** 10


def test_claw_and_mu_bounds():
    assert claw_f(2, 2) == 4
    assert mu_bound(2) == 8
    assert mu_bound(3) == 81


def test_srg_bounds_bundle():
    assert srg_bounds(2, 1) == (8, claw_f(2, 1), 66)
    with pytest.raises(DomainError):
        srg_bounds(1, 1)
    with pytest.raises(DomainError):
        srg_bounds(2, 0)
