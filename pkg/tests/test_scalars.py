"""Exact scalar arithmetic: surds, intervals, and decidable comparisons."""

from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from drglab.scalars import (Surd, exact_cmp, exact_eq, scalar_bounds,
                            scalar_str)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)
small_ints = st.integers(min_value=-20, max_value=20)
radicands = st.sampled_from([2, 3, 5, 6, 7, 10, 13])
denominators = st.integers(min_value=1, max_value=12)


# Surds over a shared radical, so that sums and products stay in one field.
shared_surd_pairs = st.tuples(
    radicands, small_ints, small_ints, denominators,
    small_ints, small_ints, denominators,
).map(lambda t: (Surd(t[1], t[2], t[0], t[3]), Surd(t[4], t[5], t[0], t[6])))

shared_surd_triples = st.tuples(
    radicands, *(small_ints,) * 3, *(small_ints,) * 3,
).map(lambda t: tuple(Surd(t[1 + 2 * i], t[2 + 2 * i], t[0], 1)
                      for i in range(3)))


def test_surd_normalizes_squarefree():
    s = Surd(0, 1, 8, 2)  # sqrt(8)/2 = sqrt(2)
    assert s.d == 2 and s.q == 1 and s.e == 1


def test_surd_rational_collapse():
    assert Surd(3, 2, 4, 1) == Fraction(7)  # 3 + 2*sqrt(4)
    assert Surd(1, 0, 5, 2) == Fraction(1, 2)


def test_golden_ratio_identity():
    # x = (-1+sqrt(5))/2 satisfies x^2 + x - 1 = 0
    x = Surd(-1, 1, 5, 2)
    assert exact_eq(x * x + x, Fraction(1))


@given(shared_surd_pairs)
def test_surd_add_commutes(pair):
    a, b = pair
    assert exact_eq(a + b, b + a)


@given(shared_surd_triples)
def test_surd_mul_distributes(triple):
    a, b, c = triple
    assert exact_eq(a * (b + c), a * b + a * c)


@given(shared_surd_pairs)
def test_surd_sub_self_is_zero(pair):
    a, _ = pair
    assert exact_eq(a - a, Fraction(0))


@given(shared_surd_pairs, rationals)
def test_rational_shift_shifts_bounds(pair, q):
    a, _ = pair
    lo, hi = scalar_bounds(a + q, 30)
    alo, ahi = scalar_bounds(a, 30)
    assert alo + q <= hi and lo <= ahi + q


@given(shared_surd_pairs)
def test_sign_agrees_with_bounds(pair):
    a, _ = pair
    if isinstance(a, Fraction):
        return
    lo, hi = scalar_bounds(a, 40)
    if a.sign() > 0:
        assert hi > 0
    elif a.sign() < 0:
        assert lo < 0
    else:
        assert exact_eq(a, Fraction(0))


@given(shared_surd_pairs)
def test_cmp_antisymmetric(pair):
    a, b = pair
    assert exact_cmp(a, b) == -exact_cmp(b, a)


def test_conjugate_product_is_rational():
    s = Surd(3, 2, 5, 4)
    prod = s * s.conjugate()
    assert isinstance(prod, Fraction)
    assert prod == Fraction(9 - 4 * 5, 16)


def test_scalar_str_forms():
    assert scalar_str(Fraction(3, 2)) == "3/2"
    assert scalar_str(7) == "7"
    assert "sqrt" in scalar_str(Surd(1, 1, 5, 2))
