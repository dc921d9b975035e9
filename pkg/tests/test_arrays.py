"""Intersection arrays: parsing, derived parameters, feasibility, spectra."""

from fractions import Fraction

import pytest

from drglab.arrays import IntersectionArray, basic_feasibility
from drglab.eigen import b_parameter, eigenvalues, intersection_matrix
from drglab.errors import InputError
from drglab.scalars import Surd, exact_eq

J105 = IntersectionArray((25, 16, 9, 4, 1), (1, 4, 9, 16, 25))
HC10 = IntersectionArray((45, 28, 15, 6, 1), (1, 6, 15, 28, 45))
H53 = IntersectionArray((10, 8, 6, 4, 2), (1, 2, 3, 4, 5))


def test_parse_roundtrip():
    ia = IntersectionArray.parse("25,16,9,4,1;1,4,9,16,25")
    assert ia == J105
    assert str(ia) == "25,16,9,4,1;1,4,9,16,25"


def test_parse_rejects_malformed():
    with pytest.raises(InputError):
        IntersectionArray.parse("1,2,3")
    with pytest.raises(InputError):
        IntersectionArray.parse("3,2;1,0")


def test_derived_parameters():
    assert J105.D == 5 and J105.k == 25
    assert J105.a == (0, 8, 12, 12, 8, 0)
    assert H53.a == (0, 1, 2, 3, 4, 5)
    assert not J105.is_bipartite and not H53.is_bipartite
    hyper = IntersectionArray((4, 3, 2, 1), (1, 2, 3, 4))
    assert hyper.is_bipartite


def test_subconstituent_sizes_sum_to_v():
    sizes = basic_feasibility(J105).k_i
    assert list(sizes) == [1, 25, 100, 100, 25, 1]
    assert sum(sizes) == 252
    assert sum(basic_feasibility(HC10).k_i) == 512
    assert sum(basic_feasibility(H53).k_i) == 243


def test_feasibility_flags_nonintegral_sizes():
    ia = IntersectionArray((5, 3), (1, 2))  # k1*b1/c2 = 15/2
    rep = basic_feasibility(ia)
    assert not rep.passed


def test_intersection_matrix_shape():
    B = intersection_matrix(H53)
    assert len(B) == 6
    assert B[0][:2] == [0, 10]
    assert B[1][:3] == [1, 1, 8]
    assert B[5][4:] == [5, 5]


def test_exact_spectra():
    assert [int(v) for v in eigenvalues(J105)] == [25, 15, 7, 1, -3, -5]
    assert [int(v) for v in eigenvalues(HC10)] == [45, 27, 13, 3, -3, -5]
    assert [int(v) for v in eigenvalues(H53)] == [10, 7, 4, 1, -2, -5]


def test_b_parameter_values():
    assert b_parameter(J105) == Fraction(1)
    assert b_parameter(HC10) == Fraction(1)
    assert b_parameter(H53) == Fraction(1)
    pentagon = IntersectionArray((2, 1), (1, 1))
    theta1 = eigenvalues(pentagon)[1]
    assert exact_eq(theta1, Surd(-1, 1, 5, 2))
    assert exact_eq(b_parameter(pentagon), 1 / (theta1 + 1))
