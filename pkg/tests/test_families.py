"""Family constructors: vertex counts, intersection arrays, design inputs."""

import pytest

from drglab.arrays import IntersectionArray
from drglab.errors import InputError
from drglab.families import (FamilySpec, antipodal_quotient, build_family,
                             complete_multipartite, cycle, folded_halved_cube,
                             folded_johnson, grid, halved_cube, hamming,
                             hypercube, johnson, latin_square_graph,
                             steiner_block_graph, triangular,
                             validate_orthogonal_array,
                             validate_steiner_blocks)
from drglab.graph import check_distance_regular


def _array(g):
    ia = check_distance_regular(g)
    assert isinstance(ia, IntersectionArray)
    return ia


def test_johnson_array():
    g = johnson(10, 5)
    assert g.n == 252
    assert _array(g) == IntersectionArray((25, 16, 9, 4, 1), (1, 4, 9, 16, 25))


def test_halved_cube_arrays():
    g = halved_cube(10)
    assert g.n == 512
    assert _array(g) == IntersectionArray((45, 28, 15, 6, 1), (1, 6, 15, 28, 45))
    g = halved_cube(11)
    assert g.n == 1024
    assert _array(g) == IntersectionArray((55, 36, 21, 10, 3), (1, 6, 15, 28, 45))


def test_hamming_array():
    g = hamming(5, 3)
    assert g.n == 243
    assert _array(g) == IntersectionArray((10, 8, 6, 4, 2), (1, 2, 3, 4, 5))


def test_small_families():
    assert _array(hypercube(4)) == IntersectionArray((4, 3, 2, 1), (1, 2, 3, 4))
    assert _array(grid(3, 3)) == IntersectionArray((4, 2), (1, 2))
    assert _array(triangular(10)) == IntersectionArray((16, 7), (1, 4))
    assert _array(complete_multipartite(3, 2)) == IntersectionArray((4, 1), (1, 4))
    assert _array(cycle(5)) == IntersectionArray((2, 1), (1, 1))


def test_folded_johnson_array():
    g = folded_johnson(12, 6)
    assert g.n == 462
    assert _array(g) == IntersectionArray((36, 25, 16), (1, 4, 18))


def test_folded_halved_cube_array():
    g = folded_halved_cube(8)
    assert g.n == 64
    ia = _array(g)
    assert ia.k == 28


def test_antipodal_quotient_fold_rule():
    # folding a 2-antipodal parent of even diameter 2e keeps b_i, c_i for
    # i < e and sets the last c to c_e + b_e
    parent = johnson(12, 6)
    pia = _array(parent)
    folded = antipodal_quotient(parent)
    fia = _array(folded)
    e = pia.D // 2
    assert fia.b == pia.b[:e]
    assert fia.c[:-1] == pia.c[:e - 1]
    assert fia.c_at(e) == pia.c_at(e) + pia.b_at(e)


def test_antipodal_quotient_of_johnson_2d_d():
    # J(10,5) is 2-antipodal: complementary 5-sets are at distance 5.
    # Odd parent diameter folds to diameter 2, the SRG on 126 vertices.
    folded = antipodal_quotient(johnson(10, 5))
    assert folded.n == 126
    assert _array(folded) == IntersectionArray((25, 16), (1, 4))


def test_antipodal_quotient_rejects_nonantipodal():
    with pytest.raises(InputError):
        antipodal_quotient(hamming(3, 3))  # distance-3 classes don't pair up


def test_orthogonal_array_validation():
    oa = [[i // 4 for i in range(16)], [i % 4 for i in range(16)]]
    m, n = validate_orthogonal_array(oa)
    assert (m, n) == (2, 4)
    with pytest.raises(InputError):
        validate_orthogonal_array([[0, 0, 1, 1], [0, 0, 1, 1]])


def test_latin_square_graph_parameters():
    g = latin_square_graph(2, 5)
    ia = _array(g)
    assert (g.n, ia.k, ia.a_at(1), ia.c_at(2)) == (25, 8, 3, 2)


def test_steiner_block_graph_fano():
    fano = [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5],
            [1, 4, 6], [2, 3, 6], [2, 4, 5]]
    m, n = validate_steiner_blocks(fano)
    assert (m, n) == (3, 7)
    g = steiner_block_graph(fano)
    assert g.n == 7 and _array(g).k == 6  # K_7: any two lines meet


def test_steiner_blocks_reject_bad_design():
    with pytest.raises(InputError):
        validate_steiner_blocks([[0, 1, 2], [0, 1, 3]])


def test_family_spec_parse_and_build():
    spec = FamilySpec.parse("johnson:10,5")
    assert spec.name == "johnson" and spec.params == (10, 5)
    assert build_family(spec).n == 252
    with pytest.raises(InputError):
        build_family(FamilySpec.parse("nosuchfamily:3"))


def test_build_family_with_design_data():
    oa = [[i // 5 for i in range(25)], [i % 5 for i in range(25)]]
    spec = FamilySpec.parse("latin_square", data=oa)
    g = build_family(spec)
    assert g.n == 25
