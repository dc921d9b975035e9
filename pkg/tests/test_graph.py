"""Core graph machinery: distances, partitions, quotients, local structure."""

from fractions import Fraction

import pytest

from drglab.arrays import IntersectionArray
from drglab.errors import InputError
from drglab.families import (cocktail_party, complete, cycle, grid, hypercube,
                             johnson, petersen, triangular)
from drglab.graph import (EquitabilityWitness, Graph, QuotientParameters,
                          VertexPartition, c2_regularity_report,
                          check_distance_regular, clique_union_structure,
                          distance_partition, equitable_quotient,
                          graph_spectrum, local_graph, max_coclique, mu_graph)
from drglab.scalars import exact_eq


def test_graph_json_roundtrip(tmp_path):
    g = petersen()
    path = tmp_path / "g.json"
    g.dump(str(path))
    h = Graph.load(str(path))
    assert h.n == g.n and sorted(h.edges()) == sorted(g.edges())


def test_distances_and_diameter():
    g = cycle(6)
    assert g.diameter() == 3
    assert g.distances_from(0)[3] == 3
    assert petersen().diameter() == 2


def test_check_distance_regular_positive():
    assert check_distance_regular(petersen()) == IntersectionArray((3, 2), (1, 1))
    assert check_distance_regular(hypercube(4)) == IntersectionArray(
        (4, 3, 2, 1), (1, 2, 3, 4))


def test_check_distance_regular_witness():
    # path graph on 4 vertices is not distance-regular
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    res = check_distance_regular(g)
    assert not isinstance(res, IntersectionArray)
    assert res.reason


def test_distance_partition_cells():
    g = petersen()
    y = g.neighbors(0)[0]
    p = distance_partition(g, 0, y)
    # a_1 = 0 in the Petersen graph, so there is no (1, 1) cell
    assert set(p.labels) == {(0, 1), (1, 0), (1, 2), (2, 1), (2, 2)}
    assert sum(len(c) for c in p.cells) == g.n


def test_equitable_quotient_on_distance_cells():
    g = petersen()
    p = distance_partition(g, 0, g.neighbors(0)[0])
    q = equitable_quotient(g, p)
    assert isinstance(q, QuotientParameters)
    # every row sums to the valency
    for row in q.matrix:
        assert sum(row) == 3


def test_equitable_quotient_witness():
    # star K_{1,3} with the two-cell split {center+leaf, other leaves}
    g = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    p = VertexPartition(((0, 1), (2, 3)), ("a", "b"))
    w = equitable_quotient(g, p)
    assert isinstance(w, EquitabilityWitness)
    assert w.cell_index == 0


def test_partition_validation():
    with pytest.raises(InputError):
        VertexPartition(((0, 1), (1, 2)), ("a", "b"))
    with pytest.raises(InputError):
        VertexPartition(((0,), ()), ("a", "b"))


def test_local_graph_of_johnson():
    g = johnson(10, 5)
    loc = local_graph(g, 0)
    assert loc.graph.n == 25
    ia = check_distance_regular(loc.graph)
    assert isinstance(ia, IntersectionArray)
    assert (loc.graph.n, ia.k, ia.a_at(1), ia.c_at(2)) == (25, 8, 3, 2)


def test_mu_graph_requires_distance_two():
    g = petersen()
    with pytest.raises(InputError):
        mu_graph(g, 0, g.neighbors(0)[0])
    x = 0
    y = next(v for v in range(g.n)
             if v != x and not g.is_adjacent(x, v))
    assert mu_graph(g, x, y).graph.n == 1


def test_c2_regularity_report():
    # mu-graphs of J(10,5) are quadrangles: 4 vertices of valency 2
    rep = c2_regularity_report(johnson(10, 5))
    assert rep.c2 == 4 and rep.regular and rep.kappa == 2
    assert not rep.terwilliger
    rep = c2_regularity_report(hypercube(3))
    assert rep.c2 == 2 and rep.kappa == 0


def test_max_coclique():
    assert max_coclique(complete(5)) == 1
    assert max_coclique(cycle(6)) == 3
    assert max_coclique(petersen()) == 4


def test_clique_union_structure():
    # local graph of H(2,3) (the rook's graph) is two disjoint triangles
    g = grid(3, 3)
    st = clique_union_structure(local_graph(g, 0).graph)
    assert st == (2, 1)  # cliques of size s+1 = 3, t+1 = 2 of them
    assert clique_union_structure(petersen()) is None


def test_graph_spectrum_exact():
    rep = graph_spectrum(petersen())
    assert rep.exact
    vals = [(v, m) for v, m in rep.values]
    assert [(int(v), m) for v, m in vals] == [(3, 1), (1, 5), (-2, 4)]


def test_graph_spectrum_matches_array_eigenvalues():
    g = triangular(10)
    rep = graph_spectrum(g)
    assert rep.exact
    assert sum(m for _, m in rep.values) == g.n
    assert exact_eq(rep.values[0][0], Fraction(16))


def test_cocktail_party_array():
    assert check_distance_regular(cocktail_party(4)) == IntersectionArray(
        (6, 1), (1, 6))
