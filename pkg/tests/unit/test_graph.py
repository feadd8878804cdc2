"""
Unit tests for the graph core.
"""
import random

import networkx as nx
import pytest
from hypothesis import given, settings

from modules.errors import (
    DuplicateEdge,
    EmptyGraph,
    InvalidVertex,
    OrderTooSmall,
    ParseError,
    SelfLoop,
)
from modules.graph import (
    Family,
    FamilyKind,
    Graph,
    complete_graph,
    cycle_graph,
    degree_profile,
    find_clique,
    generate,
    is_clique,
    parse_graph,
    path_graph,
    random_connected_graph,
    serialize_graph,
    star_graph,
)
from tests.strategies import connected_graphs


class TestGenerate:
    """Family generators."""

    def test_complete(self):
        g = generate(FamilyKind(Family.COMPLETE, 3))
        assert (g.n, g.m) == (3, 3)

    def test_cycle(self):
        g = generate(FamilyKind(Family.CYCLE, 4))
        assert (g.n, g.m) == (4, 4)
        assert g.degrees() == (2, 2, 2, 2)

    def test_single_vertex_path(self):
        g = path_graph(1)
        assert (g.n, g.m) == (1, 0)

    def test_star_center_is_zero(self):
        g = star_graph(5)
        assert g.degrees() == (4, 1, 1, 1, 1)

    @pytest.mark.parametrize("tag, order", [(Family.CYCLE, 2), (Family.PATH, 0), (Family.COMPLETE, 0), (Family.STAR, 0)])
    def test_order_too_small(self, tag, order):
        with pytest.raises(OrderTooSmall):
            generate(FamilyKind(tag, order))

    @pytest.mark.parametrize("n", range(3, 9))
    def test_edge_counts(self, n):
        assert complete_graph(n).m == n * (n - 1) // 2
        assert cycle_graph(n).m == n
        assert path_graph(n).m == n - 1
        assert star_graph(n).m == n - 1


class TestGraph:
    """Construction rules and basic queries."""

    def test_edges_are_canonical(self):
        g = Graph.from_edges(3, [(2, 1), (1, 0)])
        assert g.edges == ((0, 1), (1, 2))

    def test_self_loop_rejected(self):
        with pytest.raises(SelfLoop):
            Graph.from_edges(2, [(0, 0)])

    def test_duplicate_rejected(self):
        with pytest.raises(DuplicateEdge):
            Graph.from_edges(3, [(0, 1), (1, 0)])

    def test_endpoint_out_of_range(self):
        with pytest.raises(InvalidVertex):
            Graph.from_edges(2, [(0, 2)])

    def test_induced_subgraph_relabels(self):
        g = cycle_graph(5).induced_subgraph([1, 2, 3])
        assert g.edges == ((0, 1), (1, 2))

    def test_without(self):
        g = complete_graph(4).without([0])
        assert (g.n, g.m) == (3, 3)

    def test_connectivity(self):
        assert cycle_graph(5).is_connected()
        assert not Graph.from_edges(3, [(0, 1)]).is_connected()

    def test_trivial_graphs_are_connected(self):
        assert Graph(0).is_connected()
        assert Graph(1).is_connected()

    def test_networkx_view(self):
        view = Graph.from_edges(4, [(0, 1), (1, 2)]).nx_view
        assert sorted(view.nodes) == [0, 1, 2, 3]
        assert sorted(view.edges) == [(0, 1), (1, 2)]
        assert nx.is_frozen(view)

    def test_complement_of_cycle(self):
        assert cycle_graph(5).complement().m == 5

    def test_fingerprint_depends_on_edges(self):
        assert path_graph(4).fingerprint() != star_graph(4).fingerprint()
        assert path_graph(4).fingerprint() == path_graph(4).fingerprint()

    @given(connected_graphs())
    def test_handshake(self, g):
        assert sum(g.degrees()) == 2 * g.m

    def test_random_connected_graph(self):
        rng = random.Random(7)
        for n in range(1, 12):
            assert random_connected_graph(n, 0.3, rng).is_connected()


class TestCliques:
    """Clique queries."""

    def test_subset_of_complete(self):
        assert is_clique(complete_graph(4), [0, 1, 2])

    def test_cycle_diagonal(self):
        assert not is_clique(cycle_graph(4), [0, 1, 2])

    def test_singleton_and_empty(self):
        assert is_clique(path_graph(3), [1])
        assert is_clique(path_graph(3), [])

    def test_out_of_range(self):
        with pytest.raises(InvalidVertex):
            is_clique(path_graph(3), [0, 5])

    def test_find_clique(self):
        assert find_clique(complete_graph(5), 3) == (0, 1, 2)
        assert find_clique(cycle_graph(4), 3) is None
        assert find_clique(star_graph(4), 2) == (0, 1)


class TestDegreeProfile:
    def test_cycle(self):
        profile = degree_profile(cycle_graph(6))
        assert profile.degrees == (2,) * 6
        assert profile.max_degree == profile.min_degree == 2
        assert profile.is_regular

    def test_single_vertex(self):
        assert degree_profile(complete_graph(1)).degrees == (0,)

    def test_empty_graph(self):
        with pytest.raises(EmptyGraph):
            degree_profile(Graph(0))


class TestEdgeList:
    """Edge-list parsing and serialisation."""

    def test_parse_path(self):
        assert parse_graph("3 2\n0 1\n1 2") == path_graph(3)

    def test_parse_self_loop(self):
        with pytest.raises(SelfLoop):
            parse_graph("2 1\n0 0")

    def test_serialize_triangle(self):
        assert serialize_graph(complete_graph(3)) == "3 3\n0 1\n0 2\n1 2\n"

    def test_parse_tolerates_reversed_pairs_and_blank_tail(self):
        assert parse_graph("3 2\n1 0\n2 1\n\n\n") == path_graph(3)

    def test_parse_duplicate(self):
        with pytest.raises(DuplicateEdge):
            parse_graph("3 2\n0 1\n1 0\n")

    def test_parse_reports_line(self):
        with pytest.raises(ParseError) as info:
            parse_graph("3 2\n0 1\n1 x\n")
        assert info.value.line == 3

    def test_parse_wrong_edge_count(self):
        with pytest.raises(ParseError):
            parse_graph("3 2\n0 1\n")

    def test_parse_vertex_out_of_range(self):
        with pytest.raises(ParseError):
            parse_graph("2 1\n0 2\n")

    @settings(max_examples=50)
    @given(connected_graphs(max_order=10))
    def test_parse_serialize_identity(self, g):
        assert parse_graph(serialize_graph(g)) == g
