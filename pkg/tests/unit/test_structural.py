"""
Unit tests for exact structural invariants and the coalescence predictions.
"""
import math

import networkx as nx
import pytest
from hypothesis import given, settings

from modules.coalescence import coalesce
from modules.errors import BudgetExceeded
from modules.graph import Graph, complete_graph, cycle_graph, path_graph, star_graph
from modules.structural import (
    SearchLimits,
    check_propositions,
    chromatic_number,
    clique_number,
    edge_connectivity,
    girth,
    independence_number,
    is_eulerian,
    is_hamiltonian,
    predict,
    structure_report,
    vertex_connectivity,
)
from modules.utils import FAIL, PASS, SKIPPED
from tests.strategies import connected_graphs


class TestGirth:
    def test_vertex_coalesced_squares(self):
        g = coalesce(cycle_graph(4), [0], cycle_graph(4), [0]).result
        assert girth(g) == 4

    def test_clique_coalescence(self):
        g = coalesce(complete_graph(4), [0, 1, 2], complete_graph(5), [0, 1, 2]).result
        assert girth(g) == 3

    def test_forest(self):
        assert girth(path_graph(5)) == math.inf
        assert girth(star_graph(6)) == math.inf

    @pytest.mark.parametrize("n", range(3, 10))
    def test_cycle(self, n):
        assert girth(cycle_graph(n)) == n

    @pytest.mark.parametrize("build, expected", [(nx.petersen_graph, 5), (nx.heawood_graph, 6)])
    def test_cages(self, build, expected):
        view = build()
        assert girth(Graph.from_edges(view.number_of_nodes(), view.edges)) == expected

    @settings(max_examples=40)
    @given(connected_graphs())
    def test_shortest_cycle_in_minimum_basis(self, g):
        basis = nx.minimum_cycle_basis(g.nx_view)
        expected = min(len(cycle) for cycle in basis) if basis else math.inf
        assert girth(g) == expected


class TestExactSearch:
    def test_clique_number(self, bowtie):
        assert clique_number(complete_graph(5)) == 5
        assert clique_number(cycle_graph(5)) == 2
        assert clique_number(bowtie) == 3

    def test_independence_number(self, ladder):
        assert independence_number(cycle_graph(5)) == 2
        assert independence_number(path_graph(5)) == 3
        assert independence_number(ladder) == 3

    def test_chromatic_number(self, bowtie, ladder):
        assert chromatic_number(cycle_graph(5)) == 3
        assert chromatic_number(cycle_graph(6)) == 2
        assert chromatic_number(bowtie) == 3
        assert chromatic_number(ladder) == 2
        assert chromatic_number(complete_graph(1)) == 1

    def test_budget(self):
        with pytest.raises(BudgetExceeded) as info:
            clique_number(complete_graph(5), limit=4)
        assert info.value.invariant == "clique_number"
        assert "clique_number" in info.value.message

    def test_hamiltonian(self, bowtie, ladder):
        assert is_hamiltonian(cycle_graph(5))
        assert is_hamiltonian(ladder)
        assert not is_hamiltonian(bowtie)
        assert not is_hamiltonian(complete_graph(2))
        assert is_hamiltonian(complete_graph(6), limit=5) is None


class TestConnectivity:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_complete_graph(self, n):
        assert vertex_connectivity(complete_graph(n)) == n - 1
        assert edge_connectivity(complete_graph(n)) == n - 1

    def test_cut_vertex(self, bowtie):
        assert vertex_connectivity(bowtie) == 1
        assert edge_connectivity(bowtie) == 2

    def test_ladder(self, ladder):
        assert vertex_connectivity(ladder) == 2
        assert edge_connectivity(ladder) == 2

    def test_path_and_cycle(self):
        assert vertex_connectivity(path_graph(4)) == 1
        assert vertex_connectivity(cycle_graph(6)) == 2

    def test_disconnected(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        assert vertex_connectivity(g) == 0
        assert edge_connectivity(g) == 0


class TestEulerian:
    def test_examples(self, bowtie, ladder):
        assert is_eulerian(bowtie)
        assert is_eulerian(complete_graph(3))
        assert not is_eulerian(ladder)
        assert not is_eulerian(path_graph(3))

    def test_isolated_vertices_ignored(self):
        g = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2)])
        assert is_eulerian(g)


class TestStructureReport:
    def test_cycle(self):
        report = structure_report(cycle_graph(6))
        assert report.is_regular
        assert (report.girth, report.clique_number, report.chromatic_number) == (6, 2, 2)
        assert report.hamiltonian is True
        assert report.sanity_violations() == []

    def test_forest_json(self):
        data = structure_report(path_graph(5)).to_json()
        assert data["girth"] == "Infinite"
        assert data["hamiltonian"] is False
        assert data["independence_number"] == 3

    def test_budget_leaves_slots_unknown(self):
        report = structure_report(cycle_graph(6), SearchLimits(exact_search=4, hamiltonian=4))
        assert report.clique_number is None
        assert report.chromatic_number is None
        assert set(report.skipped) == {"clique_number", "independence_number", "chromatic_number", "hamiltonian"}
        assert report.to_json()["hamiltonian"] == "Unknown"
        assert report.vertex_connectivity == 2


class TestPredictions:
    def test_vertex_coalesced_squares(self):
        square = structure_report(cycle_graph(4))
        prediction = predict(square, square, 1)
        assert prediction.max_degree.value == 4
        assert prediction.min_degree.value == 2
        assert prediction.girth.value == 4
        assert prediction.eulerian.value is True
        assert prediction.hamiltonian.value is False
        assert prediction.independence_number.value == (2, 4)

    def test_irregular_components(self):
        prediction = predict(structure_report(path_graph(3)), structure_report(cycle_graph(4)), 1)
        assert not prediction.max_degree.applicable
        assert not prediction.eulerian.applicable

    def test_absorbed_clique(self):
        prediction = predict(structure_report(complete_graph(3)), structure_report(complete_graph(5)), 3)
        assert not prediction.vertex_connectivity.applicable
        assert prediction.min_degree.value == 4
        assert prediction.chromatic_number.value == 5

    @pytest.mark.parametrize("g1, q1, g2, q2", [
        (cycle_graph(4), [0], cycle_graph(4), [0]),
        (cycle_graph(4), [0, 1], cycle_graph(4), [0, 1]),
        (complete_graph(4), [0, 1, 2], complete_graph(5), [0, 1, 2]),
        (cycle_graph(5), [0], complete_graph(3), [1]),
        (cycle_graph(6), [2, 3], complete_graph(4), [0, 3]),
    ])
    def test_propositions_hold(self, g1, q1, g2, q2):
        rows = check_propositions(g1, q1, g2, q2)
        assert rows[-1].check == "sanity_chain"
        assert all(row.status == PASS for row in rows), [r.to_json() for r in rows if r.status != PASS]

    def test_budget_rows_are_skipped(self):
        rows = check_propositions(
            cycle_graph(4), [0], cycle_graph(4), [0], SearchLimits(exact_search=5, hamiltonian=5)
        )
        statuses = {row.check: row.status for row in rows}
        assert statuses["clique_number"] == SKIPPED
        assert statuses["hamiltonian"] == SKIPPED
        assert statuses["girth"] == PASS
        assert FAIL not in statuses.values()
