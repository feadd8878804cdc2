"""
Unit tests for topological indices, the composition rules and the family closed-form audit.
"""
from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from modules.coalescence import CoalescenceFamily, coalesce
from modules.errors import Disconnected, ParamOutOfRange, ZeroDegreeMergeVertex
from modules.graph import Graph, complete_graph, cycle_graph, path_graph, star_graph
from modules.indices import (
    closed_form_audit,
    composition_audit,
    distance_table,
    family_closed_form,
    family_graph,
    family_grid,
    hyper_wiener,
    index_report,
    narumi_katayama,
    vertex_composition,
    wiener,
)
from modules.utils import FAIL, PASS
from tests.strategies import connected_graphs


class TestIndices:
    def test_cycle_wiener(self):
        assert wiener(cycle_graph(6)) == 27

    def test_path_wiener(self):
        assert wiener(path_graph(4)) == 10

    @pytest.mark.parametrize("n", range(2, 8))
    def test_complete_graph(self, n):
        g = complete_graph(n)
        assert wiener(g) == n * (n - 1) // 2
        assert hyper_wiener(g) == Fraction(n * (n - 1), 2)

    def test_molecule(self, molecule):
        report = index_report(molecule)
        assert (report.W, report.WW, report.F, report.M1, report.NK) == (343, 1032, 150, 66, 36864)

    def test_lollipop(self, lollipop_4_4):
        report = index_report(lollipop_4_4)
        assert report.to_json() == {"W": 48, "WW": "94", "F": 68, "M1": 30, "NK": 96}

    def test_paw(self):
        paw = coalesce(complete_graph(3), [0], path_graph(2), [0]).result
        assert hyper_wiener(paw) == 10

    def test_isolated_vertex_zeroes_nk(self):
        assert narumi_katayama(complete_graph(1)) == 0

    def test_disconnected(self):
        with pytest.raises(Disconnected) as info:
            distance_table(Graph.from_edges(3, [(0, 1)]))
        assert info.value.pair == (0, 2)

    def test_transmissions(self):
        table = distance_table(path_graph(3))
        assert table.transmission == (3, 2, 3)
        assert table.squared_transmission == (5, 2, 5)

    @settings(max_examples=40)
    @given(connected_graphs())
    def test_wiener_agrees_with_networkx(self, g):
        assert wiener(g) == nx.wiener_index(g.nx_view)


class TestComposition:
    def test_bowtie(self, bowtie):
        predicted = vertex_composition(complete_graph(3), 2, complete_graph(3), 0)
        assert predicted == index_report(bowtie)
        assert predicted.W == 14
        assert predicted.NK == 64

    def test_star_and_path(self):
        predicted = vertex_composition(star_graph(4), 0, path_graph(3), 0)
        actual = index_report(coalesce(star_graph(4), [0], path_graph(3), [0]).result)
        assert predicted == actual

    def test_zero_degree_merge_vertex(self):
        with pytest.raises(ZeroDegreeMergeVertex):
            vertex_composition(complete_graph(1), 0, complete_graph(3), 0)

    @settings(max_examples=40)
    @given(connected_graphs(min_order=2), connected_graphs(min_order=2), st.data())
    def test_rules_match_merged_graph(self, g1, g2, data):
        v1 = data.draw(st.integers(0, g1.n - 1))
        v2 = data.draw(st.integers(0, g2.n - 1))
        rows = composition_audit([(g1, v1, g2, v2)])
        assert [row.check for row in rows] == ["composition.W", "composition.WW", "composition.F",
                                               "composition.M1", "composition.NK"]
        assert all(row.status == PASS for row in rows)


class TestFamilyClosedForms:
    def test_lollipop_forms_hold(self):
        rows = closed_form_audit(CoalescenceFamily.LOLLIPOP, [(4, 4), (5, 3), (3, 2)])
        assert len(rows) == 15
        assert all(row.status == PASS for row in rows)

    def test_even_dumbbell_wiener(self):
        value = family_closed_form(CoalescenceFamily.DUMBBELL, (6, 4), "W")
        assert value.value == 343
        assert value.branch == "even"
        assert value.summands == (54, 10, 279)
        (row,) = closed_form_audit(CoalescenceFamily.DUMBBELL, [(6, 4)], ["W"])
        assert row.status == PASS
        assert row.measured == 343

    def test_odd_dumbbell_wiener_cross_term(self):
        (row,) = closed_form_audit(CoalescenceFamily.DUMBBELL, [(5, 3)], ["W"])
        assert row.status == FAIL
        assert (row.predicted, row.measured) == (198, 162)
        assert row.detail["summand"] == 3
        assert row.detail["label"] == "cross"
        assert row.detail["branch"] == "odd"
        assert row.check == "dumbbell.W"

    def test_kite_hyper_wiener_clique_term(self):
        (row,) = closed_form_audit(CoalescenceFamily.KITE, [(4, 3)], ["WW"])
        assert row.status == FAIL
        assert row.detail["summand"] == 1
        assert row.detail["label"] == "complete"
        assert "printed 9/2, brute force 6" in row.note

    def test_dandelion_wiener(self):
        value = family_closed_form(CoalescenceFamily.DANDELION, (2, 3), "W")
        assert value.value == wiener(star_graph(4))

    def test_family_graph_orders(self):
        assert family_graph(CoalescenceFamily.DUMBBELL, (6, 4)).n == 14
        assert family_graph(CoalescenceFamily.KITE, (5, 3)).n == 7

    def test_unknown_index(self):
        with pytest.raises(ParamOutOfRange):
            family_closed_form(CoalescenceFamily.LOLLIPOP, (4, 4), "ABC")

    def test_below_minimum(self):
        with pytest.raises(ParamOutOfRange):
            family_closed_form(CoalescenceFamily.LOLLIPOP, (2, 3), "W")

    def test_grid(self):
        assert family_grid(CoalescenceFamily.KITE, {"n": [3, 4], "m": [2]}) == [(3, 2), (4, 2)]
        with pytest.raises(ParamOutOfRange):
            family_grid(CoalescenceFamily.KITE, {"n": [3]})
