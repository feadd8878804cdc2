"""
Hypothesis strategies for graphs, planted cliques and exact alphas.
"""
from fractions import Fraction
from itertools import combinations

from hypothesis import strategies as st

from modules.graph import Graph


@st.composite
def connected_graphs(draw, min_order=1, max_order=8):
    """Random spanning tree (each vertex attached to an earlier one) plus random extra edges."""
    n = draw(st.integers(min_value=min_order, max_value=max_order))
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(min_value=0, max_value=v - 1))
        edges.add((u, v))
    others = [pair for pair in combinations(range(n), 2) if pair not in edges]
    if others:
        extra = draw(st.lists(st.sampled_from(others), unique=True, max_size=len(others)))
        edges.update(extra)
    return Graph.from_edges(n, edges)


@st.composite
def graphs_with_clique(draw, k, max_order=8):
    """(graph, clique) with a k-clique planted on a random ordered vertex list."""
    g = draw(connected_graphs(min_order=max(k, 1), max_order=max_order))
    clique = draw(st.permutations(range(g.n)))[:k]
    edges = set(g.edges) | {tuple(sorted(pair)) for pair in combinations(clique, 2)}
    return Graph.from_edges(g.n, edges), list(clique)


@st.composite
def rational_alphas(draw, max_denominator=6):
    """Exact alpha = p/q in [0, 1]."""
    q = draw(st.integers(min_value=1, max_value=max_denominator))
    p = draw(st.integers(min_value=0, max_value=q))
    return Fraction(p, q)
