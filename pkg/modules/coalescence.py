"""
k-coalescence of two graphs and the named coalescence families.

The result is labelled in blocks: the merged clique first (indices
0..k-1, in clique-pairing order), then the remaining vertices of the
first graph in increasing order, then those of the second graph.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Sequence, Tuple, Union

from .errors import NotAClique, OrderTooSmall, SizeMismatch
from .graph import Graph, complete_graph, cycle_graph, is_clique, path_graph, star_graph
from .polynomial import RationalPolynomial, char_poly

logger = logging.getLogger("coalesce.coalescence")


@dataclass(frozen=True)
class CliqueSpec:
    """Ordered vertex list; position i is paired with position i of the other spec."""
    vertices: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(int(v) for v in self.vertices))

    @property
    def k(self) -> int:
        return len(self.vertices)


CliqueLike = Union[CliqueSpec, Sequence[int]]


def _as_spec(q: CliqueLike) -> CliqueSpec:
    return q if isinstance(q, CliqueSpec) else CliqueSpec(tuple(q))


@dataclass(frozen=True)
class CoalescenceRecord:
    result: Graph
    merged: Tuple[int, ...]
    left_map: Tuple[int, ...]
    right_map: Tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.merged)

    def summary(self) -> Dict[str, Any]:
        return {
            "n": self.result.n,
            "m": self.result.m,
            "k": self.k,
            "merged": list(self.merged),
            "left_map": list(self.left_map),
            "right_map": list(self.right_map),
        }


def check_clique(g: Graph, q: CliqueLike, side: str = "g") -> CliqueSpec:
    spec = _as_spec(q)
    if spec.k < 1:
        raise SizeMismatch(f"{side}: clique specification must name at least one vertex")
    if not is_clique(g, spec.vertices):
        raise NotAClique(
            f"{side}: vertices {list(spec.vertices)} do not induce a clique",
            {"side": side, "vertices": list(spec.vertices)},
        )
    return spec


def coalesce(g1: Graph, q1: CliqueLike, g2: Graph, q2: CliqueLike) -> CoalescenceRecord:
    """Identify q1[i] with q2[i] for every i and take the union of the edge sets."""
    q1, q2 = _as_spec(q1), _as_spec(q2)
    if q1.k != q2.k:
        raise SizeMismatch(
            f"clique sizes differ: {q1.k} vs {q2.k}", {"k1": q1.k, "k2": q2.k}
        )
    q1 = check_clique(g1, q1, "g1")
    q2 = check_clique(g2, q2, "g2")
    k = q1.k

    left = [-1] * g1.n
    right = [-1] * g2.n
    for i, (u, v) in enumerate(zip(q1.vertices, q2.vertices)):
        left[u] = i
        right[v] = i
    label = k
    for u in range(g1.n):
        if left[u] < 0:
            left[u] = label
            label += 1
    for v in range(g2.n):
        if right[v] < 0:
            right[v] = label
            label += 1

    edges = {tuple(sorted((left[u], left[v]))) for u, v in g1.edges}
    edges |= {tuple(sorted((right[u], right[v]))) for u, v in g2.edges}
    result = Graph.from_edges(label, edges)
    logger.debug(f"coalesce: n1={g1.n}, n2={g2.n}, k={k} -> n={result.n}, m={result.m}")
    return CoalescenceRecord(result, tuple(range(k)), tuple(left), tuple(right))


class CoalescenceFamily(Enum):
    LOLLIPOP = "lollipop"
    DUMBBELL = "dumbbell"
    DANDELION = "dandelion"
    KITE = "kite"


_ARITY = {
    CoalescenceFamily.LOLLIPOP: ("m", "n"),
    CoalescenceFamily.DUMBBELL: ("l", "m", "n"),
    CoalescenceFamily.DANDELION: ("m", "n"),
    CoalescenceFamily.KITE: ("n", "m"),
}


def _require(family: CoalescenceFamily, name: str, value: int, minimum: int) -> None:
    if value < minimum:
        raise OrderTooSmall(
            f"{family.value}: {name} must be >= {minimum}, got {value}",
            {"family": family.value, name: value},
        )


def build_family(family: CoalescenceFamily, *params: int) -> CoalescenceRecord:
    """
    Build a named coalescence family member.

    lollipop(m, n)   cycle C_m merged with a pendant vertex of P_n
    dumbbell(l, m, n) cycle C_l merged with the free pendant of lollipop(m, n)
    dandelion(m, n)  star S_n merged at its center with a pendant vertex of P_m
    kite(n, m)       K_n merged at a vertex with a pendant vertex of P_m
    """
    expected = _ARITY[family]
    if len(params) != len(expected):
        raise OrderTooSmall(
            f"{family.value} takes parameters ({', '.join(expected)}), got {list(params)}",
            {"family": family.value, "params": list(params)},
        )
    if family is CoalescenceFamily.LOLLIPOP:
        m, n = params
        _require(family, "m", m, 3)
        _require(family, "n", n, 1)
        return coalesce(cycle_graph(m), [0], path_graph(n), [0])
    if family is CoalescenceFamily.DUMBBELL:
        l, m, n = params
        _require(family, "l", l, 3)
        _require(family, "m", m, 3)
        _require(family, "n", n, 2)
        lollipop = build_family(CoalescenceFamily.LOLLIPOP, m, n)
        far_pendant = lollipop.right_map[n - 1]
        return coalesce(cycle_graph(l), [0], lollipop.result, [far_pendant])
    if family is CoalescenceFamily.DANDELION:
        m, n = params
        _require(family, "m", m, 1)
        _require(family, "n", n, 1)
        return coalesce(star_graph(n), [0], path_graph(m), [0])
    n, m = params
    _require(family, "n", n, 1)
    _require(family, "m", m, 1)
    return coalesce(complete_graph(n), [0], path_graph(m), [0])


def invariant_fingerprint(g: Graph) -> Tuple[Tuple[int, ...], RationalPolynomial]:
    """Sorted degree sequence and adjacency characteristic polynomial."""
    adjacency = [[1 if w in g.adjacency[v] else 0 for w in range(g.n)] for v in range(g.n)]
    return tuple(sorted(g.degrees())), char_poly(adjacency)
