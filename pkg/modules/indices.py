"""
Distance- and degree-based topological indices.

W   Wiener index, sum of d(u, v) over unordered pairs
WW  hyper-Wiener index, W/2 + (sum of d(u, v)^2)/2
F   forgotten index, sum of deg^3
M1  first Zagreb index, sum of deg^2
NK  Narumi-Katayama index, product of degrees

Also holds the vertex-coalescence composition rules, the printed closed
forms for the lollipop, dumbbell, dandelion and kite families, and the
audits that compare both against brute force.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as cartesian
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from .coalescence import CoalescenceFamily, build_family, coalesce
from .errors import Disconnected, ParamOutOfRange, ZeroDegreeMergeVertex
from .graph import Graph, complete_graph, cycle_graph, path_graph, star_graph
from .utils import FAIL, PASS, VerificationRow

logger = logging.getLogger("coalesce.indices")

INDEX_NAMES = ("W", "WW", "F", "M1", "NK")


@dataclass(frozen=True)
class DistanceTable:
    distances: Tuple[Tuple[int, ...], ...]
    transmission: Tuple[int, ...]
    squared_transmission: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.distances)

    def pairs(self) -> Iterable[int]:
        for u in range(self.n):
            yield from self.distances[u][u + 1:]


def distance_table(g: Graph) -> DistanceTable:
    """All-pairs shortest paths from networkx, rows indexed by vertex."""
    lengths = dict(nx.all_pairs_shortest_path_length(g.nx_view))
    rows = []
    for source in range(g.n):
        reached = lengths[source]
        if len(reached) < g.n:
            raise Disconnected(source, next(v for v in range(g.n) if v not in reached))
        rows.append(tuple(reached[v] for v in range(g.n)))
    return DistanceTable(
        tuple(rows),
        tuple(sum(row) for row in rows),
        tuple(sum(d * d for d in row) for row in rows),
    )


def wiener(g: Graph, table: Optional[DistanceTable] = None) -> int:
    table = table or distance_table(g)
    return sum(table.pairs())


def hyper_wiener(g: Graph, table: Optional[DistanceTable] = None) -> Fraction:
    table = table or distance_table(g)
    return Fraction(sum(d + d * d for d in table.pairs()), 2)


def forgotten(g: Graph) -> int:
    return sum(d ** 3 for d in g.degrees())


def first_zagreb(g: Graph) -> int:
    return sum(d ** 2 for d in g.degrees())


def narumi_katayama(g: Graph) -> int:
    """Product of degrees; 0 as soon as one vertex is isolated."""
    return math.prod(g.degrees())


@dataclass(frozen=True)
class IndexReport:
    W: int
    WW: Fraction
    F: int
    M1: int
    NK: int

    def value(self, which: str) -> Fraction:
        return Fraction(getattr(self, which))

    def to_json(self) -> Dict[str, Any]:
        return {"W": self.W, "WW": str(self.WW), "F": self.F, "M1": self.M1, "NK": self.NK}


def index_report(g: Graph) -> IndexReport:
    table = distance_table(g)
    return IndexReport(
        W=wiener(g, table),
        WW=hyper_wiener(g, table),
        F=forgotten(g),
        M1=first_zagreb(g),
        NK=narumi_katayama(g),
    )


def vertex_composition(g1: Graph, v1: int, g2: Graph, v2: int) -> IndexReport:
    """
    Indices of the vertex coalescence of g1 at v1 with g2 at v2, built from
    component data only: the component indices, the transmissions d and d^2
    at the merge vertices and the merge-vertex degrees.
    """
    t1, t2 = distance_table(g1), distance_table(g2)
    n1, n2 = g1.n, g2.n
    d1, d2 = t1.transmission[v1], t2.transmission[v2]
    s1, s2 = t1.squared_transmission[v1], t2.squared_transmission[v2]
    a, b = g1.degree(v1), g2.degree(v2)
    if a == 0 or b == 0:
        raise ZeroDegreeMergeVertex(
            f"merge vertices need positive degree for the NK rule, got {a} and {b}",
            {"degrees": [a, b]},
        )

    W = wiener(g1, t1) + wiener(g2, t2) + (n2 - 1) * d1 + (n1 - 1) * d2
    WW = (
        hyper_wiener(g1, t1)
        + hyper_wiener(g2, t2)
        + Fraction((n2 - 1) * (d1 + s1) + (n1 - 1) * (d2 + s2) + 2 * d1 * d2, 2)
    )
    F = forgotten(g1) + forgotten(g2) + 3 * a * b * (a + b)
    M1 = first_zagreb(g1) + first_zagreb(g2) + 2 * a * b
    NK = narumi_katayama(g1) * narumi_katayama(g2) * (a + b) // (a * b)
    return IndexReport(W, WW, F, M1, NK)


# Printed family closed forms

FAMILY_PARAMS = {
    CoalescenceFamily.LOLLIPOP: ("m", "n"),
    CoalescenceFamily.DUMBBELL: ("m", "n"),
    CoalescenceFamily.DANDELION: ("m", "n"),
    CoalescenceFamily.KITE: ("n", "m"),
}

_MINIMUMS = {
    CoalescenceFamily.LOLLIPOP: {"m": 3, "n": 2},
    CoalescenceFamily.DUMBBELL: {"m": 3, "n": 2},
    CoalescenceFamily.DANDELION: {"m": 2, "n": 2},
    CoalescenceFamily.KITE: {"n": 2, "m": 2},
}

_SUMMAND_LABELS = {
    CoalescenceFamily.LOLLIPOP: ("cycle", "path", "cross"),
    CoalescenceFamily.DUMBBELL: ("cycles", "path", "cross"),
    CoalescenceFamily.DANDELION: ("star", "path", "cross"),
    CoalescenceFamily.KITE: ("complete", "path", "cross"),
}


@dataclass(frozen=True)
class ClosedFormValue:
    value: Fraction
    branch: Optional[str]
    summands: Tuple[Fraction, ...]
    labels: Tuple[str, ...]


def _named(family: CoalescenceFamily, params: Sequence[int]) -> Dict[str, int]:
    names = FAMILY_PARAMS[family]
    if len(params) != len(names):
        raise ParamOutOfRange(
            f"{family.value} closed forms take ({', '.join(names)}), got {list(params)}",
            {"family": family.value, "params": list(params)},
        )
    named = dict(zip(names, (int(p) for p in params)))
    for name, minimum in _MINIMUMS[family].items():
        if named[name] < minimum:
            raise ParamOutOfRange(
                f"{family.value}: {name} must be >= {minimum}, got {named[name]}",
                {"family": family.value, name: named[name]},
            )
    return named


def _path_W(n: int) -> Fraction:
    return Fraction(n * (n * n - 1), 6)


def _path_WW(n: int) -> Fraction:
    return Fraction(n ** 4 + 2 * n ** 3 - n * n - 2 * n, 24)


def _distance_summands(family: CoalescenceFamily, which: str, m: int, n: int) -> Tuple[Optional[str], List[Fraction]]:
    F = Fraction
    even = m % 2 == 0
    parity = "even" if even else "odd"
    if family is CoalescenceFamily.LOLLIPOP:
        if which == "W":
            if even:
                return parity, [F(m ** 3, 8), _path_W(n), F((n - 1) * (m * m + 2 * n * (m - 1)), 4)]
            return parity, [F(m * (m * m - 1), 8), _path_W(n), F((n - 1) * (m - 1) * (m + 1 + 2 * n), 4)]
        if even:
            return parity, [
                F(m * m * (m + 1) * (m + 2), 48),
                _path_WW(n),
                F((n - 1) * (m * (m * m + 3 * m + 2) + 4 * n * (m - 1) * (n + 1) + 3 * m * m * n), 24),
            ]
        return parity, [
            F(m * (m * m - 1) * (m + 3), 48),
            _path_WW(n),
            F((m - 1) * (n - 1) * ((m + 1) * (m + 3) + 4 * n * (n + 1) + 3 * n * (m + 1)), 24),
        ]
    if family is CoalescenceFamily.DUMBBELL:
        if which == "W":
            if even:
                return parity, [
                    F(m ** 3, 4),
                    _path_W(n),
                    F(m * (m * m + 3 * m * n - 4 * m + 4) + n * (4 - 6 * m + 2 * m * n - 2 * n) - 2, 2),
                ]
            return parity, [
                F(m * (m * m - 1), 4),
                _path_W(n),
                F((m - 1) * (m * m - 3 * m + 3 * m * n - 3 * n + 4 * n * n), 2),
            ]
        if even:
            return parity, [
                F(m * m * (m + 1) * (m + 2), 24),
                _path_WW(n),
                F(
                    7 * m ** 4
                    + 4 * m ** 3 * (-5 + 7 * n)
                    - 8 * n * (1 - 3 * n + 2 * n * n)
                    + 4 * m * m * (2 - 12 * n + 9 * n * n)
                    + 8 * m * (-2 + 5 * n - 6 * n * n + 2 * n ** 3),
                    48,
                ),
            ]
        return parity, [
            F(m * (m * m - 1) * (m + 3), 24),
            _path_WW(n),
            F(
                (m - 1)
                * (
                    -3 + 7 * m ** 3 - 16 * n - 12 * n * n + 16 * n ** 3
                    + m * m * (-13 + 28 * n)
                    + m * (-23 - 20 * n + 36 * n * n)
                ),
                48,
            ),
        ]
    # Dandelion (path m, star n) and kite (clique n, path m) share the path and cross terms.
    if which == "W":
        head = F((n - 1) ** 2) if family is CoalescenceFamily.DANDELION else F(n * (n - 1), 2)
        return None, [head, F(m * (m * m - 1), 6), F((n - 1) * (m - 1) * (m + 2), 2)]
    head = F((n - 1) * (3 * n - 4), 2) if family is CoalescenceFamily.DANDELION else F((n - 1) * (n - 1), 2)
    return None, [head, F(m * (m + 2) * (m * m - 1), 24), F((n - 1) * (m - 1) * (m * m + 4 * m + 6), 6)]


def _degree_total(family: CoalescenceFamily, which: str, m: int, n: int) -> int:
    if family is CoalescenceFamily.LOLLIPOP:
        return {"F": 8 * (m + n) + 4, "M1": 4 * (m + n) - 2, "NK": 3 * 2 ** (m + n - 3)}[which]
    if family is CoalescenceFamily.DUMBBELL:
        return {"F": 8 * (2 * m + n) + 22, "M1": 4 * (2 * m + n) + 2, "NK": 9 * 2 ** (2 * m + n - 4)}[which]
    if family is CoalescenceFamily.DANDELION:
        return {"F": n ** 3 + n - 16 + 8 * m, "M1": n * n + n - 8 + 4 * m, "NK": n * 2 ** (m - 2)}[which]
    return {
        "F": n * (n - 1) * ((n - 1) ** 2 + 3) - 14 + 8 * m,
        "M1": (n - 1) * (n * n - n + 2) + 4 * m - 6,
        "NK": n * (n - 1) ** (n - 1) * 2 ** (m - 2),
    }[which]


def family_closed_form(family: CoalescenceFamily, params: Sequence[int], which: str) -> ClosedFormValue:
    """
    Literal evaluation of the printed closed form for a family index.

    Lollipop(m, n) and the symmetric Dumbbell(m, n) choose the even/odd
    branch from the cycle length m. W and WW come back as their three
    printed summands (component, path, cross); F, M1 and NK as one.
    """
    if which not in INDEX_NAMES:
        raise ParamOutOfRange(f"unknown index {which!r}", {"which": which})
    named = _named(family, params)
    m, n = named["m"], named["n"]
    if which in ("W", "WW"):
        branch, summands = _distance_summands(family, which, m, n)
        labels = _SUMMAND_LABELS[family]
    else:
        branch, summands, labels = None, [Fraction(_degree_total(family, which, m, n))], ("total",)
    return ClosedFormValue(sum(summands, Fraction(0)), branch, tuple(summands), labels)


def family_graph(family: CoalescenceFamily, params: Sequence[int]) -> Graph:
    named = _named(family, params)
    m, n = named["m"], named["n"]
    if family is CoalescenceFamily.DUMBBELL:
        return build_family(family, m, m, n).result
    if family is CoalescenceFamily.KITE:
        return build_family(family, n, m).result
    return build_family(family, m, n).result


def _component_graphs(family: CoalescenceFamily, m: int, n: int) -> Tuple[Graph, int, Graph]:
    """(head component, its copy count, path) for the brute-force summands."""
    if family is CoalescenceFamily.LOLLIPOP:
        return cycle_graph(m), 1, path_graph(n)
    if family is CoalescenceFamily.DUMBBELL:
        return cycle_graph(m), 2, path_graph(n)
    if family is CoalescenceFamily.DANDELION:
        return star_graph(n), 1, path_graph(m)
    return complete_graph(n), 1, path_graph(m)


def brute_force_summands(family: CoalescenceFamily, params: Sequence[int], which: str) -> Tuple[Fraction, ...]:
    """Brute-force counterparts of the printed summands, same order."""
    named = _named(family, params)
    total = index_report(family_graph(family, params)).value(which)
    if which not in ("W", "WW"):
        return (total,)
    head, copies, path = _component_graphs(family, named["m"], named["n"])
    head_value = copies * index_report(head).value(which)
    path_value = index_report(path).value(which)
    return head_value, path_value, total - head_value - path_value


def _exact(value: Fraction, which: str) -> Any:
    if which != "WW" and value.denominator == 1:
        return int(value)
    return str(value)


def family_grid(family: CoalescenceFamily, grid: Dict[str, Sequence[int]]) -> List[Tuple[int, ...]]:
    names = FAMILY_PARAMS[family]
    missing = [name for name in names if name not in grid]
    if missing:
        raise ParamOutOfRange(f"{family.value} grid needs values for {missing}", {"grid": dict(grid)})
    return list(cartesian(*(grid[name] for name in names)))


def closed_form_audit(
    family: CoalescenceFamily,
    grid: Iterable[Sequence[int]],
    which: Sequence[str] = INDEX_NAMES,
) -> List[VerificationRow]:
    """One row per (params, index): printed value against brute force."""
    rows = []
    names = FAMILY_PARAMS[family]
    for params in grid:
        labelled = dict(zip(names, params))
        for index in which:
            printed = family_closed_form(family, params, index)
            actual = brute_force_summands(family, params, index)
            measured = sum(actual, Fraction(0))
            check = f"{family.value}.{index}"
            detail = {"branch": printed.branch} if printed.branch else {}
            if index == "WW" and measured.denominator != 1:
                rows.append(VerificationRow(
                    check, labelled, _exact(printed.value, index), str(measured), FAIL,
                    "brute-force hyper-Wiener index is not an integer", detail,
                ))
                continue
            if printed.value == measured and printed.summands == actual:
                rows.append(VerificationRow(
                    check, labelled, _exact(printed.value, index), _exact(measured, index), PASS, None, detail,
                ))
                continue
            position = next(
                i for i, (p, b) in enumerate(zip(printed.summands, actual)) if p != b
            )
            label = printed.labels[position]
            note = (
                f"first divergent summand {position + 1} ({label}): "
                f"printed {printed.summands[position]}, brute force {actual[position]}"
            )
            detail = {
                **detail,
                "summand": position + 1,
                "label": label,
                "printed_summands": [str(s) for s in printed.summands],
                "brute_force_summands": [str(s) for s in actual],
            }
            rows.append(VerificationRow(
                check, labelled, _exact(printed.value, index), _exact(measured, index), FAIL, note, detail,
            ))
            logger.warning(f"❌ {check} {labelled}: {note}")
    return rows


def composition_audit(pairs: Iterable[Tuple[Graph, int, Graph, int]]) -> List[VerificationRow]:
    """Composition rules against the index report of the actually merged graph."""
    rows = []
    for g1, v1, g2, v2 in pairs:
        params = {"n1": g1.n, "m1": g1.m, "v1": v1, "n2": g2.n, "m2": g2.m, "v2": v2}
        predicted = vertex_composition(g1, v1, g2, v2)
        measured = index_report(coalesce(g1, [v1], g2, [v2]).result)
        for index in INDEX_NAMES:
            p, b = predicted.value(index), measured.value(index)
            rows.append(VerificationRow(
                f"composition.{index}", params, _exact(p, index), _exact(b, index),
                PASS if p == b else FAIL,
            ))
    return rows
