"""
Exact structural invariants and the predictions for k-coalescences.

The NP-hard invariants (clique number, independence number, chromatic
number, Hamiltonicity) are computed by plain backtracking behind a vertex
budget; connectivities come from networkx max-flow on explicit networks.
"""
import logging
import math
from collections import deque
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Tuple, Union

import networkx as nx

from .coalescence import CliqueLike, coalesce
from .errors import BudgetExceeded
from .graph import Graph
from .utils import FAIL, PASS, SKIPPED, VerificationRow, format_float

logger = logging.getLogger("coalesce.structural")

Girth = Union[int, float]
INFINITE = math.inf


@dataclass(frozen=True)
class SearchLimits:
    exact_search: int = 30
    hamiltonian: int = 20

    @classmethod
    def from_config(cls, config: Dict[str, Any]) -> "SearchLimits":
        limits = config.get("limits", {})
        return cls(
            exact_search=int(limits.get("exact_search", cls.exact_search)),
            hamiltonian=int(limits.get("hamiltonian", cls.hamiltonian)),
        )


DEFAULT_LIMITS = SearchLimits()


def _budget(g: Graph, invariant: str, limit: int) -> None:
    if g.n > limit:
        raise BudgetExceeded(invariant, g.n, limit)


def girth(g: Graph) -> Girth:
    """Length of a shortest cycle, or math.inf for forests."""
    view = g.nx_view
    best = INFINITE
    for root in view.nodes:
        dist = {root: 0}
        parent = {root: None}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in view.neighbors(u):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
        if best == 3:
            return 3
    return best


def clique_number(g: Graph, limit: int = DEFAULT_LIMITS.exact_search) -> int:
    """Maximum clique size by branch and bound on candidate sets."""
    _budget(g, "clique_number", limit)
    best = 0

    def expand(size: int, candidates: List[int]) -> None:
        nonlocal best
        if not candidates:
            best = max(best, size)
            return
        for i, v in enumerate(candidates):
            if size + len(candidates) - i <= best:
                return
            expand(size + 1, [w for w in candidates[i + 1:] if w in g.adjacency[v]])

    order = sorted(range(g.n), key=lambda v: -len(g.adjacency[v]))
    expand(0, order)
    return best


def independence_number(g: Graph, limit: int = DEFAULT_LIMITS.exact_search) -> int:
    _budget(g, "independence_number", limit)
    return clique_number(g.complement(), limit)


def _colorable(g: Graph, colors: int) -> bool:
    order = sorted(range(g.n), key=lambda v: -len(g.adjacency[v]))
    assignment: Dict[int, int] = {}

    def place(index: int) -> bool:
        if index == len(order):
            return True
        v = order[index]
        used = {assignment[w] for w in g.adjacency[v] if w in assignment}
        # symmetry: a fresh color only needs trying once
        ceiling = min(colors, max(assignment.values(), default=-1) + 2)
        for c in range(ceiling):
            if c in used:
                continue
            assignment[v] = c
            if place(index + 1):
                return True
            del assignment[v]
        return False

    return place(0)


def chromatic_number(g: Graph, limit: int = DEFAULT_LIMITS.exact_search) -> int:
    """Smallest k with a proper k-coloring, searched upward from the clique number."""
    _budget(g, "chromatic_number", limit)
    if g.n == 0:
        return 0
    colors = max(1, clique_number(g, limit))
    while not _colorable(g, colors):
        colors += 1
    return colors


def _local_vertex_connectivity(g: Graph, s: int, t: int) -> int:
    network = nx.DiGraph()
    big = g.n
    for v in range(g.n):
        network.add_edge(("in", v), ("out", v), capacity=big if v in (s, t) else 1)
    for u, v in g.edges:
        network.add_edge(("out", u), ("in", v), capacity=big)
        network.add_edge(("out", v), ("in", u), capacity=big)
    return int(nx.maximum_flow_value(network, ("out", s), ("in", t)))


def vertex_connectivity(g: Graph) -> int:
    """
    Minimum vertex cut size; a complete graph K_n gives n - 1.

    Even's scheme: a minimum separator misses one of the first kappa + 1
    vertices, so only pairs (v_i, v_j) with i <= kappa need a flow.
    """
    if g.n <= 1:
        return 0
    if not g.is_connected():
        return 0
    best = g.n - 1
    i = 0
    while i <= best and i < g.n:
        for j in range(i + 1, g.n):
            if j not in g.adjacency[i]:
                best = min(best, _local_vertex_connectivity(g, i, j))
        i += 1
    return best


def edge_connectivity(g: Graph) -> int:
    """Minimum edge cut size via n - 1 unit-capacity max-flows from vertex 0."""
    if g.n <= 1 or not g.is_connected():
        return 0
    network = nx.DiGraph()
    for u, v in g.edges:
        network.add_edge(u, v, capacity=1)
        network.add_edge(v, u, capacity=1)
    return min(int(nx.maximum_flow_value(network, 0, t)) for t in range(1, g.n))


def is_eulerian(g: Graph) -> bool:
    """All degrees even and the non-isolated vertices connected."""
    if any(len(nbrs) % 2 for nbrs in g.adjacency):
        return False
    active = [v for v in range(g.n) if g.adjacency[v]]
    if not active:
        return True
    return g.induced_subgraph(active).is_connected()


def is_hamiltonian(g: Graph, limit: int = DEFAULT_LIMITS.hamiltonian) -> Optional[bool]:
    """Exact backtracking for n <= limit; None (unknown) above it."""
    if g.n < 3:
        return False
    if g.n > limit:
        return None
    if any(len(nbrs) < 2 for nbrs in g.adjacency) or not g.is_connected():
        return False
    used = [False] * g.n
    used[0] = True

    def extend(v: int, depth: int) -> bool:
        if depth == g.n:
            return 0 in g.adjacency[v]
        for w in g.adjacency[v]:
            if not used[w]:
                used[w] = True
                if extend(w, depth + 1):
                    return True
                used[w] = False
        return False

    return extend(0, 1)


@dataclass(frozen=True)
class ExactInvariants:
    clique_number: int
    vertex_connectivity: int
    edge_connectivity: int
    independence_number: int
    chromatic_number: int


def exact_invariants(g: Graph, limits: SearchLimits = DEFAULT_LIMITS) -> ExactInvariants:
    return ExactInvariants(
        clique_number=clique_number(g, limits.exact_search),
        vertex_connectivity=vertex_connectivity(g),
        edge_connectivity=edge_connectivity(g),
        independence_number=independence_number(g, limits.exact_search),
        chromatic_number=chromatic_number(g, limits.exact_search),
    )


@dataclass(frozen=True)
class StructureReport:
    n: int
    max_degree: int
    min_degree: int
    girth: Girth
    clique_number: Optional[int]
    vertex_connectivity: int
    edge_connectivity: int
    eulerian: bool
    hamiltonian: Optional[bool]
    independence_number: Optional[int]
    chromatic_number: Optional[int]
    skipped: Tuple[str, ...] = ()

    @property
    def is_regular(self) -> bool:
        return self.max_degree == self.min_degree

    def sanity_violations(self) -> List[str]:
        problems = []
        if not self.vertex_connectivity <= self.edge_connectivity <= self.min_degree:
            problems.append("kappa <= lambda <= delta")
        if self.clique_number is not None and self.chromatic_number is not None:
            if not self.clique_number <= self.chromatic_number <= self.max_degree + 1:
                problems.append("omega <= chi <= Delta + 1")
        if self.independence_number is not None and self.chromatic_number:
            if self.independence_number * self.chromatic_number < self.n:
                problems.append("beta0 >= n / chi")
        return problems

    def to_json(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "max_degree": self.max_degree,
            "min_degree": self.min_degree,
            "girth": format_float(self.girth) if self.girth == INFINITE else self.girth,
            "clique_number": self.clique_number,
            "vertex_connectivity": self.vertex_connectivity,
            "edge_connectivity": self.edge_connectivity,
            "eulerian": self.eulerian,
            "hamiltonian": "Unknown" if self.hamiltonian is None else self.hamiltonian,
            "independence_number": self.independence_number,
            "chromatic_number": self.chromatic_number,
            "skipped": list(self.skipped),
        }


def structure_report(g: Graph, limits: SearchLimits = DEFAULT_LIMITS) -> StructureReport:
    """Every invariant of g; budget overruns leave the slot as None and are listed in `skipped`."""
    degrees = g.degrees() or (0,)
    skipped = []

    def bounded(name: str, fn: Callable[[], int]) -> Optional[int]:
        try:
            return fn()
        except BudgetExceeded as e:
            logger.debug(f"structure_report: {e.message}")
            skipped.append(name)
            return None

    omega = bounded("clique_number", lambda: clique_number(g, limits.exact_search))
    beta = bounded("independence_number", lambda: independence_number(g, limits.exact_search))
    chi = bounded("chromatic_number", lambda: chromatic_number(g, limits.exact_search))
    hamiltonian = is_hamiltonian(g, limits.hamiltonian)
    if hamiltonian is None:
        skipped.append("hamiltonian")

    return StructureReport(
        n=g.n,
        max_degree=max(degrees),
        min_degree=min(degrees),
        girth=girth(g),
        clique_number=omega,
        vertex_connectivity=vertex_connectivity(g),
        edge_connectivity=edge_connectivity(g),
        eulerian=is_eulerian(g),
        hamiltonian=hamiltonian,
        independence_number=beta,
        chromatic_number=chi,
        skipped=tuple(skipped),
    )


# Predictions for G1 o_k G2

@dataclass(frozen=True)
class Prediction:
    value: Any = None
    applicable: bool = False
    reason: str = ""


@dataclass(frozen=True)
class CoalescencePrediction:
    k: int
    max_degree: Prediction
    min_degree: Prediction
    girth: Prediction
    clique_number: Prediction
    vertex_connectivity: Prediction
    edge_connectivity: Prediction
    eulerian: Prediction
    hamiltonian: Prediction
    independence_number: Prediction
    chromatic_number: Prediction

    def slots(self) -> Dict[str, Prediction]:
        return {name: getattr(self, name) for name in SLOTS}


SLOTS = (
    "max_degree",
    "min_degree",
    "girth",
    "clique_number",
    "vertex_connectivity",
    "edge_connectivity",
    "eulerian",
    "hamiltonian",
    "independence_number",
    "chromatic_number",
)


def _known(*values) -> bool:
    return all(v is not None for v in values)


def predict(r1: StructureReport, r2: StructureReport, k: int) -> CoalescencePrediction:
    """Evaluate the coalescence propositions from the component reports."""
    absorbed = k in (r1.n, r2.n)
    inner = k < min(r1.n, r2.n)
    regular = r1.is_regular and r2.is_regular

    if regular:
        rr1, rr2 = r1.max_degree, r2.max_degree
        max_degree = Prediction(rr1 + rr2 - k + 1, True, "both components regular")
        low = max(rr1, rr2) if absorbed else min(rr1, rr2)
        min_degree = Prediction(low, True, "k equals a component order" if absorbed else "k below both orders")
    else:
        max_degree = min_degree = Prediction(reason="needs regular components")

    if k >= 3:
        girth_p = Prediction(3, True, "k >= 3")
    else:
        girth_p = Prediction(min(r1.girth, r2.girth), True, "k <= 2")

    clique = (
        Prediction(max(r1.clique_number, r2.clique_number), True)
        if _known(r1.clique_number, r2.clique_number)
        else Prediction(reason="component clique number skipped")
    )

    if inner:
        kappa = Prediction(min(r1.vertex_connectivity, r2.vertex_connectivity, k), True)
        lam = Prediction(min(r1.edge_connectivity, r2.edge_connectivity), True)
    else:
        kappa = lam = Prediction(reason="k equals a component order")

    if r1.eulerian and r2.eulerian:
        euler = Prediction(k % 2 == 1, True, "both components Eulerian")
    else:
        euler = Prediction(reason="needs Eulerian components")

    if k == 1:
        if r1.n >= 2 and r2.n >= 2:
            ham = Prediction(False, True, "cut vertex")
        else:
            ham = Prediction(reason="a component is a single vertex")
    elif not inner:
        ham = Prediction(reason="k equals a component order")
    elif _known(r1.hamiltonian, r2.hamiltonian):
        ham = Prediction(bool(r1.hamiltonian and r2.hamiltonian), True, "k >= 2")
    else:
        ham = Prediction(reason="component Hamiltonicity unknown")

    if _known(r1.independence_number, r2.independence_number):
        total = r1.independence_number + r2.independence_number
        beta = Prediction((total - 2, total), True)
    else:
        beta = Prediction(reason="component independence number skipped")

    if _known(r1.chromatic_number, r2.chromatic_number):
        chi = Prediction(k + max(r1.chromatic_number - k, r2.chromatic_number - k), True)
    else:
        chi = Prediction(reason="component chromatic number skipped")

    return CoalescencePrediction(
        k, max_degree, min_degree, girth_p, clique, kappa, lam, euler, ham, beta, chi
    )


def _jsonable_invariant(value: Any) -> Any:
    if value == INFINITE:
        return "Infinite"
    if value is None:
        return "Unknown"
    return value


def compare_prediction(
    prediction: CoalescencePrediction,
    measured: StructureReport,
    params: Dict[str, Any],
) -> List[VerificationRow]:
    rows = []
    for name, slot in prediction.slots().items():
        if not slot.applicable:
            continue
        actual = getattr(measured, name)
        if actual is None or name in measured.skipped:
            rows.append(VerificationRow(name, params, slot.value, "Unknown", SKIPPED, "exact-search budget"))
            continue
        if name == "independence_number":
            lo, hi = slot.value
            ok = lo <= actual <= hi
            predicted = list(slot.value)
        else:
            ok = actual == slot.value
            predicted = _jsonable_invariant(slot.value)
        rows.append(
            VerificationRow(
                name, params, predicted, _jsonable_invariant(actual), PASS if ok else FAIL, slot.reason or None
            )
        )
    problems = measured.sanity_violations()
    rows.append(
        VerificationRow(
            "sanity_chain", params, [], problems, FAIL if problems else PASS,
            "kappa <= lambda <= delta, omega <= chi <= Delta + 1, beta0 * chi >= n",
        )
    )
    return rows


def check_propositions(
    g1: Graph,
    q1: CliqueLike,
    g2: Graph,
    q2: CliqueLike,
    limits: SearchLimits = DEFAULT_LIMITS,
    reports: Optional[Tuple[StructureReport, StructureReport]] = None,
    params: Optional[Dict[str, Any]] = None,
) -> List[VerificationRow]:
    """
    Predict every applicable invariant of G1 o_k G2 from the components,
    measure it on the merged graph, and compare. Pass precomputed component
    reports to avoid recomputing them across a sweep.
    """
    record = coalesce(g1, q1, g2, q2)
    r1, r2 = reports if reports else (structure_report(g1, limits), structure_report(g2, limits))
    prediction = predict(r1, r2, record.k)
    measured = structure_report(record.result, limits)
    rows = compare_prediction(prediction, measured, params or {"k": record.k, "n1": g1.n, "n2": g2.n})
    failures = [row.check for row in rows if row.status == FAIL]
    if failures:
        logger.warning(f"check_propositions: FAIL on {failures} for {params}")
    return rows
