"""
Verification sweeps.

Each sweep expands a grid of cases, evaluates every case with a top-level
task function (so cases can be shipped to a process pool), and returns the
resulting VerificationRows in grid order.

Row statuses:
- PASS / FAIL for claims expected to hold exactly
- REFUTED for claims under test that the computation contradicts
- SKIPPED when an exact search exceeded its budget
"""
import logging
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from tqdm import tqdm

from .coalescence import CoalescenceFamily, build_family
from .errors import BudgetExceeded, CoalesceError, ParamOutOfRange
from .graph import (
    Graph,
    complete_graph,
    cycle_graph,
    find_clique,
    path_graph,
    random_connected_graph,
    star_graph,
)
from .indices import (
    INDEX_NAMES,
    closed_form_audit,
    composition_audit,
    family_grid,
)
from .spectra import (
    DEFAULT_NUMERIC,
    ENERGY_VARIANTS,
    IdentityCheck,
    NumericSettings,
    aalpha_char_poly,
    complete_closed_form,
    complete_coalescence,
    complete_spectrum,
    corollary_check,
    eigenvalues,
    energy_corollary,
    identity_check,
    lollipop_recursion,
)
from .structural import DEFAULT_LIMITS, SearchLimits, StructureReport, check_propositions, structure_report
from .utils import FAIL, PASS, REFUTED, SKIPPED, VerificationRow, status_counts

logger = logging.getLogger("coalesce.verify")

CLOSED_FORM_ALPHAS = tuple(Fraction(p, 4) for p in range(5))
DECOMPOSITION_ALPHAS = (Fraction(0), Fraction(1, 3), Fraction(1, 2), Fraction(1))
MAX_RANDOM_ORDER = 10
MAX_COMPOSITION_ORDER = 12

DEFAULT_INDEX_GRIDS = {
    CoalescenceFamily.LOLLIPOP: {"m": range(3, 9), "n": range(2, 7)},
    CoalescenceFamily.DUMBBELL: {"m": range(4, 9), "n": range(3, 7)},
    CoalescenceFamily.DANDELION: {"m": range(2, 7), "n": range(2, 7)},
    CoalescenceFamily.KITE: {"n": range(2, 7), "m": range(2, 7)},
}


@dataclass(frozen=True)
class SweepSettings:
    workers: int = 1
    progress: bool = False
    seed: int = 2024
    samples: int = 50

    @classmethod
    def from_config(cls, config: Dict[str, Any]) -> "SweepSettings":
        verify = config.get("verify", {})
        return cls(
            workers=int(verify.get("workers", cls.workers)),
            progress=bool(verify.get("progress", cls.progress)),
            seed=int(verify.get("seed", cls.seed)),
            samples=int(verify.get("samples", cls.samples)),
        )


DEFAULT_SWEEP = SweepSettings()


def run_cases(
    task: Callable[[Any], List[VerificationRow]],
    cases: Sequence[Any],
    settings: SweepSettings = DEFAULT_SWEEP,
    desc: str = "verify",
) -> List[VerificationRow]:
    """Evaluate every case, inline or on a process pool; rows keep case order."""
    bar = tqdm(total=len(cases), desc=desc, disable=not settings.progress, file=sys.stderr)
    rows: List[VerificationRow] = []
    try:
        if settings.workers > 1 and len(cases) > 1:
            with ProcessPoolExecutor(max_workers=settings.workers) as pool:
                for result in pool.map(task, cases):
                    rows.extend(result)
                    bar.update(1)
        else:
            for case in cases:
                rows.extend(task(case))
                bar.update(1)
    finally:
        bar.close()
    counts = status_counts(rows)
    if counts.get(FAIL):
        logger.warning(f"❌ {desc}: {counts}")
    else:
        logger.info(f"✅ {desc}: {counts}")
    return rows


# Structural propositions

def structure_families() -> Dict[str, Graph]:
    graphs = {}
    for n in range(3, 7):
        graphs[f"C{n}"] = cycle_graph(n)
    for n in range(2, 7):
        graphs[f"P{n}"] = path_graph(n)
    for n in range(2, 7):
        graphs[f"K{n}"] = complete_graph(n)
    for n in range(3, 7):
        graphs[f"S{n}"] = star_graph(n)
    return graphs


def _structure_task(case) -> List[VerificationRow]:
    name1, g1, q1, r1, name2, g2, q2, r2, limits = case
    params = {"g1": name1, "g2": name2, "k": len(q1)}
    try:
        return check_propositions(g1, q1, g2, q2, limits, reports=(r1, r2), params=params)
    except BudgetExceeded as e:
        return [VerificationRow("structure", params, None, None, SKIPPED, e.message)]


def structure_sweep(
    ks: Sequence[int] = (1, 2, 3),
    limits: SearchLimits = DEFAULT_LIMITS,
    settings: SweepSettings = DEFAULT_SWEEP,
    graphs: Optional[Dict[str, Graph]] = None,
) -> List[VerificationRow]:
    """Every unordered pair of family graphs, merged on their first k-clique for each k."""
    graphs = graphs or structure_families()
    reports: Dict[str, StructureReport] = {name: structure_report(g, limits) for name, g in graphs.items()}
    cases = []
    for name1, name2 in combinations_with_replacement(graphs, 2):
        g1, g2 = graphs[name1], graphs[name2]
        for k in ks:
            q1, q2 = find_clique(g1, k), find_clique(g2, k)
            if q1 is None or q2 is None:
                continue
            cases.append((name1, g1, q1, reports[name1], name2, g2, q2, reports[name2], limits))
    logger.info(f"structure sweep: {len(graphs)} graphs, {len(cases)} coalescences")
    return run_cases(_structure_task, cases, settings, "structure")


# Decomposition identities

def plant_clique(g: Graph, vertices: Sequence[int]) -> Graph:
    return Graph.from_edges(g.n, set(g.edges) | {tuple(sorted(e)) for e in combinations(vertices, 2)})


def random_pair(rng: random.Random, k: int, max_order: int = MAX_RANDOM_ORDER) -> Tuple[Graph, List[int], Graph, List[int]]:
    """
    Two random connected graphs, each with a planted k-clique, orders in
    k+1..max_order with n1 + n2 > 3k.
    """
    low = max(k + 1, 2)
    if k < 1:
        raise ParamOutOfRange(f"clique size must be at least 1, got k={k}", {"k": k})
    if 2 * max_order <= 3 * k or low > max_order:
        raise ParamOutOfRange(
            f"no orders up to {max_order} satisfy n1 + n2 > 3k for k={k}",
            {"k": k, "max_order": max_order},
        )
    while True:
        n1, n2 = rng.randint(low, max_order), rng.randint(low, max_order)
        if n1 + n2 > 3 * k:
            break
    pair = []
    for n in (n1, n2):
        g = random_connected_graph(n, rng.uniform(0.1, 0.6), rng)
        q = rng.sample(range(n), k)
        pair.extend([plant_clique(g, q), q])
    return tuple(pair)


def _identity_expected(k: int, alpha: Fraction, reading: str) -> bool:
    """Only the vertex-coalescence case is claimed unconditionally."""
    return k == 1 and (reading == "principal" or alpha == 0)


def _verdict(equal: bool, expected: bool) -> str:
    if equal:
        return PASS
    return FAIL if expected else REFUTED


def _check_detail(result: IdentityCheck) -> Dict[str, Any]:
    detail: Dict[str, Any] = {"hypothesis_met": result.hypothesis_met}
    if not result.equal:
        detail.update(lhs=result.lhs.to_json(), rhs=result.rhs.to_json())
    return detail


def identity_row(result: IdentityCheck, params: Dict[str, Any]) -> VerificationRow:
    expected = _identity_expected(result.k, result.alpha, result.reading)
    params = {**params, "k": result.k, "alpha": result.alpha, "reading": result.reading}
    return VerificationRow(
        "identity", params, True, result.equal, _verdict(result.equal, expected), None, _check_detail(result),
    )


def corollary_row(result: IdentityCheck, params: Dict[str, Any]) -> VerificationRow:
    params = {**params, "k": result.k}
    return VerificationRow(
        "corollary", params, True, result.equal, _verdict(result.equal, result.k == 1), None, _check_detail(result),
    )


def _identity_task(case) -> List[VerificationRow]:
    sample, g1, q1, g2, q2, alphas, reading = case
    params = {"sample": sample, "n1": g1.n, "n2": g2.n}
    return [identity_row(identity_check(g1, q1, g2, q2, alpha, reading), params) for alpha in alphas]


def _corollary_task(case) -> List[VerificationRow]:
    sample, g1, q1, g2, q2 = case
    return [corollary_row(corollary_check(g1, q1, g2, q2), {"sample": sample, "n1": g1.n, "n2": g2.n})]


def _lollipop_task(case) -> List[VerificationRow]:
    m, n, alphas, reading = case
    graph = build_family(CoalescenceFamily.LOLLIPOP, m, n).result
    rows = []
    for alpha in alphas:
        equal = lollipop_recursion(m, n, alpha, reading) == aalpha_char_poly(graph, alpha)
        params = {"m": m, "n": n, "alpha": alpha, "reading": reading}
        rows.append(VerificationRow(
            "lollipop", params, True, equal, _verdict(equal, reading == "principal" or alpha == 0),
        ))
    return rows


def desk_counterexample(reading: str = "standalone") -> VerificationRow:
    """K3 merged with K3 along an edge at alpha = 1/2, outside n1 + n2 > 3k."""
    triangle = complete_graph(3)
    result = identity_check(triangle, [0, 1], triangle, [0, 1], Fraction(1, 2), reading)
    row = identity_row(result, {"g1": "K3", "g2": "K3"})
    row.check = "identity.desk"
    row.detail.update(lhs=result.lhs.to_json(), rhs=result.rhs.to_json())
    return row


def decomposition_sweep(
    form: str = "identity",
    ks: Sequence[int] = (1,),
    alphas: Sequence[Fraction] = DECOMPOSITION_ALPHAS,
    reading: str = "principal",
    settings: SweepSettings = DEFAULT_SWEEP,
    lollipop_m: Sequence[int] = range(3, 7),
    lollipop_n: Sequence[int] = range(2, 6),
) -> List[VerificationRow]:
    """
    identity   random pairs with planted k-cliques, every alpha
    corollary  the same pairs at alpha = 0 with the adjacency bracket
    lollipop   the cycle-plus-path recursion over an (m, n) grid
    """
    if form == "lollipop":
        cases = [(m, n, tuple(alphas), reading) for m in lollipop_m for n in lollipop_n]
        return run_cases(_lollipop_task, cases, settings, "lollipop")

    if form not in ("identity", "corollary"):
        raise ParamOutOfRange(f"unknown decomposition form {form!r}", {"form": form})
    cases = []
    for k in ks:
        rng = random.Random(settings.seed * 1000 + k)
        for sample in range(settings.samples):
            g1, q1, g2, q2 = random_pair(rng, k)
            if form == "identity":
                cases.append((sample, g1, q1, g2, q2, tuple(alphas), reading))
            else:
                cases.append((sample, g1, q1, g2, q2))
    task = _identity_task if form == "identity" else _corollary_task
    rows = run_cases(task, cases, settings, form)
    if form == "identity" and any(k >= 2 for k in ks):
        rows.insert(0, desk_counterexample())
    return rows


# Coalesced complete graphs

def complete_cells(ms: Sequence[int], ns: Sequence[int]) -> List[Tuple[int, int, int]]:
    return [(m, n, k) for m in ms for n in ns for k in range(1, min(m, n))]


def _complete_task(case) -> List[VerificationRow]:
    m, n, k, alphas, numeric = case
    graph = complete_coalescence(m, n, k)
    rows = []
    for alpha in alphas:
        params = {"m": m, "n": n, "k": k, "alpha": alpha}
        equal = complete_closed_form(m, n, k, alpha) == aalpha_char_poly(graph, alpha)
        rows.append(VerificationRow("closed_form", params, True, equal, PASS if equal else FAIL))
        try:
            predicted, _ = complete_spectrum(m, n, k, alpha, numeric)
        except CoalesceError as e:
            rows.append(VerificationRow("spectrum", params, None, None, FAIL, e.message))
            continue
        measured = eigenvalues(graph, alpha, numeric)
        gap = max(abs(a - b) for a, b in zip(predicted.eigenvalues, measured.eigenvalues))
        ok = len(predicted.eigenvalues) == len(measured.eigenvalues) and all(
            abs(a - b) <= numeric.eigen_residual * max(1.0, abs(b))
            for a, b in zip(predicted.eigenvalues, measured.eigenvalues)
        )
        rows.append(VerificationRow(
            "spectrum", params, list(predicted.eigenvalues), list(measured.eigenvalues),
            PASS if ok else FAIL, None, {"max_gap": gap},
        ))
    return rows


def complete_forms_sweep(
    ms: Sequence[int] = range(2, 11),
    ns: Sequence[int] = range(2, 11),
    alphas: Sequence[Fraction] = CLOSED_FORM_ALPHAS,
    numeric: NumericSettings = DEFAULT_NUMERIC,
    settings: SweepSettings = DEFAULT_SWEEP,
) -> List[VerificationRow]:
    cases = [(m, n, k, tuple(alphas), numeric) for m, n, k in complete_cells(ms, ns)]
    return run_cases(_complete_task, cases, settings, "complete-forms")


def _energy_applies(variant: str, m: int, n: int, k: int) -> bool:
    return {
        "general": True,
        "k1": k == 1,
        "k2": k == 2,
        "mm_k": m == n,
        "mm_1": m == n and k == 1,
        "mm_2": m == n and k == 2,
    }[variant]


def _energy_task(case) -> List[VerificationRow]:
    variant, m, n, k, alphas, numeric = case
    rows = []
    for alpha in alphas:
        params = {"variant": variant, "m": m, "n": n, "k": k, "alpha": alpha}
        result = energy_corollary(m, n, k, alpha, variant, numeric)
        ok = result.matches_direct and result.mismatch_location is None
        note = None
        if result.mismatch_location is not None:
            position = result.mismatch_location - 1
            printed = result.printed_terms[position] if position < len(result.printed_terms) else None
            expected = result.expected_terms[position] if position < len(result.expected_terms) else None
            note = f"first divergent term {result.mismatch_location}: printed {printed}, eigenvalue-based {expected}"
        rows.append(VerificationRow(
            f"energy.{variant}", params, result.value, result.direct, PASS if ok else FAIL, note,
            {"mismatch_location": result.mismatch_location},
        ))
    return rows


def energy_corollary_sweep(
    variants: Sequence[str] = ENERGY_VARIANTS,
    ms: Sequence[int] = range(3, 7),
    ns: Sequence[int] = range(3, 7),
    alphas: Sequence[Fraction] = CLOSED_FORM_ALPHAS,
    numeric: NumericSettings = DEFAULT_NUMERIC,
    settings: SweepSettings = DEFAULT_SWEEP,
) -> List[VerificationRow]:
    cases = [
        (variant, m, n, k, tuple(alphas), numeric)
        for variant in variants
        for m, n, k in complete_cells(ms, ns)
        if _energy_applies(variant, m, n, k)
    ]
    return run_cases(_energy_task, cases, settings, "energy-corollaries")


# Topological indices

def _index_task(case) -> List[VerificationRow]:
    family, params, which = case
    return closed_form_audit(family, [params], which)


def _composition_task(case) -> List[VerificationRow]:
    return composition_audit([case])


def random_composition_pairs(
    samples: int,
    seed: int,
    max_order: int = MAX_COMPOSITION_ORDER,
) -> List[Tuple[Graph, int, Graph, int]]:
    rng = random.Random(seed)
    pairs = []
    for _ in range(samples):
        n1 = rng.randint(2, max_order - 1)
        n2 = rng.randint(2, max_order + 1 - n1)
        g1 = random_connected_graph(n1, rng.uniform(0.1, 0.6), rng)
        g2 = random_connected_graph(n2, rng.uniform(0.1, 0.6), rng)
        pairs.append((g1, rng.randrange(n1), g2, rng.randrange(n2)))
    return pairs


def index_forms_sweep(
    families: Sequence[CoalescenceFamily] = tuple(CoalescenceFamily),
    grids: Optional[Dict[CoalescenceFamily, Dict[str, Sequence[int]]]] = None,
    which: Sequence[str] = INDEX_NAMES,
    composition_samples: int = 0,
    settings: SweepSettings = DEFAULT_SWEEP,
) -> List[VerificationRow]:
    """Printed family closed forms per grid cell, then optional random composition rows."""
    grids = grids or {}
    cases = []
    for family in families:
        grid = grids.get(family, DEFAULT_INDEX_GRIDS[family])
        cases.extend((family, params, tuple(which)) for params in family_grid(family, grid))
    rows = run_cases(_index_task, cases, settings, "index-forms")
    if composition_samples:
        pairs = random_composition_pairs(composition_samples, settings.seed)
        rows.extend(run_cases(_composition_task, pairs, settings, "composition"))
    return rows


def failed_cells(rows: Sequence[VerificationRow]) -> List[Dict[str, Any]]:
    """Compact listing of FAIL rows for run summaries."""
    return [{"check": row.check, "params": row.params, "note": row.note} for row in rows if row.failed]
