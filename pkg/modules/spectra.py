"""
A_alpha matrices, exact characteristic polynomials, numeric spectra and
energies, plus evaluators for the coalescence decomposition identities and
the closed forms for coalesced complete graphs.

A_alpha(G) = alpha*D(G) + (1 - alpha)*A(G) with alpha an exact rational in
[0, 1]. The energy is the sum of |lambda_i - 2*alpha*m/n| over the spectrum.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from .coalescence import CliqueLike, check_clique, coalesce
from .errors import ConvergenceFailure, EmptyGraph, ParamOutOfRange, SizeMismatch, SpectralError
from .graph import Graph, complete_graph, cycle_graph, path_graph
from .polynomial import (
    RationalPolynomial,
    all_roots,
    char_poly,
    product,
    real_roots,
    relative_residual,
)
from .utils import format_float

logger = logging.getLogger("coalesce.spectra")

AlphaLike = Union[Fraction, int, str]
READINGS = ("principal", "standalone")
ENERGY_VARIANTS = ("general", "k1", "k2", "mm_k", "mm_1", "mm_2")

X = RationalPolynomial.x()


def as_alpha(value: AlphaLike) -> Fraction:
    """Exact alpha in [0, 1]; floats are refused."""
    if isinstance(value, float):
        raise ParamOutOfRange(f"alpha must be exact, got float {value!r}", {"alpha": value})
    try:
        alpha = Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError):
        raise ParamOutOfRange(f"alpha is not a rational: {value!r}", {"alpha": str(value)}) from None
    if not 0 <= alpha <= 1:
        raise ParamOutOfRange(f"alpha must lie in [0, 1], got {alpha}", {"alpha": str(alpha)})
    return alpha


@dataclass(frozen=True)
class NumericSettings:
    eigen_residual: float = 1e-9
    root_residual: float = 1e-12
    multiplicity_tolerance: float = 1e-8
    newton_iterations: int = 50
    float_digits: int = 15

    @classmethod
    def from_config(cls, config: Dict[str, Any]) -> "NumericSettings":
        numeric = config.get("numeric", {})
        return cls(**{k: numeric[k] for k in cls.__dataclass_fields__ if k in numeric})


DEFAULT_NUMERIC = NumericSettings()


def _aalpha_rows(g: Graph, alpha: Fraction) -> List[List[Fraction]]:
    off = 1 - alpha
    rows = [[Fraction(0)] * g.n for _ in range(g.n)]
    for v in range(g.n):
        rows[v][v] = alpha * len(g.adjacency[v])
    for u, v in g.edges:
        rows[u][v] = off
        rows[v][u] = off
    return rows


def aalpha_matrix(g: Graph, alpha: AlphaLike) -> List[List[Fraction]]:
    """Symmetric n x n rational matrix alpha*D + (1 - alpha)*A."""
    if g.n == 0:
        raise EmptyGraph("A_alpha matrix of a graph with no vertices")
    return _aalpha_rows(g, as_alpha(alpha))


def aalpha_char_poly(g: Graph, alpha: AlphaLike) -> RationalPolynomial:
    return char_poly(_aalpha_rows(g, as_alpha(alpha)))


def signless_half_matrix(g: Graph) -> List[List[Fraction]]:
    """(D + A) / 2 assembled directly from the degree and adjacency data."""
    half = Fraction(1, 2)
    rows = [[Fraction(0)] * g.n for _ in range(g.n)]
    for v in range(g.n):
        rows[v][v] = half * len(g.adjacency[v])
        for w in g.adjacency[v]:
            rows[v][w] = half
    return rows


# Spectra and energy

def spectral_energy(eigenvalues: Sequence[float], shift: float) -> float:
    return math.fsum(abs(value - shift) for value in eigenvalues)


@dataclass(frozen=True)
class SpectrumReport:
    alpha: Fraction
    eigenvalues: Tuple[float, ...]
    energy: float
    mean_shift: float

    def grouped(self, tolerance: float = 1e-8) -> List[Tuple[float, int]]:
        """(value, multiplicity) pairs; neighbours closer than `tolerance` are merged."""
        groups: List[List[float]] = []
        for value in self.eigenvalues:
            if groups and abs(groups[-1][-1] - value) <= tolerance:
                groups[-1].append(value)
            else:
                groups.append([value])
        return [(g[0], len(g)) for g in groups]

    def to_json(self, digits: int = 15, tolerance: float = 1e-8) -> Dict[str, Any]:
        return {
            "alpha": str(self.alpha),
            "eigenvalues": [format_float(v, digits) for v in self.eigenvalues],
            "multiplicities": [
                [format_float(v, digits), count] for v, count in self.grouped(tolerance)
            ],
            "energy": format_float(self.energy, digits),
            "mean_shift": format_float(self.mean_shift, digits),
        }


def mean_shift(g: Graph, alpha: Fraction) -> Fraction:
    return Fraction(2 * g.m, g.n) * alpha


def eigenvalues(
    g: Graph,
    alpha: AlphaLike,
    settings: NumericSettings = DEFAULT_NUMERIC,
) -> SpectrumReport:
    """Numeric spectrum of A_alpha(g) from LAPACK's symmetric eigensolver."""
    alpha = as_alpha(alpha)
    exact = aalpha_matrix(g, alpha)
    matrix = np.array([[float(v) for v in row] for row in exact], dtype=float)
    try:
        values, vectors = np.linalg.eigh(matrix)
    except np.linalg.LinAlgError as e:
        raise ConvergenceFailure(f"symmetric eigensolver failed: {e}", {"n": g.n}) from e

    residuals = np.linalg.norm(matrix @ vectors - vectors * values, axis=0)
    worst = float(residuals.max()) if residuals.size else 0.0
    if worst > settings.eigen_residual * max(1.0, float(np.abs(matrix).sum(axis=1).max())):
        raise ConvergenceFailure(
            f"eigenpair residual {worst:.3e} exceeds {settings.eigen_residual}",
            {"residual": worst, "n": g.n},
        )

    ordered = tuple(sorted((float(v) for v in values), reverse=True))
    shift = float(mean_shift(g, alpha))
    logger.debug(f"eigenvalues: n={g.n}, alpha={alpha}, residual={worst:.2e}")
    return SpectrumReport(alpha, ordered, spectral_energy(ordered, shift), shift)


def energy(g: Graph, alpha: AlphaLike, settings: NumericSettings = DEFAULT_NUMERIC) -> float:
    return eigenvalues(g, alpha, settings).energy


# Decomposition of a coalescence

def deleted_char_poly(
    g: Graph,
    q: Sequence[int],
    alpha: Fraction,
    reading: str = "principal",
) -> RationalPolynomial:
    """
    Characteristic polynomial attached to g with the clique q removed.

    "principal" deletes the rows and columns of q from A_alpha(g), so the
    surviving diagonal keeps the degrees measured in g. "standalone" uses
    A_alpha of the induced subgraph g - q with its own degrees.
    """
    if reading not in READINGS:
        raise ParamOutOfRange(f"unknown reading {reading!r}", {"reading": reading})
    if reading == "standalone":
        return char_poly(_aalpha_rows(g.without(q), alpha))
    drop = set(q)
    keep = [v for v in range(g.n) if v not in drop]
    full = _aalpha_rows(g, alpha)
    return char_poly([[full[i][j] for j in keep] for i in keep])


def _merged_bracket(g1: Graph, q1: Sequence[int], g2: Graph, q2: Sequence[int], alpha: Fraction):
    k = len(q1)
    d1 = [g1.degree(v) for v in q1]
    d2 = [g2.degree(v) for v in q2]
    det1 = math.prod(d - (k - 1) for d in d1)
    det2 = math.prod(d - (k - 1) for d in d2)
    block = [
        [
            alpha * (d1[i] + d2[i] - (k - 1)) if i == j else 1 - alpha
            for j in range(k)
        ]
        for i in range(k)
    ]
    return alpha * det1 + alpha * det2 + char_poly(block)


def _validated(g1, q1, g2, q2):
    spec1 = check_clique(g1, q1, "g1")
    spec2 = check_clique(g2, q2, "g2")
    if spec1.k != spec2.k:
        raise SizeMismatch(f"clique sizes differ: {spec1.k} vs {spec2.k}", {"k1": spec1.k, "k2": spec2.k})
    return spec1.vertices, spec2.vertices


def decomposition_rhs(
    g1: Graph,
    q1: CliqueLike,
    g2: Graph,
    q2: CliqueLike,
    alpha: AlphaLike,
    reading: str = "principal",
) -> RationalPolynomial:
    """
    Phi(G1)Phi(G2-Q) + Phi(G2)Phi(G1-Q) - Phi(G1-Q)Phi(G2-Q) * B(x), where
    B(x) = alpha*det(D1(Q) - (k-1)I) + alpha*det(D2(Q) - (k-1)I)
           + det(xI - alpha(D1(Q) + D2(Q) - (k-1)I) - (1 - alpha)A(K_k)).
    """
    alpha = as_alpha(alpha)
    q1, q2 = _validated(g1, q1, g2, q2)
    phi1 = char_poly(_aalpha_rows(g1, alpha))
    phi2 = char_poly(_aalpha_rows(g2, alpha))
    rest1 = deleted_char_poly(g1, q1, alpha, reading)
    rest2 = deleted_char_poly(g2, q2, alpha, reading)
    bracket = _merged_bracket(g1, q1, g2, q2, alpha)
    return phi1 * rest2 + phi2 * rest1 - rest1 * rest2 * bracket


def adjacency_corollary_rhs(g1: Graph, q1: CliqueLike, g2: Graph, q2: CliqueLike) -> RationalPolynomial:
    """Adjacency form: the bracket becomes (x - k + 1)(x + 1)^(k-1) = det(xI - A(K_k))."""
    q1, q2 = _validated(g1, q1, g2, q2)
    alpha = Fraction(0)
    k = len(q1)
    phi1 = char_poly(_aalpha_rows(g1, alpha))
    phi2 = char_poly(_aalpha_rows(g2, alpha))
    rest1 = deleted_char_poly(g1, q1, alpha)
    rest2 = deleted_char_poly(g2, q2, alpha)
    clique_factor = (X - (k - 1)) * (X + 1) ** (k - 1)
    return phi1 * rest2 + phi2 * rest1 - clique_factor * rest1 * rest2


@dataclass(frozen=True)
class IdentityCheck:
    lhs: RationalPolynomial
    rhs: RationalPolynomial
    equal: bool
    hypothesis_met: bool
    k: int
    alpha: Fraction
    reading: str
    form: str = "identity"

    def to_json(self) -> Dict[str, Any]:
        return {
            "form": self.form,
            "k": self.k,
            "alpha": str(self.alpha),
            "reading": self.reading,
            "equal": self.equal,
            "hypothesis_met": self.hypothesis_met,
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
        }


def identity_check(
    g1: Graph,
    q1: CliqueLike,
    g2: Graph,
    q2: CliqueLike,
    alpha: AlphaLike,
    reading: str = "principal",
) -> IdentityCheck:
    """Compare the decomposition against the directly computed polynomial of the coalescence."""
    alpha = as_alpha(alpha)
    rhs = decomposition_rhs(g1, q1, g2, q2, alpha, reading)
    record = coalesce(g1, q1, g2, q2)
    lhs = char_poly(_aalpha_rows(record.result, alpha))
    k = record.k
    return IdentityCheck(lhs, rhs, lhs == rhs, g1.n + g2.n > 3 * k, k, alpha, reading)


def corollary_check(g1: Graph, q1: CliqueLike, g2: Graph, q2: CliqueLike) -> IdentityCheck:
    rhs = adjacency_corollary_rhs(g1, q1, g2, q2)
    record = coalesce(g1, q1, g2, q2)
    lhs = char_poly(_aalpha_rows(record.result, Fraction(0)))
    k = record.k
    return IdentityCheck(
        lhs, rhs, lhs == rhs, g1.n + g2.n > 3 * k, k, Fraction(0), "principal", form="corollary"
    )


def lollipop_recursion(m: int, n: int, alpha: AlphaLike, reading: str = "principal") -> RationalPolynomial:
    """
    Phi(P_n)Phi(P_{m-1}) + Phi(C_m)Phi(P_{n-1}) - x*Phi(P_{n-1})Phi(P_{m-1})
    for the lollipop built from C_m and a pendant vertex of P_n. The shorter
    paths are C_m and P_n with the merge vertex removed, read as `reading`.
    """
    if m < 3 or n < 2:
        raise ParamOutOfRange(f"lollipop recursion needs m >= 3, n >= 2, got ({m}, {n})", {"m": m, "n": n})
    alpha = as_alpha(alpha)
    cycle, path = cycle_graph(m), path_graph(n)
    phi_cycle = char_poly(_aalpha_rows(cycle, alpha))
    phi_path = char_poly(_aalpha_rows(path, alpha))
    short_cycle = deleted_char_poly(cycle, [0], alpha, reading)
    short_path = deleted_char_poly(path, [0], alpha, reading)
    return phi_path * short_cycle + phi_cycle * short_path - X * short_path * short_cycle


# Coalesced complete graphs

def _check_complete_params(m: int, n: int, k: int) -> None:
    if m <= 1 or n <= 1 or not 1 <= k < min(m, n):
        raise ParamOutOfRange(
            f"need m, n > 1 and 1 <= k < min(m, n), got m={m}, n={n}, k={k}",
            {"m": m, "n": n, "k": k},
        )


def complete_coalescence(m: int, n: int, k: int) -> Graph:
    return coalesce(complete_graph(m), range(k), complete_graph(n), range(k)).result


def complete_fixed_eigenvalues(m: int, n: int, k: int, alpha: AlphaLike) -> List[Tuple[Fraction, int]]:
    """(eigenvalue, multiplicity) pairs outside the cubic factor."""
    _check_complete_params(m, n, k)
    alpha = as_alpha(alpha)
    groups = [
        (alpha * (m + n - k) - 1, k - 1),
        (alpha * m - 1, m - k - 1),
        (alpha * n - 1, n - k - 1),
    ]
    return [(value, count) for value, count in groups if count > 0]


def complete_quotient_cubic(m: int, n: int, k: int, alpha: AlphaLike) -> RationalPolynomial:
    _check_complete_params(m, n, k)
    a = as_alpha(alpha)
    off = 1 - a
    s = m + n - 2 * k
    head = (X - m + 1 + off * k) * (X - n + 1 + off * k) * (X - a * s + 1 - k)
    tail = off ** 2 * k * (s * X - s * a * k - (m - k) * (n - k - 1) - (n - k) * (m - k - 1))
    return head - tail


def complete_closed_form(m: int, n: int, k: int, alpha: AlphaLike) -> RationalPolynomial:
    """Expanded product of the fixed linear factors and the cubic factor."""
    fixed = complete_fixed_eigenvalues(m, n, k, alpha)
    linear = product(RationalPolynomial.linear(value) ** count for value, count in fixed)
    return linear * complete_quotient_cubic(m, n, k, alpha)


@dataclass(frozen=True)
class ClosedFormEnergyTerms:
    """Mean shift, the cubic (or quadratic) factor and its roots."""
    shift: Fraction
    polynomial: RationalPolynomial
    roots: Tuple[complex, ...]
    residual: float

    def to_json(self, digits: int = 15) -> Dict[str, Any]:
        return {
            "shift": str(self.shift),
            "polynomial": self.polynomial.to_json(),
            "roots": [_format_root(z, digits) for z in self.roots],
            "residual": format_float(self.residual, digits),
        }


def _format_root(z: complex, digits: int) -> str:
    if z.imag == 0:
        return format_float(z.real, digits)
    return f"{format_float(z.real, digits)}{'+' if z.imag > 0 else '-'}{format_float(abs(z.imag), digits)}j"


def _root_residual(p: RationalPolynomial, roots: Sequence[complex]) -> float:
    worst = 0.0
    for z in roots:
        if z.imag == 0:
            worst = max(worst, relative_residual(p, z.real))
        else:
            scale = sum(abs(float(c)) * abs(z) ** i for i, c in enumerate(p.coefficients))
            value = sum(float(c) * z ** i for i, c in enumerate(p.coefficients))
            worst = max(worst, abs(value) / scale if scale else 0.0)
    return worst


def complete_spectrum(
    m: int,
    n: int,
    k: int,
    alpha: AlphaLike,
    settings: NumericSettings = DEFAULT_NUMERIC,
) -> Tuple[SpectrumReport, ClosedFormEnergyTerms]:
    """Fixed eigenvalues plus the three real roots of the cubic factor."""
    alpha = as_alpha(alpha)
    fixed = complete_fixed_eigenvalues(m, n, k, alpha)
    cubic = complete_quotient_cubic(m, n, k, alpha)
    roots = real_roots(cubic, settings.root_residual, settings.newton_iterations)
    if len(roots) != 3:
        raise ConvergenceFailure(
            f"cubic factor for (m={m}, n={n}, k={k}, alpha={alpha}) has {len(roots)} real roots",
            {"roots": roots},
        )
    values = [float(value) for value, count in fixed for _ in range(count)] + roots
    values.sort(reverse=True)
    order = m + n - k
    edges = (m * (m - 1) + n * (n - 1) - k * (k - 1)) // 2
    shift = Fraction(2 * edges, order) * alpha
    report = SpectrumReport(alpha, tuple(values), spectral_energy(values, float(shift)), float(shift))
    terms = ClosedFormEnergyTerms(shift, cubic, tuple(complex(r) for r in roots), _root_residual(cubic, roots))
    return report, terms


# Energy corollaries for coalesced complete graphs

def _check_variant(variant: str, m: int, n: int, k: int) -> None:
    if variant not in ENERGY_VARIANTS:
        raise ParamOutOfRange(f"unknown energy variant {variant!r}", {"variant": variant})
    _check_complete_params(m, n, k)
    rules = {
        "k1": k == 1,
        "k2": k == 2,
        "mm_k": m == n,
        "mm_1": m == n and k == 1,
        "mm_2": m == n and k == 2,
    }
    if not rules.get(variant, True):
        raise ParamOutOfRange(
            f"variant {variant} does not apply to m={m}, n={n}, k={k}",
            {"variant": variant, "m": m, "n": n, "k": k},
        )


def _printed_energy(variant: str, m: int, n: int, k: int, a: Fraction):
    """Printed absolute-value terms (exact) and the printed root polynomial with its shift."""
    off = 1 - a
    if variant == "general":
        fixed = [
            (k - 1) * abs(a * (1 - 2 * k) + Fraction(2 * m * n, m + n - 1) * a - 1),
            (m - k - 1) * abs(a * (1 - k) + a * Fraction(n * (m - n + k), m + n - k) - 1),
            (n - k - 1) * abs(a * (1 - k) + a * Fraction(m * (n - m + k), m + n - k) - 1),
        ]
        shift = a * Fraction(m * m + n * n - k * k - (m + n - k), m + n - k)
        return fixed, complete_quotient_cubic(m, n, k, a), shift
    if variant == "k1":
        s = m + n - 1
        fixed = [
            Fraction(m - 2, s) * abs(a * n * (m - n + 1) - s),
            Fraction(n - 2, s) * abs(a * m * (n - m + 1) - s),
        ]
        shift = a * Fraction(m * m + n * n - m - n, s)
        cubic = (X - m + 2 - a) * (X - n + 2 - a) * (X - a * (m + n - 2)) - off ** 2 * (
            (m + n - 2) * X - (m + n - 2) * a - (m - 1) * (n - 2) - (m - 2) * (n - 1)
        )
        return fixed, cubic, shift
    if variant == "k2":
        s = m + n - 2
        fixed = [
            Fraction(m - 3, s) * abs(a * ((m - n) * (n - 1) + 2) - 1),
            Fraction(n - 3, s) * abs(a * ((n - m) * (m - 1) + 2) - 1),
            Fraction(1, s) * abs(a * (2 * m * n - 3 * m - 3 * n + 6) - 1),
        ]
        shift = a * Fraction(m * (m - 1) + n * (n - 1) - 2, s)
        cubic = (X - m + 3 - 2 * a) * (X - n + 3 - 2 * a) * (X - a * (m + n - 4) - 1) - 2 * off ** 2 * (
            (m + n - 4) * X - (m + n - 4) * 2 * a - (m - 2) * (n - 3) - (m - 3) * (n - 2)
        )
        return fixed, cubic, shift
    if variant == "mm_k":
        fixed = [
            (k - 1) * abs(a * (1 - 2 * k) + a * Fraction(2 * m * m, 2 * m - 1) - 1),
            2 * (m - k - 1) * abs(a * (1 - k) + a * Fraction(m * k, 2 * m - k) - 1),
        ]
        shift = a * Fraction(2 * m * m - k * k - (2 * m - k), 2 * m - k)
        cubic = (X - m + 1 + off * k) ** 2 * (X - 2 * a * (m - k) + 1 - k) - off ** 2 * k * (
            (2 * m - k) * X - 2 * a * k * (m - k) - 2 * (m - k) * (m - k - 1)
        )
        return fixed, cubic, shift
    if variant == "mm_1":
        fixed = [
            Fraction(2 * (m - 2), 2 * m - 1) * (m * (2 - a) - 1),
            abs((2 * m * m * off - 5 * m + 2 - a) / (2 * m - 1)),
        ]
        shift = Fraction(2 * m * (m - 1), 2 * m - 1) * a
        quadratic = X ** 2 - (m - 2 + a * (2 * m - 1)) * X + 2 * (m - 1) * (a * m - 1)
        return fixed, quadratic, shift
    fixed = [
        Fraction(m - 3, m - 1) * abs(2 * a - 1),
        Fraction(1, 2 * m - 2) * abs(a * (2 * m * m - 6 * m + 6) - 1),
        abs((m * m * off - m * (4 - 3 * a) - a + 3) / (m - 1)),
    ]
    shift = a * Fraction(m * (m - 1) - 1, m - 1)
    quadratic = X ** 2 - (m - 2 + 2 * a * (m - 1)) * X + 2 * a * m * m - m * (2 * a + 3) - 2 * a + 5
    return fixed, quadratic, shift


def _spectral_groups(variant: str, m: int, n: int, k: int, a: Fraction) -> List[Tuple[int, Fraction]]:
    """(multiplicity, eigenvalue) pairs matching the printed fixed terms one for one."""
    if variant == "general":
        return [(k - 1, a * (m + n - k) - 1), (m - k - 1, a * m - 1), (n - k - 1, a * n - 1)]
    if variant == "k1":
        return [(m - 2, a * m - 1), (n - 2, a * n - 1)]
    if variant == "k2":
        return [(m - 3, a * m - 1), (n - 3, a * n - 1), (1, a * (m + n - 2) - 1)]
    if variant == "mm_k":
        return [(k - 1, a * (2 * m - k) - 1), (2 * (m - k - 1), a * m - 1)]
    if variant == "mm_1":
        return [(2 * (m - 2), a * m - 1), (1, m - 2 + a)]
    return [(2 * (m - 3), a * m - 1), (1, a * (2 * m - 2) - 1), (1, m - 3 + 2 * a)]


@dataclass(frozen=True)
class EnergyCorollaryResult:
    variant: str
    m: int
    n: int
    k: int
    alpha: Fraction
    value: float
    direct: float
    terms: ClosedFormEnergyTerms
    printed_terms: Tuple[float, ...]
    expected_terms: Tuple[float, ...]
    matches_direct: bool
    mismatch_location: Optional[int] = None

    def to_json(self, digits: int = 15) -> Dict[str, Any]:
        return {
            "variant": self.variant,
            "m": self.m,
            "n": self.n,
            "k": self.k,
            "alpha": str(self.alpha),
            "value": format_float(self.value, digits),
            "direct": format_float(self.direct, digits),
            "matches_direct": self.matches_direct,
            "mismatch_location": self.mismatch_location,
            "printed_terms": [format_float(v, digits) for v in self.printed_terms],
            "expected_terms": [format_float(v, digits) for v in self.expected_terms],
            "terms": self.terms.to_json(digits),
        }


def _close(a: float, b: float, tolerance: float) -> bool:
    return abs(a - b) <= tolerance * max(1.0, abs(b))


def energy_corollary(
    m: int,
    n: int,
    k: int,
    alpha: AlphaLike,
    variant: str = "general",
    settings: NumericSettings = DEFAULT_NUMERIC,
) -> EnergyCorollaryResult:
    """
    Evaluate a printed energy closed form term by term and compare it with
    the energy of the actual coalescence. Each printed term is paired with
    multiplicity * |eigenvalue - shift| for the corresponding eigenvalue
    group, or |root - shift| for the roots of the remaining factor of the
    exact characteristic polynomial. `mismatch_location` is the 1-based
    index of the first printed term that disagrees.
    """
    a = as_alpha(alpha)
    _check_variant(variant, m, n, k)
    printed_fixed, printed_poly, printed_shift = _printed_energy(variant, m, n, k, a)
    printed_roots = all_roots(printed_poly)
    printed = [float(t) for t in printed_fixed]
    printed += [abs(z - float(printed_shift)) for z in printed_roots]

    graph = complete_coalescence(m, n, k)
    direct_report = eigenvalues(graph, a, settings)
    shift = mean_shift(graph, a)
    remaining = char_poly(_aalpha_rows(graph, a))
    groups = _spectral_groups(variant, m, n, k, a)
    for count, value in groups:
        if count > 0:
            remaining, remainder = divmod(remaining, RationalPolynomial.linear(value) ** count)
            if not remainder.is_zero():
                raise SpectralError(
                    f"eigenvalue {value} is not a {count}-fold factor",
                    {"variant": variant, "value": str(value), "multiplicity": count},
                )
    roots = real_roots(remaining, settings.root_residual, settings.newton_iterations)
    expected = [float(count * abs(value - shift)) for count, value in groups]
    expected += [abs(r - float(shift)) for r in roots]

    mismatch = None
    tolerance = settings.eigen_residual
    for index in range(max(len(printed), len(expected))):
        if index >= len(printed) or index >= len(expected) or not _close(printed[index], expected[index], tolerance):
            mismatch = index + 1
            break

    value = math.fsum(printed)
    terms = ClosedFormEnergyTerms(
        printed_shift, printed_poly, tuple(printed_roots), _root_residual(printed_poly, printed_roots)
    )
    result = EnergyCorollaryResult(
        variant, m, n, k, a, value, direct_report.energy, terms,
        tuple(printed), tuple(expected),
        _close(value, direct_report.energy, tolerance), mismatch,
    )
    if mismatch is not None:
        logger.debug(f"energy_corollary {variant} ({m},{n},{k},{a}): first divergent term {mismatch}")
    return result
