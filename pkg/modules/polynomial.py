"""
Exact univariate polynomials over the rationals.

Coefficients are stored constant term first. Characteristic polynomials
are computed with the Faddeev-LeVerrier recurrence on an integer matrix
(denominators cleared up front), so every coefficient is exact.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from numbers import Rational
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np

from .errors import ConvergenceFailure, NotSquare

logger = logging.getLogger("coalesce.polynomial")

Scalar = Union[int, Fraction]
Matrix = Sequence[Sequence[Scalar]]


def _fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"exact coefficient expected, got {type(value).__name__}")


@dataclass(frozen=True)
class RationalPolynomial:
    """Polynomial c0 + c1*x + ... + cd*x^d with Fraction coefficients."""
    coefficients: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        coeffs = [_fraction(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    # Constructors

    @classmethod
    def constant(cls, value: Scalar) -> "RationalPolynomial":
        return cls((value,))

    @classmethod
    def x(cls) -> "RationalPolynomial":
        return cls((0, 1))

    @classmethod
    def linear(cls, root: Scalar) -> "RationalPolynomial":
        """The monic factor (x - root)."""
        return cls((-_fraction(root), 1))

    @classmethod
    def from_json(cls, items: Iterable[str]) -> "RationalPolynomial":
        return cls(tuple(Fraction(s) for s in items))

    # Queries

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def leading(self) -> Fraction:
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def is_monic(self) -> bool:
        return self.leading == 1

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self.coefficients):
            return self.coefficients[power]
        return Fraction(0)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coefficients)

    # Arithmetic

    def __add__(self, other):
        other = _coerce(other)
        size = max(len(self.coefficients), len(other.coefficients))
        return RationalPolynomial(
            tuple(self.coefficient(i) + other.coefficient(i) for i in range(size))
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return RationalPolynomial()
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return RationalPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative exponent")
        result = RationalPolynomial.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __divmod__(self, divisor):
        divisor = _coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        remainder = list(self.coefficients)
        quotient = [Fraction(0)] * max(0, len(remainder) - divisor.degree)
        lead = divisor.leading
        while len(remainder) - 1 >= divisor.degree and remainder:
            shift = len(remainder) - 1 - divisor.degree
            factor = remainder[-1] / lead
            quotient[shift] = factor
            for i, c in enumerate(divisor.coefficients):
                remainder[shift + i] -= factor * c
            remainder.pop()
            while remainder and remainder[-1] == 0:
                remainder.pop()
        return RationalPolynomial(tuple(quotient)), RationalPolynomial(tuple(remainder))

    def __floordiv__(self, divisor):
        return divmod(self, divisor)[0]

    def __mod__(self, divisor):
        return divmod(self, divisor)[1]

    def monic(self) -> "RationalPolynomial":
        if self.is_zero():
            return self
        lead = self.leading
        return RationalPolynomial(tuple(c / lead for c in self.coefficients))

    def derivative(self) -> "RationalPolynomial":
        return RationalPolynomial(
            tuple(i * c for i, c in enumerate(self.coefficients) if i > 0)
        )

    def __call__(self, value):
        """Horner evaluation; exact for int/Fraction arguments."""
        result = 0
        for c in reversed(self.coefficients):
            result = result * value + c
        return result

    def evaluate_float(self, value: float) -> float:
        result = 0.0
        for c in reversed(self.coefficients):
            result = result * value + float(c)
        return result

    def float_coefficients(self) -> List[float]:
        """Highest power first, the order numpy.roots expects."""
        return [float(c) for c in reversed(self.coefficients)]

    # Serialisation

    def to_json(self) -> List[str]:
        return [f"{c.numerator}/{c.denominator}" for c in self.coefficients]

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for power in range(self.degree, -1, -1):
            c = self.coefficients[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if power == 0:
                body = str(magnitude)
            else:
                var = "x" if power == 1 else f"x^{power}"
                body = var if magnitude == 1 else f"{magnitude}*{var}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def _coerce(value) -> RationalPolynomial:
    if isinstance(value, RationalPolynomial):
        return value
    return RationalPolynomial.constant(value)


def product(polys: Iterable[RationalPolynomial]) -> RationalPolynomial:
    return reduce(lambda a, b: a * b, polys, RationalPolynomial.constant(1))


def poly_gcd(a: RationalPolynomial, b: RationalPolynomial) -> RationalPolynomial:
    """Monic greatest common divisor (Euclid over Q)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def square_free_decomposition(p: RationalPolynomial) -> List[Tuple[RationalPolynomial, int]]:
    """
    Yun's algorithm: p = lc * prod(a_i ** i) with every a_i square-free and
    pairwise coprime. Returns the non-constant (a_i, i) pairs.
    """
    if p.degree < 1:
        return []
    p = p.monic()
    derivative = p.derivative()
    a = poly_gcd(p, derivative)
    b = p // a
    c = derivative // a
    factors = []
    multiplicity = 1
    while b.degree >= 1:
        d = c - b.derivative()
        a_i = poly_gcd(b, d)
        if a_i.degree >= 1:
            factors.append((a_i, multiplicity))
        b = b // a_i
        c = d // a_i
        multiplicity += 1
    return factors


def relative_residual(p: RationalPolynomial, x: float) -> float:
    scale = math.fsum(abs(float(c)) * abs(x) ** i for i, c in enumerate(p.coefficients))
    return abs(p.evaluate_float(x)) / scale if scale else 0.0


def _polish(p: RationalPolynomial, x: float, iterations: int, residual: float) -> float:
    dp = p.derivative()
    for _ in range(iterations):
        if relative_residual(p, x) <= residual:
            break
        slope = dp.evaluate_float(x)
        if slope == 0.0:
            break
        step = p.evaluate_float(x) / slope
        x -= step
        if step == 0.0:
            break
    return x


def all_roots(p: RationalPolynomial) -> List[complex]:
    """Every complex root by companion-matrix eigenvalues, sorted by real part descending."""
    if p.degree < 1:
        return []
    roots = np.roots(p.float_coefficients())
    return sorted((complex(r) for r in roots), key=lambda z: (-z.real, -z.imag))


def real_roots(
    p: RationalPolynomial,
    residual: float = 1e-12,
    iterations: int = 50,
) -> List[float]:
    """
    Real roots of p, repeated by multiplicity, sorted descending.

    Multiplicities come from an exact square-free decomposition; each
    square-free factor is solved through numpy.roots and the real roots are
    Newton-polished until the relative residual drops to `residual`.
    """
    roots: List[float] = []
    for factor, multiplicity in square_free_decomposition(p):
        if factor.degree == 1:
            found = [float(-factor.coefficient(0) / factor.coefficient(1))]
        else:
            found = []
            for z in np.roots(factor.float_coefficients()):
                z = complex(z)
                if abs(z.imag) > 1e-7 * max(1.0, abs(z.real)):
                    continue
                x = _polish(factor, z.real, iterations, residual)
                if relative_residual(factor, x) > residual:
                    raise ConvergenceFailure(
                        f"root near {x!r} of {factor} did not reach residual {residual}",
                        {"root": x, "residual": relative_residual(factor, x)},
                    )
                found.append(x)
        roots.extend(r for r in found for _ in range(multiplicity))
    roots.sort(reverse=True)
    return roots


def char_poly(matrix: Matrix) -> RationalPolynomial:
    """
    det(xI - M) by the Faddeev-LeVerrier recurrence.

    M is scaled by the lcm L of its denominators; the recurrence on the
    integer matrix B = L*M divides exactly at every step, and the
    coefficients of det(xI - M) are c_i(B) / L^(n-i).
    """
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise NotSquare(
                f"matrix with {n} rows has a row of length {len(row)}",
                {"rows": n, "row_length": len(row)},
            )
    if n == 0:
        return RationalPolynomial.constant(1)

    entries = [[_fraction(v) for v in row] for row in matrix]
    scale = 1
    for row in entries:
        for v in row:
            scale = math.lcm(scale, v.denominator)
    B = np.array([[int(v * scale) for v in row] for row in entries], dtype=object)

    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    identity = np.identity(n, dtype=int).astype(object)
    M = identity
    for step in range(1, n + 1):
        BM = B.dot(M)
        quotient, remainder = divmod(-int(np.trace(BM)), step)
        if remainder:
            raise ArithmeticError(f"non-integral Faddeev-LeVerrier step {step}")
        coeffs[n - step] = quotient
        M = BM + quotient * identity
    logger.debug(f"char_poly: n={n}, scale={scale}")
    return RationalPolynomial(
        tuple(Fraction(c, scale ** (n - i)) for i, c in enumerate(coeffs))
    )
