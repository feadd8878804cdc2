"""Utility functions for argument parsing, number formatting and report rows."""
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .errors import ParamOutOfRange

PASS = "PASS"
FAIL = "FAIL"
SKIPPED = "SKIPPED"
REFUTED = "REFUTED"

_RATIONAL = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?$")
_RANGE = re.compile(r"^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$")


def format_float(value: float, digits: int = 15) -> str:
    """Fixed-precision decimal string; infinities become "Infinite"."""
    if isinstance(value, float) and math.isinf(value):
        return "Infinite" if value > 0 else "-Infinite"
    text = f"{float(value):.{digits}g}"
    return "0" if text == "-0" else text


def parse_alpha(text: str) -> Fraction:
    """Parse "p/q" or an integer; decimals are rejected to keep alpha exact."""
    match = _RATIONAL.match(str(text))
    if not match:
        raise ParamOutOfRange(f"alpha must be written p/q, got {text!r}", {"alpha": text})
    numerator = int(match.group(1))
    denominator = int(match.group(2) or 1)
    if denominator == 0:
        raise ParamOutOfRange("alpha has a zero denominator", {"alpha": text})
    alpha = Fraction(numerator, denominator)
    if not 0 <= alpha <= 1:
        raise ParamOutOfRange(f"alpha must lie in [0, 1], got {alpha}", {"alpha": text})
    return alpha


def parse_alphas(text: str) -> List[Fraction]:
    return [parse_alpha(part) for part in text.split(",") if part.strip()]


def parse_params(text: str) -> Tuple[int, ...]:
    """Comma-separated integers, e.g. "6,6,4"."""
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise ParamOutOfRange(f"parameters must be comma-separated integers, got {text!r}") from None


def parse_range(text: str) -> List[int]:
    """"2..10" (inclusive), a single integer, or a comma list."""
    match = _RANGE.match(text)
    if match:
        lo, hi = int(match.group(1)), int(match.group(2))
        if hi < lo:
            raise ParamOutOfRange(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    return list(parse_params(text))


def parse_grid(text: str) -> Dict[str, List[int]]:
    """Grid spec such as "m=2..10;n=3..6;k=1,2"."""
    grid = {}
    for item in re.split(r"[;\s]+", text.strip()):
        if not item:
            continue
        if "=" not in item:
            raise ParamOutOfRange(f"grid entries look like name=range, got {item!r}")
        name, spec = item.split("=", 1)
        grid[name.strip()] = parse_range(spec)
    return grid


@dataclass
class VerificationRow:
    """One checked statement: what was predicted, what was measured, and the verdict."""
    check: str
    params: Dict[str, Any]
    predicted: Any
    measured: Any
    status: str
    note: Optional[str] = None
    detail: Dict[str, Any] = field(default_factory=dict)

    @property
    def failed(self) -> bool:
        return self.status == FAIL

    def to_json(self, digits: int = 15) -> Dict[str, Any]:
        out = {
            "check": self.check,
            "params": to_jsonable(self.params, digits),
            "predicted": to_jsonable(self.predicted, digits),
            "measured": to_jsonable(self.measured, digits),
            "status": self.status,
        }
        if self.note:
            out["note"] = self.note
        if self.detail:
            out["detail"] = to_jsonable(self.detail, digits)
        return out


def status_counts(rows: Sequence[VerificationRow]) -> Dict[str, int]:
    counts: Dict[str, int] = {}
    for row in rows:
        counts[row.status] = counts.get(row.status, 0) + 1
    return counts


def to_jsonable(value: Any, digits: int = 15) -> Any:
    """Convert report values to JSON-safe data with deterministic float text."""
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float):
        return format_float(value, digits)
    if isinstance(value, dict):
        return {str(k): to_jsonable(v, digits) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v, digits) for v in value]
    if hasattr(value, "to_json"):
        return value.to_json()
    return str(value)
