"""Exception hierarchy for coalesce."""
import datetime
from typing import Any, Dict, Optional


class CoalesceError(Exception):
    """Base exception class for coalesce errors"""
    def __init__(self, message, details=None):
        super().__init__(message)
        self.message = message
        self.details = details or {}
        self.timestamp = datetime.datetime.now(datetime.timezone.utc).isoformat()

    def to_dict(self) -> Dict[str, Any]:
        """Serialisable view; the timestamp is left out so reports stay reproducible."""
        return {
            "type": type(self).__name__,
            "message": self.message,
            "details": self.details,
        }


class ConfigError(CoalesceError, ValueError):
    """Raised when configuration values are invalid"""
    pass


# Graph construction and parsing
class GraphError(CoalesceError):
    """Raised when a graph is malformed or unsuitable"""
    pass


class OrderTooSmall(GraphError):
    """Raised when a family member is requested below its minimum order"""
    pass


class InvalidVertex(GraphError):
    """Raised on an out-of-range or repeated vertex index"""
    pass


class EmptyGraph(GraphError):
    """Raised when an operation needs at least one vertex"""
    pass


class SelfLoop(GraphError):
    """Raised when an edge joins a vertex to itself"""
    pass


class DuplicateEdge(GraphError):
    """Raised when an edge appears twice"""
    pass


class ParseError(GraphError):
    """Raised when an edge-list document cannot be read"""
    def __init__(self, message, line: Optional[int] = None, details=None):
        details = dict(details or {})
        if line is not None:
            details["line"] = line
        super().__init__(f"line {line}: {message}" if line is not None else message, details)
        self.line = line


class Disconnected(GraphError):
    """Raised when a distance-based quantity meets a disconnected graph"""
    def __init__(self, u: int, v: int):
        super().__init__(f"no path between vertices {u} and {v}", {"pair": [u, v]})
        self.pair = (u, v)


# Coalescence
class CoalescenceError(CoalesceError):
    """Raised when two graphs cannot be merged as requested"""
    pass


class NotAClique(CoalescenceError):
    """Raised when a clique specification does not induce a clique"""
    pass


class SizeMismatch(CoalescenceError):
    """Raised when the two clique specifications differ in length"""
    pass


# Exact searches
class SearchError(CoalesceError):
    """Raised when an exact search cannot be completed"""
    pass


class BudgetExceeded(SearchError):
    """Raised when a graph is larger than the exact-search budget"""
    def __init__(self, invariant: str, n: int, limit: int):
        super().__init__(
            f"{invariant}: {n} vertices exceeds the exact-search limit of {limit}",
            {"invariant": invariant, "n": n, "limit": limit},
        )
        self.invariant = invariant


# Spectra
class SpectralError(CoalesceError):
    """Raised when a matrix computation fails"""
    pass


class NotSquare(SpectralError):
    """Raised when a characteristic polynomial is requested for a non-square matrix"""
    pass


class ConvergenceFailure(SpectralError):
    """Raised when the eigensolver or root polishing does not converge"""
    pass


class ParamOutOfRange(CoalesceError, ValueError):
    """Raised when a numeric parameter is outside its documented range"""
    pass


class ZeroDegreeMergeVertex(CoalesceError):
    """Raised when the Narumi-Katayama composition meets a merge vertex of degree 0"""
    pass
