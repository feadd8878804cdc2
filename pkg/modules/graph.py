"""
Graph core: canonical simple graphs, the named families, edge-list I/O and
degree/clique queries.

Vertices are contiguous 0-indexed integers and edges are stored as sorted
(u, v) pairs with u < v, so two graphs compare equal exactly when their
labelled edge sets agree.
"""
import hashlib
import random
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from itertools import combinations
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from .errors import (
    DuplicateEdge,
    EmptyGraph,
    InvalidVertex,
    OrderTooSmall,
    ParseError,
    SelfLoop,
)

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""
    n: int
    edges: Tuple[Edge, ...] = field(default=())

    def __post_init__(self):
        if self.n < 0:
            raise InvalidVertex(f"vertex count must be non-negative, got {self.n}")
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}", {"vertex": u})
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidVertex(
                    f"edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}",
                    {"edge": [u, v], "n": self.n},
                )
            key = (min(u, v), max(u, v))
            if key in seen:
                raise DuplicateEdge(f"duplicate edge {key}", {"edge": list(key)})
            seen.add(key)
        object.__setattr__(self, "edges", tuple(sorted(seen)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """Build a graph, canonicalising edge orientation and order."""
        return cls(n, tuple((int(u), int(v)) for u, v in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> Tuple[FrozenSet[int], ...]:
        nbrs: List[set] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    def _check(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise InvalidVertex(f"vertex {v} outside 0..{self.n - 1}", {"vertex": v, "n": self.n})

    def neighbors(self, v: int) -> FrozenSet[int]:
        self._check(v)
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return v in self.adjacency[u]

    def degrees(self) -> Tuple[int, ...]:
        return tuple(len(s) for s in self.adjacency)

    @cached_property
    def nx_view(self) -> nx.Graph:
        """Frozen networkx copy on nodes 0..n-1 for path and flow queries."""
        view = nx.Graph()
        view.add_nodes_from(range(self.n))
        view.add_edges_from(self.edges)
        return nx.freeze(view)

    def is_connected(self) -> bool:
        """True for connected graphs; the empty graph counts as connected."""
        if self.n == 0:
            return True
        return nx.is_connected(self.nx_view)

    def induced_subgraph(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced on `vertices`, relabelled 0.. in the given order."""
        for v in vertices:
            self._check(v)
        index = {v: i for i, v in enumerate(vertices)}
        if len(index) != len(vertices):
            raise InvalidVertex("repeated vertex in induced subgraph", {"vertices": list(vertices)})
        edges = [
            (index[u], index[v]) for u, v in self.edges if u in index and v in index
        ]
        return Graph.from_edges(len(vertices), edges)

    def without(self, vertices: Iterable[int]) -> "Graph":
        """Delete `vertices` and relabel the survivors in increasing order."""
        drop = set(vertices)
        for v in drop:
            self._check(v)
        return self.induced_subgraph([v for v in range(self.n) if v not in drop])

    def complement(self) -> "Graph":
        return Graph.from_edges(
            self.n,
            [(u, v) for u, v in combinations(range(self.n), 2) if v not in self.adjacency[u]],
        )

    def fingerprint(self) -> str:
        """sha256 of the serialised edge list."""
        return hashlib.sha256(serialize_graph(self).encode("ascii")).hexdigest()


class Family(Enum):
    """Basic named families."""
    COMPLETE = "complete"
    CYCLE = "cycle"
    PATH = "path"
    STAR = "star"


_MIN_ORDER = {Family.COMPLETE: 1, Family.CYCLE: 3, Family.PATH: 1, Family.STAR: 1}


@dataclass(frozen=True)
class FamilyKind:
    tag: Family
    order: int


@dataclass(frozen=True)
class DegreeProfile:
    degrees: Tuple[int, ...]
    max_degree: int
    min_degree: int

    @property
    def is_regular(self) -> bool:
        return self.max_degree == self.min_degree


def generate(kind: FamilyKind) -> Graph:
    """
    Canonical labelled member of a basic family.

    Paths run 0-1-...-(n-1) so both 0 and n-1 are pendant; cycles close
    (n-1)-0; the star has vertex 0 as its center.
    """
    n = kind.order
    if n < _MIN_ORDER[kind.tag]:
        raise OrderTooSmall(
            f"{kind.tag.value} needs order >= {_MIN_ORDER[kind.tag]}, got {n}",
            {"family": kind.tag.value, "order": n},
        )
    if kind.tag is Family.COMPLETE:
        edges = list(combinations(range(n), 2))
    elif kind.tag is Family.CYCLE:
        edges = [(i, (i + 1) % n) for i in range(n)]
    elif kind.tag is Family.PATH:
        edges = [(i, i + 1) for i in range(n - 1)]
    else:
        edges = [(0, i) for i in range(1, n)]
    return Graph.from_edges(n, edges)


def complete_graph(n: int) -> Graph:
    return generate(FamilyKind(Family.COMPLETE, n))


def cycle_graph(n: int) -> Graph:
    return generate(FamilyKind(Family.CYCLE, n))


def path_graph(n: int) -> Graph:
    return generate(FamilyKind(Family.PATH, n))


def star_graph(n: int) -> Graph:
    return generate(FamilyKind(Family.STAR, n))


def is_clique(g: Graph, vertices: Sequence[int]) -> bool:
    """True iff every pair of `vertices` is adjacent; empty and singleton lists are cliques."""
    for v in vertices:
        g._check(v)
    if len(set(vertices)) != len(vertices):
        raise InvalidVertex("repeated vertex in clique list", {"vertices": list(vertices)})
    return all(g.has_edge(u, v) for u, v in combinations(vertices, 2))


def find_clique(g: Graph, k: int) -> Optional[Tuple[int, ...]]:
    """Lexicographically first k-clique of g, or None."""
    if k < 1 or k > g.n:
        return None

    def extend(chosen: List[int], candidates: List[int]) -> Optional[Tuple[int, ...]]:
        if len(chosen) == k:
            return tuple(chosen)
        for i, v in enumerate(candidates):
            found = extend(chosen + [v], [w for w in candidates[i + 1:] if w in g.adjacency[v]])
            if found:
                return found
        return None

    return extend([], list(range(g.n)))


def degree_profile(g: Graph) -> DegreeProfile:
    if g.n == 0:
        raise EmptyGraph("degree profile of a graph with no vertices")
    degrees = g.degrees()
    return DegreeProfile(degrees, max(degrees), min(degrees))


def random_connected_graph(n: int, density: float, rng: random.Random) -> Graph:
    """Random spanning tree on n vertices plus each remaining pair with probability `density`."""
    if n < 1:
        raise OrderTooSmall(f"random graph needs n >= 1, got {n}")
    order = list(range(n))
    rng.shuffle(order)
    edges = set()
    for i in range(1, n):
        u, v = order[i], order[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    for u, v in combinations(range(n), 2):
        if (u, v) not in edges and rng.random() < density:
            edges.add((u, v))
    return Graph.from_edges(n, edges)


def parse_graph(text: str) -> Graph:
    """
    Read the edge-list format: a header line "n m" followed by exactly m
    lines "u v". Trailing blank lines and a missing final newline are
    accepted.
    """
    lines = text.split("\n")
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise ParseError("empty document", line=1)

    def ints(lineno: int, raw: str) -> Tuple[int, int]:
        parts = raw.split()
        if len(parts) != 2:
            raise ParseError(f"expected two integers, got {raw!r}", line=lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"expected two integers, got {raw!r}", line=lineno) from None
        if a < 0 or b < 0:
            raise ParseError(f"negative value in {raw!r}", line=lineno)
        return a, b

    n, m = ints(1, lines[0])
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"header announces {m} edges, found {len(body)}", line=1)
    seen = set()
    edges = []
    for offset, raw in enumerate(body, start=2):
        u, v = ints(offset, raw)
        if u == v:
            raise SelfLoop(f"line {offset}: self-loop at vertex {u}", {"line": offset, "vertex": u})
        if u >= n or v >= n:
            raise ParseError(f"vertex out of range 0..{n - 1} in {raw!r}", line=offset)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdge(f"line {offset}: duplicate edge {key}", {"line": offset, "edge": list(key)})
        seen.add(key)
        edges.append(key)
    return Graph.from_edges(n, edges)


def serialize_graph(g: Graph) -> str:
    """Canonical newline-terminated edge list, edges sorted with u < v."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
