"""
Immutable simple undirected graphs with stable integer vertex IDs.

Provides the Graph and Density value types, the line-oriented edge-list
codec and neighborhood/ball queries.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, total_ordering
from typing import Iterable, Mapping

import networkx as nx

logger = logging.getLogger(__name__)


class GraphDomainError(ValueError):
    """Raised for unknown vertices, self-loops and invalid radii."""


class EdgeListError(ValueError):
    """Raised when edge-list text cannot be parsed."""

    def __init__(self, line_number: int, message: str):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")


@total_ordering
@dataclass(frozen=True)
class Density:
    """
    Exact edge density |E|/|V| of some graph.

    Kept as the (edges, vertices) pair so reports can show what was
    measured; comparisons use cross-multiplication.
    """
    edges: int
    vertices: int = 1

    def __post_init__(self):
        if self.vertices < 1:
            raise ValueError("Density denominator must be at least 1")
        if self.edges < 0:
            raise ValueError("Density numerator must be non-negative")

    @property
    def value(self) -> Fraction:
        return Fraction(self.edges, self.vertices)

    def _cross(self, other) -> tuple[int, int]:
        if isinstance(other, Density):
            return self.edges * other.vertices, other.edges * self.vertices
        other = Fraction(other)
        return self.edges * other.denominator, other.numerator * self.vertices

    def __eq__(self, other):
        if not isinstance(other, (Density, Fraction, int)):
            return NotImplemented
        left, right = self._cross(other)
        return left == right

    def __lt__(self, other):
        if not isinstance(other, (Density, Fraction, int)):
            return NotImplemented
        left, right = self._cross(other)
        return left < right

    def __hash__(self):
        return hash(self.value)

    def __str__(self):
        return f"{self.edges}/{self.vertices}"


@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph.

    adjacency maps every vertex to the frozenset of its neighbors. Use
    Graph.from_edges() to build one; the constructor only validates.
    """
    adjacency: Mapping[int, frozenset[int]] = field(default_factory=dict)

    def __post_init__(self):
        for v, nbrs in self.adjacency.items():
            if not isinstance(v, int) or v < 0:
                raise GraphDomainError(f"Vertex IDs must be non-negative integers, got {v!r}")
            if v in nbrs:
                raise GraphDomainError(f"Self-loop at vertex {v}")
            for u in nbrs:
                if v not in self.adjacency.get(u, ()):
                    raise GraphDomainError(f"Adjacency is not symmetric for edge {v}-{u}")

    # ------------------------------------------------------------------
    # Construction

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], vertices: Iterable[int] = ()) -> Graph:
        """
        Build a graph from an edge iterable plus optional isolated vertices.

        Duplicate edges are collapsed; a self-loop raises GraphDomainError.
        """
        adjacency: dict[int, set[int]] = {v: set() for v in vertices}
        for u, v in edges:
            if u == v:
                raise GraphDomainError(f"Self-loop at vertex {u}")
            adjacency.setdefault(u, set()).add(v)
            adjacency.setdefault(v, set()).add(u)
        return cls({v: frozenset(nbrs) for v, nbrs in sorted(adjacency.items())})

    # ------------------------------------------------------------------
    # Basic queries

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.adjacency))

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (u, v)
            for u in self.vertices
            for v in sorted(self.adjacency[u])
            if u < v
        )

    @property
    def order(self) -> int:
        return len(self.adjacency)

    @property
    def size(self) -> int:
        return len(self.edges)

    def __contains__(self, v) -> bool:
        return v in self.adjacency

    def __len__(self) -> int:
        return len(self.adjacency)

    def neighbors(self, v: int) -> frozenset[int]:
        """Open neighborhood N(v)."""
        try:
            return self.adjacency[v]
        except KeyError:
            raise GraphDomainError(f"Unknown vertex {v}") from None

    def closed_neighbors(self, v: int) -> frozenset[int]:
        """Closed neighborhood N[v]."""
        return self.neighbors(v) | {v}

    def closed_neighborhood_of(self, vertices: Iterable[int]) -> frozenset[int]:
        """N[A] for a vertex set A."""
        result: set[int] = set()
        for v in vertices:
            result |= self.closed_neighbors(v)
        return frozenset(result)

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency.get(u, ())

    @cached_property
    def max_degree(self) -> int:
        return max((len(nbrs) for nbrs in self.adjacency.values()), default=0)

    def density(self) -> Density:
        return Density(self.size, max(self.order, 1))

    # ------------------------------------------------------------------
    # Derived graphs

    def induced_subgraph(self, vertices: Iterable[int]) -> Graph:
        keep = frozenset(vertices)
        unknown = keep - self.adjacency.keys()
        if unknown:
            raise GraphDomainError(f"Unknown vertices {sorted(unknown)}")
        return Graph({v: self.adjacency[v] & keep for v in sorted(keep)})

    def without(self, vertices: Iterable[int]) -> Graph:
        """The graph with the given vertices (and their edges) removed."""
        drop = frozenset(vertices)
        return self.induced_subgraph(v for v in self.adjacency if v not in drop)

    @cached_property
    def nx(self) -> nx.Graph:
        """Frozen networkx view, built once per graph."""
        view = nx.Graph()
        view.add_nodes_from(self.vertices)
        view.add_edges_from(self.edges)
        return nx.freeze(view)

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return f"Graph(order={self.order}, size={self.size})"


# ----------------------------------------------------------------------
# Neighborhood queries

def ball(G: Graph, v: int, r: int) -> frozenset[int]:
    """
    Vertices at distance at most r from v, v included.

    Args:
        G: The graph
        v: Center vertex
        r: Radius (>= 0)

    Returns:
        frozenset of vertex IDs
    """
    if v not in G:
        raise GraphDomainError(f"Unknown vertex {v}")
    if r < 0:
        raise GraphDomainError(f"Radius must be non-negative, got {r}")
    return frozenset(nx.single_source_shortest_path_length(G.nx, v, cutoff=r))


# ----------------------------------------------------------------------
# Edge-list codec

def load_edge_list(text: str) -> Graph:
    """
    Parse line-oriented edge-list text.

    Each non-comment line is "u v" with distinct non-negative integers;
    '#' starts a comment and blank lines are skipped. A line holding a
    single integer declares an isolated vertex.

    Raises:
        EdgeListError: malformed line or self-loop, with its line number
    """
    edges: list[tuple[int, int]] = []
    isolated: list[int] = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) not in (1, 2) or not all(p.isascii() and p.isdigit() for p in parts):
            raise EdgeListError(line_number, f"expected 'u v' with non-negative integers, got {raw.strip()!r}")
        if len(parts) == 1:
            isolated.append(int(parts[0]))
            continue
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise EdgeListError(line_number, f"self-loop at vertex {u}")
        edges.append((u, v))

    graph = Graph.from_edges(edges, isolated)
    logger.debug(f"Loaded edge list with {graph.order} vertices and {graph.size} edges")
    return graph


def dump_edge_list(G: Graph) -> str:
    """
    Render a graph in edge-list format, sorted and deduplicated.

    Isolated vertices are written as single-integer lines after the edges.
    """
    lines = [f"{u} {v}" for u, v in G.edges]
    lines.extend(str(v) for v in G.vertices if not G.adjacency[v])
    return "\n".join(lines) + ("\n" if lines else "")
