"""
Graph and distance-matrix models shared by every service.
"""

from functools import cached_property
from typing import Iterable, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

Edge = tuple[int, int]

UNREACHABLE = -1


def canonical_edge(u: int, v: int) -> Edge:
    """Return the unordered pair (u, v) as (min, max)."""
    return (u, v) if u < v else (v, u)


class Graph(BaseModel):
    """Immutable simple graph on dense vertices 0..n-1."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=0, description="Vertex count")
    edges: tuple[Edge, ...] = Field(
        default=(), description="Sorted canonical edge list, u < v"
    )
    labels: Optional[tuple[str, ...]] = Field(
        default=None, description="Optional display label per vertex"
    )

    @model_validator(mode="after")
    def _check_structure(self) -> "Graph":
        previous: Optional[Edge] = None
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge ({u}, {v}) is not canonical for n={self.n}")
            if previous is not None and (u, v) <= previous:
                raise ValueError("edges must be sorted and free of duplicates")
            previous = (u, v)
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError(f"expected {self.n} labels, got {len(self.labels)}")
        return self

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Optional[Iterable[str]] = None,
    ) -> "Graph":
        """Build a graph from edges in any orientation and order."""
        raw = list(edges)
        if any(u == v for u, v in raw):
            raise ValueError("loops are not allowed")
        normalized = sorted({canonical_edge(u, v) for u, v in raw})
        return cls(
            n=n,
            edges=tuple(normalized),
            labels=tuple(labels) if labels is not None else None,
        )

    @property
    def m(self) -> int:
        """Edge count."""
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbor tuple per vertex."""
        neighbors: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            neighbors[u].append(v)
            neighbors[v].append(u)
        return tuple(tuple(sorted(row)) for row in neighbors)

    @cached_property
    def adjacency_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(row) for row in self.adjacency)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {edge: i for i, edge in enumerate(self.edges)}

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency_sets[u]

    def label(self, v: int) -> str:
        """Display label of v, falling back to its index."""
        if self.labels is None:
            return str(v)
        return self.labels[v]

    def same_structure(self, other: "Graph") -> bool:
        """Equal as labeled graphs, ignoring display labels."""
        return self.n == other.n and self.edges == other.edges

    # Cached properties live in __dict__, so equality is spelled out on fields.
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n, self.edges, self.labels) == (other.n, other.edges, other.labels)

    def __hash__(self) -> int:
        return hash((self.n, self.edges, self.labels))

    def __repr__(self) -> str:
        return f"<Graph(n={self.n}, m={self.m})>"


class DistanceMatrix(BaseModel):
    """All-pairs hop distances; UNREACHABLE (-1) marks disconnected pairs."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    dist: np.ndarray

    @model_validator(mode="after")
    def _freeze(self) -> "DistanceMatrix":
        if self.dist.ndim != 2 or self.dist.shape[0] != self.dist.shape[1]:
            raise ValueError("distance matrix must be square")
        self.dist.setflags(write=False)
        return self

    @property
    def n(self) -> int:
        return int(self.dist.shape[0])

    def d(self, u: int, v: int) -> int:
        return int(self.dist[u, v])

    def reachable(self, u: int, v: int) -> bool:
        return bool(self.dist[u, v] != UNREACHABLE)

    @cached_property
    def is_connected(self) -> bool:
        return self.n > 0 and bool((self.dist != UNREACHABLE).all())

    @cached_property
    def diameter(self) -> Optional[int]:
        """Largest finite distance, None when disconnected or empty."""
        if not self.is_connected:
            return None
        return int(self.dist.max())


class BasicInvariants(BaseModel):
    """Elementary invariants reported for every graph."""

    model_config = ConfigDict(frozen=True)

    n: int
    m: int
    connected: bool
    bipartite: bool
    girth: Optional[int] = Field(default=None, description="None for forests")
    min_degree: int
    max_degree: int
    regular: bool
    diameter: Optional[int] = None
