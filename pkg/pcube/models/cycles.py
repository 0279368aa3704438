"""
Models for enumerated cycles, their intersections and intertwinings.
"""

from enum import Enum
from functools import cached_property

from pydantic import BaseModel, ConfigDict, Field, model_validator

from pcube.models.graph import Edge, canonical_edge


def canonical_rotation(vertices: tuple[int, ...]) -> tuple[int, ...]:
    """Rotate so the smallest vertex is first, then read toward its smaller neighbor."""
    start = vertices.index(min(vertices))
    forward = vertices[start:] + vertices[:start]
    backward = (forward[0],) + tuple(reversed(forward[1:]))
    return forward if forward[1] <= backward[1] else backward


class CycleRecord(BaseModel):
    """A cycle given by its canonical cyclic vertex order."""

    model_config = ConfigDict(frozen=True)

    vertices: tuple[int, ...]
    isometric: bool = False
    convex: bool = False

    @model_validator(mode="after")
    def _check_canonical(self) -> "CycleRecord":
        if len(self.vertices) < 3 or len(set(self.vertices)) != len(self.vertices):
            raise ValueError(f"not a cycle: {self.vertices}")
        if canonical_rotation(self.vertices) != self.vertices:
            raise ValueError(f"cycle {self.vertices} is not in canonical rotation")
        return self

    @classmethod
    def from_sequence(
        cls, vertices: tuple[int, ...] | list[int], isometric: bool = False, convex: bool = False
    ) -> "CycleRecord":
        return cls(
            vertices=canonical_rotation(tuple(vertices)),
            isometric=isometric,
            convex=convex,
        )

    @property
    def length(self) -> int:
        return len(self.vertices)

    @cached_property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    @cached_property
    def edge_list(self) -> tuple[Edge, ...]:
        """Edges in cyclic order; edge i joins positions i and i+1."""
        k = len(self.vertices)
        return tuple(
            canonical_edge(self.vertices[i], self.vertices[(i + 1) % k]) for i in range(k)
        )

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edge_list)

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (self.length, self.vertices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CycleRecord):
            return NotImplemented
        return self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)


CycleSet = tuple[CycleRecord, ...]


class IntersectionKind(str, Enum):
    EMPTY = "empty"
    SINGLE_VERTEX = "single_vertex"
    SINGLE_EDGE = "single_edge"
    PATH = "path"
    OTHER = "other"


class IntersectionResult(BaseModel):
    """How two cycles meet; shared_path is set for single_edge and path."""

    model_config = ConfigDict(frozen=True)

    kind: IntersectionKind
    shared_path: tuple[int, ...] = ()

    @property
    def m(self) -> int:
        return max(len(self.shared_path) - 1, 0)


class IntertwiningRecord(BaseModel):
    """Two isometric cycles sharing exactly one path of m >= 2 edges."""

    model_config = ConfigDict(frozen=True)

    c1: CycleRecord
    c2: CycleRecord
    shared_path: tuple[int, ...]
    m: int = Field(ge=2)
    n1: int
    n2: int
    residue: int

    @model_validator(mode="after")
    def _check_residue(self) -> "IntertwiningRecord":
        if self.m != len(self.shared_path) - 1:
            raise ValueError("m must equal the number of shared path edges")
        by_halves = self.n1 + self.n2
        by_lengths = (self.c1.length + self.c2.length - 4 * self.m) // 2
        if self.residue != by_halves or self.residue != by_lengths:
            raise ValueError(
                f"residue mismatch: n1+n2={by_halves}, (l1+l2-4m)/2={by_lengths}"
            )
        return self

    @property
    def within_half_bound(self) -> bool:
        """m is at most half of either cycle length."""
        return 2 * self.m <= self.c1.length and 2 * self.m <= self.c2.length


class XEmbedding(BaseModel):
    """An isometric copy of the fixed graph X: template label -> host vertex."""

    model_config = ConfigDict(frozen=True)

    mapping: dict[str, int]

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(self.mapping.values())
