"""
Models for the Djoković-Winkler relation and hypercube coordinates.
"""

from enum import Enum
from functools import cached_property
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from pcube.models.graph import Edge, canonical_edge


class ThetaPartition(BaseModel):
    """Partition of the edge set into classes of the transitive closure of Θ."""

    model_config = ConfigDict(frozen=True)

    classes: tuple[tuple[Edge, ...], ...] = Field(
        description="Edge classes ordered by their smallest (representative) edge"
    )
    transitive: bool = Field(description="True when Θ itself is transitive (Θ = Θ*)")

    @cached_property
    def class_of(self) -> dict[Edge, int]:
        return {edge: k for k, edges in enumerate(self.classes) for edge in edges}

    @property
    def dimension(self) -> int:
        """Number of classes; the isometric dimension i(G) of a partial cube."""
        return len(self.classes)

    def index_of(self, u: int, v: int) -> int:
        return self.class_of[canonical_edge(u, v)]

    def representative(self, k: int) -> Edge:
        return self.classes[k][0]

    def to_json_dict(self) -> dict[str, list[list[int]]]:
        """Class index -> edge list, as the analyze report prints it."""
        return {str(k): [list(edge) for edge in edges] for k, edges in enumerate(self.classes)}


class Halfspaces(BaseModel):
    """The two sides of one Θ-class, oriented by its representative edge (u, v)."""

    model_config = ConfigDict(frozen=True)

    class_index: int
    representative: Edge
    side_w: tuple[int, ...] = Field(description="Vertices strictly closer to u than to v")
    side_wbar: tuple[int, ...] = Field(description="All remaining vertices")
    u_boundary: tuple[int, ...] = Field(description="Endpoints of class edges inside side_w")
    ubar_boundary: tuple[int, ...] = Field(description="Endpoints of class edges inside side_wbar")
    f_edges: tuple[Edge, ...]


class Coordinatization(BaseModel):
    """Bit labels per vertex; bit k is 1 when the vertex lies in side_wbar of class k."""

    model_config = ConfigDict(frozen=True)

    dimension: int
    labels: tuple[str, ...]
    isometric: bool = Field(description="Hamming distance of labels equals graph distance")
    mismatch: Optional[tuple[int, int, int, int]] = Field(
        default=None,
        description="First (u, v, distance, hamming) pair where the check fails",
    )


class WitnessKind(str, Enum):
    EMPTY = "empty"
    DISCONNECTED = "disconnected"
    ODD_CYCLE = "odd_cycle"
    THETA_NOT_TRANSITIVE = "theta_not_transitive"
    HAMMING_MISMATCH = "hamming_mismatch"


class RecognitionWitness(BaseModel):
    """Why a graph is not a partial cube."""

    model_config = ConfigDict(frozen=True)

    kind: WitnessKind
    edges: tuple[Edge, ...] = ()
    vertices: tuple[int, ...] = ()
    detail: str = ""


class RecognitionResult(BaseModel):
    """Partial-cube verdict with the intermediate facts it was derived from."""

    model_config = ConfigDict(frozen=True)

    verdict: bool
    connected: bool
    bipartite: bool
    theta_transitive: Optional[bool] = None
    hamming_isometric: Optional[bool] = None
    witness: Optional[RecognitionWitness] = None
