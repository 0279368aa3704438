"""
Models for traverses between Θ-related edges and the geodesic claims around them.
"""

from enum import Enum
from typing import Optional, Union

from pydantic import BaseModel, ConfigDict, Field

from pcube.models.cycles import CycleRecord
from pcube.models.events import BudgetEvent, ViolationEvent
from pcube.models.graph import Edge

Event = Union[ViolationEvent, BudgetEvent]


class Traverse(BaseModel):
    """A chain of isometric cycles from (v1, u1) to (v2, u2) with two geodesic sides."""

    model_config = ConfigDict(frozen=True)

    cycles: tuple[CycleRecord, ...]
    start_edge: Edge = Field(description="(v1, u1), v1 on the W side of the class")
    end_edge: Edge = Field(description="(v2, u2), v2 on the same side as v1")
    v_side: tuple[int, ...] = Field(description="Vertex path v1 .. v2")
    u_side: tuple[int, ...] = Field(description="Vertex path u1 .. u2")
    length: int
    convex: bool

    def to_json_dict(self) -> dict:
        return {
            "cycles": [list(c.vertices) for c in self.cycles],
            "start_edge": list(self.start_edge),
            "end_edge": list(self.end_edge),
            "v_side": list(self.v_side),
            "u_side": list(self.u_side),
            "length": self.length,
            "convex": self.convex,
        }


class TraverseClause(str, Enum):
    EMPTY = "empty"
    NOT_ISOMETRIC = "cycle_not_isometric"
    START_EDGE = "start_edge_placement"
    END_EDGE = "end_edge_placement"
    NOT_THETA_RELATED = "endpoints_not_theta_related"
    CONSECUTIVE = "consecutive_cycles_share_one_class_edge"
    NON_CONSECUTIVE = "non_consecutive_cycles_disjoint"
    SIDE_PATH = "side_is_not_a_path"
    SIDE_GEODESIC = "side_is_not_a_geodesic"
    SIDE_LENGTH = "side_length_mismatch"
    CONVEX_FLAG = "convex_flag_mismatch"


class TraverseCheck(BaseModel):
    """Outcome of validating a traverse; clause names the first violated condition."""

    model_config = ConfigDict(frozen=True)

    valid: bool
    clause: Optional[TraverseClause] = None
    detail: str = ""


class TraverseSearch(BaseModel):
    """Traverses found between two Θ-related edges, in lexicographic cycle order."""

    model_config = ConfigDict(frozen=True)

    traverses: tuple[Traverse, ...] = ()
    truncated: bool = Field(
        default=False,
        description="More than the limit exist, or the search ran out of budget",
    )
    budget_exhausted: bool = False
    events: tuple[Event, ...] = ()


class PasteCycleWitness(BaseModel):
    """A convex cycle glued onto the sub-path p[start..end] of a geodesic p."""

    model_config = ConfigDict(frozen=True)

    cycle: CycleRecord
    start: int
    end: int


class Possibility(str, Enum):
    SIDE_OF_TRAVERSE = "side_of_traverse"
    CYCLE = "cycle"
    VIOLATION = "violation"


class TwoPossibilities(BaseModel):
    """Which of the two alternatives holds for a geodesic between matched endpoints."""

    model_config = ConfigDict(frozen=True)

    branch: Possibility
    traverse: Optional[Traverse] = None
    witness: Optional[PasteCycleWitness] = None
    events: tuple[Event, ...] = ()
