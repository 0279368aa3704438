"""
Zone graph, tree-zone verdict and Euler-type report models.
"""

from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from pcube.models.cycles import CycleRecord
from pcube.models.events import ViolationEvent
from pcube.models.graph import Edge


class ZoneLink(BaseModel):
    """Two class edges on a common convex cycle; every such cycle is kept."""

    model_config = ConfigDict(frozen=True)

    source: int = Field(description="Index into ZoneGraph.nodes")
    target: int = Field(description="Index into ZoneGraph.nodes, greater than source")
    witnesses: tuple[CycleRecord, ...]


class ZoneGraph(BaseModel):
    """The zone graph of one Θ-class: nodes are the class edges."""

    model_config = ConfigDict(frozen=True)

    class_index: int
    nodes: tuple[Edge, ...]
    links: tuple[ZoneLink, ...] = ()

    @property
    def link_pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple((link.source, link.target) for link in self.links)

    def to_json_dict(self) -> dict:
        return {
            "class_index": self.class_index,
            "nodes": [list(edge) for edge in self.nodes],
            "links": [
                {
                    "nodes": [list(self.nodes[link.source]), list(self.nodes[link.target])],
                    "witnesses": [list(c.vertices) for c in link.witnesses],
                }
                for link in self.links
            ],
        }


class NonTreeReason(str, Enum):
    CYCLE = "cycle"
    DISCONNECTED = "disconnected"


class TreeZoneVerdict(BaseModel):
    """Whether every zone graph is a tree, with the first class that is not."""

    model_config = ConfigDict(frozen=True)

    tree_zone: bool
    first_non_tree_class: Optional[int] = None
    reason: Optional[NonTreeReason] = None
    events: tuple[ViolationEvent, ...] = ()


class EulerReport(BaseModel):
    """The quantity 2n - m - i - ce, which is at most 2 on partial cubes."""

    model_config = ConfigDict(frozen=True)

    n: int
    m: int
    i: int = Field(description="Isometric dimension, the number of Θ-classes")
    ce: int = Field(description="Convex excess")
    value: int
    tree_zone: bool
