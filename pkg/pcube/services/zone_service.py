"""Zone service: zone graphs, the tree-zone test, convex excess and the Euler report."""

import logging
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from pcube.codecs.graph6 import write_graph6
from pcube.core.exceptions import ClassIndexError, MalformedCycleError
from pcube.models.census import CheckName
from pcube.models.cycles import CycleRecord
from pcube.models.events import ViolationEvent
from pcube.models.graph import Graph
from pcube.models.zones import (
    EulerReport,
    NonTreeReason,
    TreeZoneVerdict,
    ZoneGraph,
    ZoneLink,
)
from pcube.services.cycle_service import CycleService

logger = logging.getLogger(__name__)


def convex_excess(convex_cycles: Iterable[CycleRecord]) -> int:
    """Sum of (|C| - 4) / 2 over the convex cycles."""
    total = 0
    for cycle in convex_cycles:
        if cycle.length % 2:
            raise MalformedCycleError(f"odd convex cycle {cycle.vertices}")
        total += (cycle.length - 4) // 2
    return total


def zone_is_connected(zone: ZoneGraph) -> bool:
    size = len(zone.nodes)
    if size <= 1:
        return True
    pairs = zone.link_pairs
    rows = [s for s, _ in pairs]
    cols = [t for _, t in pairs]
    adjacency = csr_matrix((np.ones(len(pairs), dtype=np.int8), (rows, cols)), shape=(size, size))
    count, _ = connected_components(adjacency, directed=False)
    return count == 1


def euler_events(report: EulerReport, graph6: str) -> list[ViolationEvent]:
    """Violations of value <= 2 and of (value == 2) iff tree-zone."""
    events = []
    witness = report.model_dump()
    if report.value > 2:
        events.append(
            ViolationEvent(
                graph6=graph6,
                check=CheckName.EULER_UPPER_BOUND.value,
                detail=f"2n - m - i - ce = {report.value} > 2",
                witness=witness,
            )
        )
    if (report.value == 2) != report.tree_zone:
        events.append(
            ViolationEvent(
                graph6=graph6,
                check=CheckName.EULER_EQUALITY.value,
                detail=f"value {report.value} but tree_zone={report.tree_zone}",
                witness=witness,
            )
        )
    for event in events:
        logger.error(f"{event.check} violated on {graph6}: {event.detail}")
    return events


class ZoneService:
    """Service for the zone graphs of a partial cube."""

    def __init__(self, graph: Graph, cycle_service: Optional[CycleService] = None):
        self.graph = graph
        self.cycles = cycle_service or CycleService(graph)
        self.theta = self.cycles.theta

    @cached_property
    def graph6(self) -> str:
        return write_graph6(self.graph)

    def zone_graph(self, k: int) -> ZoneGraph:
        """Class-k edges, linked when they lie on a common convex cycle."""
        partition = self.theta.partition
        if not 0 <= k < partition.dimension:
            raise ClassIndexError(f"class index {k} outside 0..{partition.dimension - 1}")
        self.theta.require_partial_cube()

        nodes = partition.classes[k]
        position = {edge: i for i, edge in enumerate(nodes)}
        witnesses: dict[tuple[int, int], list[CycleRecord]] = {}
        for cycle in self.cycles.enumerate_convex_cycles():
            members = sorted(position[e] for e in cycle.edge_list if e in position)
            for pair in combinations(members, 2):
                witnesses.setdefault(pair, []).append(cycle)
        links = tuple(
            ZoneLink(source=s, target=t, witnesses=tuple(cycles))
            for (s, t), cycles in sorted(witnesses.items())
        )
        return ZoneGraph(class_index=k, nodes=nodes, links=links)

    @cached_property
    def zone_graphs(self) -> tuple[ZoneGraph, ...]:
        return tuple(self.zone_graph(k) for k in range(self.theta.partition.dimension))

    def is_tree_zone(self) -> TreeZoneVerdict:
        """Every zone graph is connected and acyclic; disconnected zones are violations."""
        first: Optional[int] = None
        reason: Optional[NonTreeReason] = None
        events = []
        for zone in self.zone_graphs:
            connected = zone_is_connected(zone)
            if not connected:
                logger.error(f"Zone graph of class {zone.class_index} on {self.graph6} is disconnected")
                events.append(
                    ViolationEvent(
                        graph6=self.graph6,
                        check=CheckName.ZONE_CONNECTED.value,
                        detail=f"zone graph of class {zone.class_index} is disconnected",
                        witness={"class_index": zone.class_index},
                    )
                )
            if first is None:
                if not connected:
                    first, reason = zone.class_index, NonTreeReason.DISCONNECTED
                elif len(zone.links) != len(zone.nodes) - 1:
                    first, reason = zone.class_index, NonTreeReason.CYCLE
        return TreeZoneVerdict(
            tree_zone=first is None,
            first_non_tree_class=first,
            reason=reason,
            events=tuple(events),
        )

    def convex_excess(self) -> int:
        return convex_excess(self.cycles.enumerate_convex_cycles())

    def euler_report(self) -> EulerReport:
        self.theta.require_partial_cube()
        n, m = self.graph.n, self.graph.m
        i = self.theta.partition.dimension
        ce = self.convex_excess()
        return EulerReport(
            n=n,
            m=m,
            i=i,
            ce=ce,
            value=2 * n - m - i - ce,
            tree_zone=self.is_tree_zone().tree_zone,
        )
