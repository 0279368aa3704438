"""
Cycle service: isometric and convex cycle enumeration, intersections,
intertwinings and isometric copies of X.
"""

import logging
from functools import cached_property
from itertools import combinations
from typing import Optional

import numpy as np

from pcube.core.exceptions import DisconnectedGraphError, MalformedCycleError
from pcube.generators import X_VERTEX_NAMES, x_graph
from pcube.models.cycles import (
    CycleRecord,
    CycleSet,
    IntersectionKind,
    IntersectionResult,
    IntertwiningRecord,
    XEmbedding,
)
from pcube.models.graph import Graph
from pcube.models.theta import ThetaPartition
from pcube.services.graph_service import GraphService
from pcube.services.theta_service import ThetaService

logger = logging.getLogger(__name__)


def classify_intersection(c1: CycleRecord, c2: CycleRecord) -> IntersectionResult:
    """How two distinct cycles meet: nothing, one vertex, one edge, one path, or otherwise."""
    if c1 == c2:
        raise ValueError("classify_intersection needs two distinct cycles")

    shared = c1.vertex_set & c2.vertex_set
    shared_edges = c1.edge_set & c2.edge_set
    if not shared:
        return IntersectionResult(kind=IntersectionKind.EMPTY)
    if not shared_edges:
        if len(shared) == 1:
            return IntersectionResult(kind=IntersectionKind.SINGLE_VERTEX)
        return IntersectionResult(kind=IntersectionKind.OTHER)

    neighbors: dict[int, list[int]] = {v: [] for v in shared}
    for u, v in shared_edges:
        neighbors[u].append(v)
        neighbors[v].append(u)
    # A single path: every shared vertex on it, no branching, no closing cycle.
    is_path = (
        all(1 <= len(nbrs) <= 2 for nbrs in neighbors.values())
        and len(shared_edges) == len(shared) - 1
    )
    if not is_path:
        return IntersectionResult(kind=IntersectionKind.OTHER)

    path = [min(v for v, nbrs in neighbors.items() if len(nbrs) == 1)]
    previous = None
    while len(path) < len(shared):
        step = next(x for x in neighbors[path[-1]] if x != previous)
        previous = path[-1]
        path.append(step)
    kind = IntersectionKind.SINGLE_EDGE if len(path) == 2 else IntersectionKind.PATH
    return IntersectionResult(kind=kind, shared_path=tuple(path))


def build_intertwining(
    c1: CycleRecord, c2: CycleRecord, shared_path: tuple[int, ...]
) -> IntertwiningRecord:
    m = len(shared_path) - 1
    n1 = c1.length // 2 - m
    n2 = c2.length // 2 - m
    return IntertwiningRecord(
        c1=c1,
        c2=c2,
        shared_path=shared_path,
        m=m,
        n1=n1,
        n2=n2,
        residue=n1 + n2,
    )


class CycleService:
    """Service for the isometric cycles of one connected graph."""

    def __init__(self, graph: Graph, theta_service: Optional[ThetaService] = None):
        self.graph = graph
        self.theta = theta_service or ThetaService(graph)

    @property
    def dist(self) -> np.ndarray:
        return self.theta.distances.dist

    # -- enumeration ----------------------------------------------------------

    def _length_range(self) -> range:
        diameter = self.theta.distances.diameter
        if diameter is None:
            raise DisconnectedGraphError("cycle enumeration needs a connected graph")
        if self.theta.graph_service.is_bipartite():
            return range(4, 2 * diameter + 1, 2)
        return range(3, 2 * diameter + 2)

    def _cycles_of_length(self, length: int) -> list[tuple[int, ...]]:
        """Isometric cycles of one length, grown from their smallest vertex."""
        dist = self.dist
        adjacency = self.graph.adjacency
        # targets[j][i]: required distance between positions i < j on the cycle
        targets = [
            np.array([min(j - i, length - j + i) for i in range(j)], dtype=dist.dtype)
            for j in range(length)
        ]
        found: list[tuple[int, ...]] = []

        def extend(path: list[int], on_path: set[int]) -> None:
            j = len(path)
            if j == length:
                if path[1] < path[-1]:
                    found.append(tuple(path))
                return
            start = path[0]
            for w in adjacency[path[-1]]:
                if w <= start or w in on_path:
                    continue
                if not np.array_equal(dist[path, w], targets[j]):
                    continue
                path.append(w)
                on_path.add(w)
                extend(path, on_path)
                path.pop()
                on_path.discard(w)

        for start in range(self.graph.n):
            extend([start], {start})
        return found

    @cached_property
    def isometric_cycles(self) -> CycleSet:
        records = []
        for length in self._length_range():
            for vertices in self._cycles_of_length(length):
                convex = self.theta.is_convex_subset(vertices)
                records.append(
                    CycleRecord(vertices=vertices, isometric=True, convex=convex)
                )
        records.sort(key=CycleRecord.sort_key)
        logger.debug(f"{self.graph!r}: {len(records)} isometric cycles")
        return tuple(records)

    def enumerate_isometric_cycles(self) -> CycleSet:
        """Every cycle whose own metric agrees with the graph metric, canonical and sorted."""
        return self.isometric_cycles

    def enumerate_convex_cycles(self) -> CycleSet:
        return tuple(c for c in self.isometric_cycles if c.convex)

    # -- per-cycle checks -----------------------------------------------------

    def antipodal_theta_check(
        self, cycle: CycleRecord, partition: Optional[ThetaPartition] = None
    ) -> bool:
        """Each edge of the cycle shares its Θ-class with the opposite edge."""
        partition = partition or self.theta.partition
        if cycle.length % 2:
            raise MalformedCycleError(f"odd cycle {cycle.vertices} has no antipodal edges")
        half = cycle.length // 2
        edges = cycle.edge_list
        try:
            return all(
                partition.class_of[edges[i]] == partition.class_of[edges[i + half]]
                for i in range(half)
            )
        except KeyError as exc:
            raise MalformedCycleError(f"{exc.args[0]} is not an edge of the graph") from exc

    # -- pairs ---------------------------------------------------------------

    def find_intertwinings(self, cycles: Optional[CycleSet] = None) -> list[IntertwiningRecord]:
        """All pairs meeting in exactly one shared path of at least two edges."""
        cycles = self.isometric_cycles if cycles is None else cycles
        records = []
        for c1, c2 in combinations(cycles, 2):
            if c1.length % 2 or c2.length % 2:
                continue
            result = classify_intersection(c1, c2)
            if result.kind == IntersectionKind.PATH:
                records.append(build_intertwining(c1, c2, result.shared_path))
        return records

    def has_nonadjacent_intersection(self, cycles: Optional[CycleSet] = None) -> bool:
        """Some pair of cycles shares two vertices that are not adjacent."""
        cycles = self.isometric_cycles if cycles is None else cycles
        for c1, c2 in combinations(cycles, 2):
            shared = sorted(c1.vertex_set & c2.vertex_set)
            if any(not self.graph.has_edge(a, b) for a, b in combinations(shared, 2)):
                return True
        return False

    def intersect_to_intertwine_witness(
        self, cycles: Optional[CycleSet] = None
    ) -> Optional[IntertwiningRecord]:
        """An intertwining pair whenever two cycles share non-adjacent vertices."""
        cycles = self.isometric_cycles if cycles is None else cycles
        if not self.has_nonadjacent_intersection(cycles):
            return None
        records = self.find_intertwinings(cycles)
        return records[0] if records else None

    # -- the graph X ----------------------------------------------------------

    def find_isometric_x(self) -> Optional[XEmbedding]:
        """Lexicographically first distance-preserving copy of X, if any."""
        template = x_graph()
        template_dist = GraphService(template).distances.dist
        k = template.n
        if self.graph.n < k:
            return None

        dist = self.dist
        adjacency = self.graph.adjacency
        template_degree = [template.degree(i) for i in range(k)]
        # anchor[i]: an earlier template neighbor of slot i
        anchor = [None] + [
            min(j for j in template.neighbors(i) if j < i) for i in range(1, k)
        ]
        image: list[int] = []
        used: set[int] = set()

        def fits(slot: int, host: int) -> bool:
            if host in used or self.graph.degree(host) < template_degree[slot]:
                return False
            return all(
                dist[image[j], host] == template_dist[j, slot] for j in range(slot)
            )

        def place(slot: int) -> bool:
            if slot == k:
                return True
            if slot == 0:
                candidates: tuple[int, ...] = tuple(range(self.graph.n))
            else:
                candidates = adjacency[image[anchor[slot]]]
            for host in candidates:
                if not fits(slot, host):
                    continue
                image.append(host)
                used.add(host)
                if place(slot + 1):
                    return True
                image.pop()
                used.discard(host)
            return False

        if not place(0):
            return None
        return XEmbedding(mapping=dict(zip(X_VERTEX_NAMES, image)))
