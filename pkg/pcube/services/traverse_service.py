"""
Traverse service: chains of isometric cycles between Θ-related edges.

Every isometric cycle of a partial cube crosses a Θ-class in zero or two
antipodal edges, so a traverse is a walk over class edges where each step
is a cycle holding the current edge and the next one. The search grows
that walk depth-first and keeps both sides geodesic as it goes.
"""

import logging
from functools import cached_property
from typing import Optional, Sequence

import numpy as np

from pcube.codecs.graph6 import write_graph6
from pcube.core.config import Settings, settings as default_settings
from pcube.core.exceptions import NotThetaRelatedError
from pcube.models.census import CheckName
from pcube.models.cycles import CycleRecord, CycleSet
from pcube.models.events import BudgetEvent, ViolationEvent
from pcube.models.graph import Edge, Graph, canonical_edge
from pcube.models.traverse import (
    PasteCycleWitness,
    Possibility,
    Traverse,
    TraverseCheck,
    TraverseClause,
    TraverseSearch,
    TwoPossibilities,
)
from pcube.services.cycle_service import CycleService

logger = logging.getLogger(__name__)


def _arc(cycle: CycleRecord, start: int, avoid: int, stop: int) -> Optional[tuple[int, ...]]:
    """Walk the cycle from start, away from avoid, until stop."""
    vertices = cycle.vertices
    k = len(vertices)
    i = vertices.index(start)
    step = 1 if vertices[(i - 1) % k] == avoid else -1
    arc = [start]
    while arc[-1] != stop:
        i = (i + step) % k
        if vertices[i] == avoid:
            return None
        arc.append(vertices[i])
    return tuple(arc)


class _SearchState:
    """Mutable bookkeeping for one traverse search."""

    def __init__(self, limit: int, budget: int):
        self.limit = limit
        self.budget = budget
        self.expansions = 0
        self.found: list[Traverse] = []
        self.truncated = False
        self.exhausted = False

    @property
    def stopped(self) -> bool:
        return self.truncated or self.exhausted


class TraverseService:
    """Service for finding and validating traverses in a partial cube."""

    def __init__(
        self,
        graph: Graph,
        cycle_service: Optional[CycleService] = None,
        config: Optional[Settings] = None,
    ):
        self.graph = graph
        self.cycles = cycle_service or CycleService(graph)
        self.theta = self.cycles.theta
        self.config = config or default_settings

    @cached_property
    def graph6(self) -> str:
        return write_graph6(self.graph)

    @property
    def dist(self) -> np.ndarray:
        return self.theta.distances.dist

    def _class_cycles(
        self, class_index: int, convex_only: bool
    ) -> dict[Edge, list[tuple[CycleRecord, Edge]]]:
        """Class edge -> (cycle through it, the cycle's other class edge)."""
        partition = self.theta.partition
        pool: CycleSet = (
            self.cycles.enumerate_convex_cycles()
            if convex_only
            else self.cycles.enumerate_isometric_cycles()
        )
        by_edge: dict[Edge, list[tuple[CycleRecord, Edge]]] = {}
        for cycle in sorted(pool, key=lambda c: c.vertices):
            crossing = [e for e in cycle.edge_list if partition.class_of.get(e) == class_index]
            if len(crossing) != 2:
                continue
            first, second = crossing
            by_edge.setdefault(first, []).append((cycle, second))
            by_edge.setdefault(second, []).append((cycle, first))
        return by_edge

    def orient(self, e1: Edge, e2: Edge) -> tuple[Edge, Edge, int]:
        """Check the pair and return (v1, u1), (v2, u2) and the class index."""
        for u, v in (e1, e2):
            if not self.graph.has_edge(u, v):
                raise ValueError(f"({u}, {v}) is not an edge")
        if canonical_edge(*e1) == canonical_edge(*e2):
            raise ValueError("a traverse needs two distinct edges")
        self.theta.require_partial_cube()
        partition = self.theta.partition
        k = partition.index_of(*e1)
        if partition.index_of(*e2) != k:
            raise NotThetaRelatedError(f"{e1} and {e2} lie in different Θ-classes")
        v1, u1 = e1
        x, y = e2
        v2, u2 = (x, y) if self.dist[v1, x] < self.dist[v1, y] else (y, x)
        return (v1, u1), (v2, u2), k

    def find_traverses(
        self,
        e1: Edge,
        e2: Edge,
        convex_only: bool = False,
        limit: Optional[int] = None,
        required_side: Optional[Sequence[int]] = None,
    ) -> TraverseSearch:
        """Traverses from e1 = (v1, u1) to e2, lexicographic by cycle sequence.

        With required_side, only traverses whose v1-side equals that path are kept.
        """
        (v1, u1), (v2, u2), k = self.orient(e1, e2)
        limit = self.config.traverse_limit if limit is None else limit
        state = _SearchState(limit=limit, budget=self.config.traverse_search_budget)
        by_edge = self._class_cycles(k, convex_only)
        target_length = int(self.dist[v1, v2])
        dist = self.dist
        side = tuple(required_side) if required_side is not None else None
        target_edge = canonical_edge(v2, u2)

        def walk(
            edge: Edge,
            chain: list[CycleRecord],
            visited: set[Edge],
            v_side: list[int],
            u_side: list[int],
            older: set[int],
        ) -> None:
            fv, fu = edge
            for cycle, other in by_edge.get(canonical_edge(fv, fu), []):
                if state.stopped:
                    return
                state.expansions += 1
                if state.expansions > state.budget:
                    state.exhausted = True
                    return
                if chain and (
                    cycle.vertex_set & chain[-1].vertex_set != {fv, fu}
                    or cycle.vertex_set & older
                ):
                    continue
                if other in visited:
                    continue
                gv, gu = other if dist[v1, other[0]] < dist[u1, other[0]] else other[::-1]
                v_arc = _arc(cycle, fv, fu, gv)
                u_arc = _arc(cycle, fu, fv, gu)
                if v_arc is None or u_arc is None:
                    continue
                length = len(v_side) - 1 + len(v_arc) - 1
                if length > target_length:
                    continue
                if dist[v1, gv] != length or dist[u1, gu] != length:
                    continue
                new_v = v_side + list(v_arc[1:])
                if side is not None and tuple(new_v) != side[: len(new_v)]:
                    continue
                new_u = u_side + list(u_arc[1:])
                new_chain = chain + [cycle]
                if other == target_edge:
                    if len(state.found) >= state.limit:
                        state.truncated = True
                        return
                    state.found.append(
                        Traverse(
                            cycles=tuple(new_chain),
                            start_edge=(v1, u1),
                            end_edge=(v2, u2),
                            v_side=tuple(new_v),
                            u_side=tuple(new_u),
                            length=length,
                            convex=all(c.convex for c in new_chain),
                        )
                    )
                    continue
                walk(
                    (gv, gu),
                    new_chain,
                    visited | {other},
                    new_v,
                    new_u,
                    older | (chain[-1].vertex_set if chain else set()),
                )

        walk((v1, u1), [], {canonical_edge(v1, u1)}, [v1], [u1], set())

        events: list = []
        check = CheckName.CONVEX_TRAVERSE.value
        if state.exhausted:
            logger.warning(
                f"Traverse search {e1} -> {e2} on {self.graph6} stopped after "
                f"{state.budget} expansions"
            )
            events.append(
                BudgetEvent(
                    graph6=self.graph6,
                    check=check,
                    detail=f"search from {e1} to {e2} exceeded {state.budget} expansions",
                )
            )
        elif convex_only and not state.found and required_side is None:
            logger.error(f"No convex traverse from {e1} to {e2} on {self.graph6}")
            events.append(
                ViolationEvent(
                    graph6=self.graph6,
                    check=check,
                    detail=f"no convex traverse from {e1} to {e2}",
                    witness={"start_edge": list(e1), "end_edge": list(e2)},
                )
            )
        return TraverseSearch(
            traverses=tuple(state.found),
            truncated=state.truncated or state.exhausted,
            budget_exhausted=state.exhausted,
            events=tuple(events),
        )

    def validate_traverse(self, traverse: Traverse) -> TraverseCheck:
        """Check every defining condition; report the first one that fails."""

        def fail(clause: TraverseClause, detail: str) -> TraverseCheck:
            return TraverseCheck(valid=False, clause=clause, detail=detail)

        cycles = traverse.cycles
        if not cycles:
            return fail(TraverseClause.EMPTY, "no cycles")
        for cycle in cycles:
            closed = all(self.graph.has_edge(a, b) for a, b in cycle.edge_list)
            if not closed or not self.theta.is_isometric_subset(cycle.vertices):
                return fail(TraverseClause.NOT_ISOMETRIC, f"{cycle.vertices}")

        start, end = canonical_edge(*traverse.start_edge), canonical_edge(*traverse.end_edge)
        for edge in (start, end):
            if not self.graph.has_edge(*edge):
                return fail(TraverseClause.NOT_THETA_RELATED, f"{edge} is not an edge")
        partition = self.theta.partition
        k = partition.class_of[start]
        if partition.class_of[end] != k or start == end:
            return fail(TraverseClause.NOT_THETA_RELATED, f"{start} and {end}")

        holders = [i for i, c in enumerate(cycles) if start in c.edge_set]
        if holders != [0]:
            return fail(TraverseClause.START_EDGE, f"start edge on cycles {holders}")
        holders = [i for i, c in enumerate(cycles) if end in c.edge_set]
        if holders != [len(cycles) - 1]:
            return fail(TraverseClause.END_EDGE, f"end edge on cycles {holders}")

        for i, (a, b) in enumerate(zip(cycles, cycles[1:])):
            common = a.vertex_set & b.vertex_set
            shared = a.edge_set & b.edge_set
            if len(common) != 2 or len(shared) != 1:
                return fail(TraverseClause.CONSECUTIVE, f"cycles {i} and {i + 1}")
            if partition.class_of[next(iter(shared))] != k:
                return fail(TraverseClause.CONSECUTIVE, f"shared edge of cycles {i}, {i + 1}")
        for i in range(len(cycles)):
            for j in range(i + 2, len(cycles)):
                if cycles[i].vertex_set & cycles[j].vertex_set:
                    return fail(TraverseClause.NON_CONSECUTIVE, f"cycles {i} and {j}")

        (v1, u1), (v2, u2) = traverse.start_edge, traverse.end_edge
        for side, first, last in ((traverse.v_side, v1, v2), (traverse.u_side, u1, u2)):
            if not side or side[0] != first or side[-1] != last:
                return fail(TraverseClause.SIDE_PATH, f"{side} does not run {first} -> {last}")
            if any(not self.graph.has_edge(a, b) for a, b in zip(side, side[1:])):
                return fail(TraverseClause.SIDE_PATH, f"{side} leaves the graph")
            if not self.theta.is_geodesic(side):
                return fail(TraverseClause.SIDE_GEODESIC, f"{side}")
        if not len(traverse.v_side) - 1 == len(traverse.u_side) - 1 == traverse.length:
            return fail(TraverseClause.SIDE_LENGTH, f"length {traverse.length}")
        if traverse.convex != all(c.convex for c in cycles):
            return fail(TraverseClause.CONVEX_FLAG, "convex flag disagrees with the cycles")
        return TraverseCheck(valid=True)

    # -- geodesic claims ------------------------------------------------------

    def has_alternative_geodesic(self, path: Sequence[int]) -> bool:
        p = self.theta.require_geodesic(path)
        return self.theta.count_geodesics(p[0], p[-1]) > 1

    def paste_cycle_witness(self, path: Sequence[int]) -> Optional[PasteCycleWitness]:
        """A convex cycle glued on a sub-path of p, when p is not the only geodesic.

        The cycle has length 2(j - i) and consists of p[i..j] plus vertices off p.
        """
        p = self.theta.require_geodesic(path)
        if self.theta.count_geodesics(p[0], p[-1]) == 1:
            return None
        on_path = set(p)
        for cycle in self.cycles.enumerate_convex_cycles():
            half = cycle.length // 2
            along = [
                canonical_edge(p[t], p[t + 1]) in cycle.edge_set for t in range(len(p) - 1)
            ]
            for i in range(len(p) - half):
                j = i + half
                if not all(along[i:j]):
                    continue
                if (cycle.vertex_set - set(p[i : j + 1])) & on_path:
                    continue
                return PasteCycleWitness(cycle=cycle, start=i, end=j)
        return None

    def two_possibilities(self, e1: Edge, e2: Edge, path: Sequence[int]) -> TwoPossibilities:
        """Either p is a side of a convex traverse or a convex cycle is glued onto p.

        p runs from an endpoint of e1 to the endpoint of e2 on the same side.
        """
        p = self.theta.require_geodesic(path)
        if p[0] not in e1:
            raise ValueError(f"path must start at an endpoint of {e1}")
        start = (p[0], e1[1] if e1[0] == p[0] else e1[0])
        (_, _), (v2, u2), _ = self.orient(start, e2)
        if p[-1] != v2:
            raise ValueError(f"path must end at {v2}, the endpoint of {e2} on its side")

        search = self.find_traverses(
            start, (v2, u2), convex_only=True, limit=1, required_side=p
        )
        if search.traverses:
            return TwoPossibilities(
                branch=Possibility.SIDE_OF_TRAVERSE, traverse=search.traverses[0]
            )
        witness = self.paste_cycle_witness(p)
        if witness is not None:
            return TwoPossibilities(branch=Possibility.CYCLE, witness=witness)
        if search.budget_exhausted:
            return TwoPossibilities(branch=Possibility.VIOLATION, events=search.events)

        logger.error(f"Neither alternative holds for {p} on {self.graph6}")
        event = ViolationEvent(
            graph6=self.graph6,
            check=CheckName.TWO_POSSIBILITIES.value,
            detail=f"path {list(p)} is no convex traverse side and has no pasted cycle",
            witness={"start_edge": list(start), "end_edge": [v2, u2], "path": list(p)},
        )
        return TwoPossibilities(branch=Possibility.VIOLATION, events=(event,))
