"""
Theta service: the Djoković-Winkler relation and everything derived from it.

Recognition is computed two ways (Θ-transitivity on a connected bipartite
graph, and the Hamming check of the Θ-class coordinates). The two verdicts
must agree.
"""

import logging
import random
from functools import cached_property
from typing import Iterable, Optional

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components, shortest_path

from pcube.core.exceptions import (
    ClassIndexError,
    DisconnectedGraphError,
    EmptyVertexSetError,
    InvalidGeodesicError,
    NotPartialCubeError,
    RecognitionDisagreementError,
)
from pcube.models.graph import UNREACHABLE, DistanceMatrix, Edge, Graph, canonical_edge
from pcube.models.theta import (
    Coordinatization,
    Halfspaces,
    RecognitionResult,
    RecognitionWitness,
    ThetaPartition,
    WitnessKind,
)
from pcube.services.graph_service import GraphService

logger = logging.getLogger(__name__)


class ThetaService:
    """Service for Θ-classes, halfspaces, coordinates, intervals and geodesics."""

    def __init__(self, graph: Graph, graph_service: Optional[GraphService] = None):
        self.graph = graph
        self.graph_service = graph_service or GraphService(graph)

    @property
    def distances(self) -> DistanceMatrix:
        return self.graph_service.distances

    def _require_connected(self) -> None:
        if not self.distances.is_connected:
            raise DisconnectedGraphError("graph must be connected and nonempty")

    # -- the relation -------------------------------------------------------

    def theta_related(self, e1: Edge, e2: Edge) -> bool:
        """ab Θ xy iff d(a,x) + d(b,y) != d(a,y) + d(b,x)."""
        for u, v in (e1, e2):
            if not self.graph.has_edge(u, v):
                raise ValueError(f"({u}, {v}) is not an edge")
        (a, b), (x, y) = e1, e2
        d = self.distances.dist
        if UNREACHABLE in (d[a, x], d[b, y], d[a, y], d[b, x]):
            raise DisconnectedGraphError(f"edges {e1} and {e2} lie in different components")
        return bool(d[a, x] + d[b, y] != d[a, y] + d[b, x])

    @cached_property
    def relation_matrix(self) -> np.ndarray:
        """m x m boolean matrix of Θ over graph.edges."""
        self._require_connected()
        if self.graph.m == 0:
            return np.zeros((0, 0), dtype=bool)
        edges = np.array(self.graph.edges, dtype=np.int64)
        a, b = edges[:, 0], edges[:, 1]
        d = self.distances.dist.astype(np.int64)
        same = d[np.ix_(a, a)] + d[np.ix_(b, b)]
        cross = d[np.ix_(a, b)] + d[np.ix_(b, a)]
        return same != cross

    def theta_classes(self) -> ThetaPartition:
        """Classes of the transitive closure Θ*, ordered by smallest edge."""
        return self.partition

    @cached_property
    def partition(self) -> ThetaPartition:
        relation = self.relation_matrix
        m = self.graph.m
        if m == 0:
            return ThetaPartition(classes=(), transitive=True)

        _, labels = connected_components(csr_matrix(relation), directed=False)
        order: dict[int, int] = {}
        members: list[list[Edge]] = []
        indices: list[list[int]] = []
        # graph.edges is sorted, so first appearance orders classes by representative.
        for i, edge in enumerate(self.graph.edges):
            label = int(labels[i])
            if label not in order:
                order[label] = len(members)
                members.append([])
                indices.append([])
            members[order[label]].append(edge)
            indices[order[label]].append(i)

        transitive = all(bool(relation[np.ix_(idx, idx)].all()) for idx in indices)
        logger.debug(f"{self.graph!r}: {len(members)} Θ-classes, transitive={transitive}")
        return ThetaPartition(
            classes=tuple(tuple(edges) for edges in members),
            transitive=transitive,
        )

    def _transitivity_witness(self) -> Optional[tuple[Edge, Edge, Edge]]:
        """A triple e1 Θ e2 Θ e3 with e1 not Θ e3."""
        relation = self.relation_matrix
        graph_csr = csr_matrix(relation.astype(np.int8))
        class_of = self.partition.class_of
        for edges in self.partition.classes:
            idx = [self.graph.edge_index[e] for e in edges]
            block = relation[np.ix_(idx, idx)]
            missing = np.argwhere(~block)
            if len(missing) == 0:
                continue
            source, target = idx[missing[0][0]], idx[missing[0][1]]
            _, predecessors = shortest_path(
                graph_csr,
                directed=False,
                unweighted=True,
                indices=source,
                return_predecessors=True,
            )
            chain = [target]
            while chain[-1] != source:
                chain.append(int(predecessors[chain[-1]]))
            chain.reverse()
            # A shortest chain has no shortcut, so its first two steps form the witness.
            first, middle, last = (self.graph.edges[i] for i in chain[:3])
            assert class_of[first] == class_of[last]
            return first, middle, last
        return None

    # -- recognition ----------------------------------------------------------

    def recognize(self) -> RecognitionResult:
        """Decide whether the graph is a partial cube, with a witness when it is not."""
        return self.recognition

    def is_partial_cube(self) -> bool:
        return self.recognition.verdict

    @cached_property
    def recognition(self) -> RecognitionResult:
        graph = self.graph
        if graph.n == 0:
            return RecognitionResult(
                verdict=False,
                connected=False,
                bipartite=True,
                witness=RecognitionWitness(kind=WitnessKind.EMPTY, detail="no vertices"),
            )

        dist = self.distances.dist
        if not self.distances.is_connected:
            u, v = (int(x) for x in np.argwhere(dist == UNREACHABLE)[0])
            return RecognitionResult(
                verdict=False,
                connected=False,
                bipartite=self.graph_service.is_bipartite(),
                witness=RecognitionWitness(
                    kind=WitnessKind.DISCONNECTED,
                    vertices=(u, v),
                    detail=f"no path between {u} and {v}",
                ),
            )

        odd_edge = self.graph_service.odd_cycle_edge()
        bipartite = odd_edge is None
        transitive = self.partition.transitive
        coordinates = self.coordinatize()

        by_theta = bipartite and transitive
        if by_theta != coordinates.isometric:
            raise RecognitionDisagreementError(
                f"{graph!r}: Θ verdict {by_theta} but Hamming verdict {coordinates.isometric}"
            )

        witness = None
        if odd_edge is not None:
            witness = RecognitionWitness(
                kind=WitnessKind.ODD_CYCLE,
                edges=(odd_edge,),
                detail="endpoints equidistant from the component root",
            )
        elif not transitive:
            triple = self._transitivity_witness()
            witness = RecognitionWitness(
                kind=WitnessKind.THETA_NOT_TRANSITIVE,
                edges=triple or (),
                detail="e1 Θ e2 and e2 Θ e3 but not e1 Θ e3",
            )
        elif not coordinates.isometric and coordinates.mismatch is not None:
            u, v, d, h = coordinates.mismatch
            witness = RecognitionWitness(
                kind=WitnessKind.HAMMING_MISMATCH,
                vertices=(u, v),
                detail=f"distance {d} but Hamming distance {h}",
            )

        return RecognitionResult(
            verdict=by_theta,
            connected=True,
            bipartite=bipartite,
            theta_transitive=transitive,
            hamming_isometric=coordinates.isometric,
            witness=witness,
        )

    def require_partial_cube(self) -> None:
        if not self.is_partial_cube():
            raise NotPartialCubeError(f"{self.graph!r} is not a partial cube")

    # -- halfspaces and coordinates ------------------------------------------

    def halfspaces(self, k: int, partition: Optional[ThetaPartition] = None) -> Halfspaces:
        """Sides of class k, oriented by its representative edge (u, v)."""
        partition = partition or self.partition
        if not 0 <= k < partition.dimension:
            raise ClassIndexError(f"class index {k} outside 0..{partition.dimension - 1}")
        self.require_partial_cube()

        u, v = partition.representative(k)
        dist = self.distances.dist
        closer_to_u = dist[u] < dist[v]
        side_w = tuple(int(w) for w in np.flatnonzero(closer_to_u))
        side_wbar = tuple(int(w) for w in np.flatnonzero(~closer_to_u))
        f_edges = partition.classes[k]
        endpoints = {x for edge in f_edges for x in edge}
        return Halfspaces(
            class_index=k,
            representative=(u, v),
            side_w=side_w,
            side_wbar=side_wbar,
            u_boundary=tuple(sorted(x for x in endpoints if closer_to_u[x])),
            ubar_boundary=tuple(sorted(x for x in endpoints if not closer_to_u[x])),
            f_edges=f_edges,
        )

    def coordinate_bits(self, partition: Optional[ThetaPartition] = None) -> np.ndarray:
        """n x i 0/1 matrix; bit k is set when the vertex is not closer to u_k than to v_k."""
        partition = partition or self.partition
        dist = self.distances.dist
        if partition.dimension == 0:
            return np.zeros((self.graph.n, 0), dtype=np.int32)
        reps = np.array([partition.representative(k) for k in range(partition.dimension)])
        return (dist[reps[:, 0]] >= dist[reps[:, 1]]).T.astype(np.int32)

    def coordinatize(self, partition: Optional[ThetaPartition] = None) -> Coordinatization:
        """Bit labels per vertex and whether they embed the graph isometrically."""
        self._require_connected()
        bits = self.coordinate_bits(partition)
        hamming = bits @ (1 - bits).T + (1 - bits) @ bits.T
        dist = self.distances.dist
        wrong = np.argwhere(np.triu(hamming != dist))
        mismatch = None
        if len(wrong):
            u, v = (int(x) for x in wrong[0])
            mismatch = (u, v, int(dist[u, v]), int(hamming[u, v]))
        labels = tuple("".join(str(int(b)) for b in row) for row in bits)
        return Coordinatization(
            dimension=bits.shape[1],
            labels=labels,
            isometric=mismatch is None,
            mismatch=mismatch,
        )

    # -- intervals, isometry, convexity --------------------------------------

    def interval(self, a: int, b: int) -> tuple[int, ...]:
        """All vertices on some shortest a,b-path."""
        dist = self.distances.dist
        if dist[a, b] == UNREACHABLE:
            raise DisconnectedGraphError(f"{b} is unreachable from {a}")
        reachable = dist[a] != UNREACHABLE
        on_geodesic = reachable & (dist[a] + dist[b] == dist[a, b])
        return tuple(int(w) for w in np.flatnonzero(on_geodesic))

    def is_isometric_subset(self, vertices: Iterable[int]) -> bool:
        """Induced distances on the set equal the ambient distances."""
        chosen = sorted(set(vertices))
        if not chosen:
            raise EmptyVertexSetError("subset must be nonempty")
        subgraph, _ = self.graph_service.induced_subgraph(chosen)
        induced = GraphService(subgraph).distances.dist
        return bool(np.array_equal(induced, self.distances.dist[np.ix_(chosen, chosen)]))

    def is_convex_subset(self, vertices: Iterable[int]) -> bool:
        """Every interval between two members stays inside the set."""
        chosen = sorted(set(vertices))
        if not chosen:
            raise EmptyVertexSetError("subset must be nonempty")
        dist = self.distances.dist
        rows = dist[chosen]
        inner = dist[np.ix_(chosen, chosen)]
        if (inner == UNREACHABLE).any():
            return False
        outside = np.ones(self.graph.n, dtype=bool)
        outside[chosen] = False
        rows_out = rows[:, outside]
        # escapes[i, j, w]: outside vertex w lies on a geodesic between chosen[i] and chosen[j]
        escapes = rows_out[:, None, :] + rows_out[None, :, :] == inner[:, :, None]
        reachable = (rows_out != UNREACHABLE)[:, None, :]
        return not bool((escapes & reachable).any())

    # -- geodesics ------------------------------------------------------------

    def is_geodesic(self, path: Iterable[int]) -> bool:
        """A walk of length d(first, last) along edges of the graph."""
        p = list(path)
        if not p:
            return False
        for x, y in zip(p, p[1:]):
            if not self.graph.has_edge(x, y):
                return False
        return int(self.distances.dist[p[0], p[-1]]) == len(p) - 1

    def require_geodesic(self, path: Iterable[int]) -> tuple[int, ...]:
        p = tuple(path)
        if not self.is_geodesic(p):
            raise InvalidGeodesicError(f"{p} is not a shortest path")
        return p

    def _counts_toward(self, target: int, members: tuple[int, ...]) -> dict[int, int]:
        """Number of geodesics from each member of an interval to target."""
        dist = self.distances.dist
        counts = {target: 1}
        for w in sorted(members, key=lambda x: dist[x, target]):
            if w == target:
                continue
            counts[w] = sum(
                counts[x]
                for x in self.graph.neighbors(w)
                if x in counts and dist[x, target] == dist[w, target] - 1
            )
        return counts

    def count_geodesics(self, a: int, b: int) -> int:
        members = self.interval(a, b)
        return self._counts_toward(b, members)[a]

    def first_geodesic(self, a: int, b: int) -> tuple[int, ...]:
        """The geodesic that always steps to the smallest eligible neighbor."""
        dist = self.distances.dist
        if dist[a, b] == UNREACHABLE:
            raise DisconnectedGraphError(f"{b} is unreachable from {a}")
        path = [a]
        while path[-1] != b:
            here = path[-1]
            path.append(
                next(x for x in self.graph.neighbors(here) if dist[x, b] == dist[here, b] - 1)
            )
        return tuple(path)

    def random_geodesic(self, a: int, b: int, rng: random.Random) -> tuple[int, ...]:
        """A geodesic drawn uniformly among all a,b-geodesics."""
        dist = self.distances.dist
        counts = self._counts_toward(b, self.interval(a, b))
        path = [a]
        while path[-1] != b:
            here = path[-1]
            steps = [
                x
                for x in self.graph.neighbors(here)
                if x in counts and dist[x, b] == dist[here, b] - 1
            ]
            path.append(rng.choices(steps, weights=[counts[x] for x in steps])[0])
        return tuple(path)

    def class_sequence(self, path: Iterable[int]) -> tuple[int, ...]:
        """Θ-class index of each edge along a path."""
        p = list(path)
        return tuple(self.partition.index_of(x, y) for x, y in zip(p, p[1:]))

    def edge_pairs_by_class(self) -> list[tuple[Edge, Edge]]:
        """All unordered pairs of distinct Θ-related edges, class by class."""
        pairs = []
        for edges in self.partition.classes:
            for i, e1 in enumerate(edges):
                for e2 in edges[i + 1 :]:
                    pairs.append((canonical_edge(*e1), canonical_edge(*e2)))
        return pairs
