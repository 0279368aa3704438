"""Graph service: distances, basic invariants and induced subgraphs."""

import logging
from collections import deque
from functools import cached_property
from typing import Iterable, Optional

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components, shortest_path

from pcube.core.exceptions import EmptyVertexSetError
from pcube.models.graph import UNREACHABLE, BasicInvariants, DistanceMatrix, Edge, Graph

logger = logging.getLogger(__name__)


def adjacency_matrix(graph: Graph) -> csr_matrix:
    """Symmetric 0/1 adjacency in CSR form."""
    if graph.m == 0:
        return csr_matrix((graph.n, graph.n), dtype=np.int8)
    edges = np.array(graph.edges, dtype=np.int64)
    rows = np.concatenate([edges[:, 0], edges[:, 1]])
    cols = np.concatenate([edges[:, 1], edges[:, 0]])
    data = np.ones(len(rows), dtype=np.int8)
    return csr_matrix((data, (rows, cols)), shape=(graph.n, graph.n))


class GraphService:
    """Service for the metric and structural basics of one graph."""

    def __init__(self, graph: Graph):
        self.graph = graph

    @cached_property
    def distances(self) -> DistanceMatrix:
        return self.all_pairs_distances()

    def all_pairs_distances(self) -> DistanceMatrix:
        """Hop distances by unweighted BFS from every vertex."""
        n = self.graph.n
        if n == 0:
            return DistanceMatrix(dist=np.zeros((0, 0), dtype=np.int32))
        raw = shortest_path(
            adjacency_matrix(self.graph), method="D", directed=False, unweighted=True
        )
        dist = np.where(np.isinf(raw), UNREACHABLE, raw).astype(np.int32)
        return DistanceMatrix(dist=dist)

    def connected_components(self) -> list[tuple[int, ...]]:
        """Vertex tuples of each component, ordered by smallest vertex."""
        if self.graph.n == 0:
            return []
        _, labels = connected_components(adjacency_matrix(self.graph), directed=False)
        groups: dict[int, list[int]] = {}
        for v, label in enumerate(labels):
            groups.setdefault(int(label), []).append(v)
        return sorted((tuple(vs) for vs in groups.values()), key=lambda vs: vs[0])

    def odd_cycle_edge(self) -> Optional[Edge]:
        """An edge whose endpoints are equidistant from their component root, if any."""
        dist = self.distances.dist
        for component in self.connected_components():
            root = component[0]
            for u in component:
                for v in self.graph.neighbors(u):
                    if u < v and dist[root, u] == dist[root, v]:
                        return (u, v)
        return None

    def is_bipartite(self) -> bool:
        return self.odd_cycle_edge() is None

    def girth(self) -> Optional[int]:
        """Length of a shortest cycle, None for forests."""
        best: Optional[int] = None
        adjacency = self.graph.adjacency
        for source in range(self.graph.n):
            depth = {source: 0}
            parent = {source: -1}
            queue = deque([source])
            while queue:
                u = queue.popleft()
                # Cycles closed deeper than this cannot beat the current best.
                if best is not None and 2 * depth[u] >= best:
                    break
                for w in adjacency[u]:
                    if w not in depth:
                        depth[w] = depth[u] + 1
                        parent[w] = u
                        queue.append(w)
                    elif parent[u] != w:
                        length = depth[u] + depth[w] + 1
                        if best is None or length < best:
                            best = length
        return best

    def basic_invariants(self) -> BasicInvariants:
        graph = self.graph
        degrees = [graph.degree(v) for v in range(graph.n)]
        min_degree = min(degrees, default=0)
        max_degree = max(degrees, default=0)
        return BasicInvariants(
            n=graph.n,
            m=graph.m,
            connected=self.distances.is_connected,
            bipartite=self.is_bipartite(),
            girth=self.girth(),
            min_degree=min_degree,
            max_degree=max_degree,
            regular=min_degree == max_degree,
            diameter=self.distances.diameter,
        )

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
        """Subgraph on the given vertices, relabeled in increasing order.

        Returns the subgraph and the map old vertex -> new vertex.
        """
        chosen = sorted(set(vertices))
        if not chosen:
            raise EmptyVertexSetError("induced_subgraph needs at least one vertex")
        if chosen[0] < 0 or chosen[-1] >= self.graph.n:
            raise ValueError(f"vertices must lie in 0..{self.graph.n - 1}")

        relabel = {old: new for new, old in enumerate(chosen)}
        edges = [
            (relabel[u], relabel[v])
            for u, v in self.graph.edges
            if u in relabel and v in relabel
        ]
        labels = None
        if self.graph.labels is not None:
            labels = [self.graph.labels[v] for v in chosen]
        return Graph.from_edges(len(chosen), edges, labels), relabel
