"""
Brute-force isometric embedding into a hypercube.

Independent of the Θ relation: vertices are labeled in BFS order, each with
its BFS parent's label and one bit flipped, and a label survives only if
its Hamming distance to every placed vertex equals the graph distance. Any
embedding can be translated to put vertex 0 at the origin and have its
coordinates renumbered in order of first use, so trying the used bits plus
one fresh bit per step is exhaustive.
"""

import logging
from collections import deque

from pcube.models.graph import Graph
from pcube.services.graph_service import GraphService

logger = logging.getLogger(__name__)


def _bfs_tree(graph: Graph) -> tuple[list[int], list[int]]:
    order = [0]
    parent = [-1] * graph.n
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in graph.adjacency[u]:
            if w not in seen:
                seen.add(w)
                parent[w] = u
                order.append(w)
                queue.append(w)
    return order, parent


def embeds_isometrically(graph: Graph) -> bool:
    """Whether some hypercube contains the graph as an isometric subgraph."""
    distances = GraphService(graph).distances
    if not distances.is_connected:
        return False
    if graph.n == 1:
        return True

    dist = distances.dist
    order, parent = _bfs_tree(graph)
    labels = [0] * graph.n
    # A partial cube on n vertices has isometric dimension at most n - 1.
    max_bits = graph.n - 1

    def place(i: int, used_bits: int) -> bool:
        if i == graph.n:
            return True
        v = order[i]
        base = labels[parent[v]]
        for bit in range(min(used_bits + 1, max_bits)):
            label = base ^ (1 << bit)
            if all(
                (label ^ labels[order[j]]).bit_count() == dist[v, order[j]]
                for j in range(i)
            ):
                labels[v] = label
                if place(i + 1, max(used_bits, bit + 1)):
                    return True
        return False

    found = place(1, 0)
    logger.debug(f"{graph!r}: brute-force embedding {'found' if found else 'absent'}")
    return found
