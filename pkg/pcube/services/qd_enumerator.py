"""
Enumerate the connected isometric subgraphs of Q_d by isometric expansion.

Contracting one Θ-class of a partial cube of dimension j gives a smaller
partial cube of dimension j - 1, and the original is recovered by expanding
along a cover (A, B): A and B isometric, A ∪ B = V, A ∩ B = C nonempty, and
no edge between A - B and B - A. Expanding every graph of one dimension
along every cover, and deduplicating by canonical key, therefore yields
every partial cube of the next dimension.
"""

import logging
from functools import lru_cache
from itertools import combinations, product
from typing import Iterator, Optional

from pcube.codecs.graph6 import write_graph6
from pcube.core.config import Settings, settings
from pcube.core.exceptions import CanonicalSizeError
from pcube.models.census import QdEnumeration
from pcube.models.graph import Graph
from pcube.services.canonical import canonical_form, canonical_key
from pcube.services.graph_service import GraphService
from pcube.services.theta_service import ThetaService

logger = logging.getLogger(__name__)


def expand(graph: Graph, side_a: tuple[int, ...], side_b: tuple[int, ...]) -> Graph:
    """Isometric expansion: a copy of A, then a copy of B, rungs joining the two copies of A ∩ B."""
    in_a = {v: i for i, v in enumerate(side_a)}
    in_b = {v: len(side_a) + i for i, v in enumerate(side_b)}
    edges = [(in_a[u], in_a[v]) for u, v in graph.edges if u in in_a and v in in_a]
    edges += [(in_b[u], in_b[v]) for u, v in graph.edges if u in in_b and v in in_b]
    edges += [(in_a[c], in_b[c]) for c in side_a if c in in_b]
    return Graph.from_edges(len(side_a) + len(side_b), edges)


class QdEnumerator:
    """Partial cubes of isometric dimension at most d on at most max_n vertices."""

    def __init__(self, d: int, max_n: int, config: Optional[Settings] = None):
        if d < 0:
            raise ValueError("dimension must be non-negative")
        self.config = config or settings
        if max_n > self.config.canonical_max_n:
            raise CanonicalSizeError(
                f"max_n {max_n} exceeds the canonical labeling bound {self.config.canonical_max_n}"
            )
        self.d = d
        self.max_n = max_n
        self.covers_tried = 0
        self.truncated = False

    def _covers(self, graph: Graph) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
        """Isometric covers (A, B) small enough to expand, counting each one tried."""
        graph_service = GraphService(graph)
        theta = ThetaService(graph, graph_service)

        @lru_cache(maxsize=None)
        def isometric(members: frozenset[int]) -> bool:
            return theta.is_isometric_subset(members)

        vertices = range(graph.n)
        for size in range(1, min(graph.n, self.max_n - graph.n) + 1):
            for shared in combinations(vertices, size):
                rest = [v for v in vertices if v not in shared]
                if rest:
                    sub, relabel = graph_service.induced_subgraph(rest)
                    back = {new: old for old, new in relabel.items()}
                    components = [
                        [back[v] for v in comp]
                        for comp in GraphService(sub).connected_components()
                    ]
                else:
                    components = []
                # The first component always goes to A; swapping A and B gives the same graph.
                for choice in product((True, False), repeat=max(len(components) - 1, 0)):
                    if self.covers_tried >= self.config.qd_expansion_budget:
                        self.truncated = True
                        return
                    self.covers_tried += 1
                    sides = (True, *choice) if components else ()
                    side_a = set(shared)
                    side_b = set(shared)
                    for comp, to_a in zip(components, sides):
                        (side_a if to_a else side_b).update(comp)
                    if isometric(frozenset(side_a)) and isometric(frozenset(side_b)):
                        yield tuple(sorted(side_a)), tuple(sorted(side_b))

    def run(self) -> QdEnumeration:
        seen: dict[str, Graph] = {}
        level = [Graph(n=1)]
        if self.max_n >= 1:
            seen[canonical_key(level[0])] = level[0]
        else:
            level = []

        for dimension in range(1, self.d + 1):
            next_level: list[Graph] = []
            for graph in level:
                for side_a, side_b in self._covers(graph):
                    expanded = expand(graph, side_a, side_b)
                    form = canonical_form(expanded, self.max_n)
                    key = write_graph6(form)
                    if key not in seen:
                        seen[key] = form
                        next_level.append(form)
                if self.truncated:
                    break
            logger.info(f"Q_{self.d}: {len(next_level)} partial cubes of dimension {dimension}")
            level = next_level
            if self.truncated:
                logger.warning(
                    f"Q_{self.d} enumeration stopped after {self.covers_tried} covers; coverage is partial"
                )
                break

        graphs = sorted(seen.values(), key=lambda g: (g.n, g.m, g.edges))
        return QdEnumeration(
            dimension=self.d,
            max_n=self.max_n,
            graphs=tuple(graphs),
            truncated=self.truncated,
            covers_tried=self.covers_tried,
        )


def enumerate_qd_subcubes(d: int, max_n: int, config: Optional[Settings] = None) -> QdEnumeration:
    return QdEnumerator(d, max_n, config).run()
