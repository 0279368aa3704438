"""DOT export for graphs and zone graphs."""

import graphviz

from pcube.models.graph import Graph
from pcube.models.zones import ZoneGraph


def graph_to_dot(graph: Graph, name: str = "G") -> str:
    """DOT source with one node per vertex; display labels become node labels."""
    dot = graphviz.Graph(name=name)
    for v in range(graph.n):
        if graph.labels is None:
            dot.node(str(v))
        else:
            dot.node(str(v), label=graph.label(v))
    for u, v in graph.edges:
        dot.edge(str(u), str(v))
    return dot.source


def zone_graph_to_dot(zone: ZoneGraph) -> str:
    """Nodes are class edges named "u-v"; link labels are witness cycle lengths."""
    dot = graphviz.Graph(name=f"Z{zone.class_index}")
    names = [f"{u}-{v}" for u, v in zone.nodes]
    for node_name in names:
        dot.node(node_name)
    for link in zone.links:
        lengths = ",".join(str(cycle.length) for cycle in link.witnesses)
        dot.edge(names[link.source], names[link.target], label=lengths)
    return dot.source
