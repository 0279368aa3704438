"""
Named graph constructors.

Vertex orders are fixed: hypercubes and middle levels are indexed by the
integer value of their bit-string labels, products are row-major over
(g-vertex, h-vertex), and X follows X_VERTEX_NAMES.
"""

from itertools import combinations, product

from pcube.codecs.graph6 import parse_graph6
from pcube.core.exceptions import GraphSizeError
from pcube.models.graph import Graph

MAX_HYPERCUBE_DIMENSION = 20

# Every prefix of this order induces a connected subgraph of X.
X_VERTEX_NAMES = ("v0", "v1", "v2", "v3", "v4", "v5", "u3", "u4", "u5", "z1")
X_EDGE_NAMES = (
    ("u5", "u4"),
    ("u4", "u3"),
    ("u5", "v0"),
    ("v0", "v1"),
    ("v1", "v2"),
    ("u3", "v2"),
    ("v0", "v5"),
    ("v2", "v3"),
    ("v5", "v4"),
    ("v4", "v3"),
    ("u4", "z1"),
    ("z1", "v4"),
)


def _bit_label(value: int, width: int) -> str:
    return format(value, f"0{width}b") if width else ""


def hypercube(d: int) -> Graph:
    """Q_d on 2^d vertices; vertex i carries the d-bit label of i."""
    if d < 0:
        raise ValueError("dimension must be non-negative")
    if d > MAX_HYPERCUBE_DIMENSION:
        raise GraphSizeError(f"hypercube dimension {d} exceeds {MAX_HYPERCUBE_DIMENSION}")
    n = 1 << d
    edges = [(i, i ^ (1 << k)) for i in range(n) for k in range(d) if i < i ^ (1 << k)]
    return Graph.from_edges(n, edges, [_bit_label(i, d) for i in range(n)])


def even_cycle(k: int) -> Graph:
    """C_2k."""
    if k < 2:
        raise ValueError("even_cycle needs k >= 2")
    n = 2 * k
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path_graph needs at least one vertex")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(k: int) -> Graph:
    """K_{1,k} with the center at vertex 0."""
    if k < 0:
        raise ValueError("star_graph needs k >= 0")
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with parts 0..a-1 and a..a+b-1."""
    if a < 1 or b < 1:
        raise ValueError("both parts must be nonempty")
    return Graph.from_edges(a + b, [(i, a + j) for i, j in product(range(a), range(b))])


def middle_levels(t: int) -> Graph:
    """Subgraph of Q_{2t+1} induced on the weight-t and weight-(t+1) vertices."""
    if t < 1:
        raise ValueError("middle_levels needs t >= 1")
    width = 2 * t + 1
    if width > MAX_HYPERCUBE_DIMENSION:
        raise GraphSizeError(f"middle_levels({t}) lives in Q_{width}, above the supported bound")
    members = sorted(
        sum(1 << i for i in bits)
        for weight in (t, t + 1)
        for bits in combinations(range(width), weight)
    )
    index = {value: i for i, value in enumerate(members)}
    edges = [
        (index[value], index[value ^ (1 << k)])
        for value in members
        for k in range(width)
        if value & (1 << k) == 0 and value ^ (1 << k) in index
    ]
    return Graph.from_edges(len(members), edges, [_bit_label(v, width) for v in members])


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """G □ H; vertex (a, b) has index a * h.n + b."""
    if g.n == 0 or h.n == 0:
        raise ValueError("cartesian_product needs two nonempty graphs")
    edges = [(a * h.n + b, c * h.n + b) for a, c in g.edges for b in range(h.n)]
    edges += [(a * h.n + b, a * h.n + c) for b, c in h.edges for a in range(g.n)]
    labels = [f"({g.label(a)},{h.label(b)})" for a in range(g.n) for b in range(h.n)]
    return Graph.from_edges(g.n * h.n, edges, labels)


def x_graph() -> Graph:
    """The 10-vertex, 12-edge graph X: two hexagons on a common 2-edge path, bridged by z1."""
    index = {name: i for i, name in enumerate(X_VERTEX_NAMES)}
    edges = [(index[a], index[b]) for a, b in X_EDGE_NAMES]
    return Graph.from_edges(len(X_VERTEX_NAMES), edges, X_VERTEX_NAMES)


def from_factor_spec(spec: str) -> Graph:
    """Build a product factor from `hypercube:D`, `cycle:K`, `middle-levels:T`,
    `path:N`, `x-graph`, or a raw graph6 string."""
    name, _, argument = spec.partition(":")
    builders = {
        "hypercube": hypercube,
        "cycle": even_cycle,
        "middle-levels": middle_levels,
        "path": path_graph,
    }
    if name == "x-graph" and not argument:
        return x_graph()
    if name in builders:
        if not argument.isdigit():
            raise ValueError(f"factor {spec!r} needs a non-negative integer parameter")
        return builders[name](int(argument))
    return parse_graph6(spec)
