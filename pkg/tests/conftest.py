"""
Pytest configuration and fixtures for pcube tests.
"""

import pytest

from pcube.core.config import Settings
from pcube.generators import (
    complete_bipartite,
    even_cycle,
    hypercube,
    middle_levels,
    path_graph,
    star_graph,
    x_graph,
)
from pcube.models.graph import Graph
from pcube.services.cycle_service import CycleService
from pcube.services.theta_service import ThetaService
from pcube.services.traverse_service import TraverseService
from pcube.services.zone_service import ZoneService


@pytest.fixture
def k1() -> Graph:
    return Graph(n=1)


@pytest.fixture
def k2() -> Graph:
    return Graph.from_edges(2, [(0, 1)])


@pytest.fixture
def p3() -> Graph:
    return path_graph(3)


@pytest.fixture
def c4() -> Graph:
    return even_cycle(2)


@pytest.fixture
def c6() -> Graph:
    return even_cycle(3)


@pytest.fixture
def c8() -> Graph:
    return even_cycle(4)


@pytest.fixture
def q3() -> Graph:
    return hypercube(3)


@pytest.fixture
def k23() -> Graph:
    return complete_bipartite(2, 3)


@pytest.fixture
def triangle() -> Graph:
    return Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def star() -> Graph:
    """A 5-vertex tree."""
    return star_graph(4)


@pytest.fixture
def x() -> Graph:
    return x_graph()


@pytest.fixture
def desargues() -> Graph:
    return middle_levels(2)


@pytest.fixture
def test_settings() -> Settings:
    """Settings with small budgets so exhaustive checks stay fast."""
    return Settings(
        traverse_limit=8,
        traverse_search_budget=50_000,
        max_theta_pairs=40,
        geodesic_samples=8,
        sample_seed=7,
        census_workers=1,
    )


@pytest.fixture
def theta_service():
    """Factory: ThetaService for a graph."""
    return ThetaService


@pytest.fixture
def cycle_service():
    return CycleService


@pytest.fixture
def traverse_service(test_settings):
    def _make(graph: Graph) -> TraverseService:
        return TraverseService(graph, config=test_settings)

    return _make


@pytest.fixture
def zone_service():
    return ZoneService
