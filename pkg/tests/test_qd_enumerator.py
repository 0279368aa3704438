"""
Tests for the Q_d subgraph enumerator.
"""

import pytest

from pcube.core.config import Settings
from pcube.core.exceptions import CanonicalSizeError
from pcube.generators import complete_bipartite, even_cycle, hypercube, path_graph, star_graph
from pcube.models.graph import Graph
from pcube.services.canonical import canonical_key
from pcube.services.qd_enumerator import enumerate_qd_subcubes, expand
from pcube.services.theta_service import ThetaService


class TestExpand:
    """Test cases for isometric expansion."""

    def test_expanding_an_edge_along_itself(self):
        """Test that expanding K2 with A = B = V gives C4."""
        # Arrange
        k2 = Graph.from_edges(2, [(0, 1)])

        # Act
        expanded = expand(k2, (0, 1), (0, 1))

        # Assert
        assert expanded.edges == ((0, 1), (0, 2), (1, 3), (2, 3))

    def test_expanding_a_square_into_a_hexagon(self, c4):
        """Test that two opposite paths of C4 expand to C6."""
        # Act
        expanded = expand(c4, (0, 1, 2), (0, 2, 3))

        # Assert
        assert canonical_key(expanded) == canonical_key(even_cycle(3))


class TestEnumerateQdSubcubes:
    """Test cases for enumerate_qd_subcubes."""

    def test_q1(self):
        """Test that Q1 holds K1 and K2."""
        # Act
        result = enumerate_qd_subcubes(1, 2)

        # Assert
        assert [g.n for g in result.graphs] == [1, 2]
        assert not result.truncated

    def test_q2(self):
        """Test that Q2 holds K1, K2, P3 and C4."""
        # Act
        result = enumerate_qd_subcubes(2, 4)

        # Assert
        expected = [Graph(n=1), Graph.from_edges(2, [(0, 1)]), path_graph(3), even_cycle(2)]
        assert [canonical_key(g) for g in result.graphs] == [canonical_key(g) for g in expected]

    def test_q3(self):
        """Test the partial cubes of Q3: all distinct, all recognized, the named ones present."""
        # Act
        result = enumerate_qd_subcubes(3, 8)

        # Assert
        keys = [canonical_key(g) for g in result.graphs]
        assert len(keys) == len(set(keys))
        for name in (even_cycle(3), hypercube(3), star_graph(3), path_graph(4)):
            assert canonical_key(name) in keys
        assert canonical_key(complete_bipartite(2, 3)) not in keys
        for graph in result.graphs:
            theta = ThetaService(graph)
            assert theta.is_partial_cube()
            assert theta.partition.dimension <= 3
        assert [(g.n, g.m) for g in result.graphs] == sorted((g.n, g.m) for g in result.graphs)

    def test_vertex_bound(self):
        """Test that max_n cuts the enumeration."""
        # Act
        result = enumerate_qd_subcubes(3, 5)

        # Assert
        assert max(g.n for g in result.graphs) == 5
        assert canonical_key(hypercube(3)) not in {canonical_key(g) for g in result.graphs}

    def test_budget_truncates(self):
        """Test that an exhausted budget marks the result truncated."""
        # Act
        result = enumerate_qd_subcubes(3, 8, Settings(qd_expansion_budget=2))

        # Assert
        assert result.truncated
        assert result.covers_tried == 2

    def test_bad_arguments(self):
        """Test the argument checks."""
        # Act & Assert
        with pytest.raises(ValueError):
            enumerate_qd_subcubes(-1, 4)
        with pytest.raises(CanonicalSizeError):
            enumerate_qd_subcubes(3, 17)
