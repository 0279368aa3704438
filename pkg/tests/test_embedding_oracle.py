"""
Tests for the brute-force hypercube embedding oracle.
"""

import networkx as nx
import pytest

from pcube.generators import cartesian_product, even_cycle, hypercube, path_graph, x_graph
from pcube.models.graph import Graph
from pcube.services.embedding_oracle import embeds_isometrically
from pcube.services.theta_service import ThetaService


class TestEmbedsIsometrically:
    """Test cases for embeds_isometrically."""

    @pytest.mark.parametrize(
        "graph",
        [
            Graph(n=1),
            Graph.from_edges(2, [(0, 1)]),
            path_graph(6),
            even_cycle(4),
            hypercube(3),
            x_graph(),
            cartesian_product(even_cycle(3), path_graph(2)),
        ],
        ids=["K1", "K2", "P6", "C8", "Q3", "X", "C6xP2"],
    )
    def test_partial_cubes_embed(self, graph):
        """Test that partial cubes embed."""
        # Act & Assert
        assert embeds_isometrically(graph)

    def test_non_partial_cubes(self, k23, triangle):
        """Test that K2,3, a triangle, an empty and a disconnected graph do not embed."""
        # Act & Assert
        assert not embeds_isometrically(k23)
        assert not embeds_isometrically(triangle)
        assert not embeds_isometrically(Graph(n=0))
        assert not embeds_isometrically(Graph.from_edges(4, [(0, 1), (2, 3)]))

    @pytest.mark.slow
    def test_agrees_with_theta_recognition(self):
        """Test agreement with Θ recognition on every connected graph with up to 7 vertices."""
        for g in nx.graph_atlas_g():
            if g.number_of_nodes() == 0 or not nx.is_connected(g):
                continue
            # Arrange
            graph = Graph.from_edges(g.number_of_nodes(), list(g.edges))

            # Act
            oracle = embeds_isometrically(graph)

            # Assert
            assert oracle == ThetaService(graph).is_partial_cube(), list(g.edges)
