"""
Tests for the graph6 codec.
"""

import networkx as nx
import pytest

from pcube.codecs.graph6 import parse_graph6, read_graph6_lines, write_graph6
from pcube.core.exceptions import Graph6FormatError
from pcube.generators import even_cycle, hypercube, middle_levels, path_graph, x_graph
from pcube.models.graph import Graph


def _networkx_graph6(graph: Graph) -> str:
    g = nx.Graph()
    g.add_nodes_from(range(graph.n))
    g.add_edges_from(graph.edges)
    return nx.to_graph6_bytes(g, nodes=list(range(graph.n)), header=False).decode().strip()


class TestParseGraph6:
    """Test cases for parse_graph6."""

    def test_single_vertex(self):
        """Test that '@' decodes to K1."""
        # Act
        graph = parse_graph6("@")

        # Assert
        assert graph.n == 1
        assert graph.edges == ()

    def test_single_edge(self):
        """Test that 'A_' decodes to K2."""
        # Act
        graph = parse_graph6("A_")

        # Assert
        assert graph.n == 2
        assert graph.edges == ((0, 1),)

    def test_header_and_whitespace_are_tolerated(self):
        """Test that the optional header and trailing newline are skipped."""
        # Act
        graph = parse_graph6(">>graph6<<A_\n")

        # Assert
        assert graph.edges == ((0, 1),)

    @pytest.mark.parametrize(
        "text",
        ["", "A", "A`", "A\x7f", "A__", "~??", "A\ufffd"],
        ids=[
            "empty",
            "missing-body",
            "padding-bits",
            "out-of-range",
            "extra-byte",
            "truncated-size",
            "non-ascii",
        ],
    )
    def test_malformed_lines_are_rejected(self, text):
        """Test that malformed graph6 raises Graph6FormatError."""
        # Act & Assert
        with pytest.raises(Graph6FormatError):
            parse_graph6(text)

    def test_agrees_with_networkx(self):
        """Test that decoding matches networkx on a named graph."""
        # Arrange
        source = nx.petersen_graph()
        text = nx.to_graph6_bytes(source, header=False).decode().strip()

        # Act
        graph = parse_graph6(text)

        # Assert
        assert graph.n == 10
        assert set(graph.edges) == {tuple(sorted(e)) for e in source.edges}


class TestWriteGraph6:
    """Test cases for write_graph6."""

    def test_small_graphs(self, k1, k2):
        """Test the canonical strings of K1 and K2."""
        # Assert
        assert write_graph6(k1) == "@"
        assert write_graph6(k2) == "A_"
        assert write_graph6(Graph(n=0)) == "?"

    @pytest.mark.parametrize(
        "graph",
        [even_cycle(3), hypercube(3), hypercube(4), middle_levels(2), x_graph(), path_graph(100)],
        ids=["C6", "Q3", "Q4", "M5", "X", "P100"],
    )
    def test_matches_networkx(self, graph):
        """Test that encoding is byte-identical to networkx, including long size fields."""
        # Act
        text = write_graph6(graph)

        # Assert
        assert text == _networkx_graph6(graph)
        assert parse_graph6(text).same_structure(graph)

    def test_long_size_field(self):
        """Test that n >= 63 uses the four-byte size field."""
        # Act
        text = write_graph6(path_graph(63))

        # Assert
        assert text.startswith("~??~")


class TestReadGraph6Lines:
    """Test cases for read_graph6_lines."""

    def test_blank_lines_keep_numbering(self):
        """Test that blank lines are skipped without renumbering."""
        # Arrange
        lines = ["@\n", "\n", "  A_  \n"]

        # Act
        result = list(read_graph6_lines(lines))

        # Assert
        assert result == [(1, "@"), (3, "A_")]
