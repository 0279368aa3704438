"""
Tests for TraverseService: traverse search, validation and the geodesic claims.
"""

import pytest

from pcube.core.config import Settings
from pcube.core.exceptions import (
    InvalidGeodesicError,
    NotPartialCubeError,
    NotThetaRelatedError,
)
from pcube.models.events import BudgetEvent
from pcube.models.traverse import Possibility, Traverse, TraverseClause
from pcube.services.traverse_service import TraverseService


class TestOrient:
    """Test cases for orienting a pair of Θ-related edges."""

    def test_matching_sides(self, traverse_service, c6):
        """Test that v2 is the endpoint of e2 nearer to v1."""
        # Act
        start, end, k = traverse_service(c6).orient((0, 1), (3, 4))

        # Assert
        assert start == (0, 1)
        assert end == (4, 3)
        assert k == 0

    def test_unrelated_edges(self, traverse_service, q3):
        """Test that edges of different classes are rejected."""
        # Act & Assert
        with pytest.raises(NotThetaRelatedError):
            traverse_service(q3).orient((0, 1), (0, 2))

    def test_same_edge(self, traverse_service, q3):
        """Test that a traverse needs two distinct edges."""
        # Act & Assert
        with pytest.raises(ValueError):
            traverse_service(q3).orient((0, 1), (1, 0))

    def test_non_partial_cube(self, traverse_service, k23):
        """Test that traverses are only searched in partial cubes."""
        # Act & Assert
        with pytest.raises(NotPartialCubeError):
            traverse_service(k23).orient((0, 2), (1, 3))


class TestFindTraverses:
    """Test cases for find_traverses."""

    def test_single_cycle(self, traverse_service, c6):
        """Test that C6 itself is the only traverse between opposite edges."""
        # Act
        search = traverse_service(c6).find_traverses((0, 1), (3, 4))

        # Assert
        assert len(search.traverses) == 1
        traverse = search.traverses[0]
        assert traverse.v_side == (0, 5, 4)
        assert traverse.u_side == (1, 2, 3)
        assert traverse.length == 2
        assert traverse.convex
        assert not search.truncated

    def test_hypercube_convex_traverses(self, traverse_service, q3):
        """Test the two square-by-square traverses across Q3."""
        # Act
        search = traverse_service(q3).find_traverses((0, 1), (6, 7), convex_only=True)

        # Assert
        assert [t.v_side for t in search.traverses] == [(0, 2, 6), (0, 4, 6)]
        assert all(len(t.cycles) == 2 and t.convex for t in search.traverses)
        assert search.events == ()

    def test_hypercube_all_traverses(self, traverse_service, q3):
        """Test that the two isometric hexagons also count when convexity is not required."""
        # Act
        search = traverse_service(q3).find_traverses((0, 1), (6, 7))

        # Assert
        assert len(search.traverses) == 4
        assert [len(t.cycles) for t in search.traverses] == [2, 1, 2, 1]
        hexagons = [t for t in search.traverses if len(t.cycles) == 1]
        assert sorted(t.cycles[0].vertices for t in hexagons) == [
            (0, 1, 3, 7, 6, 4),
            (0, 1, 5, 7, 6, 2),
        ]
        assert not any(t.convex for t in hexagons)
        assert not search.truncated

    def test_limit_truncates(self, traverse_service, q3):
        """Test that finding more traverses than the limit marks the search truncated."""
        # Act
        search = traverse_service(q3).find_traverses((0, 1), (6, 7), convex_only=True, limit=1)

        # Assert
        assert len(search.traverses) == 1
        assert search.truncated
        assert not search.budget_exhausted

    def test_limit_reached_exactly(self, traverse_service, q3):
        """Test that a limit equal to the number of traverses does not truncate."""
        # Act
        search = traverse_service(q3).find_traverses((0, 1), (6, 7), convex_only=True, limit=2)

        # Assert
        assert len(search.traverses) == 2
        assert not search.truncated

    def test_budget_exhaustion(self, q3):
        """Test that running out of expansions yields a budget event, not a violation."""
        # Arrange
        service = TraverseService(q3, config=Settings(traverse_search_budget=1))

        # Act
        search = service.find_traverses((0, 1), (6, 7), convex_only=True)

        # Assert
        assert search.budget_exhausted
        assert search.truncated
        assert len(search.events) == 1
        assert isinstance(search.events[0], BudgetEvent)

    def test_every_traverse_is_valid(self, traverse_service, desargues):
        """Test that each traverse found in M5 passes validation."""
        # Arrange
        service = traverse_service(desargues)
        e1, e2 = service.theta.edge_pairs_by_class()[0]

        # Act
        search = service.find_traverses(e1, e2, convex_only=True)

        # Assert
        assert search.traverses
        assert all(service.validate_traverse(t).valid for t in search.traverses)


class TestValidateTraverse:
    """Test cases for validate_traverse."""

    @pytest.fixture
    def c6_traverse(self, traverse_service, c6) -> Traverse:
        return traverse_service(c6).find_traverses((0, 1), (3, 4)).traverses[0]

    def test_found_traverse_is_valid(self, traverse_service, c6, c6_traverse):
        """Test that a found traverse is valid."""
        # Act
        check = traverse_service(c6).validate_traverse(c6_traverse)

        # Assert
        assert check.valid
        assert check.clause is None

    @pytest.mark.parametrize(
        "update, clause",
        [
            ({"cycles": ()}, TraverseClause.EMPTY),
            ({"end_edge": (1, 2)}, TraverseClause.NOT_THETA_RELATED),
            ({"v_side": (0, 1, 2, 3, 4)}, TraverseClause.SIDE_GEODESIC),
            ({"v_side": (5, 4)}, TraverseClause.SIDE_PATH),
            ({"length": 3}, TraverseClause.SIDE_LENGTH),
            ({"convex": False}, TraverseClause.CONVEX_FLAG),
        ],
        ids=["empty", "unrelated", "detour", "wrong-start", "length", "convex-flag"],
    )
    def test_broken_traverse(self, traverse_service, c6, c6_traverse, update, clause):
        """Test that the first violated condition is named."""
        # Arrange
        broken = c6_traverse.model_copy(update=update)

        # Act
        check = traverse_service(c6).validate_traverse(broken)

        # Assert
        assert not check.valid
        assert check.clause == clause


class TestGeodesicClaims:
    """Test cases for paste_cycle_witness and two_possibilities."""

    def test_paste_cycle_on_square(self, traverse_service, q3):
        """Test that a square is glued onto a path with a rival geodesic."""
        # Act
        witness = traverse_service(q3).paste_cycle_witness((0, 1, 3))

        # Assert
        assert witness.cycle.vertices == (0, 1, 3, 2)
        assert (witness.start, witness.end) == (0, 2)

    def test_paste_cycle_on_hexagon(self, traverse_service, c6):
        """Test that C6 is glued onto half of itself."""
        # Act
        witness = traverse_service(c6).paste_cycle_witness((0, 1, 2, 3))

        # Assert
        assert witness.cycle.length == 6
        assert (witness.start, witness.end) == (0, 3)

    def test_unique_geodesic_has_no_witness(self, traverse_service, c6):
        """Test that the only geodesic needs no pasted cycle."""
        # Act & Assert
        assert traverse_service(c6).paste_cycle_witness((0, 1, 2)) is None
        assert not traverse_service(c6).has_alternative_geodesic((0, 1, 2))

    def test_non_geodesic(self, traverse_service, c6):
        """Test that a walk that is not a geodesic is rejected."""
        # Act & Assert
        with pytest.raises(InvalidGeodesicError):
            traverse_service(c6).paste_cycle_witness((0, 1, 0))

    def test_side_of_traverse(self, traverse_service, q3):
        """Test that a geodesic between matched endpoints is a convex traverse side."""
        # Act
        outcome = traverse_service(q3).two_possibilities((0, 1), (6, 7), (0, 4, 6))

        # Assert
        assert outcome.branch == Possibility.SIDE_OF_TRAVERSE
        assert outcome.traverse.v_side == (0, 4, 6)

    def test_path_must_end_at_matching_endpoint(self, traverse_service, q3):
        """Test that a path ending away from e2 is rejected."""
        # Act & Assert
        with pytest.raises(ValueError):
            traverse_service(q3).two_possibilities((0, 1), (6, 7), (0, 2))

    def test_path_must_start_on_e1(self, traverse_service, q3):
        """Test that a path starting away from e1 is rejected."""
        # Act & Assert
        with pytest.raises(ValueError):
            traverse_service(q3).two_possibilities((0, 1), (6, 7), (2, 6))
