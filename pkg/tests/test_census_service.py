"""
Tests for CensusService, the census report and the worker pool.
"""

import io

import networkx as nx
import pytest

from pcube.codecs.graph6 import write_graph6
from pcube.core.config import Settings
from pcube.core.exceptions import RecognitionDisagreementError
from pcube.generators import middle_levels, path_graph, star_graph
from pcube.models.census import CheckName, CheckStatus
from pcube.services.census_service import (
    CSV_COLUMNS,
    QD_BUDGET_CHECK,
    CensusService,
    write_csv,
)
from pcube.services.theta_service import ThetaService


@pytest.fixture
def census(test_settings) -> CensusService:
    return CensusService(test_settings)


class TestFilterStream:
    """Test cases for filter_stream."""

    def test_keeps_partial_cubes(self, census, c6, k23, q3):
        """Test that only partial cubes survive, with their classes and coordinates."""
        # Arrange
        lines = [write_graph6(g) + "\n" for g in (c6, k23, q3)] + ["A\n"]
        errors = []

        # Act
        survivors = list(census.filter_stream(lines, errors))

        # Assert
        assert [graph.n for graph, _, _ in survivors] == [6, 8]
        assert [partition.dimension for _, partition, _ in survivors] == [3, 3]
        assert all(coordinates.isometric for _, _, coordinates in survivors)
        assert [(e.line, e.text) for e in errors] == [(4, "A")]


class TestAuditGraph:
    """Test cases for audit_graph."""

    def test_c6(self, census, c6):
        """Test the row and checks of C6."""
        # Act
        audit = census.audit_graph(c6)

        # Assert
        assert audit.violations == ()
        row = audit.row
        assert (row.n, row.m, row.girth, row.i, row.ce, row.euler_value) == (6, 6, 6, 3, 1, 2)
        assert row.tree_zone and not row.has_x
        assert audit.counts.partial_cubes == 1
        assert audit.counts.girth_gt6 == 0
        assert audit.checks[CheckName.EMBEDDING_ORACLE.value].passed == 1
        assert audit.checks[CheckName.ANTIPODAL_THETA.value].passed == 1
        assert CheckName.GIRTH_GT6_MIN_DEGREE.value not in audit.checks

    def test_c8_runs_the_large_girth_checks(self, census, c8):
        """Test that C8 passes every check that applies above girth six."""
        # Act
        audit = census.audit_graph(c8)

        # Assert
        assert audit.violations == ()
        assert audit.counts.girth_gt6 == 1
        assert audit.counts.regular_girth_gt6 == 1
        for check in (
            CheckName.GIRTH_GT6_MIN_DEGREE,
            CheckName.GIRTH_GT6_REGULAR,
            CheckName.GIRTH_GT6_TREE_ZONE,
            CheckName.UNIQUE_TRAVERSE,
            CheckName.INTERSECTION_TRICHOTOMY,
            CheckName.CONVEX_TRAVERSE,
            CheckName.TWO_POSSIBILITIES,
        ):
            assert audit.checks[check.value].passed == 1, check

    def test_tree(self, census):
        """Test that trees count as girth above six and have no girth in the row."""
        # Act
        audit = census.audit_graph(star_graph(3))

        # Assert
        assert audit.violations == ()
        assert audit.row.girth is None
        assert audit.row.euler_value == 2
        assert audit.counts.girth_gt6 == 1

    def test_hypercube(self, census, q3):
        """Test Q3: intertwinings, pasted cycles and no tree-zone."""
        # Act
        audit = census.audit_graph(q3)

        # Assert
        assert audit.violations == ()
        assert not audit.row.tree_zone
        assert audit.row.euler_value == 1
        assert audit.checks[CheckName.INTERTWINING_WITNESS.value].passed == 1
        assert audit.checks[CheckName.RESIDUE_ARITHMETIC.value].passed == 1
        assert audit.checks[CheckName.PASTE_CYCLE.value].passed == 1

    def test_middle_level_graph(self, census):
        """Test that M5 passes every applicable check and contains X."""
        # Act
        audit = census.audit_graph(middle_levels(2))

        # Assert
        assert audit.violations == ()
        assert audit.row.has_x
        assert audit.row.euler_value <= 2

    def test_non_partial_cube(self, census, k23):
        """Test that K2,3 is scanned and cross-checked but gets no row."""
        # Act
        audit = census.audit_graph(k23)

        # Assert
        assert audit.row is None
        assert audit.counts.scanned == 1
        assert audit.counts.partial_cubes == 0
        assert audit.checks[CheckName.EMBEDDING_ORACLE.value].passed == 1

    def test_oracle_disagreement_is_a_violation(self, census, c6, mocker):
        """Test that a brute-force verdict differing from Θ recognition is reported."""
        # Arrange
        mocker.patch(
            "pcube.services.census_service.embeds_isometrically", return_value=False
        )

        # Act
        audit = census.audit_graph(c6)

        # Assert
        assert [v.check for v in audit.violations][:1] == [CheckName.EMBEDDING_ORACLE.value]
        assert audit.checks[CheckName.EMBEDDING_ORACLE.value].failed == 1

    def test_recognition_disagreement_is_a_violation(self, census, c6, mocker):
        """Test that disagreeing recognition verdicts become a violation, not a crash."""
        # Arrange
        mocker.patch.object(
            ThetaService,
            "is_partial_cube",
            side_effect=RecognitionDisagreementError("verdicts differ"),
        )

        # Act
        audit = census.audit_graph(c6)

        # Assert
        assert len(audit.violations) == 1
        assert audit.violations[0].check == CheckName.EMBEDDING_ORACLE.value
        assert audit.row is None

    def test_budget_exhaustion_is_not_a_violation(self, q3):
        """Test that a tiny traverse budget yields budget events only."""
        # Arrange
        service = CensusService(Settings(traverse_search_budget=1))

        # Act
        audit = service.audit_graph(q3)

        # Assert
        assert audit.violations == ()
        assert audit.budget_events
        tally = audit.checks[CheckName.CONVEX_TRAVERSE.value]
        assert tally.budget_exhausted == 1 and tally.failed == 0


class TestRun:
    """Test cases for whole census runs."""

    def test_stream(self, census, c6, k23, q3):
        """Test counts, input errors and the report of a mixed stream."""
        # Arrange
        lines = [write_graph6(g) for g in (c6, k23, q3)] + ["", "not-graph6"]

        # Act
        report = census.run(lines, source="test", keep_rows=True)

        # Assert
        assert report.counts.scanned == 3
        assert report.counts.bipartite == 3
        assert report.counts.partial_cubes == 2
        assert not report.has_violations
        assert [e.line for e in report.input_errors] == [5]
        assert [row.n for row in report.per_graph] == [6, 8]
        assert report.checks[CheckName.EMBEDDING_ORACLE.value].applicable == 3
        assert report.checks[CheckName.GIRTH_GT6_REGULAR.value].status == CheckStatus.VACUOUS

    def test_rows_are_dropped_unless_kept(self, census, c6):
        """Test that per-graph rows are only collected on request."""
        # Act
        report = census.run([write_graph6(c6)])

        # Assert
        assert report.per_graph is None

    def test_deterministic(self, census, q3):
        """Test that identical streams give identical reports."""
        # Arrange
        lines = [write_graph6(q3), write_graph6(path_graph(4))]

        # Act
        first = census.run(lines).model_dump_json()
        second = census.run(lines).model_dump_json()

        # Assert
        assert first == second

    @pytest.mark.slow
    def test_worker_pool_matches_in_process(self, test_settings, c6, q3, c8):
        """Test that two workers produce the same report as one."""
        # Arrange
        lines = [write_graph6(g) for g in (c6, q3, c8)]
        pooled = test_settings.model_copy(update={"census_workers": 2, "census_chunk_size": 1})

        # Act
        single = CensusService(test_settings).run(lines).model_dump_json()
        multi = CensusService(pooled).run(lines).model_dump_json()

        # Assert
        assert single == multi

    def test_qd_source(self, census):
        """Test a census over the partial cubes of Q2."""
        # Act
        report = census.run_qd(2, 4)

        # Assert
        assert report.counts.scanned == 4
        assert report.counts.partial_cubes == 4
        assert not report.truncated
        assert report.source == "qd:d=2,max_n=4"

    @pytest.mark.slow
    def test_small_connected_graphs_have_no_violations(self, census):
        """Test a clean census over every connected graph on up to 7 vertices."""
        # Arrange
        lines = [
            nx.to_graph6_bytes(g, header=False).decode("ascii").strip()
            for g in nx.graph_atlas_g()
            if g.number_of_nodes() > 0 and nx.is_connected(g)
        ]

        # Act
        report = census.run(lines)

        # Assert
        assert report.counts.scanned == len(lines)
        assert report.counts.partial_cubes > 0
        assert report.counts.girth_gt6_min_degree_ge3 == 0
        assert report.violations == []
        assert report.input_errors == []

    @pytest.mark.slow
    def test_partial_cubes_of_q5_have_no_violations(self, census):
        """Test a clean census over the partial cubes of Q5 with at most 16 vertices."""
        # Act
        report = census.run_qd(5, 16)

        # Assert
        assert report.counts.partial_cubes == report.counts.scanned > 0
        assert report.counts.girth_gt6_min_degree_ge3 == 0
        assert report.violations == []

    def test_qd_budget(self, test_settings):
        """Test that a truncated enumeration is flagged in the report."""
        # Arrange
        config = test_settings.model_copy(update={"qd_expansion_budget": 2})

        # Act
        report = CensusService(config).run_qd(3, 8)

        # Assert
        assert report.truncated
        assert report.budget_events[-1].check == QD_BUDGET_CHECK

    def test_verify(self, census, c6):
        """Test that verify keeps the per-graph rows."""
        # Act
        report = census.verify_paper([c6])

        # Assert
        assert report.source == "verify"
        assert len(report.per_graph) == 1


class TestWriteCsv:
    """Test cases for write_csv."""

    def test_columns_and_values(self, census, c6):
        """Test the header and one row."""
        # Arrange
        rows = census.verify_paper([c6, star_graph(2)]).per_graph
        stream = io.StringIO()

        # Act
        write_csv(rows, stream)

        # Assert
        lines = stream.getvalue().splitlines()
        assert lines[0] == ",".join(CSV_COLUMNS)
        assert lines[1] == f"{write_graph6(c6)},6,6,6,2,3,1,2,true,false"
        assert lines[2].split(",")[3] == ""
