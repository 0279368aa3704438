"""
Census service: filter graph6 streams down to partial cubes and check the
structure theorems on every survivor.

Each graph is audited on its own (see audit_graph) so a worker pool can
spread the stream; results are folded into a CensusReport in stream order.
"""

import csv
import logging
import random
from itertools import combinations
from typing import IO, Iterable, Iterator, Optional, Sequence

from pcube.codecs.graph6 import parse_graph6, read_graph6_lines, write_graph6
from pcube.core.config import Settings, settings as default_settings
from pcube.core.exceptions import (
    Graph6FormatError,
    GraphSizeError,
    RecognitionDisagreementError,
)
from pcube.models.census import (
    CensusCounts,
    CensusReport,
    CheckName,
    CheckTally,
    GraphAudit,
    InputError,
    LineAudit,
    PerGraphRow,
)
from pcube.models.cycles import IntersectionKind
from pcube.models.events import BudgetEvent, ViolationEvent
from pcube.models.graph import Edge, Graph
from pcube.models.theta import Coordinatization, ThetaPartition
from pcube.models.traverse import Possibility
from pcube.services.cycle_service import CycleService, classify_intersection
from pcube.services.embedding_oracle import embeds_isometrically
from pcube.services.graph_service import GraphService
from pcube.services.qd_enumerator import enumerate_qd_subcubes
from pcube.services.theta_service import ThetaService
from pcube.services.traverse_service import TraverseService
from pcube.services.zone_service import ZoneService, euler_events

logger = logging.getLogger(__name__)

CSV_COLUMNS = (
    "graph6",
    "n",
    "m",
    "girth",
    "min_degree",
    "i",
    "ce",
    "euler_value",
    "tree_zone",
    "has_X",
)

QD_BUDGET_CHECK = "qd.expansion"

_PASSED, _BUDGET, _FAILED = 0, 1, 2

TRICHOTOMY = {
    IntersectionKind.EMPTY,
    IntersectionKind.SINGLE_VERTEX,
    IntersectionKind.SINGLE_EDGE,
}


class _CheckLedger:
    """Per-graph outcome of each applicable check: failed beats budget beats passed."""

    def __init__(self, graph6: str):
        self.graph6 = graph6
        self.outcomes: dict[str, int] = {}
        self.violations: list[ViolationEvent] = []
        self.budget_events: list[BudgetEvent] = []

    def _mark(self, check: str, outcome: int) -> None:
        self.outcomes[check] = max(self.outcomes.get(check, _PASSED), outcome)

    def passed(self, check: CheckName) -> None:
        self._mark(check.value, _PASSED)

    def violation(self, event: ViolationEvent) -> None:
        self.violations.append(event)
        self._mark(event.check, _FAILED)

    def fail(self, check: CheckName, detail: str, witness: Optional[dict] = None) -> None:
        logger.error(f"{check.value} violated on {self.graph6}: {detail}")
        self.violation(
            ViolationEvent(
                graph6=self.graph6, check=check.value, detail=detail, witness=witness or {}
            )
        )

    def exhausted(self, check: CheckName, detail: str) -> None:
        self.budget_events.append(BudgetEvent(graph6=self.graph6, check=check.value, detail=detail))
        self._mark(check.value, _BUDGET)

    def tallies(self) -> dict[str, CheckTally]:
        return {
            check: CheckTally(
                applicable=1,
                passed=int(outcome == _PASSED),
                failed=int(outcome == _FAILED),
                budget_exhausted=int(outcome == _BUDGET),
            )
            for check, outcome in self.outcomes.items()
        }


class CensusService:
    """Service for census runs over graph6 streams and Q_d enumerations."""

    def __init__(self, config: Optional[Settings] = None):
        self.config = config or default_settings

    # -- stream plumbing ------------------------------------------------------

    def filter_stream(
        self, lines: Iterable[str], errors: Optional[list[InputError]] = None
    ) -> Iterator[tuple[Graph, ThetaPartition, Coordinatization]]:
        """Yield the partial cubes of a graph6 stream; parse failures go to errors."""
        for lineno, text in read_graph6_lines(lines):
            try:
                graph = parse_graph6(text)
            except (Graph6FormatError, GraphSizeError) as exc:
                logger.warning(f"Skipping line {lineno}: {exc}")
                if errors is not None:
                    errors.append(InputError(line=lineno, text=text, error=str(exc)))
                continue
            theta = ThetaService(graph)
            if not theta.is_partial_cube():
                continue
            yield graph, theta.partition, theta.coordinatize()

    def audit_line(self, lineno: int, text: str) -> LineAudit:
        try:
            graph = parse_graph6(text)
        except (Graph6FormatError, GraphSizeError) as exc:
            logger.warning(f"Skipping line {lineno}: {exc}")
            return LineAudit(line=lineno, error=InputError(line=lineno, text=text, error=str(exc)))
        return LineAudit(line=lineno, audit=self.audit_graph(graph))

    # -- per-graph checks -----------------------------------------------------

    def _sample_theta_pairs(self, theta: ThetaService, rng: random.Random) -> list[tuple[Edge, Edge]]:
        pairs = theta.edge_pairs_by_class()
        if len(pairs) > self.config.max_theta_pairs:
            pairs = sorted(rng.sample(pairs, self.config.max_theta_pairs))
        return pairs

    def _sample_geodesics(self, theta: ThetaService, rng: random.Random) -> list[tuple[int, ...]]:
        dist = theta.distances.dist
        ends = [(a, b) for a, b in combinations(range(theta.graph.n), 2) if dist[a, b] >= 2]
        if len(ends) > self.config.geodesic_samples:
            ends = sorted(rng.sample(ends, self.config.geodesic_samples))
        return [theta.random_geodesic(a, b, rng) for a, b in ends]

    def _check_traverses(
        self,
        ledger: _CheckLedger,
        traverses: TraverseService,
        pairs: Sequence[tuple[Edge, Edge]],
        girth_gt6: bool,
        rng: random.Random,
    ) -> None:
        theta = traverses.theta
        for e1, e2 in pairs:
            search = traverses.find_traverses(e1, e2, convex_only=True, limit=1)
            if search.budget_exhausted:
                ledger.exhausted(CheckName.CONVEX_TRAVERSE, f"convex traverse {e1} -> {e2}")
            for event in search.events:
                if isinstance(event, ViolationEvent):
                    ledger.violation(event)
            if search.traverses:
                ledger.passed(CheckName.CONVEX_TRAVERSE)

            if girth_gt6:
                everything = traverses.find_traverses(e1, e2, limit=2)
                (v1, u1), (v2, u2), _ = traverses.orient(e1, e2)
                if everything.budget_exhausted:
                    ledger.exhausted(CheckName.UNIQUE_TRAVERSE, f"traverses {e1} -> {e2}")
                elif len(everything.traverses) != 1 or everything.truncated:
                    ledger.fail(
                        CheckName.UNIQUE_TRAVERSE,
                        f"{len(everything.traverses)} traverses from {e1} to {e2}",
                        {"start_edge": list(e1), "end_edge": list(e2)},
                    )
                elif theta.count_geodesics(v1, v2) != 1 or theta.count_geodesics(u1, u2) != 1:
                    ledger.fail(
                        CheckName.UNIQUE_TRAVERSE,
                        f"sides of the traverse from {e1} to {e2} are not the only geodesics",
                        {"start_edge": list(e1), "end_edge": list(e2)},
                    )
                else:
                    ledger.passed(CheckName.UNIQUE_TRAVERSE)

            (v1, _), (v2, _), _ = traverses.orient(e1, e2)
            path = theta.random_geodesic(v1, v2, rng)
            outcome = traverses.two_possibilities(e1, e2, path)
            if outcome.branch != Possibility.VIOLATION:
                ledger.passed(CheckName.TWO_POSSIBILITIES)
            elif any(isinstance(event, BudgetEvent) for event in outcome.events):
                ledger.exhausted(CheckName.TWO_POSSIBILITIES, f"path {list(path)}")
            else:
                for event in outcome.events:
                    ledger.violation(event)

    def _check_cycles(
        self, ledger: _CheckLedger, cycles: CycleService, intersection_applies: bool
    ) -> None:
        isometric = cycles.enumerate_isometric_cycles()
        for cycle in isometric:
            if cycles.antipodal_theta_check(cycle):
                ledger.passed(CheckName.ANTIPODAL_THETA)
            else:
                ledger.fail(
                    CheckName.ANTIPODAL_THETA,
                    f"antipodal edges of {list(cycle.vertices)} lie in different classes",
                    {"cycle": list(cycle.vertices)},
                )

        if intersection_applies:
            ledger.passed(CheckName.INTERSECTION_TRICHOTOMY)
            for c1, c2 in combinations(isometric, 2):
                result = classify_intersection(c1, c2)
                if result.kind not in TRICHOTOMY:
                    ledger.fail(
                        CheckName.INTERSECTION_TRICHOTOMY,
                        f"cycles meet in {result.kind.value}",
                        {"c1": list(c1.vertices), "c2": list(c2.vertices)},
                    )
                    break

        if cycles.has_nonadjacent_intersection(isometric):
            if cycles.intersect_to_intertwine_witness(isometric) is not None:
                ledger.passed(CheckName.INTERTWINING_WITNESS)
            else:
                ledger.fail(
                    CheckName.INTERTWINING_WITNESS,
                    "cycles share non-adjacent vertices but no pair intertwines",
                )

        for record in cycles.find_intertwinings(isometric):
            if record.within_half_bound:
                ledger.passed(CheckName.RESIDUE_ARITHMETIC)
            else:
                ledger.fail(
                    CheckName.RESIDUE_ARITHMETIC,
                    f"intertwining with m={record.m}, n1={record.n1}, n2={record.n2}",
                    {"c1": list(record.c1.vertices), "c2": list(record.c2.vertices)},
                )

    def audit_graph(self, graph: Graph) -> GraphAudit:
        """Recognize one graph and, for partial cubes, run every check that applies."""
        graph6 = write_graph6(graph)
        ledger = _CheckLedger(graph6)
        graph_service = GraphService(graph)
        invariants = graph_service.basic_invariants()
        counts = {"scanned": 1, "bipartite": int(invariants.bipartite)}

        def finish(row: Optional[PerGraphRow] = None) -> GraphAudit:
            return GraphAudit(
                graph6=graph6,
                counts=CensusCounts(**counts),
                checks=ledger.tallies(),
                violations=tuple(ledger.violations),
                budget_events=tuple(ledger.budget_events),
                row=row,
            )

        theta = ThetaService(graph, graph_service)
        try:
            verdict = theta.is_partial_cube()
        except RecognitionDisagreementError as exc:
            ledger.fail(CheckName.EMBEDDING_ORACLE, str(exc))
            return finish()
        if graph.n <= self.config.oracle_max_n:
            oracle = embeds_isometrically(graph)
            if oracle == verdict:
                ledger.passed(CheckName.EMBEDDING_ORACLE)
            else:
                ledger.fail(
                    CheckName.EMBEDDING_ORACLE,
                    f"Θ recognition says {verdict}, brute-force embedding says {oracle}",
                )
        if not verdict:
            return finish()

        girth = invariants.girth
        girth_gt6 = girth is None or girth > 6
        counts["partial_cubes"] = 1
        counts["girth_gt6"] = int(girth_gt6)
        counts["girth_gt6_min_degree_ge3"] = int(girth_gt6 and invariants.min_degree >= 3)
        counts["regular_girth_gt6"] = int(girth_gt6 and invariants.regular)

        if girth_gt6:
            if invariants.min_degree >= 3:
                ledger.fail(
                    CheckName.GIRTH_GT6_MIN_DEGREE,
                    f"girth {girth} and minimum degree {invariants.min_degree}",
                )
            else:
                ledger.passed(CheckName.GIRTH_GT6_MIN_DEGREE)
        if girth_gt6 and invariants.regular:
            # K1, K2, or a connected 2-regular bipartite graph, i.e. an even cycle
            if graph.n <= 2 or invariants.min_degree == 2:
                ledger.passed(CheckName.GIRTH_GT6_REGULAR)
            else:
                ledger.fail(
                    CheckName.GIRTH_GT6_REGULAR,
                    f"{invariants.min_degree}-regular with girth {girth} is not K1, K2 or a cycle",
                )

        cycles = CycleService(graph, theta)
        x_copy = cycles.find_isometric_x()
        self._check_cycles(
            ledger, cycles, girth_gt6 or (girth == 6 and x_copy is None)
        )

        zones = ZoneService(graph, cycles)
        verdict_zones = zones.is_tree_zone()
        for event in verdict_zones.events:
            ledger.violation(event)
        if not verdict_zones.events:
            ledger.passed(CheckName.ZONE_CONNECTED)
        if girth_gt6:
            if verdict_zones.tree_zone:
                ledger.passed(CheckName.GIRTH_GT6_TREE_ZONE)
            else:
                ledger.fail(
                    CheckName.GIRTH_GT6_TREE_ZONE,
                    f"zone graph of class {verdict_zones.first_non_tree_class} is not a tree",
                    {"class_index": verdict_zones.first_non_tree_class},
                )

        report = zones.euler_report()
        ledger.passed(CheckName.EULER_UPPER_BOUND)
        ledger.passed(CheckName.EULER_EQUALITY)
        for event in euler_events(report, graph6):
            ledger.violation(event)

        rng = random.Random(f"{self.config.sample_seed}:{graph6}")
        pairs = self._sample_theta_pairs(theta, rng)
        traverses = TraverseService(graph, cycles, self.config)
        self._check_traverses(ledger, traverses, pairs, girth_gt6, rng)

        for path in self._sample_geodesics(theta, rng):
            if not traverses.has_alternative_geodesic(path):
                continue
            witness = traverses.paste_cycle_witness(path)
            if witness is not None:
                ledger.passed(CheckName.PASTE_CYCLE)
            else:
                ledger.fail(
                    CheckName.PASTE_CYCLE,
                    f"geodesic {list(path)} has a rival but no pasted convex cycle",
                    {"path": list(path)},
                )

        return finish(
            PerGraphRow(
                graph6=graph6,
                n=graph.n,
                m=graph.m,
                girth=girth,
                min_degree=invariants.min_degree,
                i=report.i,
                ce=report.ce,
                euler_value=report.value,
                tree_zone=report.tree_zone,
                has_x=x_copy is not None,
            )
        )

    # -- whole runs -----------------------------------------------------------

    def verify_paper(self, graphs: Iterable[Graph], source: str = "verify") -> CensusReport:
        """Run every check on the given graphs and collect the per-graph rows."""
        report = CensusReport(schema_version=self.config.schema_version, source=source)
        for index, graph in enumerate(graphs, start=1):
            report.add_line(LineAudit(line=index, audit=self.audit_graph(graph)), keep_rows=True)
        logger.info(f"Verified {report.counts.scanned} graphs, {len(report.violations)} violations")
        return report

    def run(self, lines: Iterable[str], source: str = "stdin", keep_rows: bool = False) -> CensusReport:
        """Audit a graph6 stream, in parallel when census_workers > 1."""
        from pcube.tasks.census_tasks import audit_stream

        report = CensusReport(schema_version=self.config.schema_version, source=source)
        for line_audit in audit_stream(read_graph6_lines(lines), self.config):
            report.add_line(line_audit, keep_rows=keep_rows)
        logger.info(
            f"Census of {source}: scanned {report.counts.scanned}, "
            f"partial cubes {report.counts.partial_cubes}, violations {len(report.violations)}"
        )
        return report

    def run_qd(self, d: int, max_n: int, keep_rows: bool = False) -> CensusReport:
        """Census over every partial cube of isometric dimension <= d on <= max_n vertices."""
        enumeration = enumerate_qd_subcubes(d, max_n, self.config)
        report = self.run(
            (write_graph6(graph) for graph in enumeration.graphs),
            source=f"qd:d={d},max_n={max_n}",
            keep_rows=keep_rows,
        )
        if enumeration.truncated:
            report.truncated = True
            report.budget_events.append(
                BudgetEvent(
                    graph6="",
                    check=QD_BUDGET_CHECK,
                    detail=f"expansion stopped after {enumeration.covers_tried} covers",
                )
            )
        return report


def write_csv(rows: Iterable[PerGraphRow], stream: IO[str]) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(
            [
                row.graph6,
                row.n,
                row.m,
                "" if row.girth is None else row.girth,
                row.min_degree,
                row.i,
                row.ce,
                row.euler_value,
                str(row.tree_zone).lower(),
                str(row.has_x).lower(),
            ]
        )
