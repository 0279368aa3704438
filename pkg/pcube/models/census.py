"""
Census report models: per-check tallies, per-graph rows and the merged report.
"""

from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, computed_field

from pcube.models.events import BudgetEvent, ViolationEvent
from pcube.models.graph import Graph


class CheckName(str, Enum):
    """Census checks, in report order."""

    EMBEDDING_ORACLE = "recognition.embedding_oracle"
    GIRTH_GT6_MIN_DEGREE = "girth_gt6.min_degree_below_3"
    GIRTH_GT6_REGULAR = "girth_gt6.regular_is_cycle"
    INTERSECTION_TRICHOTOMY = "cycles.intersection_trichotomy"
    GIRTH_GT6_TREE_ZONE = "girth_gt6.tree_zone"
    UNIQUE_TRAVERSE = "girth_gt6.unique_traverse"
    EULER_UPPER_BOUND = "euler.upper_bound"
    EULER_EQUALITY = "euler.equality_iff_tree_zone"
    ZONE_CONNECTED = "zone.connected"
    CONVEX_TRAVERSE = "traverse.convex_exists"
    PASTE_CYCLE = "geodesic.paste_cycle"
    TWO_POSSIBILITIES = "geodesic.two_possibilities"
    INTERTWINING_WITNESS = "intertwining.witness_exists"
    RESIDUE_ARITHMETIC = "intertwining.residue_arithmetic"
    ANTIPODAL_THETA = "cycles.antipodal_theta"


class CheckStatus(str, Enum):
    VACUOUS = "vacuous"
    PASSED = "passed"
    FAILED = "failed"


class CheckTally(BaseModel):
    """Graphs a check applied to, split by outcome."""

    model_config = ConfigDict(frozen=True)

    applicable: int = 0
    passed: int = 0
    failed: int = 0
    budget_exhausted: int = 0

    @computed_field  # type: ignore[misc]
    @property
    def status(self) -> CheckStatus:
        if self.failed:
            return CheckStatus.FAILED
        if self.applicable == 0:
            return CheckStatus.VACUOUS
        return CheckStatus.PASSED

    def merge(self, other: "CheckTally") -> "CheckTally":
        return CheckTally(
            applicable=self.applicable + other.applicable,
            passed=self.passed + other.passed,
            failed=self.failed + other.failed,
            budget_exhausted=self.budget_exhausted + other.budget_exhausted,
        )


class CensusCounts(BaseModel):
    scanned: int = 0
    bipartite: int = 0
    partial_cubes: int = 0
    girth_gt6: int = 0
    girth_gt6_min_degree_ge3: int = 0
    regular_girth_gt6: int = 0

    def merge(self, other: "CensusCounts") -> "CensusCounts":
        return CensusCounts(
            **{name: getattr(self, name) + getattr(other, name) for name in CensusCounts.model_fields}
        )


class PerGraphRow(BaseModel):
    """One CSV row of per-graph invariants."""

    model_config = ConfigDict(frozen=True)

    graph6: str
    n: int
    m: int
    girth: Optional[int] = None
    min_degree: int
    i: int
    ce: int
    euler_value: int
    tree_zone: bool
    has_x: bool


class InputError(BaseModel):
    model_config = ConfigDict(frozen=True)

    line: int
    text: str
    error: str


class GraphAudit(BaseModel):
    """Everything the census learned from one parsed graph."""

    model_config = ConfigDict(frozen=True)

    graph6: str
    counts: CensusCounts
    checks: dict[str, CheckTally] = Field(default_factory=dict)
    violations: tuple[ViolationEvent, ...] = ()
    budget_events: tuple[BudgetEvent, ...] = ()
    row: Optional[PerGraphRow] = None


class LineAudit(BaseModel):
    """Result of auditing one input line; exactly one of error and audit is set."""

    model_config = ConfigDict(frozen=True)

    line: int
    error: Optional[InputError] = None
    audit: Optional[GraphAudit] = None


def empty_checks() -> dict[str, CheckTally]:
    return {name.value: CheckTally() for name in CheckName}


class CensusReport(BaseModel):
    """Aggregated census results; identical for identical input streams."""

    schema_version: str
    source: str
    truncated: bool = False
    counts: CensusCounts = Field(default_factory=CensusCounts)
    checks: dict[str, CheckTally] = Field(default_factory=empty_checks)
    violations: list[ViolationEvent] = Field(default_factory=list)
    budget_events: list[BudgetEvent] = Field(default_factory=list)
    input_errors: list[InputError] = Field(default_factory=list)
    per_graph: Optional[list[PerGraphRow]] = None

    @property
    def has_violations(self) -> bool:
        return bool(self.violations)

    def add_line(self, line_audit: LineAudit, keep_rows: bool = False) -> None:
        """Fold one line's audit into the report, in stream order."""
        if line_audit.error is not None:
            self.input_errors.append(line_audit.error)
            return
        audit = line_audit.audit
        if audit is None:
            return
        self.counts = self.counts.merge(audit.counts)
        for name, tally in audit.checks.items():
            self.checks[name] = self.checks.get(name, CheckTally()).merge(tally)
        self.violations.extend(audit.violations)
        self.budget_events.extend(audit.budget_events)
        if keep_rows and audit.row is not None:
            if self.per_graph is None:
                self.per_graph = []
            self.per_graph.append(audit.row)


class QdEnumeration(BaseModel):
    """Connected isometric subgraphs of Q_d up to isomorphism, smallest first."""

    model_config = ConfigDict(frozen=True)

    dimension: int
    max_n: int
    graphs: tuple[Graph, ...] = ()
    truncated: bool = Field(
        default=False, description="Expansion budget ran out before the search finished"
    )
    covers_tried: int = 0
