"""Report service: the full structural report printed by `pcube analyze`."""

import logging
from typing import Any, Optional

from pcube.codecs.graph6 import write_graph6
from pcube.core.config import Settings, settings as default_settings
from pcube.models.graph import Graph
from pcube.services.cycle_service import CycleService
from pcube.services.graph_service import GraphService
from pcube.services.theta_service import ThetaService
from pcube.services.zone_service import ZoneService

logger = logging.getLogger(__name__)


class ReportService:
    """Service assembling the analyze report of one graph."""

    def __init__(self, config: Optional[Settings] = None):
        self.config = config or default_settings

    def analyze(self, graph: Graph) -> dict[str, Any]:
        graph_service = GraphService(graph)
        theta = ThetaService(graph, graph_service)
        recognition = theta.recognize()
        report: dict[str, Any] = {
            "schema_version": self.config.schema_version,
            "graph6": write_graph6(graph),
            "invariants": graph_service.basic_invariants().model_dump(mode="json"),
            "recognition": recognition.model_dump(mode="json"),
            "partial_cube": recognition.verdict,
        }
        if not recognition.verdict:
            logger.info(f"{graph!r} is not a partial cube; structural sections omitted")
            return report

        partition = theta.partition
        coordinates = theta.coordinatize(partition)
        cycles = CycleService(graph, theta)
        zones = ZoneService(graph, cycles)
        euler = zones.euler_report()
        verdict = zones.is_tree_zone()
        x_copy = cycles.find_isometric_x()

        report.update(
            {
                "i": euler.i,
                "ce": euler.ce,
                "euler_value": euler.value,
                "tree_zone": euler.tree_zone,
                "theta_classes": partition.to_json_dict(),
                "coordinates": {
                    "dimension": coordinates.dimension,
                    "labels": list(coordinates.labels),
                },
                "cycles": [
                    {"vertices": list(c.vertices), "length": c.length, "convex": c.convex}
                    for c in cycles.enumerate_isometric_cycles()
                ],
                "intertwinings": [
                    {
                        "c1": list(r.c1.vertices),
                        "c2": list(r.c2.vertices),
                        "shared_path": list(r.shared_path),
                        "m": r.m,
                        "n1": r.n1,
                        "n2": r.n2,
                        "residue": r.residue,
                    }
                    for r in cycles.find_intertwinings()
                ],
                "zones": [zone.to_json_dict() for zone in zones.zone_graphs],
                "tree_zone_verdict": {
                    "tree_zone": verdict.tree_zone,
                    "first_non_tree_class": verdict.first_non_tree_class,
                    "reason": verdict.reason.value if verdict.reason else None,
                },
                "euler": euler.model_dump(mode="json"),
                "x": None if x_copy is None else dict(x_copy.mapping),
            }
        )
        return report
