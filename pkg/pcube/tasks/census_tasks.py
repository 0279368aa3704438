"""Per-line census tasks run inside pool workers."""

import logging
from typing import Any, Iterable, Iterator, Optional

from pcube.core.config import Settings
from pcube.models.census import LineAudit
from pcube.services.census_service import CensusService
from pcube.tasks.worker_pool import imap_ordered

logger = logging.getLogger(__name__)

# One service per worker process, built by init_worker.
_service: Optional[CensusService] = None


def init_worker(config_data: dict[str, Any]) -> None:
    global _service
    _service = CensusService(Settings(**config_data))


def audit_line_task(item: tuple[int, str]) -> LineAudit:
    """Audit one numbered graph6 line."""
    lineno, text = item
    if _service is None:
        raise RuntimeError("census worker used before init_worker")
    return _service.audit_line(lineno, text)


def audit_stream(lines: Iterable[tuple[int, str]], config: Settings) -> Iterator[LineAudit]:
    """Audit numbered graph6 lines, results in stream order."""
    return imap_ordered(
        audit_line_task,
        lines,
        config,
        initializer=init_worker,
        initargs=(config.model_dump(),),
    )
