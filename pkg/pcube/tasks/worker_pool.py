"""Worker pool configuration for census runs."""

import logging
import multiprocessing
from typing import Any, Callable, Iterable, Iterator, Optional, TypeVar

from tqdm import tqdm

from pcube.core.config import Settings

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def imap_ordered(
    func: Callable[[T], R],
    items: Iterable[T],
    config: Settings,
    initializer: Optional[Callable[..., None]] = None,
    initargs: tuple[Any, ...] = (),
    total: Optional[int] = None,
) -> Iterator[R]:
    """Apply func to every item and yield results in input order.

    One worker runs in-process; more use a multiprocessing pool fed in
    chunks of census_chunk_size.
    """
    progress = tqdm(
        total=total,
        unit="graph",
        disable=not config.show_progress,
        leave=False,
    )
    try:
        if config.census_workers == 1:
            if initializer is not None:
                initializer(*initargs)
            for item in items:
                yield func(item)
                progress.update(1)
            return

        logger.info(
            f"Starting {config.census_workers} census workers, chunk size {config.census_chunk_size}"
        )
        with multiprocessing.Pool(
            processes=config.census_workers,
            initializer=initializer,
            initargs=initargs,
        ) as pool:
            for result in pool.imap(func, items, chunksize=config.census_chunk_size):
                yield result
                progress.update(1)
    finally:
        progress.close()
