import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Sequence, TypeVar

import numpy as np

from ..config import config
from .log import progress

T = TypeVar("T")

logger = logging.getLogger(__name__)


def map_chunks(
    func: Callable[[np.ndarray], T],
    items: np.ndarray,
    n_jobs: int | None = None,
    chunk_size: int | None = None,
    desc: str = "sources",
) -> list[T]:
    """
    Apply func to consecutive fixed-size chunks of items and return the results in chunk order.

    Chunk boundaries only depend on chunk_size, never on n_jobs, so any reduction the caller does
    over the returned list in order is bit-identical for every thread count. The numba kernels
    release the GIL, which is what makes the thread pool useful.
    """
    if n_jobs is None:
        n_jobs = config.n_jobs
    if chunk_size is None:
        chunk_size = config.chunk_size

    chunks: Sequence[np.ndarray] = [
        items[start : start + chunk_size] for start in range(0, len(items), chunk_size)
    ]

    if n_jobs <= 1 or len(chunks) <= 1:
        return [func(chunk) for chunk in progress(chunks, logger, desc, len(chunks))]

    with ThreadPoolExecutor(max_workers=n_jobs) as executor:
        return list(progress(executor.map(func, chunks), logger, desc, len(chunks)))
