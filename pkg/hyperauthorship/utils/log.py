import logging
from typing import Iterable, TypeVar

from tqdm import tqdm

T = TypeVar("T")

_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def configure_logging(verbosity: int = 0):
    """Install a single stream handler on the package logger. Only the CLI calls this."""
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG

    logger = logging.getLogger("hyperauthorship")
    logger.setLevel(level)
    if not logger.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(_FORMAT))
        logger.addHandler(handler)


def progress(
    iterable: Iterable[T], logger: logging.Logger, desc: str, total: int | None = None
) -> Iterable[T]:
    """Wrap an iterable in a tqdm bar when the logger would show INFO messages."""
    if not logger.isEnabledFor(logging.INFO):
        return iterable
    return tqdm(iterable, desc=desc, total=total, leave=False)
