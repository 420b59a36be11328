from .seeds import derive_seed
from .log import configure_logging, progress
from .parallel import map_chunks

__all__ = [
    "derive_seed",
    "configure_logging",
    "progress",
    "map_chunks",
]
