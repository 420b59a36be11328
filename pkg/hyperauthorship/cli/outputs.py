import json
import math
from os import PathLike
from pathlib import Path
from typing import Any

import numpy as np
import pandas as pd

NA = "NA"


def _plain(value: Any) -> Any:
    """JSON-safe copy: NaN becomes null, numpy scalars and tuples become plain Python."""
    if isinstance(value, dict):
        return {str(key): _plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(item) for item in value]
    if isinstance(value, np.generic):
        value = value.item()
    if isinstance(value, float) and not math.isfinite(value):
        return None if math.isnan(value) else str(value)
    return value


def write_json(path: str | PathLike, data: Any):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(_plain(data), indent=2, sort_keys=True) + "\n", "utf-8")


def read_json(path: str | PathLike) -> Any:
    return json.loads(Path(path).read_text("utf-8"))


def write_frame(path: str | PathLike, frame: pd.DataFrame):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(frame.to_csv(index=False, lineterminator="\n", na_rep=NA), "utf-8")


def write_records(path: str | PathLike, records: list[dict], columns: list[str]):
    write_frame(path, pd.DataFrame(records, columns=columns))
