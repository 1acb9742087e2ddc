"""CSV/JSON readers for the solver CLI's output files.

Columns come back as float arrays with blanks mapped to NaN, so absent
values (e.g. the width in a split-spectrum row) plot as gaps.
"""
from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .errors import EmptyInput, MissingColumn, MissingInput


def read_csv(path: str | Path, required: tuple[str, ...]) -> dict[str, np.ndarray]:
    path = Path(path)
    if not path.exists():
        raise MissingInput(str(path))
    lines = path.read_text().splitlines()
    header = lines[0].split(",") if lines else []
    for column in required:
        if column not in header:
            raise MissingColumn(f"{path}: missing column {column!r} (have {header})")
    rows = [line.split(",") for line in lines[1:] if line]
    if not rows:
        raise EmptyInput(str(path))
    table = {}
    for j, name in enumerate(header):
        table[name] = np.array([float(r[j]) if r[j] != "" else np.nan for r in rows])
    return table


def read_json(path: str | Path) -> dict:
    path = Path(path)
    if not path.exists():
        raise MissingInput(str(path))
    return json.loads(path.read_text())
