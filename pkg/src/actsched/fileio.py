"""File formats: JSON systems and schedules, CSV heatmaps and bound surfaces.

All floating-point values are serialized with repr-level precision (17
significant digits), so a save/load round trip reproduces arrays bit for
bit.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

import numpy as np

from .errors import DimensionError, ParseError
from .system import LtiSystem, Schedule
from .weighted import epsilon_from_ratio


def _matrix(obj, field: str) -> np.ndarray:
    if not isinstance(obj, list) or not obj:
        raise ParseError(f"field {field!r} must be a non-empty array of rows")
    width = None
    for r, row in enumerate(obj):
        if not isinstance(row, list):
            raise ParseError(f"field {field!r}: row {r} is not an array")
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ParseError(
                f"field {field!r}: row {r} has {len(row)} entries, expected {width}"
            )
        for c, value in enumerate(row):
            if not isinstance(value, (int, float)) or isinstance(value, bool):
                raise ParseError(f"field {field!r}: entry ({r}, {c}) is not a number")
    return np.array(obj, dtype=float)


def load_system(path) -> LtiSystem:
    """Read a system from a JSON file with fields A, B, and optional name."""
    text = Path(path).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise ParseError(f"{path}: top-level value must be an object")
    for field in ("A", "B"):
        if field not in doc:
            raise ParseError(f"{path}: missing field {field!r}")
    A = _matrix(doc["A"], "A")
    B = _matrix(doc["B"], "B")
    try:
        return LtiSystem(A=A, B=B)
    except DimensionError:
        raise
    except ValueError as exc:
        raise DimensionError(str(exc)) from exc


def save_system(sys: LtiSystem, path, name: str | None = None) -> None:
    doc = {"A": sys.A.tolist(), "B": sys.B.tolist()}
    if name is not None:
        doc["name"] = name
    Path(path).write_text(json.dumps(doc, indent=1) + "\n")


def save_schedule(schedule: Schedule, path, algo: str = "",
                  params: dict | None = None, seed: int | None = None) -> None:
    """Write a schedule with its provenance fields to a JSON file."""
    doc = {
        "t": schedule.t,
        "m": schedule.m,
        "s": schedule.s.tolist(),
        "d_avg": schedule.d_avg,
        "algo": algo,
        "params": params or {},
        "seed": seed,
    }
    Path(path).write_text(json.dumps(doc, indent=1) + "\n")


def load_schedule(path) -> tuple[Schedule, dict]:
    """Read a schedule file; returns the schedule and its metadata fields."""
    text = Path(path).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    for field in ("t", "m", "s"):
        if field not in doc:
            raise ParseError(f"{path}: missing field {field!r}")
    s = _matrix(doc["s"], "s")
    if s.shape != (doc["m"], doc["t"]):
        raise DimensionError(
            f"{path}: s grid is {s.shape}, header says ({doc['m']}, {doc['t']})"
        )
    meta = {k: doc.get(k) for k in ("d_avg", "algo", "params", "seed")}
    return Schedule(s=s), meta


def emit_heatmap(schedule: Schedule, path) -> None:
    """Write the scaling grid as CSV rows `input,time,s,s_squared`."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["input", "time", "s", "s_squared"])
        for i in range(schedule.m):
            for k in range(schedule.t):
                s = schedule.s[i, k]
                writer.writerow([i, k, repr(float(s)), repr(float(s * s))])


def epsilon_surface(d_values, t_over_n_values, path) -> None:
    """Write the two-sided approximation factor over a (d, t/n) grid as CSV."""
    d_values = np.asarray(d_values, dtype=float)
    ratios = np.asarray(t_over_n_values, dtype=float)
    if d_values.size == 0 or ratios.size == 0:
        raise ValueError("both grid axes must be non-empty")
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["d", "t_over_n", "epsilon"])
        for d in d_values:
            for r in ratios:
                eps = epsilon_from_ratio(d * r) if d * r > 1.0 else 1.0
                writer.writerow([repr(float(d)), repr(float(r)), repr(float(eps))])
