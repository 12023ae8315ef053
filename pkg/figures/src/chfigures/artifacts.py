"""Readers for the solver's artifact formats.

Implemented against the documented formats only:
- CSV files start with a "# name,name,..." header line
- 2D snapshots are legacy ASCII VTK STRUCTURED_POINTS with one SCALARS
  block per component, x varying fastest
"""

from __future__ import annotations

import numpy as np


class ArtifactError(ValueError):
    """An artifact file is missing, malformed, or lacks required columns."""


def read_columns_csv(path: str, required: tuple[str, ...] = ()) -> dict[str, np.ndarray]:
    """Read a headered CSV; returns {column: array}, validating `required`."""
    try:
        with open(path, "r", encoding="ascii") as fh:
            header = fh.readline()
    except OSError as exc:
        raise ArtifactError(f"{path}: {exc}") from exc
    if not header.startswith("#"):
        raise ArtifactError(f"{path}: missing '# ...' header line")
    names = [s.strip() for s in header.lstrip("#").strip().split(",") if s.strip()]
    try:
        data = np.loadtxt(path, delimiter=",", comments="#", ndmin=2)
    except ValueError as exc:
        raise ArtifactError(f"{path}: unparseable numeric data ({exc})") from exc
    if data.size == 0:
        raise ArtifactError(f"{path}: no data rows")
    if data.shape[1] != len(names):
        raise ArtifactError(
            f"{path}: {data.shape[1]} data columns but {len(names)} header names"
        )
    cols = {name: data[:, i] for i, name in enumerate(names)}
    for name in required:
        if name not in cols:
            raise ArtifactError(f"{path}: missing required column {name!r}")
    return cols


def read_structured_points(path: str):
    """Parse a legacy ASCII STRUCTURED_POINTS file.

    Returns (x, y, fields) with cell-center coordinate axes and each scalar
    as an (nx, ny) array.
    """
    try:
        with open(path, "r", encoding="ascii") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise ArtifactError(f"{path}: {exc}") from exc
    if len(lines) < 8 or not lines[0].startswith("# vtk DataFile"):
        raise ArtifactError(f"{path}: not a legacy VTK file")
    if lines[2].strip() != "ASCII":
        raise ArtifactError(f"{path}: only ASCII VTK is supported")
    if lines[3].strip() != "DATASET STRUCTURED_POINTS":
        raise ArtifactError(f"{path}: expected STRUCTURED_POINTS, got {lines[3]!r}")

    meta: dict[str, list[float]] = {}
    idx = 4
    while idx < len(lines) and not lines[idx].startswith("POINT_DATA"):
        parts = lines[idx].split()
        if len(parts) < 2:
            raise ArtifactError(f"{path}: malformed header line {lines[idx]!r}")
        try:
            meta[parts[0]] = [float(v) for v in parts[1:]]
        except ValueError as exc:
            raise ArtifactError(f"{path}: malformed header line {lines[idx]!r}") from exc
        idx += 1
    for key in ("DIMENSIONS", "ORIGIN", "SPACING"):
        if key not in meta:
            raise ArtifactError(f"{path}: missing {key} in header")
    if idx >= len(lines):
        raise ArtifactError(f"{path}: missing POINT_DATA section")
    npoints = int(lines[idx].split()[1])
    nx, ny = int(meta["DIMENSIONS"][0]), int(meta["DIMENSIONS"][1])
    if nx * ny != npoints:
        raise ArtifactError(f"{path}: POINT_DATA count {npoints} != {nx} * {ny}")
    idx += 1

    fields: dict[str, np.ndarray] = {}
    while idx < len(lines):
        if not lines[idx].strip():
            idx += 1
            continue
        tokens = lines[idx].split()
        if tokens[0] != "SCALARS" or len(tokens) < 2:
            raise ArtifactError(f"{path}: expected a SCALARS block, got {lines[idx]!r}")
        name = tokens[1]
        idx += 1
        if idx >= len(lines) or not lines[idx].startswith("LOOKUP_TABLE"):
            raise ArtifactError(f"{path}: SCALARS {name!r} missing LOOKUP_TABLE line")
        idx += 1
        vals: list[float] = []
        while idx < len(lines) and len(vals) < npoints:
            try:
                vals.extend(float(v) for v in lines[idx].split())
            except ValueError as exc:
                raise ArtifactError(f"{path}: bad value in field {name!r}") from exc
            idx += 1
        if len(vals) != npoints:
            raise ArtifactError(f"{path}: field {name!r} has {len(vals)} of {npoints} values")
        fields[name] = np.asarray(vals).reshape(ny, nx).T

    if not fields:
        raise ArtifactError(f"{path}: no SCALARS fields present")
    x = meta["ORIGIN"][0] + meta["SPACING"][0] * np.arange(nx)
    y = meta["ORIGIN"][1] + meta["SPACING"][1] * np.arange(ny)
    return x, y, fields
