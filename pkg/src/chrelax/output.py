"""CSV and legacy-VTK artifact writers (and the matching readers).

Formats are deliberately plain so post-processing tools can consume them
without importing this package:
- 1D snapshots: CSV, header "# x,c,phi,w,q1,p1"
- 2D snapshots: ASCII legacy VTK STRUCTURED_POINTS, one SCALARS block per
  component, values on cell centers
- diagnostics series: CSV, header "# time,E,E_I,E_II,mass,E_predicted"
- radial profiles: CSV, header "# r,c"
- penalty-convergence table: CSV matching the benchmark table columns
"""

from __future__ import annotations

import os

import numpy as np

from .params import FieldState, Grid

_FMT = "%.17g"


def write_columns_csv(path: str, header: str, columns) -> None:
    """Write named columns with the shared '# a,b,c' header convention."""
    data = np.column_stack(columns)
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    np.savetxt(path, data, fmt=_FMT, delimiter=",", header=header, comments="# ")



def read_csv_columns(path: str) -> dict[str, np.ndarray]:
    """Read a CSV written by this module; returns {column name: array}."""
    with open(path, "r", encoding="ascii") as fh:
        first = fh.readline()
    if not first.startswith("#"):
        raise ValueError(f"{path}: missing '# ...' header line")
    names = [s.strip() for s in first.lstrip("#").strip().split(",")]
    data = np.loadtxt(path, delimiter=",", comments="#", ndmin=2)
    if data.shape[1] != len(names):
        raise ValueError(f"{path}: {data.shape[1]} columns but {len(names)} header names")
    return {name: data[:, i] for i, name in enumerate(names)}


def write_snapshot_csv(path: str, x: np.ndarray, state: FieldState) -> None:
    if state.c.ndim != 1:
        raise ValueError("CSV snapshots are for 1D states; use VTK in 2D")
    write_columns_csv(
        path,
        "x,c,phi,w,q1,p1",
        (x, state.c, state.phi, state.w, state.q[0], state.p[0]),
    )


def write_series_csv(path: str, times, energy, energy_i, energy_ii, mass, predicted=None) -> None:
    times = np.asarray(times)
    if predicted is None:
        predicted = np.full(times.shape, np.nan)
    write_columns_csv(
        path,
        "time,E,E_I,E_II,mass,E_predicted",
        (times, energy, energy_i, energy_ii, mass, predicted),
    )


def write_profile_csv(path: str, r: np.ndarray, c: np.ndarray) -> None:
    write_columns_csv(path, "r,c", (r, c))


def write_cut_csv(path: str, x: np.ndarray, values: dict[str, np.ndarray]) -> None:
    names = ",".join(values)
    write_columns_csv(path, f"x,{names}", (x, *values.values()))


def write_alpha_table_csv(path: str, rows) -> None:
    cols = np.array(
        [
            [r.alpha, r.err_c, r.err_p, r.err_c_phi, r.order_c, r.order_p, r.order_c_phi]
            for r in rows
        ]
    )
    write_columns_csv(
        path,
        "alpha,err_c,err_p,err_c_phi,order_c,order_p,order_c_phi",
        tuple(cols.T),
    )


# ---------------------------------------------------------------------------
# Legacy ASCII VTK STRUCTURED_POINTS
# ---------------------------------------------------------------------------


def write_vtk_structured_points(path: str, grid: Grid, fields: dict[str, np.ndarray],
                                title: str = "chrelax snapshot") -> None:
    """2D cell-centered scalars as a legacy STRUCTURED_POINTS dataset.

    Values are laid out with x varying fastest, matching the VTK point
    ordering; ORIGIN is the first cell center.
    """
    if grid.dim != 2:
        raise ValueError("VTK snapshots are for 2D grids")
    nx, ny = grid.nx, grid.ny
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    with open(path, "w", encoding="ascii") as fh:
        fh.write("# vtk DataFile Version 3.0\n")
        fh.write(title + "\n")
        fh.write("ASCII\n")
        fh.write("DATASET STRUCTURED_POINTS\n")
        fh.write(f"DIMENSIONS {nx} {ny} 1\n")
        fh.write(f"ORIGIN {grid.xl + 0.5 * grid.dx:.17g} {grid.yl + 0.5 * grid.dy:.17g} 0\n")
        fh.write(f"SPACING {grid.dx:.17g} {grid.dy:.17g} 1\n")
        fh.write(f"POINT_DATA {nx * ny}\n")
        for name, arr in fields.items():
            if arr.shape != (nx, ny):
                raise ValueError(f"field {name!r} has shape {arr.shape}, expected {(nx, ny)}")
            fh.write(f"SCALARS {name} double 1\n")
            fh.write("LOOKUP_TABLE default\n")
            flat = arr.T.ravel()  # x fastest
            for start in range(0, flat.size, 6):
                fh.write(" ".join(_FMT % v for v in flat[start : start + 6]) + "\n")


def read_vtk_structured_points(path: str):
    """Parse a legacy ASCII STRUCTURED_POINTS file written by this module.

    Returns (meta, fields): meta has nx, ny, origin, spacing; fields maps
    scalar names to (nx, ny) arrays.
    """
    with open(path, "r", encoding="ascii") as fh:
        lines = [ln.rstrip("\n") for ln in fh]
    if len(lines) < 7 or not lines[0].startswith("# vtk DataFile"):
        raise ValueError(f"{path}: not a legacy VTK file")
    if lines[2].strip() != "ASCII" or lines[3].strip() != "DATASET STRUCTURED_POINTS":
        raise ValueError(f"{path}: expected an ASCII STRUCTURED_POINTS dataset")
    meta = {}
    idx = 4
    while idx < len(lines) and not lines[idx].startswith("POINT_DATA"):
        key, *vals = lines[idx].split()
        meta[key] = [float(v) for v in vals]
        idx += 1
    if idx >= len(lines):
        raise ValueError(f"{path}: missing POINT_DATA section")
    npoints = int(lines[idx].split()[1])
    nx, ny = int(meta["DIMENSIONS"][0]), int(meta["DIMENSIONS"][1])
    if nx * ny != npoints:
        raise ValueError(f"{path}: POINT_DATA count {npoints} != DIMENSIONS product {nx * ny}")
    idx += 1
    fields: dict[str, np.ndarray] = {}
    while idx < len(lines):
        if not lines[idx].strip():
            idx += 1
            continue
        tokens = lines[idx].split()
        if tokens[0] != "SCALARS":
            raise ValueError(f"{path}: unexpected line {lines[idx]!r}")
        name = tokens[1]
        idx += 2  # skip LOOKUP_TABLE line
        vals: list[float] = []
        while idx < len(lines) and len(vals) < npoints:
            vals.extend(float(v) for v in lines[idx].split())
            idx += 1
        if len(vals) != npoints:
            raise ValueError(f"{path}: field {name!r} has {len(vals)} values, expected {npoints}")
        fields[name] = np.asarray(vals).reshape(ny, nx).T
    return meta, fields
