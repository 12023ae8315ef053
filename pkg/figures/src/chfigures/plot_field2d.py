"""Color map of a 2D snapshot (legacy VTK STRUCTURED_POINTS) with optional
horizontal cuts overlaid against reference cut CSVs."""

from __future__ import annotations

import argparse

import numpy as np

from .artifacts import ArtifactError, read_columns_csv, read_structured_points
from .style import plt, save


def plot_field2d(vtk_path: str, out_image: str = "field2d.png", field: str = "c",
                 cuts=(), cut_csvs=None) -> str:
    x, y, fields = read_structured_points(vtk_path)
    if field not in fields:
        raise ArtifactError(f"{vtk_path}: field {field!r} not present (has {sorted(fields)})")
    data = fields[field]

    ncols = 2 if cuts else 1
    fig, axes = plt.subplots(1, ncols, figsize=(4.2 * ncols + 1.2, 3.8))
    ax0 = axes[0] if ncols > 1 else axes
    im = ax0.pcolormesh(x, y, data.T, shading="nearest", cmap="RdBu_r")
    ax0.set_aspect("equal")
    ax0.set_xlabel("x")
    ax0.set_ylabel("y")
    fig.colorbar(im, ax=ax0, label=field)

    if cuts:
        ax1 = axes[1]
        for k, ycut in enumerate(cuts):
            j = int(np.argmin(np.abs(y - ycut)))
            ax1.plot(x, data[:, j], linewidth=1.2, label=f"y = {y[j]:.3g}")
            ax0.axhline(y[j], color="black", linewidth=0.6, linestyle=":")
        for path in cut_csvs or ():
            cols = read_columns_csv(path, required=("x", "c"))
            stride = max(1, len(cols["x"]) // 60)
            ax1.plot(cols["x"][::stride], cols["c"][::stride], linestyle="none",
                     marker="o", markersize=3, fillstyle="none", label=path.rsplit("/", 1)[-1])
        ax1.set_xlabel("x")
        ax1.set_ylabel(field)
        ax1.legend(loc="best", fontsize=7)

    fig.tight_layout()
    save(fig, out_image)
    return out_image


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("vtk", help="legacy VTK STRUCTURED_POINTS snapshot")
    parser.add_argument("--out", default="field2d.png")
    parser.add_argument("--field", default="c")
    parser.add_argument("--cuts", type=float, nargs="*", default=[],
                        help="y values of horizontal cut lines")
    parser.add_argument("--cut-csv", nargs="*", default=[],
                        help="reference cut CSVs (x,c) to overlay")
    args = parser.parse_args(argv)
    try:
        plot_field2d(args.vtk, args.out, args.field, tuple(args.cuts), args.cut_csv)
    except ArtifactError as exc:
        print(f"chfigures-field2d: {exc}")
        return 1
    print(f"chfigures-field2d: wrote {args.out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
