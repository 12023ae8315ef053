"""Overlay 1D snapshot profiles: c(x) (and phi when present) from several
snapshot CSVs, first curve as a line, later ones as sparse markers."""

from __future__ import annotations

import argparse
import os

from .artifacts import ArtifactError, read_columns_csv
from .style import PROFILE_COLORS, PROFILE_MARKERS, plt, save


def plot_profiles(csv_paths, labels=None, out_image="profiles.png", show_phi=True) -> str:
    if not csv_paths:
        raise ArtifactError("no input CSV files given")
    if labels is None:
        labels = [os.path.splitext(os.path.basename(p))[0] for p in csv_paths]
    if len(labels) != len(csv_paths):
        raise ArtifactError("labels and csv paths differ in length")

    fig, ax = plt.subplots(figsize=(7.0, 3.2))
    for k, (path, label) in enumerate(zip(csv_paths, labels)):
        cols = read_columns_csv(path, required=("x", "c"))
        color = PROFILE_COLORS[k % len(PROFILE_COLORS)]
        marker = PROFILE_MARKERS[k % len(PROFILE_MARKERS)]
        stride = max(1, len(cols["x"]) // 80) if marker else 1
        ax.plot(cols["x"][::stride], cols["c"][::stride], color=color, marker=marker,
                markersize=3.5, linewidth=1.2 if marker is None else 0.0,
                linestyle="-" if marker is None else "none", label=f"{label}: c")
        if show_phi and "phi" in cols:
            ax.plot(cols["x"][::stride], cols["phi"][::stride], color=color, marker=marker,
                    markersize=3.0, linewidth=0.8, linestyle="--", alpha=0.65,
                    fillstyle="none" if marker else "full", label=f"{label}: phi")
    ax.set_xlabel("x")
    ax.set_ylabel("order parameter")
    ax.legend(loc="best", fontsize=7)
    fig.tight_layout()
    save(fig, out_image)
    return out_image


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("csv", nargs="+", help="snapshot CSV files (x,c[,phi,...])")
    parser.add_argument("--labels", nargs="*", default=None)
    parser.add_argument("--out", default="profiles.png")
    parser.add_argument("--no-phi", action="store_true")
    args = parser.parse_args(argv)
    try:
        plot_profiles(args.csv, args.labels, args.out, show_phi=not args.no_phi)
    except ArtifactError as exc:
        print(f"chfigures-profiles: {exc}")
        return 1
    print(f"chfigures-profiles: wrote {args.out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
