"""Render a diagnostics time series: measured vs predicted energy, the
energy split, and the mass history, as three stacked panels."""

from __future__ import annotations

import argparse

import numpy as np

from .artifacts import ArtifactError, read_columns_csv
from .style import plt, save


def plot_energy_series(series_csv: str, out_image: str = "energy.png") -> str:
    cols = read_columns_csv(series_csv, required=("time", "E", "E_I", "E_II", "mass"))
    t = cols["time"]
    fig, axes = plt.subplots(3, 1, figsize=(6.5, 6.2), sharex=True)

    axes[0].plot(t, cols["E"], color="black", label="E measured")
    predicted = cols.get("E_predicted")
    if predicted is not None and np.any(np.isfinite(predicted)):
        axes[0].plot(t, predicted, color="tab:red", linestyle="--", label="E predicted")
    axes[0].set_ylabel("total energy")
    axes[0].legend(loc="best", fontsize=7)

    axes[1].plot(t, cols["E_I"], color="tab:blue", label="E_I")
    axes[1].plot(t, cols["E_II"], color="tab:orange", label="E_II")
    axes[1].set_ylabel("energy split")
    axes[1].legend(loc="best", fontsize=7)

    mass = cols["mass"]
    axes[2].plot(t, mass - mass[0], color="tab:green")
    axes[2].set_ylabel("mass - mass(0)")
    axes[2].set_xlabel("time")

    fig.tight_layout()
    save(fig, out_image)
    return out_image


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("series", help="diagnostics series CSV (time,E,E_I,E_II,mass,...)")
    parser.add_argument("--out", default="energy.png")
    args = parser.parse_args(argv)
    try:
        plot_energy_series(args.series, args.out)
    except ArtifactError as exc:
        print(f"chfigures-energy: {exc}")
        return 1
    print(f"chfigures-energy: wrote {args.out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
