"""Shared deterministic rendering setup."""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

plt.rcParams.update({
    "figure.dpi": 110,
    "savefig.dpi": 110,
    "font.size": 9,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "svg.hashsalt": "chfigures",
})

PROFILE_COLORS = ("black", "tab:red", "tab:green", "tab:blue", "tab:orange", "tab:purple")
PROFILE_MARKERS = (None, "s", "o", "^", "v", "d")


def save(fig, out_path: str) -> None:
    fig.savefig(out_path, metadata=None)
    plt.close(fig)
