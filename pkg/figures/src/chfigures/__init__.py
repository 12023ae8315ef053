"""Post-processing for chrelax solver artifacts.

Reads only the documented on-disk formats (CSV snapshots and time series,
legacy ASCII VTK STRUCTURED_POINTS) and renders the standard figure types:
profile overlays, energy/mass time series, and 2D color maps with cuts.
"""

from .artifacts import ArtifactError, read_columns_csv, read_structured_points
from .plot_energy_series import plot_energy_series
from .plot_field2d import plot_field2d
from .plot_profiles import plot_profiles

__version__ = "0.1.0"
