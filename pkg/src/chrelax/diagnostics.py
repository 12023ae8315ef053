"""Integral observers: mass, energy and its split, the energy-decay
companion ODE, and error norms between solutions.

All integrals are midpoint-rule sums over cell averages, matching the
finite-volume reading of the data. Reductions are plain sequential numpy
sums, so repeated runs are bit-reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import physics
from .params import FieldState, Grid, ModelParams


def total_mass(c: np.ndarray, grid: Grid) -> float:
    """Integral of c over the domain."""
    return float(np.sum(c)) * grid.cell_volume


def energy_parts(state: FieldState, grid: Grid, params: ModelParams) -> tuple[float, float]:
    e_i, e_ii = physics.energy_split(state.c, state.phi, state.w, state.q, state.p, params)
    vol = grid.cell_volume
    return float(np.sum(e_i)) * vol, float(np.sum(e_ii)) * vol


def total_energy(state: FieldState, grid: Grid, params: ModelParams) -> float:
    e_i, e_ii = energy_parts(state, grid, params)
    return e_i + e_ii


def flux_dissipation(state: FieldState, grid: Grid, params: ModelParams) -> float:
    """Instantaneous energy dissipation rate, integral of |q / tau|^2."""
    return float(np.sum((state.q / params.tau) ** 2)) * grid.cell_volume


def l2_relative_error(a: np.ndarray, b: np.ndarray) -> float:
    """sqrt(sum (a - b)^2) / sqrt(sum a^2); normalization is by the first field."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    den = float(np.sqrt(np.sum(a**2)))
    if den == 0.0:
        raise ZeroDivisionError("relative L2 error undefined: reference norm is zero")
    return float(np.sqrt(np.sum((a - b) ** 2))) / den


def linf_error(a: np.ndarray, b: np.ndarray) -> float:
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    return float(np.max(np.abs(a - b)))


def energy_decay_ode(q_sampler, times: np.ndarray, grid: Grid, params: ModelParams, e0: float) -> np.ndarray:
    """Companion prediction E(t) from dE/dt = -int |q/tau|^2.

    q_sampler(t) returns the flux lattice (dim, *grid.shape) at time t;
    classical RK4 integrates between the requested output times, sampling
    q at interval midpoints.
    """
    vol = grid.cell_volume
    inv_tau2 = 1.0 / params.tau**2

    def rate(t: float) -> float:
        q = q_sampler(t)
        return -float(np.sum(q * q)) * vol * inv_tau2

    out = np.empty(len(times))
    out[0] = e0
    e = e0
    for i in range(len(times) - 1):
        t, t_next = times[i], times[i + 1]
        h = t_next - t
        k1 = rate(t)
        kmid = rate(t + 0.5 * h)
        k4 = rate(t_next)
        e = e + (h / 6.0) * (k1 + 4.0 * kmid + k4)
        out[i + 1] = e
    return out


@dataclass
class SeriesRecorder:
    """Per-step observer collecting (time, E, E_I, E_II, mass, dissipation).

    Also keeps q snapshots every q_every steps so the decay companion can
    be integrated after the run.
    """

    grid: Grid
    params: ModelParams
    q_every: int = 0
    times: list = field(default_factory=list)
    energy: list = field(default_factory=list)
    energy_i: list = field(default_factory=list)
    energy_ii: list = field(default_factory=list)
    mass: list = field(default_factory=list)
    dissipation: list = field(default_factory=list)
    q_times: list = field(default_factory=list)
    q_snapshots: list = field(default_factory=list)

    def __call__(self, step: int, t: float, state: FieldState) -> None:
        e_i, e_ii = energy_parts(state, self.grid, self.params)
        self.times.append(t)
        self.energy.append(e_i + e_ii)
        self.energy_i.append(e_i)
        self.energy_ii.append(e_ii)
        self.mass.append(total_mass(state.c, self.grid))
        self.dissipation.append(flux_dissipation(state, self.grid, self.params))
        if self.q_every and step % self.q_every == 0:
            self.q_times.append(t)
            self.q_snapshots.append(state.q.copy())

    def q_sampler(self):
        """Piecewise-linear interpolant of the stored q snapshots."""
        ts = np.asarray(self.q_times)
        if len(ts) < 2:
            raise ValueError("need at least two q snapshots for interpolation")
        snaps = self.q_snapshots

        def sample(t: float) -> np.ndarray:
            i = int(np.clip(np.searchsorted(ts, t) - 1, 0, len(ts) - 2))
            t0, t1 = ts[i], ts[i + 1]
            lam = 0.0 if t1 == t0 else (t - t0) / (t1 - t0)
            lam = min(max(lam, 0.0), 1.0)
            return (1.0 - lam) * snaps[i] + lam * snaps[i + 1]

        return sample

    def predicted_energy(self) -> np.ndarray:
        """Decay-companion curve on the recorded time grid."""
        times = np.asarray(self.times)
        return energy_decay_ode(self.q_sampler(), times, self.grid, self.params, self.energy[0])
