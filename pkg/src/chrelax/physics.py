"""Pointwise model functions of the first-order relaxation system.

Everything here is a pure function of its inputs and broadcasts over
numpy arrays, so the same code serves scalar spot-checks and whole-grid
solver sweeps. The conserved vector layout is (c, q_1..q_d, w, p_1..p_d,
phi); see :class:`Layout`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .params import ModelParams


def potential(c):
    """Double-well bulk energy density (c^2 - 1)^2 / 4."""
    return 0.25 * (np.asarray(c) ** 2 - 1.0) ** 2


def potential_d1(c):
    """dg/dc = c^3 - c."""
    c = np.asarray(c)
    return c**3 - c


def potential_d2(c):
    """d2g/dc2 = 3c^2 - 1."""
    return 3.0 * np.asarray(c) ** 2 - 1.0


def chemical_potential(c, phi, params: ModelParams):
    """Relaxed chemical potential g'(c) + alpha (c - phi)."""
    c = np.asarray(c)
    return potential_d1(c) + params.alpha * (c - np.asarray(phi))


@dataclass(frozen=True)
class Layout:
    """Slot indices of the packed conserved vector for a given dimension."""

    dim: int

    def __post_init__(self) -> None:
        if self.dim not in (1, 2):
            raise ValueError("dim must be 1 or 2")

    @property
    def ncomp(self) -> int:
        return 3 + 2 * self.dim

    @property
    def c(self) -> int:
        return 0

    def q(self, axis: int) -> int:
        return 1 + axis

    @property
    def w(self) -> int:
        return 1 + self.dim

    def p(self, axis: int) -> int:
        return 2 + self.dim + axis

    @property
    def phi(self) -> int:
        return 2 + 2 * self.dim


_AXIS = {"x": 0, "y": 1}


def flux(Q: np.ndarray, direction: str, params: ModelParams) -> np.ndarray:
    """Conservative flux of the packed state along 'x' or 'y'.

    Slots: c gets q_dir/tau, q_dir gets the chemical potential, w gets
    -gamma p_dir, p_dir gets -w/beta; everything else (including phi,
    whose evolution is source-only) is zero.
    """
    lay = Layout((Q.shape[0] - 3) // 2)
    axis = _AXIS[direction]
    if axis >= lay.dim:
        raise ValueError(f"direction {direction!r} invalid for a {lay.dim}D state")
    F = np.zeros_like(Q)
    F[lay.c] = Q[lay.q(axis)] / params.tau
    F[lay.q(axis)] = chemical_potential(Q[lay.c], Q[lay.phi], params)
    F[lay.w] = -params.gamma * Q[lay.p(axis)]
    F[lay.p(axis)] = -Q[lay.w] / params.beta
    return F


def source(Q: np.ndarray, params: ModelParams) -> np.ndarray:
    """Algebraic right-hand side: flux relaxation, penalty forcing, and
    the phi update phi_t = w/beta."""
    lay = Layout((Q.shape[0] - 3) // 2)
    S = np.zeros_like(Q)
    for ax in range(lay.dim):
        S[lay.q(ax)] = -Q[lay.q(ax)] / params.tau
    S[lay.w] = -params.alpha * (Q[lay.phi] - Q[lay.c])
    S[lay.phi] = Q[lay.w] / params.beta
    return S


@dataclass(frozen=True)
class EigenData:
    """Characteristic speeds at a state, ordered (-fast, -slow, 0..., +slow, +fast)."""

    lambdas: np.ndarray
    lambda_max: float


def wave_speeds(c, params: ModelParams) -> tuple[np.ndarray, float]:
    """Fast acoustic-like speed sqrt((g''(c)+alpha)/tau) and the slow
    wave speed sqrt(gamma/beta); broadcasts over c."""
    radicand = (potential_d2(c) + params.alpha) / params.tau
    if np.any(radicand < 0.0):
        raise ValueError(
            "negative radicand in the fast wave speed: alpha below the "
            "admissibility bound for the local composition"
        )
    return np.sqrt(radicand), float(np.sqrt(params.gamma / params.beta))


def max_signal_speed(c, params: ModelParams) -> float:
    """Largest |characteristic speed| over all entries of c."""
    fast, slow = wave_speeds(c, params)
    return max(float(np.max(fast)), slow)


def eigen(c: float, params: ModelParams, dim: int = 1) -> EigenData:
    """Closed-form eigenvalues of the quasilinear system at composition c.

    Returns the 3 + 2*dim speeds, where all but the two +-pairs vanish.
    """
    fast, slow = wave_speeds(c, params)
    fast = float(fast)
    zeros = [0.0] * (2 * dim - 1)
    lams = np.array([-fast, -slow, *zeros, slow, fast])
    return EigenData(lambdas=lams, lambda_max=max(fast, slow))


def eigen_det_R(c, params: ModelParams):
    """Determinant of the right-eigenvector basis: -4 sqrt((beta gamma / tau)/(alpha+g''))."""
    denom = params.alpha + potential_d2(c)
    return -4.0 * np.sqrt((params.beta * params.gamma / params.tau) / denom)


def energy_density(c, phi, w, q, p, params: ModelParams):
    """Lyapunov energy density of the relaxation system.

    q and p carry the direction on the leading axis; the quadratic terms
    use the Euclidean norm over that axis.
    """
    e_i, e_ii = energy_split(c, phi, w, q, p, params)
    return e_i + e_ii


def energy_split(c, phi, w, q, p, params: ModelParams):
    """Split e = e_I + e_II: e_I collects g, the penalty, and the flux
    energy; e_II the gradient and inertial parts."""
    c = np.asarray(c)
    q2 = np.sum(np.asarray(q) ** 2, axis=0)
    p2 = np.sum(np.asarray(p) ** 2, axis=0)
    e_i = potential(c) + 0.5 * params.alpha * (c - np.asarray(phi)) ** 2 + q2 / (2.0 * params.tau)
    e_ii = 0.5 * params.gamma * p2 + np.asarray(w) ** 2 / (2.0 * params.beta)
    return e_i, e_ii
