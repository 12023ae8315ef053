"""Exact solutions and stationary-profile tools.

Contains the Jacobi elliptic machinery behind the periodic stationary
solution family, the limiting tanh front, and the two stationary Cauchy
problems (original fourth-order form vs. relaxed form) used to measure
convergence in the penalty parameter.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .params import ModelParams

_SN_LIMIT_TOL = 1.0e-12


def elliptic_K(s: float) -> float:
    """Complete elliptic integral of the first kind via the AGM.

    The modulus convention is used: K(s) = int_0^{pi/2} dt / sqrt(1 - s^2 sin^2 t).
    """
    if not 0.0 <= s < 1.0:
        raise ValueError(f"elliptic modulus must satisfy 0 <= s < 1, got {s}")
    a, b = 1.0, math.sqrt(1.0 - s * s)
    while abs(a - b) > 1.0e-15 * a:
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return math.pi / (2.0 * a)


def _agm_chain(s: float) -> tuple[list[float], list[float]]:
    a = [1.0]
    c = [s]
    b = math.sqrt(1.0 - s * s)
    while abs(c[-1]) > 1.0e-16 * a[-1] and len(a) < 64:
        a_next = 0.5 * (a[-1] + b)
        c_next = 0.5 * (a[-1] - b)
        b = math.sqrt(a[-1] * b)
        a.append(a_next)
        c.append(c_next)
    return a, c


def jacobi_sn_cn_dn(x, s: float):
    """Jacobi elliptic sn, cn, dn by the descending Landen (AGM) recursion.

    Exact limit branches: s below 1e-12 returns circular functions, s within
    1e-12 of 1 returns the hyperbolic front limit.
    """
    if not 0.0 <= s <= 1.0:
        raise ValueError(f"elliptic modulus must satisfy 0 <= s <= 1, got {s}")
    x = np.asarray(x, dtype=np.float64)
    if s < _SN_LIMIT_TOL:
        return np.sin(x), np.cos(x), np.ones_like(x)
    if 1.0 - s < _SN_LIMIT_TOL:
        sech = 1.0 / np.cosh(x)
        return np.tanh(x), sech, sech
    a, c = _agm_chain(s)
    n = len(a) - 1
    phi = (2.0**n) * a[n] * x
    phi_prev = phi
    for k in range(n, 0, -1):
        phi_prev = phi
        ratio = np.clip(c[k] / a[k] * np.sin(phi), -1.0, 1.0)
        phi = 0.5 * (phi + np.arcsin(ratio))
    sn = np.sin(phi)
    cn = np.cos(phi)
    dn = cn / np.cos(phi_prev - phi)
    return sn, cn, dn


def jacobi_sn(x, s: float):
    return jacobi_sn_cn_dn(x, s)[0]


@dataclass(frozen=True)
class SnSolutionSpec:
    """Periodic stationary solution family c(x) = A sn(k (x - x0), s).

    epsilon in [0, 1] sets amplitude A = sqrt(1 - epsilon), wavenumber
    k = sqrt((1 + epsilon)/(2 gamma)) and modulus s = sqrt((1-eps)/(1+eps));
    epsilon -> 0 degenerates into the tanh front.
    """

    epsilon: float
    gamma: float
    x0: float = 0.0

    def __post_init__(self) -> None:
        if not 0.0 <= self.epsilon <= 1.0:
            raise ValueError(f"epsilon must lie in [0, 1], got {self.epsilon}")
        if self.gamma <= 0.0:
            raise ValueError(f"gamma must be positive, got {self.gamma}")

    @property
    def amplitude(self) -> float:
        return math.sqrt(1.0 - self.epsilon)

    @property
    def wavenumber(self) -> float:
        return math.sqrt((self.epsilon + 1.0) / (2.0 * self.gamma))

    @property
    def modulus(self) -> float:
        return math.sqrt((1.0 - self.epsilon) / (1.0 + self.epsilon))


def sn_solution(spec: SnSolutionSpec, x):
    u = spec.wavenumber * (np.asarray(x) - spec.x0)
    return spec.amplitude * jacobi_sn(u, spec.modulus)


def sn_solution_gradient(spec: SnSolutionSpec, x):
    """dc/dx using sn' = cn dn."""
    u = spec.wavenumber * (np.asarray(x) - spec.x0)
    _, cn, dn = jacobi_sn_cn_dn(u, spec.modulus)
    return spec.amplitude * spec.wavenumber * cn * dn


def sn_solution_second_derivative(spec: SnSolutionSpec, x):
    """d2c/dx2 from the stationary relation gamma c'' = c^3 - c."""
    c = sn_solution(spec, x)
    return (c**3 - c) / spec.gamma


def sn_wavelength(spec: SnSolutionSpec) -> float:
    """Spatial period 4 sqrt(2 gamma / (eps + 1)) K(s); infinite at eps = 0."""
    if spec.epsilon == 0.0:
        raise ValueError("the epsilon = 0 front is non-periodic (infinite wavelength)")
    return 4.0 * math.sqrt(2.0 * spec.gamma / (spec.epsilon + 1.0)) * elliptic_K(spec.modulus)


def tanh_front(x, gamma: float, x0: float = 0.0):
    """Limiting heteroclinic front tanh((x - x0)/sqrt(2 gamma))."""
    return np.tanh((np.asarray(x) - x0) / math.sqrt(2.0 * gamma))


# ---------------------------------------------------------------------------
# Stationary Cauchy problems and the convergence-in-alpha study
# ---------------------------------------------------------------------------


def rk4_integrate(rhs, y0, x0: float, x_end: float, dx: float):
    """Classical fixed-step RK4; returns (nodes, trajectory).

    The trajectory has shape (nsteps + 1,) + y0.shape. Trailing axes of the
    state broadcast through, which lets one batch several parameter values
    in a single sweep.
    """
    if dx <= 0.0:
        raise ValueError("dx must be positive")
    y = np.array(y0, dtype=np.float64)
    nsteps = int(round((x_end - x0) / dx))
    xs = x0 + dx * np.arange(nsteps + 1)
    out = np.empty((nsteps + 1,) + y.shape)
    out[0] = y
    half = 0.5 * dx
    for i in range(nsteps):
        x = xs[i]
        k1 = rhs(x, y)
        k2 = rhs(x + half, y + half * k1)
        k3 = rhs(x + half, y + half * k2)
        k4 = rhs(x + dx, y + dx * k3)
        y = y + (dx / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        if not np.all(np.isfinite(y)):
            raise FloatingPointError(f"RK4 state became non-finite at x = {xs[i + 1]}")
        out[i + 1] = y
    return xs, out


def ode1_rhs(state, gamma: float):
    """Stationary fourth-order problem as a first-order system.

    State rows: (c, c_I, c_II, J) with c_I = c', c_II = c'' and J the
    constant first integral of the mass flux.
    """
    c, c_i, c_ii, J = state
    return np.stack([c_i, c_ii, (J + (3.0 * c**2 - 1.0) * c_i) / gamma, np.zeros_like(J)])


def ode2_rhs(state, params: ModelParams):
    """Stationary relaxed problem; state rows (phi, p, c, q_tilde)."""
    return _ode2_deriv(state, params.gamma, params.alpha)


def _ode2_deriv(state, gamma: float, alpha):
    phi, p, c, qt = state
    denom = 3.0 * c**2 - 1.0 + alpha
    if np.any(denom == 0.0):
        raise ZeroDivisionError("vanishing denominator 3c^2 - 1 + alpha in the c equation")
    return np.stack([p, (alpha / gamma) * (phi - c), (alpha * p - qt) / denom, np.zeros_like(qt)])


#: Seed values of the benchmark Cauchy problems (near the c = 1 well).
#: Both problems share one first integral of the mass flux; seeding it with
#: -J0 on both sides selects the confined oscillating orbit (the +J0 branch
#: tilts the effective potential the other way and escapes past c = 1 near
#: x = 0.39, in any precision).
CAUCHY_SEED = {"c0": 1.0 - 1.0e-6, "cI0": -1.0e-5, "cII0": -1.0e-10, "J0": 1.0e-8}


def solve_reference_cauchy(gamma: float, x0: float, x_end: float, dx: float, seed=None):
    """Integrate the fourth-order stationary problem; returns (xs, c, c_I)."""
    s = dict(CAUCHY_SEED if seed is None else seed)
    y0 = np.array([s["c0"], s["cI0"], s["cII0"], -s["J0"]])
    xs, traj = rk4_integrate(lambda x, y: ode1_rhs(y, gamma), y0, x0, x_end, dx)
    return xs, traj[:, 0], traj[:, 1]


def solve_relaxed_cauchy(alphas, gamma: float, x0: float, x_end: float, dx: float, seed=None):
    """Integrate the relaxed stationary problem for one or more alphas.

    Returns (xs, phi, p, c) where the field arrays have shape
    (nnodes, len(alphas)). The compatible seed ties phi and q_tilde to the
    fourth-order problem's initial data.
    """
    s = dict(CAUCHY_SEED if seed is None else seed)
    alphas = np.atleast_1d(np.asarray(alphas, dtype=np.float64))
    ones = np.ones_like(alphas)
    y0 = np.stack([
        s["c0"] + (gamma / alphas) * s["cII0"],
        s["cI0"] * ones,
        s["c0"] * ones,
        -s["J0"] * ones,
    ])
    xs, traj = rk4_integrate(lambda x, y: _ode2_deriv(y, gamma, alphas), y0, x0, x_end, dx)
    return xs, traj[:, 0], traj[:, 1], traj[:, 2]


def discrete_rel_l2(a, b):
    """sqrt(sum (a-b)^2) / sqrt(sum a^2) over sample nodes."""
    a = np.asarray(a)
    num = math.sqrt(float(np.sum((a - np.asarray(b)) ** 2)))
    den = math.sqrt(float(np.sum(a**2)))
    if den == 0.0:
        raise ZeroDivisionError("relative L2 error undefined: reference norm is zero")
    return num / den


@dataclass(frozen=True)
class AlphaStudyRow:
    alpha: float
    err_c: float
    err_p: float
    err_c_phi: float
    order_c: float
    order_p: float
    order_c_phi: float


def alpha_convergence_study(
    alphas,
    gamma: float = 1.0e-4,
    domain: tuple[float, float] = (0.0, 0.6),
    dx: float = 1.0e-5,
    seed=None,
) -> list[AlphaStudyRow]:
    """Errors of the relaxed stationary solution against the fourth-order
    one for increasing penalty, with observed convergence orders.

    Orders use log(e_k / e_{k+1}) / log(alpha_{k+1} / alpha_k) between
    successive rows; the first row carries NaN orders.
    """
    alphas = list(alphas)
    if any(a <= 1.0 for a in alphas) or sorted(alphas) != alphas:
        raise ValueError("alphas must be sorted ascending and exceed 1")
    x0, x_end = domain
    _, c_hat, cI_hat = solve_reference_cauchy(gamma, x0, x_end, dx, seed)
    _, phi, p, c = solve_relaxed_cauchy(alphas, gamma, x0, x_end, dx, seed)

    errs = np.empty((len(alphas), 3))
    for j in range(len(alphas)):
        errs[j, 0] = discrete_rel_l2(c[:, j], c_hat)
        errs[j, 1] = discrete_rel_l2(p[:, j], cI_hat)
        errs[j, 2] = discrete_rel_l2(c[:, j], phi[:, j])

    rows = []
    for j, alpha in enumerate(alphas):
        if j == 0:
            orders = (math.nan,) * 3
        else:
            ratio = math.log(alpha / alphas[j - 1])
            orders = tuple(math.log(errs[j - 1, k] / errs[j, k]) / ratio for k in range(3))
        rows.append(AlphaStudyRow(alpha, *errs[j], *orders))
    return rows
