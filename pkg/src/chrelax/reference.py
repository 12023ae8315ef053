"""Semi-implicit conservative finite-difference solver for the original
fourth-order equation, plus its radially symmetric (polar) variant.

One time step solves the linear system

    c^{n+1} - dt [ div( chi^n grad c^{n+1} ) - gamma biLap c^{n+1} ] = c^n

with matrix-free GMRES: the mobility chi = g''(c) is frozen at t^n, the
face gradients and the bi-Laplacian act on the unknown lattice. Face
quantities use the fourth-order conservative stencils, whose differences
telescope, so mass is conserved to the linear-solve tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
from scipy.fft import irfftn, rfftn
from scipy.sparse.linalg import LinearOperator, gmres, splu

from .params import Grid


class GmresError(RuntimeError):
    """Linear solve failed to reach the requested residual."""


@dataclass(frozen=True)
class ImplicitSolveConfig:
    """Settings of the per-step linear solve.

    rel_tol is honored down to the attainable double-precision floor
    eps * ||A||: the implicit bi-Laplacian scales like dt gamma / h^4, so on
    very fine grids the true residual of any computed solution saturates
    there regardless of the iteration.
    """

    dt: float
    rel_tol: float = 1.0e-10
    restart: int = 30
    max_iters: int = 500

    def __post_init__(self) -> None:
        if self.dt <= 0.0:
            raise ValueError("dt must be positive")
        if self.rel_tol <= 0.0:
            raise ValueError("rel_tol must be positive")
        if self.restart < 1:
            raise ValueError("restart must be >= 1")


def mobility(c):
    """Flux mobility chi(c) = 3c^2 - 1 (negative in the spinodal region)."""
    return 3.0 * np.asarray(c) ** 2 - 1.0


def face_mobility(chi: np.ndarray, axis: int = 0) -> np.ndarray:
    """Fourth-order conservative face average of the mobility.

    Entry i holds the value at face i+1/2 (periodic), combining
    (-chi_{i-1} + 7 chi_i + 7 chi_{i+1} - chi_{i+2}) / 12.
    """
    cm1 = np.roll(chi, 1, axis=axis)
    cp1 = np.roll(chi, -1, axis=axis)
    cp2 = np.roll(chi, -2, axis=axis)
    return (7.0 * chi - cm1 + 7.0 * cp1 - cp2) / 12.0


def face_gradient(c: np.ndarray, h: float, axis: int = 0) -> np.ndarray:
    """Fourth-order conservative face gradient; entry i is (grad c)_{i+1/2}.

    Differencing consecutive faces reproduces the classical fourth-order
    second difference exactly, which is what keeps the composite scheme
    from polluting the bi-Laplacian term.
    """
    cm1 = np.roll(c, 1, axis=axis)
    cp1 = np.roll(c, -1, axis=axis)
    cp2 = np.roll(c, -2, axis=axis)
    return -(15.0 * c - 15.0 * cp1 + cp2 - cm1) / (12.0 * h)


def face_gradient_coefficients() -> np.ndarray:
    """Stencil weights on (c_{i-1}, c_i, c_{i+1}, c_{i+2}), to be scaled by 1/(12 h)."""
    return np.array([1.0, -15.0, 15.0, -1.0])


def _fourth_difference(c: np.ndarray, h: float, axis: int) -> np.ndarray:
    cm2 = np.roll(c, 2, axis=axis)
    cm1 = np.roll(c, 1, axis=axis)
    cp1 = np.roll(c, -1, axis=axis)
    cp2 = np.roll(c, -2, axis=axis)
    return (cm2 - 4.0 * cm1 + 6.0 * c - 4.0 * cp1 + cp2) / h**4


def _second_difference(c: np.ndarray, axis: int) -> np.ndarray:
    return np.roll(c, 1, axis=axis) - 2.0 * c + np.roll(c, -1, axis=axis)


def bilaplacian_apply(c: np.ndarray, grid: Grid) -> np.ndarray:
    """Discrete bi-Laplacian, positive convention (biLap x^4 = 24).

    1D: five-point fourth difference. 2D: the 13-point stencil
    d4x + d4y + 2 d2x d2y.
    """
    out = _fourth_difference(c, grid.dx, axis=0)
    if grid.dim == 2:
        out += _fourth_difference(c, grid.dy, axis=1)
        cross = _second_difference(_second_difference(c, axis=0), axis=1)
        out += 2.0 * cross / (grid.dx**2 * grid.dy**2)
    return out


def divergence_of_flux(c_new: np.ndarray, chi_faces: tuple[np.ndarray, ...], grid: Grid) -> np.ndarray:
    """div( chi^n grad c^{n+1} ) from per-axis face mobilities."""
    out = np.zeros_like(c_new)
    hs = (grid.dx, grid.dy) if grid.dim == 2 else (grid.dx,)
    for axis, (chi_f, h) in enumerate(zip(chi_faces, hs)):
        flux = chi_f * face_gradient(c_new, h, axis=axis)
        out += (flux - np.roll(flux, 1, axis=axis)) / h
    return out


def implicit_operator(c_old: np.ndarray, grid: Grid, gamma: float, cfg: ImplicitSolveConfig):
    """LHS action v -> v - dt (div(chi^n grad v) - gamma biLap v), chi frozen at c_old."""
    chi = mobility(c_old)
    chi_faces = tuple(face_mobility(chi, axis=ax) for ax in range(grid.dim))

    def apply(v: np.ndarray) -> np.ndarray:
        return v - cfg.dt * (divergence_of_flux(v, chi_faces, grid) - gamma * bilaplacian_apply(v, grid))

    return apply


def _laplacian4_symbol(n: int, h: float) -> np.ndarray:
    # Fourier symbol of the face-differenced fourth-order gradient,
    # identical to the classical stencil (-1, 16, -30, 16, -1)/(12 h^2).
    theta = 2.0 * np.pi * np.arange(n) / n
    return (-2.0 * np.cos(2.0 * theta) + 32.0 * np.cos(theta) - 30.0) / (12.0 * h * h)


def _fourth_difference_symbol(n: int, h: float) -> np.ndarray:
    theta = 2.0 * np.pi * np.arange(n) / n
    return 16.0 * np.sin(0.5 * theta) ** 4 / h**4


def _second_difference_symbol(n: int) -> np.ndarray:
    theta = 2.0 * np.pi * np.arange(n) / n
    return -4.0 * np.sin(0.5 * theta) ** 2


def _spectral_preconditioner(grid: Grid, gamma: float, cfg: ImplicitSolveConfig, chi_bar: float):
    """Inverse of the constant-mobility operator, applied by FFT.

    The implicit bi-Laplacian makes the raw system stiff (condition grows
    like dt gamma / h^4), which stalls restarted GMRES on fine grids; on a
    periodic grid the frozen-coefficient operator diagonalizes exactly and
    its inverse is an effective preconditioner.
    """
    if grid.dim == 1:
        lap = _laplacian4_symbol(grid.nx, grid.dx)
        bil = _fourth_difference_symbol(grid.nx, grid.dx)
    else:
        lx = _laplacian4_symbol(grid.nx, grid.dx)[:, None]
        ly = _laplacian4_symbol(grid.ny, grid.dy)[None, :]
        lap = lx + ly
        bx = _fourth_difference_symbol(grid.nx, grid.dx)[:, None]
        by = _fourth_difference_symbol(grid.ny, grid.dy)[None, :]
        cross = (
            (_second_difference_symbol(grid.nx) / grid.dx**2)[:, None]
            * (_second_difference_symbol(grid.ny) / grid.dy**2)[None, :]
        )
        bil = bx + by + 2.0 * cross
    symbol = 1.0 - cfg.dt * (chi_bar * lap - gamma * bil)
    # keep only the half-spectrum produced by the real FFT
    take = tuple(slice(None) for _ in range(grid.dim - 1)) + (slice(0, grid.shape[-1] // 2 + 1),)
    symbol = symbol[take]

    shape = grid.shape

    def minv(v: np.ndarray) -> np.ndarray:
        vh = rfftn(v.reshape(shape))
        return irfftn(vh / symbol, s=shape).ravel()

    return minv


def _gmres_solve(
    apply, rhs: np.ndarray, cfg: ImplicitSolveConfig, x0: np.ndarray, minv=None,
    op_norm_est: float = 1.0,
) -> np.ndarray:
    """GMRES with defect correction on the true residual.

    Left preconditioning makes scipy's stopping test read the preconditioned
    residual, which can stagnate above tight tolerances; restarting from the
    measured defect enforces ||rhs - A x|| / ||rhs|| <= tol directly, where
    tol is rel_tol clipped from below by the roundoff floor eps * ||A||.
    """
    shape = rhs.shape
    rhs_norm = float(np.linalg.norm(rhs))
    if rhs_norm == 0.0:
        return np.zeros_like(rhs)
    tol = max(cfg.rel_tol, np.finfo(np.float64).eps * op_norm_est)
    op = LinearOperator(
        (rhs.size, rhs.size),
        matvec=lambda v: apply(v.reshape(shape)).ravel(),
        dtype=np.float64,
    )
    M = None
    if minv is not None:
        M = LinearOperator((rhs.size, rhs.size), matvec=minv, dtype=np.float64)
    inner_rtol = max(cfg.rel_tol, 1.0e-8)
    x = x0.ravel().copy()
    rel = np.inf
    for _ in range(8):
        residual = rhs.ravel() - op.matvec(x)
        rel = float(np.linalg.norm(residual)) / rhs_norm
        if rel <= tol:
            out = x.reshape(shape)
            if not np.all(np.isfinite(out)):
                raise FloatingPointError("implicit solve produced non-finite values")
            return out
        dx, _ = gmres(
            op,
            residual,
            rtol=inner_rtol,
            atol=0.0,
            restart=cfg.restart,
            maxiter=cfg.max_iters,
            M=M,
        )
        x = x + dx
    raise GmresError(f"GMRES did not converge (relative residual {rel:.3e})")


def _operator_norm_estimate(grid: Grid, gamma: float, cfg: ImplicitSolveConfig, chi_abs_max: float) -> float:
    """Upper bound on ||A|| from the extreme Fourier symbols of the stencils."""
    hx = grid.dx
    flux_part = chi_abs_max * 16.0 / (3.0 * hx * hx)
    bilap_part = 16.0 / hx**4
    if grid.dim == 2:
        hy = grid.dy
        flux_part += chi_abs_max * 16.0 / (3.0 * hy * hy)
        bilap_part += 16.0 / hy**4 + 8.0 / (hx * hx * hy * hy)
    return 1.0 + cfg.dt * (flux_part + gamma * bilap_part)


def step_implicit(c: np.ndarray, grid: Grid, gamma: float, cfg: ImplicitSolveConfig) -> np.ndarray:
    """Advance the fourth-order equation by one semi-implicit step."""
    grid.require_stencil_width(5)
    c = np.asarray(c, dtype=np.float64)
    if c.shape != grid.shape:
        raise ValueError(f"lattice shape {c.shape} does not match grid {grid.shape}")
    if not np.all(np.isfinite(c)):
        raise FloatingPointError("non-finite lattice passed to step_implicit")
    apply = implicit_operator(c, grid, gamma, cfg)
    chi = mobility(c)
    minv = _spectral_preconditioner(grid, gamma, cfg, float(np.mean(chi)))
    norm_est = _operator_norm_estimate(grid, gamma, cfg, float(np.max(np.abs(chi))))
    return _gmres_solve(apply, c, cfg, x0=c, minv=minv, op_norm_est=norm_est)


def run_implicit(c0: np.ndarray, grid: Grid, gamma: float, cfg: ImplicitSolveConfig,
                 t_end: float, observer=None) -> np.ndarray:
    """March step_implicit to t_end (dt divides the horizon; last step clipped)."""
    c = np.asarray(c0, dtype=np.float64).copy()
    t = 0.0
    step = 0
    while t < t_end - 1.0e-14:
        dt = min(cfg.dt, t_end - t)
        step_cfg = cfg if dt == cfg.dt else ImplicitSolveConfig(dt, cfg.rel_tol, cfg.restart, cfg.max_iters)
        c = step_implicit(c, grid, gamma, step_cfg)
        t += dt
        step += 1
        if observer is not None:
            observer(step, t, c)
    return c


# ---------------------------------------------------------------------------
# Radially symmetric pseudo-transient solver
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RadialGrid:
    """Cell-centered radial mesh r_i = (i - 1/2) dr on [0, r_max]; no node at r = 0."""

    nr: int
    r_max: float

    def __post_init__(self) -> None:
        if self.nr < 5:
            raise ValueError("nr must be >= 5")
        if self.r_max <= 0.0:
            raise ValueError("r_max must be positive")

    @property
    def dr(self) -> float:
        return self.r_max / self.nr

    @property
    def centers(self) -> np.ndarray:
        return (np.arange(self.nr) + 0.5) * self.dr

    @property
    def faces(self) -> np.ndarray:
        return np.arange(self.nr + 1) * self.dr


def radial_metric_laplacian(v: np.ndarray, rg: RadialGrid, chi_face: np.ndarray | None = None) -> np.ndarray:
    """(1/r) d/dr ( r [chi] dv/dr ) with zero flux through r = 0 and r = r_max.

    The r = 0 face flux vanishes through its metric factor (symmetry axis);
    the outer face flux is set to zero explicitly.
    """
    dr = rg.dr
    r_faces = rg.faces
    grad = np.zeros(rg.nr + 1)
    grad[1:-1] = (v[1:] - v[:-1]) / dr
    flux = r_faces * grad
    if chi_face is not None:
        flux[1:-1] *= chi_face
    return (flux[1:] - flux[:-1]) / (rg.centers * dr)


def _radial_laplacian_matrix(rg: RadialGrid, chi_face: np.ndarray | None = None) -> sp.spmatrix:
    """Tridiagonal matrix of radial_metric_laplacian (zero-flux both ends)."""
    r_faces_in = rg.faces[1:-1]
    weights = r_faces_in / rg.dr**2
    if chi_face is not None:
        weights = weights * chi_face
    upper = np.concatenate([weights / rg.centers[:-1], [0.0]])
    lower = np.concatenate([[0.0], weights / rg.centers[1:]])
    diag = np.zeros(rg.nr)
    diag[:-1] -= weights / rg.centers[:-1]
    diag[1:] -= weights / rg.centers[1:]
    return sp.diags([lower[1:], diag, upper[:-1]], offsets=[-1, 0, 1], format="csc")


def step_implicit_radial(c: np.ndarray, rg: RadialGrid, gamma: float, cfg: ImplicitSolveConfig) -> np.ndarray:
    """One semi-implicit step of the radially symmetric fourth-order equation.

    Metric-weighted operators use second-order stencils; the radial mesh is
    meant to be fine enough for that to be harmless. The operator is
    pentadiagonal, so the linear system is solved directly (sparse LU).
    """
    c = np.asarray(c, dtype=np.float64)
    if c.shape != (rg.nr,):
        raise ValueError(f"lattice shape {c.shape} does not match radial grid ({rg.nr},)")
    if not np.all(np.isfinite(c)):
        raise FloatingPointError("non-finite lattice passed to step_implicit_radial")
    chi = mobility(c)
    chi_face = 0.5 * (chi[:-1] + chi[1:])
    L = _radial_laplacian_matrix(rg)
    L_chi = _radial_laplacian_matrix(rg, chi_face)
    A = sp.identity(rg.nr, format="csc") - cfg.dt * (L_chi - gamma * (L @ L))
    out = splu(A.tocsc()).solve(c)
    if not np.all(np.isfinite(out)):
        raise FloatingPointError("radial implicit solve produced non-finite values")
    return out


def radial_mass(c: np.ndarray, rg: RadialGrid) -> float:
    """Discrete integral of c r dr (the conserved radial measure up to 2 pi)."""
    return float(np.sum(c * rg.centers) * rg.dr)


def run_radial_to_steady(
    c0: np.ndarray,
    rg: RadialGrid,
    gamma: float,
    cfg: ImplicitSolveConfig,
    steady_tol: float = 1.0e-8,
    max_steps: int = 200_000,
) -> tuple[np.ndarray, int]:
    """Pseudo-transient continuation: step until max|dc|/dt < steady_tol.

    Returns the steady lattice and the number of steps taken.
    """
    c = np.asarray(c0, dtype=np.float64).copy()
    for step in range(1, max_steps + 1):
        c_new = step_implicit_radial(c, rg, gamma, cfg)
        rate = float(np.max(np.abs(c_new - c))) / cfg.dt
        c = c_new
        if rate < steady_tol:
            return c, step
    raise RuntimeError(f"radial pseudo-transient did not reach steady state in {max_steps} steps")


# ---------------------------------------------------------------------------
# Radial profile -> Cartesian field, degree-4 piecewise Lagrange
# ---------------------------------------------------------------------------


def _lagrange_window_eval(rw: np.ndarray, yw: np.ndarray, r: np.ndarray):
    """Evaluate the degree-4 Lagrange polynomial and its derivative.

    rw, yw have shape (npts, 5); r has shape (npts,).
    """
    npts, k = rw.shape
    val = np.zeros(npts)
    der = np.zeros(npts)
    for i in range(k):
        li = np.ones(npts)
        dli = np.zeros(npts)  # product rule accumulator for l_i'
        denom = np.ones(npts)
        for m in range(k):
            if m == i:
                continue
            dli = dli * (r - rw[:, m]) + li
            li = li * (r - rw[:, m])
            denom *= rw[:, i] - rw[:, m]
        val += yw[:, i] * li / denom
        der += yw[:, i] * dli / denom
    return val, der


def interp_profile(r_nodes: np.ndarray, values: np.ndarray, r: np.ndarray):
    """Piecewise degree-4 Lagrange interpolation of a radial profile.

    Returns (value, d/dr) at each query radius. Queries must not exceed the
    covered range; near the axis the profile is extended evenly (c is a
    radially symmetric scalar).
    """
    r_nodes = np.asarray(r_nodes, dtype=np.float64)
    values = np.asarray(values, dtype=np.float64)
    r = np.asarray(r, dtype=np.float64)
    if np.any(r < 0.0) or np.any(r > r_nodes[-1]):
        raise ValueError("query radius outside the covered profile range")
    # even extension across r = 0 keeps full 5-point windows near the axis
    next_pad = 4
    r_ext = np.concatenate([-r_nodes[next_pad - 1 :: -1], r_nodes])
    v_ext = np.concatenate([values[next_pad - 1 :: -1], values])
    # window start: center the 5-point stencil on the nearest node
    idx = np.searchsorted(r_ext, r)
    start = np.clip(idx - 2, 0, len(r_ext) - 5)
    cols = start[:, None] + np.arange(5)[None, :]
    return _lagrange_window_eval(r_ext[cols], v_ext[cols], r)


def radial_to_cartesian(r_nodes: np.ndarray, values: np.ndarray, grid: Grid):
    """Sample a radial profile onto a 2D grid: returns (c, p) with p = grad c.

    p follows from the chain rule,  grad c = c'(r) (x, y)/r,  with the
    gradient forced to zero on the axis.
    """
    if grid.dim != 2:
        raise ValueError("radial_to_cartesian requires a 2D grid")
    x = grid.xl + (np.arange(grid.nx) + 0.5) * grid.dx
    y = grid.yl + (np.arange(grid.ny) + 0.5) * grid.dy
    X, Y = np.meshgrid(x, y, indexing="ij")
    R = np.hypot(X, Y)
    val, der = interp_profile(r_nodes, values, R.ravel())
    c = val.reshape(R.shape)
    dr = der.reshape(R.shape)
    with np.errstate(invalid="ignore", divide="ignore"):
        px = np.where(R > 0.0, dr * X / R, 0.0)
        py = np.where(R > 0.0, dr * Y / R, 0.0)
    return c, np.stack([px, py])
