"""Benchmark definitions: initial conditions, parameter presets, scenario
configuration, and the driver that runs solvers and writes artifacts.

Every scenario ships two presets: "desk" (minutes at most; what the tests
run) and "paper" (the full published parameters; hours of runtime, kept
out of CI and documented in the README).
"""

from __future__ import annotations

import configparser
import math
import os
from dataclasses import dataclass, replace

import numpy as np

from . import diagnostics, hyperbolic, output, reference
from .exact import (
    SnSolutionSpec,
    alpha_convergence_study,
    sn_solution,
    sn_solution_gradient,
    sn_wavelength,
)
from .hyperbolic import FluxChoice, TimeControl
from .params import FieldState, Grid, ModelParams, cell_centers, new_state
from .reference import ImplicitSolveConfig, RadialGrid

SCENARIOS = (
    "alpha-table",
    "exact-sn",
    "spinodal",
    "ostwald1d",
    "radial2d",
    "ostwald2d",
    "custom",
)
SOLVERS = ("hyperbolic", "reference", "both")
IC_VARIANTS = ("well-prepared", "ic1", "ic2", "ic3")

OUTPUT_ROOT_ENV = "CHRELAX_OUTPUT_ROOT"


# ---------------------------------------------------------------------------
# Initial conditions
# ---------------------------------------------------------------------------


def spinodal_ic(x):
    """Deterministic small-amplitude perturbation of the mixed state on [-1, 1].

    Odd around x = 0 and C-infinity under periodic extension, so results
    are reproducible without random seeds.
    """
    x = np.asarray(x)
    left = 0.01 * (np.sin(10.0 * np.pi * (1.0 + x)) - np.sin(10.0 * np.pi * (1.0 + x) ** 2))
    right = -0.01 * (np.sin(10.0 * np.pi * (1.0 - x)) - np.sin(10.0 * np.pi * (1.0 - x) ** 2))
    return np.where(x < 0.0, left, right)


OSTWALD1D_BUBBLES = ((0.30, 0.12), (0.75, 0.06))


def ostwald1d_ic(x, gamma: float):
    """Two different-sized 1D bubbles of the minority phase in a c = 1 bath."""
    x = np.asarray(x)
    w = math.sqrt(2.0 * gamma)
    c = np.ones_like(x, dtype=np.float64)
    for xi, ri in OSTWALD1D_BUBBLES:
        c += np.tanh((x - xi - ri) / w) - np.tanh((x - xi + ri) / w)
    return c


#: (x_i, y_i, r_i) of the eight bubbles of the 2D coarsening benchmark.
OSTWALD2D_BUBBLES = (
    (0.00, 0.10, 0.15),
    (-0.30, -0.40, 0.10),
    (-0.30, 0.40, 0.10),
    (-0.35, 0.00, 0.06),
    (0.00, -0.30, 0.07),
    (0.25, 0.45, 0.06),
    (0.30, -0.35, 0.08),
    (0.35, 0.05, 0.07),
)


def ostwald2d_ic(x, y, gamma: float):
    """Eight circular bubbles in a c = 1 bath (broadcasts over x, y)."""
    x = np.asarray(x)
    y = np.asarray(y)
    w = math.sqrt(2.0 * gamma)
    c = np.ones(np.broadcast(x, y).shape, dtype=np.float64)
    for xi, yi, ri in OSTWALD2D_BUBBLES:
        rad = np.hypot(x - xi, y - yi)
        c += np.tanh((rad - ri) / w) - np.tanh((rad + ri) / w)
    return c


def radial_bubble_ic(r, gamma: float):
    """Radial bubble profile -tanh((r - 0.5)/sqrt(2 gamma))."""
    return -np.tanh((np.asarray(r) - 0.5) / math.sqrt(2.0 * gamma))


# ---------------------------------------------------------------------------
# Well-prepared (and deliberately unprepared) initial states
# ---------------------------------------------------------------------------


def gradient_4th(arr: np.ndarray, h: float, axis: int = 0) -> np.ndarray:
    """Fourth-order central first derivative on a periodic lattice."""
    m2 = np.roll(arr, 2, axis=axis)
    m1 = np.roll(arr, 1, axis=axis)
    p1 = np.roll(arr, -1, axis=axis)
    p2 = np.roll(arr, -2, axis=axis)
    return (m2 - 8.0 * m1 + 8.0 * p1 - p2) / (12.0 * h)


def laplacian_2nd(arr: np.ndarray, grid: Grid) -> np.ndarray:
    """Second-order periodic Laplacian."""
    out = (np.roll(arr, 1, axis=0) - 2.0 * arr + np.roll(arr, -1, axis=0)) / grid.dx**2
    if grid.dim == 2:
        out += (np.roll(arr, 1, axis=1) - 2.0 * arr + np.roll(arr, -1, axis=1)) / grid.dy**2
    return out


def well_prepared_ic(
    grid: Grid,
    c0: np.ndarray,
    params: ModelParams,
    grad_c0: np.ndarray | None = None,
    lap_gprime: np.ndarray | None = None,
    variant: str = "well-prepared",
) -> FieldState:
    """Initial state with the auxiliary fields on the slow manifold:
    phi = c, p = grad c, w = beta lap(c^3 - c), q = 0.

    Analytic gradient / Laplacian are used when the scenario provides them,
    otherwise periodic finite differences (4th-order gradient, 2nd-order
    Laplacian). The ic1/ic2/ic3 variants deliberately break preparedness:
    ic1 zeroes p and w, ic2 zeroes only w, ic3 zeroes phi, p and w.
    """
    if variant not in IC_VARIANTS:
        raise ValueError(f"unknown ic variant {variant!r}")
    c0 = np.asarray(c0, dtype=np.float64)
    d = grid.dim
    shape = grid.shape
    if grad_c0 is None:
        hs = (grid.dx, grid.dy) if d == 2 else (grid.dx,)
        grad_c0 = np.stack([gradient_4th(c0, h, axis=ax) for ax, h in enumerate(hs)])
    else:
        grad_c0 = np.asarray(grad_c0, dtype=np.float64)
        if grad_c0.shape == shape and d == 1:
            grad_c0 = grad_c0[None]
    if lap_gprime is None:
        lap_gprime = laplacian_2nd(c0**3 - c0, grid)
    w0 = params.beta * np.asarray(lap_gprime, dtype=np.float64)

    phi = c0.copy()
    p = grad_c0.copy()
    w = w0
    if variant == "ic1":
        p = np.zeros((d,) + shape)
        w = np.zeros(shape)
    elif variant == "ic2":
        w = np.zeros(shape)
    elif variant == "ic3":
        phi = np.zeros(shape)
        p = np.zeros((d,) + shape)
        w = np.zeros(shape)
    return new_state(grid, c0, phi, w, np.zeros((d,) + shape), p)


# ---------------------------------------------------------------------------
# Scenario configuration
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ScenarioConfig:
    scenario: str
    solver: str = "hyperbolic"
    params: ModelParams = ModelParams(gamma=1.0e-3)
    nx: int = 200
    nx_ref: int = 0  # 0: reference solver shares nx
    ny: int = 0
    xl: float = 0.0
    xr: float = 1.0
    yl: float = 0.0
    yr: float = 0.0
    flux: FluxChoice = FluxChoice.FORCE
    cfl: float = 0.95
    dt_ref: float = 1.0e-5
    dt_cap: float | None = None
    t_end: float = 0.1
    out_dir: str = "out"
    snapshots: tuple[float, ...] = ()
    ic_variant: str = "well-prepared"
    epsilon: float = 0.01
    alphas: tuple[float, ...] = (25.0, 50.0, 100.0, 400.0, 1600.0)
    alpha_dx: float = 1.0e-5
    radial_nr: int = 1500
    radial_rmax: float = 1.5
    radial_dt: float = 1.0e-4
    radial_steady_tol: float = 1.0e-8
    seq: bool = True

    def __post_init__(self) -> None:
        if self.scenario not in SCENARIOS:
            raise ValueError(f"unknown scenario {self.scenario!r}; choose from {SCENARIOS}")
        if self.solver not in SOLVERS:
            raise ValueError(f"unknown solver {self.solver!r}; choose from {SOLVERS}")
        if self.ic_variant not in IC_VARIANTS:
            raise ValueError(f"unknown ic variant {self.ic_variant!r}")
        if self.t_end < 0.0:
            raise ValueError("t_end must be nonnegative")

    def grid(self) -> Grid:
        return Grid(nx=self.nx, xl=self.xl, xr=self.xr, ny=self.ny, yl=self.yl, yr=self.yr)

    def ref_grid(self) -> Grid:
        nx = self.nx_ref or self.nx
        return Grid(nx=nx, xl=self.xl, xr=self.xr, ny=self.ny, yl=self.yl, yr=self.yr)


def preset(scenario: str, mode: str = "desk") -> ScenarioConfig:
    """Published parameter sets; desk presets shrink resolution/horizon only."""
    if mode not in ("desk", "paper"):
        raise ValueError("mode must be 'desk' or 'paper'")
    desk = mode == "desk"
    if scenario == "alpha-table":
        return ScenarioConfig(
            scenario=scenario, solver="reference",
            params=ModelParams(gamma=1.0e-4, alpha=100.0, beta=1.0e-6, tau=1.0e-4),
            nx=60000, xl=0.0, xr=0.6, t_end=0.0, alpha_dx=1.0e-5,
        )
    if scenario == "exact-sn":
        par = ModelParams(gamma=1.0e-3, alpha=500.0, beta=1.0e-6, tau=8.0e-4)
        lam = sn_wavelength(SnSolutionSpec(epsilon=0.01, gamma=par.gamma))
        return ScenarioConfig(
            scenario=scenario, solver="hyperbolic", params=par,
            nx=500 if desk else 2000, xl=0.0, xr=2.0 * lam,
            flux=FluxChoice.FORCE, cfl=0.95, t_end=0.05 if desk else 10.0,
        )
    if scenario == "spinodal":
        par = ModelParams(gamma=1.0e-3, alpha=500.0, beta=1.0e-7, tau=1.0e-5)
        return ScenarioConfig(
            scenario=scenario, solver="both", params=par,
            nx=200 if desk else 2000, nx_ref=0 if desk else 1000,
            xl=-1.0, xr=1.0,
            flux=FluxChoice.FORCE, cfl=0.95, dt_ref=1.0e-5,
            t_end=0.2 if desk else 4.0,
            snapshots=(0.14,) if desk else (1.0, 2.0, 4.0),
        )
    if scenario == "ostwald1d":
        par = ModelParams(gamma=1.0e-3, alpha=1000.0, beta=1.0e-7, tau=1.0e-4)
        return ScenarioConfig(
            scenario=scenario, solver="both", params=par,
            nx=200 if desk else 1000, xl=0.0, xr=1.0,
            flux=FluxChoice.FORCE, cfl=0.95, dt_ref=1.0e-4,
            t_end=0.02 if desk else 0.3,
            snapshots=() if desk else (0.1, 0.3),
        )
    if scenario == "radial2d":
        # 2D runs use Rusanov: the transcribed FORCE flux is only neutrally
        # stable on the zero-speed components in an unsplit 2D update
        par = ModelParams(gamma=1.0e-3, alpha=500.0, beta=1.0e-6, tau=1.0e-4)
        return ScenarioConfig(
            scenario=scenario, solver="hyperbolic", params=par,
            nx=100 if desk else 500, ny=100 if desk else 500,
            xl=-1.0, xr=1.0, yl=-1.0, yr=1.0,
            flux=FluxChoice.RUSANOV, cfl=0.9, t_end=0.02 if desk else 1.0,
            radial_nr=1500 if desk else 6000, radial_rmax=1.5,
            radial_dt=1.0e-3, radial_steady_tol=1.0e-6,
        )
    if scenario == "ostwald2d":
        par = ModelParams(gamma=1.0e-3, alpha=1000.0, beta=1.0e-8, tau=1.0e-5)
        return ScenarioConfig(
            scenario=scenario, solver="hyperbolic" if desk else "both",
            params=par,
            nx=60 if desk else 600, ny=72 if desk else 720,
            xl=-0.5, xr=0.5, yl=-0.6, yr=0.6,
            flux=FluxChoice.RUSANOV, cfl=0.9, dt_ref=1.0e-5,
            t_end=0.002 if desk else 1.0,
            snapshots=() if desk else (0.01, 0.2, 1.0),
        )
    raise ValueError(f"no preset for scenario {scenario!r}")


# ---------------------------------------------------------------------------
# Config file parsing (INI-style key=value with section headers)
# ---------------------------------------------------------------------------

_FLOAT_KEYS = {
    "gamma", "alpha", "beta", "tau", "xl", "xr", "yl", "yr", "cfl", "dt_ref",
    "dt_cap", "t_end", "epsilon", "alpha_dx", "radial_rmax", "radial_dt",
    "radial_steady_tol",
}
_INT_KEYS = {"nx", "nx_ref", "ny", "radial_nr"}


def load_config(path: str) -> ScenarioConfig:
    """Read a scenario config file; unknown keys are rejected."""
    cp = configparser.ConfigParser()
    read = cp.read(path)
    if not read:
        raise FileNotFoundError(path)
    items: dict[str, str] = {}
    for section in cp.sections():
        for key, val in cp.items(section):
            items[key] = val
    if "scenario" not in items:
        raise ValueError(f"{path}: missing 'scenario' key")
    base = preset(items.pop("scenario"), items.pop("mode", "desk"))
    return apply_overrides(base, items)


def apply_overrides(cfg: ScenarioConfig, items: dict) -> ScenarioConfig:
    """Apply string-valued overrides (from a config file or CLI flags)."""
    par = cfg.params
    par_kwargs = {}
    cfg_kwargs = {}
    for key, val in items.items():
        if val is None:
            continue
        if key in ("gamma", "alpha", "beta", "tau"):
            par_kwargs[key] = float(val)
        elif key in _FLOAT_KEYS:
            cfg_kwargs[key] = float(val)
        elif key in _INT_KEYS:
            cfg_kwargs[key] = int(val)
        elif key == "flux":
            cfg_kwargs[key] = FluxChoice(str(val).lower())
        elif key in ("snapshots", "alphas"):
            if isinstance(val, str):
                val = [s for s in val.split(",") if s.strip()]
            cfg_kwargs[key] = tuple(float(s) for s in val)
        elif key in ("solver", "ic_variant", "out_dir"):
            cfg_kwargs[key] = str(val)
        elif key == "seq":
            cfg_kwargs[key] = str(val).lower() in ("1", "true", "yes", "on")
        else:
            raise ValueError(f"unknown config key {key!r}")
    if par_kwargs:
        cfg_kwargs["params"] = replace(par, **par_kwargs)
    return replace(cfg, **cfg_kwargs)


def write_config(cfg: ScenarioConfig, path: str) -> None:
    """Serialize the resolved configuration (round-trips via load_config)."""
    cp = configparser.ConfigParser()
    cp["scenario"] = {
        "scenario": cfg.scenario,
        "solver": cfg.solver,
        "flux": cfg.flux.value,
        "ic_variant": cfg.ic_variant,
        "t_end": repr(cfg.t_end),
        "cfl": repr(cfg.cfl),
        "dt_ref": repr(cfg.dt_ref),
        "snapshots": ",".join(repr(t) for t in cfg.snapshots),
        "seq": str(cfg.seq).lower(),
    }
    cp["params"] = {
        "gamma": repr(cfg.params.gamma),
        "alpha": repr(cfg.params.alpha),
        "beta": repr(cfg.params.beta),
        "tau": repr(cfg.params.tau),
    }
    cp["grid"] = {
        "nx": str(cfg.nx), "nx_ref": str(cfg.nx_ref), "ny": str(cfg.ny),
        "xl": repr(cfg.xl), "xr": repr(cfg.xr),
        "yl": repr(cfg.yl), "yr": repr(cfg.yr),
    }
    if cfg.scenario == "exact-sn":
        cp["scenario"]["epsilon"] = repr(cfg.epsilon)
    if cfg.scenario == "alpha-table":
        cp["study"] = {"alphas": ",".join(repr(a) for a in cfg.alphas),
                       "alpha_dx": repr(cfg.alpha_dx)}
    if cfg.scenario == "radial2d":
        cp["radial"] = {
            "radial_nr": str(cfg.radial_nr),
            "radial_rmax": repr(cfg.radial_rmax),
            "radial_dt": repr(cfg.radial_dt),
            "radial_steady_tol": repr(cfg.radial_steady_tol),
        }
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    with open(path, "w", encoding="ascii") as fh:
        cp.write(fh)


# ---------------------------------------------------------------------------
# Scenario driver
# ---------------------------------------------------------------------------


def initial_condition(cfg: ScenarioConfig) -> tuple[FieldState, dict]:
    """Initial FieldState of a scenario plus auxiliary data for comparisons."""
    grid = cfg.grid()
    par = cfg.params
    aux: dict = {}
    if cfg.scenario == "exact-sn":
        spec = SnSolutionSpec(epsilon=cfg.epsilon, gamma=par.gamma)
        x = cell_centers(grid)
        c0 = sn_solution(spec, x)
        grad = sn_solution_gradient(spec, x)
        lap_gprime = laplacian_of_gprime_stationary(c0, grad, par.gamma)
        aux["spec"] = spec
        state = well_prepared_ic(grid, c0, par, grad, lap_gprime, cfg.ic_variant)
    elif cfg.scenario == "spinodal":
        x = cell_centers(grid)
        state = well_prepared_ic(grid, spinodal_ic(x), par, variant=cfg.ic_variant)
    elif cfg.scenario == "ostwald1d":
        x = cell_centers(grid)
        state = well_prepared_ic(grid, ostwald1d_ic(x, par.gamma), par, variant=cfg.ic_variant)
    elif cfg.scenario == "ostwald2d":
        x, y = cell_centers(grid)
        c0 = ostwald2d_ic(x[:, None], y[None, :], par.gamma)
        state = well_prepared_ic(grid, c0, par, variant=cfg.ic_variant)
    elif cfg.scenario == "radial2d":
        rg = RadialGrid(nr=cfg.radial_nr, r_max=cfg.radial_rmax)
        profile0 = radial_bubble_ic(rg.centers, par.gamma)
        steady, steps = reference.run_radial_to_steady(
            profile0, rg, par.gamma,
            ImplicitSolveConfig(dt=cfg.radial_dt),
            steady_tol=cfg.radial_steady_tol,
        )
        aux["radial_grid"] = rg
        aux["radial_profile"] = steady
        aux["radial_steps"] = steps
        c0, p0 = reference.radial_to_cartesian(rg.centers, steady, grid)
        lap_gprime = laplacian_2nd(c0**3 - c0, grid)
        state = well_prepared_ic(grid, c0, par, p0, lap_gprime, cfg.ic_variant)
    else:
        raise ValueError(f"scenario {cfg.scenario!r} has no field initial condition")
    return state, aux


def laplacian_of_gprime_stationary(c0, grad_c0, gamma):
    """lap(c^3 - c) for profiles obeying the stationary relation
    gamma lap(c) = c^3 - c: equals 6 c |grad c|^2 + (3c^2 - 1)(c^3 - c)/gamma."""
    g2 = np.sum(np.atleast_2d(grad_c0) ** 2, axis=0).reshape(np.shape(c0))
    return 6.0 * np.asarray(c0) * g2 + (3.0 * np.asarray(c0) ** 2 - 1.0) * (
        np.asarray(c0) ** 3 - np.asarray(c0)
    ) / gamma


class SnapshotPlan:
    """Nearest-step-after-time sampling of requested snapshot instants.

    Each taken entry is (requested time, actual step time, copy of the data);
    keying on the requested time lets runs with different step sizes be
    compared at the same nominal instants.
    """

    def __init__(self, times):
        self.pending = sorted(times)
        self.taken: list[tuple[float, float, FieldState]] = []

    def __call__(self, step: int, t: float, state) -> None:
        while self.pending and t >= self.pending[0] - 1.0e-14:
            requested = self.pending.pop(0)
            self.taken.append((requested, t, state.copy()))


def _resample_periodic(x_src: np.ndarray, v_src: np.ndarray, x_dst: np.ndarray,
                       period: float) -> np.ndarray:
    """Degree-4 piecewise Lagrange resampling on a periodic uniform lattice."""
    n = len(x_src)
    h = period / n
    pos = (x_dst - x_src[0]) / h
    base = np.floor(pos).astype(int)
    frac = pos - base
    out = np.zeros_like(x_dst, dtype=np.float64)
    offsets = np.arange(-2, 3)
    for k, ok in enumerate(offsets):
        lk = np.ones_like(frac)
        for m, om in enumerate(offsets):
            if m == k:
                continue
            lk *= (frac - om) / (ok - om)
        out += v_src[(base + ok) % n] * lk
    return out


def run_scenario(cfg: ScenarioConfig) -> dict:
    """Run the configured scenario and write its artifacts; returns a summary."""
    os.makedirs(cfg.out_dir, exist_ok=True)
    write_config(cfg, os.path.join(cfg.out_dir, "resolved_config.cfg"))
    if cfg.scenario == "alpha-table":
        rows = alpha_convergence_study(
            list(cfg.alphas), cfg.params.gamma, (cfg.xl, cfg.xr), cfg.alpha_dx
        )
        path = os.path.join(cfg.out_dir, "table_alpha.csv")
        output.write_alpha_table_csv(path, rows)
        return {"table": rows, "artifacts": [path]}
    if cfg.scenario == "custom":
        raise ValueError("custom scenarios must be driven through the library API")

    grid = cfg.grid()
    par = cfg.params
    state0, aux = initial_condition(cfg)
    artifacts: list[str] = []
    summary: dict = {"aux": aux, "artifacts": artifacts}

    x = cell_centers(grid) if grid.dim == 1 else None

    def snap_path(tag: str, t: float, ext: str) -> str:
        return os.path.join(cfg.out_dir, f"snap_{tag}_t{t:.6f}.{ext}")

    def write_state(tag: str, t: float, st: FieldState) -> None:
        if grid.dim == 1:
            path = snap_path(tag, t, "csv")
            output.write_snapshot_csv(path, x, st)
        else:
            path = snap_path(tag, t, "vtk")
            fields = {"c": st.c, "phi": st.phi, "w": st.w,
                      "q1": st.q[0], "q2": st.q[1], "p1": st.p[0], "p2": st.p[1]}
            output.write_vtk_structured_points(path, grid, fields)
            artifacts.append(path)
            xs, ys = cell_centers(grid)
            for ycut in (0.0, 0.4):
                if not (grid.yl <= ycut <= grid.yr):
                    continue
                j = int(np.argmin(np.abs(ys - ycut)))
                cut = snap_path(f"{tag}_y{ycut:g}", t, "csv")
                output.write_cut_csv(cut, xs, {"c": st.c[:, j]})
                artifacts.append(cut)
            return
        artifacts.append(path)

    # ----- hyperbolic branch
    hyp_final = None
    if cfg.solver in ("hyperbolic", "both"):
        recorder = diagnostics.SeriesRecorder(grid, par, q_every=10)
        plan = SnapshotPlan(cfg.snapshots)
        ctrl = TimeControl(cfl=cfg.cfl, t_end=cfg.t_end, dt_cap=cfg.dt_cap)
        res = hyperbolic.run(state0, grid, par, ctrl, cfg.flux, observers=(recorder, plan))
        hyp_final = res.state
        write_state("hyp", 0.0, state0)
        for req, _t, st in plan.taken:
            write_state("hyp", req, st)
        write_state("hyp", res.time, res.state)
        predicted = recorder.predicted_energy() if len(recorder.q_times) >= 2 else None
        series = os.path.join(cfg.out_dir, "series_hyp.csv")
        output.write_series_csv(
            series, recorder.times, recorder.energy, recorder.energy_i,
            recorder.energy_ii, recorder.mass, predicted,
        )
        artifacts.append(series)
        summary["hyperbolic"] = res
        summary["recorder"] = recorder
        summary["hyp_snapshots"] = plan.taken

    # ----- reference branch (1D and 2D Cartesian)
    ref_final = None
    ref_grid = cfg.ref_grid()
    if cfg.solver in ("reference", "both"):
        if ref_grid.shape == grid.shape:
            c_init = state0.c
        else:
            ref_cfg0 = replace(cfg, nx=ref_grid.nx, nx_ref=0)
            c_init = initial_condition(ref_cfg0)[0].c
        x_ref = cell_centers(ref_grid) if ref_grid.dim == 1 else None
        cfg_ref = ImplicitSolveConfig(dt=cfg.dt_ref)
        times: list[float] = []
        masses: list[float] = []
        plan_ref = SnapshotPlan(cfg.snapshots)
        ref_snaps: list[tuple[float, np.ndarray]] = []

        def ref_observer(step: int, t: float, lattice: np.ndarray) -> None:
            times.append(t)
            masses.append(diagnostics.total_mass(lattice, ref_grid))
            while plan_ref.pending and t >= plan_ref.pending[0] - 1.0e-14:
                ref_snaps.append((plan_ref.pending.pop(0), lattice.copy()))

        ref_final = reference.run_implicit(
            c_init, ref_grid, par.gamma, cfg_ref, cfg.t_end, observer=ref_observer
        )
        for t, lat in [(0.0, c_init)] + ref_snaps + [(cfg.t_end, ref_final)]:
            if ref_grid.dim == 1:
                path = snap_path("ref", t, "csv")
                output.write_cut_csv(path, x_ref, {"c": lat})
            else:
                path = snap_path("ref", t, "vtk")
                output.write_vtk_structured_points(path, ref_grid, {"c": lat})
            artifacts.append(path)
        if times:
            series = os.path.join(cfg.out_dir, "series_ref.csv")
            nanc = np.full(len(times), np.nan)
            output.write_series_csv(series, times, nanc, nanc, nanc, masses, None)
            artifacts.append(series)
        summary["reference"] = ref_final
        summary["ref_snapshots"] = ref_snaps

    # ----- cross comparison (on the coarser lattice when resolutions differ)
    if cfg.solver == "both" and hyp_final is not None and ref_final is not None:
        if grid.dim != 1:
            raise NotImplementedError("cross-solver comparison is wired for 1D scenarios")
        period = grid.xr - grid.xl

        def on_ref_lattice(c_hyp: np.ndarray) -> np.ndarray:
            if ref_grid.shape == grid.shape:
                return c_hyp
            return _resample_periodic(x, c_hyp, cell_centers(ref_grid), period)

        err = diagnostics.l2_relative_error(on_ref_lattice(hyp_final.c), ref_final)
        rows_t = [cfg.t_end]
        rows_e = [err]
        hyp_by_req = {round(req, 9): st for req, _t, st in summary.get("hyp_snapshots", [])}
        for t, lat in summary.get("ref_snapshots", []):
            st = hyp_by_req.get(round(t, 9))
            if st is not None:
                rows_t.insert(-1, t)
                rows_e.insert(-1, diagnostics.l2_relative_error(on_ref_lattice(st.c), lat))
        path = os.path.join(cfg.out_dir, "comparison.csv")
        output.write_columns_csv(path, "time,l2_c", (np.asarray(rows_t), np.asarray(rows_e)))
        artifacts.append(path)
        summary["l2_final"] = err

    if cfg.scenario == "radial2d" and "radial_profile" in aux:
        rg = aux["radial_grid"]
        path = os.path.join(cfg.out_dir, "radial_profile.csv")
        output.write_profile_csv(path, rg.centers, aux["radial_profile"])
        artifacts.append(path)

    return summary
