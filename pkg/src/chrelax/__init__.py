"""Solvers and diagnostics for Cahn-Hilliard phase-field dynamics via a
first-order hyperbolic relaxation system, with a semi-implicit reference
solver for the original fourth-order equation."""

from .params import (
    ALPHA_CRITICAL,
    FieldState,
    Grid,
    ModelParams,
    cell_centers,
    new_state,
    zero_state,
)
from .physics import (
    EigenData,
    chemical_potential,
    eigen,
    eigen_det_R,
    energy_density,
    energy_split,
    flux,
    potential,
    potential_d1,
    potential_d2,
    source,
)
from .hyperbolic import BlowUpError, FluxChoice, RunResult, TimeControl, run, step
from .reference import (
    GmresError,
    ImplicitSolveConfig,
    RadialGrid,
    bilaplacian_apply,
    face_gradient,
    face_mobility,
    mobility,
    radial_to_cartesian,
    run_radial_to_steady,
    step_implicit,
    step_implicit_radial,
)
from .exact import (
    SnSolutionSpec,
    alpha_convergence_study,
    elliptic_K,
    jacobi_sn,
    jacobi_sn_cn_dn,
    ode1_rhs,
    ode2_rhs,
    rk4_integrate,
    sn_solution,
    sn_wavelength,
    tanh_front,
)
from .diagnostics import (
    SeriesRecorder,
    energy_decay_ode,
    l2_relative_error,
    linf_error,
    total_energy,
    total_mass,
)
from .scenarios import (
    ScenarioConfig,
    load_config,
    ostwald1d_ic,
    ostwald2d_ic,
    preset,
    run_scenario,
    spinodal_ic,
    well_prepared_ic,
)

__version__ = "0.1.0"
