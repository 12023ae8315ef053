"""Model parameters, grid geometry, and the discrete field state.

Shape conventions used throughout the package:
- scalar lattices have shape (nx,) in 1D and (nx, ny) in 2D
- vector lattices (relaxation flux q, relaxed gradient p) carry the
  direction as a leading axis: shape (dim, nx) or (dim, nx, ny)
- the packed conserved vector orders components as
  (c, q_1..q_d, w, p_1..p_d, phi), i.e. 3 + 2*dim slots
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

# Minimum penalty stiffness keeping the first-order system hyperbolic for
# the quartic double-well: |min g''| on [-1, 1] with g'' = 3c^2 - 1.
ALPHA_CRITICAL = 1.0

PERIODIC = "periodic"


@dataclass(frozen=True)
class ModelParams:
    """Physical and relaxation constants shared by both solvers.

    gamma: capillarity coefficient (squared interface width scale)
    alpha: penalty stiffness coupling c and phi
    beta:  inertial relaxation constant of the phi equation
    tau:   relaxation time of the Maxwell-Cattaneo mass flux
    """

    gamma: float
    alpha: float = 500.0
    beta: float = 1.0e-6
    tau: float = 1.0e-4

    def __post_init__(self) -> None:
        for name in ("gamma", "beta", "tau"):
            v = getattr(self, name)
            if not np.isfinite(v) or v <= 0.0:
                raise ValueError(f"{name} must be positive and finite, got {v}")
        if not np.isfinite(self.alpha) or self.alpha < ALPHA_CRITICAL:
            raise ValueError(
                f"alpha must be >= {ALPHA_CRITICAL} to keep the relaxation "
                f"system hyperbolic, got {self.alpha}"
            )


@dataclass(frozen=True)
class Grid:
    """Uniform periodic Cartesian grid, 1D or 2D.

    Cell centers follow the midpoint convention x_i = xl + (i - 1/2) dx,
    so cell i occupies [xl + (i-1) dx, xl + i dx].
    """

    nx: int
    xl: float
    xr: float
    ny: int = 0
    yl: float = 0.0
    yr: float = 0.0
    boundary: str = PERIODIC

    def __post_init__(self) -> None:
        if self.boundary != PERIODIC:
            raise ValueError(f"only periodic boundaries are supported, got {self.boundary!r}")
        if self.nx < 1:
            raise ValueError("nx must be positive")
        if not self.xr > self.xl:
            raise ValueError("xr must exceed xl")
        if self.ny:
            if self.ny < 1:
                raise ValueError("ny must be positive")
            if not self.yr > self.yl:
                raise ValueError("yr must exceed yl")

    def require_stencil_width(self, width: int = 5) -> None:
        """Solvers call this; their periodic stencils must not self-overlap."""
        if self.nx < width or (self.ny and self.ny < width):
            raise ValueError(f"grid must have at least {width} cells per direction")

    @property
    def dim(self) -> int:
        return 2 if self.ny else 1

    @property
    def dx(self) -> float:
        return (self.xr - self.xl) / self.nx

    @property
    def dy(self) -> float:
        if not self.ny:
            raise ValueError("dy undefined on a 1D grid")
        return (self.yr - self.yl) / self.ny

    @property
    def shape(self) -> tuple[int, ...]:
        return (self.nx, self.ny) if self.ny else (self.nx,)

    @property
    def cell_volume(self) -> float:
        return self.dx * self.dy if self.ny else self.dx

    @property
    def domain_volume(self) -> float:
        vol = self.xr - self.xl
        if self.ny:
            vol *= self.yr - self.yl
        return vol


def cell_centers(grid: Grid) -> np.ndarray | tuple[np.ndarray, np.ndarray]:
    """Cell-center coordinates: x in 1D, the (x, y) pair of 1D axes in 2D."""
    x = grid.xl + (np.arange(grid.nx) + 0.5) * grid.dx
    if grid.dim == 1:
        return x
    y = grid.yl + (np.arange(grid.ny) + 0.5) * grid.dy
    return x, y


def cell_center_mesh(grid: Grid) -> tuple[np.ndarray, np.ndarray]:
    """2D meshgrids (indexing='ij') of the cell-center coordinates."""
    x, y = cell_centers(grid)
    return np.meshgrid(x, y, indexing="ij")


def _validate_lattice(name: str, arr: np.ndarray, shape: tuple[int, ...]) -> np.ndarray:
    arr = np.asarray(arr, dtype=np.float64)
    if arr.shape != shape:
        raise ValueError(f"{name} has shape {arr.shape}, expected {shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite values")
    return arr


def validate_scalar_field(grid: Grid, arr: np.ndarray, name: str = "field") -> np.ndarray:
    """Check a scalar lattice against the grid; returns a float64 view/copy."""
    return _validate_lattice(name, arr, grid.shape)


@dataclass
class FieldState:
    """Cell-averaged unknowns of the relaxation system at one instant.

    An inert value: solver steps produce new states rather than mutating
    in place, so sharing a state read-only across workers is safe.
    """

    c: np.ndarray
    phi: np.ndarray
    w: np.ndarray
    q: np.ndarray  # shape (dim, *grid.shape)
    p: np.ndarray  # shape (dim, *grid.shape)
    time: float = 0.0

    @property
    def dim(self) -> int:
        return self.q.shape[0]

    def pack(self) -> np.ndarray:
        """Stack components into the conserved vector (3 + 2*dim, *shape)."""
        return np.concatenate(
            [self.c[None], self.q, self.w[None], self.p, self.phi[None]], axis=0
        )

    @classmethod
    def unpack(cls, vec: np.ndarray, time: float = 0.0, copy: bool = True) -> "FieldState":
        """Split a packed conserved vector; copy=False returns read-only-by-
        convention views for cheap observer access."""
        ncomp = vec.shape[0]
        d = (ncomp - 3) // 2
        if ncomp != 3 + 2 * d:
            raise ValueError(f"conserved vector has {ncomp} components, expected 3 + 2d")
        own = (lambda a: a.copy()) if copy else (lambda a: a)
        return cls(
            c=own(vec[0]),
            q=own(vec[1 : 1 + d]),
            w=own(vec[1 + d]),
            p=own(vec[2 + d : 2 + 2 * d]),
            phi=own(vec[2 + 2 * d]),
            time=time,
        )

    def copy(self) -> "FieldState":
        return FieldState(
            c=self.c.copy(), phi=self.phi.copy(), w=self.w.copy(),
            q=self.q.copy(), p=self.p.copy(), time=self.time,
        )


def new_state(
    grid: Grid,
    c0: np.ndarray,
    phi0: np.ndarray,
    w0: np.ndarray,
    q0: np.ndarray,
    p0: np.ndarray,
) -> FieldState:
    """Build a validated FieldState at time 0 from per-component lattices."""
    shape = grid.shape
    d = grid.dim
    vshape = (d,) + shape
    return FieldState(
        c=_validate_lattice("c0", c0, shape),
        phi=_validate_lattice("phi0", phi0, shape),
        w=_validate_lattice("w0", w0, shape),
        q=_validate_lattice("q0", q0, vshape),
        p=_validate_lattice("p0", p0, vshape),
        time=0.0,
    )


def zero_state(grid: Grid) -> FieldState:
    shape = grid.shape
    d = grid.dim
    z = np.zeros(shape)
    return new_state(grid, z, z.copy(), z.copy(), np.zeros((d,) + shape), np.zeros((d,) + shape))
