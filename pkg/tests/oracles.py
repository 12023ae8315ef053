"""Independent matrix oracles for the eigenstructure checks.

These assemble the quasilinear Jacobian and the right-eigenvector basis as
explicit matrices (9x9 in the padded two-dimensional analysis layout) and
feed them to generic dense linear algebra, keeping the check independent
of the closed forms in chrelax.physics.
"""

import numpy as np

from chrelax.params import ModelParams
from chrelax.physics import potential_d2


def jacobian_padded(c: float, params: ModelParams) -> np.ndarray:
    """Quasilinear Jacobian on (c, q1, w, p1, phi, q2, q3, p2, p3)."""
    A = np.zeros((9, 9))
    A[0, 1] = 1.0 / params.tau
    A[1, 0] = params.alpha + potential_d2(c)
    A[1, 4] = -params.alpha
    A[2, 3] = -params.gamma
    A[3, 2] = -1.0 / params.beta
    return A


def jacobian_compact(c: float, params: ModelParams, dim: int) -> np.ndarray:
    """Jacobian of the x-sweep in the package's own component ordering."""
    n = 3 + 2 * dim
    A = np.zeros((n, n))
    iq, iw, ip, iphi = 1, 1 + dim, 2 + dim, 2 + 2 * dim
    A[0, iq] = 1.0 / params.tau
    A[iq, 0] = params.alpha + potential_d2(c)
    A[iq, iphi] = -params.alpha
    A[iw, ip] = -params.gamma
    A[ip, iw] = -1.0 / params.beta
    return A


def eigenvector_matrix_padded(c: float, params: ModelParams) -> np.ndarray:
    """Right eigenvectors as columns, ordered with the eigenvalues
    (-fast, -slow, 0 x 5, +slow, +fast)."""
    a = params.alpha + potential_d2(c)
    sq = np.sqrt(params.tau * a)
    sbg = np.sqrt(params.beta * params.gamma)
    R = np.zeros((9, 9))
    R[0, 0] = -1.0 / sq
    R[0, 6] = params.alpha / a
    R[0, 8] = 1.0 / sq
    R[1, 0] = 1.0
    R[1, 8] = 1.0
    R[2, 1] = -sbg
    R[2, 7] = sbg
    R[3, 1] = 1.0
    R[3, 7] = 1.0
    R[4, 6] = 1.0
    R[5, 5] = 1.0
    R[6, 4] = 1.0
    R[7, 3] = 1.0
    R[8, 2] = 1.0
    return R


def random_admissible_states(n: int, seed: int = 0):
    """(c, params) samples over the admissible ranges used by the checks."""
    rng = np.random.default_rng(seed)
    cs = rng.uniform(-1.05, 1.05, n)
    alphas = rng.uniform(1.5, 2000.0, n)
    taus = 10.0 ** rng.uniform(-8, 0, n)
    betas = 10.0 ** rng.uniform(-8, 0, n)
    gammas = 10.0 ** rng.uniform(-8, 0, n)
    for c, al, ta, be, ga in zip(cs, alphas, taus, betas, gammas):
        yield float(c), ModelParams(gamma=float(ga), alpha=float(al), beta=float(be), tau=float(ta))
