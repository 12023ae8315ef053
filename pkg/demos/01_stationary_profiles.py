"""Exact stationary profiles and the convergence-in-penalty study.

Walks through the elliptic-sine solution family (amplitude, modulus and
wavelength as functions of the family parameter), checks the stationarity
relation numerically, and reproduces the penalty-convergence table by
integrating both stationary Cauchy problems with RK4.

Run:  python3 demos/01_stationary_profiles.py
"""

import numpy as np

from chrelax import SnSolutionSpec, alpha_convergence_study, sn_solution, sn_wavelength

# --- the periodic solution family -----------------------------------------
# epsilon -> 0 degenerates into the tanh front; epsilon -> 1 flattens to 0.
for eps in (0.9, 0.5, 0.1, 0.01):
    spec = SnSolutionSpec(epsilon=eps, gamma=1e-3)
    lam = sn_wavelength(spec)
    x = np.linspace(0.0, lam, 7)
    print(f"eps={eps:5.2f}  amplitude={spec.amplitude:.4f}  modulus={spec.modulus:.4f} "
          f" wavelength={lam:.4f}  c(first half period)={np.round(sn_solution(spec, x[:4]), 3)}")

# --- stationarity check: gamma c'' = c^3 - c -------------------------------
spec = SnSolutionSpec(epsilon=0.01, gamma=1e-3)
h = 1e-5
x = np.linspace(0.0, 2 * sn_wavelength(spec), 2001)
c = sn_solution(spec, x)
cpp = (sn_solution(spec, x + h) - 2 * c + sn_solution(spec, x - h)) / h**2
resid = np.max(np.abs(spec.gamma * cpp - (c**3 - c)))
print(f"\nstationarity residual of the eps=0.01 profile: {resid:.2e}")

# --- convergence in the penalty parameter ----------------------------------
# the relaxed stationary problem approaches the fourth-order one at first
# order in alpha; the errors and observed orders reproduce the benchmark
print("\nalpha        |c-c_ref|    |p-grad c_ref|  |c-phi|      orders")
for row in alpha_convergence_study([25, 50, 100, 400, 1600]):
    print(f"{row.alpha:7.0f}   {row.err_c:.3e}   {row.err_p:.3e}     "
          f"{row.err_c_phi:.3e}  {row.order_c:5.2f} {row.order_p:5.2f} {row.order_c_phi:5.2f}")
