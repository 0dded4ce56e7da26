"""
Reference solutions
===================

Errors of the trained models are measured against two kinds of reference:
the Cole-Hopf closed form for Riemann data and a centred finite-difference
solver for the sine data.  Here both are compared on a steady shock, where
each can be checked against the other.
"""

# %%
import numpy as np

from slpinn.physics import ProblemSpec
from slpinn.reference import default_dt, exact_riemann, exact_smooth, solve_fd

steady = ProblemSpec.riemann(1 / 500)

# %%
# The closed form is evaluated in log space, so it stays finite far into the
# saturated region even for very small viscosity.
x = np.array([-0.5, -0.01, 0.0, 0.01, 0.5])
print("closed form at t = 0.5:", exact_riemann(steady, x, 0.5))
print("eps = 1e-4 far field:", exact_riemann(ProblemSpec.riemann(1e-4), np.array([-0.9, 0.9]), 1.0))

# %%
# The finite-difference solver converges at second order towards the closed
# form.  Each halving of the spacing cuts the worst probe error by about 4.
probes = np.array([-0.05, -0.01, 0.0, 0.01, 0.05])
previous = None
for dx in (1e-3, 5e-4, 2.5e-4):
    grid = solve_fd(steady, dx, default_dt(steady, dx))
    idx = np.round((probes + 1) / dx).astype(int)
    err = np.max(np.abs(grid.at_time(0.5)[idx] - exact_riemann(steady, grid.x[idx], 0.5)))
    ratio = "" if previous is None else f"  (ratio {previous / err:.2f})"
    print(f"dx = {dx:.2e}: worst probe error {err:.2e}{ratio}")
    previous = err

# %%
# For the sine data the closed form is a ratio of Gauss-Hermite integrals.  It
# is odd in x, which the finite-difference run inherits.
eps = 0.1 / np.pi
xs = np.linspace(-1, 1, 9)
print("sine case at t = 0.5:", np.round(exact_smooth(eps, xs, 0.5), 6))
