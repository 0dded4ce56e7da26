"""
Interior-layer corrector
========================

The corrector is a closed-form tanh profile that carries the jump of a
viscous shock.  This script builds it for one set of Riemann states, checks
that it solves its own ODE and shows how it thins out as viscosity drops.

Run with ``python demos/corrector_profile.py``.
"""

# %%
# One side of a moving shock: the state left of the shock is 1, the shock
# travels at 0.25 and the viscous solution takes the value 0.25 on it.
import numpy as np

from slpinn.corrector import corrector_explicit, corrector_ode_residual, shock_speed

u_left, u_right = 1.0, -0.5
speed = shock_speed(1.0, 0.5)
b = 0.25
eps = 1 / 500

# %%
# Distances are measured from the shock.  The profile starts at ``b - u_left``
# on the shock and vanishes a few layer widths away on the left.
width = eps / (u_left - speed)
offsets = -np.array([0, 1, 2, 5, 10, 20]) * width
profile = corrector_explicit("L", u_left, speed, b, eps, offsets)
for k, value in zip((0, 1, 2, 5, 10, 20), profile):
    print(f"{k:3d} widths left of the shock: phi = {value: .3e}")

# %%
# The profile is an exact solution of the layer ODE; the residual sits at
# roundoff level across the layer.
xs = np.linspace(-10, 10, 201) * width
print("max ODE residual:", np.max(np.abs(corrector_ode_residual("L", u_left, speed, b, eps, xs))))

# %%
# The layer thins in proportion to eps: the distance at which the profile
# drops to one percent of its shock value shrinks tenfold per decade.
for eps_k in (1e-2, 1e-3, 1e-4):
    xs = -np.logspace(-8, 0, 4001)
    phi = corrector_explicit("L", u_left, speed, b, eps_k, xs)
    reach = -xs[np.argmax(np.abs(phi) < 0.01 * abs(b - u_left))]
    print(f"eps = {eps_k:.0e}: profile below 1% beyond {reach:.2e}")
