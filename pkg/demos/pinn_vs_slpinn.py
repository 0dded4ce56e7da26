"""
PINN against sl-PINN on a sharp sine profile
============================================

A short training run on the sine data with small viscosity.  The plain
network has to resolve the interior layer itself; the sl-PINN hands the layer
to its corrector and only fits the smooth outer part.  Iteration counts are
far below the full-size presets, so the numbers are indicative only; the full
comparison is ``slpinn run suites/acceptance.json``.
"""

# %%
import numpy as np

from slpinn.harness import default_reference, get_reference
from slpinn.metrics import error_field, error_report
from slpinn.network import NetworkShape
from slpinn.physics import Counts, ProblemSpec
from slpinn.trainer import Method, RunConfig, Schedule, predict, train

problem = ProblemSpec.smooth(1e-2 / np.pi)
shape = NetworkShape((2, 20, 20, 20, 1))
counts = Counts(1000, 80, 80, 80)

# %%
# The reference grid is computed once and cached on disk (``SLPINN_CACHE``).
reference = get_reference(problem, default_reference(problem))

# %%
# Both methods use the same seeds, hence the same initial weights and the
# same collocation points.
for method in (Method.PINN, Method.SLPINN):
    config = RunConfig(problem, method, shape, counts, Schedule(1e-3, 1500), Schedule(1.0, 300))
    model = train(config)
    errors = dict(error_report(error_field(reference, lambda x, t: predict(model, x, t))).rows())
    print(f"{method.value:7s} L2 error {errors['l2_space_time']:.3e}   "
          f"max error at t=1 {errors['linf_t=1']:.3e}")
