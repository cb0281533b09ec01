"""
The GHZ / W / inverted-W superposition in closed form
=====================================================

For sqrt(x)|GHZ> + sqrt(y)|W> + sqrt(1-x-y)|W~> the closest product state is
symmetric, (|0> + t|1>)^3 normalized, and t solves a cubic.
"""
# %%
import numpy as np

from geoment import cubic_roots_nonneg, e_psi, e_psi_xr, solve_gme
from geoment.states import FamilyPoint, family_pure_state

for x, y in [(1, 0), (0, 1), (0, 0), (0.5, 0.25), (0.25, 0.375)]:
    sol = cubic_roots_nonneg(x, y)
    print(f"({x}, {y})  roots {np.round(sol.roots, 6)}  t = {sol.chosen_t:.6f}  E = {e_psi(x, y):.9f}")

# %%
# The formula against the general solver on a coarse grid.
worst = 0.0
for x in np.linspace(0, 1, 11):
    for y in np.linspace(0, 1 - x, 6):
        worst = max(worst, abs(e_psi(x, y) - solve_gme(family_pure_state(FamilyPoint(x, y))).e_sin2))
print("max formula/solver gap:", worst)

# %%
# Curves at fixed x against r = y / (1 - x); symmetric about r = 1/2,
# with two minima once x is large.
r = np.linspace(0, 1, 11)
for x in (0.5, 0.8, 0.9, 0.98):
    print(x, np.round([e_psi_xr(x, v) for v in r], 4))
