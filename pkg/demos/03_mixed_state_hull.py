"""
Mixtures: the convex roof by hull surgery
=========================================

E_psi is not convex near the GHZ corner, so the mixed-state value is its lower
convex envelope. The envelope is taken along r in every row, then along x in
every column, and checked against a 3D convex hull.
"""
# %%
import numpy as np

from geoment import e_psi, e_psi_xr, hull_oracle, mixed_gme, mixed_gme_surface, verify_convexity
from geoment.family import e_psi_grid
from geoment.hull import XY, SurfaceGrid, lower_envelope_1d

xs = np.linspace(0, 1, 201)
raw = SurfaceGrid(xs, xs, e_psi_grid(xs, xs), XY)
rep = verify_convexity(raw, 100_000, 0, report_above=1e-3)
print("raw E_psi: worst midpoint violation", rep.max_violation)
print("worst pair:", rep.violating_pairs[0])

# %%
# One row at x = 0.9: the bump between the two minima is bridged.
r = np.linspace(0, 1, 21)
row = np.array([e_psi_xr(0.9, v) for v in r])
print(np.round(row, 4))
print(np.round(lower_envelope_1d(r, row), 4))

# %%
e_rho = mixed_gme_surface(201, 201)
print("E_rho worst violation:", verify_convexity(e_rho, 100_000, 0).max_violation)
print("oracle gap at 101:", np.nanmax(np.abs(mixed_gme_surface(101, 101).values - hull_oracle(101, 101).values)))

# %%
for x, y in [(0.5, 0.25), (0.9, 0.05), (0.95, 0.025), (0.25, 0.375)]:
    print(f"({x}, {y})  E_psi = {e_psi(x, y):.5f}  E_rho = {mixed_gme(x, y):.5f}")
