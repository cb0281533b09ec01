"""
Negativity, and where it disagrees with GME
===========================================
"""
# %%
import numpy as np

from geoment import family_negativity, mixed_gme_surface, negativity_surface, ordering_search
from geoment.negativity import partial_transpose_spectrum
from geoment.states import FamilyPoint, family_density_matrix

for x, y in [(1, 0), (0, 1), (0, 0), (0.25, 0.375)]:
    print(f"N({x}, {y}) = {family_negativity(x, y):.12f}")

# %%
spec = partial_transpose_spectrum(family_density_matrix(FamilyPoint(1, 0)))
print("GHZ partial-transpose spectrum:", np.round(spec.eigenvalues, 6))

# %%
# The only PPT point of the family on a fine grid.
n = negativity_surface(201, 201)
print(np.argwhere(n.values <= 1e-10) / 200)

# %%
# GHZ has more negativity than W, but less GME.
pairs = ordering_search(mixed_gme_surface(21, 21), negativity_surface(21, 21))
print(len(pairs), "disagreeing pairs")
for p in pairs:
    if {p[0], p[1]} == {(0.0, 1.0), (1.0, 0.0)}:
        print(p)
