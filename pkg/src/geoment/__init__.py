"""Geometric measure of entanglement for multi-qubit pure states and for
mixtures of GHZ, W and inverted-W states."""

from .family import cubic_roots_nonneg, e_psi, e_psi_xr, lambda_family
from .hull import (
    SurfaceGrid,
    convexify_in_r,
    convexify_in_x,
    hull_oracle,
    mixed_gme,
    mixed_gme_surface,
    sample_e_psi_xr,
    verify_convexity,
)
from .negativity import family_negativity, negativity_of, negativity_surface, ordering_search, partial_transpose
from .pure_gme import GmeResult, SolverConfig, solve_gme, stationarity_sweep, sweep_history
from .states import (
    DensityMatrix,
    FamilyPoint,
    ProductState,
    PureState,
    family_density_matrix,
    family_pure_state,
    make_ghz,
    make_w,
    make_w_tilde,
    twirl,
)

__version__ = "0.1.0"
