"""Self-check suite: corner values, cross-checks between routes, and surface properties."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import family, hull, negativity
from .pure_gme import SolverConfig, solve_gme
from .states import (
    FamilyPoint,
    family_density_matrix,
    family_pure_state,
    make_ghz,
    make_w,
    make_w_tilde,
    twirl,
)

SEPARABLE_POINT = (0.25, 0.375)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}: {self.detail}"


def simplex_nodes(n: int):
    """(x, y) for every node of the n x n grid with x + y <= 1."""
    for i in range(n):
        for j in range(n - i):
            x = i / (n - 1)
            yield x, min(j / (n - 1), 1.0 - x)


def check_corners(seed: int) -> Check:
    cfg = SolverConfig(seed=seed)
    errs = [
        abs(solve_gme(make_ghz(), cfg).e_sin2 - 0.5),
        abs(solve_gme(make_w(), cfg).e_sin2 - 5 / 9),
        abs(solve_gme(make_w_tilde(), cfg).e_sin2 - 5 / 9),
        abs(family.lambda_family(1, 0) - 1 / math.sqrt(2)),
        abs(family.e_psi(0, 1) - 5 / 9),
        abs(family.e_psi(0, 0) - 5 / 9),
    ]
    neg = [
        abs(negativity.family_negativity(1, 0) - 1),
        abs(negativity.family_negativity(0, 1) - 2 * math.sqrt(2) / 3),
    ]
    ok = max(errs) <= 1e-9 and max(neg) <= 1e-10
    return Check("corner values", ok, f"max GME error {max(errs):.3e}, max N error {max(neg):.3e}")


def check_formula_vs_solver(seed: int, n: int = 25) -> Check:
    cfg = SolverConfig(seed=seed)
    worst = max(
        abs(family.e_psi(x, y) - solve_gme(family_pure_state(FamilyPoint(x, y)), cfg).e_sin2)
        for x, y in simplex_nodes(n)
    )
    return Check("formula vs solver", worst <= 1e-7, f"max |dE| {worst:.3e} on {n}x{n} grid")


def check_twirl(seed: int, n: int = 25, n_phases: int = 20) -> Check:
    rng = np.random.default_rng(seed)
    phases = rng.uniform(0, 2 * np.pi, size=(n_phases, 3))
    worst = 0.0
    for x, y in simplex_nodes(n):
        rho = family_density_matrix(FamilyPoint(x, y)).matrix
        worst = max(worst, np.abs(twirl(family_density_matrix(FamilyPoint(x, y))).matrix - rho).max())
        for ph in phases:
            proj = family_pure_state(FamilyPoint(x, y, tuple(ph))).projector()
            worst = max(worst, np.abs(twirl(proj).matrix - rho).max())
    return Check("twirl invariance", worst <= 1e-12, f"max entry error {worst:.3e}")


def check_convexity(e_rho: hull.SurfaceGrid, seed: int) -> Check:
    rep = hull.verify_convexity(e_rho, 100_000, seed)
    return Check("E_rho convexity", rep.max_violation <= 5e-3,
                 f"max midpoint violation {rep.max_violation:.3e}")


def check_raw_nonconvex(seed: int, n: int = 201) -> Check:
    xs = np.linspace(0, 1, n)
    raw = hull.SurfaceGrid(xs, xs, family.e_psi_grid(xs, xs), hull.XY)
    rep = hull.verify_convexity(raw, 100_000, seed, report_above=1e-3)
    hits = [p for p in rep.violating_pairs if p[0][0] > 0.8 and p[1][0] > 0.8]
    return Check("E_psi nonconvex near (1,0)", bool(hits),
                 f"{len(hits)} violating pairs with both x > 0.8")


def check_oracle(n: int = 101) -> Check:
    diff = np.nanmax(np.abs(hull.mixed_gme_surface(n, n).values - hull.hull_oracle(n, n).values))
    return Check("hull oracle agreement", diff <= 5e-3, f"max |dE| {diff:.3e} at {n}x{n}")


def check_zero_set(e_rho: hull.SurfaceGrid, n_surface: hull.SurfaceGrid) -> Check:
    x0, y0 = SEPARABLE_POINT
    X, Y = np.meshgrid(e_rho.first, e_rho.second, indexing="ij")
    far = np.hypot(X - x0, Y - y0) > 0.05
    e_far = float(np.nanmin(np.where(far, e_rho.values, np.nan)))
    e_sep = e_rho.at(x0, y0)
    n_sep = negativity.family_negativity(x0, y0)
    at_node = (np.abs(X - x0) < 1e-9) & (np.abs(Y - y0) < 1e-9)
    n_zero_elsewhere = bool(np.any((n_surface.values <= 1e-10) & ~at_node))
    ok = n_sep <= 1e-10 and e_sep <= 2e-3 and e_far > 1e-3 and not n_zero_elsewhere
    return Check(
        "separable point",
        ok,
        f"N={n_sep:.3e}, E_rho={e_sep:.3e}, min E_rho beyond 0.05 = {e_far:.3e}, "
        f"other PPT nodes: {'yes' if n_zero_elsewhere else 'none'}",
    )


def run_verification(
    seed: int = 0,
    corrupt: Callable[[hull.SurfaceGrid], hull.SurfaceGrid] | None = None,
    resolution: int = 201,
) -> list[Check]:
    """Run every check. ``corrupt`` may alter the E_rho surface first (negative controls)."""
    e_rho = hull.mixed_gme_surface(resolution, resolution)
    if corrupt is not None:
        e_rho = corrupt(e_rho)
    return [
        check_corners(seed),
        check_formula_vs_solver(seed),
        check_twirl(seed),
        check_convexity(e_rho, seed),
        check_raw_nonconvex(seed),
        check_oracle(),
        check_zero_set(e_rho, negativity.negativity_surface(resolution, resolution)),
    ]


def bump(surface: hull.SurfaceGrid, center=(0.3, 0.3), height=0.2, width=0.05) -> hull.SurfaceGrid:
    """Add a Gaussian bump; used to show the convexity check can fail."""
    X, Y = np.meshgrid(surface.first, surface.second, indexing="ij")
    g = height * np.exp(-((X - center[0]) ** 2 + (Y - center[1]) ** 2) / (2 * width**2))
    return surface.replace(surface.values + g)
