"""Acceptance criteria, one test per criterion at the stated tolerance.

A PASS/FAIL line per criterion is printed in the terminal summary.
"""
import math
import time

import numpy as np
import pytest

from geoment.cli import ordering_rows
from geoment.family import e_psi, e_psi_grid, e_psi_xr, lambda_family
from geoment.hull import XY, SurfaceGrid, hull_oracle, interpolate_xy, mixed_gme_surface, verify_convexity
from geoment.negativity import family_negativity, negativity_of
from geoment.pure_gme import solve_gme
from geoment.states import (
    FamilyPoint,
    family_density_matrix,
    family_pure_state,
    make_ghz,
    make_w,
    make_w_tilde,
    twirl,
)

criterion = pytest.mark.criterion


def simplex_nodes(n):
    for i in range(n):
        x = i / (n - 1)
        for j in range(n - i):
            yield x, min(j / (n - 1), 1 - x)


@pytest.fixture(scope="module")
def e_rho_201():
    return mixed_gme_surface(201, 201)


@pytest.fixture(scope="module")
def e_psi_201():
    xs = np.linspace(0, 1, 201)
    return SurfaceGrid(xs, xs, e_psi_grid(xs, xs), XY)


@criterion(1, "GHZ corner")
def test_ghz_corner():
    start = time.perf_counter()
    e = solve_gme(make_ghz()).e_sin2
    lam = lambda_family(1, 0)
    elapsed = time.perf_counter() - start
    assert abs(e - 0.5) <= 1e-9
    assert abs(lam - 1 / math.sqrt(2)) <= 1e-9
    assert elapsed < 1


@criterion(2, "W and inverted-W corners")
def test_w_corners():
    start = time.perf_counter()
    values = [solve_gme(make_w()).e_sin2, solve_gme(make_w_tilde()).e_sin2, e_psi(0, 1), e_psi(0, 0)]
    elapsed = time.perf_counter() - start
    assert max(abs(v - 5 / 9) for v in values) <= 1e-9
    assert elapsed < 1


@criterion(3, "closest product state of W")
def test_w_closest_product():
    phi = solve_gme(make_w()).closest_product
    site = np.array([math.sqrt(2 / 3), math.sqrt(1 / 3)])
    # Per-site phases drop out of |<site|c_k>|.
    fidelity = math.prod(abs(np.vdot(site, c)) ** 2 for c in phi.site_coefficients)
    assert fidelity >= 1 - 1e-8


@criterion(4, "formula vs solver on 25x25 simplex grid")
def test_formula_vs_solver():
    start = time.perf_counter()
    worst = max(abs(e_psi(x, y) - solve_gme(family_pure_state(FamilyPoint(x, y))).e_sin2)
                for x, y in simplex_nodes(25))
    assert worst <= 1e-7
    assert time.perf_counter() - start < 120


@criterion(5, "negativity corners")
def test_negativity_corners():
    assert abs(family_negativity(1, 0) - 1) <= 1e-10
    assert abs(family_negativity(0, 1) - 2 * math.sqrt(2) / 3) <= 1e-10
    assert abs(negativity_of(make_ghz().projector()) - 1) <= 1e-10
    assert abs(negativity_of(make_w().projector()) - 2 * math.sqrt(2) / 3) <= 1e-10


@criterion(6, "separable point")
def test_separable_point(e_rho_201):
    assert abs(family_negativity(0.25, 0.375)) <= 1e-10
    assert e_rho_201.at(0.25, 0.375) <= 2e-3
    X, Y = np.meshgrid(e_rho_201.first, e_rho_201.second, indexing="ij")
    far = np.hypot(X - 0.25, Y - 0.375) > 0.05
    assert np.nanmin(e_rho_201.values[far]) > 1e-3


@criterion(7, "nonconvex region localization")
def test_nonconvex_localization(e_rho_201, e_psi_201):
    rep = verify_convexity(e_psi_201, 100_000, 0, report_above=1e-3)
    assert any(a[0] > 0.8 and b[0] > 0.8 for a, b, _ in rep.violating_pairs)
    X, _ = np.meshgrid(e_rho_201.first, e_rho_201.second, indexing="ij")
    low = X <= 0.8 + 1e-12
    assert np.nanmax(np.abs(e_psi_201.values - e_rho_201.values)[low]) <= 5e-3


@criterion(8, "hull oracle equivalence at 101x101")
def test_hull_oracle():
    start = time.perf_counter()
    diff = mixed_gme_surface(101, 101).values - hull_oracle(101, 101).values
    assert np.nanmax(np.abs(diff)) <= 5e-3
    assert time.perf_counter() - start < 300


@criterion(9, "final convexity")
def test_final_convexity(e_rho_201):
    rep = verify_convexity(e_rho_201, 100_000, 0)
    assert rep.n_segments_tested == 100_000
    assert rep.max_violation <= 5e-3


@criterion(10, "exchange symmetries")
def test_symmetries(e_rho_201):
    rng = np.random.default_rng(10)
    worst = 0.0
    for x, r in rng.uniform(0, 1, size=(2000, 2)):
        worst = max(worst, abs(e_psi_xr(x, r) - e_psi_xr(x, 1 - r)))
        y = (1 - x) * r
        worst = max(worst, abs(e_psi(x, y) - e_psi(x, 1 - x - y)))
    assert worst <= 1e-10
    p = rng.dirichlet(np.ones(3), 20_000)
    x, y = p[:, 0], p[:, 1]
    a = interpolate_xy(e_rho_201, x, y)
    b = interpolate_xy(e_rho_201, x, np.clip(1 - x - y, 0, None))
    assert np.max(np.abs(a - b)) <= 5e-3


@criterion(11, "ordering disagreement at resolution 21")
def test_ordering():
    rows = ordering_rows(21, 50)
    assert rows
    assert any({a, b} == {(1.0, 0.0), (0.0, 1.0)} for a, b, *_ in rows)


@criterion(12, "twirl invariance")
def test_twirl():
    rng = np.random.default_rng(12)
    phases = rng.uniform(0, 2 * np.pi, size=(20, 3))
    worst = 0.0
    for x, y in simplex_nodes(25):
        rho = family_density_matrix(FamilyPoint(x, y))
        worst = max(worst, np.abs(twirl(rho).matrix - rho.matrix).max())
        for ph in phases:
            proj = family_pure_state(FamilyPoint(x, y, tuple(ph))).projector()
            worst = max(worst, np.abs(twirl(proj).matrix - rho.matrix).max())
    assert worst <= 1e-12
