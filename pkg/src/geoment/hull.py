"""Mixed-state entanglement surface as the convex envelope of the pure-state one.

The mixture weights x, (1-x) r, (1-x)(1-r) are linear in r at fixed x and in x
at fixed r, so the surface must be convex along both families of lines.
The construction samples E_psi on an (x, r) grid, replaces every fixed-x row
by its lower convex envelope in r, then every fixed-r column by its envelope
in x, and finally resamples onto the (x, y) simplex.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from .family import e_psi, e_psi_xr

XY = "xy-simplex"
XR = "xr-square"


@dataclass(frozen=True)
class SurfaceGrid:
    """Values sampled on the outer grid ``first x second``.

    For ``XY`` grids the axes are x and y, and cells with x + y > 1 hold NaN.
    For ``XR`` grids the axes are x and r, with y = (1 - x) r.
    """

    first: np.ndarray
    second: np.ndarray
    values: np.ndarray
    parametrization: str

    def __post_init__(self):
        if self.parametrization not in (XY, XR):
            raise ValueError(f"unknown parametrization {self.parametrization!r}")
        first = np.array(self.first, dtype=float)
        second = np.array(self.second, dtype=float)
        values = np.array(self.values, dtype=float)
        if values.shape != (first.size, second.size):
            raise ValueError("values shape does not match the axes")
        for a in (first, second, values):
            a.setflags(write=False)
        object.__setattr__(self, "first", first)
        object.__setattr__(self, "second", second)
        object.__setattr__(self, "values", values)

    @property
    def shape(self) -> tuple[int, int]:
        return self.values.shape

    def replace(self, values: np.ndarray) -> "SurfaceGrid":
        return SurfaceGrid(self.first, self.second, values, self.parametrization)

    def at(self, a: float, b: float) -> float:
        """Value at an exact grid node."""
        i = int(np.argmin(np.abs(self.first - a)))
        j = int(np.argmin(np.abs(self.second - b)))
        if abs(self.first[i] - a) > 1e-9 or abs(self.second[j] - b) > 1e-9:
            raise KeyError(f"({a}, {b}) is not a grid node")
        return float(self.values[i, j])


@dataclass(frozen=True)
class HullReport:
    max_violation: float
    n_segments_tested: int
    violating_pairs: list = field(repr=False)


def _check_resolution(*ns: int) -> None:
    for n in ns:
        if n < 3:
            raise ValueError(f"grid resolution must be at least 3, got {n}")


def lower_envelope_1d(t: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Lower convex envelope of the points (t_k, v_k), evaluated back at t.

    ``t`` must be strictly increasing. Monotone chain over the sorted points.
    """
    t = np.asarray(t, dtype=float)
    v = np.asarray(v, dtype=float)
    hull: list[int] = []
    for k in range(t.size):
        while len(hull) >= 2:
            i, j = hull[-2], hull[-1]
            # Drop j when it lies on or above the chord from i to k.
            if (v[j] - v[i]) * (t[k] - t[i]) >= (v[k] - v[i]) * (t[j] - t[i]):
                hull.pop()
            else:
                break
        hull.append(k)
    env = np.interp(t, t[hull], v[hull])
    env[hull] = v[hull]
    return env


@lru_cache(maxsize=8)
def _e_psi_xr_values(nx: int, nr: int) -> np.ndarray:
    xs = np.linspace(0.0, 1.0, nx)
    rs = np.linspace(0.0, 1.0, nr)
    vals = np.empty((nx, nr))
    for i, x in enumerate(xs):
        for j, r in enumerate(rs[: nr // 2 + 1]):
            vals[i, j] = vals[i, nr - 1 - j] = e_psi_xr(float(x), float(r))
    vals.setflags(write=False)
    return vals


def sample_e_psi_xr(nx: int, nr: int) -> SurfaceGrid:
    """E_psi(x, (1-x) r) on a uniform (x, r) grid over the unit square.

    The r <-> 1 - r symmetry is exact in the model (swapping W and W~ is a
    bit flip on every qubit), so only half of each row is evaluated.
    """
    _check_resolution(nx, nr)
    return SurfaceGrid(
        np.linspace(0.0, 1.0, nx), np.linspace(0.0, 1.0, nr), _e_psi_xr_values(nx, nr), XR
    )


def convexify_in_r(grid: SurfaceGrid) -> SurfaceGrid:
    if grid.parametrization != XR:
        raise ValueError("convexify_in_r needs an (x, r) grid")
    out = np.array([lower_envelope_1d(grid.second, row) for row in grid.values])
    return grid.replace(out)


def convexify_in_x(grid: SurfaceGrid) -> SurfaceGrid:
    if grid.parametrization != XR:
        raise ValueError("convexify_in_x needs an (x, r) grid")
    out = np.array([lower_envelope_1d(grid.first, col) for col in grid.values.T]).T
    return grid.replace(out)


@lru_cache(maxsize=8)
def _convexified_xr(nx: int, nr: int) -> SurfaceGrid:
    return convexify_in_x(convexify_in_r(sample_e_psi_xr(nx, nr)))


def convexified_xr(nx: int, nr: int) -> SurfaceGrid:
    """Both surgery stages applied to the (x, r) sample; cached per resolution."""
    _check_resolution(nx, nr)
    return _convexified_xr(nx, nr)


def _interp_r(env: SurfaceGrid, i: int, r: float) -> float:
    return float(np.interp(r, env.second, env.values[i]))


def mixed_gme_surface(nx: int, ny: int, nr: int | None = None) -> SurfaceGrid:
    """E_rho on the (x, y) simplex grid; NaN outside the simplex.

    The (x, r) surgery grid shares the x nodes and uses ``nr`` (default ``ny``)
    r nodes. Off-node r values are linearly interpolated; interpolating upper
    bounds of a convex function stays an upper bound, and so does E_psi
    itself, so the smaller of the two is kept.
    """
    _check_resolution(nx, ny)
    env = convexified_xr(nx, nr or ny)
    xs = np.linspace(0.0, 1.0, nx)
    ys = np.linspace(0.0, 1.0, ny)
    out = np.full((nx, ny), np.nan)
    for i, x in enumerate(xs):
        for j, y in enumerate(ys):
            if x + y > 1.0 + 1e-12:
                continue
            if x >= 1.0:
                out[i, j] = env.values[i, 0]
                continue
            y = min(y, 1.0 - x)
            r = min(y / (1.0 - x), 1.0)
            out[i, j] = min(_interp_r(env, i, r), e_psi(float(x), float(y)))
    return SurfaceGrid(xs, ys, out, XY)


def mixed_gme(x: float, y: float, resolution: int = 201) -> float:
    """E_rho at an arbitrary simplex point from the cached (x, r) envelope.

    Bilinear in (x, r), capped by E_psi(x, y) as in ``mixed_gme_surface``.
    """
    e_pure = e_psi(x, y)
    if x >= 1.0:
        return e_pure
    env = convexified_xr(resolution, resolution)
    r = min(y / (1.0 - x), 1.0)
    xs, rs, v = env.first, env.second, env.values
    i = min(int(np.searchsorted(xs, x, side="right")) - 1, xs.size - 2)
    u = (x - xs[i]) / (xs[i + 1] - xs[i])
    lo = np.interp(r, rs, v[i])
    hi = np.interp(r, rs, v[i + 1])
    return float(min((1 - u) * lo + u * hi, e_pure))


def interpolate_xy(surface: SurfaceGrid, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Piecewise-linear interpolation on a square (x, y) simplex grid.

    Each cell is split along its anti-diagonal, so the triangles tile the
    simplex exactly and never touch the NaN cells beyond x + y = 1.
    """
    if surface.parametrization != XY:
        raise ValueError("interpolation needs an (x, y) grid")
    n = surface.first.size
    if surface.second.size != n:
        raise ValueError("simplex interpolation needs a square grid")
    h = 1.0 / (n - 1)
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    i = np.clip(np.floor(x / h).astype(int), 0, n - 2)
    j = np.clip(np.floor(y / h).astype(int), 0, n - 2)
    # A point on the hypotenuse can floor into the cell beyond it; it is then
    # the shared node of the cell below.
    j = np.where(i + j > n - 2, n - 2 - i, j)
    u = x / h - i
    v = y / h - j
    f = surface.values
    f00 = f[i, j]
    f10 = f[i + 1, j]
    f01 = f[i, j + 1]
    lower = f00 + u * (f10 - f00) + v * (f01 - f00)
    f11 = f[i + 1, j + 1]
    upper = f11 + (1 - u) * (f01 - f11) + (1 - v) * (f10 - f11)
    return np.where(u + v <= 1.0, lower, upper)


def sample_simplex(rng: np.random.Generator, n: int) -> np.ndarray:
    """``n`` points uniform on the simplex x, y >= 0, x + y <= 1."""
    w = rng.dirichlet(np.ones(3), size=n)
    return w[:, :2]


def verify_convexity(
    surface: SurfaceGrid, n_pairs: int, seed: int, report_above: float = 0.0
) -> HullReport:
    """Worst midpoint convexity defect over random pairs of simplex points.

    The defect is E(midpoint) - (E(P1) + E(P2)) / 2, so positive values are
    violations. Pairs whose defect exceeds ``report_above`` are listed, worst
    first.
    """
    rng = np.random.default_rng(seed)
    p1 = sample_simplex(rng, n_pairs)
    p2 = sample_simplex(rng, n_pairs)
    mid = 0.5 * (p1 + p2)
    e1 = interpolate_xy(surface, p1[:, 0], p1[:, 1])
    e2 = interpolate_xy(surface, p2[:, 0], p2[:, 1])
    em = interpolate_xy(surface, mid[:, 0], mid[:, 1])
    defect = em - 0.5 * (e1 + e2)
    order = np.argsort(-defect)
    pairs = [
        ((float(p1[k, 0]), float(p1[k, 1])), (float(p2[k, 0]), float(p2[k, 1])), float(defect[k]))
        for k in order
        if defect[k] > report_above
    ]
    return HullReport(float(np.max(defect)), int(n_pairs), pairs)


def hull_oracle(nx: int, ny: int) -> SurfaceGrid:
    """Lower convex hull of the point cloud {(x, y, E_psi(x, y))} on the simplex grid.

    Independent of the surgery: Qhull builds the 3D hull, and the envelope at
    every grid node is the maximum over the downward-facing facet planes.
    """
    _check_resolution(nx, ny)
    xs = np.linspace(0.0, 1.0, nx)
    ys = np.linspace(0.0, 1.0, ny)
    pts = []
    for i, x in enumerate(xs):
        for j, y in enumerate(ys):
            if x + y <= 1.0 + 1e-12:
                pts.append((x, min(y, 1.0 - x), e_psi(float(x), min(float(y), 1.0 - x))))
    pts = np.array(pts)
    try:
        hull = ConvexHull(pts)
    except QhullError as exc:
        raise ValueError("degenerate point cloud for the hull oracle") from exc
    eq = hull.equations
    lower = eq[eq[:, 2] < -1e-12]
    # Facet plane a x + b y + c z + d = 0  ->  z = -(a x + b y + d) / c.
    coef = -lower[:, [0, 1, 3]] / lower[:, 2:3]
    out = np.full((nx, ny), np.nan)
    for i, x in enumerate(xs):
        mask = xs[i] + ys <= 1.0 + 1e-12
        y = np.minimum(ys[mask], 1.0 - x)
        planes = coef[:, 0][:, None] * x + coef[:, 1][:, None] * y[None] + coef[:, 2][:, None]
        out[i, mask] = planes.max(axis=0)
    return SurfaceGrid(xs, ys, out, XY)
