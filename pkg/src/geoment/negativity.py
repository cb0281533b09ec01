"""Negativity of the family via single-party partial transposes."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hull import XY, SurfaceGrid
from .states import DensityMatrix, FamilyPoint, family_density_matrix

_ZERO_EIGENVALUE = 1e-12


@dataclass(frozen=True)
class PartialTransposeSpectrum:
    party: int
    eigenvalues: tuple[float, ...]


def partial_transpose(rho: DensityMatrix, party: int) -> np.ndarray:
    """Transpose the row and column indices of qubit ``party`` (1-based)."""
    n = rho.n_qubits
    if party not in range(1, n + 1):
        raise ValueError(f"party must be in 1..{n}, got {party}")
    t = rho.matrix.reshape((2,) * (2 * n))
    t = np.swapaxes(t, party - 1, n + party - 1)
    return t.reshape(2**n, 2**n)


def partial_transpose_spectrum(rho: DensityMatrix, party: int = 3) -> PartialTransposeSpectrum:
    evals = np.linalg.eigvalsh(partial_transpose(rho, party))
    return PartialTransposeSpectrum(party, tuple(float(e) for e in evals))


def negativity_of(rho: DensityMatrix, party: int = 3) -> float:
    """-2 times the sum of the negative eigenvalues of the partial transpose."""
    evals = np.array(partial_transpose_spectrum(rho, party).eigenvalues)
    neg = evals[evals < -_ZERO_EIGENVALUE]
    return float(-2.0 * neg.sum()) if neg.size else 0.0


def family_negativity(x: float, y: float, party: int = 3) -> float:
    return negativity_of(family_density_matrix(FamilyPoint(x, y)), party)


def negativity_surface(nx: int, ny: int) -> SurfaceGrid:
    if nx < 3 or ny < 3:
        raise ValueError("grid resolution must be at least 3")
    xs = np.linspace(0.0, 1.0, nx)
    ys = np.linspace(0.0, 1.0, ny)
    out = np.full((nx, ny), np.nan)
    for i, x in enumerate(xs):
        for j, y in enumerate(ys):
            if x + y <= 1.0 + 1e-12:
                out[i, j] = family_negativity(float(x), min(float(y), 1.0 - x))
    return SurfaceGrid(xs, ys, out, XY)


def ordering_search(
    gme_surface: SurfaceGrid,
    neg_surface: SurfaceGrid,
    n_pairs: int | None = None,
    seed: int = 0,
    margin: float = 1e-6,
) -> list[tuple]:
    """Pairs of family states that negativity and GME rank in opposite order.

    Each entry is ((x1, y1), (x2, y2), N1, N2, E1, E2), oriented so that
    N1 < N2 and E1 > E2, both by more than ``margin``. With ``n_pairs`` None
    every pair of simplex grid nodes is scanned; otherwise ``n_pairs`` node
    pairs are drawn at random from ``seed``.
    """
    if (
        gme_surface.shape != neg_surface.shape
        or not np.array_equal(gme_surface.first, neg_surface.first)
        or not np.array_equal(gme_surface.second, neg_surface.second)
    ):
        raise ValueError("surfaces are not on the same grid")
    ii, jj = np.nonzero(np.isfinite(gme_surface.values) & np.isfinite(neg_surface.values))
    e = gme_surface.values[ii, jj]
    n = neg_surface.values[ii, jj]
    xs = gme_surface.first[ii]
    ys = gme_surface.second[jj]

    if n_pairs is None:
        # One anchor node at a time keeps memory linear in the node count.
        chunks = ((np.full(ii.size - k - 1, k), np.arange(k + 1, ii.size)) for k in range(ii.size))
    else:
        rng = np.random.default_rng(seed)
        chunks = [(rng.integers(0, ii.size, size=n_pairs), rng.integers(0, ii.size, size=n_pairs))]

    found = []
    for a, b in chunks:
        dn = n[b] - n[a]
        de = e[b] - e[a]
        hit = ((dn > margin) & (de < -margin)) | ((dn < -margin) & (de > margin))
        a, b, dn = a[hit], b[hit], dn[hit]
        # Orient so the first state has the smaller negativity.
        lo = np.where(dn > 0, a, b)
        hi = np.where(dn > 0, b, a)
        found.extend(
            ((float(xs[p]), float(ys[p])), (float(xs[q]), float(ys[q])),
             float(n[p]), float(n[q]), float(e[p]), float(e[q]))
            for p, q in zip(lo, hi)
        )
    return found
