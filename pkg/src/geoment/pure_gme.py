"""Entanglement eigenvalue of n-qubit pure states by alternating fixed-point sweeps.

Each sweep visits the sites in order and replaces site i's vector by the
normalized contraction of the amplitude tensor against the conjugates of all
other site vectors. The overlap modulus never decreases along a sweep, and a
fixed point satisfies the stationarity conditions of the closest product state.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .states import ProductState, PureState

_LETTERS = "abcdefghijklmnopqrstuvwxy"
_ZERO_CONTRACTION = 1e-14
# Computational-basis starts are added only up to this many qubits.
_MAX_BASIS_START_QUBITS = 6
# Restarts whose overlaps differ by less than this are tied; the earliest wins.
_TIE = 1e-12


class DegenerateContractionError(ArithmeticError):
    """A site contraction vanished; the start was orthogonal to the state."""


@dataclass(frozen=True)
class SolverConfig:
    max_iterations: int = 2000
    tolerance: float = 1e-12
    restarts: int = 24
    seed: int = 0
    # Also required at convergence: every site contraction parallel to its
    # vector up to this norm. Overlap changes alone stall at ~sqrt(tolerance).
    residual_tolerance: float = 1e-10

    def __post_init__(self):
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be positive")
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        if not self.residual_tolerance > 0:
            raise ValueError("residual_tolerance must be positive")
        if self.restarts < 1:
            raise ValueError("restarts must be at least 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")


@dataclass(frozen=True)
class GmeResult:
    lambda_max: float
    e_sin2: float
    closest_product: ProductState = field(repr=False)
    iterations_used: int
    converged: bool


@lru_cache(maxsize=None)
def _contraction_expr(n: int, site: int) -> str:
    legs = _LETTERS[:n]
    others = ",".join("z" + legs[j] for j in range(n) if j != site)
    return f"{legs},{others}->z{legs[site]}" if others else f"{legs}->z{legs}"


def _contract(tensor: np.ndarray, sites: np.ndarray, i: int) -> np.ndarray:
    """sum over p_j (j != i) of chi_p * prod conj(c_j[p_j]), for a batch of starts.

    ``sites`` has shape (batch, n, 2); the result has shape (batch, 2).
    """
    n = tensor.ndim
    if n == 1:
        return np.broadcast_to(tensor, (sites.shape[0], 2)).copy()
    conj = sites.conj()
    ops = [conj[:, j] for j in range(n) if j != i]
    return np.einsum(_contraction_expr(n, i), tensor, *ops)


def _overlap_modulus(tensor: np.ndarray, sites: np.ndarray) -> np.ndarray:
    return np.abs(np.sum(sites[:, 0].conj() * _contract(tensor, sites, 0), axis=1))


def _fix_gauge(v: np.ndarray) -> np.ndarray:
    """Rotate each row so its largest-magnitude component is real and non-negative."""
    idx = np.argmax(np.abs(v), axis=-1)
    pivot = np.take_along_axis(v, idx[:, None], axis=-1)
    return v * (pivot.conj() / np.abs(pivot))


def _sweep(tensor: np.ndarray, sites: np.ndarray):
    """One in-order pass over the sites.

    Returns (new_sites, overlap modulus, ok mask, residual), where residual is
    the largest part of a contraction orthogonal to the vector it replaces.
    """
    sites = sites.copy()
    ok = np.ones(sites.shape[0], dtype=bool)
    norm = np.zeros(sites.shape[0])
    residual = np.zeros(sites.shape[0])
    for i in range(tensor.ndim):
        v = _contract(tensor, sites, i)
        old = sites[:, i]
        along = np.sum(old.conj() * v, axis=1)
        residual = np.maximum(residual, np.linalg.norm(v - along[:, None] * old, axis=1))
        norm = np.linalg.norm(v, axis=1)
        bad = norm < _ZERO_CONTRACTION
        ok &= ~bad
        v[bad] = sites[bad, i]
        norm_safe = np.where(bad, 1.0, norm)
        sites[:, i] = _fix_gauge(v / norm_safe[:, None])
    return sites, norm, ok, residual


def _sites_array(phi: ProductState) -> np.ndarray:
    return np.array(phi.site_coefficients)[None]


def _to_product(sites: np.ndarray) -> ProductState:
    return ProductState.from_unnormalized(list(sites))


def stationarity_sweep(psi: PureState, phi: ProductState) -> tuple[ProductState, float]:
    """Update every site of ``phi`` once; return the new product state and |<phi|psi>|."""
    if phi.n_qubits != psi.n_qubits:
        raise ValueError("qubit counts differ")
    new, norm, ok, _ = _sweep(psi.tensor(), _sites_array(phi))
    if not ok[0]:
        raise DegenerateContractionError("site contraction is the zero vector")
    return _to_product(new[0]), float(norm[0])


def sweep_history(
    psi: PureState, phi: ProductState, max_iterations: int = 2000, tolerance: float = 1e-12
) -> tuple[ProductState, list[float]]:
    """Iterate sweeps from one start, recording the overlap after every sweep."""
    history = [abs(psi.overlap(phi))]
    for _ in range(max_iterations):
        phi, lam = stationarity_sweep(psi, phi)
        history.append(lam)
        if abs(history[-1] - history[-2]) <= tolerance:
            break
    return phi, history


def stationarity_residual(psi: PureState, phi: ProductState) -> float:
    """Largest per-site norm of (contraction_i - <phi|psi> c_i)."""
    sites = _sites_array(phi)
    ov = psi.overlap(phi)
    t = psi.tensor()
    return max(
        float(np.linalg.norm(_contract(t, sites, i)[0] - ov * sites[0, i]))
        for i in range(psi.n_qubits)
    )


def _initial_sites(n: int, config: SolverConfig) -> np.ndarray:
    starts = []
    if n <= _MAX_BASIS_START_QUBITS:
        eye = np.eye(2, dtype=complex)
        for k in range(2**n):
            bits = [(k >> (n - 1 - j)) & 1 for j in range(n)]
            starts.append(eye[bits])
    # Real tensors keep a real start real, so the best real product is found.
    starts.append(np.full((n, 2), 1 / np.sqrt(2), dtype=complex))
    rng = np.random.default_rng(config.seed)
    g = rng.standard_normal((config.restarts, n, 2)) + 1j * rng.standard_normal(
        (config.restarts, n, 2)
    )
    g /= np.linalg.norm(g, axis=2, keepdims=True)
    return np.concatenate([np.array(starts).reshape(-1, n, 2), g])


def solve_gme(psi: PureState, config: SolverConfig | None = None) -> GmeResult:
    """Largest overlap of ``psi`` with any product state, over all configured starts.

    Starts are every computational-basis product state (up to six qubits),
    then |+>^n, then ``config.restarts`` Haar-random product states drawn from
    ``config.seed``. Starts whose contraction vanishes are abandoned. Among
    starts whose final overlaps agree to 1e-12 the earliest is returned.
    """
    config = config or SolverConfig()
    tensor = psi.tensor()
    sites = _initial_sites(psi.n_qubits, config)
    n_starts = sites.shape[0]

    lam = np.zeros(n_starts)
    alive = np.ones(n_starts, dtype=bool)
    converged = np.zeros(n_starts, dtype=bool)
    iterations = np.zeros(n_starts, dtype=int)
    prev = _overlap_modulus(tensor, sites)

    for _ in range(config.max_iterations):
        active = np.flatnonzero(alive & ~converged)
        if active.size == 0:
            break
        new, norm, ok, residual = _sweep(tensor, sites[active])
        sites[active] = new
        lam[active] = norm
        iterations[active] += 1
        alive[active[~ok]] = False
        done = (
            ok
            & (np.abs(norm - prev[active]) <= config.tolerance)
            & (residual <= config.residual_tolerance)
        )
        converged[active[done]] = True
        prev[active] = norm

    if not alive.any():
        raise DegenerateContractionError("every start was orthogonal to the state")
    candidates = np.where(alive, lam, -np.inf)
    best = int(np.argmax(candidates >= candidates.max() - _TIE))
    lam_max = float(min(lam[best], 1.0))
    return GmeResult(
        lambda_max=lam_max,
        e_sin2=1.0 - lam_max**2,
        closest_product=_to_product(sites[best]),
        iterations_used=int(iterations[best]),
        converged=bool(converged[best]),
    )
