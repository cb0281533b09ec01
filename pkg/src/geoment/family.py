"""Closed-form entanglement eigenvalue of the GHZ / W / inverted-W superposition.

The closest product state of sqrt(x)|GHZ> + sqrt(y)|W> + sqrt(1-x-y)|W~> is
taken as (|0> + t|1>)^{(x)3} / (1 + t^2)^{3/2} with t >= 0; stationarity in t is
a cubic whose non-negative roots are the candidates.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cubic import evaluate, real_roots
from .states import FamilyPoint

_ZERO_CLAMP = 1e-12
# Mixture weights below this are zero: it is the rounding floor of 1 - x - y,
# and E_psi moves like sqrt(weight) off the edges.
_WEIGHT_FLOOR = 1e-15


class NoNonnegativeRootError(ArithmeticError):
    """The stationarity cubic has no root t >= 0 (a numerical failure)."""


@dataclass(frozen=True)
class CubicSolution:
    roots: tuple[float, ...]
    chosen_t: float
    lambda_at_chosen: float


def _snap(w: float) -> float:
    return 0.0 if w < _WEIGHT_FLOOR else w


def _weights(x: float, y: float) -> tuple[float, float, float]:
    p = FamilyPoint(x, y)
    return _amplitude_factors(p.x, p.y, p.z)


def _amplitude_factors(x: float, y: float, z: float) -> tuple[float, float, float]:
    """sqrt(x/2), sqrt(3y), sqrt(3z) from the three mixture weights."""
    return math.sqrt(_snap(x) / 2), math.sqrt(3 * _snap(y)), math.sqrt(3 * _snap(z))


def _coefficients(g: float, w: float, wt: float) -> tuple[float, float, float, float]:
    return (-wt, 3 * g - 2 * w, -3 * g + 2 * wt, w)


def _lambda(g: float, w: float, wt: float, t: float) -> float:
    return (g * (1 + t**3) + w * t + wt * t * t) / (1 + t * t) ** 1.5


def cubic_coefficients(x: float, y: float) -> tuple[float, float, float, float]:
    """(a3, a2, a1, a0) of the stationarity cubic in t."""
    return _coefficients(*_weights(x, y))


def lambda_at(x: float, y: float, t: float) -> float:
    """Overlap of the family state with the symmetric product state labelled by t."""
    return _lambda(*_weights(x, y), t)


def _solve(g: float, w: float, wt: float) -> CubicSolution:
    roots = []
    for t in real_roots(_coefficients(g, w, wt)):
        if abs(t) <= _ZERO_CLAMP:
            t = 0.0
        if t >= 0.0:
            roots.append(t)
    if not roots:
        raise NoNonnegativeRootError(f"no root t >= 0 for factors {(g, w, wt)}")
    lams = [_lambda(g, w, wt, t) for t in roots]
    best = max(range(len(roots)), key=lams.__getitem__)
    return CubicSolution(tuple(roots), roots[best], lams[best])


def cubic_roots_nonneg(x: float, y: float) -> CubicSolution:
    """Non-negative roots of the stationarity cubic and the Lambda-maximizing one."""
    return _solve(*_weights(x, y))


def cubic_residual(x: float, y: float, t: float) -> float:
    """Cubic value at t divided by the largest coefficient magnitude."""
    coeffs = cubic_coefficients(x, y)
    return evaluate(coeffs, t) / max(abs(c) for c in coeffs)


def lambda_family(x: float, y: float) -> float:
    return cubic_roots_nonneg(x, y).lambda_at_chosen


def e_psi(x: float, y: float) -> float:
    """1 - Lambda(x, y)^2, the pure-state entanglement of the family."""
    return 1.0 - lambda_family(x, y) ** 2


def e_psi_xr(x: float, r: float) -> float:
    """E_psi at y = (1 - x) r, with the inverted-W weight formed as (1 - x)(1 - r)."""
    FamilyPoint.from_xr(x, r)
    lam = _solve(*_amplitude_factors(x, (1.0 - x) * r, (1.0 - x) * (1.0 - r))).lambda_at_chosen
    return 1.0 - lam**2


def e_psi_grid(xs, ys) -> np.ndarray:
    """E_psi on the outer grid of ``xs`` and ``ys``; NaN where x + y > 1."""
    out = np.full((len(xs), len(ys)), np.nan)
    for i, x in enumerate(xs):
        for j, y in enumerate(ys):
            if x + y <= 1.0 + 1e-12:
                out[i, j] = e_psi(float(x), min(float(y), 1.0 - float(x)))
    return out
