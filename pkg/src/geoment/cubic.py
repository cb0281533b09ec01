"""Real roots of polynomials of degree <= 3 in closed form, Newton-polished."""
from __future__ import annotations

import math

# Relative size below which a leading coefficient is treated as zero.
_DEGREE_DROP = 1e-14


class DegeneratePolynomialError(ValueError):
    """All coefficients vanish, so every t is a root."""


def _polish(coeffs: tuple[float, ...], t: float, steps: int = 2) -> float:
    """Newton steps on the polynomial with coefficients highest-degree first."""
    for _ in range(steps):
        p = dp = 0.0
        for c in coeffs:
            dp = dp * t + p
            p = p * t + c
        if dp == 0.0:
            break
        step = p / dp
        if not math.isfinite(step):
            break
        t_new = t - step
        # Keep the step only if it does not worsen the residual.
        if abs(evaluate(coeffs, t_new)) <= abs(p):
            t = t_new
        else:
            break
    return t


def evaluate(coeffs: tuple[float, ...], t: float) -> float:
    acc = 0.0
    for c in coeffs:
        acc = acc * t + c
    return acc


def _quadratic(a: float, b: float, c: float) -> list[float]:
    disc = b * b - 4 * a * c
    if disc < 0:
        # Double roots can come out slightly negative.
        if disc > -1e-14 * max(b * b, abs(4 * a * c)):
            disc = 0.0
        else:
            return []
    sq = math.sqrt(disc)
    q = -0.5 * (b + math.copysign(sq, b))
    roots = [q / a]
    if q != 0.0:
        roots.append(c / q)
    else:
        roots.append(-b / (2 * a))
    return roots


def _cbrt(v: float) -> float:
    return math.copysign(abs(v) ** (1 / 3), v)


def _depressed_cubic(p: float, q: float) -> list[float]:
    """Real roots of s^3 + p s + q = 0."""
    if p == 0.0:
        return [-_cbrt(q)]
    disc = (q / 2) ** 2 + (p / 3) ** 3
    # p > 0 means one real root even when (p/3)^3 underflows.
    if p > 0 or disc > 0:
        u = -q / 2 + math.copysign(math.sqrt(max(disc, 0.0)), -q)
        if u == 0.0:
            return [0.0]
        cu = _cbrt(u)
        return [cu - p / (3 * cu)]
    # Three real roots (possibly repeated): trigonometric form.
    m = 2 * math.sqrt(-p / 3)
    if p * m == 0.0:
        return [-_cbrt(q)]
    arg = 3 * q / (p * m)
    theta = math.acos(max(-1.0, min(1.0, arg))) / 3
    return [m * math.cos(theta - 2 * math.pi * k / 3) for k in range(3)]


def real_roots(coeffs: tuple[float, ...]) -> list[float]:
    """Sorted distinct real roots of a polynomial of degree <= 3.

    ``coeffs`` lists coefficients highest degree first. Leading coefficients
    that are negligible relative to the largest one are dropped, lowering the
    degree.
    """
    coeffs = tuple(float(c) for c in coeffs)
    scale = max((abs(c) for c in coeffs), default=0.0)
    if scale == 0.0:
        raise DegeneratePolynomialError("all coefficients vanish")
    while coeffs and abs(coeffs[0]) <= _DEGREE_DROP * scale:
        coeffs = coeffs[1:]
    degree = len(coeffs) - 1
    if degree == 0:
        return []
    if degree == 1:
        roots = [-coeffs[1] / coeffs[0]]
    elif degree == 2:
        roots = _quadratic(*coeffs)
    else:
        a, b, c, d = coeffs
        b, c, d = b / a, c / a, d / a
        p = c - b * b / 3
        q = 2 * b**3 / 27 - b * c / 3 + d
        roots = [s - b / 3 for s in _depressed_cubic(p, q)]
    roots = sorted(_polish(coeffs, t) for t in roots)
    distinct: list[float] = []
    for t in roots:
        if not distinct or abs(t - distinct[-1]) > 1e-12 * max(1.0, abs(t)):
            distinct.append(t)
    return distinct
