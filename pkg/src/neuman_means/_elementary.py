"""Cancellation-free building blocks shared by the mean and lemma modules."""

from __future__ import annotations

import math
from typing import Sequence

_TAYLOR_TINY = 1e-4
_ACOSH_SERIES_BELOW = 1e-8


def acosh1p(delta: float) -> float:
    """Return arccosh(1 + delta) for delta >= 0 without forming 1 + delta.

    Uses the logarithmic form log(x + sqrt(x^2 - 1)) written through log1p,
    and the two-term expansion sqrt(2 delta) (1 - delta/12) when delta < 1e-8.
    """
    if delta < 0.0:
        raise ValueError(f"acosh1p needs delta >= 0, got {delta!r}")
    if delta < _ACOSH_SERIES_BELOW:
        return math.sqrt(2.0 * delta) * (1.0 - delta / 12.0)
    return math.log1p(delta + math.sqrt(delta * (2.0 + delta)))


def sinh_minus_x(x: float) -> float:
    """sinh(x) - x, accurate to a few ulps for every finite x."""
    ax = abs(x)
    if ax >= 1.0:
        return math.sinh(x) - x
    x2 = x * x
    term = x * x2 / 6.0
    total = term
    k = 1
    while abs(term) > 1e-18 * abs(total):
        term *= x2 / ((2 * k + 2) * (2 * k + 3))
        total += term
        k += 1
    return total


def x_minus_sin(x: float) -> float:
    """x - sin(x), accurate to a few ulps for every finite x."""
    ax = abs(x)
    if ax >= 1.0:
        return x - math.sin(x)
    x2 = x * x
    term = x * x2 / 6.0
    total = term
    k = 1
    while abs(term) > 1e-18 * abs(total):
        term *= -x2 / ((2 * k + 2) * (2 * k + 3))
        total += term
        k += 1
    return total


def x_over_sinh(x: float) -> float:
    """x / sinh(x), equal to 1 at 0 and safe from overflow."""
    ax = abs(x)
    if ax < _TAYLOR_TINY:
        x2 = x * x
        return 1.0 - x2 / 6.0 + 7.0 * x2 * x2 / 360.0
    if ax > 20.0:
        e = math.exp(-ax)
        return 2.0 * ax * e / (1.0 - e * e)
    return x / math.sinh(x)


def x_over_sin(x: float) -> float:
    """x / sin(x) for |x| < pi, equal to 1 at 0."""
    if abs(x) < _TAYLOR_TINY:
        x2 = x * x
        return 1.0 + x2 / 6.0 + 7.0 * x2 * x2 / 360.0
    return x / math.sin(x)


def horner(coeffs: Sequence[float], x: float) -> float:
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def extrapolate_to_zero(hs: Sequence[float], fs: Sequence[float]) -> tuple[float, float]:
    """Neville extrapolation of f(h) to h = 0.

    Returns the value from all nodes and the absolute difference to the
    extrapolant that drops the node farthest from zero, as an error estimate.
    """
    if len(hs) != len(fs) or len(hs) < 2:
        raise ValueError("need at least two matching nodes")

    def neville(h: Sequence[float], f: Sequence[float]) -> float:
        p = list(f)
        n = len(h)
        for level in range(1, n):
            for i in range(n - level):
                j = i + level
                p[i] = (h[i] * p[i + 1] - h[j] * p[i]) / (h[i] - h[j])
        return p[0]

    full = neville(hs, fs)
    # drop the node farthest from zero
    far = max(range(len(hs)), key=lambda i: abs(hs[i]))
    rest_h = [h for i, h in enumerate(hs) if i != far]
    rest_f = [f for i, f in enumerate(fs) if i != far]
    reduced = neville(rest_h, rest_f) if len(rest_h) > 1 else rest_f[0]
    return full, abs(full - reduced)


def extrapolation_weight_sum(hs: Sequence[float]) -> float:
    """Sum of |Lagrange weights| for evaluating the interpolant at 0."""
    total = 0.0
    for i, hi in enumerate(hs):
        w = 1.0
        for j, hj in enumerate(hs):
            if j != i:
                w *= hj / (hj - hi)
        total += abs(w)
    return total
