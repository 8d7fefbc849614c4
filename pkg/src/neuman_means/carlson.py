"""Carlson symmetric integrals R_F and R_C by the duplication method.

    R_F(x, y, z) = 1/2 * int_0^inf [(t + x)(t + y)(t + z)]^(-1/2) dt
    R_C(x, y)    = R_F(x, y, y)

Both iterate the duplication theorem until the arguments agree to a relative
spread of 1e-10, then finish with a truncated Taylor expansion about their
mean.
"""

from __future__ import annotations

import math

SPREAD_TOL = 1e-10
MAX_ITER = 64


class ConvergenceError(RuntimeError):
    """Duplication failed to contract within MAX_ITER steps."""


def _check_nonneg(name: str, x: float) -> float:
    x = float(x)
    if not math.isfinite(x) or x < 0.0:
        raise ValueError(f"{name} must be finite and >= 0, got {x!r}")
    return x


def rf(x: float, y: float, z: float) -> float:
    """Carlson's R_F(x, y, z) for x, y, z >= 0 with at most one zero."""
    args = sorted(_check_nonneg(n, a) for n, a in (("x", x), ("y", y), ("z", z)))
    if args[1] == 0.0:
        raise ValueError("R_F diverges when two or more arguments are zero")
    x, y, z = args

    for _ in range(MAX_ITER):
        mu = (x + y + z) / 3.0
        spread = max(abs(mu - x), abs(mu - y), abs(mu - z)) / mu
        if spread < SPREAD_TOL:
            break
        sx, sy, sz = math.sqrt(x), math.sqrt(y), math.sqrt(z)
        lam = sx * (sy + sz) + sy * sz
        x = 0.25 * (x + lam)
        y = 0.25 * (y + lam)
        z = 0.25 * (z + lam)
    else:
        raise ConvergenceError(f"R_F did not converge for {args!r}")

    dx = (mu - x) / mu
    dy = (mu - y) / mu
    dz = -(dx + dy)
    e2 = dx * dy - dz * dz
    e3 = dx * dy * dz
    series = (
        1.0
        - e2 / 10.0
        + e3 / 14.0
        + e2 * e2 / 24.0
        - 3.0 * e2 * e3 / 44.0
        - 5.0 * e2**3 / 208.0
        + 3.0 * e3 * e3 / 104.0
        + e2 * e2 * e3 / 16.0
    )
    return series / math.sqrt(mu)


def rc(x: float, y: float) -> float:
    """Carlson's R_C(x, y) = R_F(x, y, y) for x >= 0, y > 0."""
    x = _check_nonneg("x", x)
    y = float(y)
    if not math.isfinite(y) or y <= 0.0:
        raise ValueError(f"y must be finite and > 0, got {y!r}")
    x0, y0 = x, y

    for _ in range(MAX_ITER):
        mu = (x + 2.0 * y) / 3.0
        s = (y - mu) / mu
        if abs(s) < SPREAD_TOL:
            break
        lam = 2.0 * math.sqrt(x) * math.sqrt(y) + y
        x = 0.25 * (x + lam)
        y = 0.25 * (y + lam)
    else:
        raise ConvergenceError(f"R_C did not converge for {(x0, y0)!r}")

    series = 1.0 + s * s * (3.0 / 10.0 + s * (1.0 / 7.0 + s * (3.0 / 8.0 + s * 9.0 / 22.0)))
    return series / math.sqrt(mu)
