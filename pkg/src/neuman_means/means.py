"""Classical bivariate means and the v/p/q/r/s parameterization."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from ._elementary import acosh1p

R_MAX = math.log(2.0 + math.sqrt(3.0))


@dataclass(frozen=True)
class PositivePair:
    """Two strictly positive finite reals, in any order."""

    a: float
    b: float

    def __post_init__(self) -> None:
        for name in ("a", "b"):
            x = getattr(self, name)
            if not isinstance(x, (int, float)) or isinstance(x, bool):
                raise TypeError(f"{name} must be a real number, got {type(x).__name__}")
            if not math.isfinite(x):
                raise ValueError(f"{name} must be finite, got {x!r}")
            if x <= 0:
                raise ValueError(f"{name} must be positive, got {x!r}")
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "b", float(self.b))

    @property
    def is_equal(self) -> bool:
        return self.a == self.b

    def swapped(self) -> "PositivePair":
        return PositivePair(self.b, self.a)


class MeanKind(str, enum.Enum):
    H = "H"
    G = "G"
    A = "A"
    Q = "Q"
    C = "C"


def harmonic(a: float, b: float) -> float:
    return 2.0 * a * b / (a + b)


def geometric(a: float, b: float) -> float:
    # sqrt(a)*sqrt(b) cannot overflow or underflow the way a*b can
    return math.sqrt(a) * math.sqrt(b)


def arithmetic(a: float, b: float) -> float:
    return 0.5 * a + 0.5 * b


def quadratic(a: float, b: float) -> float:
    return math.hypot(a, b) / math.sqrt(2.0)


def contraharmonic(a: float, b: float) -> float:
    s = a + b
    return (a / s) * a + (b / s) * b


_MEAN_FUNCS = {
    MeanKind.H: harmonic,
    MeanKind.G: geometric,
    MeanKind.A: arithmetic,
    MeanKind.Q: quadratic,
    MeanKind.C: contraharmonic,
}


def classical_mean(kind: MeanKind | str, pair: PositivePair) -> float:
    """Evaluate one of H, G, A, Q, C on ``pair``.

    The result is symmetric in the pair exactly: arguments are put in a
    canonical order before evaluation.
    """
    kind = MeanKind(kind)
    lo, hi = sorted((pair.a, pair.b))
    if lo == hi:
        return lo
    value = _MEAN_FUNCS[kind](lo, hi)
    # rounding may push a mean a hair outside [lo, hi]
    return min(max(value, lo), hi)


def v_of(pair: PositivePair) -> float:
    """|a - b| / (a + b), in [0, 1)."""
    return abs(pair.a - pair.b) / (pair.a + pair.b)


@dataclass(frozen=True)
class Parameterization:
    """Parameters tied to v by 1/cosh p = cos q = 1 - v^2 and cosh r = sec s = 1 + v^2."""

    v: float
    p: float
    q: float
    r: float
    s: float

    def residuals(self) -> dict[str, float]:
        """Relative residuals of the four defining relations."""
        v = self.v
        one_minus = (1.0 - v) * (1.0 + v)
        one_plus = 1.0 + v * v
        return {
            "p": abs(1.0 / math.cosh(self.p) - one_minus) / one_minus,
            "q": abs(math.cos(self.q) - one_minus) / one_minus,
            "r": abs(math.cosh(self.r) - one_plus) / one_plus,
            "s": abs(1.0 / math.cos(self.s) - one_plus) / one_plus,
        }

    def check(self, rtol: float = 1e-12) -> None:
        """Raise AssertionError if any defining relation or range fails."""
        bounds = {
            "v": (self.v, 1.0),
            "p": (self.p, math.inf),
            "q": (self.q, math.pi / 2),
            "r": (self.r, R_MAX),
            "s": (self.s, math.pi / 3),
        }
        for name, (x, upper) in bounds.items():
            if not (0.0 < x < upper):
                raise AssertionError(f"{name}={x!r} outside (0, {upper})")
        for name, res in self.residuals().items():
            if not res <= rtol:
                raise AssertionError(f"relation for {name} off by {res:.3g} (rtol {rtol:.3g})")


def params_from_v(v: float, one_minus: float | None = None) -> Parameterization:
    """Solve for p, q, r, s given v in (0, 1).

    All four are computed from v directly instead of through 1 - v^2 and
    1 + v^2, so they keep full relative accuracy as v -> 0. ``one_minus``
    may supply 1 - v^2 when it is known more accurately than v itself.
    """
    if not (0.0 < v < 1.0):
        raise ValueError(f"v must lie in (0, 1), got {v!r}")
    v2 = v * v
    if one_minus is None:
        one_minus = (1.0 - v) * (1.0 + v)
    p = acosh1p(v2 / one_minus)
    q = 2.0 * math.asin(v / math.sqrt(2.0))
    r = acosh1p(v2)
    s = math.atan(v * math.sqrt(2.0 + v2))
    return Parameterization(v=v, p=p, q=q, r=r, s=s)


def one_minus_v2(pair: PositivePair) -> float:
    """1 - v^2 = 4ab / (a + b)^2, free of the cancellation in 1 - v."""
    s = pair.a + pair.b
    return (2.0 * pair.a / s) * (2.0 * pair.b / s)


def params_from_pair(pair: PositivePair) -> Parameterization:
    """Parameters for an unequal pair, using the accurate 1 - v^2."""
    return params_from_v(v_of(pair), one_minus_v2(pair))
