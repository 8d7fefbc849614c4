"""Schwab-Borchardt mean SB, Neuman mean N, and the composed means S_XY, N_XY."""

from __future__ import annotations

import enum
import math

from ._elementary import acosh1p, x_over_sin, x_over_sinh
from .carlson import rc
from .means import MeanKind, PositivePair, classical_mean, one_minus_v2, params_from_pair, v_of


class NeumanCase(str, enum.Enum):
    """Composition K, L of two classical means, named KL."""

    AH = "AH"
    HA = "HA"
    CA = "CA"
    AC = "AC"
    AG = "AG"
    GA = "GA"
    AQ = "AQ"
    QA = "QA"

    @property
    def first(self) -> MeanKind:
        return MeanKind(self.value[0])

    @property
    def second(self) -> MeanKind:
        return MeanKind(self.value[1])

    @property
    def has_closed_form(self) -> bool:
        return self in _CLOSED_FORM_CASES


_CLOSED_FORM_CASES = frozenset({NeumanCase.AH, NeumanCase.HA, NeumanCase.CA, NeumanCase.AC})


def _check_positive(x: float, y: float) -> tuple[float, float]:
    x, y = float(x), float(y)
    for name, val in (("x", x), ("y", y)):
        if not math.isfinite(val) or val <= 0.0:
            raise ValueError(f"{name} must be finite and > 0, got {val!r}")
    return x, y


def sb(x: float, y: float) -> float:
    """Schwab-Borchardt mean SB(x, y).

    For x < y this is sqrt(y^2 - x^2) / arccos(x/y), for x > y
    sqrt(x^2 - y^2) / arccosh(x/y), and x when x == y.
    """
    x, y = _check_positive(x, y)
    if x == y:
        return x
    if x < y:
        d = math.sqrt((y - x) * (y + x))
        # arccos(x/y) == atan2(d, x), which stays accurate as x -> y
        return d / math.atan2(d, x)
    d = math.sqrt((x - y) * (x + y))
    return d / acosh1p((x - y) / y)


def sb_via_rc(x: float, y: float) -> float:
    """SB(x, y) as the reciprocal of R_C(x^2, y^2)."""
    x, y = _check_positive(x, y)
    return 1.0 / rc(x * x, y * y)


def neuman(x: float, y: float) -> float:
    """Neuman mean N(x, y) = (x + y^2 / SB(x, y)) / 2."""
    x, y = _check_positive(x, y)
    if x == y:
        return x
    return 0.5 * (x + y * (y / sb(x, y)))


def _composed_args(case: NeumanCase, pair: PositivePair) -> tuple[float, float]:
    return classical_mean(case.first, pair), classical_mean(case.second, pair)


def composed_sb(case: NeumanCase | str, pair: PositivePair) -> float:
    """SB[K(a, b), L(a, b)] evaluated by plain composition."""
    k, l = _composed_args(NeumanCase(case), pair)
    return sb(k, l)


def composed_neuman(case: NeumanCase | str, pair: PositivePair) -> float:
    """N[K(a, b), L(a, b)] evaluated by plain composition."""
    k, l = _composed_args(NeumanCase(case), pair)
    return neuman(k, l)


def s_mean(case: NeumanCase | str, pair: PositivePair) -> float:
    """S_AH, S_HA, S_CA or S_AC from their hyperbolic/trigonometric forms."""
    case = NeumanCase(case)
    if not case.has_closed_form:
        raise ValueError(f"s_mean has no explicit form for case {case.value}")
    a_mean = classical_mean(MeanKind.A, pair)
    v = v_of(pair)
    if v == 0.0:
        return a_mean
    prm = params_from_pair(pair)
    if case is NeumanCase.AH:
        # tanh(p)/p
        return a_mean * math.tanh(prm.p) / prm.p
    if case is NeumanCase.HA:
        return a_mean / x_over_sin(prm.q)
    if case is NeumanCase.CA:
        return a_mean / x_over_sinh(prm.r)
    return a_mean * math.tan(prm.s) / prm.s


def n_mean(case: NeumanCase | str, pair: PositivePair) -> float:
    """Neuman mean N_KL(a, b) for any of the eight composed cases.

    AH, HA, CA and AC use their explicit forms in p, q, r, s; the other four
    go through the generic composition N[K, L].
    """
    case = NeumanCase(case)
    if not case.has_closed_form:
        return composed_neuman(case, pair)
    a_mean = classical_mean(MeanKind.A, pair)
    v = v_of(pair)
    if v == 0.0:
        return a_mean
    prm = params_from_pair(pair)
    if case is NeumanCase.AH:
        return 0.5 * a_mean * (1.0 + x_over_sinh(2.0 * prm.p))
    if case is NeumanCase.HA:
        cos_q = one_minus_v2(pair)
        return 0.5 * a_mean * (cos_q + x_over_sin(prm.q))
    if case is NeumanCase.CA:
        cosh_r = 1.0 + v * v
        return 0.5 * a_mean * (cosh_r + x_over_sinh(prm.r))
    return 0.5 * a_mean * (1.0 + x_over_sin(2.0 * prm.s))
