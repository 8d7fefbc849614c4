"""Auxiliary functions phi1..phi4 and f used in the bound proofs.

    phi1(t) = (sinh 2t - 4 sinh t + 2t) / (sinh 2t - 2 sinh t)        t in (0, inf)
    phi2(t) = (2t - sin 2t) / (sin t (1 - cos t))                       t in (0, pi/2)
    phi3(t) = (sinh t cosh t - t) / ((sinh t cosh t + t)(cosh t - 1))  t in (0, inf)
    phi4(t) = (sin t cos t - t) / ((t + sin t cos t)(1 - cos t))        t in (0, pi/2)
    f(t)    = 9 cos t + t / sin t                                       t in (0, pi/2)

Every difference that cancels near t = 0 is rewritten through sinh(x) - x or
x - sin(x). Each phi is also available as a ratio of even power series in t,
which is how values near t = 0 and offsets from the t -> 0 limit are computed.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from ._elementary import extrapolate_to_zero, horner, sinh_minus_x, x_minus_sin

SERIES_BELOW = 1e-3
OFFSET_SERIES_BELOW = 0.5
LARGE_T = 20.0
_N_TERMS = 24


class LemmaFn(str, enum.Enum):
    PHI1 = "PHI1"
    PHI2 = "PHI2"
    PHI3 = "PHI3"
    PHI4 = "PHI4"
    F_AUX = "F_AUX"

    @property
    def domain(self) -> tuple[float, float]:
        if self in (LemmaFn.PHI1, LemmaFn.PHI3):
            return (0.0, math.inf)
        return (0.0, math.pi / 2)

    @property
    def increasing(self) -> bool:
        return self in (LemmaFn.PHI1, LemmaFn.PHI2)


class Limit(NamedTuple):
    value: float
    derived: bool


# (lower, upper) one-sided limits; F_AUX has no stated range
_LIMITS = {
    LemmaFn.PHI1: (2.0 / 3.0, 1.0),
    LemmaFn.PHI2: (8.0 / 3.0, math.pi),
    LemmaFn.PHI3: (2.0 / 3.0, 0.0),
    LemmaFn.PHI4: (-2.0 / 3.0, -1.0),
}


# -- power series ---------------------------------------------------------
#
# phi(t) = sum(num[n] t^(2n)) / sum(den[n] t^(2n)), exact rational coefficients.


def _phi1_coeffs(n_terms: int) -> tuple[list[Fraction], list[Fraction]]:
    num = [Fraction(2 ** (2 * n + 3) - 4, math.factorial(2 * n + 3)) for n in range(n_terms)]
    den = [Fraction(2 ** (2 * n + 3) - 2, math.factorial(2 * n + 3)) for n in range(n_terms)]
    return num, den


def _phi3_coeffs(n_terms: int) -> tuple[list[Fraction], list[Fraction]]:
    num = [Fraction(2 ** (2 * n + 4), math.factorial(2 * n + 3)) for n in range(n_terms)]
    den = [
        Fraction(3 ** (2 * n + 3) - 2 ** (2 * n + 4) + 8 * n + 13, math.factorial(2 * n + 3))
        for n in range(n_terms)
    ]
    return num, den


def _phi2_coeffs(n_terms: int) -> tuple[list[Fraction], list[Fraction]]:
    num = [Fraction((-1) ** n * 2 ** (2 * n + 3), math.factorial(2 * n + 3)) for n in range(n_terms)]
    den = [
        Fraction((-1) ** n * (2 ** (2 * n + 2) - 1), math.factorial(2 * n + 3))
        for n in range(n_terms)
    ]
    return num, den


def _phi4_coeffs(n_terms: int) -> tuple[list[Fraction], list[Fraction]]:
    # numerator (sin 2t)/2 - t, over t^3
    num = [Fraction((-1) ** (n + 1) * 2 ** (2 * n + 2), math.factorial(2 * n + 3)) for n in range(n_terms)]
    # (t + sin t cos t) / t and (1 - cos t) / t^2, multiplied
    left = [Fraction(2)] + [
        Fraction((-1) ** k * 2 ** (2 * k), math.factorial(2 * k + 1)) for k in range(1, n_terms)
    ]
    right = [Fraction((-1) ** k, math.factorial(2 * k + 2)) for k in range(n_terms)]
    den = [sum(left[j] * right[n - j] for j in range(n + 1)) for n in range(n_terms)]
    return num, den


@dataclass(frozen=True)
class _Series:
    num: tuple[float, ...]
    den: tuple[float, ...]
    # numerator of phi - phi(0+), shifted down by one power of t^2
    offset_num: tuple[float, ...]

    @classmethod
    def build(cls, num: list[Fraction], den: list[Fraction]) -> "_Series":
        limit = num[0] / den[0]
        shifted = [num[n] - limit * den[n] for n in range(1, len(num))]
        return cls(
            num=tuple(float(c) for c in num),
            den=tuple(float(c) for c in den),
            offset_num=tuple(float(c) for c in shifted),
        )

    def value(self, t: float) -> float:
        t2 = t * t
        return horner(self.num, t2) / horner(self.den, t2)

    def offset(self, t: float) -> float:
        t2 = t * t
        return t2 * horner(self.offset_num, t2) / horner(self.den, t2)


_SERIES = {
    LemmaFn.PHI1: _Series.build(*_phi1_coeffs(_N_TERMS)),
    LemmaFn.PHI2: _Series.build(*_phi2_coeffs(_N_TERMS)),
    LemmaFn.PHI3: _Series.build(*_phi3_coeffs(_N_TERMS)),
    LemmaFn.PHI4: _Series.build(*_phi4_coeffs(_N_TERMS)),
}


def series_value(fn: LemmaFn | str, t: float) -> float:
    """Evaluate phi by its power-series ratio (accurate for t below ~1)."""
    return _SERIES[LemmaFn(fn)].value(t)


# -- closed forms ---------------------------------------------------------


def _exp_forms(t: float) -> tuple[float, float]:
    """(1/cosh t, 2t/sinh 2t) without overflow."""
    e = math.exp(-t)
    sech = 2.0 * e / (1.0 + e * e)
    e2 = e * e
    ratio = 4.0 * t * e2 / (1.0 - e2 * e2)
    return sech, ratio


def phi1_direct(t: float) -> float:
    if t > LARGE_T:
        sech, x = _exp_forms(t)
        return (1.0 - 2.0 * sech + x) / (1.0 - sech)
    sh_half = math.sinh(0.5 * t)
    den = 4.0 * math.sinh(t) * sh_half * sh_half
    return (sinh_minus_x(2.0 * t) - 4.0 * sinh_minus_x(t)) / den


def phi2_direct(t: float) -> float:
    s_half = math.sin(0.5 * t)
    return x_minus_sin(2.0 * t) / (2.0 * math.sin(t) * s_half * s_half)


def _inv_cosh_minus_one(t: float) -> float:
    if t > LARGE_T:
        e = math.exp(-t)
        return 2.0 * e / ((1.0 - e) * (1.0 - e))
    sh_half = math.sinh(0.5 * t)
    return 1.0 / (2.0 * sh_half * sh_half)


def phi3_direct(t: float) -> float:
    if t > LARGE_T:
        _, x = _exp_forms(t)
        return (1.0 - x) / (1.0 + x) * _inv_cosh_minus_one(t)
    sc = 0.5 * math.sinh(2.0 * t)
    return 0.5 * sinh_minus_x(2.0 * t) / (sc + t) * _inv_cosh_minus_one(t)


def phi4_direct(t: float) -> float:
    s_half = math.sin(0.5 * t)
    sc = 0.5 * math.sin(2.0 * t)
    return -0.5 * x_minus_sin(2.0 * t) / ((t + sc) * 2.0 * s_half * s_half)


def f_aux(t: float) -> float:
    return 9.0 * math.cos(t) + t / math.sin(t)


def _check_domain(fn: LemmaFn, t: float) -> float:
    t = float(t)
    lo, hi = fn.domain
    if not (lo < t < hi):
        raise ValueError(f"{fn.value} is defined on ({lo}, {hi}); got t={t!r}")
    return t


def eval_lemma(fn: LemmaFn | str, t: float) -> float:
    """Evaluate one of the auxiliary functions at t inside its open domain."""
    fn = LemmaFn(fn)
    t = _check_domain(fn, t)
    if fn is LemmaFn.PHI1:
        return _SERIES[fn].value(t) if t < SERIES_BELOW else phi1_direct(t)
    if fn is LemmaFn.PHI3:
        return _SERIES[fn].value(t) if t < SERIES_BELOW else phi3_direct(t)
    if fn is LemmaFn.PHI2:
        return phi2_direct(t)
    if fn is LemmaFn.PHI4:
        return phi4_direct(t)
    return f_aux(t)


def lemma_offset(fn: LemmaFn | str, t: float, endpoint: str) -> float:
    """phi(t) minus its limit at ``endpoint`` ("lower" or "upper").

    Computed without subtracting nearly equal numbers, so the sign and the
    ordering of offsets survive even where phi(t) itself rounds to its limit.
    """
    fn = LemmaFn(fn)
    t = _check_domain(fn, t)
    if endpoint == "lower":
        if fn is LemmaFn.F_AUX:
            s_half = math.sin(0.5 * t)
            return -18.0 * s_half * s_half + x_minus_sin(t) / math.sin(t)
        if t < OFFSET_SERIES_BELOW:
            return _SERIES[fn].offset(t)
        return eval_lemma(fn, t) - _LIMITS[fn][0]
    if endpoint == "upper":
        if fn is LemmaFn.PHI1:
            # 1 - phi1 = 2 (sinh t - t) / (sinh 2t - 2 sinh t)
            if t > LARGE_T:
                return -(1.0 - 2.0 * t * math.exp(-t) / (1.0 - math.exp(-2.0 * t))) * _inv_cosh_minus_one(t)
            sh_half = math.sinh(0.5 * t)
            return -2.0 * sinh_minus_x(t) / (4.0 * math.sinh(t) * sh_half * sh_half)
        if fn is LemmaFn.F_AUX:
            return f_aux(t) - math.pi / 2
        return eval_lemma(fn, t) - _LIMITS[fn][1]
    raise ValueError(f"endpoint must be 'lower' or 'upper', got {endpoint!r}")


def limit_at(fn: LemmaFn | str, endpoint: str) -> Limit:
    """One-sided limit of fn at the lower or upper end of its domain.

    PHI1..PHI4 return the analytic values. F_AUX has no stated range, so its
    limits are extrapolated numerically and flagged as derived.
    """
    fn = LemmaFn(fn)
    if endpoint not in ("lower", "upper"):
        raise ValueError(f"endpoint must be 'lower' or 'upper', got {endpoint!r}")
    if fn is not LemmaFn.F_AUX:
        lower, upper = _LIMITS[fn]
        return Limit(lower if endpoint == "lower" else upper, derived=False)
    hs = [1e-2, 1e-3, 1e-4, 1e-5]
    if endpoint == "lower":
        fs = [f_aux(h) for h in hs]
    else:
        fs = [f_aux(math.pi / 2 - h) for h in hs]
    value, _ = extrapolate_to_zero(hs, fs)
    return Limit(value, derived=True)
