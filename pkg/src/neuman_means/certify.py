"""Numerical certification of the sharp H/A/C bounds for N_AH, N_HA, N_CA, N_AC.

Each theorem case is a ratio R(v) of mean differences that must stay inside
(alpha, beta) for all v in (0, 1), with alpha and beta attained only in the
limits v -> 0 and v -> 1. The certifier sweeps R over a grid, checks strict
monotonicity, extrapolates both endpoint limits, and compares them with the
closed-form constants.
"""

from __future__ import annotations

import enum
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable

import mpmath

from ._elementary import extrapolate_to_zero, extrapolation_weight_sum
from .lemmas import LemmaFn, eval_lemma, lemma_offset
from .means import MeanKind, PositivePair, classical_mean, params_from_v
from .neuman import NeumanCase, composed_neuman, n_mean

_SQRT3 = math.sqrt(3.0)
_LOG_2P_SQRT3 = math.log(2.0 + _SQRT3)

# Distances from each endpoint used for limit extrapolation.
ENDPOINT_NODES = (1e-3, 1e-4, 1e-5, 1e-6)

# Worst absolute error of one binary64 ratio evaluation, with headroom.
# Measured maximum against 60-digit evaluation: ~5e-16.
EVAL_ERROR_BOUND = 1e-14

MIN_MONOTONE_POINTS = 3


@dataclass(frozen=True)
class _CaseSpec:
    neuman_case: NeumanCase
    reciprocal: bool
    fn: LemmaFn
    param: str
    scale: float
    shift: float
    alpha: Callable[[], float]
    beta: Callable[[], float]
    increasing: bool
    # (lower mean, upper mean) of the convex combination
    means: tuple[MeanKind, MeanKind]


_HA_MEANS = (MeanKind.H, MeanKind.A)
_AC_MEANS = (MeanKind.A, MeanKind.C)

_SPECS: dict[str, _CaseSpec] = {
    "T12_AH": _CaseSpec(NeumanCase.AH, False, LemmaFn.PHI1, "p", 0.5, 0.0,
                        lambda: 1.0 / 3.0, lambda: 0.5, True, _HA_MEANS),
    "T12_HA": _CaseSpec(NeumanCase.HA, False, LemmaFn.PHI2, "q", 0.25, 0.0,
                        lambda: 2.0 / 3.0, lambda: math.pi / 4.0, True, _HA_MEANS),
    "T12_CA": _CaseSpec(NeumanCase.CA, False, LemmaFn.PHI1, "r", 0.5, 0.0,
                        lambda: 1.0 / 3.0, lambda: _SQRT3 * _LOG_2P_SQRT3 / 6.0, True, _AC_MEANS),
    "T12_AC": _CaseSpec(NeumanCase.AC, False, LemmaFn.PHI2, "s", 0.25, 0.0,
                        lambda: 2.0 / 3.0, lambda: (4.0 * _SQRT3 * math.pi - 9.0) / 18.0, True, _AC_MEANS),
    "T13_AH": _CaseSpec(NeumanCase.AH, True, LemmaFn.PHI3, "p", 1.0, 0.0,
                        lambda: 0.0, lambda: 2.0 / 3.0, False, _HA_MEANS),
    "T13_HA": _CaseSpec(NeumanCase.HA, True, LemmaFn.PHI4, "q", 1.0, 1.0,
                        lambda: 0.0, lambda: 1.0 / 3.0, False, _HA_MEANS),
    "T13_CA": _CaseSpec(NeumanCase.CA, True, LemmaFn.PHI3, "r", 1.0, 0.0,
                        lambda: (2.0 * _SQRT3 - _LOG_2P_SQRT3) / (2.0 * _SQRT3 + _LOG_2P_SQRT3),
                        lambda: 2.0 / 3.0, False, _AC_MEANS),
    "T13_AC": _CaseSpec(NeumanCase.AC, True, LemmaFn.PHI4, "s", 1.0, 1.0,
                        lambda: (9.0 * _SQRT3 - 4.0 * math.pi) / (3.0 * _SQRT3 + 4.0 * math.pi),
                        lambda: 1.0 / 3.0, False, _AC_MEANS),
}


class TheoremCase(str, enum.Enum):
    T12_AH = "T12_AH"
    T12_HA = "T12_HA"
    T12_CA = "T12_CA"
    T12_AC = "T12_AC"
    T13_AH = "T13_AH"
    T13_HA = "T13_HA"
    T13_CA = "T13_CA"
    T13_AC = "T13_AC"

    @property
    def _spec(self) -> _CaseSpec:
        return _SPECS[self.value]

    @property
    def alpha_analytic(self) -> float:
        return self._spec.alpha()

    @property
    def beta_analytic(self) -> float:
        return self._spec.beta()

    @property
    def ratio_monotonicity(self) -> str:
        return "increasing" if self._spec.increasing else "decreasing"

    @property
    def neuman_case(self) -> NeumanCase:
        return self._spec.neuman_case


@dataclass(frozen=True)
class SweepSpec:
    v_min: float = 1e-6
    v_max: float = 1.0 - 1e-6
    points: int = 10_000
    spacing: str = "uniform"
    tol: float = 1e-6

    def __post_init__(self) -> None:
        if not (0.0 < self.v_min < self.v_max < 1.0):
            raise ValueError(f"need 0 < v_min < v_max < 1, got {self.v_min!r}, {self.v_max!r}")
        if isinstance(self.points, bool) or not isinstance(self.points, int) or self.points < 2:
            raise ValueError(f"points must be an integer >= 2, got {self.points!r}")
        if self.spacing not in ("uniform", "endpoint-refined"):
            raise ValueError(f"spacing must be 'uniform' or 'endpoint-refined', got {self.spacing!r}")
        if not (self.tol > 0.0 and math.isfinite(self.tol)):
            raise ValueError(f"tol must be positive, got {self.tol!r}")

    def grid(self) -> list[float]:
        n = self.points
        if self.spacing == "uniform":
            width = self.v_max - self.v_min
            vs = [self.v_min + width * i / (n - 1) for i in range(n)]
        else:
            # uniform in logit(v): geometric clustering toward both 0 and 1
            lo = math.log(self.v_min / (1.0 - self.v_min))
            hi = math.log(self.v_max / (1.0 - self.v_max))
            vs = [1.0 / (1.0 + math.exp(-(lo + (hi - lo) * i / (n - 1)))) for i in range(n)]
        vs[0], vs[-1] = self.v_min, self.v_max
        # very close to v = 1 neighbouring nodes can round to the same float
        return sorted(set(vs))


@dataclass
class BoundCertificate:
    case: TheoremCase
    sweep: SweepSpec
    observed_inf: float
    observed_sup: float
    analytic_inf: float
    analytic_sup: float
    limit_v0: float
    limit_v1: float
    limit_error: float
    max_abs_gap: float
    monotone: bool
    verdict: str
    witnesses: list[tuple[str, float, float]] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_dict(self) -> dict:
        return {
            "case": self.case.value,
            "constants": {"alpha": self.analytic_inf, "beta": self.analytic_sup},
            "observed": {"inf": self.observed_inf, "sup": self.observed_sup},
            "limits": {"v0": self.limit_v0, "v1": self.limit_v1, "error_bound": self.limit_error},
            "max_abs_gap": self.max_abs_gap,
            "monotonicity": self.case.ratio_monotonicity,
            "monotone": self.monotone,
            "tol": self.sweep.tol,
            "sweep": asdict(self.sweep),
            "verdict": self.verdict,
            "witnesses": [{"role": role, "v": v, "ratio": val} for role, v, val in self.witnesses],
            "warnings": list(self.warnings),
        }


# -- ratio functions --------------------------------------------------------


def _check_v(v: float) -> float:
    v = float(v)
    if not (0.0 < v < 1.0):
        raise ValueError(f"v must lie in (0, 1), got {v!r}")
    return v


def ratio(case: TheoremCase | str, v: float) -> float:
    """The normalized ratio for ``case`` at v, through the lemma functions.

    T12 cases are (N - lower mean) / (upper mean - lower mean); T13 cases
    the same ratio built from reciprocals.
    """
    spec = TheoremCase(case)._spec
    prm = params_from_v(_check_v(v))
    return spec.shift + spec.scale * eval_lemma(spec.fn, getattr(prm, spec.param))


def ratio_offset(case: TheoremCase | str, v: float) -> float:
    """ratio(case, v) minus its v -> 0 limit, free of cancellation."""
    spec = TheoremCase(case)._spec
    prm = params_from_v(_check_v(v))
    return spec.scale * lemma_offset(spec.fn, getattr(prm, spec.param), "lower")


def ratio_from_means(case: TheoremCase | str, v: float, dps: int | None = None) -> float:
    """The same ratio computed straight from the mean definitions.

    Works on the pair (1 + v, 1 - v) with SB from its arccos/arccosh form and
    N = (x + y^2/SB)/2. Differences of means near v = 0 lose about
    2*log10(1/v) digits, so this runs in extended precision; it is the
    independent check on :func:`ratio`, not a fast path.
    """
    case = TheoremCase(case)
    spec = case._spec
    v = _check_v(v)
    if dps is None:
        dps = 30 + 2 * max(0, math.ceil(-math.log10(v)))
    with mpmath.workdps(dps):
        mv = mpmath.mpf(v)
        a, b = 1 + mv, 1 - mv
        means = {
            MeanKind.H: 2 * a * b / (a + b),
            MeanKind.A: (a + b) / 2,
            MeanKind.C: (a * a + b * b) / (a + b),
        }

        def sb_mp(x, y):
            if x < y:
                return mpmath.sqrt(y * y - x * x) / mpmath.acos(x / y)
            return mpmath.sqrt(x * x - y * y) / mpmath.acosh(x / y)

        k = means[spec.neuman_case.first]
        l = means[spec.neuman_case.second]
        nval = (k + l * l / sb_mp(k, l)) / 2
        lo, hi = means[spec.means[0]], means[spec.means[1]]
        if spec.reciprocal:
            out = (1 / nval - 1 / hi) / (1 / lo - 1 / hi)
        else:
            out = (nval - lo) / (hi - lo)
        return float(out)


# -- sweeps -----------------------------------------------------------------


def _evaluate_chunk(case_value: str, vs: list[float]) -> list[tuple[float, float]]:
    return [(ratio(case_value, v), ratio_offset(case_value, v)) for v in vs]


def _split(seq: list[float], parts: int) -> list[list[float]]:
    parts = max(1, min(parts, len(seq)))
    size, extra = divmod(len(seq), parts)
    out, start = [], 0
    for i in range(parts):
        stop = start + size + (1 if i < extra else 0)
        out.append(seq[start:stop])
        start = stop
    return out


def evaluate_grid(
    case: TheoremCase | str, vs: list[float], workers: int = 1, chunks: int | None = None
) -> list[tuple[float, float]]:
    """(ratio, offset) at every grid point, in grid order.

    With workers > 1 the grid is cut into ``chunks`` contiguous pieces that
    run in separate processes; results are reassembled by index, so the
    output does not depend on the partitioning or on scheduling.
    """
    case = TheoremCase(case)
    pieces = _split(list(vs), chunks or workers)
    if workers <= 1:
        results = [_evaluate_chunk(case.value, piece) for piece in pieces]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_evaluate_chunk, case.value, piece) for piece in pieces]
            results = [f.result() for f in futures]
    return [item for chunk in results for item in chunk]


def endpoint_limits(case: TheoremCase | str) -> tuple[float, float, float]:
    """Extrapolated limits of the ratio at v -> 0 and v -> 1, plus an error bound.

    The bound adds the Richardson difference estimate to the propagated
    per-evaluation error, so it never claims more accuracy than binary64
    delivers.
    """
    case = TheoremCase(case)
    hs = list(ENDPOINT_NODES)
    lo_val, lo_err = extrapolate_to_zero(hs, [ratio(case, h) for h in hs])
    hi_val, hi_err = extrapolate_to_zero(hs, [ratio(case, 1.0 - h) for h in hs])
    rounding = extrapolation_weight_sum(hs) * EVAL_ERROR_BOUND
    return lo_val, hi_val, max(lo_err, hi_err) + rounding


def _first_monotone_violation(
    offsets: list[float], ratios: list[float], increasing: bool
) -> int | None:
    # offsets resolve steps near v = 0, raw ratios near v = 1; a step passes
    # if either moves strictly the right way and neither moves the wrong way
    sign = 1.0 if increasing else -1.0
    for i in range(len(offsets) - 1):
        d_off = sign * (offsets[i + 1] - offsets[i])
        d_val = sign * (ratios[i + 1] - ratios[i])
        if d_off < 0 or d_val < 0 or (d_off == 0 and d_val == 0):
            return i
    return None


def certify_case(
    case: TheoremCase | str,
    sweep: SweepSpec | None = None,
    workers: int = 1,
    chunks: int | None = None,
) -> BoundCertificate:
    """Sweep one theorem case and compare its extremes with the sharp constants."""
    case = TheoremCase(case)
    sweep = sweep or SweepSpec()
    spec = case._spec
    tol = sweep.tol
    alpha, beta = spec.alpha(), spec.beta()
    vs = sweep.grid()
    values = evaluate_grid(case, vs, workers=workers, chunks=chunks)
    ratios = [r for r, _ in values]
    offsets = [o for _, o in values]

    warnings: list[str] = []
    witnesses: list[tuple[str, float, float]] = []

    i_min = min(range(len(ratios)), key=lambda i: (ratios[i], i))
    i_max = min(range(len(ratios)), key=lambda i: (-ratios[i], i))
    witnesses.append(("inf", vs[i_min], ratios[i_min]))
    witnesses.append(("sup", vs[i_max], ratios[i_max]))

    if len(vs) < sweep.points:
        warnings.append(f"only {len(vs)} of {sweep.points} grid points are distinct floats")
    monotone = True
    if len(vs) < MIN_MONOTONE_POINTS:
        monotone = False
        warnings.append(
            f"monotonicity unverifiable with {len(vs)} points (need >= {MIN_MONOTONE_POINTS})"
        )
    else:
        bad = _first_monotone_violation(offsets, ratios, spec.increasing)
        if bad is not None:
            monotone = False
            witnesses.append(("monotonicity", vs[bad], ratios[bad]))
            witnesses.append(("monotonicity", vs[bad + 1], ratios[bad + 1]))
            sign = 1.0 if spec.increasing else -1.0
            if sign * (offsets[bad + 1] - offsets[bad]) < 0 or sign * (ratios[bad + 1] - ratios[bad]) < 0:
                warnings.append(f"ratio not strictly {case.ratio_monotonicity} near v={vs[bad]!r}")
            else:
                warnings.append(
                    f"strict monotonicity unresolved in binary64 near v={vs[bad]!r} (equal values)"
                )

    lim0, lim1, lim_err = endpoint_limits(case)
    lim_inf, lim_sup = (lim0, lim1) if spec.increasing else (lim1, lim0)
    gap = max(abs(lim_inf - alpha), abs(lim_sup - beta))

    inside = alpha - tol <= ratios[i_min] and ratios[i_max] <= beta + tol
    if not inside:
        warnings.append("grid values leave [alpha - tol, beta + tol]")
    limits_ok = gap + lim_err <= tol
    if not limits_ok:
        warnings.append(
            f"endpoint limits differ from constants by {gap:.3g} (+/- {lim_err:.3g}), tol {tol:.3g}"
        )

    verdict = "pass" if (monotone and inside and limits_ok) else "fail"
    return BoundCertificate(
        case=case,
        sweep=sweep,
        observed_inf=ratios[i_min],
        observed_sup=ratios[i_max],
        analytic_inf=alpha,
        analytic_sup=beta,
        limit_v0=lim0,
        limit_v1=lim1,
        limit_error=lim_err,
        max_abs_gap=gap,
        monotone=monotone,
        verdict=verdict,
        witnesses=witnesses,
        warnings=warnings,
    )


# -- sharpness --------------------------------------------------------------


@dataclass(frozen=True)
class Witness:
    bound: str
    constant: float
    v: float
    ratio: float


def inequality_holds(case: TheoremCase | str, bound: str, constant: float, v: float) -> bool:
    """Evaluate one side of the double inequality on the pair (1 + v, 1 - v).

    This works on mean values directly, without the ratio identity.
    """
    case = TheoremCase(case)
    spec = case._spec
    v = _check_v(v)
    pair = PositivePair(1.0 + v, 1.0 - v)
    lo = classical_mean(spec.means[0], pair)
    hi = classical_mean(spec.means[1], pair)
    nval = composed_neuman(spec.neuman_case, pair)
    c = constant
    if spec.reciprocal:
        side = c / lo + (1.0 - c) / hi
        x = 1.0 / nval
    else:
        side = c * hi + (1.0 - c) * lo
        x = nval
    if bound == "lower":
        return side < x
    if bound == "upper":
        return x < side
    raise ValueError(f"bound must be 'lower' or 'upper', got {bound!r}")


def sharpness_probe(
    case: TheoremCase | str,
    epsilon: float,
    sweep: SweepSpec | None = None,
    max_witnesses: int | None = 3,
) -> list[Witness]:
    """Tighten alpha up and beta down by epsilon and look for violations.

    A grid point is a witness only if the ratio route and the direct
    mean-value inequality both report the failure. Up to ``max_witnesses``
    per bound are kept, largest violation first; the returned list is ordered
    by bound then v.
    """
    case = TheoremCase(case)
    if not (epsilon > 0.0):
        raise ValueError(f"epsilon must be positive, got {epsilon!r}")
    sweep = sweep or SweepSpec()
    vs = sweep.grid()
    ratios = [r for r, _ in evaluate_grid(case, vs)]
    out: list[Witness] = []
    for bound, constant in (
        ("lower", case.alpha_analytic + epsilon),
        ("upper", case.beta_analytic - epsilon),
    ):
        found = []
        for i, (v, r) in enumerate(zip(vs, ratios)):
            margin = (constant - r) if bound == "lower" else (r - constant)
            if margin >= 0.0 and not inequality_holds(case, bound, constant, v):
                found.append((-margin, i))
        found.sort()
        if max_witnesses is not None:
            found = found[:max_witnesses]
        for _, i in sorted(found, key=lambda item: item[1]):
            out.append(Witness(bound, constant, vs[i], ratios[i]))
    return out


def probe_complete(witnesses: Iterable[Witness]) -> bool:
    bounds = {w.bound for w in witnesses}
    return bounds == {"lower", "upper"}


# -- chains -----------------------------------------------------------------


def chain_values(pair: PositivePair) -> tuple[list[float], list[float]]:
    """Values of the H/A/C chain and the G/A/Q chain, in their claimed order."""
    m = {k: classical_mean(k, pair) for k in MeanKind}
    n = {c: n_mean(c, pair) for c in NeumanCase}
    hac = [m[MeanKind.H], n[NeumanCase.AH], n[NeumanCase.HA], m[MeanKind.A],
           n[NeumanCase.CA], n[NeumanCase.AC], m[MeanKind.C]]
    gaq = [m[MeanKind.G], n[NeumanCase.AG], n[NeumanCase.GA], m[MeanKind.A],
           n[NeumanCase.QA], n[NeumanCase.AQ], m[MeanKind.Q]]
    return hac, gaq


def chain_check(pair: PositivePair) -> bool:
    """True iff both seven-term chains hold strictly at ``pair``."""
    if pair.is_equal:
        raise ValueError("chain_check needs a != b")
    return all(
        all(x < y for x, y in zip(chain, chain[1:])) for chain in chain_values(pair)
    )


def certify_all(
    cases: Iterable[TheoremCase | str] | None = None,
    sweep: SweepSpec | None = None,
    epsilon: float = 1e-3,
    workers: int = 1,
) -> list[tuple[BoundCertificate, list[Witness]]]:
    sweep = sweep or SweepSpec()
    chosen = [TheoremCase(c) for c in (cases if cases is not None else TheoremCase)]
    out = []
    for case in chosen:
        cert = certify_case(case, sweep, workers=workers)
        probe = sharpness_probe(case, epsilon, sweep)
        out.append((cert, probe))
    return out

