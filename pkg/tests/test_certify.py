import json
import math

import mpmath
import pytest

from neuman_means import PositivePair, SweepSpec, TheoremCase, certify_case, chain_check, ratio, ratio_from_means
from neuman_means.certify import (
    endpoint_limits,
    evaluate_grid,
    inequality_holds,
    probe_complete,
    ratio_offset,
    sharpness_probe,
)
from neuman_means.lemmas import eval_lemma
from neuman_means.means import params_from_v
from oracles import n_mean_mp, means_mp, rel

L = math.log(2 + math.sqrt(3))


def constants_mp():
    with mpmath.workdps(40):
        s3, lg, pi = mpmath.sqrt(3), mpmath.log(2 + mpmath.sqrt(3)), mpmath.pi
        return {
            "T12_AH": (mpmath.mpf(1) / 3, mpmath.mpf(1) / 2),
            "T12_HA": (mpmath.mpf(2) / 3, pi / 4),
            "T12_CA": (mpmath.mpf(1) / 3, s3 * lg / 6),
            "T12_AC": (mpmath.mpf(2) / 3, (4 * s3 * pi - 9) / 18),
            "T13_AH": (mpmath.mpf(0), mpmath.mpf(2) / 3),
            "T13_HA": (mpmath.mpf(0), mpmath.mpf(1) / 3),
            "T13_CA": ((2 * s3 - lg) / (2 * s3 + lg), mpmath.mpf(2) / 3),
            "T13_AC": ((9 * s3 - 4 * pi) / (3 * s3 + 4 * pi), mpmath.mpf(1) / 3),
        }


@pytest.mark.parametrize("case", list(TheoremCase))
def test_constant_table(case):
    alpha, beta = constants_mp()[case.value]
    # closed forms evaluated in binary64, a few ulp at most
    assert abs(case.alpha_analytic - float(alpha)) <= 4 * math.ulp(1.0)
    assert abs(case.beta_analytic - float(beta)) <= 4 * math.ulp(1.0)


def test_constant_decimals():
    assert f"{TheoremCase.T12_HA.beta_analytic:.4f}" == "0.7854"
    assert str(TheoremCase.T12_CA.beta_analytic).startswith("0.3801")
    assert f"{TheoremCase.T12_AC.beta_analytic:.5f}" == "0.70920"
    assert not str(TheoremCase.T12_AC.beta_analytic).startswith("0.7901")
    assert str(TheoremCase.T13_CA.alpha_analytic).startswith("0.4490")
    assert str(TheoremCase.T13_AC.alpha_analytic).startswith("0.1701")


def test_monotonicity_labels():
    for case in TheoremCase:
        want = "increasing" if case.value.startswith("T12") else "decreasing"
        assert case.ratio_monotonicity == want


@pytest.mark.parametrize("case", list(TheoremCase))
def test_ratio_matches_mean_values_on_default_grid(case):
    worst = max(abs(ratio(case, v) - ratio_from_means(case, v)) for v in SweepSpec().grid())
    assert worst <= 1e-9


@pytest.mark.parametrize("case", list(TheoremCase))
def test_ratio_from_means_is_independent_of_package(case):
    # rebuild the ratio from the test oracle at 50 digits
    for v in (1e-3, 0.2, 0.5, 0.9, 0.999):
        with mpmath.workdps(60):
            a, b = 1 + mpmath.mpf(v), 1 - mpmath.mpf(v)
            m = means_mp(a, b)
            nc = case.neuman_case.value
            nval = n_mean_mp(nc, a, b)
            lo, hi = (m["H"], m["A"]) if nc in ("AH", "HA") else (m["A"], m["C"])
            if case.value.startswith("T13"):
                want = (1 / nval - 1 / hi) / (1 / lo - 1 / hi)
            else:
                want = (nval - lo) / (hi - lo)
        assert abs(ratio_from_means(case, v) - float(want)) <= 1e-15
        assert abs(ratio(case, v) - float(want)) <= 1e-12


def test_ratio_identities_at_half():
    prm = params_from_v(0.5)
    assert ratio("T12_AH", 0.5) == 0.5 * eval_lemma("PHI1", prm.p)
    assert ratio("T12_CA", 0.5) == 0.5 * eval_lemma("PHI1", math.log(2))
    assert rel(prm.r, math.log(2)) <= 1e-15
    assert ratio("T13_HA", 0.5) == 1 + eval_lemma("PHI4", prm.q)


def test_beta3_identity_and_factor_two():
    # phi1 at log(2 + sqrt 3) is twice beta3; the ratio carries the half
    assert rel(eval_lemma("PHI1", L), 2 * TheoremCase.T12_CA.beta_analytic) <= 1e-12
    assert rel(ratio("T12_CA", 1 - 1e-12), TheoremCase.T12_CA.beta_analytic) <= 1e-6


def test_closed_form_endpoint_values():
    assert rel(eval_lemma("PHI2", math.pi / 3), (8 * math.sqrt(3) * math.pi - 18) / 9) <= 1e-12
    want = -(8 * math.pi - 6 * math.sqrt(3)) / (4 * math.pi + 3 * math.sqrt(3))
    assert rel(eval_lemma("PHI4", math.pi / 3), want) <= 1e-12
    assert rel(eval_lemma("PHI3", L), TheoremCase.T13_CA.alpha_analytic) <= 1e-12


def test_ratio_domain():
    for v in (0.0, 1.0, -0.1, math.nan):
        with pytest.raises(ValueError):
            ratio("T12_AH", v)


def test_ratio_offset_consistent():
    for case in TheoremCase:
        lim = case.alpha_analytic if case.ratio_monotonicity == "increasing" else case.beta_analytic
        for v in (0.3, 0.6):
            assert abs(ratio_offset(case, v) - (ratio(case, v) - lim)) <= 1e-14


def test_sweep_validation():
    for kwargs in ({"v_min": 0.0}, {"v_max": 1.0}, {"v_min": 0.5, "v_max": 0.4}, {"points": 1},
                   {"spacing": "log"}, {"tol": 0.0}, {"points": 2.5}):
        with pytest.raises(ValueError):
            SweepSpec(**kwargs)


@pytest.mark.parametrize("spacing", ["uniform", "endpoint-refined"])
def test_grid_shape(spacing):
    vs = SweepSpec(spacing=spacing).grid()
    assert len(vs) == 10_000
    assert vs[0] == 1e-6 and vs[-1] == 1 - 1e-6
    assert all(x < y for x, y in zip(vs, vs[1:]))


@pytest.mark.parametrize("case", list(TheoremCase))
def test_certify_default_passes(case):
    cert = certify_case(case)
    assert cert.verdict == "pass" and cert.passed and cert.monotone
    assert cert.warnings == []
    assert case.alpha_analytic - 1e-6 <= cert.observed_inf
    assert cert.observed_sup <= case.beta_analytic + 1e-6
    assert cert.max_abs_gap <= 1e-6


def test_certify_examples():
    ha = certify_case("T12_HA")
    assert abs(ha.observed_sup - math.pi / 4) <= 1e-6
    ac = certify_case("T12_AC")
    assert abs(ac.observed_sup - 0.70919957615614523) <= 1e-6
    t13 = certify_case("T13_HA")
    assert abs(t13.observed_inf) <= 1e-6 and abs(t13.observed_sup - 1 / 3) <= 1e-6
    ca = certify_case("T13_CA")
    assert abs(ca.limit_v1 - 0.44909370251420487) <= 1e-6


def test_certify_endpoint_refined_passes():
    sweep = SweepSpec(spacing="endpoint-refined")
    assert all(certify_case(c, sweep).passed for c in TheoremCase)


def test_tolerance_too_tight_fails():
    cert = certify_case("T12_HA", SweepSpec(tol=1e-15))
    assert cert.verdict == "fail"
    assert any("endpoint limits" in w for w in cert.warnings)


def test_two_points_cannot_show_monotonicity():
    cert = certify_case("T12_HA", SweepSpec(points=2))
    assert cert.verdict == "fail"
    assert any("unverifiable" in w for w in cert.warnings)


def test_endpoint_limits_and_error():
    for case in TheoremCase:
        lo, hi, err = endpoint_limits(case)
        assert 0 < err < 1e-8
        first, last = (case.alpha_analytic, case.beta_analytic)
        if case.ratio_monotonicity == "decreasing":
            first, last = last, first
        assert abs(lo - first) <= 1e-9 and abs(hi - last) <= 1e-9


def test_certificate_dict_is_json():
    d = certify_case("T13_AC", SweepSpec(points=200)).to_dict()
    assert {"case", "constants", "observed", "tol", "verdict", "witnesses"} <= set(d)
    assert json.loads(json.dumps(d)) == d


@pytest.mark.parametrize("workers, chunks", [(2, None), (2, 3), (3, 7)])
def test_parallel_equals_serial(workers, chunks):
    sweep = SweepSpec(points=2000)
    serial = certify_case("T12_CA", sweep)
    parallel = certify_case("T12_CA", sweep, workers=workers, chunks=chunks)
    assert serial.to_dict() == parallel.to_dict()
    vs = sweep.grid()
    assert evaluate_grid("T13_AH", vs) == evaluate_grid("T13_AH", vs, workers=workers, chunks=chunks)


@pytest.mark.parametrize("case", list(TheoremCase))
def test_sharpness_probe_complete(case):
    witnesses = sharpness_probe(case, 1e-3)
    assert probe_complete(witnesses)
    for w in witnesses:
        assert 0 < w.v < 1
        assert not inequality_holds(case, w.bound, w.constant, w.v)


def test_sharpness_locations():
    ha = [w for w in sharpness_probe("T12_HA", 1e-3) if w.bound == "upper"]
    assert ha and all(w.v > 0.9 for w in ha)
    ah = [w for w in sharpness_probe("T12_AH", 1e-3) if w.bound == "lower"]
    assert ah and all(w.v < 0.1 for w in ah)


def test_sharp_constants_hold_on_grid():
    for case in TheoremCase:
        for v in (1e-3, 0.25, 0.5, 0.75, 0.999):
            assert inequality_holds(case, "lower", case.alpha_analytic, v)
            assert inequality_holds(case, "upper", case.beta_analytic, v)


@pytest.mark.parametrize("case", ["T12_AH", "T13_AC"])
def test_gross_tightening_fails_everywhere(case):
    sweep = SweepSpec(points=500)
    witnesses = sharpness_probe(case, 0.5, sweep, max_witnesses=None)
    assert len(witnesses) == 2 * 500


def test_sharpness_rejects_nonpositive_epsilon():
    with pytest.raises(ValueError):
        sharpness_probe("T12_AH", 0.0)


def test_chain_check_examples():
    assert chain_check(PositivePair(1, 3))
    assert chain_check(PositivePair(1e6, 3e6))
    assert chain_check(PositivePair(3, 1))
    with pytest.raises(ValueError):
        chain_check(PositivePair(4, 4))
