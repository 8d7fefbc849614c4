import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from neuman_means import carlson
from neuman_means.carlson import ConvergenceError, rc, rf
from neuman_means.neuman import sb
from oracles import rel, rf_quad

arg = st.floats(min_value=1e-3, max_value=1e3)


def test_rf_equal_arguments():
    assert rf(1, 1, 1) == 1.0
    assert rf(4, 4, 4) == 0.5


def test_rf_one_zero_matches_quadrature():
    want = rf_quad(0.0, 1.0, 1.0)
    assert rel(want, math.pi / 2) <= 1e-12
    assert rel(rf(0, 1, 1), want) <= 1e-13


def test_rc_examples():
    assert rc(1, 1) == 1.0
    assert rel(rc(0, 1), math.pi / 2) <= 1e-14
    # 50-digit R_C(2.25, 4) and reciprocal of SB(1.5, 2)
    assert rel(rc(2.25, 4), 0.54633573820103573386) <= 1e-14
    assert rel(rc(2.25, 4), 1 / sb(1.5, 2)) <= 1e-14


@pytest.mark.parametrize("args", [(0, 0, 1), (0, 0, 0), (-1, 1, 1), (1, math.nan, 1), (1, math.inf, 1)])
def test_rf_rejects_bad_arguments(args):
    with pytest.raises(ValueError):
        rf(*args)


@pytest.mark.parametrize("args", [(1, 0), (1, -2), (-1, 1), (math.nan, 1), (1, math.inf)])
def test_rc_rejects_bad_arguments(args):
    with pytest.raises(ValueError):
        rc(*args)


def test_iteration_cap(monkeypatch):
    monkeypatch.setattr(carlson, "MAX_ITER", 2)
    with pytest.raises(ConvergenceError):
        rf(1e-3, 1.0, 1e3)
    with pytest.raises(ConvergenceError):
        rc(1e-3, 1e3)


@given(arg, arg, st.floats(min_value=0, max_value=1e3))
@settings(max_examples=200, deadline=None)
def test_rf_permutation_invariant_bitwise(x, y, z):
    values = {rf(*perm) for perm in itertools.permutations((x, y, z))}
    assert len(values) == 1


@given(arg, arg, arg, st.sampled_from([0.25, 4.0]))
@settings(max_examples=200, deadline=None)
def test_rf_homogeneity(x, y, z, t):
    assert rel(rf(t * x, t * y, t * z), rf(x, y, z) / math.sqrt(t)) <= 1e-12


def test_rc_is_degenerate_rf():
    rng = np.random.default_rng(11)
    xs = np.exp(rng.uniform(np.log(1e-3), np.log(1e3), 1000))
    ys = np.exp(rng.uniform(np.log(1e-3), np.log(1e3), 1000))
    worst = max(rel(rc(x, y), rf(x, y, y)) for x, y in zip(xs, ys))
    assert worst <= 1e-13


def test_rc_zero_first_argument():
    for y in (1e-3, 0.7, 5.0, 1e3):
        assert rel(rc(0.0, y), math.pi / (2 * math.sqrt(y))) <= 1e-14


def test_against_quadrature_sample():
    rng = np.random.default_rng(5)
    for _ in range(30):
        x, y, z = np.exp(rng.uniform(np.log(1e-3), np.log(1e3), 3))
        assert rel(rf(x, y, z), rf_quad(x, y, z)) <= 1e-9
        assert rel(rc(x, y), rf_quad(x, y, y)) <= 1e-9
