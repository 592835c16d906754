import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.polynomial import chebyshev

from zal import rszeta
from zal._rs_coeffs import CHEB
from zal.errors import DomainError

import oracles

FIRST_ZEROS = [float(mpmath.zetazero(n).imag) for n in range(1, 31)]


# ------------------------------------------------------------------ theta

def test_theta_matches_loggamma():
    for t in (100.0, 1234.5, 9.0e4):
        assert rszeta.theta(t) == pytest.approx(oracles.theta_mp(t), rel=1e-12)


def test_theta_root_near_gram_origin():
    grid = np.linspace(17, 18, 1001)
    th = rszeta.theta(grid)
    assert np.count_nonzero(np.diff(np.sign(th))) == 1
    root = mpmath.findroot(lambda t: oracles.theta_mp(float(t)), 17.8)
    assert rszeta.gram_point(0) == pytest.approx(float(root), abs=1e-9)
    assert float(root) == pytest.approx(17.8456, abs=1e-4)


def test_theta_increasing():
    t = np.sort(np.random.default_rng(0).uniform(20, 1e4, 1000))
    assert np.all(np.diff(rszeta.theta(t)) > 0)


def test_gram_points():
    n = np.array([-1, 0, 1, 10, 1000, 10 ** 6])
    g = rszeta.gram_point(n)
    for gi, ni in zip(g, n):
        assert oracles.theta_mp(gi) / math.pi == pytest.approx(ni, abs=1e-7 * max(1, ni))
    assert g[0] == pytest.approx(rszeta.G_MINUS_1, abs=1e-12)
    for t in (10.0, 17.9, 500.0, 12345.6):
        k = rszeta.gram_index(t)
        assert rszeta.gram_point(k) <= t < rszeta.gram_point(k + 1)


# ------------------------------------------------------------------ Z

@pytest.mark.parametrize("k", range(5))
def test_correction_terms_match_closed_forms(k):
    for p in (0.05, 0.3, 0.5, 0.77, 0.95):
        assert chebyshev.chebval(1 - 2 * p, CHEB[k]) == pytest.approx(oracles.gabcke_C(k, p), rel=1e-9, abs=1e-15)


def test_z_at_first_zero_order_4():
    assert abs(rszeta.riemann_siegel_Z(FIRST_ZEROS[0], correction_order=4)) <= 1e-4


def test_z_matches_euler_maclaurin():
    for t in (100.0, 523.7, 7000.25):
        em = abs(oracles.zeta_em(t))
        assert abs(rszeta.riemann_siegel_Z(t)) == pytest.approx(em, rel=1e-6)


def test_z_matches_mpmath_siegelz():
    for t in (30.0, 1e3 + 0.5, 2e5):
        assert rszeta.riemann_siegel_Z(t) == pytest.approx(float(mpmath.siegelz(t)), abs=1e-9)


def test_z_real_and_error_small():
    t = np.linspace(20, 5e4, 200)
    z, err = rszeta.z_with_error(t)
    assert z.dtype == np.float64
    assert np.all(err < 1e-8)


def test_z_domain():
    with pytest.raises(DomainError):
        rszeta.riemann_siegel_Z(1.0)
    with pytest.raises(DomainError):
        rszeta.riemann_siegel_Z(float("nan"))


# ------------------------------------------------------------------ counts

def test_count_small_heights():
    assert rszeta.count_zeros(10.0) == 0
    assert rszeta.count_zeros(50.0) == sum(g <= 50 for g in FIRST_ZEROS)
    assert rszeta.count_zeros(3.0) == 0


def test_count_matches_nzeros():
    for t in (1000.0, 7777.7, 123456.0):
        assert rszeta.count_zeros(t) == mpmath.nzeros(t)


def test_count_just_around_a_zero():
    g = FIRST_ZEROS[9]
    assert rszeta.count_zeros(g - 1e-6) == 9
    assert rszeta.count_zeros(g + 1e-6) == 10


def test_count_monotone_random_pairs():
    rng = np.random.default_rng(3)
    a = rng.uniform(2, 2e4, 1000)
    b = rng.uniform(2, 2e4, 1000)
    lo, hi = np.minimum(a, b), np.maximum(a, b)
    n = rszeta.count_zeros(np.concatenate([lo, hi]))
    assert np.all(n[:1000] <= n[1000:])


def test_s_at_20_matches_path_tracking():
    assert rszeta.s_of_t(20.0) == pytest.approx(oracles.s_path_mp(20.0), abs=1e-9)


def test_s_path_tracking_subsample():
    for t in (57.3, 143.1, 301.7):
        assert rszeta.s_of_t(t) == pytest.approx(oracles.s_path_mp(t), abs=1e-9)


def test_s_difference_identity():
    rng = np.random.default_rng(5)
    t1 = rng.uniform(100, 3000, 50)
    t2 = t1 + rng.uniform(0, 30, 50)
    s1, s2 = rszeta.s_of_t(t1), rszeta.s_of_t(t2)
    n1, n2 = rszeta.count_zeros(t1), rszeta.count_zeros(t2)
    expect = (n2 - n1) - (rszeta.theta(t2) - rszeta.theta(t1)) / math.pi
    assert np.allclose(s2 - s1, expect, atol=1e-9)


def test_s_mean_near_zero():
    t = 1e3 + 9e3 * np.random.default_rng(11).random(10000)
    s = rszeta.s_of_t(t)
    assert abs(s.mean()) <= 3 * s.std(ddof=1) / math.sqrt(s.size)


# ------------------------------------------------------------------ zeros

def test_locate_zeros_windows():
    z = rszeta.locate_zeros(10, 15)
    assert len(z) == 1 and z.ordinates[0] == pytest.approx(FIRST_ZEROS[0], abs=1e-8)
    assert len(rszeta.locate_zeros(2, 10)) == 0
    z = rszeta.locate_zeros(100, 101)
    ref = [g for g in FIRST_ZEROS if 100 < g <= 101]
    assert np.allclose(z.ordinates, ref, atol=1e-8)
    z = rszeta.locate_zeros(14, 100)
    assert z.first_index == 1
    assert np.allclose(z.ordinates, [g for g in FIRST_ZEROS if g <= 100], atol=1e-9)


def test_locate_zeros_high_window():
    z = rszeta.locate_zeros(1e5, 1e5 + 5)
    ref = [float(mpmath.zetazero(n).imag) for n in range(z.first_index, z.first_index + len(z))]
    assert mpmath.nzeros(1e5) + 1 == z.first_index
    assert np.allclose(z.ordinates, ref, atol=1e-8)


# ------------------------------------------------------------------ drift

def test_drift_degenerate_and_small_steps():
    assert rszeta.drift_check(1000.0, 1000.0) == 0.0
    t1 = 1000.0
    g = rszeta.locate_zeros(t1, t1 + 3).ordinates
    t2 = (t1 + g[0]) / 2 if g.size else t1 + 1
    slack = rszeta.drift_check(t1, t2)
    expect = rszeta.theta(t1) - rszeta.theta(t2) + (t2 - t1) * math.log(t2)
    assert slack == pytest.approx(expect, abs=1e-9)
    assert slack >= 0


@settings(max_examples=25, deadline=None)
@given(st.floats(20, 5e4), st.floats(0, 5))
def test_drift_nonnegative_without_zeros_nearby(t1, d):
    t2 = t1 + d
    if rszeta.count_zeros(t2) == rszeta.count_zeros(t1):
        assert rszeta.drift_check(t1, t2) >= -1e-9


def test_critical_sample_row():
    s = rszeta.critical_samples([100.0])[0]
    assert s.csv_row().count(",") == rszeta.CriticalSample.CSV_HEADER.count(",")
    assert s.n_zeros == 29
