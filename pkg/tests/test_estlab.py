"""Growth-exponent fitting, the J integrals, 5GH, and box sums."""

import math

import mpmath as mp
import numpy as np
import pytest

from zetasum.estlab import (SampleSeries, Verdict, bound_envelope,
                            box_sum_brute, box_sum_check, fit_growth_exponent,
                            gh_bound_check, j2_integral, j_integral,
                            j_integral_bound, log_grid)


def _series(ts, mags, k=0):
    return SampleSeries("synthetic", list(zip(ts, mags)), ln_power=k)


class TestFit:
    def test_planted_power_law(self):
        ts = log_grid(1e3, 1e6, 10)
        rep = fit_growth_exponent(_series(ts, [t**0.5 for t in ts]), 0.5, 0.01)
        assert rep.slope == pytest.approx(0.5, abs=1e-12)
        assert rep.verdict is Verdict.PASS

    @pytest.mark.parametrize("k", [0, 1, 2, 3, 4])
    def test_planted_with_ln_powers(self, k):
        ts = log_grid(1e3, 1e6, 12)
        mags = [7.0 * t**1.3 * math.log(t) ** k for t in ts]
        rep = fit_growth_exponent(_series(ts, mags, k), 1.3, 0.01)
        assert rep.slope == pytest.approx(1.3, abs=1e-10)
        assert rep.max_ratio_constant == pytest.approx(7.0, rel=1e-10)

    def test_exceeding_claim_fails(self):
        ts = log_grid(1e3, 1e6, 8)
        rep = fit_growth_exponent(_series(ts, [t**0.9 for t in ts]), 0.5, 0.1)
        assert rep.verdict is Verdict.FAIL

    def test_too_few_points(self):
        with pytest.raises(ValueError):
            SampleSeries("short", [(10.0, 1.0)] * 4, ln_power=0)

    def test_envelope_constant_one(self):
        ts = log_grid(1e2, 1e5, 6)
        assert bound_envelope(_series(ts, [t**0.7 for t in ts]), 0.7) == \
            pytest.approx(1.0, rel=1e-12)

    def test_elementary_power_sum_estimate(self):
        # sum_{m<=t} m^{-0.6} tracks t^{0.4}/0.4
        for t in (1e3, 1e5):
            m = np.arange(1, int(t) + 1, dtype=np.float64)
            ratio = (m**-0.6).sum() / (t**0.4 / 0.4)
            assert ratio == pytest.approx(1.0, abs=0.05)


class TestJIntegrals:
    def test_unit_integrand(self):
        assert j_integral(10, 1000.0, 0.0, 0.0) == pytest.approx(989.0, rel=1e-12)

    def test_against_extended_quadrature(self):
        ours = j_integral(10, 1000.0, -0.5, 0.3)
        ref = float(mp.quad(lambda x: (10 + x) ** mp.mpf("0.5")
                            * x ** mp.mpf("-0.3"), [11, 1000]))
        assert ours == pytest.approx(ref, rel=1e-10)

    def test_closed_form_bound(self):
        rng = np.random.default_rng(9)
        for _ in range(50):
            m1 = int(rng.integers(1, 50))
            t = float(rng.uniform(m1 + 10.0, 1e4))
            s1 = float(rng.uniform(-1.0, -0.01))
            s2 = float(rng.uniform(0.0, 0.9))
            if s1 + s2 >= 1.0:
                continue
            assert j_integral(m1, t, s1, s2) <= j_integral_bound(m1, t, s1, s2) * (1 + 1e-9)

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            j_integral(10, 1000.0, 0.6, 0.6)
        with pytest.raises(ValueError):
            j_integral(999, 1000.0, 0.0, 0.0)

    def test_j2_sigma_zero_closed_form(self):
        # unit integrand: the rectangle area has an elementary closed form
        t, delta = 1e4, 0.4
        x_lo = t ** (1 - delta)
        tau = t ** (delta - 1)
        area = tau * (t**2 - x_lo**2) / 2.0 - (t - x_lo)
        num, _ = j2_integral(0.0, t, delta)
        assert num == pytest.approx(area, rel=1e-10)

    def test_j2_asymptotic_agreement(self):
        num, asym = j2_integral(0.5, 1e6, 0.4)
        decay = max((1e6) ** (-2 * 0.4 * 0.5), (1e6) ** -0.4)
        assert abs(num / asym - 1.0) <= 10.0 * decay

    def test_j2_ratio_approaches_one_monotonically(self):
        devs = []
        for t in log_grid(1e3, 1e6, 8):
            num, asym = j2_integral(0.3, t, 0.2)
            devs.append(abs(num / asym - 1.0))
        # deviation from 1 shrinks along the grid, up to 2% sampling slack
        assert all(b <= a + 0.02 for a, b in zip(devs, devs[1:]))


class TestGHBound:
    def test_all_ones(self):
        chk = gh_bound_check(np.ones((2, 2)), np.ones((2, 2)))
        assert chk.lhs == pytest.approx(4.0)
        assert chk.g_constant == pytest.approx(4.0)
        assert chk.h_constant == pytest.approx(1.0)
        assert chk.bound == pytest.approx(20.0)
        assert chk.holds and chk.sign_conditions_ok

    def test_product_weights_keep_sign(self):
        for sg in (0.25, 0.5, 0.75):
            m = np.arange(3, 53, dtype=np.float64) ** -sg
            n = np.arange(7, 57, dtype=np.float64) ** -sg
            chk = gh_bound_check(np.ones((50, 50)), np.outer(m, n))
            assert chk.sign_conditions_ok

    def test_random_unimodular_instances(self):
        rng = np.random.default_rng(21)
        w = np.outer(np.arange(1, 51, dtype=np.float64) ** -0.5,
                     np.arange(1, 51, dtype=np.float64) ** -0.5)
        for _ in range(100):
            a = np.exp(2j * math.pi * rng.random((50, 50)))
            chk = gh_bound_check(a, w)
            assert chk.holds

    def test_negative_weights_rejected(self):
        with pytest.raises(ValueError):
            gh_bound_check(np.ones((2, 2)), -np.ones((2, 2)))


class TestBoxSum:
    def test_one_element_box(self):
        out = box_sum_check(7, 7, 9, 9, 500.0)
        assert abs(out.value) == pytest.approx(1.0, abs=1e-14)

    def test_overlap_rejected(self):
        with pytest.raises(ValueError, match="n>m identically"):
            box_sum_check(5, 20, 15, 30, 500.0)

    def test_factorization_matches_brute(self):
        out = box_sum_check(10, 29, 40, 59, 1e3)
        ref = box_sum_brute(10, 29, 40, 59, 1e3)
        assert abs(out.value - ref) <= 1e-10 * max(abs(ref), 1.0)

    def test_dyadic_window_within_scale(self):
        t = 1e5
        m = 2 * math.isqrt(int(t))
        out = box_sum_check(m, 2 * m, 4 * m, 8 * m, t)
        assert out.ratio <= 1.0
        assert out.lambda1 == pytest.approx(t / m**2)


class TestLogGrid:
    def test_spacing(self):
        ts = log_grid(10.0, 1000.0, 5)
        steps = np.diff(np.log(ts))
        assert np.allclose(steps, steps[0])

    def test_errors(self):
        with pytest.raises(ValueError):
            log_grid(10.0, 1000.0, 4)
        with pytest.raises(ValueError):
            log_grid(1000.0, 10.0, 6)
