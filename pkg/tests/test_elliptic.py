"""Tests for the elliptic core: K(m), the fast triple, the slow oracle."""

import numpy as np
import pytest
from numpy.testing import assert_allclose, assert_array_equal
from scipy.integrate import quad

from landen.elliptic import (ModulusClampWarning, ModulusParameter,
                             complete_elliptic_k, jacobi_eval, jacobi_oracle)

M_GRID = (0.1, 0.25, 0.5, 0.75, 0.9, 0.99)
EPS = float(np.finfo(float).eps)

# Derived with the quadrature oracle below before the AGM path existed.
K_HALF = 1.8540746773013719
K_QUARTER = 1.6857503548125963
K_NINE_TENTHS = 2.578092113348173


def k_by_quadrature(m):
    """Independent K(m): adaptive quadrature of the defining integral."""
    value, _ = quad(lambda t: 1.0 / np.sqrt(1.0 - m * np.sin(t) ** 2),
                    0.0, 0.5 * np.pi, epsabs=1e-15, epsrel=1e-13, limit=200)
    return value


class TestCompleteK:
    def test_circular_value(self):
        assert complete_elliptic_k(0.0) == np.pi / 2

    @pytest.mark.parametrize("m,frozen", [(0.5, K_HALF), (0.25, K_QUARTER),
                                          (0.9, K_NINE_TENTHS)])
    def test_frozen_values(self, m, frozen):
        assert_allclose(k_by_quadrature(m), frozen, rtol=1e-14)
        assert_allclose(complete_elliptic_k(m), frozen, rtol=1e-15)

    @pytest.mark.parametrize("m", list(M_GRID) + [1e-8, 0.999, 0.9999])
    def test_matches_quadrature(self, m):
        assert_allclose(complete_elliptic_k(m), k_by_quadrature(m), rtol=5e-14)

    def test_monotone_and_finite_near_one(self):
        k1 = complete_elliptic_k(0.99)
        k2 = complete_elliptic_k(0.9999)
        assert np.isfinite(k2) and k2 > k1

    def test_lower_bound(self):
        for m in M_GRID:
            assert complete_elliptic_k(m) > np.pi / 2

    @pytest.mark.parametrize("m", [-0.1, 1.0, 1.5, np.nan])
    def test_domain(self, m):
        with pytest.raises(ValueError):
            complete_elliptic_k(m)


class TestJacobiEval:
    def test_circular_limit_exact(self):
        x = np.linspace(-7.0, 7.0, 41)
        sn, cn, dn = jacobi_eval(x, 0.0)
        assert_array_equal(sn, np.sin(x))
        assert_array_equal(cn, np.cos(x))
        assert_array_equal(dn, np.ones_like(x))

    def test_hyperbolic_limit_exact(self):
        x = np.linspace(-5.0, 5.0, 21)
        sn, cn, dn = jacobi_eval(x, 1.0)
        assert_array_equal(sn, np.tanh(x))
        assert_array_equal(cn, 1.0 / np.cosh(x))
        assert_array_equal(dn, 1.0 / np.cosh(x))

    def test_clamp_band_warns_and_matches_limit(self):
        with pytest.warns(ModulusClampWarning):
            triple = jacobi_eval(1.3, 1.0 - 1e-13)
        assert triple.sn == np.tanh(1.3)

    def test_no_warning_outside_band(self, recwarn):
        jacobi_eval(1.3, 0.99)
        jacobi_eval(1.3, 1.0)
        assert not [w for w in recwarn if issubclass(w.category, ModulusClampWarning)]

    @pytest.mark.parametrize("m", M_GRID)
    def test_quarter_period_table(self, m):
        big_k = complete_elliptic_k(m)
        at0 = jacobi_eval(0.0, m)
        assert at0 == (0.0, 1.0, 1.0)
        atk = jacobi_eval(big_k, m)
        assert abs(atk.sn - 1.0) < 1e-13
        assert abs(atk.cn) < 1e-13
        assert abs(atk.dn - np.sqrt(1.0 - m)) < 1e-13

    @pytest.mark.parametrize("m", list(M_GRID) + [1e-6, 0.9999])
    def test_pythagorean_identities_ulp(self, m):
        big_k = complete_elliptic_k(m)
        x = np.linspace(-4 * big_k, 4 * big_k, 257)
        sn, cn, dn = jacobi_eval(x, m)
        assert np.max(np.abs(sn * sn + cn * cn - 1.0)) <= 8 * EPS
        assert np.max(np.abs(dn * dn + m * sn * sn - 1.0)) <= 8 * EPS

    @pytest.mark.parametrize("m", M_GRID)
    def test_range_bounds(self, m):
        big_k = complete_elliptic_k(m)
        x = np.linspace(-4 * big_k, 4 * big_k, 257)
        sn, cn, dn = jacobi_eval(x, m)
        slack = 4 * EPS
        assert np.all(np.abs(sn) <= 1.0 + slack)
        assert np.all(np.abs(cn) <= 1.0 + slack)
        assert np.all(dn <= 1.0 + slack)
        assert np.all(dn >= np.sqrt(1.0 - m) * (1.0 - 4 * EPS))

    @pytest.mark.parametrize("m", M_GRID)
    def test_periodicity(self, m):
        big_k = complete_elliptic_k(m)
        x = np.linspace(0.0, 2 * big_k, 64)
        base = jacobi_eval(x, m)
        shifted = jacobi_eval(x + 4 * big_k, m)
        assert np.max(np.abs(shifted.sn - base.sn)) < 1e-12
        half = jacobi_eval(x + 2 * big_k, m)
        assert np.max(np.abs(half.dn - base.dn)) < 1e-12

    @pytest.mark.parametrize("m", M_GRID)
    def test_dn_at_half_quarter_periods(self, m):
        big_k = complete_elliptic_k(m)
        t = (1.0 - m) ** 0.25
        assert abs(jacobi_eval(big_k / 2, m).dn - t) < 1e-12
        assert abs(jacobi_eval(3 * big_k / 2, m).dn - t) < 1e-12

    @pytest.mark.parametrize("m", M_GRID)
    def test_two_thirds_quarter_period_relation(self, m):
        big_k = complete_elliptic_k(m)
        q = jacobi_eval(2 * big_k / 3, m).dn
        assert abs(jacobi_eval(4 * big_k / 3, m).cn + q / (1.0 + q)) < 1e-12

    def test_two_thirds_frozen_values(self):
        # oracle-derived at m = 0.5
        big_k = complete_elliptic_k(0.5)
        assert_allclose(jacobi_eval(2 * big_k / 3, 0.5).dn,
                        0.7712298784187062, atol=1e-13)
        assert_allclose(jacobi_eval(4 * big_k / 3, 0.5).cn,
                        -0.43542054468233904, atol=1e-13)

    def test_frozen_point(self):
        # oracle-derived triple at (1.0, 0.5)
        triple = jacobi_eval(1.0, 0.5)
        assert_allclose(triple.sn, 0.8030018248956439, atol=1e-13)
        assert_allclose(triple.cn, 0.5959765676721407, atol=1e-13)
        assert_allclose(triple.dn, 0.8231610016315963, atol=1e-13)

    def test_scalar_and_array_agree(self):
        arr = jacobi_eval(np.array([0.3, 1.7]), 0.6)
        one = jacobi_eval(1.7, 0.6)
        assert np.ndim(one.sn) == 0
        assert one.sn == arr.sn[1] and one.dn == arr.dn[1]

    def test_large_argument_consistent_with_periodicity(self):
        m = 0.75
        big_k = complete_elliptic_k(m)
        a = jacobi_eval(8 * big_k - 0.7, m)
        b = jacobi_eval(-0.7, m)
        assert abs(a.sn - b.sn) < 1e-12
        assert abs(a.dn - b.dn) < 1e-12

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            jacobi_eval(np.inf, 0.5)
        with pytest.raises(ValueError):
            jacobi_eval(np.array([0.0, np.nan]), 0.5)
        with pytest.raises(ValueError):
            jacobi_eval(1.0, -0.2)
        with pytest.raises(ValueError):
            jacobi_eval(1.0, 1.2)

    @pytest.mark.parametrize("m", [0.1, 0.5, 0.9])
    def test_against_scipy(self, m):
        from scipy.special import ellipj
        big_k = complete_elliptic_k(m)
        x = np.linspace(-2 * big_k, 2 * big_k, 41)
        sn_ref, cn_ref, dn_ref, _ = ellipj(x, m)
        sn, cn, dn = jacobi_eval(x, m)
        assert_allclose(sn, sn_ref, atol=1e-9)
        assert_allclose(cn, cn_ref, atol=1e-9)
        assert_allclose(dn, dn_ref, atol=1e-9)


class TestJacobiOracle:
    @pytest.mark.parametrize("m", M_GRID)
    def test_origin(self, m):
        assert jacobi_oracle(0.0, m) == (0.0, 1.0, 1.0)

    @pytest.mark.parametrize("m", M_GRID)
    def test_quarter_period(self, m):
        big_k = complete_elliptic_k(m)
        sn, cn, dn = jacobi_oracle(big_k, m)
        assert abs(sn - 1.0) < 1e-11
        assert abs(cn) < 1e-11
        assert abs(dn - np.sqrt(1.0 - m)) < 1e-11

    def test_limits(self):
        assert jacobi_oracle(0.7, 0.0).sn == np.sin(0.7)
        assert jacobi_oracle(0.7, 1.0).sn == np.tanh(0.7)

    @pytest.mark.parametrize("m", M_GRID)
    def test_oracle_vs_eval(self, m):
        big_k = complete_elliptic_k(m)
        worst = 0.0
        for x in np.linspace(-4 * big_k, 4 * big_k, 64):
            a = jacobi_oracle(x, m)
            b = jacobi_eval(x, m)
            worst = max(worst, abs(a.sn - b.sn), abs(a.cn - b.cn), abs(a.dn - b.dn))
        assert worst < 1e-11

    def test_cross_check_point(self):
        a = jacobi_oracle(1.0, 0.5)
        b = jacobi_eval(1.0, 0.5)
        assert max(abs(a.sn - b.sn), abs(a.cn - b.cn), abs(a.dn - b.dn)) < 1e-11

    def test_domain(self):
        with pytest.raises(ValueError):
            jacobi_oracle(np.nan, 0.5)
        with pytest.raises(ValueError):
            jacobi_oracle(1.0, -1.0)


class TestModulusParameter:
    def test_fields_and_invariants(self):
        mp = ModulusParameter.from_m(0.5)
        assert mp.k == np.sqrt(0.5) and mp.k_prime == np.sqrt(0.5)
        assert abs(mp.k ** 2 + mp.k_prime ** 2 - 1.0) <= 2 * EPS
        assert mp.big_k > np.pi / 2

    def test_circular_edge(self):
        assert ModulusParameter.from_m(0.0).big_k == np.pi / 2

    def test_rejects_divergent_period(self):
        with pytest.raises(ValueError):
            ModulusParameter.from_m(1.0)
        with pytest.raises(ValueError):
            ModulusParameter.from_m(-0.5)
