import math

import numpy as np
import pytest
import scipy.special as sc

from ferrojet import specfun
from ferrojet.errors import (InputError, NonConvergence, NoSignChange,
                             StepUnderflow)


def series_j_oracle(n, x, terms=120):
    """Independent ascending-series oracle using compensated summation."""
    vals = []
    t = (0.5 * x) ** n / math.factorial(n)
    q = 0.25 * x * x
    for k in range(terms):
        vals.append(t)
        t *= -q / ((k + 1) * (k + 1 + n))
    return math.fsum(vals)


def series_i_oracle(n, x, terms=200):
    vals = []
    t = (0.5 * x) ** n / math.factorial(n)
    q = 0.25 * x * x
    for k in range(terms):
        vals.append(t)
        t *= q / ((k + 1) * (k + 1 + n))
    return math.fsum(vals)


class TestBesselJ:
    def test_trivial_values(self):
        assert specfun.bessel_j(0, 0.0) == 1.0
        assert specfun.bessel_j(1, 0.0) == 0.0

    def test_series_value_at_one(self):
        oracle = series_j_oracle(0, 1.0)
        assert abs(oracle - 0.7651976866) < 1e-9
        assert abs(specfun.bessel_j(0, 1.0) - oracle) < 1e-14

    def test_against_scipy_dense(self):
        xs = np.linspace(0.0, 50.0, 3001)
        for n in range(4):
            err = np.abs(specfun.bessel_j(n, xs) - sc.jv(n, xs))
            assert np.max(err) < 1e-13

    def test_recurrence(self):
        xs = np.linspace(0.1, 30.0, 500)
        for n in (1, 2):
            res = (specfun.bessel_j(n - 1, xs) + specfun.bessel_j(n + 1, xs)
                   - (2.0 * n / xs) * specfun.bessel_j(n, xs))
            assert np.max(np.abs(res)) < 1e-11

    def test_rejects_bad_arguments(self):
        with pytest.raises(InputError):
            specfun.bessel_j(0, -1.0)
        with pytest.raises(InputError):
            specfun.bessel_j(0, np.nan)
        with pytest.raises(InputError):
            specfun.bessel_j(4, 1.0)

    def test_scalar_type(self):
        assert isinstance(specfun.bessel_j(2, 3.3), float)


class TestBesselI:
    def test_trivial_values(self):
        assert specfun.bessel_i(0, 0.0) == 1.0
        assert specfun.bessel_i(1, 0.0) == 0.0

    def test_series_value_at_one(self):
        oracle = series_i_oracle(0, 1.0)
        assert abs(oracle - 1.2660658778) < 1e-9
        assert abs(specfun.bessel_i(0, 1.0) - oracle) < 1e-14

    def test_against_scipy_dense(self):
        xs = np.linspace(1e-3, 50.0, 3001)
        for n in range(4):
            ref = sc.iv(n, xs)
            err = np.abs(specfun.bessel_i(n, xs) - ref) / np.abs(ref)
            assert np.max(err) < 1e-13

    def test_recurrence_relative(self):
        # absolute residual scaled by I_n: the raw values reach ~1e12 at
        # x = 30, so the meaningful bound is relative
        xs = np.linspace(0.1, 30.0, 500)
        for n in (1, 2):
            res = (specfun.bessel_i(n - 1, xs) - specfun.bessel_i(n + 1, xs)
                   - (2.0 * n / xs) * specfun.bessel_i(n, xs))
            assert np.max(np.abs(res) / specfun.bessel_i(n, xs)) < 1e-11

    def test_rejects_negative(self):
        with pytest.raises(InputError):
            specfun.bessel_i(1, -0.5)


class TestFirstZeroJ1:
    def test_value(self):
        j11 = specfun.first_zero_j1()
        assert abs(j11 - sc.jn_zeros(1, 1)[0]) < 1e-12

    def test_residual(self):
        assert abs(specfun.bessel_j(1, specfun.first_zero_j1())) < 1e-11

    def test_bracket_validity(self):
        assert specfun.bessel_j(1, 3.0) * specfun.bessel_j(1, 4.0) < 0.0


class TestFindRoot:
    def test_sqrt2(self):
        r = specfun.find_root(lambda x: x * x - 2.0, 1.0, 2.0, tol=1e-12)
        assert abs(r - math.sqrt(2.0)) < 1e-11

    def test_matches_first_zero(self):
        r = specfun.find_root(lambda x: specfun.bessel_j(1, x), 3.0, 4.0,
                              tol=1e-12)
        assert abs(r - specfun.first_zero_j1()) < 1e-11

    def test_no_sign_change(self):
        with pytest.raises(NoSignChange):
            specfun.find_root(lambda x: x * x + 1.0, 0.0, 1.0)

    def test_nonconvergence_cap(self):
        with pytest.raises(NonConvergence):
            specfun.find_root(lambda x: x - 0.1234, 0.0, 1.0, tol=1e-15,
                              max_iter=3)

    def test_invalid_bracket(self):
        with pytest.raises(InputError):
            specfun.find_root(lambda x: x, 1.0, 0.0)


class TestQuadrature:
    def test_monomials_exact(self):
        for deg in (0, 1, 5, 31, 64, 127):
            val = specfun.quadrature(lambda r, d=deg: r ** d, 0.0, 1.0)
            assert abs(val - 1.0 / (deg + 1)) < 1e-13

    def test_linear_and_cubic(self):
        assert abs(specfun.quadrature(lambda r: r, 0.0, 1.0) - 0.5) < 1e-15
        assert abs(specfun.quadrature(lambda r: r ** 3, 0.0, 1.0) - 0.25) < 1e-15

    def test_bessel_identity(self):
        # int_0^1 r I0(s r) dr = I1(s)/s at s = 1
        val = specfun.quadrature(lambda r: r * specfun.bessel_i(0, r), 0.0, 1.0)
        assert abs(val - specfun.bessel_i(1, 1.0)) < 1e-13

    def test_against_adaptive_oracle(self):
        import scipy.integrate as si
        f = lambda r: np.exp(-r) * np.cos(3.0 * r)
        ref, _ = si.quad(f, 0.0, 1.0, epsabs=1e-13, epsrel=1e-13)
        assert abs(specfun.quadrature(f, 0.0, 1.0) - ref) < 1e-12

    def test_rejects_reversed_interval(self):
        with pytest.raises(InputError):
            specfun.quadrature(lambda r: r, 1.0, 0.0)


class TestTaylorCoefficient:
    def test_cubic_monomial(self):
        assert abs(specfun.taylor_coefficient(lambda t: t ** 3, 3) - 1.0) < 1e-10

    def test_exponential(self):
        f = lambda t: math.exp(t) - 1.0
        assert abs(specfun.taylor_coefficient(f, 2) - 0.5) < 1e-9

    def test_polynomial_exactness(self):
        # p(t) = 2t + 3t^2 - 4t^3 + 0.25 t^4; truncation vanishes for
        # polynomials, so the higher orders take a wide step to sit clear
        # of the eps/h^k roundoff floor
        p = lambda t: t * (2.0 + t * (3.0 + t * (-4.0 + 0.25 * t)))
        for k, want, h0 in ((1, 2.0, 1e-2), (2, 3.0, 1e-2), (3, -4.0, 0.1),
                            (4, 0.25, 0.5)):
            assert abs(specfun.taylor_coefficient(p, k, h0=h0) - want) < 1e-10

    def test_step_underflow_on_kink(self):
        with pytest.raises(StepUnderflow):
            specfun.taylor_coefficient(abs, 2)

    def test_rejects_bad_order(self):
        with pytest.raises(InputError):
            specfun.taylor_coefficient(lambda t: t, 5)
