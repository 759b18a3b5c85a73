import math

import numpy as np
import pytest
import scipy.integrate as si

from ferrojet import magnetisation as mag
from ferrojet import specfun
from ferrojet.errors import InputError, OutOfRange

LAWS = [mag.linear_law(), mag.langevin_law(1.0), mag.langevin_law(5.0)]


def langevin_oracle(lam, s):
    """coth(lam s) - 1/(lam s) normalised, in extended precision."""
    x = np.longdouble(lam) * np.longdouble(s)
    l0 = np.longdouble(lam)
    L = lambda t: np.cosh(t) / np.sinh(t) - 1.0 / t
    return float(L(x) / L(l0))


class TestM1:
    def test_linear(self):
        assert mag.m1(mag.linear_law(), 2.0) == 2.0

    @pytest.mark.parametrize("lam", [0.1, 1.0, 2.0, 10.0])
    def test_langevin_normalisation(self, lam):
        assert abs(mag.m1(mag.langevin_law(lam), 1.0) - 1.0) < 1e-12

    def test_small_lambda_limit(self):
        # coth x - 1/x ~ x/3 - x^3/45, so m1 approaches the linear law
        val = mag.m1(mag.langevin_law(1e-3), 0.7)
        assert abs(val - 0.7) < 1e-6

    @pytest.mark.parametrize("lam,s", [(0.05, 0.3), (0.19, 1.7), (0.2001, 2.0),
                                       (1.0, 0.5), (3.0, 2.5)])
    def test_against_longdouble_oracle(self, lam, s):
        val = mag.m1(mag.langevin_law(lam), s)
        assert abs(val - langevin_oracle(lam, s)) < 1e-13

    def test_rejects_nonpositive_s(self):
        with pytest.raises(InputError):
            mag.m1(mag.linear_law(), 0.0)

    def test_custom_requires_evaluator(self):
        law = mag.custom_law(0.9, 0.1)
        with pytest.raises(InputError):
            mag.m1(law, 1.0)

    def test_custom_m1_must_be_normalised(self):
        with pytest.raises(InputError):
            mag.custom_law(1.0, 0.0, m1=lambda s: 2.0 * s)


class TestDerivsAt1:
    def test_linear(self):
        assert mag.m1_derivs_at_1(mag.linear_law()) == (1.0, 0.0)

    def test_langevin_1_against_finite_difference(self):
        law = mag.langevin_law(1.0)
        m1p, m1pp = mag.m1_derivs_at_1(law)
        fd1 = (mag.m1(law, 1.0 + 1e-5) - mag.m1(law, 1.0 - 1e-5)) / 2e-5
        h = 1e-4  # second difference: eps/h^2 roundoff caps the accuracy
        fd2 = (mag.m1(law, 1.0 + h) - 2.0 + mag.m1(law, 1.0 - h)) / (h * h)
        assert abs(m1p - 0.8815) < 1e-4
        assert abs(m1p - fd1) < 1e-9
        assert abs(m1pp - fd2) < 1e-6

    def test_small_lambda_series(self):
        # m1'(1) = 1 - 2 lam^2/15 + O(lam^4)
        for lam in (1e-4, 1e-2, 0.05):
            m1p, _ = mag.m1_derivs_at_1(mag.langevin_law(lam))
            assert abs(m1p - (1.0 - 2.0 * lam * lam / 15.0)) < 5e-7 * max(1.0, lam)
        m1p, _ = mag.m1_derivs_at_1(mag.langevin_law(1e-4))
        assert abs(m1p - 1.0) < 1e-7

    def test_custom_passthrough(self):
        law = mag.custom_law(0.77, -0.3)
        assert mag.m1_derivs_at_1(law) == (0.77, -0.3)


class TestNu:
    def test_zero(self):
        for law in LAWS:
            assert mag.nu(law, 0.0) == 0.0

    def test_linear_closed_form(self):
        assert abs(mag.nu(mag.linear_law(), 1.0) - 0.5) < 1e-15

    def test_langevin_against_adaptive_quadrature(self):
        law = mag.langevin_law(2.0)
        ref, _ = si.quad(lambda t: mag.m1(law, t), 0.0, 1.0,
                         epsabs=1e-13, epsrel=1e-13)
        assert abs(mag.nu(law, 1.0) - ref) < 1e-10

    def test_nu_prime_is_m1(self):
        h = 1e-6
        for law in LAWS:
            fd = (mag.nu(law, 1.0 + h) - mag.nu(law, 1.0 - h)) / (2.0 * h)
            assert abs(fd - 1.0) < 1e-9  # nu'(1) = m1(1) = 1


class TestTEnergy:
    def test_zero(self):
        for law in LAWS:
            assert mag.t_energy(law, 0.0) == 0.0
            assert mag.t_prime(law, 0.0) == 0.0

    def test_linear_closed_form(self):
        # T(eta) = ln(1+eta)/2 - ((1+eta)^2 - 1)/4 for the linear law
        for eta in (0.1, -0.2, 0.35):
            want = 0.5 * math.log1p(eta) - ((1.0 + eta) ** 2 - 1.0) / 4.0
            assert abs(mag.t_energy(mag.linear_law(), eta) - want) < 1e-12
        assert abs(mag.t_energy(mag.linear_law(), 0.1) + 0.0048449) < 1e-7

    def test_quadratic_taylor_coefficient(self):
        # T = -eta^2/2 + m1'(1) eta^3/6 + ...; the -1/2 is law-independent
        for law in LAWS:
            c2 = specfun.taylor_coefficient(lambda t: mag.t_energy(law, t), 2)
            assert abs(c2 + 0.5) < 1e-8

    def test_cubic_taylor_coefficient(self):
        for law in LAWS:
            m1p, _ = mag.m1_derivs_at_1(law)
            c3 = specfun.taylor_coefficient(lambda t: mag.t_energy(law, t), 3)
            assert abs(c3 - m1p / 6.0) < 1e-7

    def test_t_prime_matches_derivative(self):
        h = 1e-6
        for law in LAWS:
            fd = (mag.t_energy(law, 0.1 + h) - mag.t_energy(law, 0.1 - h)) / (2 * h)
            assert abs(fd - mag.t_prime(law, 0.1)) < 1e-9

    def test_rejects_eta_below_minus_one(self):
        with pytest.raises(InputError):
            mag.t_energy(mag.linear_law(), -1.0)


class TestLambdaStar:
    def test_root_solves_equation(self):
        lam = mag.langevin_lambda_star(8.0)
        m1p, _ = mag.m1_derivs_at_1(mag.langevin_law(lam))
        assert abs(m1p - 0.75) < 1e-11

    def test_boundary_limit(self):
        assert mag.langevin_lambda_star(6.0 + 1e-8) < 5e-4

    def test_out_of_range(self):
        with pytest.raises(OutOfRange):
            mag.langevin_lambda_star(5.0)
        with pytest.raises(OutOfRange):
            mag.langevin_lambda_star(6.0)


class TestNondimensionalize:
    def test_unit_values(self):
        alpha, beta = mag.nondimensionalize(2.0 * math.pi, 1.0, 1.0, 1.0,
                                            1.0, 1.0)
        assert abs(alpha - 1.0) < 1e-14
        assert abs(beta - 1.0) < 1e-14

    def test_speed_scaling(self):
        a1, b1 = mag.nondimensionalize(3.0, 1.5, 1.0, 2.0, 1.2, 0.7)
        a2, b2 = mag.nondimensionalize(3.0, 1.5, 2.0, 2.0, 1.2, 0.7)
        assert abs(a2 - a1 / 4.0) < 1e-14
        assert abs(b2 - b1 / 4.0) < 1e-14

    def test_rejects_nonpositive(self):
        with pytest.raises(InputError):
            mag.nondimensionalize(1.0, 1.0, 1.0, 0.0, 1.0, 1.0)


class TestPermeability:
    def test_linear(self):
        assert mag.permeability(mag.linear_law(), 0.3) == 2.0
        assert mag.permeability(mag.linear_law(), 7.0) == 2.0

    def test_normalisation_point(self):
        for law in LAWS:
            assert abs(mag.permeability(law, 1.0) - 2.0) < 1e-12

    def test_composition(self):
        law = mag.langevin_law(5.0)
        assert abs(mag.permeability(law, 3.0)
                   - (1.0 + mag.m1(law, 3.0) / 3.0)) < 1e-15


class TestLawProperties:
    def test_normalisation_and_nu_slope(self):
        h = 1e-6
        for law in LAWS:
            assert abs(mag.m1(law, 1.0) - 1.0) < 1e-12
            nup = (mag.nu(law, 1.0 + h) - mag.nu(law, 1.0 - h)) / (2.0 * h)
            assert abs(nup - 1.0) < 1e-10

    def test_langevin_monotone(self):
        ss = np.arange(0.05, 5.0001, 0.05)
        for lam in (0.1, 1.0, 5.0, 20.0, 50.0):
            law = mag.langevin_law(lam)
            vals = np.asarray([mag.m1(law, s) for s in ss])
            assert np.all(np.diff(vals) > 0.0)

    def test_custom_negative_warns(self):
        with pytest.warns(UserWarning):
            mag.custom_law(1.0, 0.0, m1=lambda s: 2.0 - s)
