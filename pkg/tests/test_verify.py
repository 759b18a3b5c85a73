import math

import numpy as np
import pytest
import scipy.integrate as si

from ferrojet import magnetisation as mag
from ferrojet import verify
from ferrojet.errors import (DomainViolation, InputError,
                             MissingDerivativeData, TauDegenerate)
from ferrojet.verify import RadialFunction, SpatialState

LIN = mag.linear_law()
LAWS = [LIN, mag.langevin_law(1.0), mag.langevin_law(5.0)]


def random_state(rng):
    phi = RadialFunction.poly(rng.uniform(-1.0, 1.0, size=4))
    zeta = RadialFunction.poly(rng.uniform(-1.0, 1.0, size=4))
    return SpatialState(rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3),
                        phi, zeta)


class TestHamiltonian:
    def test_trivial_state(self):
        for beta in (0.4, 1.0, 2.5):
            h = verify.hamiltonian(SpatialState.zero(), beta, 2.0, LIN)
            assert abs(h - (-0.5 * beta)) < 1e-15

    def test_quadratic_term_vanishes_on_critical_line(self):
        # along the eta-direction basis vector the quadratic part of H
        # vanishes exactly on alpha0 = 2 + beta0
        from ferrojet.specfun import taylor_coefficient
        for beta0 in (0.5, 1.0):
            f2 = verify.basis_region1(beta0).normalized["f2"]
            h0 = -0.5 * beta0

            def g(t):
                return verify.hamiltonian(f2.scaled(t), beta0, 2.0 + beta0,
                                          LIN) - h0

            assert abs(taylor_coefficient(g, 2)) < 1e-8

    def test_w_coupling_against_adaptive_quadrature(self):
        # state with omega != 0 and phi_r != 0 so the W term is exercised
        eta, omega = 0.1, 0.05
        beta, alpha = 0.8, 2.1
        state = SpatialState(eta, omega, RadialFunction.poly([0.0, 0.0, 0.3]),
                             RadialFunction.poly([0.2, 0.0, -0.1]))
        one = 1.0 + eta

        def xi(r):
            return 0.2 - 0.1 * r * r - 1.0

        core, _ = si.quad(lambda r: 0.5 * (xi(r) / one ** 2 + 1.0) ** 2
                          * one ** 2 * r - 0.5 * r * (0.6 * r) ** 2,
                          0.0, 1.0, epsabs=1e-14, epsrel=1e-14)
        iw, _ = si.quad(lambda r: r * r * 0.6 * r * xi(r), 0.0, 1.0,
                        epsabs=1e-14, epsrel=1e-14)
        W = (omega + iw / one) / one
        want = (core + alpha * mag.t_energy(LIN, eta)
                - one * math.sqrt(beta * beta - W * W)
                + 0.5 * beta * one * one)
        got = verify.hamiltonian(state, beta, alpha, LIN)
        assert abs(got - want) < 1e-10
        assert W != 0.0

    def test_domain_violations(self):
        deep = SpatialState(-0.6, 0.0, RadialFunction.zero(),
                            RadialFunction.zero())
        with pytest.raises(DomainViolation):
            verify.hamiltonian(deep, 1.0, 2.0, LIN)
        fast = SpatialState(0.0, 5.0, RadialFunction.zero(),
                            RadialFunction.zero())
        with pytest.raises(DomainViolation):
            verify.hamiltonian(fast, 1.0, 2.0, LIN)

    def test_complex_state_rejected(self):
        state = SpatialState(0.1j, 0.0, RadialFunction.zero(),
                             RadialFunction.zero())
        with pytest.raises(InputError):
            verify.hamiltonian(state, 1.0, 2.0, LIN)


class TestSymplecticProduct:
    def test_antisymmetry_on_random_states(self):
        rng = np.random.default_rng(7)
        for _ in range(8):
            u, v = random_state(rng), random_state(rng)
            assert abs(verify.symplectic_product(u, v)
                       + verify.symplectic_product(v, u)) < 1e-14

    def test_region2_value(self):
        b = verify.basis_region2()
        val = verify.symplectic_product(b.vectors["e1"], b.vectors["e6"])
        assert abs(val - 1.0 / 384.0) < 1e-15

    def test_region1_value(self):
        b = verify.basis_region1(0.5)
        val = verify.symplectic_product(b.vectors["e2"], b.vectors["e3"])
        assert abs(val - 1.0 / 16.0) < 1e-15


class TestApplyK:
    def test_kernel_vector(self):
        for basis in (verify.basis_region1(0.5), verify.basis_region2()):
            img = verify.apply_K(basis.vectors["e1"], basis.beta0,
                                 basis.gamma0)
            assert verify.state_distance(img, SpatialState.zero()) < 1e-14

    def test_region1_chain_with_a4(self):
        basis = verify.basis_region1(0.5)
        assert abs(basis.info["A4"] - 1.0 / 12.0) < 1e-15
        img = verify.apply_K(basis.vectors["e3"], 0.5, 2.0)
        assert verify.state_distance(img, basis.vectors["e2"]) < 1e-10

    def test_region3_eigenvector(self):
        basis = verify.basis_region3(1.0)
        e = basis.vectors["e"]
        img = verify.apply_K(e, basis.beta0, basis.gamma0)
        shifted = img.plus(e.scaled(-1j))
        assert verify.state_distance(shifted, SpatialState.zero()) < 1e-10

    def test_missing_derivative_data(self):
        state = SpatialState(0.0, 0.0, RadialFunction(lambda r: r * r),
                             RadialFunction.zero())
        with pytest.raises(MissingDerivativeData):
            verify.apply_K(state, 0.5, 2.0)


class TestBases:
    def test_all_pairings_and_chains(self):
        for basis in verify._all_bases():
            for chk in verify._pairing_checks(basis):
                assert chk["passed"], chk
            for chk in verify._chain_checks(basis):
                assert chk["passed"], chk

    def test_normalised_canonical(self):
        basis = verify.basis_region2()
        for u, v, val in basis.normalized_pairings:
            got = verify.symplectic_product(basis.normalized[u],
                                            basis.normalized[v])
            assert abs(got - val) < 1e-12

    def test_region3_tau1_pairing(self):
        basis = verify.basis_region3(1.0)
        got = verify.symplectic_product(basis.vectors["e"],
                                        basis.vectors["f_bar"])
        assert abs(got - basis.info["tau1"]) < 1e-9

    def test_region3_degenerate(self):
        with pytest.raises(TauDegenerate):
            verify.basis_region3(3e-3)

    def test_region1_requires_beta_above_quarter(self):
        with pytest.raises(InputError):
            verify.basis_region1(0.2)


class TestReversibility:
    def test_trivial_state_fixed(self):
        s = SpatialState.zero()
        assert verify.state_distance(s.reversed_by_S(), s) == 0.0

    def test_flips_omega_and_phi(self):
        basis = verify.basis_region2()
        e5 = basis.vectors["e5"]
        flipped = e5.reversed_by_S()
        assert flipped.omega == -e5.omega == 1.0 / 192.0

    def test_anticommutation_all_bases(self):
        for basis in verify._all_bases():
            for chk in verify.reversibility_check(basis):
                assert chk["passed"], chk


class TestTaylorChecks:
    def test_region1_linear(self):
        rec = verify.taylor_coefficient_check("i", LIN, "I.c1", beta0=0.5)
        assert abs(rec["numeric"] + 14.0 / 3.0) < 1e-5
        assert rec["relative_error"] < 1e-6

    @pytest.mark.parametrize("law", LAWS, ids=str)
    def test_full_suite_across_laws(self, law):
        for chk in verify.taylor_suite(law):
            assert chk["passed"], chk

    def test_c1_10_absolute(self):
        for law in LAWS:
            rec = verify.taylor_coefficient_check("ii", law, "II.c1_10")
            assert abs(rec["numeric"]) < 1e-8

    def test_unknown_tag(self):
        with pytest.raises(InputError):
            verify.taylor_coefficient_check("i", LIN, "I.bogus")


class TestSuiteRunner:
    def test_all_passes(self):
        checks = verify.run_suites("all")
        assert all(c["passed"] for c in checks)
        assert {c["suite"] for c in checks} == {"omega", "chains",
                                                "reversibility", "taylor"}

    def test_unknown_suite(self):
        with pytest.raises(InputError):
            verify.run_suites("bogus")
