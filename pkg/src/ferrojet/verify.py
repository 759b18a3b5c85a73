"""Independent verification layer.

Evaluates the explicit energy functional H, the symplectic form Omega and
the linearised operator K directly on analytic states, builds the
generalised-eigenvector bases of the three regions, and recovers the
closed-form normal-form coefficients by numerical Taylor extraction of H
along basis directions.  Everything is cross-checked against the formulas
in ``coefficients``.

Conventions: a state is (eta, omega, phi(r), zeta(r)) with the trivial
solution at the origin; the functional substitutes xi = zeta - 1
internally.  The region I normalisation is f_i = 2 (beta0 - 1/4)^(-1/2) e_i,
which makes Omega(f2, f3) = Omega(f4, f1) = 1 (canonical coordinates) and
reproduces the mu-linear quadratic coefficient -(1/2)(beta0 - 1/4)^(-1) by
direct extraction.
"""

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from . import coefficients, magnetisation, spectrum
from .errors import (DomainViolation, ExtrapolationUnstable, InputError,
                     MissingDerivativeData, StepUnderflow, TauDegenerate)
from .specfun import bessel_i, gauss_nodes, taylor_coefficient

_NODES, _WEIGHTS = gauss_nodes(0.0, 1.0)


class RadialFunction:
    """Radial profile on [0, 1] with analytic value/derivative evaluators."""

    def __init__(self, val, d1=None, d2=None):
        self.val = val
        self.d1 = d1
        self.d2 = d2

    def __call__(self, r):
        return self.val(r)

    @classmethod
    def zero(cls):
        return cls.constant(0.0)

    @classmethod
    def constant(cls, c):
        return cls(lambda r: c * np.ones_like(r),
                   lambda r: np.zeros_like(r),
                   lambda r: np.zeros_like(r))

    @classmethod
    def poly(cls, coeffs):
        p = np.polynomial.Polynomial(coeffs)
        p1 = p.deriv()
        p2 = p1.deriv()
        return cls(p, p1, p2)

    def scaled(self, c):
        d1 = (lambda r: c * self.d1(r)) if self.d1 is not None else None
        d2 = (lambda r: c * self.d2(r)) if self.d2 is not None else None
        return RadialFunction(lambda r: c * self.val(r), d1, d2)

    def plus(self, other):
        def combine(f, g):
            if f is None or g is None:
                return None
            return lambda r: f(r) + g(r)
        return RadialFunction(lambda r: self.val(r) + other.val(r),
                              combine(self.d1, other.d1),
                              combine(self.d2, other.d2))

    def conjugated(self):
        d1 = (lambda r: np.conj(self.d1(r))) if self.d1 is not None else None
        d2 = (lambda r: np.conj(self.d2(r))) if self.d2 is not None else None
        return RadialFunction(lambda r: np.conj(self.val(r)), d1, d2)

    def mapped(self, op):
        d1 = (lambda r: op(self.d1(r))) if self.d1 is not None else None
        d2 = (lambda r: op(self.d2(r))) if self.d2 is not None else None
        return RadialFunction(lambda r: op(self.val(r)), d1, d2)


@dataclass
class SpatialState:
    eta: complex
    omega: complex
    phi: RadialFunction
    zeta: RadialFunction
    label: str = ""

    @classmethod
    def zero(cls, label=""):
        return cls(0.0, 0.0, RadialFunction.zero(), RadialFunction.zero(), label)

    def scaled(self, c):
        return SpatialState(c * self.eta, c * self.omega,
                            self.phi.scaled(c), self.zeta.scaled(c), self.label)

    def plus(self, other):
        return SpatialState(self.eta + other.eta, self.omega + other.omega,
                            self.phi.plus(other.phi), self.zeta.plus(other.zeta))

    def conjugated(self):
        return SpatialState(np.conj(self.eta), np.conj(self.omega),
                            self.phi.conjugated(), self.zeta.conjugated(),
                            self.label + "_bar")

    def real_part(self):
        return SpatialState(np.real(self.eta), np.real(self.omega),
                            self.phi.mapped(np.real), self.zeta.mapped(np.real),
                            self.label + "_re")

    def imag_part(self):
        return SpatialState(np.imag(self.eta), np.imag(self.omega),
                            self.phi.mapped(np.imag), self.zeta.mapped(np.imag),
                            self.label + "_im")

    def reversed_by_S(self):
        """Image under the reverser (eta, omega, phi, zeta) -> (eta, -omega, -phi, zeta)."""
        return SpatialState(self.eta, -self.omega, self.phi.scaled(-1.0),
                            self.zeta, self.label + "_S")

    def sup_scale(self):
        vals = [abs(self.eta), abs(self.omega),
                float(np.max(np.abs(self.phi(_NODES)))),
                float(np.max(np.abs(self.zeta(_NODES))))]
        if self.phi.d1 is not None:
            vals.append(float(np.max(np.abs(self.phi.d1(_NODES)))))
        return max(vals)


def _integral(values):
    return np.sum(_WEIGHTS * values)


def hamiltonian(state, beta, alpha, law):
    """Explicit energy functional H(eta, omega, phi, zeta; beta, alpha)."""
    eta = state.eta
    if abs(np.imag(eta)) > 0 or abs(np.imag(state.omega)) > 0:
        raise InputError("the energy functional is defined for real states")
    eta = float(np.real(eta))
    omega = float(np.real(state.omega))
    one = 1.0 + eta
    if not one > 0.5:
        raise DomainViolation(f"1 + eta = {one} is not above 1/2")
    if state.phi.d1 is None:
        raise MissingDerivativeData("phi needs a first-derivative evaluator")
    r = _NODES
    phir = np.real(state.phi.d1(r))
    xi = np.real(state.zeta(r)) - 1.0
    core = 0.5 * (xi / one ** 2 + 1.0) ** 2 * one ** 2 * r - 0.5 * r * phir ** 2
    i_core = _integral(core)
    i_w = _integral(r * r * phir * xi)
    W = (omega + i_w / one) / one
    if not abs(W) < beta:
        raise DomainViolation(f"|W| = {abs(W)} is not below beta = {beta}")
    return (i_core + alpha * magnetisation.t_energy(law, eta)
            - one * math.sqrt(beta * beta - W * W) + 0.5 * beta * one * one)


def symplectic_product(u, v):
    """Omega(u, v) = omega_v eta_u - eta_v omega_u + int r (zeta_v phi_u - phi_v zeta_u)."""
    r = _NODES
    val = (v.omega * u.eta - v.eta * u.omega
           + _integral(r * (v.zeta(r) * u.phi(r) - v.phi(r) * u.zeta(r))))
    arr = np.asarray(val)
    return complex(arr) if np.iscomplexobj(arr) else float(arr)


def apply_K(state, beta0, gamma0):
    """Image of a state under the linearised operator at (beta0, gamma0)."""
    if state.phi.d1 is None or state.phi.d2 is None:
        raise MissingDerivativeData("apply_K needs phi with two derivative "
                                    "evaluators")
    r = _NODES
    i_phi = _integral(r * r * state.phi.d1(r))
    i_zeta = _integral(r * state.zeta(r))
    new_eta = (state.omega - i_phi) / beta0
    new_omega = -2.0 * i_zeta - 2.0 * state.eta + gamma0 * state.eta
    eta0 = state.eta
    zeta = state.zeta
    new_phi = RadialFunction(lambda rr: zeta(rr) + 2.0 * eta0, zeta.d1, zeta.d2)
    phi = state.phi
    const = (2.0 / beta0) * (state.omega - i_phi)
    new_zeta = RadialFunction(lambda rr: -phi.d2(rr) - phi.d1(rr) / rr - const)
    return SpatialState(new_eta, new_omega, new_phi, new_zeta,
                        label=f"K[{state.label}]")


def state_distance(u, v):
    """Sup-norm distance over the scalar components and the quadrature nodes."""
    r = _NODES
    return max(abs(u.eta - v.eta), abs(u.omega - v.omega),
               float(np.max(np.abs(u.phi(r) - v.phi(r)))),
               float(np.max(np.abs(u.zeta(r) - v.zeta(r)))))


def boundary_residual(state, beta0):
    """Residual of the linearised boundary condition at r = 1."""
    if state.phi.d1 is None:
        raise MissingDerivativeData("boundary check needs phi'")
    r = _NODES
    i_phi = _integral(r * r * state.phi.d1(r))
    one = np.asarray([1.0])
    return abs(complex(state.phi.d1(one)[0] + (state.omega - i_phi) / beta0))


# ---------------------------------------------------------------------------
# bases
# ---------------------------------------------------------------------------


@dataclass
class BasisSet:
    region: str
    beta0: float
    gamma0: float
    vectors: dict
    normalized: dict
    pairings: list  # (name_u, name_v, expected value) nonzero entries
    normalized_pairings: list
    chains: list  # (vector name, expected image name or None, shift)
    info: dict = field(default_factory=dict)


def basis_region1(beta0):
    """Jordan-chain basis on the gamma0 = 2 line for beta0 > 1/4."""
    if not beta0 > 0.25:
        raise InputError(f"region I basis requires beta0 > 1/4, got {beta0}")
    bm = beta0 - 0.25
    a4 = -(1.0 / bm) * (1.0 / 24.0 + 0.25 * beta0 * (beta0 - 1.0))
    e1 = SpatialState(0.0, 0.0, RadialFunction.constant(1.0),
                      RadialFunction.zero(), "e1")
    e2 = SpatialState(0.5, 0.0, RadialFunction.zero(),
                      RadialFunction.zero(), "e2")
    e3 = SpatialState(0.0, 0.5 * bm, RadialFunction.poly([a4, 0.0, -0.25]),
                      RadialFunction.zero(), "e3")
    e4 = SpatialState(0.25 * (beta0 - 0.5) + 0.5 * a4, 0.0,
                      RadialFunction.zero(),
                      RadialFunction.poly([-0.5 * (beta0 - 0.5), 0.0, -0.25]),
                      "e4")
    norm = 2.0 / math.sqrt(bm)
    vectors = {"e1": e1, "e2": e2, "e3": e3, "e4": e4}
    normalized = {f"f{i}": vectors[f"e{i}"].scaled(norm) for i in range(1, 5)}
    return BasisSet(
        region="i", beta0=beta0, gamma0=2.0, vectors=vectors,
        normalized=normalized,
        pairings=[("e1", "e4", -0.25 * bm), ("e2", "e3", 0.25 * bm)],
        normalized_pairings=[("f2", "f3", 1.0), ("f4", "f1", 1.0)],
        chains=[("e1", None, 0.0), ("e2", "e1", 0.0), ("e3", "e2", 0.0),
                ("e4", "e3", 0.0)],
        info={"A4": a4, "normalisation": norm})


def basis_region2():
    """Jordan-chain basis at the codimension-two point (1/4, 2)."""
    e1 = SpatialState(0.0, 0.0, RadialFunction.constant(1.0),
                      RadialFunction.zero(), "e1")
    e2 = SpatialState(0.5, 0.0, RadialFunction.zero(), RadialFunction.zero(),
                      "e2")
    e3 = SpatialState(0.0, 0.0, RadialFunction.poly([3.0 / 32.0, 0.0, -0.25]),
                      RadialFunction.zero(), "e3")
    e4 = SpatialState(-1.0 / 64.0, 0.0, RadialFunction.zero(),
                      RadialFunction.poly([0.125, 0.0, -0.25]), "e4")
    e5 = SpatialState(0.0, -1.0 / 192.0,
                      RadialFunction.poly([87.0 / 10240.0, 0.0, -3.0 / 128.0,
                                           0.0, 1.0 / 64.0]),
                      RadialFunction.zero(), "e5")
    e6 = SpatialState(-33.0 / 20480.0, 0.0, RadialFunction.zero(),
                      RadialFunction.poly([3.0 / 256.0, 0.0, -3.0 / 128.0,
                                           0.0, 1.0 / 64.0]), "e6")
    norm = 8.0 * math.sqrt(6.0)
    vectors = {f"e{i}": v for i, v in enumerate((e1, e2, e3, e4, e5, e6), 1)}
    normalized = {f"f{i}": vectors[f"e{i}"].scaled(norm) for i in range(1, 7)}
    return BasisSet(
        region="ii", beta0=0.25, gamma0=2.0, vectors=vectors,
        normalized=normalized,
        pairings=[("e1", "e6", 1.0 / 384.0), ("e2", "e5", -1.0 / 384.0),
                  ("e3", "e4", 1.0 / 384.0)],
        normalized_pairings=[("f1", "f6", 1.0), ("f5", "f2", 1.0),
                             ("f3", "f4", 1.0)],
        chains=[("e1", None, 0.0)] + [(f"e{j}", f"e{j-1}", 0.0)
                                      for j in range(2, 7)],
        info={"normalisation": norm})


def _bessel_radial(s, kind):
    """Radial factories for the region III eigenvectors (argument s*r)."""
    if kind == "i0":
        return RadialFunction(
            lambda r: bessel_i(0, s * r),
            lambda r: s * bessel_i(1, s * r),
            lambda r: s * (s * bessel_i(0, s * r) - bessel_i(1, s * r) / r))
    if kind == "r_i1":
        return RadialFunction(
            lambda r: r * bessel_i(1, s * r),
            lambda r: s * r * bessel_i(0, s * r),
            lambda r: s * (bessel_i(0, s * r) + s * r * bessel_i(1, s * r)))
    raise InputError(f"unknown radial kind {kind!r}")


def basis_region3(s):
    """Resonance basis on the imaginary-collision curve at parameter s."""
    point = spectrum.curve_c2(s)
    beta0, gamma0 = point.beta0, point.gamma0
    tau1, tau2 = coefficients.tau_constants(s)
    if abs(tau1) < 1e-12:
        raise TauDegenerate(f"tau1 = {tau1:.3e} at s = {s}")
    i0 = bessel_i(0, s)
    i1 = bessel_i(1, s)
    i2 = bessel_i(2, s)
    i3 = bessel_i(3, s)

    e1 = SpatialState(0.0, 0.0, RadialFunction.constant(1.0),
                      RadialFunction.zero(), "e1")
    e2 = SpatialState(1.0 / gamma0, 0.0, RadialFunction.zero(),
                      RadialFunction.constant(1.0 - 2.0 / gamma0), "e2")

    phi_e = _bessel_radial(s, "i0").scaled(-1j)
    zeta_e = _bessel_radial(s, "i0").scaled(s).plus(
        RadialFunction.constant(-2.0 * i1))
    e = SpatialState(i1, 1j * (s * beta0 * i1 - i2), phi_e, zeta_e, "e")

    # bracket part of f; the omega component carries s*beta0*I0(s)
    phi_br = _bessel_radial(s, "r_i1").scaled(-1.0)
    zeta_br = _bessel_radial(s, "i0").plus(_bessel_radial(s, "r_i1").scaled(s))
    zeta_br = zeta_br.plus(RadialFunction.constant(-2.0 * i0 + 2.0 * i1 / s))
    zeta_br = zeta_br.scaled(-1j)
    br = SpatialState(-1j * (i0 - i1 / s),
                      s * beta0 * i0 - 2.0 * i2 / s - i3,
                      phi_br, zeta_br, "f_bracket")
    f = br.plus(e.scaled(-1j * tau2 / (2.0 * tau1)))
    f.label = "f"

    sq = math.sqrt(tau1) if tau1 > 0.0 else cmath.sqrt(tau1)
    E = e.scaled(1.0 / sq)
    E.label = "E"
    F = f.scaled(1.0 / sq)
    F.label = "F"

    omega12 = 0.5 - 1.0 / gamma0
    c12 = 1.0 / math.sqrt(abs(omega12))
    f1 = e1.scaled(math.copysign(c12, omega12))
    f2 = e2.scaled(c12)

    vectors = {"e1": e1, "e2": e2, "e": e, "e_bar": e.conjugated(),
               "f": f, "f_bar": f.conjugated()}
    normalized = {"f1": f1, "f2": f2, "E": E, "E_bar": E.conjugated(),
                  "F": F, "F_bar": F.conjugated()}
    return BasisSet(
        region="iii", beta0=beta0, gamma0=gamma0, vectors=vectors,
        normalized=normalized,
        pairings=[("e1", "e2", omega12), ("e", "f_bar", tau1),
                  ("e_bar", "f", tau1)],
        normalized_pairings=[("f1", "f2", 1.0), ("E", "F_bar", 1.0),
                             ("E_bar", "F", 1.0)],
        chains=[("e1", None, 0.0), ("e2", "e1", 0.0), ("e", None, s),
                ("f", "e", s)],
        info={"tau1": tau1, "tau2": tau2, "s": s, "point": point})


def chain_residual(basis, name, expected, shift):
    """Residual of (K - i*shift) v = expected (or 0) for a basis vector."""
    v = basis.vectors[name]
    img = apply_K(v, basis.beta0, basis.gamma0)
    if shift:
        img = img.plus(v.scaled(-1j * shift))
    target = basis.vectors[expected] if expected else SpatialState.zero()
    return state_distance(img, target)


def reversibility_check(basis):
    """Anti-commutation K S + S K = 0 on every basis vector."""
    out = []
    for name, v in basis.vectors.items():
        lhs = apply_K(v.reversed_by_S(), basis.beta0, basis.gamma0)
        rhs = apply_K(v, basis.beta0, basis.gamma0).reversed_by_S()
        resid = state_distance(lhs, rhs.scaled(-1.0))
        out.append({"suite": "reversibility", "region": basis.region,
                    "name": f"KS+SK on {name}", "numeric": resid,
                    "reference": 0.0, "error": resid,
                    "passed": resid < 1e-10})
    return out


# ---------------------------------------------------------------------------
# Taylor extraction of the normal-form coefficients from H
# ---------------------------------------------------------------------------

# The functional is exactly linear in alpha, and along the eta-only
# extraction directions (where W = 0) exactly linear in beta as well, so the
# central parameter difference below carries no truncation error at any step
# size.  A wide step divides the amplitude-extraction noise (~1e-10) down to
# the 1e-9 level.
_MU_STEP = 5e-2


def _amplitude_coefficient(direction, k, law, beta, alpha, h0=1e-2):
    """k-th Taylor coefficient of t -> H(t * direction) at t = 0."""
    scale = direction.sup_scale()
    unit = direction.scaled(1.0 / scale)
    h_at_zero = -0.5 * beta  # H of the trivial state

    def g(t):
        if t == 0.0:
            return 0.0
        return hamiltonian(unit.scaled(t), beta, alpha, law) - h_at_zero

    try:
        coeff = taylor_coefficient(g, k, h0=h0)
    except StepUnderflow as exc:
        raise ExtrapolationUnstable(str(exc)) from exc
    return coeff * scale ** k


def _mu_derivative_of_quadratic(direction, law, beta0, alpha0,
                                d_beta, d_alpha):
    """d/dmu of the quadratic amplitude coefficient along (d_beta, d_alpha)."""
    h = _MU_STEP
    cp = _amplitude_coefficient(direction, 2, law,
                                beta0 + h * d_beta, alpha0 + h * d_alpha)
    cm = _amplitude_coefficient(direction, 2, law,
                                beta0 - h * d_beta, alpha0 - h * d_alpha)
    return (cp - cm) / (2.0 * h)


_TAGS = ("I.c1", "I.c1_1", "II.c1", "II.c1_01", "II.c1_10", "III.c2_1",
         "III.tau1")


def taylor_coefficient_check(region, law, which, beta0=0.5, s=1.0):
    """Numeric-vs-formula record for one coefficient tag.

    ``relative_error`` is |numeric - formula| / |formula| when the formula is
    nonzero and the absolute difference otherwise.
    """
    if which not in _TAGS:
        raise InputError(f"unknown tag {which!r}; expected one of {_TAGS}")
    want_region = {"I": "i", "II": "ii", "III": "iii"}[which.split(".")[0]]
    if region.lower() not in (want_region, want_region.upper()):
        raise InputError(f"tag {which!r} belongs to region {want_region!r}, "
                         f"got {region!r}")
    if which.startswith("I."):
        basis = basis_region1(beta0)
        f2 = basis.normalized["f2"]
        alpha0 = 2.0 + beta0
        ref = coefficients.region1(beta0, law)
        if which == "I.c1":
            numeric = _amplitude_coefficient(f2, 3, law, beta0, alpha0)
            formula = ref.c1
        else:  # I.c1_1: mu enters through alpha only
            numeric = _mu_derivative_of_quadratic(f2, law, beta0, alpha0,
                                                  0.0, 1.0)
            formula = ref.c1_1
    elif which.startswith("II."):
        basis = basis_region2()
        f2 = basis.normalized["f2"]
        beta0_ii, alpha0_ii = 0.25, 2.25
        ref = coefficients.region2(law)
        if which == "II.c1":
            numeric = _amplitude_coefficient(f2, 3, law, beta0_ii, alpha0_ii)
            formula = ref.c1
        elif which == "II.c1_01":
            numeric = _mu_derivative_of_quadratic(f2, law, beta0_ii,
                                                  alpha0_ii, 0.0, 1.0)
            formula = ref.c1_01
        else:  # II.c1_10: mu1 shifts beta and alpha together
            numeric = _mu_derivative_of_quadratic(f2, law, beta0_ii,
                                                  alpha0_ii, 1.0, 1.0)
            formula = ref.c1_10
    else:
        basis = basis_region3(s)
        point = basis.info["point"]
        ref = coefficients.region3(s, law)
        if which == "III.tau1":
            numeric = symplectic_product(basis.vectors["e"],
                                         basis.vectors["f_bar"])
            numeric = float(np.real(numeric))
            formula = ref.tau1
        else:  # III.c2_1 = 2 H_2^1(E, E_bar) by polarisation
            E = basis.normalized["E"]
            re_part = _mu_derivative_of_quadratic(E.real_part(), law,
                                                  point.beta0, point.alpha0,
                                                  0.0, 1.0)
            im_part = _mu_derivative_of_quadratic(E.imag_part(), law,
                                                  point.beta0, point.alpha0,
                                                  0.0, 1.0)
            numeric = 2.0 * (re_part + im_part)
            formula = ref.c2_1
    err = abs(numeric - formula)
    rel = err / abs(formula) if abs(formula) > 1e-9 else err
    return {"which": which, "numeric": numeric, "formula": formula,
            "relative_error": rel}


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------


def _pairing_checks(basis, tol=1e-12):
    out = []
    expected = {}
    for u, v, val in basis.pairings:
        expected[(u, v)] = val
        expected[(v, u)] = -val
    names = list(basis.vectors)
    for i, u in enumerate(names):
        for v in names[i + 1:]:
            ref = expected.get((u, v), 0.0)
            num = symplectic_product(basis.vectors[u], basis.vectors[v])
            err = abs(num - ref)
            out.append({"suite": "omega", "region": basis.region,
                        "name": f"Omega({u},{v})", "numeric": num,
                        "reference": ref, "error": err, "passed": err < tol})
    for u, v, val in basis.normalized_pairings:
        num = symplectic_product(basis.normalized[u], basis.normalized[v])
        err = abs(num - val)
        out.append({"suite": "omega", "region": basis.region,
                    "name": f"Omega({u},{v})", "numeric": num,
                    "reference": val, "error": err, "passed": err < tol})
    return out


def _chain_checks(basis, tol=1e-10):
    out = []
    for name, expected, shift in basis.chains:
        resid = chain_residual(basis, name, expected, shift)
        target = expected if expected else "0"
        op = f"(K - {shift:g} i)" if shift else "K"
        out.append({"suite": "chains", "region": basis.region,
                    "name": f"{op} {name} = {target}", "numeric": resid,
                    "reference": 0.0, "error": resid, "passed": resid < tol})
    for name, v in basis.vectors.items():
        resid = boundary_residual(v, basis.beta0)
        out.append({"suite": "chains", "region": basis.region,
                    "name": f"boundary condition on {name}", "numeric": resid,
                    "reference": 0.0, "error": resid, "passed": resid < tol})
    return out


def _all_bases(beta0_list=(0.5, 1.0), s_list=(0.5, 1.0, 2.0)):
    bases = [basis_region1(b) for b in beta0_list]
    bases.append(basis_region2())
    bases.extend(basis_region3(s) for s in s_list)
    return bases


def omega_suite(beta0_list=(0.5, 1.0), s_list=(0.5, 1.0, 2.0)):
    out = []
    for basis in _all_bases(beta0_list, s_list):
        out.extend(_pairing_checks(basis))
    return out


def chain_suite(beta0_list=(0.5, 1.0), s_list=(0.5, 1.0, 2.0)):
    out = []
    for basis in _all_bases(beta0_list, s_list):
        out.extend(_chain_checks(basis))
    return out


def reversibility_suite(beta0_list=(0.5, 1.0), s_list=(0.5, 1.0, 2.0)):
    out = []
    for basis in _all_bases(beta0_list, s_list):
        out.extend(reversibility_check(basis))
    return out


def taylor_suite(law, beta0_list=(0.5, 1.0), s_list=(0.5, 1.0, 2.0)):
    out = []
    for tag in ("I.c1", "I.c1_1"):
        for b in beta0_list:
            rec = taylor_coefficient_check("i", law, tag, beta0=b)
            tol = 1e-5
            out.append({"suite": "taylor", "region": "i",
                        "name": f"{tag} at beta0={b:g}",
                        "numeric": rec["numeric"], "reference": rec["formula"],
                        "error": rec["relative_error"],
                        "passed": rec["relative_error"] < tol})
    for tag in ("II.c1", "II.c1_01", "II.c1_10"):
        rec = taylor_coefficient_check("ii", law, tag)
        tol = 1e-8 if tag == "II.c1_10" else 1e-5
        out.append({"suite": "taylor", "region": "ii", "name": tag,
                    "numeric": rec["numeric"], "reference": rec["formula"],
                    "error": rec["relative_error"],
                    "passed": rec["relative_error"] < tol})
    for tag in ("III.c2_1", "III.tau1"):
        for s in s_list:
            rec = taylor_coefficient_check("iii", law, tag, s=s)
            tol = 1e-5 if tag == "III.c2_1" else 1e-9
            out.append({"suite": "taylor", "region": "iii",
                        "name": f"{tag} at s={s:g}",
                        "numeric": rec["numeric"], "reference": rec["formula"],
                        "error": rec["relative_error"],
                        "passed": rec["relative_error"] < tol})
    return out


def run_suites(which="all", law=None):
    """Run the named verification suite(s); returns a list of check records."""
    if law is None:
        law = magnetisation.linear_law()
    suites = {
        "omega": lambda: omega_suite(),
        "chains": lambda: chain_suite(),
        "reversibility": lambda: reversibility_suite(),
        "taylor": lambda: taylor_suite(law),
    }
    if which == "all":
        out = []
        for fn in suites.values():
            out.extend(fn())
        return out
    if which not in suites:
        raise InputError(f"unknown suite {which!r}; expected one of "
                         f"{tuple(suites) + ('all',)}")
    return suites[which]()
