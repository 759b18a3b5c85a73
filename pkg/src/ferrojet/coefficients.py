"""Closed-form normal-form coefficients for the three bifurcation regions.

Region I sits on the curve c4 (gamma0 = 2, alpha0 = 2 + beta0, beta0 > 1/4),
region II at the codimension-two point (beta0, alpha0) = (1/4, 9/4), and
region III on the curve c2 at parameter s.  Wave polarity follows the sign
of the leading nonlinear coefficient.
"""

import math
from dataclasses import dataclass, field

from . import magnetisation, spectrum
from .errors import InputError, TauDegenerate
from .specfun import bessel_i

SQRT6 = math.sqrt(6.0)

# law-independent constants of the region II normal form
C1_10 = 0.0
C4_10 = -16.0
C1_20 = 512.0
C1_01 = -48.0
C5 = -144.0 * SQRT6 / 5.0


@dataclass
class RegionICoefficients:
    beta0: float
    alpha0: float
    c_check: float
    d_check: float
    c1: float
    c1_1: float
    d1: float
    kappa: float = 0.0
    kappa_check: float = None


@dataclass
class RegionIICoefficients:
    c1: float
    d1: float
    c1_10: float = C1_10
    c4_10: float = C4_10
    c1_20: float = C1_20
    c1_01: float = C1_01
    c5: float = C5


@dataclass
class RegionIIICoefficients:
    s: float
    point: spectrum.ParameterPoint
    S_ratio: float
    T_ratio: float
    tau1: float
    tau2: float
    c2_1: float
    d4: float
    exists: bool
    d4_groups: dict = field(default_factory=dict, repr=False)


def region1(beta0, law, mu=None):
    """Normal-form coefficients on the curve c4 at beta0 > 1/4."""
    if not beta0 > 0.25:
        raise InputError(f"region I requires beta0 > 1/4, got {beta0}")
    alpha0 = 2.0 + beta0
    m1p, m1pp = magnetisation.m1_derivs_at_1(law)
    bm = beta0 - 0.25
    c_check = 0.5 * (alpha0 * m1p - 6.0)
    d_check = (12.0 - alpha0 * m1pp) / 6.0
    c1 = (alpha0 * m1p - 6.0) / (6.0 * bm ** 1.5)
    c1_1 = -0.5 / bm
    d1 = (12.0 - alpha0 * m1pp) / (24.0 * bm * bm)
    kappa, kappa_check = kappa_map_region1(m1p, alpha0, mu) if mu is not None \
        else (alpha0 * m1p - 6.0, None)
    return RegionICoefficients(beta0=beta0, alpha0=alpha0, c_check=c_check,
                               d_check=d_check, c1=c1, c1_1=c1_1, d1=d1,
                               kappa=kappa, kappa_check=kappa_check)


def region1_wave_type(c_check):
    """Polarity from the quadratic coefficient: elevation, depression or degenerate."""
    if c_check > 0.0:
        return "elevation"
    if c_check < 0.0:
        return "depression"
    return "degenerate"


def region2(law):
    """Normal-form coefficients at the codimension-two point (1/4, 9/4)."""
    m1p, m1pp = magnetisation.m1_derivs_at_1(law)
    c1 = 48.0 * SQRT6 * (3.0 * m1p - 8.0)
    d1 = 864.0 * (1264.0 / 75.0 - m1pp)
    return RegionIICoefficients(c1=c1, d1=d1)


def tau_constants(s):
    """Normalisation constants (tau1, tau2) of the region III basis."""
    if not s > 0.0:
        raise InputError(f"tau_constants requires s > 0, got {s}")
    i0 = bessel_i(0, s)
    i1 = bessel_i(1, s)
    tau1 = 2.0 * i0 * i0 - s * i0 ** 3 / i1 + s * i0 * i1 - i1 * i1
    tau2 = -(1.0 / 3.0) * ((2.0 / s) * (s * s - 3.0) * i0 * i0
                           - 3.0 * s * i0 ** 4 / (i1 * i1)
                           + 9.0 * i0 ** 3 / i1
                           - 5.0 * i0 * i1
                           + (1.0 / s) * (5.0 + s * s) * i1 * i1)
    return tau1, tau2


def region3(s, law):
    """Normal-form coefficients on the curve c2 at parameter s > 0."""
    if not s > 0.0:
        raise InputError(f"region III requires s > 0, got {s}")
    point = spectrum.curve_c2(s)
    beta0, gamma0 = point.beta0, point.gamma0
    alpha0 = point.alpha0
    i0 = bessel_i(0, s)
    i1 = bessel_i(1, s)
    S = i0 / i1
    T = bessel_i(0, 2.0 * s) / bessel_i(1, 2.0 * s)
    tau1, tau2 = tau_constants(s)
    if abs(tau1) < 1e-12:
        raise TauDegenerate(f"tau1 = {tau1:.3e} at s = {s} is numerically zero")
    c2_1 = -i1 * i1 / tau1

    # the long quartic coefficient, transcribed group by group
    m1p, m1pp = magnetisation.m1_derivs_at_1(law)
    A = alpha0 * m1p
    g1_left = -2.0 * s * s + s * s * beta0 - 2.0 * s * T + 4.0 * s * s * S * T - A
    g1_right = -2.0 * s * s - 2.0 * s * s * beta0 - s * S + 4.0 * s * s * S * T - A
    g1_den = 2.0 * (gamma0 + 4.0 * s * s * beta0 - 2.0 * s * T)
    g2_left = s * s * beta0 - 4.0 * s * S + 2.0 + A
    g2_right = 3.0 * s * S - A
    g2_den = gamma0 - 2.0
    g3 = (7.0 * s * s - 10.5 * s * s * beta0 + 1.5 * s ** 4 * beta0
          + 6.0 * s * S - 6.0 * s ** 3 * S + 4.0 * s ** 3 * S * S * T
          - 2.0 * s * s * S * T - 3.0 * A - 0.5 * alpha0 * m1pp)
    groups = {
        "g1_left": g1_left, "g1_right": g1_right, "g1_den": g1_den,
        "g2_left": g2_left, "g2_right": g2_right, "g2_den": g2_den,
        "g3": g3,
    }
    d4 = (i1 * i1 / (2.0 * tau1 * tau1)) * (
        g1_left * g1_right / g1_den - g2_left * g2_right / g2_den + g3)
    return RegionIIICoefficients(s=s, point=point, S_ratio=S, T_ratio=T,
                                 tau1=tau1, tau2=tau2, c2_1=c2_1, d4=d4,
                                 exists=(c2_1 < 0.0 and d4 > 0.0),
                                 d4_groups=groups)


def region2_parameter_map(mu, delta):
    """(eps1, eps2) offsets of (beta, alpha) for the region II scalings."""
    if not mu > 0.0:
        raise InputError(f"mu must be positive, got {mu}")
    mu1 = (1.0 + delta) * mu * mu / 48.0
    mu2 = mu ** 4 / 96.0
    return mu1, mu1 + mu2


def kappa_map_region1(m1p, alpha0, mu):
    """Detuning kappa = alpha0*m1'(1) - 6 and its scaled version kappa/(2*sqrt(mu))."""
    if not mu > 0.0:
        raise InputError(f"mu must be positive, got {mu}")
    kappa = alpha0 * m1p - 6.0
    return kappa, kappa / (2.0 * math.sqrt(mu))


def kappa_map_region2(m1p, mu):
    """Detuning kappa = 3*m1'(1) - 8 and its scaled version 144*sqrt(6)*kappa/mu^2."""
    if not mu > 0.0:
        raise InputError(f"mu must be positive, got {mu}")
    kappa = 3.0 * m1p - 8.0
    return kappa, 144.0 * SQRT6 * kappa / (mu * mu)
