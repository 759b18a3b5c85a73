"""Reconstruction of physical surface profiles eta(z) from reduced orbits.

Two amplitude conventions are shipped.  ``basis_consistent`` (the default)
uses the eta-component of the canonically normalised basis vector carrying
the slow coordinate, so the reduction formulas and the energy-functional
checks agree exactly.  ``paper_literal`` applies the traditionally quoted
prefactors (1/2 mu (beta0-1/4)^(1/2) in region I, 1/2 mu^4 in region II);
the two differ by a constant positive factor, so wave classification is
convention-independent.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateProfile, InputError, MismatchedSystem

_CONVENTIONS = ("basis_consistent", "paper_literal")


@dataclass
class WaveProfile:
    z: np.ndarray
    eta: np.ndarray
    region: str  # "i" | "i-cubic" | "ii" | "ii-cubic" | "iii"
    wave_type: str
    convention: str


def _check_convention(convention):
    if convention not in _CONVENTIONS:
        raise InputError(f"convention must be one of {_CONVENTIONS}, "
                         f"got {convention!r}")


def _classify_values(eta):
    if not np.any(eta != 0.0):
        return "degenerate"
    i = int(np.argmax(np.abs(eta)))
    return "elevation" if eta[i] > 0.0 else "depression"


def eta_region1(orbit, mu, beta0, convention="basis_consistent"):
    """Surface profile from a planar orbit near the gamma0 = 2 curve.

    Axial scaling z = Z * (beta0 - 1/4)^(1/2) / mu^(1/2); amplitude mu * Q
    for the quadratic regime and mu^(1/2) * Q for the cubic regime
    (basis-consistent), times the extra factor (beta0 - 1/4)^(1/2)/2 in the
    literal convention.
    """
    _check_convention(convention)
    if not mu > 0.0:
        raise InputError(f"mu must be positive, got {mu}")
    if not beta0 > 0.25:
        raise InputError(f"region I requires beta0 > 1/4, got {beta0}")
    if orbit.system.get("kind") != "planar":
        raise MismatchedSystem("region I reconstruction needs a planar orbit")
    if mu > 0.2:
        import warnings
        warnings.warn(f"mu = {mu} is outside the small-amplitude regime",
                      stacklevel=2)
    bm = math.sqrt(beta0 - 0.25)
    cubic = orbit.system.get("b", 0.0) != 0.0
    amp = math.sqrt(mu) if cubic else mu
    if convention == "paper_literal":
        amp *= 0.5 * bm
    z = orbit.grid * bm / math.sqrt(mu)
    eta = amp * orbit.u
    region = "i-cubic" if cubic else "i"
    return WaveProfile(z=z, eta=eta, region=region,
                       wave_type=_classify_values(eta), convention=convention)


def eta_region2(orbit, mu, convention="basis_consistent"):
    """Surface profile from a fourth-order orbit near the codimension-two point.

    Axial scaling z = Z/mu; amplitude 4*sqrt(6)*mu^4*P1 (quadratic regime) or
    4*sqrt(6)*mu^2*P1 (cubic regime) in the basis-consistent convention, with
    prefactor 1/2 instead of 4*sqrt(6) in the literal convention.
    """
    _check_convention(convention)
    if not mu > 0.0:
        raise InputError(f"mu must be positive, got {mu}")
    if orbit.system.get("kind") != "fourth_order":
        raise MismatchedSystem("region II reconstruction needs a fourth-order orbit")
    cubic = orbit.system.get("b", 0.0) != 0.0
    amp = mu ** 2 if cubic else mu ** 4
    amp *= 0.5 if convention == "paper_literal" else 4.0 * math.sqrt(6.0)
    z = orbit.grid / mu
    eta = amp * orbit.u
    region = "ii-cubic" if cubic else "ii"
    return WaveProfile(z=z, eta=eta, region=region,
                       wave_type=_classify_values(eta), convention=convention)


def eta_region3(envelope, s, theta):
    """Modulated wavetrain 2 * tau1^(-1/2) * I1(s) * a(z) * cos(s z + theta).

    The two reversible phases are theta = 0 (elevation) and theta = pi
    (depression).
    """
    if envelope.system.get("kind") != "nls":
        raise MismatchedSystem("region III reconstruction needs an envelope orbit")
    if not s > 0.0:
        raise InputError(f"s must be positive, got {s}")
    from .coefficients import tau_constants
    from .specfun import bessel_i

    tau1, _ = tau_constants(s)  # law-independent normalisation
    if tau1 <= 0.0:
        raise InputError(f"tau1 = {tau1:g} is not positive at s = {s}")
    z = envelope.grid
    carrier_step = 2.0 * math.pi / s / 40.0
    h = float(z[1] - z[0])
    if h > carrier_step:
        fine = np.arange(z[0], z[-1] + 0.5 * carrier_step, carrier_step)
        a_vals = np.interp(fine, z, envelope.u)
        z = fine
    else:
        a_vals = envelope.u
    eta = 2.0 / math.sqrt(tau1) * bessel_i(1, s) * a_vals * np.cos(s * z + theta)
    return WaveProfile(z=z, eta=eta, region="iii",
                       wave_type=_classify_values(eta), convention="basis_consistent")


def classify_wave(profile):
    """Polarity of a profile: sign of its largest-magnitude extremum."""
    kind = _classify_values(np.asarray(profile.eta))
    if kind == "degenerate":
        raise DegenerateProfile("profile is identically zero")
    return kind
