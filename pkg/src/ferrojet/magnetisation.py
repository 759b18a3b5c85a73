"""Dimensionless magnetisation laws and the derived potentials nu and T.

A law is the normalised intensity m1(s) with m1(1) = 1.  Built-ins: the
linear law m1(s) = s and the Langevin law
m1(s) = (coth(lam*s) - 1/(lam*s)) / (coth(lam) - 1/lam).  Custom laws carry
their first two derivatives at s = 1 explicitly (and optionally an
evaluator, without which only derivative-based operations are available).
"""

import math
import warnings
from dataclasses import dataclass, field

from . import specfun
from .errors import InputError, OutOfRange


@dataclass(frozen=True)
class MagnetisationLaw:
    kind: str  # "linear" | "langevin" | "custom"
    lam: float = 0.0
    m1_callable: object = field(default=None, repr=False)
    m1p1: float = 0.0
    m1pp1: float = 0.0
    name: str = ""

    def __str__(self):
        return self.name or self.kind


def linear_law():
    return MagnetisationLaw(kind="linear", m1p1=1.0, m1pp1=0.0, name="linear")


def langevin_law(lam):
    if not lam > 0.0:
        raise InputError(f"Langevin parameter must be positive, got {lam}")
    return MagnetisationLaw(kind="langevin", lam=float(lam), name=f"langevin({lam:g})")


def custom_law(m1p1, m1pp1, m1=None, name="custom"):
    """Custom law from its derivatives at s=1, optionally with an evaluator.

    When an evaluator is supplied it must satisfy m1(1) = 1; nonnegativity is
    sampled and reported as a warning only.
    """
    law = MagnetisationLaw(kind="custom", m1_callable=m1,
                           m1p1=float(m1p1), m1pp1=float(m1pp1), name=name)
    if m1 is not None:
        if abs(m1(1.0) - 1.0) > 1e-12:
            raise InputError(f"custom law violates m1(1)=1: m1(1)={m1(1.0)!r}")
        samples = [m1(0.1 * k) for k in range(1, 31)]
        if any(v < 0.0 for v in samples):
            warnings.warn("custom m1 takes negative values on (0, 3]", stacklevel=2)
    return law


# -- Langevin helper: L(x) = coth x - 1/x and derivatives --------------------
# Series branch below 0.2 avoids the coth-x ~ 1/x cancellation.

_SERIES_CUT = 0.2


def _langevin_L(x):
    if abs(x) < _SERIES_CUT:
        x2 = x * x
        return x * (1.0 / 3.0 + x2 * (-1.0 / 45.0 + x2 * (2.0 / 945.0
                    + x2 * (-1.0 / 4725.0 + x2 * (2.0 / 93555.0
                    - x2 * 1382.0 / 638512875.0)))))
    return 1.0 / math.tanh(x) - 1.0 / x


def _langevin_Lp(x):
    if abs(x) < _SERIES_CUT:
        x2 = x * x
        return (1.0 / 3.0 + x2 * (-1.0 / 15.0 + x2 * (2.0 / 189.0
                + x2 * (-1.0 / 675.0 + x2 * 6.0 / 31185.0))))
    s = math.sinh(x)
    return 1.0 / (x * x) - 1.0 / (s * s)


def _langevin_Lpp(x):
    if abs(x) < _SERIES_CUT:
        x2 = x * x
        return x * (-2.0 / 15.0 + x2 * (8.0 / 189.0 + x2 * (-2.0 / 225.0
                    + x2 * 48.0 / 31185.0)))
    s = math.sinh(x)
    return -2.0 / (x * x * x) + 2.0 * math.cosh(x) / (s * s * s)


def m1(law, s):
    """Law value m1(s) for s > 0."""
    if not s > 0.0:
        raise InputError(f"m1 requires s > 0, got {s}")
    if law.kind == "linear":
        return float(s)
    if law.kind == "langevin":
        return _langevin_L(law.lam * s) / _langevin_L(law.lam)
    if law.m1_callable is None:
        raise InputError("custom law has no evaluator; only derivative-based "
                         "operations are available")
    return float(law.m1_callable(s))


def m1_derivs_at_1(law):
    """(m1'(1), m1''(1)); closed forms for the built-in laws."""
    if law.kind == "linear":
        return 1.0, 0.0
    if law.kind == "langevin":
        lam = law.lam
        L = _langevin_L(lam)
        return lam * _langevin_Lp(lam) / L, lam * lam * _langevin_Lpp(lam) / L
    return law.m1p1, law.m1pp1


def nu(law, s):
    """Magnetic potential nu(s) = integral of m1 over [0, s]."""
    if s < 0.0:
        raise InputError(f"nu requires s >= 0, got {s}")
    if s == 0.0:
        return 0.0
    if law.kind == "linear":
        return 0.5 * s * s
    return specfun.quadrature(lambda t: m1(law, t), 0.0, s)


def _t_integrand(law, nu1):
    def g(x):
        return (nu(law, 1.0 / (1.0 + x)) - nu1) * (1.0 + x)
    return g


def t_energy(law, eta):
    """Surface magnetic energy T(eta) for eta > -1."""
    if not eta > -1.0:
        raise InputError(f"t_energy requires eta > -1, got {eta}")
    if eta == 0.0:
        return 0.0
    nu1 = nu(law, 1.0)
    g = _t_integrand(law, nu1)
    if eta > 0.0:
        return specfun.quadrature(g, 0.0, eta)
    return -specfun.quadrature(g, eta, 0.0)


def t_prime(law, eta):
    """T'(eta) = (nu(1/(1+eta)) - nu(1)) * (1+eta)."""
    if not eta > -1.0:
        raise InputError(f"t_prime requires eta > -1, got {eta}")
    return (nu(law, 1.0 / (1.0 + eta)) - nu(law, 1.0)) * (1.0 + eta)


def langevin_lambda_star(alpha0):
    """Unique lam > 0 where the Langevin m1'(1) equals 6/alpha0.

    m1'(1; lam) decreases monotonically from 1 to 0, so a root exists exactly
    when alpha0 > 6.
    """
    if not alpha0 > 6.0:
        raise OutOfRange(f"lambda_star requires alpha0 > 6, got {alpha0}")
    target = 6.0 / alpha0

    def g(lam):
        return lam * _langevin_Lp(lam) / _langevin_L(lam) - target

    hi = 1.0
    while g(hi) > 0.0:
        hi *= 2.0
        if hi > 1e6:  # pragma: no cover - monotone decay guarantees exit
            raise OutOfRange("no Langevin threshold found below lam=1e6")
    lo = 1e-8
    if g(lo) <= 0.0:
        # alpha0 is within float rounding of the boundary value 6
        return lo
    return specfun.find_root(g, lo, hi, tol=1e-13)


def nondimensionalize(J, R, c, sigma, mu0, chi):
    """Dimensionless (alpha, beta) from the physical quantities."""
    vals = {"J": J, "R": R, "c": c, "sigma": sigma, "mu0": mu0, "chi": chi}
    for k, v in vals.items():
        if not v > 0.0:
            raise InputError(f"nondimensionalize requires {k} > 0, got {v}")
    alpha = mu0 * J * J * chi / (4.0 * math.pi ** 2 * R * R * c * c)
    beta = sigma / (c * c * R)
    return alpha, beta


def permeability(law, s):
    """Relative magnetic permeability 1 + m1(s)/s."""
    if not s > 0.0:
        raise InputError(f"permeability requires s > 0, got {s}")
    return 1.0 + m1(law, s) / s
