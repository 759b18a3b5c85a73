"""Dispersion-relation analysis of the linearised operator.

Real eigenvalues lam solve  lam*J0(lam) = (gamma0 - beta0*lam^2)*J1(lam);
purely imaginary eigenvalues i*s solve  s*I0(s) = (gamma0 + beta0*s^2)*I1(s).
The critical curves in the (beta0, gamma0) plane are

  c1: real-eigenvalue collision, parametrised by k in (0, j_{1,1}),
  c2: imaginary-eigenvalue collision, parametrised by s > 0,
  c3: gamma0 = 2 with beta0 < 1/4,
  c4: gamma0 = 2 with beta0 > 1/4,

and the zero eigenvalue has algebraic multiplicity 2 off gamma0 = 2, 4 on
gamma0 = 2 away from beta0 = 1/4, and 6 at (1/4, 2).
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import AtCodimensionTwo, InputError, OutOfRange, WindowTooCoarse
from .specfun import bessel_i, bessel_j, find_root, first_zero_j1

_CURVE_TAGS = ("c1", "c2", "c3", "c4")


@dataclass(frozen=True)
class ParameterPoint:
    beta0: float
    gamma0: float
    tag: str = ""

    def __post_init__(self):
        if not self.beta0 > 0.0:
            raise InputError(f"beta0 must be positive, got {self.beta0}")

    @property
    def alpha0(self):
        return self.beta0 + self.gamma0


@dataclass
class SpectrumReport:
    point: ParameterPoint
    imaginary_pair_count: int
    real_pair_count: int
    zero_multiplicity: int
    nearest_curves: dict = field(default_factory=dict)
    vanishing_order: float = 0.0


# -- dispersion functions (odd analytic extensions) --------------------------

def dispersion_real(pt, lam):
    """lam*J0(lam) - (gamma0 - beta0*lam^2)*J1(lam); odd in lam."""
    a = abs(lam)
    val = a * bessel_j(0, a) - (pt.gamma0 - pt.beta0 * a * a) * bessel_j(1, a)
    return val if lam >= 0.0 else -val


def dispersion_imag(pt, s):
    """s*I0(s) - (gamma0 + beta0*s^2)*I1(s); odd in s."""
    a = abs(s)
    val = a * bessel_i(0, a) - (pt.gamma0 + pt.beta0 * a * a) * bessel_i(1, a)
    return val if s >= 0.0 else -val


def dispersion_real_dlam(pt, lam):
    """Analytic lam-derivative of dispersion_real (J0' = -J1, J1' = J0 - J1/x)."""
    j0 = bessel_j(0, lam)
    j1 = bessel_j(1, lam)
    return (j0 - lam * j1 + 2.0 * pt.beta0 * lam * j1
            - (pt.gamma0 - pt.beta0 * lam * lam) * (j0 - j1 / lam))


def dispersion_imag_ds(pt, s):
    """Analytic s-derivative of dispersion_imag (I0' = I1, I1' = I0 - I1/x)."""
    i0 = bessel_i(0, s)
    i1 = bessel_i(1, s)
    return (i0 + s * i1 - 2.0 * pt.beta0 * s * i1
            - (pt.gamma0 + pt.beta0 * s * s) * (i0 - i1 / s))


# -- root counting ------------------------------------------------------------

def _count_roots(values, grid, f, step):
    roots = []
    sign = np.sign(values)
    for i in range(len(grid) - 1):
        if sign[i] == 0.0:
            roots.append(grid[i])
        elif sign[i] * sign[i + 1] < 0.0:
            roots.append(find_root(f, grid[i], grid[i + 1], tol=1e-12))
    # collapse jitter clusters (sign flicker around a tangency produces
    # several brackets within a step or two of the same location)
    clustered = []
    for r in roots:
        if clustered and r - clustered[-1] < 1.5 * step:
            continue
        clustered.append(r)
    for r0, r1 in zip(clustered, clustered[1:]):
        if r1 - r0 < 5.0 * step:
            raise WindowTooCoarse(
                f"roots at {r0:.6g} and {r1:.6g} closer than 5 scan steps "
                f"({step:g}); reduce the step")
    return len(clustered)


def count_imaginary_pairs(pt, s_max=30.0, step=1e-3):
    """Number of roots s > 0 of dispersion_imag in (0, s_max]."""
    if not (s_max > 0.0 and step > 0.0):
        raise InputError("window and step must be positive")
    n = int(s_max / step)
    if n < 2:
        return 0
    grid = step * np.arange(1, n + 1)
    i0 = bessel_i(0, grid)
    i1 = bessel_i(1, grid)
    vals = grid * i0 - (pt.gamma0 + pt.beta0 * grid * grid) * i1
    return _count_roots(vals, grid, lambda s: dispersion_imag(pt, s), step)


def count_real_pairs(pt, lam_max=15.0, step=1e-3):
    """Number of roots lam > 0 of dispersion_real in (0, lam_max]."""
    if not (lam_max > 0.0 and step > 0.0):
        raise InputError("window and step must be positive")
    n = int(lam_max / step)
    if n < 2:
        return 0
    grid = step * np.arange(1, n + 1)
    j0 = bessel_j(0, grid)
    j1 = bessel_j(1, grid)
    vals = grid * j0 - (pt.gamma0 - pt.beta0 * grid * grid) * j1
    return _count_roots(vals, grid, lambda x: dispersion_real(pt, x), step)


# -- critical curves ----------------------------------------------------------

def curve_c2(s):
    """Point of the imaginary-collision curve at parameter s > 0."""
    if not s > 0.0:
        raise InputError(f"curve_c2 requires s > 0, got {s}")
    i0 = bessel_i(0, s)
    i1 = bessel_i(1, s)
    i2 = bessel_i(2, s)
    beta0 = 0.5 * (1.0 - i0 * i2 / (i1 * i1))
    gamma0 = 0.5 * s * s * (i0 * i0 / (i1 * i1) - 1.0)
    return ParameterPoint(beta0, gamma0, tag="c2")


def curve_c1(k):
    """Point of the real-collision curve at parameter k in (0, j_{1,1})."""
    j11 = first_zero_j1()
    if not (0.0 < k < j11):
        raise OutOfRange(f"curve_c1 requires 0 < k < {j11:.10f}, got {k}")
    j0 = bessel_j(0, k)
    j1 = bessel_j(1, k)
    j2 = bessel_j(2, k)
    beta0 = 0.5 * (1.0 - j0 * j2 / (j1 * j1))
    gamma0 = k * k * (j0 * j0 + j1 * j1) / (2.0 * j1 * j1)
    return ParameterPoint(beta0, gamma0, tag="c1")


def curves_c3_c4(beta0):
    """Point of the gamma0 = 2 line, tagged c3 (beta0 < 1/4) or c4 (> 1/4)."""
    if not beta0 > 0.0:
        raise InputError(f"beta0 must be positive, got {beta0}")
    if beta0 == 0.25:
        raise AtCodimensionTwo("beta0 = 1/4 on gamma0 = 2 is the "
                               "codimension-two point")
    tag = "c3" if beta0 < 0.25 else "c4"
    return ParameterPoint(beta0, 2.0, tag=tag)


def zero_multiplicity(pt, tol=1e-12):
    """Algebraic multiplicity of the zero eigenvalue: 2, 4 or 6."""
    on_gamma2 = abs(pt.gamma0 - 2.0) <= tol
    at_quarter = abs(pt.beta0 - 0.25) <= tol
    if not on_gamma2:
        return 2
    return 6 if at_quarter else 4


def vanishing_order_imag(pt):
    """Log-log slope of |dispersion_imag| on s in [0.02, 0.3].

    The dispersion function is odd, so the order is 1, 3 or 5 and the zero
    eigenvalue's multiplicity equals the order plus one.  The fit window
    sits above the float64 cancellation floor of the quintic case (the
    leading term there is s^5/192, which would drown in rounding noise
    below s ~ 1e-3) while staying small enough for the leading power to
    dominate.
    """
    s = np.geomspace(0.02, 0.3, 25)
    v = np.abs([dispersion_imag(pt, x) for x in s])
    v = np.maximum(v, 1e-300)
    slope = np.polyfit(np.log(s), np.log(v), 1)[0]
    return float(slope)


# -- curve distances and classification --------------------------------------

def _refine_min(fun, t0, t1, iters=60):
    # golden-section minimisation of fun on [t0, t1]
    g = 0.5 * (np.sqrt(5.0) - 1.0)
    a, b = t0, t1
    c = b - g * (b - a)
    d = a + g * (b - a)
    fc, fd = fun(c), fun(d)
    for _ in range(iters):
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - g * (b - a)
            fc = fun(c)
        else:
            a, c, fc = c, d, fd
            d = a + g * (b - a)
            fd = fun(d)
    t = 0.5 * (a + b)
    return t, fun(t)


def curve_distance(pt, tag, samples=1200):
    """Euclidean distance from pt to one of the curves c1..c4."""
    b, g = pt.beta0, pt.gamma0
    if tag == "c3":
        bb = min(max(b, 1e-12), 0.25)
        return float(np.hypot(b - bb, g - 2.0))
    if tag == "c4":
        bb = max(b, 0.25)
        return float(np.hypot(b - bb, g - 2.0))
    if tag == "c1":
        j11 = first_zero_j1()
        lo, hi = 1e-3 * j11, 0.999 * j11
        curve = curve_c1
    elif tag == "c2":
        lo, hi = 1e-3, 12.0
        curve = curve_c2
    else:
        raise InputError(f"unknown curve tag {tag!r}")

    def dist2(t):
        q = curve(t)
        return (q.beta0 - b) ** 2 + (q.gamma0 - g) ** 2

    ts = np.linspace(lo, hi, samples)
    d2 = np.asarray([dist2(t) for t in ts])
    i = int(np.argmin(d2))
    t0 = ts[max(i - 1, 0)]
    t1 = ts[min(i + 1, samples - 1)]
    _, dmin = _refine_min(dist2, t0, t1)
    return float(np.sqrt(min(dmin, d2[i])))


def classify(pt, s_max=30.0, lam_max=15.0, step=1e-3):
    """Aggregate eigenvalue counts, zero multiplicity and curve distances."""
    report = SpectrumReport(
        point=pt,
        imaginary_pair_count=count_imaginary_pairs(pt, s_max, step),
        real_pair_count=count_real_pairs(pt, lam_max, step),
        zero_multiplicity=zero_multiplicity(pt),
        nearest_curves={tag: curve_distance(pt, tag) for tag in _CURVE_TAGS},
        vanishing_order=vanishing_order_imag(pt),
    )
    return report
