"""Special functions and generic numerical primitives.

Bessel functions of the first kind J_n and modified Bessel functions I_n for
orders 0..3, root bracketing/bisection, a fixed 64-node Gauss-Legendre
quadrature and Taylor-coefficient extraction by Richardson-extrapolated
central differences.  Everything here is pure and deterministic.
"""

import math
from functools import lru_cache

import numpy as np

from . import _kernels
from .errors import InputError, NonConvergence, NoSignChange, StepUnderflow

_MAX_ORDER = 3

# 64-point Gauss-Legendre rule on [-1, 1]; exact for polynomials of degree
# <= 127 once mapped onto the integration interval
_GL_X, _GL_W = np.polynomial.legendre.leggauss(64)


def _check_bessel_args(n, x):
    if not isinstance(n, (int, np.integer)) or not (0 <= n <= _MAX_ORDER):
        raise InputError(f"Bessel order must be an integer in 0..{_MAX_ORDER}, got {n!r}")
    xs = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(xs)):
        raise InputError("Bessel argument must be finite")
    if np.any(xs < 0.0):
        raise InputError("Bessel argument must be nonnegative")
    return xs


def bessel_j(n, x):
    """Bessel function of the first kind J_n(x), n in 0..3, x >= 0.

    Accepts a scalar or an ndarray.  Ascending series for x <= 6, normalised
    backward recurrence above.
    """
    xs = _check_bessel_args(n, x)
    if xs.ndim == 0:
        return float(_kernels.j_scalar(n, float(xs)))
    return _kernels.bessel_j_array(n, np.ascontiguousarray(xs))


def bessel_i(n, x):
    """Modified Bessel function of the first kind I_n(x), n in 0..3, x >= 0."""
    xs = _check_bessel_args(n, x)
    if xs.ndim == 0:
        return float(_kernels.i_scalar(n, float(xs)))
    return _kernels.bessel_i_array(n, np.ascontiguousarray(xs))


@lru_cache(maxsize=1)
def first_zero_j1():
    """Smallest positive zero of J_1 (bisection on [3, 4])."""
    return find_root(lambda x: bessel_j(1, x), 3.0, 4.0, tol=1e-13)


def find_root(f, a, b, tol=1e-12, max_iter=200):
    """Bisection root finder on a sign-changing bracket [a, b].

    Raises NoSignChange when f(a) * f(b) >= 0 and NonConvergence when the
    bracket cannot be narrowed to ``tol`` within ``max_iter`` halvings.
    """
    if not (a < b):
        raise InputError(f"invalid bracket: a={a} must be < b={b}")
    if not tol > 0.0:
        raise InputError("tol must be positive")
    fa = f(a)
    fb = f(b)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if fa * fb > 0.0:
        raise NoSignChange(f"f({a})={fa} and f({b})={fb} do not bracket a root")
    for _ in range(max_iter):
        m = 0.5 * (a + b)
        if (b - a) <= tol or m == a or m == b:
            return m
        fm = f(m)
        if fm == 0.0:
            return m
        if fa * fm < 0.0:
            b = m
        else:
            a, fa = m, fm
    raise NonConvergence(f"bisection did not reach tol={tol} in {max_iter} iterations")


def _call_on_nodes(f, x):
    try:
        y = f(x)
        y = np.asarray(y)
        if y.shape != x.shape:
            raise TypeError
        return y
    except (TypeError, ValueError, InputError):
        return np.asarray([f(v) for v in x])


def quadrature(f, a, b):
    """Fixed 64-node Gauss-Legendre integral of f over [a, b]."""
    if not (a < b):
        raise InputError(f"quadrature requires a < b, got a={a}, b={b}")
    mid = 0.5 * (a + b)
    rad = 0.5 * (b - a)
    x = mid + rad * _GL_X
    y = _call_on_nodes(f, x)
    return rad * np.sum(_GL_W * y)


def gauss_nodes(a, b):
    """Nodes and weights of the 64-point rule mapped onto [a, b]."""
    mid = 0.5 * (a + b)
    rad = 0.5 * (b - a)
    return mid + rad * _GL_X, rad * _GL_W


_STENCILS = {
    # order -> (offsets, coefficients, power of h); all O(h^2) accurate
    1: ((1.0, -1.0), (1, -1), 1, 2.0),
    2: ((1.0, -2.0, 1.0), (1, 0, -1), 2, 1.0),
    3: ((1.0, -2.0, 2.0, -1.0), (2, 1, -1, -2), 3, 2.0),
    4: ((1.0, -4.0, 6.0, -4.0, 1.0), (2, 1, 0, -1, -2), 4, 1.0),
}


def _central_derivative(f, k, h, f0):
    coeffs, offsets, power, denom = _STENCILS[k]
    acc = 0.0
    for c, o in zip(coeffs, offsets):
        acc += c * (f0 if o == 0 else f(o * h))
    return acc / (denom * h ** power)


def taylor_coefficient(f, k, h0=1e-2):
    """k-th Taylor coefficient of f at 0 (k <= 4), f(0) assumed subtracted.

    Central differences on step levels h0, h0/2, h0/4 combined through a
    two-stage Richardson ladder (O(h^6) truncation).  Raises StepUnderflow
    when the ladder fails to stabilise.
    """
    if not isinstance(k, (int, np.integer)) or not (1 <= k <= 4):
        raise InputError("derivative order k must be an integer in 1..4")
    if not h0 > 0.0:
        raise InputError("h0 must be positive")
    f0 = f(0.0) if k in (2, 4) else 0.0
    d0 = _central_derivative(f, k, h0, f0)
    d1 = _central_derivative(f, k, h0 / 2.0, f0)
    d2 = _central_derivative(f, k, h0 / 4.0, f0)
    r1a = (4.0 * d1 - d0) / 3.0
    r1b = (4.0 * d2 - d1) / 3.0
    r2 = (16.0 * r1b - r1a) / 15.0
    # each extrapolation stage must contract the level spread; the floor
    # keeps pure-roundoff ladders (already converged) from being flagged
    scale = max(abs(d0), abs(d1), abs(d2), 1e-300)
    spread0 = abs(d1 - d0) + abs(d2 - d1)
    spread1 = abs(r1b - r1a)
    spread2 = abs(r2 - r1b)
    floor = 1e-9 * scale
    if spread1 > 0.5 * spread0 + floor or spread2 > 0.5 * spread1 + floor:
        raise StepUnderflow(
            f"Richardson ladder unstable for k={k}, h0={h0}: "
            f"levels {r1a!r}, {r1b!r}, {r2!r}"
        )
    return r2 / math.factorial(k)
