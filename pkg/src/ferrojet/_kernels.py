"""Hot numerical kernels with numba and pure-numpy backends.

Scalar Bessel evaluators (ascending series, Miller backward recurrence) and
the fixed-step RK4 integrator for the planar reduced system live here.  The
public helpers at the bottom dispatch to whichever backend ``_accel``
selected; the ``*_numpy`` variants stay importable either way so the
benchmark can compare them.
"""

import numpy as np

from . import _accel

# ---------------------------------------------------------------------------
# scalar kernels (numba-compatible subset of Python)
# ---------------------------------------------------------------------------


def _j_series_scalar(n, x):
    # ascending series, adequate for x <= 6 (alternating-term cancellation
    # stays below ~1e-13 absolute there)
    half = 0.5 * x
    t = 1.0
    for m in range(1, n + 1):
        t *= half / m
    q = half * half
    s = t
    for k in range(1, 80):
        t *= -q / (k * (k + n))
        s += t
        if abs(t) <= 1e-17 * (abs(s) + 1e-300):
            break
    return s


def _j_miller_scalar(n, x):
    # normalised backward (Miller) recurrence; stable for all x > 0
    m = int(x + 12.0 + 8.0 * x ** (1.0 / 3.0))
    if m % 2 == 1:
        m += 1
    jp = 0.0
    jc = 1e-30
    norm = 0.0
    res = 0.0
    for k in range(m, 0, -1):
        jm = (2.0 * k / x) * jc - jp
        jp = jc
        jc = jm
        if abs(jc) > 1e250:
            jc *= 1e-250
            jp *= 1e-250
            norm *= 1e-250
            res *= 1e-250
        idx = k - 1
        if idx == n:
            res = jc
        if idx >= 2 and idx % 2 == 0:
            norm += 2.0 * jc
    norm += jc  # jc now holds the J_0 trial value
    return res / norm


_j_series = _accel.jit_if_enabled(_j_series_scalar)
_j_miller = _accel.jit_if_enabled(_j_miller_scalar)


def _j_scalar(n, x):
    if x <= 6.0:
        return _j_series(n, x)
    return _j_miller(n, x)


def _i_series_scalar(n, x):
    # all terms positive: no cancellation at any x in the working range
    half = 0.5 * x
    t = 1.0
    for m in range(1, n + 1):
        t *= half / m
    q = half * half
    s = t
    for k in range(1, 300):
        t *= q / (k * (k + n))
        s += t
        if t <= 1e-17 * (s + 1e-300):
            break
    return s


def _rk4_step_scalar(q, p, a, b, h):
    k1q = p
    k1p = q - a * q * q - b * q * q * q
    q2 = q + 0.5 * h * k1q
    p2 = p + 0.5 * h * k1p
    k2q = p2
    k2p = q2 - a * q2 * q2 - b * q2 * q2 * q2
    q3 = q + 0.5 * h * k2q
    p3 = p + 0.5 * h * k2p
    k3q = p3
    k3p = q3 - a * q3 * q3 - b * q3 * q3 * q3
    q4 = q + h * k3q
    p4 = p + h * k3p
    k4q = p4
    k4p = q4 - a * q4 * q4 - b * q4 * q4 * q4
    qn = q + (h / 6.0) * (k1q + 2.0 * k2q + 2.0 * k3q + k4q)
    pn = p + (h / 6.0) * (k1p + 2.0 * k2p + 2.0 * k3p + k4p)
    return qn, pn


def _integrate_planar_until_turn(q0, p0, a, b, h, nmax, stop_sign):
    # march the unstable-manifold trajectory until d(Q)/dZ changes sign;
    # calls the backend-bound rk4_step so the numba build stays nopython
    qs = np.empty(nmax + 1)
    ps = np.empty(nmax + 1)
    qs[0] = q0
    ps[0] = p0
    n = 0
    for i in range(nmax):
        qn, pn = rk4_step(qs[i], ps[i], a, b, h)
        qs[i + 1] = qn
        ps[i + 1] = pn
        n = i + 1
        if stop_sign * pn <= 0.0:
            break
    return qs, ps, n


def _integrate_planar_fixed(q0, p0, a, b, h, nsteps):
    qs = np.empty(nsteps + 1)
    ps = np.empty(nsteps + 1)
    qs[0] = q0
    ps[0] = p0
    for i in range(nsteps):
        qn, pn = rk4_step(qs[i], ps[i], a, b, h)
        qs[i + 1] = qn
        ps[i + 1] = pn
    return qs, ps


# ---------------------------------------------------------------------------
# pure-numpy vectorised Bessel backend
# ---------------------------------------------------------------------------


def _j_series_numpy(n, xs):
    half = 0.5 * xs
    t = np.ones_like(xs)
    for m in range(1, n + 1):
        t = t * half / m
    q = half * half
    s = t.copy()
    for k in range(1, 80):
        t = t * (-q) / (k * (k + n))
        s += t
        if np.all(np.abs(t) <= 1e-17 * (np.abs(s) + 1e-300)):
            break
    return s


def _j_miller_numpy(n, xs):
    xmax = float(np.max(xs))
    m = int(xmax + 12.0 + 8.0 * xmax ** (1.0 / 3.0))
    if m % 2 == 1:
        m += 1
    jp = np.zeros_like(xs)
    jc = np.full_like(xs, 1e-30)
    norm = np.zeros_like(xs)
    res = np.zeros_like(xs)
    for k in range(m, 0, -1):
        jm = (2.0 * k / xs) * jc - jp
        jp = jc
        jc = jm
        big = np.abs(jc) > 1e250
        if np.any(big):
            scale = np.where(big, 1e-250, 1.0)
            jc = jc * scale
            jp = jp * scale
            norm = norm * scale
            res = res * scale
        idx = k - 1
        if idx == n:
            res = jc.copy()
        if idx >= 2 and idx % 2 == 0:
            norm += 2.0 * jc
    norm += jc
    return res / norm


def bessel_j_array_numpy(n, xs):
    xs = np.asarray(xs, dtype=float)
    out = np.empty_like(xs)
    small = xs <= 6.0
    if np.any(small):
        out[small] = _j_series_numpy(n, xs[small])
    if np.any(~small):
        out[~small] = _j_miller_numpy(n, xs[~small])
    return out


def bessel_i_array_numpy(n, xs):
    xs = np.asarray(xs, dtype=float)
    half = 0.5 * xs
    t = np.ones_like(xs)
    for m in range(1, n + 1):
        t = t * half / m
    q = half * half
    s = t.copy()
    for k in range(1, 300):
        t = t * q / (k * (k + n))
        s += t
        if np.all(t <= 1e-17 * (s + 1e-300)):
            break
    return s


# ---------------------------------------------------------------------------
# backend selection
# ---------------------------------------------------------------------------

j_scalar = _accel.jit_if_enabled(_j_scalar)
i_scalar = _accel.jit_if_enabled(_i_series_scalar)
rk4_step = _accel.jit_if_enabled(_rk4_step_scalar)

integrate_planar_until_turn = _accel.jit_if_enabled(_integrate_planar_until_turn)
integrate_planar_fixed = _accel.jit_if_enabled(_integrate_planar_fixed)

if _accel.USE_NUMBA:
    from numba import njit

    @njit(cache=True)
    def bessel_j_array_numba(n, xs):
        out = np.empty_like(xs)
        for i in range(xs.size):
            out[i] = j_scalar(n, xs[i])
        return out

    @njit(cache=True)
    def bessel_i_array_numba(n, xs):
        out = np.empty_like(xs)
        for i in range(xs.size):
            out[i] = i_scalar(n, xs[i])
        return out

    bessel_j_array = bessel_j_array_numba
    bessel_i_array = bessel_i_array_numba
else:  # pure-numpy fallback
    bessel_j_array_numba = None
    bessel_i_array_numba = None

    bessel_j_array = bessel_j_array_numpy
    bessel_i_array = bessel_i_array_numpy
