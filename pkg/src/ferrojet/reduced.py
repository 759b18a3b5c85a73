"""Homoclinic-orbit solvers for the truncated reduced systems.

Three systems appear:

  planar        Q'' = Q - a Q^2 - b Q^3          (second order)
  fourth_order  u'''' - 2(1+delta) u'' + u - a u^2 - b u^3 = 0
  nls           a'' = -c2_1 mu a - 2 d4 a^3      (real envelope reduction)

Planar orbits are traced by integrating the unstable manifold on the zero
energy level and reflecting at the symmetric section {Q' = 0}.  Fourth-order
orbits come from a Newton iteration on a fourth-order finite-difference
discretisation with even-symmetry closure at 0 and decaying-subspace far
field closure at L, seeded by the exact sech^4 / sech^2 solutions and
continued in the parameters.  Envelope orbits are closed-form.
"""

import math
from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla

from . import _kernels
from .errors import (CoefficientSignError, InputError, MismatchedSystem,
                     NewtonDivergence, NonConvergence, NoTurningPoint,
                     WindowTooShort)

_QUAD_SEED_DELTA = 1.0 / 12.0
_CUBIC_SEED_DELTA = 0.25


@dataclass
class HomoclinicOrbit:
    grid: np.ndarray
    u: np.ndarray
    du: np.ndarray
    d2u: np.ndarray = None
    d3u: np.ndarray = None
    system: dict = field(default_factory=dict)
    residual_norm: float = 0.0
    energy_drift: float = 0.0
    meta: dict = field(default_factory=dict)

    @property
    def amplitude(self):
        i = int(np.argmax(np.abs(self.u)))
        return float(self.u[i])


@dataclass
class SystemTrajectory:
    grid: np.ndarray
    Q1: np.ndarray
    Q2: np.ndarray
    P1: np.ndarray
    P2: np.ndarray
    residual_norm: float


# ---------------------------------------------------------------------------
# finite-difference derivative arrays (4th-order interior stencils)
# ---------------------------------------------------------------------------


def _fd1(u, h):
    d = np.empty_like(u)
    d[2:-2] = (-u[4:] + 8.0 * u[3:-1] - 8.0 * u[1:-3] + u[:-4]) / (12.0 * h)
    d[0] = (-3.0 * u[0] + 4.0 * u[1] - u[2]) / (2.0 * h)
    d[1] = (u[2] - u[0]) / (2.0 * h)
    d[-2] = (u[-1] - u[-3]) / (2.0 * h)
    d[-1] = (3.0 * u[-1] - 4.0 * u[-2] + u[-3]) / (2.0 * h)
    return d


def _fd2(u, h):
    d = np.empty_like(u)
    d[2:-2] = (-u[4:] + 16.0 * u[3:-1] - 30.0 * u[2:-2]
               + 16.0 * u[1:-3] - u[:-4]) / (12.0 * h * h)
    d[1] = (u[2] - 2.0 * u[1] + u[0]) / (h * h)
    d[-2] = (u[-1] - 2.0 * u[-2] + u[-3]) / (h * h)
    d[0] = (2.0 * u[0] - 5.0 * u[1] + 4.0 * u[2] - u[3]) / (h * h)
    d[-1] = (2.0 * u[-1] - 5.0 * u[-2] + 4.0 * u[-3] - u[-4]) / (h * h)
    return d


def _fd3(u, h):
    d = np.empty_like(u)
    d[3:-3] = (u[:-6] / 8.0 - u[1:-5] + 13.0 * u[2:-4] / 8.0
               - 13.0 * u[4:-2] / 8.0 + u[5:-1] - u[6:] / 8.0) / (h ** 3)
    for i in (0, 1, 2):
        d[i] = (-2.5 * u[i] + 9.0 * u[i + 1] - 12.0 * u[i + 2]
                + 7.0 * u[i + 3] - 1.5 * u[i + 4]) / (h ** 3)
    for i in (-3, -2, -1):
        d[i] = (2.5 * u[i] - 9.0 * u[i - 1] + 12.0 * u[i - 2]
                - 7.0 * u[i - 3] + 1.5 * u[i - 4]) / (h ** 3)
    return d


def _fd4(u, h):
    d = np.empty_like(u)
    d[3:-3] = (-u[:-6] + 12.0 * u[1:-5] - 39.0 * u[2:-4] + 56.0 * u[3:-3]
               - 39.0 * u[4:-2] + 12.0 * u[5:-1] - u[6:]) / (6.0 * h ** 4)
    for i in (2, -3):
        d[i] = (u[i - 2] - 4.0 * u[i - 1] + 6.0 * u[i]
                - 4.0 * u[i + 1] + u[i + 2]) / (h ** 4)
    for i in (0, 1):
        d[i] = (3.0 * u[i] - 14.0 * u[i + 1] + 26.0 * u[i + 2]
                - 24.0 * u[i + 3] + 11.0 * u[i + 4] - 2.0 * u[i + 5]) / (h ** 4)
    for i in (-2, -1):
        d[i] = (3.0 * u[i] - 14.0 * u[i - 1] + 26.0 * u[i - 2]
                - 24.0 * u[i - 3] + 11.0 * u[i - 4] - 2.0 * u[i - 5]) / (h ** 4)
    return d


# ---------------------------------------------------------------------------
# planar systems
# ---------------------------------------------------------------------------


def _planar_energy(u, du, a, b):
    return (0.5 * du * du - 0.5 * u * u + (a / 3.0) * u ** 3
            + (b / 4.0) * u ** 4)


def planar_exact(m, half_length=25.0, nodes=2001):
    """Closed-form homoclinic of u'' - u + u^m = 0 for m = 2 or 3."""
    if m not in (2, 3):
        raise InputError(f"planar_exact supports m in {{2, 3}}, got {m}")
    z = np.linspace(-half_length, half_length, nodes)
    if m == 2:
        w = 1.0 / np.cosh(0.5 * z)
        u = 1.5 * w * w
        du = -1.5 * w * w * np.tanh(0.5 * z)
        d2u = u - u * u
        a, b = 1.0, 0.0
    else:
        w = 1.0 / np.cosh(z)
        u = math.sqrt(2.0) * w
        du = -math.sqrt(2.0) * w * np.tanh(z)
        d2u = u - u ** 3
        a, b = 0.0, 1.0
    system = {"kind": "planar", "a": a, "b": b}
    residual = float(np.max(np.abs(d2u - (u - a * u * u - b * u ** 3))))
    drift = float(np.max(np.abs(_planar_energy(u, du, a, b))))
    return HomoclinicOrbit(grid=z, u=u, du=du, d2u=d2u, system=system,
                           residual_norm=residual, energy_drift=drift,
                           meta={"closed_form": f"m={m}"})


def _turning_point(a, b, sign):
    """Smallest-magnitude root of 1 - (2a/3)Q - (b/2)Q^2 = 0 with the given sign."""
    candidates = []
    if b == 0.0:
        if a != 0.0:
            candidates.append(1.5 / a)
    else:
        disc = (2.0 * a / 3.0) ** 2 + 2.0 * b
        if disc >= 0.0:
            r = math.sqrt(disc)
            candidates.extend([(-2.0 * a / 3.0 + r) / b,
                               (-2.0 * a / 3.0 - r) / b])
    same_sign = [q for q in candidates if sign * q > 0.0]
    if not same_sign:
        raise NoTurningPoint(
            f"no turning point with sign {sign:+.0f} for (a, b) = ({a}, {b})")
    return min(same_sign, key=abs)


def planar_homoclinic(a, b, branch="positive", eps0=1e-8, step=5e-4,
                      max_steps=400000):
    """Homoclinic orbit of Q'' = Q - a Q^2 - b Q^3 on the zero energy level.

    Integrates the unstable manifold from offset ``eps0`` along the saddle
    eigenvector and reflects the trajectory at the crest {Q' = 0}.
    """
    if a == 0.0 and b == 0.0:
        raise InputError("planar system needs a nonlinearity: (a, b) != (0, 0)")
    if branch not in ("positive", "negative"):
        raise InputError(f"branch must be 'positive' or 'negative', got {branch!r}")
    sign = 1.0 if branch == "positive" else -1.0
    _turning_point(a, b, sign)  # raises NoTurningPoint if the branch is absent

    q0 = sign * eps0
    bracket = 1.0 - (2.0 * a / 3.0) * q0 - 0.5 * b * q0 * q0
    p0 = sign * eps0 * math.sqrt(bracket)
    qs, ps, n = _kernels.integrate_planar_until_turn(
        q0, p0, a, b, step, max_steps, sign)
    if sign * ps[n] > 0.0:
        raise NonConvergence("planar orbit did not reach the crest "
                             f"within {max_steps} steps")

    # locate the crest crossing inside the final step by bisection on the
    # step size of a single RK4 substep
    qp, pp = qs[n - 1], ps[n - 1]
    lo, hi = 0.0, step
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        _, pm = _kernels.rk4_step(qp, pp, a, b, mid)
        if sign * pm > 0.0:
            lo = mid
        else:
            hi = mid
    t_crest = (n - 1) * step + 0.5 * (lo + hi)

    nsteps = max(int(math.ceil(t_crest / step)), 8)
    h = t_crest / nsteps
    qh, ph = _kernels.integrate_planar_fixed(q0, p0, a, b, h, nsteps)

    total = 2 * nsteps + 1
    z = h * (np.arange(total) - nsteps)
    u = np.empty(total)
    du = np.empty(total)
    u[:nsteps + 1] = qh
    du[:nsteps + 1] = ph
    u[nsteps:] = qh[::-1]
    du[nsteps:] = -ph[::-1]

    d2u = _fd2(u, h)
    resid = np.abs(d2u - (u - a * u * u - b * u ** 3))[3:-3]
    drift = float(np.max(np.abs(_planar_energy(u, du, a, b))))
    system = {"kind": "planar", "a": a, "b": b}
    return HomoclinicOrbit(grid=z, u=u, du=du, d2u=d2u, system=system,
                           residual_norm=float(np.max(resid)),
                           energy_drift=drift,
                           meta={"eps0": eps0, "step": h, "branch": branch})


# ---------------------------------------------------------------------------
# fourth-order (Kawahara-type) systems
# ---------------------------------------------------------------------------


def _sech4_seed(z):
    # u = (35/24) sech^4(k z), k = 1/sqrt(24), solves the quadratic equation
    # at delta = 1/12
    k = 1.0 / math.sqrt(24.0)
    A = 35.0 / 24.0
    w = 1.0 / np.cosh(k * z)
    th = np.tanh(k * z)
    u = A * w ** 4
    du = -4.0 * A * k * w ** 4 * th
    d2u = k * k * (16.0 * A * w ** 4 - 20.0 * A * w ** 6)
    d3u = k ** 3 * th * (-64.0 * A * w ** 4 + 120.0 * A * w ** 6)
    d4u = k ** 4 * (256.0 * A * w ** 4 - 1040.0 * A * w ** 6
                    + 840.0 * A * w ** 8)
    return u, du, d2u, d3u, d4u


def _sech2_seed(z):
    # u = sqrt(15/8) sech^2(k z), k = 1/sqrt(8), solves the cubic equation
    # at delta = 1/4
    k = 1.0 / math.sqrt(8.0)
    A = math.sqrt(15.0 / 8.0)
    w = 1.0 / np.cosh(k * z)
    th = np.tanh(k * z)
    u = A * w * w
    du = -2.0 * A * k * w * w * th
    d2u = k * k * (4.0 * A * w * w - 6.0 * A * w ** 4)
    d3u = k ** 3 * th * (-8.0 * A * w * w + 24.0 * A * w ** 4)
    d4u = k ** 4 * (16.0 * A * w * w - 120.0 * A * w ** 4 + 120.0 * A * w ** 6)
    return u, du, d2u, d3u, d4u


def kawahara_exact_seed(m, half_length=30.0, nodes=3001):
    """Exact homoclinic of u'''' - 2(1+d*)u'' + u - u^m = 0 at special d*.

    m = 2: d* = 1/12 with u = (35/24) sech^4(Z/sqrt(24));
    m = 3: d* = 1/4  with u = sqrt(15/8) sech^2(Z/sqrt(8)).
    """
    if m not in (2, 3):
        raise InputError(f"kawahara_exact_seed supports m in {{2, 3}}, got {m}")
    z = np.linspace(-half_length, half_length, nodes)
    if m == 2:
        delta_star = _QUAD_SEED_DELTA
        u, du, d2u, d3u, d4u = _sech4_seed(z)
        a, b = 1.0, 0.0
    else:
        delta_star = _CUBIC_SEED_DELTA
        u, du, d2u, d3u, d4u = _sech2_seed(z)
        a, b = 0.0, 1.0
    resid = d4u - 2.0 * (1.0 + delta_star) * d2u + u - a * u * u - b * u ** 3
    system = {"kind": "fourth_order", "delta": delta_star, "a": a, "b": b}
    orbit = HomoclinicOrbit(grid=z, u=u, du=du, d2u=d2u, d3u=d3u,
                            system=system,
                            residual_norm=float(np.max(np.abs(resid))),
                            energy_drift=_fourth_order_drift(
                                u, du, d2u, d3u, delta_star, a, b),
                            meta={"closed_form": f"m={m}"})
    return delta_star, orbit


def _fourth_order_components(u, du, d2u, d3u, delta):
    q2 = du
    p2 = d2u - (2.0 / 3.0) * (1.0 + delta) * u
    q1 = d3u - (4.0 / 3.0) * (1.0 + delta) * du
    return q1, q2, u, p2


def _fourth_order_energy(q1, q2, p1, p2, delta, a, b):
    od = 1.0 + delta
    return (0.5 * p2 * p2 - 0.5 * p1 * p1 - q1 * q2
            - (od / 3.0) * (q2 * q2 - 2.0 * p1 * p2)
            + (2.0 / 9.0) * od * od * p1 * p1
            + (a / 3.0) * p1 ** 3 + (b / 4.0) * p1 ** 4)


def _fourth_order_drift(u, du, d2u, d3u, delta, a, b):
    q1, q2, p1, p2 = _fourth_order_components(u, du, d2u, d3u, delta)
    e = _fourth_order_energy(q1, q2, p1, p2, delta, a, b)
    return float(np.max(np.abs(e)))


def _kawahara_matrix(n_nodes, h, delta):
    """Linear part of the discrete operator on the half grid Z in [0, L].

    Nodes 0..N carry: interior ODE rows with even reflection at 0, one
    second-order ODE row at N-2, and two decaying-subspace closure rows at
    N-1, N built from the quadratic factor D^2 + s1 D + s0 with s0 = 1,
    s1 = sqrt(4 + 2 delta).
    """
    N = n_nodes - 1
    od = 2.0 * (1.0 + delta)
    c4 = np.array([-1.0, 12.0, -39.0, 56.0, -39.0, 12.0, -1.0]) / (6.0 * h ** 4)
    c2 = np.array([-1.0, 16.0, -30.0, 16.0, -1.0]) / (12.0 * h * h)
    rows, cols, vals = [], [], []

    def add(r, c, v):
        rows.append(r)
        cols.append(c)
        vals.append(v)

    for i in range(N - 2):
        for o in range(-3, 4):
            add(i, abs(i + o), c4[o + 3])
        for o in range(-2, 3):
            add(i, abs(i + o), -od * c2[o + 2])
        add(i, i, 1.0)
    i = N - 2
    for o, v in zip(range(-2, 3), (1.0, -4.0, 6.0, -4.0, 1.0)):
        add(i, i + o, v / h ** 4)
    for o, v in zip(range(-1, 2), (1.0, -2.0, 1.0)):
        add(i, i + o, -od * v / (h * h))
    add(i, i, 1.0)

    s1 = math.sqrt(4.0 + 2.0 * delta)
    s0 = 1.0
    # row N-1: h^2 * (u'' + s1 u' + s0 u) at Z = L
    add(N - 1, N, 2.0 + 1.5 * s1 * h + s0 * h * h)
    add(N - 1, N - 1, -5.0 - 2.0 * s1 * h)
    add(N - 1, N - 2, 4.0 + 0.5 * s1 * h)
    add(N - 1, N - 3, -1.0)
    # row N: h^3 * (u''' + s1 u'' + s0 u') at Z = L
    add(N, N, 2.5 + 2.0 * s1 * h + 1.5 * s0 * h * h)
    add(N, N - 1, -9.0 - 5.0 * s1 * h - 2.0 * s0 * h * h)
    add(N, N - 2, 12.0 + 4.0 * s1 * h + 0.5 * s0 * h * h)
    add(N, N - 3, -7.0 - s1 * h)
    add(N, N - 4, 1.5)

    mat = sp.coo_matrix((vals, (rows, cols)), shape=(n_nodes, n_nodes))
    return mat.tocsr()


def _newton_kawahara(u0, h, delta, a, b, tol=1e-12, max_iter=50):
    """Newton iteration converging on the update norm ||du||_inf < tol.

    The raw residual of the fourth-derivative stencil carries a roundoff
    floor of order eps/h^4, so the update norm is the meaningful measure.
    """
    n_nodes = u0.size
    n_ode = n_nodes - 2  # rows 0 .. N-2 carry the ODE
    L = _kawahara_matrix(n_nodes, h, delta)
    mask = np.zeros(n_nodes)
    mask[:n_ode] = 1.0
    u = u0.copy()
    trace = []
    du_prev = np.inf
    for it in range(max_iter):
        F = L @ u - mask * (a * u * u + b * u ** 3)
        res = float(np.max(np.abs(F)))
        trace.append(res)
        if res > 1e8 or not np.isfinite(res):
            raise NewtonDivergence(
                f"Newton residual blew up at iteration {it}", trace)
        J = L - sp.diags(mask * (2.0 * a * u + 3.0 * b * u * u))
        du = spla.spsolve(J.tocsc(), -F)
        ndu = float(np.max(np.abs(du)))
        if not np.isfinite(ndu) or ndu > 1e3:
            raise NewtonDivergence(
                f"Newton update blew up at iteration {it}", trace)
        if ndu >= 0.25 * du_prev and du_prev < 1e-6:
            # updates stopped contracting at the roundoff floor of the
            # fourth-derivative stencil; u is converged to grid accuracy
            return u, it, res
        u = u + du
        if ndu < tol:
            return u, it + 1, res
        du_prev = ndu
    raise NewtonDivergence(
        f"Newton update stayed above {tol} for {max_iter} iterations", trace)


def _delta_path(start, stop, step=0.01):
    if start == stop:
        return []
    n = max(int(math.ceil(abs(stop - start) / step)), 1)
    return list(np.linspace(start, stop, n + 1)[1:])


def kawahara_homoclinic(delta, a, b, half_length=30.0, nodes=1200,
                        branch="positive", allow_extend=True):
    """Even homoclinic of u'''' - 2(1+delta)u'' + u - a u^2 - b u^3 = 0.

    Newton iteration on [0, L] seeded by the exact solution of the nearest
    normalised equation and continued in delta (steps of 0.01) and in the
    secondary nonlinearity.  The window auto-extends when the tail has not
    decayed at L.  The default grid spacing h = 0.025 balances the h^4
    truncation of the stencils against their eps/h^4 roundoff floor.

    ``branch`` selects the sign of the orbit pair when b > 0 (the two
    homoclinics of the cubic-dominated equation); it is ignored for b = 0,
    where the orbit is unique and its sign follows 1/a.
    """
    if a == 0.0 and b == 0.0:
        raise InputError("fourth-order system needs (a, b) != (0, 0)")
    if not delta > -0.5:
        raise InputError(f"delta must exceed -0.5, got {delta}")
    if nodes < 200:
        raise InputError(f"node count must be at least 200, got {nodes}")
    if branch not in ("positive", "negative"):
        raise InputError(f"branch must be 'positive' or 'negative', got {branch!r}")
    if b < 0.0:
        raise NewtonDivergence("no primary homoclinic for b < 0 "
                               "(defocusing quartic term)", [])

    flip = -1.0 if (branch == "negative" and b > 0.0) else 1.0
    if b > 0.0:
        scale = 1.0 / math.sqrt(b)
        a_target = a / math.sqrt(b)
        seed_delta = _CUBIC_SEED_DELTA
        seed_fun = _sech2_seed
        b_norm = 1.0
    else:
        scale = 1.0 / a
        a_target = 1.0
        seed_delta = _QUAD_SEED_DELTA
        seed_fun = _sech4_seed
        b_norm = 0.0

    L_len = float(half_length)
    N = int(nodes)
    h = L_len / N

    zs = np.arange(N + 1) * h
    v = flip * seed_fun(zs)[0]

    # continuation: delta first, then the secondary quadratic coefficient
    a_during_delta = 0.0 if b_norm == 1.0 else a_target
    iters = 0
    res = np.inf
    for d in [seed_delta] + _delta_path(seed_delta, delta):
        v, iters, res = _newton_kawahara(v, h, d, a_during_delta, b_norm,
                                         tol=1e-12)
    if b_norm == 1.0 and a_target != 0.0:
        n = max(int(math.ceil(abs(a_target) / 0.1)), 1)
        for av in np.linspace(0.0, a_target, n + 1)[1:]:
            v, iters, res = _newton_kawahara(v, h, delta, av, b_norm,
                                             tol=1e-12)

    # window check and auto-extension
    extends = 0
    while True:
        tail = float(np.max(np.abs(v[-5:])))
        peak = float(np.max(np.abs(v)))
        if tail <= 1e-6 * peak or peak == 0.0:
            break
        if not allow_extend or extends >= 3:
            raise WindowTooShort(
                f"tail amplitude {tail:.3e} at Z = {L_len:g} exceeds "
                f"1e-6 * max|u| = {1e-6 * peak:.3e}")
        new_N = int(math.ceil(1.5 * N))
        pad = np.zeros(new_N + 1)
        pad[:N + 1] = v
        v = pad
        N = new_N
        L_len = N * h
        v, iters, res = _newton_kawahara(v, h, delta, a_target, b_norm,
                                         tol=1e-12)
        extends += 1

    u_half = scale * v
    total = 2 * N + 1
    z = h * (np.arange(total) - N)
    u = np.empty(total)
    u[N:] = u_half
    u[:N + 1] = u_half[::-1]

    du = _fd1(u, h)
    d2u = _fd2(u, h)
    d3u = _fd3(u, h)
    d4u = _fd4(u, h)
    resid = (d4u - 2.0 * (1.0 + delta) * d2u + u - a * u * u - b * u ** 3)
    system = {"kind": "fourth_order", "delta": delta, "a": a, "b": b}
    return HomoclinicOrbit(
        grid=z, u=u, du=du, d2u=d2u, d3u=d3u, system=system,
        residual_norm=float(np.max(np.abs(resid[4:-4]))),
        energy_drift=_fourth_order_drift(u, du, d2u, d3u, delta, a, b),
        meta={"newton_iterations_final": iters, "discrete_residual": res,
              "half_length": L_len, "nodes": N, "extends": extends,
              "branch": branch})


def scalar_to_system_region2(orbit, delta):
    """Lift a fourth-order scalar orbit to the (Q1, Q2, P1, P2) trajectory."""
    sysd = orbit.system
    if sysd.get("kind") != "fourth_order":
        raise MismatchedSystem("orbit does not come from the fourth-order system")
    if abs(sysd.get("delta", np.nan) - delta) > 1e-12:
        raise MismatchedSystem(
            f"orbit delta {sysd.get('delta')!r} does not match {delta}")
    if orbit.d2u is None or orbit.d3u is None:
        raise MismatchedSystem("orbit lacks the derivative data for the lift")
    a, b = sysd["a"], sysd["b"]
    q1, q2, p1, p2 = _fourth_order_components(orbit.u, orbit.du, orbit.d2u,
                                              orbit.d3u, delta)
    h = float(orbit.grid[1] - orbit.grid[0])
    od = 1.0 + delta
    r1 = _fd1(q1, h) - (-p1 + (2.0 / 3.0) * od * p2
                        + (4.0 / 9.0) * od * od * p1
                        + a * p1 * p1 + b * p1 ** 3)
    r2 = _fd1(q2, h) - (p2 + (2.0 / 3.0) * od * p1)
    r3 = _fd1(p1, h) - q2
    r4 = _fd1(p2, h) - (q1 + (2.0 / 3.0) * od * q2)
    cut = slice(6, -6)
    residual = max(float(np.max(np.abs(r[cut]))) for r in (r1, r2, r3, r4))
    return SystemTrajectory(grid=orbit.grid, Q1=q1, Q2=q2, P1=p1, P2=p2,
                            residual_norm=residual)


# ---------------------------------------------------------------------------
# region III envelope
# ---------------------------------------------------------------------------


def nls_envelope(mu, c2_1, d4, half_length=None, nodes=4001):
    """Envelope a(Z) = r0 sech(rho Z) of the leading-order real reduction."""
    if not mu > 0.0:
        raise InputError(f"mu must be positive, got {mu}")
    if not (c2_1 < 0.0 and d4 > 0.0):
        raise CoefficientSignError(
            f"envelope existence needs c2_1 < 0 and d4 > 0, got "
            f"c2_1 = {c2_1:g}, d4 = {d4:g}")
    rho = math.sqrt(-c2_1 * mu)
    r0 = rho / math.sqrt(d4)
    L = half_length if half_length is not None else 16.0 / rho
    z = np.linspace(-L, L, nodes)
    w = 1.0 / np.cosh(rho * z)
    u = r0 * w
    du = -r0 * rho * w * np.tanh(rho * z)
    d2u = r0 * rho * rho * (w - 2.0 * w ** 3)
    resid = d2u - (-c2_1 * mu * u - 2.0 * d4 * u ** 3)
    energy = 0.5 * du * du + 0.5 * c2_1 * mu * u * u + 0.5 * d4 * u ** 4
    system = {"kind": "nls", "mu": mu, "c2_1": c2_1, "d4": d4,
              "rho": rho, "r0": r0}
    return HomoclinicOrbit(grid=z, u=u, du=du, d2u=d2u, system=system,
                           residual_norm=float(np.max(np.abs(resid))),
                           energy_drift=float(np.max(np.abs(energy))))


def truncated_energy(orbit):
    """Max deviation of the conserved truncated Hamiltonian from zero."""
    kind = orbit.system.get("kind")
    if kind == "planar":
        e = _planar_energy(orbit.u, orbit.du, orbit.system["a"],
                           orbit.system["b"])
        return float(np.max(np.abs(e)))
    if kind == "fourth_order":
        if orbit.d2u is None or orbit.d3u is None:
            raise MismatchedSystem("fourth-order orbit lacks derivative data")
        return _fourth_order_drift(orbit.u, orbit.du, orbit.d2u, orbit.d3u,
                                   orbit.system["delta"], orbit.system["a"],
                                   orbit.system["b"])
    if kind == "nls":
        s = orbit.system
        e = (0.5 * orbit.du ** 2 + 0.5 * s["c2_1"] * s["mu"] * orbit.u ** 2
             + 0.5 * s["d4"] * orbit.u ** 4)
        return float(np.max(np.abs(e)))
    raise MismatchedSystem(f"unknown system kind {kind!r}")
