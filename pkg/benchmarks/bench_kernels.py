#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Run:  python benchmarks/bench_kernels.py
The same comparison is available indirectly by setting FERROJET_PURE_NUMPY=1
before running the test suite or the CLI.
"""

import time

import numpy as np

from ferrojet import _accel, _kernels


def _time(fn, *args, repeats=5):
    best = np.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    print(f"numba available: {_accel.HAVE_NUMBA}; "
          f"active backend: {'numba' if _accel.USE_NUMBA else 'pure numpy'}")

    xs = np.linspace(1e-3, 40.0, 1_000_000)
    rows = []

    t_np = _time(_kernels.bessel_i_array_numpy, 0, xs)
    rows.append(("bessel_i array (1e6 pts)", "numpy", t_np))
    t_np_j = _time(_kernels.bessel_j_array_numpy, 1, xs)
    rows.append(("bessel_j array (1e6 pts)", "numpy", t_np_j))

    if _accel.USE_NUMBA:
        _kernels.bessel_i_array_numba(0, xs[:8])  # compile
        _kernels.bessel_j_array_numba(1, xs[:8])
        t_nb = _time(_kernels.bessel_i_array_numba, 0, xs)
        rows.append(("bessel_i array (1e6 pts)", "numba", t_nb))
        t_nb_j = _time(_kernels.bessel_j_array_numba, 1, xs)
        rows.append(("bessel_j array (1e6 pts)", "numba", t_nb_j))

        ref = _kernels.bessel_i_array_numpy(0, xs[:1000])
        alt = _kernels.bessel_i_array_numba(0, xs[:1000])
        assert np.max(np.abs(ref - alt) / ref) < 1e-13

    args = (1e-8, 1e-8, 1.0, 0.0, 5e-4, 400_000, 1.0)
    if _accel.USE_NUMBA:
        _kernels.integrate_planar_until_turn(*args)  # compile
        t_rk = _time(_kernels.integrate_planar_until_turn, *args, repeats=3)
        rows.append(("planar RK4 to crest (~40k steps)", "numba", t_rk))
    # python loop over the active rk4_step (jitted when numba is on)
    from ferrojet._kernels import _integrate_planar_until_turn as py_rk
    t_rk_py = _time(py_rk, *args, repeats=1)
    rows.append(("planar RK4 to crest (~40k steps)", "py loop", t_rk_py))

    print(f"{'kernel':38s} {'backend':8s} {'best time':>12s}")
    for name, backend, t in rows:
        print(f"{name:38s} {backend:8s} {t * 1e3:10.2f} ms")


if __name__ == "__main__":
    main()
