#!/usr/bin/env python3
"""Time the spectral stepping kernel on both backends.

Builds a genuine single-step propagator (not random matrices, so the
workload matches real trajectory runs), applies it for a configurable
number of steps through the pure-numpy path and, when available, the
numba path, and cross-checks that the two outputs agree.

Usage: python benchmarks/bench_propagator.py [--n 1024] [--steps 10000] [--repeats 3]
"""

import argparse
import time

import numpy as np

from diraclab import _accel
from diraclab.evolution import SpectralPropagator, init_gaussian
from diraclab.invariance import GeneralizedParams


def make_workload(n):
    length = 200.0 * (n / 1024)
    params = GeneralizedParams.from_physical(1.0, 0.3, (0.0, 0.0, 0.25))
    packet = init_gaussian(n, length, length * 0.3, 0.5, width=length / 20, params=params)
    prop = SpectralPropagator(n, length, params)
    u = prop.step_matrices(5e-3)
    psi_k = np.fft.fft(packet.values, axis=0)
    return u, psi_k


def bench(fn, u, psi_k, steps, repeats):
    fn(u, psi_k, min(steps, 8))  # warm-up (and JIT compile for numba)
    best = np.inf
    out = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn(u, psi_k, steps)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=1024, help="grid modes (power of two)")
    ap.add_argument("--steps", type=int, default=10_000)
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    u, psi_k = make_workload(args.n)
    rate = lambda t: args.n * args.steps / t / 1e6

    print(f"modes={args.n} steps={args.steps} repeats={args.repeats}")
    print(f"{'backend':<10} {'time_s':>10} {'Mmode-steps/s':>15}")

    t_np, out_np = bench(_accel.propagate_steps_numpy, u, psi_k, args.steps, args.repeats)
    print(f"{'numpy':<10} {t_np:>10.4f} {rate(t_np):>15.1f}")

    if _accel.NUMBA_AVAILABLE:
        t_nb, out_nb = bench(_accel.propagate_steps_numba, u, psi_k, args.steps, args.repeats)
        print(f"{'numba':<10} {t_nb:>10.4f} {rate(t_nb):>15.1f}")
        print(f"speedup numba/numpy: {t_np / t_nb:.2f}x")
        print(f"max |numpy - numba|: {np.max(np.abs(out_np - out_nb)):.3e}")
    else:
        print("numba      unavailable (install the 'accel' extra)")
    print(f"active backend: {_accel.ACTIVE_BACKEND}")


if __name__ == "__main__":
    main()
