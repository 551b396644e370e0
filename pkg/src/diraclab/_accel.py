"""Backend selection for the spectral stepping kernel.

The hot loop of a trajectory run applies one 4x4 propagator matrix per
grid momentum to the spectral coefficients, once per time step.  Two
implementations are provided: a vectorized pure-numpy path and a
numba-compiled per-mode loop.  The active one is chosen at import time
from the DIRACLAB_BACKEND environment variable:

    auto   (default)  numba when importable, numpy otherwise
    numba             require numba, fail loudly if missing
    numpy             force the pure-numpy path

Both paths produce identical results; the compiled loop runs the modes
sequentially (the per-mode work is instruction-bound, and staying off the
threading layers keeps the kernel bitwise deterministic).  See
benchmarks/bench_propagator.py for a timing comparison.
"""

from __future__ import annotations

import os

import numpy as np

__all__ = [
    "BACKEND_ENV",
    "ACTIVE_BACKEND",
    "NUMBA_AVAILABLE",
    "propagate_steps",
    "propagate_steps_numpy",
    "propagate_steps_numba",
]

BACKEND_ENV = "DIRACLAB_BACKEND"


def _check(prop: np.ndarray, amplitudes: np.ndarray, steps: int) -> None:
    if prop.ndim != 3 or prop.shape[1:] != (4, 4):
        raise ValueError(f"propagator must have shape (n, 4, 4), got {prop.shape}")
    if amplitudes.shape != (prop.shape[0], 4):
        raise ValueError(
            f"amplitudes must have shape ({prop.shape[0]}, 4), got {amplitudes.shape}"
        )
    if steps < 0:
        raise ValueError(f"steps must be nonnegative, got {steps}")


def propagate_steps_numpy(prop, amplitudes, steps: int) -> np.ndarray:
    """Apply the per-mode propagator `steps` times (vectorized matmul)."""
    prop = np.ascontiguousarray(prop, dtype=np.complex128)
    out = np.ascontiguousarray(amplitudes, dtype=np.complex128).copy()
    _check(prop, out, steps)
    for _ in range(steps):
        out = np.matmul(prop, out[:, :, None])[:, :, 0]
    return out


try:
    from numba import njit

    NUMBA_AVAILABLE = True

    @njit(cache=True)
    def _steps_kernel(prop, amplitudes, steps):  # pragma: no cover - compiled
        n = amplitudes.shape[0]
        out = np.empty_like(amplitudes)
        for m in range(n):
            v0 = amplitudes[m, 0]
            v1 = amplitudes[m, 1]
            v2 = amplitudes[m, 2]
            v3 = amplitudes[m, 3]
            u = prop[m]
            for _ in range(steps):
                w0 = u[0, 0] * v0 + u[0, 1] * v1 + u[0, 2] * v2 + u[0, 3] * v3
                w1 = u[1, 0] * v0 + u[1, 1] * v1 + u[1, 2] * v2 + u[1, 3] * v3
                w2 = u[2, 0] * v0 + u[2, 1] * v1 + u[2, 2] * v2 + u[2, 3] * v3
                w3 = u[3, 0] * v0 + u[3, 1] * v1 + u[3, 2] * v2 + u[3, 3] * v3
                v0, v1, v2, v3 = w0, w1, w2, w3
            out[m, 0] = v0
            out[m, 1] = v1
            out[m, 2] = v2
            out[m, 3] = v3
        return out

    def propagate_steps_numba(prop, amplitudes, steps: int) -> np.ndarray:
        """Apply the per-mode propagator `steps` times (compiled loop)."""
        prop = np.ascontiguousarray(prop, dtype=np.complex128)
        amplitudes = np.ascontiguousarray(amplitudes, dtype=np.complex128)
        _check(prop, amplitudes, steps)
        return _steps_kernel(prop, amplitudes, steps)

except ImportError:  # pragma: no cover - exercised only without numba
    NUMBA_AVAILABLE = False
    propagate_steps_numba = None


def _select_backend() -> str:
    choice = os.environ.get(BACKEND_ENV, "auto").strip().lower()
    if choice not in ("auto", "numba", "numpy"):
        raise RuntimeError(
            f"{BACKEND_ENV} must be 'auto', 'numba' or 'numpy', got {choice!r}"
        )
    if choice == "numpy":
        return "numpy"
    if choice == "numba" and not NUMBA_AVAILABLE:
        raise RuntimeError(f"{BACKEND_ENV}=numba but numba is not importable")
    return "numba" if NUMBA_AVAILABLE else "numpy"


ACTIVE_BACKEND = _select_backend()

if ACTIVE_BACKEND == "numba":
    propagate_steps = propagate_steps_numba
else:
    propagate_steps = propagate_steps_numpy
