"""Spinor and index representations of rotations and boosts.

Rotations about axis a act in the plane of the other two axes through the
half-angle single-product form cos(t/2)*I - gamma(k)gamma(l)*sin(t/2) with
(a, k, l) a cyclic permutation of (3, 1, 2).  Boost spinor matrices are
built from the covariant generator pair, cosh(e/2)*I + i*gl(a)gl(0)*sinh(e/2),
which is what makes the index transformation below (cosh/sinh rows carrying
explicit factors of i) conjugate correctly.

The index ("vector") representation acts on a 4-tuple of matrices B^mu and
is complex for boosts: the time row mixes as (cosh, -i sinh) and the boosted
spatial row as (+i sinh, cosh).  covariance_residual measures how far a
matrix 4-tuple is from transforming covariantly under a given transform.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .clifford import I4, gamma, gamma_lower, max_abs

__all__ = [
    "ROTATION_PLANES",
    "rapidity_from_velocity",
    "velocity_from_rapidity",
    "spinor_rotation",
    "spinor_boost",
    "vector_rotation",
    "vector_boost",
    "vector_rep",
    "PoincareTransform",
    "covariance_residual",
]

# axis -> (k, l): rotation about the axis mixes the (k, l) plane.
ROTATION_PLANES = {1: (2, 3), 2: (3, 1), 3: (1, 2)}


def _check_axis(axis: int) -> None:
    if axis not in (1, 2, 3):
        raise ValueError(f"axis must be 1, 2 or 3, got {axis}")


def rapidity_from_velocity(v: float) -> float:
    """Additive boost parameter for a velocity in units of the light speed."""
    if not -1.0 < v < 1.0:
        raise ValueError(f"|v| must be below the light speed, got {v}")
    return math.atanh(v)


def velocity_from_rapidity(eta: float) -> float:
    return math.tanh(eta)


def spinor_rotation(axis: int, theta: float) -> np.ndarray:
    """Half-angle spinor rotation matrix about the given axis."""
    _check_axis(axis)
    k, l = ROTATION_PLANES[axis]
    return np.cos(theta / 2) * I4 - gamma(k) @ gamma(l) * np.sin(theta / 2)


def spinor_boost(axis: int, eta: float) -> np.ndarray:
    """Spinor boost matrix along the given axis with rapidity eta."""
    _check_axis(axis)
    if not math.isfinite(eta):
        raise ValueError(f"rapidity must be finite, got {eta}")
    gen = gamma_lower(axis) @ gamma_lower(0)
    return np.cosh(eta / 2) * I4 + 1j * gen * np.sinh(eta / 2)


def vector_rotation(axis: int, theta: float) -> np.ndarray:
    """Index-representation rotation: real SO(2) block on the plane axes."""
    _check_axis(axis)
    k, l = ROTATION_PLANES[axis]
    L = np.eye(4, dtype=np.complex128)
    L[k, k] = np.cos(theta)
    L[k, l] = np.sin(theta)
    L[l, k] = -np.sin(theta)
    L[l, l] = np.cos(theta)
    return L


def vector_boost(axis: int, eta: float) -> np.ndarray:
    """Index-representation boost mixing the time row and the boosted row."""
    _check_axis(axis)
    if not math.isfinite(eta):
        raise ValueError(f"rapidity must be finite, got {eta}")
    L = np.eye(4, dtype=np.complex128)
    L[0, 0] = np.cosh(eta)
    L[0, axis] = -1j * np.sinh(eta)
    L[axis, 0] = 1j * np.sinh(eta)
    L[axis, axis] = np.cosh(eta)
    return L


def vector_rep(kind: str, axis: int, parameter: float) -> np.ndarray:
    if kind == "rotation":
        return vector_rotation(axis, parameter)
    if kind == "boost":
        return vector_boost(axis, parameter)
    raise ValueError(f"kind must be 'rotation' or 'boost', got {kind!r}")


@dataclass(frozen=True)
class PoincareTransform:
    """Paired spinor and index representations of one rotation or boost."""

    kind: str
    axis: int
    parameter: float
    spinor_rep: np.ndarray
    vector_rep: np.ndarray

    @classmethod
    def rotation(cls, axis: int, theta: float) -> "PoincareTransform":
        return cls(
            kind="rotation",
            axis=axis,
            parameter=float(theta),
            spinor_rep=spinor_rotation(axis, theta),
            vector_rep=vector_rotation(axis, theta),
        )

    @classmethod
    def boost(cls, axis: int, eta: float) -> "PoincareTransform":
        return cls(
            kind="boost",
            axis=axis,
            parameter=float(eta),
            spinor_rep=spinor_boost(axis, eta),
            vector_rep=vector_boost(axis, eta),
        )

    @classmethod
    def make(cls, kind: str, axis: int, parameter: float) -> "PoincareTransform":
        if kind == "rotation":
            return cls.rotation(axis, parameter)
        if kind == "boost":
            return cls.boost(axis, parameter)
        raise ValueError(f"kind must be 'rotation' or 'boost', got {kind!r}")

    @classmethod
    def identity(cls) -> "PoincareTransform":
        return cls.rotation(3, 0.0)

    def spinor_inverse(self) -> np.ndarray:
        """Exact inverse: the same formula at the negated parameter."""
        if self.kind == "rotation":
            return spinor_rotation(self.axis, -self.parameter)
        return spinor_boost(self.axis, -self.parameter)


def covariance_residual(bset, transform: PoincareTransform) -> float:
    """Max-norm mismatch between the index and spinor actions on a 4-tuple.

    Zero (to tolerance) exactly when the four matrices transform
    covariantly: contracting the index representation over the tuple
    reproduces conjugation by the spinor representation.
    """
    bset = [np.asarray(b, dtype=np.complex128) for b in bset]
    if len(bset) != 4:
        raise ValueError(f"expected a 4-tuple of matrices, got {len(bset)}")
    S = transform.spinor_rep
    Sinv = transform.spinor_inverse()
    if max_abs(S @ Sinv - I4) > 1e-8:
        # Unreachable for finite parameters; kept as a guard against
        # a corrupted transform object.
        raise RuntimeError("spinor representation is not invertible")
    L = transform.vector_rep
    worst = 0.0
    for beta in range(4):
        lhs = (
            L[beta, 0] * bset[0]
            + L[beta, 1] * bset[1]
            + L[beta, 2] * bset[2]
            + L[beta, 3] * bset[3]
        )
        rhs = S @ bset[beta] @ Sinv
        worst = max(worst, max_abs(lhs - rhs))
    return worst
