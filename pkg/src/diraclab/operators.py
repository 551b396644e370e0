"""Momentum-space Hamiltonians, plane-wave solutions and dispersion.

The first-order equation in Hamiltonian form uses the Hermitian velocity
matrices alpha_j = -i*gamma(0)gamma(j) (the Euclideanized spatial
generators carry a factor of i, so the bare product would be
anti-Hermitian) and beta = gamma(0):

    H(k) = alpha . (k + p_tilde) + m0*beta - eps_tilde*I

Its eigenvalues are +/- sqrt(m0^2 + |k + p_tilde|^2) - eps_tilde, each
doubly degenerate.  Applying the operator twice gives the second-order
form whose momentum-space matrix kg_rhs_matrix reproduces H(k)^2 as an
operator identity.  Solutions of the generalized equation map onto
standard ones by the kinematic shift (k, e) -> (k + p_tilde, e + eps_tilde)
with the spinor unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .clifford import GAMMA, I4, max_abs
from .invariance import GeneralizedParams

__all__ = [
    "ALPHA",
    "BETA",
    "hamiltonian_matrix",
    "dispersion",
    "PlaneWaveSolution",
    "plane_wave_solve",
    "mode_eigensystem",
    "kg_rhs_matrix",
    "kg_residual",
    "dirac_square_equals_kg",
    "gauge_map_to_standard",
    "gauge_map_from_standard",
]

BETA = GAMMA[0]
ALPHA = tuple(-1j * (GAMMA[0] @ g) for g in GAMMA[1:])
for _m in ALPHA:
    _m.flags.writeable = False


def _as_k3(k) -> np.ndarray:
    k = np.asarray(k, dtype=float)
    if k.shape == ():
        k = np.array([0.0, 0.0, float(k)])
    if k.shape != (3,):
        raise ValueError(f"momentum must be a 3-vector, got shape {k.shape}")
    return k


def _alpha_dot(v) -> np.ndarray:
    return v[0] * ALPHA[0] + v[1] * ALPHA[1] + v[2] * ALPHA[2]


def hamiltonian_matrix(k, params: GeneralizedParams) -> np.ndarray:
    """Hermitian 4x4 Hamiltonian at momentum k (scalar k means k along z)."""
    k = _as_k3(k)
    kk = k + params.p_tilde
    return _alpha_dot(kk) + params.m0 * BETA - params.eps_tilde * I4


def dispersion(k, params: GeneralizedParams, branch: int = +1) -> float:
    """Plane-wave energy on the given branch: +/- sqrt(m0^2+|k+p|^2) - eps."""
    if branch not in (+1, -1):
        raise ValueError(f"branch must be +1 or -1, got {branch}")
    k = _as_k3(k)
    kk = k + params.p_tilde
    w = float(np.sqrt(params.m0 ** 2 + kk @ kk))
    return branch * w - params.eps_tilde


@dataclass(frozen=True)
class PlaneWaveSolution:
    """One normalized momentum eigenstate of the Hamiltonian."""

    k: np.ndarray
    energy: float
    branch: int
    spinor: np.ndarray

    def __post_init__(self):
        k = np.asarray(self.k, dtype=float)
        s = np.asarray(self.spinor, dtype=np.complex128)
        k.flags.writeable = False
        s.flags.writeable = False
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "spinor", s)


def _sigma_dot(v) -> np.ndarray:
    return np.array(
        [[v[2], v[0] - 1j * v[1]], [v[0] + 1j * v[1], -v[2]]], dtype=np.complex128
    )


def plane_wave_solve(k, params: GeneralizedParams) -> list[PlaneWaveSolution]:
    """Four orthonormal eigenpairs at momentum k, in deterministic order.

    The two upper-branch spinors take the canonical upper-pair basis for
    the large components, the lower branch the canonical lower pair, so
    degenerate subspaces come out the same on every run.  Order:
    [plus, plus, minus, minus].
    """
    k = _as_k3(k)
    kk = k + params.p_tilde
    m0 = params.m0
    w = float(np.sqrt(m0 ** 2 + kk @ kk))
    sk = _sigma_dot(kk)

    def bispinor(upper, lower):
        v = np.concatenate([upper, lower])
        return v / np.linalg.norm(v)

    e2 = np.eye(2, dtype=np.complex128)
    sols = []
    if w + m0 < 1e-300:
        # Massless at zero kinetic momentum: fully degenerate, use the
        # canonical basis.
        for i, branch in zip(range(4), (+1, +1, -1, -1)):
            v = np.zeros(4, dtype=np.complex128)
            v[i] = 1.0
            sols.append(
                PlaneWaveSolution(k, -params.eps_tilde, branch, v)
            )
        return sols

    for col in range(2):
        upper = e2[:, col]
        lower = (sk @ upper) / (w + m0)
        sols.append(
            PlaneWaveSolution(k, w - params.eps_tilde, +1, bispinor(upper, lower))
        )
    for col in range(2):
        lower = e2[:, col]
        upper = -(sk @ lower) / (w + m0)
        sols.append(
            PlaneWaveSolution(k, -w - params.eps_tilde, -1, bispinor(upper, lower))
        )
    return sols


def mode_eigensystem(kz, params: GeneralizedParams):
    """Vectorized eigensystem for a batch of momenta along the z axis.

    Returns (energies, vectors) with shapes (n, 4) and (n, 4, 4); column
    j of vectors[m] is the j-th eigenvector, matching plane_wave_solve's
    ordering and tie-breaking mode by mode.  This is the setup path for
    the spectral propagator, where every grid momentum needs its
    decomposition at once.
    """
    kz = np.asarray(kz, dtype=float).ravel()
    p = params.p_tilde
    m0 = params.m0
    kx = np.full_like(kz, p[0])
    ky = np.full_like(kz, p[1])
    kzz = kz + p[2]
    w = np.sqrt(m0 ** 2 + kx ** 2 + ky ** 2 + kzz ** 2)
    denom = w + m0
    if np.any(denom < 1e-300):
        raise ValueError("massless modes at zero kinetic momentum are not supported here")

    n = kz.size
    pm = kx + 1j * ky
    mm = kx - 1j * ky
    vec = np.zeros((n, 4, 4), dtype=np.complex128)
    # upper branch, canonical large components
    vec[:, 0, 0] = 1.0
    vec[:, 2, 0] = kzz / denom
    vec[:, 3, 0] = pm / denom
    vec[:, 1, 1] = 1.0
    vec[:, 2, 1] = mm / denom
    vec[:, 3, 1] = -kzz / denom
    # lower branch, canonical small components
    vec[:, 0, 2] = -kzz / denom
    vec[:, 1, 2] = -pm / denom
    vec[:, 2, 2] = 1.0
    vec[:, 0, 3] = -mm / denom
    vec[:, 1, 3] = kzz / denom
    vec[:, 3, 3] = 1.0
    vec /= np.linalg.norm(vec, axis=1, keepdims=True)

    energies = np.empty((n, 4))
    energies[:, 0] = energies[:, 1] = w - params.eps_tilde
    energies[:, 2] = energies[:, 3] = -w - params.eps_tilde
    return energies, vec


def kg_rhs_matrix(k, params: GeneralizedParams) -> np.ndarray:
    """Momentum-space matrix of the second-order equation's right side.

    On a plane wave the second-order equation reads e^2 * psi = M psi with

        M = (k^2 + m0^2 + p^2 + eps^2 + 2 p.k) * I
            - 2*m0*eps*beta - 2*eps*alpha.k - 2*eps*alpha.p
    """
    k = _as_k3(k)
    p = params.p_tilde
    eps = params.eps_tilde
    m0 = params.m0
    scalar = k @ k + m0 ** 2 + p @ p + eps ** 2 + 2.0 * (p @ k)
    return (
        scalar * I4
        - 2.0 * m0 * eps * BETA
        - 2.0 * eps * _alpha_dot(k)
        - 2.0 * eps * _alpha_dot(p)
    )


def kg_residual(k, energy: float, spinor, params: GeneralizedParams) -> float:
    """Max-norm defect of the second-order equation on one plane wave."""
    spinor = np.asarray(spinor, dtype=np.complex128)
    return max_abs(energy ** 2 * spinor - kg_rhs_matrix(k, params) @ spinor)


def dirac_square_equals_kg(k, params: GeneralizedParams) -> float:
    """Operator identity check: the squared Hamiltonian against the
    second-order matrix.  Zero up to roundoff for every (k, params)."""
    h = hamiltonian_matrix(k, params)
    return max_abs(h @ h - kg_rhs_matrix(k, params))


def gauge_map_to_standard(
    solution: PlaneWaveSolution, params: GeneralizedParams, residual_tol: float = 1e-8
) -> PlaneWaveSolution:
    """Shift a generalized solution to the standard-equation solution.

    The mapped state has momentum k + p_tilde, energy e + eps_tilde and
    the identical spinor; it satisfies the mass-only Hamiltonian exactly.
    Raises if the input does not solve its own eigenproblem.
    """
    h = hamiltonian_matrix(solution.k, params)
    defect = max_abs(h @ solution.spinor - solution.energy * solution.spinor)
    if defect > residual_tol:
        raise ValueError(
            f"input is not an eigenstate of its Hamiltonian (residual {defect:.3e})"
        )
    return PlaneWaveSolution(
        k=solution.k + params.p_tilde,
        energy=solution.energy + params.eps_tilde,
        branch=solution.branch,
        spinor=solution.spinor,
    )


def gauge_map_from_standard(
    solution: PlaneWaveSolution, params: GeneralizedParams, residual_tol: float = 1e-8
) -> PlaneWaveSolution:
    """Inverse shift: take a standard-equation solution back to the
    generalized one at momentum k - p_tilde and energy e - eps_tilde."""
    standard = GeneralizedParams.standard(params.m0)
    h = hamiltonian_matrix(solution.k, standard)
    defect = max_abs(h @ solution.spinor - solution.energy * solution.spinor)
    if defect > residual_tol:
        raise ValueError(
            f"input is not a standard-equation eigenstate (residual {defect:.3e})"
        )
    return PlaneWaveSolution(
        k=solution.k - params.p_tilde,
        energy=solution.energy - params.eps_tilde,
        branch=solution.branch,
        spinor=solution.spinor,
    )
