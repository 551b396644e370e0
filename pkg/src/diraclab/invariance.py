"""Invariance conditions for the first-order 4-spinor equation.

The constant matrix of the equation has the form B = a*I + vector_contract(c).
Under a rotation or boost it fails to be invariant unless the wavefunction
absorbs an affine phase; the phase gradient that restores invariance is a
closed-form function of c and the transform parameter (zeta_rotation and
zeta_boost below).  bc_condition_residual evaluates the defect

    B - S B S^{-1} - i * vector_contract(zeta)

which vanishes exactly when the triple (params, transform, phase) satisfies
the invariance condition.  With c = 0 the identity-term matrix commutes with
every spinor representation, so the standard equation needs no phase.

verify_phi0_uniqueness runs the zero-phase uniqueness suite: the listed
(anti)commutation constraints on the block ansatz, the solution space of the
full covariance-linear system, and the commutant argument that pins the
constant matrix to a multiple of the identity.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .clifford import (
    I4,
    GAMMA5,
    PAULI,
    anticommutator,
    basis_matrices,
    basis_labels,
    commutator,
    gamma,
    max_abs,
    vector_contract,
)
from .poincare import ROTATION_PLANES, PoincareTransform, covariance_residual

__all__ = [
    "PhaseFunction",
    "GeneralizedParams",
    "zeta_rotation",
    "zeta_boost",
    "zeta_for",
    "bc_matrix",
    "bc_condition_residual",
    "phase_apply",
    "CheckResult",
    "verify_phi0_uniqueness",
]


@dataclass(frozen=True)
class PhaseFunction:
    """Affine phase zeta . x + zeta_c multiplying the wavefunction.

    The stored zeta tuple is the one appearing in the signed contraction
    i * vector_contract(zeta) of the invariance condition.  The scalar
    value at a coordinate 4-tuple uses the plain component sum, which is
    all the phase-application contract depends on.
    """

    zeta: np.ndarray
    zeta_c: complex = 0.0

    def __post_init__(self):
        z = np.asarray(self.zeta, dtype=np.complex128)
        if z.shape != (4,):
            raise ValueError(f"zeta must have 4 components, got shape {z.shape}")
        z.flags.writeable = False
        object.__setattr__(self, "zeta", z)
        object.__setattr__(self, "zeta_c", complex(self.zeta_c))

    @classmethod
    def zero(cls) -> "PhaseFunction":
        return cls(np.zeros(4, dtype=np.complex128))

    def value(self, x) -> complex:
        x = np.asarray(x, dtype=np.complex128)
        if x.shape != (4,):
            raise ValueError(f"coordinate must have 4 components, got {x.shape}")
        return complex(np.dot(self.zeta, x) + self.zeta_c)


_IMAG_TOL = 1e-12


@dataclass(frozen=True)
class GeneralizedParams:
    """Free parameters of the generalized first-order equation.

    a and the four c coefficients must be purely imaginary so that the
    resulting Hamiltonian is Hermitian; the real physical quantities are
    the rest mass m0 = -i*a, the energy shift = i*c0 and the momentum
    shift components = -i*cj.
    """

    a: complex
    c: np.ndarray

    def __post_init__(self):
        a = complex(self.a)
        c = np.asarray(self.c, dtype=np.complex128)
        if c.shape != (4,):
            raise ValueError(f"c must have 4 components, got shape {c.shape}")
        if abs(a.real) > _IMAG_TOL or float(np.max(np.abs(c.real))) > _IMAG_TOL:
            raise ValueError("a and c must be purely imaginary for Hermiticity")
        if (-1j * a).real < 0.0:
            raise ValueError("rest mass -i*a must be nonnegative")
        c.flags.writeable = False
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "c", c)

    @classmethod
    def from_physical(cls, m0: float, eps_tilde: float = 0.0, p_tilde=(0.0, 0.0, 0.0)) -> "GeneralizedParams":
        p = np.asarray(p_tilde, dtype=float)
        if p.shape == ():
            p = np.array([0.0, 0.0, float(p)])
        if p.shape != (3,):
            raise ValueError(f"p_tilde must have 3 components, got shape {p.shape}")
        c = np.array(
            [-1j * eps_tilde, 1j * p[0], 1j * p[1], 1j * p[2]], dtype=np.complex128
        )
        return cls(a=1j * m0, c=c)

    @classmethod
    def standard(cls, m0: float) -> "GeneralizedParams":
        """Zero-phase special case: mass only."""
        return cls.from_physical(m0)

    @property
    def m0(self) -> float:
        return (-1j * self.a).real

    @property
    def eps_tilde(self) -> float:
        return (1j * self.c[0]).real

    @property
    def p_tilde(self) -> np.ndarray:
        return (-1j * self.c[1:]).real.copy()

    def cache_key(self):
        return (complex(self.a), tuple(complex(z) for z in self.c))


def zeta_rotation(c, axis: int, theta: float) -> PhaseFunction:
    """Phase gradient restoring invariance under a rotation.

    Only the two plane components are nonzero:

        zeta_k = -i*c_k*(1 - cos t) - i*c_l*sin t
        zeta_l = -i*c_l*(1 - cos t) + i*c_k*sin t

    with (axis, k, l) cyclic.  The signs are fixed by requiring
    bc_condition_residual to vanish for the half-angle rotation matrices;
    see the module tests for the closure property.
    """
    if axis not in ROTATION_PLANES:
        raise ValueError(f"axis must be 1, 2 or 3, got {axis}")
    c = np.asarray(c, dtype=np.complex128)
    k, l = ROTATION_PLANES[axis]
    z = np.zeros(4, dtype=np.complex128)
    z[k] = -1j * c[k] * (1 - np.cos(theta)) - 1j * c[l] * np.sin(theta)
    z[l] = -1j * c[l] * (1 - np.cos(theta)) + 1j * c[k] * np.sin(theta)
    return PhaseFunction(z)


def zeta_boost(c, axis: int, eta: float) -> PhaseFunction:
    """Phase gradient restoring invariance under a boost.

    Only the time component and the boosted component are nonzero:

        zeta_0 = 2i*c_0*sinh^2(e/2) + 2*c_a*sinh(e/2)cosh(e/2)
        zeta_a = 2i*c_a*sinh^2(e/2) - 2*c_0*sinh(e/2)cosh(e/2)
    """
    if axis not in ROTATION_PLANES:
        raise ValueError(f"axis must be 1, 2 or 3, got {axis}")
    c = np.asarray(c, dtype=np.complex128)
    sh = np.sinh(eta / 2)
    ch = np.cosh(eta / 2)
    z = np.zeros(4, dtype=np.complex128)
    z[0] = 2j * c[0] * sh * sh + 2 * c[axis] * sh * ch
    z[axis] = 2j * c[axis] * sh * sh - 2 * c[0] * sh * ch
    return PhaseFunction(z)


def zeta_for(c, transform: PoincareTransform) -> PhaseFunction:
    """The matching phase gradient for an arbitrary single-axis transform."""
    if transform.kind == "rotation":
        return zeta_rotation(c, transform.axis, transform.parameter)
    return zeta_boost(c, transform.axis, transform.parameter)


def bc_matrix(a, c) -> np.ndarray:
    """Constant matrix a*I + signed contraction of c over the generators."""
    return complex(a) * I4 + vector_contract(c)


def bc_condition_residual(a, c, transform: PoincareTransform, phase: PhaseFunction) -> float:
    """Max-norm defect of the invariance condition for (a, c, T, phase).

    Arbitrary complex a and c are accepted here so that negative controls
    can probe non-Hermitian candidates.
    """
    B = bc_matrix(a, c)
    S = transform.spinor_rep
    Sinv = transform.spinor_inverse()
    return max_abs(B - S @ B @ Sinv - 1j * vector_contract(phase.zeta))


def phase_apply(psi, phase: PhaseFunction, x) -> np.ndarray:
    """Multiply a spinor sample by exp(i * phase(x))."""
    psi = np.asarray(psi, dtype=np.complex128)
    return np.exp(1j * phase.value(x)) * psi


# ---------------------------------------------------------------------------
# Zero-phase uniqueness suite
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    """One named residual check with its pass/fail verdict."""

    name: str
    max_residual: float
    passed: bool

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"CHECK {self.name} max_residual={self.max_residual:.6e} {status}"


def _ansatz_bset(v) -> list[np.ndarray]:
    """Block ansatz: time matrix from scalar blocks, spatial from Pauli blocks.

    v = (p, q, s, t, e, f, g, h); the three spatial matrices share the same
    four block coefficients.
    """
    p, q, s, t, e, f, g, h = np.asarray(v, dtype=np.complex128)
    i2 = np.eye(2, dtype=np.complex128)
    bt = np.block([[p * i2, q * i2], [s * i2, t * i2]])
    bs = [np.block([[e * sig, f * sig], [g * sig, h * sig]]) for sig in PAULI]
    return [bt] + bs


GAMMA_ANSATZ = np.array([1, 0, 0, -1, 0, 1j, -1j, 0], dtype=np.complex128)
CHIRAL_ANSATZ = np.array([0, 1, -1, 0, 1j, 0, 0, -1j], dtype=np.complex128)


def _listed_constraint_residual(bset) -> float:
    """The boost (anti)commutation constraints of the zero-phase analysis.

    For each boost axis b with generator X = gamma(b)gamma(0): the time
    matrix and the matrix along b anticommute with X, the transverse
    matrices commute with X.  These constraints are insensitive to an
    overall scale on either block family.
    """
    worst = 0.0
    for b in (1, 2, 3):
        X = gamma(b) @ gamma(0)
        worst = max(worst, max_abs(anticommutator(bset[0], X)))
        worst = max(worst, max_abs(anticommutator(bset[b], X)))
        for j in (1, 2, 3):
            if j != b:
                worst = max(worst, max_abs(commutator(bset[j], X)))
    return worst


_NULLSPACE_PARAMS = (0.5, 0.9, 1.3)


def _covariance_system_matrix() -> np.ndarray:
    """Stacked linear map from ansatz coefficients to covariance defects.

    Rows sample both transform kinds on all axes at three parameter values
    each, enough to pin the cosh/sinh (cos/sin) coefficient matrices
    separately, so the kernel consists of tuples covariant under every
    parameter value.
    """
    transforms = []
    for axis in (1, 2, 3):
        for par in _NULLSPACE_PARAMS:
            transforms.append(PoincareTransform.rotation(axis, par))
            transforms.append(PoincareTransform.boost(axis, par))

    def defect(v):
        bset = _ansatz_bset(v)
        rows = []
        for t in transforms:
            S, Sinv, L = t.spinor_rep, t.spinor_inverse(), t.vector_rep
            for beta in range(4):
                lhs = sum(L[beta, mu] * bset[mu] for mu in range(4))
                rows.append((lhs - S @ bset[beta] @ Sinv).ravel())
        return np.concatenate(rows)

    cols = [defect(np.eye(8)[i]) for i in range(8)]
    return np.stack(cols, axis=1)


def _nullspace(mat: np.ndarray, rel_tol: float = 1e-10):
    u, s, vh = np.linalg.svd(mat)
    cutoff = rel_tol * s[0]
    dim = int(np.sum(s < cutoff))
    basis = vh[mat.shape[1] - dim:].conj().T if dim else np.zeros((mat.shape[1], 0))
    return dim, basis


def _containment_residual(basis: np.ndarray, v: np.ndarray) -> float:
    v = v / np.linalg.norm(v)
    proj = basis @ (basis.conj().T @ v)
    return float(np.linalg.norm(v - proj))


_EVEN_GENERATORS = tuple(
    gamma(k) @ gamma(l) for (k, l) in ((1, 2), (1, 3), (2, 3))
) + tuple(gamma(k) @ gamma(0) for k in (1, 2, 3))


def _commutant_matrix(column_indices) -> np.ndarray:
    mats = basis_matrices()
    cols = []
    for i in column_indices:
        m = mats[i]
        cols.append(np.concatenate([commutator(m, g).ravel() for g in _EVEN_GENERATORS]))
    return np.stack(cols, axis=1)


def verify_phi0_uniqueness(
    trials: int = 100,
    seed: int = 0,
    tol: float = 1e-10,
    violation_floor: float = 1e-3,
) -> list[CheckResult]:
    """Numerical evidence that zero phase forces the standard structure.

    Returns one CheckResult per constraint group:

    * the generator 4-tuple satisfies every listed constraint;
    * the full covariance-linear system on the block ansatz has a
      two-dimensional solution space, one overall scale for the generator
      family and one for its chiral partner (which is unitarily
      equivalent), and both structures lie inside it;
    * seeded random ansatz draws each violate at least one constraint;
    * a constant matrix commuting with all even generator products is
      forced to a multiple of the identity once restricted to the
      Hermitian part of the basis;
    * a bare generator used as the constant matrix violates the
      commutation constraints outright.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    rng = np.random.default_rng(seed)
    results: list[CheckResult] = []

    gamma_bset = _ansatz_bset(GAMMA_ANSATZ)
    r = _listed_constraint_residual(gamma_bset)
    results.append(CheckResult("phi0_gamma_structure", r, r <= tol))

    dim, basis = _nullspace(_covariance_system_matrix())
    stat = float(abs(dim - 2))
    if dim:
        stat = max(stat, _containment_residual(basis, GAMMA_ANSATZ))
        stat = max(stat, _containment_residual(basis, CHIRAL_ANSATZ))
    else:
        stat = 1.0
    # Reconstructed basis tuples must themselves pass the covariance check.
    cov_worst = 0.0
    for i in range(basis.shape[1]):
        bset = _ansatz_bset(basis[:, i])
        for axis in (1, 2, 3):
            cov_worst = max(
                cov_worst,
                covariance_residual(bset, PoincareTransform.rotation(axis, 0.8)),
                covariance_residual(bset, PoincareTransform.boost(axis, 0.8)),
            )
    stat = max(stat, cov_worst)
    results.append(CheckResult("phi0_ansatz_nullspace", stat, stat <= tol))

    weakest = np.inf
    for _ in range(trials):
        v = rng.uniform(-1, 1, 8) + 1j * rng.uniform(-1, 1, 8)
        weakest = min(weakest, _listed_constraint_residual(_ansatz_bset(v)))
    results.append(
        CheckResult("phi0_random_violation", float(weakest), weakest >= violation_floor)
    )

    labels = basis_labels()
    hermitian_cols = [i for i in range(16) if labels[i] != "e5"]
    dim_h, basis_h = _nullspace(_commutant_matrix(hermitian_cols))
    identity_coeffs = np.zeros(15, dtype=np.complex128)
    identity_coeffs[0] = 1.0
    stat = float(abs(dim_h - 1))
    stat = max(stat, _containment_residual(basis_h, identity_coeffs) if dim_h else 1.0)
    results.append(CheckResult("phi0_bc_commutant", stat, stat <= tol))

    worst_gamma1 = max(
        max_abs(commutator(gamma(1), g)) for g in _EVEN_GENERATORS
    )
    results.append(
        CheckResult("phi0_bc_negative", worst_gamma1, worst_gamma1 >= violation_floor)
    )
    return results
