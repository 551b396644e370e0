"""Non-relativistic limit forms and their approach to the full branch."""

import numpy as np
import pytest
import scipy.linalg

from diraclab.clifford import pauli
from diraclab.nonrel import (
    NonRelParams,
    dirac_energy,
    kinetic_minus_rest,
    levy_leblond_solve,
    nonrel_abs_error,
    nonrel_error,
    pauli_energy,
)

FREE = NonRelParams(m0=1.0)


def random_nonrel(rng):
    return NonRelParams(
        m0=float(rng.uniform(0.2, 4.0)),
        eps_tilde=float(rng.uniform(-1.0, 1.0)),
        c_tilde=rng.uniform(-1.0, 1.0, 3),
        scalar_potential=float(rng.uniform(-0.5, 0.5)),
    )


class TestParams:
    def test_validation(self):
        with pytest.raises(ValueError):
            NonRelParams(m0=0.0)
        with pytest.raises(ValueError):
            NonRelParams(m0=1.0, c_light=0.0)
        with pytest.raises(ValueError):
            NonRelParams(m0=1.0, c_tilde=np.zeros(2))

    def test_scalar_c_tilde_means_z(self):
        p = NonRelParams(m0=1.0, c_tilde=0.2)
        np.testing.assert_allclose(p.c_tilde, [0, 0, 0.2])


class TestPauliEnergy:
    def test_free_rest(self):
        assert pauli_energy(np.zeros(3), FREE) == 0.0

    def test_free_momentum(self):
        assert pauli_energy([0, 0, 0.1], FREE) == pytest.approx(0.005)

    def test_shifted_example(self):
        p = NonRelParams(m0=1.0, eps_tilde=0.1, c_tilde=(0, 0, 0.2))
        assert pauli_energy(np.zeros(3), p) == pytest.approx(-0.08)

    def test_rejects_vector_potential(self):
        with pytest.raises(ValueError):
            pauli_energy(np.zeros(3), FREE, vector_potential=[0.1, 0, 0])
        # explicitly zero is fine
        assert pauli_energy(np.zeros(3), FREE, vector_potential=np.zeros(3)) == 0.0

    def test_constant_scalar_potential_shifts(self):
        p = NonRelParams(m0=2.0, scalar_potential=0.3, charge=-1.0)
        base = NonRelParams(m0=2.0)
        k = np.array([0.1, -0.2, 0.3])
        assert pauli_energy(k, p) == pytest.approx(pauli_energy(k, base) - 0.3)


class TestLevyLeblond:
    def test_rest_case(self):
        p = NonRelParams(m0=1.0, eps_tilde=0.4)
        sol = levy_leblond_solve(np.zeros(3), p)
        assert sol.energy == pytest.approx(-0.4)
        np.testing.assert_allclose(sol.chi, 0, atol=1e-15)

    def test_example_energy(self):
        sol = levy_leblond_solve([0, 0, 0.2], FREE)
        assert sol.energy == pytest.approx(0.02)

    def test_chi_elimination_relation(self):
        rng = np.random.default_rng(61)
        for _ in range(50):
            p = random_nonrel(rng)
            k = rng.uniform(-1, 1, 3)
            kk = k + p.c_tilde
            sk = kk[0] * pauli(1) + kk[1] * pauli(2) + kk[2] * pauli(3)
            sol = levy_leblond_solve(k, p)
            np.testing.assert_allclose(
                sol.chi, (sk @ sol.phi) / (2 * p.m0), atol=1e-13
            )
            # both linked equations hold
            np.testing.assert_allclose(
                (sol.energy + p.eps_tilde) * sol.phi, sk @ sol.chi, atol=1e-12
            )
            norm = np.vdot(sol.phi, sol.phi).real + np.vdot(sol.chi, sol.chi).real
            assert norm == pytest.approx(1.0)

    def test_against_generalized_eigenproblem(self):
        # Independent oracle: the linked pair as a 4-dim generalized
        # eigenproblem; its two finite eigenvalues are the limit energy.
        rng = np.random.default_rng(62)
        i2, z2 = np.eye(2), np.zeros((2, 2))
        for _ in range(25):
            p = random_nonrel(rng)
            k = rng.uniform(-1, 1, 3)
            kk = k + p.c_tilde
            sk = kk[0] * pauli(1) + kk[1] * pauli(2) + kk[2] * pauli(3)
            m = np.block([[p.eps_tilde * i2, -sk], [sk, -2 * p.m0 * i2]])
            n = np.block([[-i2, z2], [z2, z2]])
            eig = scipy.linalg.eig(m, n, right=False)
            finite = sorted(x.real for x in eig if np.isfinite(x))
            assert len(finite) == 2
            sol = levy_leblond_solve(k, p)
            np.testing.assert_allclose(finite, [sol.energy, sol.energy], atol=1e-10)

    def test_equals_pauli_at_zero_potential(self):
        rng = np.random.default_rng(63)
        for _ in range(100):
            p = NonRelParams(
                m0=float(rng.uniform(0.2, 4.0)),
                eps_tilde=float(rng.uniform(-1.0, 1.0)),
                c_tilde=rng.uniform(-1.0, 1.0, 3),
            )
            k = rng.uniform(-1, 1, 3)
            assert abs(levy_leblond_solve(k, p).energy - pauli_energy(k, p)) <= 1e-13

    def test_phi_seed(self):
        sol = levy_leblond_solve([0, 0, 0.2], FREE, phi_seed=[0.0, 1.0])
        assert abs(sol.phi[0]) <= 1e-15
        with pytest.raises(ValueError):
            levy_leblond_solve(np.zeros(3), FREE, phi_seed=[1.0, 0.0, 0.0])


class TestLimitError:
    def test_example_value(self):
        err = nonrel_error([0, 0, 0.1], FREE)
        assert err.relative
        assert err.value == pytest.approx(0.0024875775822101594, rel=1e-9)
        assert err.value == pytest.approx(2.5e-3, rel=0.01)

    def test_series_oracle(self):
        # direct subtraction at moderate momentum, where cancellation is
        # harmless, agrees with the stable closed form
        for kz in (0.05, 0.1, 0.3, 0.6):
            direct = abs(np.sqrt(1 + kz ** 2) - 1 - kz ** 2 / 2)
            assert nonrel_abs_error([0, 0, kz], FREE) == pytest.approx(direct, rel=1e-9)

    def test_vanishes_at_rest(self):
        p = NonRelParams(m0=1.0, eps_tilde=0.3)
        err = nonrel_error(np.zeros(3), p)
        assert err.relative
        assert err.value == 0.0

    def test_quadratic_relative_scaling(self):
        e1 = nonrel_error([0, 0, 0.01], FREE).value
        e2 = nonrel_error([0, 0, 0.02], FREE).value
        assert e2 / e1 == pytest.approx(4.0, rel=0.01)

    def test_small_momentum_regime(self):
        # whenever the kinetic momentum |k + shift| stays below 0.1 m0 c
        # the relative error stays within a percent (energy shift zero, so
        # the limit energy cannot pass through zero and mask the regime)
        rng = np.random.default_rng(64)
        for _ in range(50):
            m0 = float(rng.uniform(0.2, 4.0))
            shift = rng.uniform(-0.5, 0.5, 3) * m0
            p = NonRelParams(m0=m0, c_tilde=shift)
            direction = rng.normal(size=3)
            direction /= np.linalg.norm(direction)
            kinetic = float(rng.uniform(0.01, 0.1)) * m0
            k = kinetic * direction - shift
            err = nonrel_error(k, p)
            assert err.relative
            assert err.value <= 0.01

    def test_quartic_absolute_slope(self):
        ks = np.geomspace(1e-3, 1e-1, 25)
        errs = np.array([nonrel_abs_error([0, 0, k], FREE) for k in ks])
        slope = np.polyfit(np.log(ks), np.log(errs), 1)[0]
        assert slope == pytest.approx(4.0, abs=0.1)
        # prefactor 1/(8 m0^3 c^2) at the small end
        assert errs[0] == pytest.approx(ks[0] ** 4 / 8.0, rel=1e-4)

    def test_absolute_fallback_flagged(self):
        err = nonrel_error(np.zeros(3), FREE)
        assert not err.relative
        assert err.value == 0.0

    def test_rejects_relativistic_momentum(self):
        with pytest.raises(ValueError):
            nonrel_error([0, 0, 1.5], FREE)

    def test_physical_units_consistency(self):
        # restoring the light speed: same physics, scaled error
        p = NonRelParams(m0=1.0, c_light=137.0)
        kz = 0.5
        expected = kz ** 4 / (8 * 137.0 ** 2)
        assert nonrel_abs_error([0, 0, kz], p) == pytest.approx(expected, rel=1e-3)

    def test_dirac_energy_branches(self):
        p = NonRelParams(m0=1.0, eps_tilde=0.2, scalar_potential=0.1)
        kz = 0.4
        w = np.sqrt(1 + kz ** 2)
        assert dirac_energy([0, 0, kz], p, +1) == pytest.approx(w + 0.1 - 0.2)
        assert dirac_energy([0, 0, kz], p, -1) == pytest.approx(-w + 0.1 - 0.2)
        with pytest.raises(ValueError):
            dirac_energy(np.zeros(3), p, 0)

    def test_kinetic_consistency(self):
        p = NonRelParams(m0=1.0, eps_tilde=0.2, scalar_potential=0.1)
        kz = 0.4
        lhs = kinetic_minus_rest([0, 0, kz], p)
        rhs = dirac_energy([0, 0, kz], p, +1) - 1.0 - 0.1 + 0.2
        assert lhs == pytest.approx(rhs, abs=1e-14)

    def test_standard_reduction(self):
        # zero shifts recover the plain kinetic forms exactly
        gen = NonRelParams(m0=1.7)
        k = np.array([0.1, 0.2, -0.3])
        assert pauli_energy(k, gen) == pytest.approx(float(k @ k) / (2 * 1.7), abs=1e-15)
        assert levy_leblond_solve(k, gen).energy == pytest.approx(
            float(k @ k) / (2 * 1.7), abs=1e-15
        )
