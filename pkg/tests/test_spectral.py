"""Quasi-energy extraction, pairing statistics, and the reflection symmetry."""

import math

import numpy as np
import pytest

from kicked_ising import (
    EXACT_PAIR_TOL,
    FloquetParams,
    QuasiEnergySpectrum,
    StateVector,
    build_dense_propagator,
    check_time_reflection,
    count_exact_pi_pairs,
    evolve_stroboscopic,
    floquet_step,
    fold_to_branch,
    gap_statistics,
    overlap_with_pair_manifold,
    paired_superposition,
    polarized_state,
    propagator_spectrum,
    quasi_energies,
    reflection_operator,
)

from conftest import random_state


class TestFoldToBranch:
    def test_edges_and_interior(self):
        assert fold_to_branch(0.0) == pytest.approx(0.0)
        assert fold_to_branch(math.pi) == pytest.approx(math.pi)
        assert fold_to_branch(-math.pi) == pytest.approx(math.pi)  # branch is half-open
        assert fold_to_branch(1.5 * math.pi) == pytest.approx(-0.5 * math.pi)
        assert fold_to_branch(-1.5 * math.pi) == pytest.approx(0.5 * math.pi)

    def test_array_and_period(self):
        folded = fold_to_branch(np.array([2.0 * math.pi, 3.0 * math.pi]))
        assert np.allclose(folded, [0.0, math.pi])
        # Branch scales with the period: T = 2 folds into (-pi/2, pi/2].
        assert fold_to_branch(0.6 * math.pi, period=2.0) == pytest.approx(-0.4 * math.pi)


class TestQuasiEnergies:
    def test_identity_and_global_phase(self):
        spec = quasi_energies(np.eye(4, dtype=complex))
        assert np.allclose(spec.energies, 0.0)
        spec = quasi_energies(np.exp(-1j * math.pi / 2) * np.eye(4, dtype=complex))
        assert np.allclose(spec.energies, math.pi / 2)

    def test_diagonal_example_sorted_on_branch(self):
        targets = np.array([math.pi, -math.pi / 2, 0.0, math.pi / 2])
        U = np.diag(np.exp(-1j * targets))
        spec = quasi_energies(U)
        assert np.allclose(spec.energies, sorted(targets), atol=1e-14)
        assert spec.dim == 4
        assert spec.L == 2

    def test_rejects_non_unitary_and_non_square(self):
        with pytest.raises(ValueError, match="unitary"):
            quasi_energies(np.diag([1.0, 0.5]).astype(complex))
        with pytest.raises(ValueError, match="square"):
            quasi_energies(np.ones((2, 3), dtype=complex))

    def test_eigvals_and_schur_paths_agree(self):
        params = FloquetParams.from_dimensionless(5, 0.83, 0.12)
        U = build_dense_propagator(params)
        fast = quasi_energies(U)
        full = quasi_energies(U, keep_vectors=True)
        assert fast.eigenvectors is None
        assert np.max(np.abs(fast.energies - full.energies)) < 1e-10

    def test_reconstruction_from_schur_vectors(self):
        params = FloquetParams.from_dimensionless(5, 0.83, 0.12)
        U = build_dense_propagator(params).matrix
        spec = quasi_energies(U, keep_vectors=True)
        V = spec.eigenvectors
        assert np.max(np.abs(V.conj().T @ V - np.eye(spec.dim))) < 1e-12
        rebuilt = V @ np.diag(np.exp(-1j * spec.energies * spec.T)) @ V.conj().T
        assert np.max(np.abs(rebuilt - U)) < 1e-9


class TestGapStatistics:
    def test_four_level_example(self):
        energies = np.array([-math.pi / 2, 0.0, math.pi / 2, math.pi])
        stats = gap_statistics(QuasiEnergySpectrum(L=2, T=1.0, energies=energies))
        assert stats.delta0_mean == pytest.approx(math.pi / 2)
        assert stats.delta_pi_mean == pytest.approx(0.0, abs=1e-15)
        assert stats.ratio == pytest.approx(0.0, abs=1e-15)

    def test_synthetic_rigid_pairs_have_zero_pi_deviation(self, rng):
        g = np.sort(rng.uniform(0.05, math.pi / 2 - 0.05, size=8))
        energies = np.concatenate([g - math.pi, g])  # each level has a partner at +pi
        stats = gap_statistics(QuasiEnergySpectrum(L=4, T=1.0, energies=energies))
        assert stats.delta_pi_mean == pytest.approx(0.0, abs=1e-14)

    def test_degenerate_spectrum_gives_infinite_ratio(self):
        energies = np.zeros(4)
        stats = gap_statistics(QuasiEnergySpectrum(L=2, T=1.0, energies=energies))
        assert math.isinf(stats.ratio)

    def test_odd_dimension_rejected(self):
        with pytest.raises(ValueError):
            gap_statistics(QuasiEnergySpectrum(L=2, T=1.0, energies=np.zeros(3)))


class TestReflectionOperator:
    def test_single_site_matrix(self):
        assert np.array_equal(reflection_operator(1), np.array([[0.0, -1.0], [1.0, 0.0]]))

    def test_two_site_matrix(self):
        expected = np.array(
            [
                [0.0, 0.0, 0.0, 1.0],
                [0.0, 0.0, -1.0, 0.0],
                [0.0, -1.0, 0.0, 0.0],
                [1.0, 0.0, 0.0, 0.0],
            ]
        )
        assert np.array_equal(reflection_operator(2), expected)

    @pytest.mark.parametrize("L", [1, 2, 3, 4, 5])
    def test_unitary_and_squares_to_parity_sign(self, L):
        R = reflection_operator(L)
        dim = 2**L
        assert np.max(np.abs(R @ R.T - np.eye(dim))) < 1e-14
        assert np.max(np.abs(R @ R - (-1.0) ** L * np.eye(dim))) < 1e-14

    def test_validation(self):
        with pytest.raises(ValueError):
            reflection_operator(0)


class TestTimeReflection:
    @pytest.mark.parametrize("L", [3, 4, 5, 6])
    def test_exact_at_jt_pi_for_any_kick(self, L):
        for eps_over_pi in (0.1, 0.1177):
            params = FloquetParams.from_dimensionless(L, 1.0, eps_over_pi)
            assert check_time_reflection(params) < 1e-12

    @pytest.mark.parametrize("L", [3, 4, 5, 6])
    def test_broken_away_from_jt_pi(self, L):
        params = FloquetParams.from_dimensionless(L, 0.5, 0.1)
        assert check_time_reflection(params) > 1e-2


class TestPairCounting:
    def test_tolerance_drives_the_count(self):
        energies = np.sort(
            np.array([0.0, 1e-12, -math.pi + 3e-11, math.pi - 1e-9, 0.4])
        )
        spec = QuasiEnergySpectrum(L=2, T=1.0, energies=energies)
        counts = count_exact_pi_pairs(spec)
        assert counts.n_zero == 2
        # -pi + 3e-11 sits 3e-11 from the pi anchor across the branch edge;
        # pi - 1e-9 misses the default 1e-10 tolerance.
        assert counts.n_pi == 1
        loose = count_exact_pi_pairs(spec, tol=1e-8)
        assert loose.n_pi == 2

    def test_aligned_counts_at_the_special_point(self):
        spec = propagator_spectrum(FloquetParams.from_dimensionless(4, 1.0, 0.1))
        counts = count_exact_pi_pairs(spec)
        assert (counts.n_zero, counts.n_pi) == (4, 6)

    def test_raw_reference_swaps_the_anchors_for_this_size(self):
        # exp(+i JT L / 4) = -1 at L = 4, JT = pi: a rigid half-period shift.
        params = FloquetParams.from_dimensionless(4, 1.0, 0.1)
        raw = count_exact_pi_pairs(propagator_spectrum(params, phase_reference="raw"))
        assert (raw.n_zero, raw.n_pi) == (6, 4)

    def test_phase_reference_validation(self):
        with pytest.raises(ValueError):
            propagator_spectrum(
                FloquetParams.from_dimensionless(4, 1.0, 0.1), phase_reference="x"
            )


class TestPairedStates:
    @pytest.fixture
    def paired_spectrum(self):
        params = FloquetParams.from_dimensionless(4, 1.0, 0.1)
        return params, propagator_spectrum(params, keep_vectors=True)

    @staticmethod
    def _anchor_indices(spec):
        zero_index = int(np.argmin(np.abs(fold_to_branch(spec.energies))))
        pi_index = int(np.argmin(np.abs(fold_to_branch(spec.energies - math.pi / spec.T))))
        return zero_index, pi_index

    def test_superposition_swaps_and_revives(self, paired_spectrum):
        params, spec = paired_spectrum
        zero_index, pi_index = self._anchor_indices(spec)
        plus = paired_superposition(spec, zero_index, pi_index, sign=+1)
        minus = paired_superposition(spec, zero_index, pi_index, sign=-1)
        once = floquet_step(plus, params)
        # One period maps the + combination onto the - one (up to global phase)...
        assert abs(np.vdot(minus.amplitudes, once.amplitudes)) == pytest.approx(1.0, abs=1e-10)
        # ...and two periods bring it back exactly.
        twice = floquet_step(once, params)
        p2 = abs(np.vdot(plus.amplitudes, twice.amplitudes)) ** 2
        assert p2 == pytest.approx(1.0, abs=1e-10)

    def test_superposition_validation(self, paired_spectrum):
        params, spec = paired_spectrum
        zero_index, pi_index = self._anchor_indices(spec)
        bulk = int(np.argmax(np.abs(np.abs(spec.energies) - math.pi / 2) < 0.4))
        with pytest.raises(ValueError, match="away from"):
            paired_superposition(spec, bulk, pi_index)
        with pytest.raises(ValueError, match="sign"):
            paired_superposition(spec, zero_index, pi_index, sign=0)
        plain = propagator_spectrum(params)
        with pytest.raises(ValueError, match="eigenvectors"):
            paired_superposition(plain, zero_index, pi_index)

    def test_manifold_weight_of_a_paired_state_is_one(self, paired_spectrum):
        _, spec = paired_spectrum
        zero_index, pi_index = self._anchor_indices(spec)
        state = paired_superposition(spec, zero_index, pi_index)
        assert overlap_with_pair_manifold(state, spec) == pytest.approx(1.0, abs=1e-10)

    def test_manifold_weight_is_a_probability(self, paired_spectrum, rng):
        _, spec = paired_spectrum
        state = StateVector(4, random_state(4, rng))
        weight = overlap_with_pair_manifold(state, spec)
        assert 0.0 <= weight <= 1.0 + 1e-12

    def test_polarized_state_weight_at_eight_sites(self):
        params = FloquetParams.from_dimensionless(8, 1.0, 0.1)
        spec = propagator_spectrum(params, keep_vectors=True)
        weight = overlap_with_pair_manifold(polarized_state(8), spec)
        assert weight == pytest.approx(0.854990, abs=1e-5)

    def test_dimension_mismatch(self, paired_spectrum):
        _, spec = paired_spectrum
        with pytest.raises(ValueError):
            overlap_with_pair_manifold(polarized_state(5), spec)


def test_paired_state_revival_survives_evolution():
    """The constructed superposition returns to itself every second period."""
    params = FloquetParams.from_dimensionless(4, 1.0, 0.1)
    spec = propagator_spectrum(params, keep_vectors=True)
    zero_index = int(np.argmin(np.abs(fold_to_branch(spec.energies))))
    pi_index = int(np.argmin(np.abs(fold_to_branch(spec.energies - math.pi))))
    state = paired_superposition(spec, zero_index, pi_index)
    series = evolve_stroboscopic(state, params, 40)
    assert np.min(series.return_probability[1::2]) > 1.0 - 1e-10
