"""Tests for the dense linear algebra primitives."""

import numpy as np
import pytest

from switchcap.errors import (
    DimensionMismatchError,
    InvalidSpectrumError,
    InvalidStateError,
    NoConvergenceError,
    NotHermitianError,
)
from switchcap.linalg import (
    dagger,
    hermitian_spectrum,
    partial_trace,
    tensor,
    validate_density_matrix,
    von_neumann_entropy,
)

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)

# -sum(p log2 p) for {5/8, 3/8}, evaluated with 40-digit arithmetic.
ENTROPY_5_8 = 0.95443400292496496


def kron_oracle(a, b):
    """Elementwise Kronecker product straight from the definition."""
    ra, ca = a.shape
    rb, cb = b.shape
    out = np.zeros((ra * rb, ca * cb), dtype=complex)
    for i in range(ra):
        for j in range(ca):
            for k in range(rb):
                for l in range(cb):
                    out[i * rb + k, j * cb + l] = a[i, j] * b[k, l]
    return out


class TestTensor:
    def test_identity_times_identity(self):
        assert np.array_equal(tensor(np.eye(2), np.eye(2)), np.eye(4))

    def test_projector_times_identity(self):
        got = tensor(np.diag([1.0, 0.0]), np.eye(2))
        assert np.array_equal(got, np.diag([1.0, 1.0, 0.0, 0.0]))

    def test_pauli_pair_matches_elementwise_definition(self):
        got = tensor(PAULI_X, PAULI_Z)
        assert np.array_equal(got, kron_oracle(PAULI_X, PAULI_Z))
        # antidiagonal blocks carrying +/-1 entries only
        assert set(np.unique(got.real)) == {-1.0, 0.0, 1.0}

    def test_associative_on_integer_matrices(self):
        rng = np.random.default_rng(11)
        a = rng.integers(-3, 4, size=(2, 3)).astype(complex)
        b = rng.integers(-3, 4, size=(3, 2)).astype(complex)
        c = rng.integers(-3, 4, size=(2, 2)).astype(complex)
        assert np.array_equal(tensor(tensor(a, b), c), tensor(a, tensor(b, c)))


class TestHermitianSpectrum:
    def test_diagonal_input(self):
        values = hermitian_spectrum(np.diag([0.375, 0.25, 0.25, 0.125]))
        assert np.allclose(values, [0.375, 0.25, 0.25, 0.125], atol=1e-14)

    def test_qubit_closed_form(self):
        # (I + 0.6 X) / 2 has eigenvalues (1 +/- 0.6) / 2
        rho = (np.eye(2) + 0.6 * PAULI_X) / 2
        assert np.allclose(hermitian_spectrum(rho), [0.8, 0.2], atol=1e-14)

    def test_two_order_switch_output_spectrum(self):
        # joint output for two orders, qubit target, pure input:
        # blocks I/4 on the diagonal and rho/8 off the diagonal
        rho = np.diag([1.0, 0.0]).astype(complex)
        state = np.block([[np.eye(2) / 4, rho / 8], [rho / 8, np.eye(2) / 4]])
        values = hermitian_spectrum(state)
        assert np.allclose(values, [3 / 8, 1 / 4, 1 / 4, 1 / 8], atol=1e-14)

    @pytest.mark.parametrize("n", [2, 3, 5, 8, 13])
    def test_matches_lapack_on_random_hermitian(self, n):
        rng = np.random.default_rng(n)
        a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        h = (a + dagger(a)) / 2
        got = hermitian_spectrum(h)
        expected = np.sort(np.linalg.eigvalsh(h))[::-1]
        assert np.abs(got - expected).max() < 1e-12

    def test_eigenvalue_sum_reproduces_trace(self):
        rng = np.random.default_rng(5)
        for _ in range(20):
            a = rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6))
            h = (a + dagger(a)) / 2
            assert abs(hermitian_spectrum(h).sum() - np.trace(h).real) < 1e-10

    def test_shift_invariance(self):
        rng = np.random.default_rng(17)
        a = rng.standard_normal((7, 7)) + 1j * rng.standard_normal((7, 7))
        h = (a + dagger(a)) / 2
        for c in (-2.5, 0.75, 10.0):
            shifted = hermitian_spectrum(h + c * np.eye(7))
            assert np.abs(shifted - (hermitian_spectrum(h) + c)).max() < 1e-10

    def test_rejects_non_square(self):
        with pytest.raises(NotHermitianError):
            hermitian_spectrum(np.ones((2, 3)))

    def test_rejects_non_hermitian(self):
        m = np.array([[0.0, 1.0], [0.0, 0.0]])
        with pytest.raises(NotHermitianError):
            hermitian_spectrum(m)

    def test_exhausted_sweep_budget(self):
        with pytest.raises(NoConvergenceError):
            hermitian_spectrum(PAULI_X, max_sweeps=0)


class TestVonNeumannEntropy:
    def test_pure_state(self):
        assert von_neumann_entropy(np.array([1.0, 0.0])) == 0.0

    def test_maximally_mixed_qubit(self):
        assert von_neumann_entropy(np.array([0.5, 0.5])) == pytest.approx(1.0, abs=1e-15)

    def test_two_point_frozen_value(self):
        got = von_neumann_entropy(np.array([5 / 8, 3 / 8]))
        assert got == pytest.approx(ENTROPY_5_8, abs=1e-14)

    @pytest.mark.parametrize("d", [2, 3, 4, 7, 16])
    def test_flat_spectrum_gives_log_dim(self, d):
        flat = np.full(d, 1.0 / d)
        assert von_neumann_entropy(flat) == pytest.approx(np.log2(d), abs=1e-12)

    def test_permutation_invariance(self):
        rng = np.random.default_rng(23)
        p = rng.exponential(size=6)
        p /= p.sum()
        reference = von_neumann_entropy(p)
        for _ in range(10):
            assert von_neumann_entropy(rng.permutation(p)) == reference

    def test_small_negatives_clamped(self):
        got = von_neumann_entropy(np.array([1.0 + 5e-11, -5e-11]))
        assert got >= 0.0
        assert got < 1e-8

    def test_rejects_bad_sum(self):
        with pytest.raises(InvalidSpectrumError):
            von_neumann_entropy(np.array([0.7, 0.2]))

    def test_rejects_large_negative(self):
        with pytest.raises(InvalidSpectrumError):
            von_neumann_entropy(np.array([1.001, -0.001]))


class TestPartialTrace:
    def test_product_state_recovers_factor(self):
        rho_a = np.array([[0.7, 0.1j], [-0.1j, 0.3]])
        rho_b = np.array([[0.5, 0.2], [0.2, 0.5]])
        joint = tensor(rho_a, rho_b)
        assert np.abs(partial_trace(joint, 2, 2, "A") - rho_a).max() < 1e-14
        assert np.abs(partial_trace(joint, 2, 2, "B") - rho_b).max() < 1e-14

    def test_random_product_states_exact(self):
        rng = np.random.default_rng(31)
        for da, db in [(2, 2), (2, 3), (3, 2), (4, 3)]:
            a = rng.standard_normal((da, da)) + 1j * rng.standard_normal((da, da))
            b = rng.standard_normal((db, db)) + 1j * rng.standard_normal((db, db))
            rho_a = a @ dagger(a)
            rho_a /= np.trace(rho_a).real
            rho_b = b @ dagger(b)
            rho_b /= np.trace(rho_b).real
            joint = tensor(rho_a, rho_b)
            assert np.abs(partial_trace(joint, da, db, "A") - rho_a).max() < 1e-12
            assert np.abs(partial_trace(joint, da, db, "B") - rho_b).max() < 1e-12

    def test_switch_output_reduces_to_control_state(self):
        rho = np.diag([1.0, 0.0]).astype(complex)
        state = np.block([[np.eye(2) / 4, rho / 8], [rho / 8, np.eye(2) / 4]])
        reduced = partial_trace(state, 2, 2, "A")
        assert np.abs(reduced - np.array([[0.5, 0.125], [0.125, 0.5]])).max() < 1e-14

    def test_maximally_mixed(self):
        got = partial_trace(np.eye(4) / 4, 2, 2, "B")
        assert np.abs(got - np.eye(2) / 2).max() < 1e-15

    def test_trace_preserved(self):
        rng = np.random.default_rng(41)
        a = rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6))
        rho = a @ dagger(a)
        rho /= np.trace(rho).real
        for keep in ("A", "B"):
            reduced = partial_trace(rho, 2, 3, keep)
            assert abs(np.trace(reduced).real - 1.0) < 1e-12

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            partial_trace(np.eye(4) / 4, 2, 3, "A")

    def test_bad_keep_flag(self):
        with pytest.raises(ValueError):
            partial_trace(np.eye(4) / 4, 2, 2, "C")


class TestValidateDensityMatrix:
    def test_accepts_valid_state(self):
        validate_density_matrix(np.eye(3) / 3)

    def test_rejects_bad_trace(self):
        with pytest.raises(InvalidStateError):
            validate_density_matrix(np.eye(2))

    def test_rejects_non_hermitian(self):
        with pytest.raises(InvalidStateError):
            validate_density_matrix(np.array([[0.5, 0.5], [0.0, 0.5]]))

    def test_rejects_negative_eigenvalue(self):
        with pytest.raises(InvalidStateError):
            validate_density_matrix(np.diag([1.5, -0.5]))
