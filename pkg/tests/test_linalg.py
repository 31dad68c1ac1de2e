import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from braidphase import linalg
from braidphase.braid import build_m4

SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)


def random_complex(rng, shape):
    return rng.normal(size=shape) + 1j * rng.normal(size=shape)


def naive_matmul(a, b):
    n, m = a.shape[0], b.shape[1]
    out = np.zeros((n, m), dtype=complex)
    for i in range(n):
        for j in range(m):
            acc = 0j
            for k in range(a.shape[1]):
                acc += a[i, k] * b[k, j]
            out[i, j] = acc
    return out


class TestMatmul:
    def test_identity(self):
        eye = np.eye(4, dtype=complex)
        assert np.array_equal(linalg.matmul(eye, eye), eye)

    def test_pauli_involution(self):
        assert np.allclose(linalg.matmul(SIGMA_Y, SIGMA_Y), np.eye(2), atol=0)

    @pytest.mark.parametrize("phi", [0.0, np.pi / 4, 1.3])
    def test_braid_generator_squares_to_minus_identity(self, phi):
        m = build_m4(phi)
        expected = naive_matmul(m, m)
        assert np.allclose(expected, -np.eye(4), atol=1e-15)
        assert np.allclose(linalg.matmul(m, m), expected, atol=1e-15)

    def test_against_naive_product(self):
        rng = np.random.default_rng(5)
        a = random_complex(rng, (3, 5))
        b = random_complex(rng, (5, 2))
        assert np.allclose(linalg.matmul(a, b), naive_matmul(a, b), atol=1e-13)

    def test_dimension_mismatch_rejected(self):
        with pytest.raises(ValueError):
            linalg.matmul(np.eye(3), np.eye(4))

    def test_non_finite_rejected(self):
        bad = np.array([[np.nan, 0], [0, 1]], dtype=complex)
        with pytest.raises(ValueError):
            linalg.matmul(bad, np.eye(2))


class TestKron:
    def test_identity(self):
        assert np.array_equal(linalg.kron(np.eye(2), np.eye(2)), np.eye(4))

    def test_left_factor_most_significant(self):
        # |00x><11x| lifts the generator's (0,3) entry to (2a+x, 2b+x)
        phi = 0.83
        m = build_m4(phi)
        lifted = linalg.kron(m, np.eye(2))
        assert lifted[0, 6] == pytest.approx(np.exp(-1j * phi))
        lifted = linalg.kron(np.eye(2), m)
        assert lifted[0, 3] == pytest.approx(np.exp(-1j * phi))

    def test_associativity_exact_inputs(self):
        # bitwise for exactly-representable entries
        rng = np.random.default_rng(11)
        mats = [rng.integers(-4, 5, size=(2, 2)) + 1j * rng.integers(-4, 5, size=(2, 2))
                for _ in range(3)]
        a, b, c = (m.astype(complex) for m in mats)
        left = linalg.kron(linalg.kron(a, b), c)
        right = linalg.kron(a, linalg.kron(b, c))
        assert np.array_equal(left, right)

    def test_associativity_generic_inputs(self):
        rng = np.random.default_rng(12)
        a, b, c = (random_complex(rng, (2, 2)) for _ in range(3))
        left = linalg.kron(linalg.kron(a, b), c)
        right = linalg.kron(a, linalg.kron(b, c))
        assert np.abs(left - right).max() < 1e-15


class TestDagger:
    def test_identity(self):
        assert np.array_equal(linalg.dagger(np.eye(3)), np.eye(3))

    def test_generator_is_anti_hermitian(self):
        m = build_m4(0.61)
        assert np.allclose(linalg.dagger(m), -m, atol=0)

    @given(st.integers(0, 2 ** 31 - 1))
    def test_involution_is_bitwise(self, seed):
        rng = np.random.default_rng(seed)
        a = random_complex(rng, (3, 3))
        assert np.array_equal(linalg.dagger(linalg.dagger(a)), a)


class TestEigh:
    def test_identity_spectrum(self):
        dec = linalg.eigh(np.eye(2, dtype=complex))
        assert np.allclose(dec.eigenvalues, [1.0, 1.0], atol=0)

    def test_pauli_spectrum(self):
        dec = linalg.eigh(SIGMA_Y)
        assert np.allclose(dec.eigenvalues, [-1.0, 1.0], atol=1e-12)

    def test_drive_generator_spectrum(self):
        from braidphase.dynamics import DriveParams, hamiltonian

        h = hamiltonian(DriveParams(theta=np.pi / 3, phi=0.2))
        dec = linalg.eigh(h)
        expected = [-0.5, -0.5, 0, 0, 0, 0, 0.5, 0.5]
        assert np.allclose(dec.eigenvalues, expected, atol=1e-12)

    @pytest.mark.parametrize("dim", [2, 4, 8])
    def test_reconstruction_over_seeds(self, dim):
        tol = 1e-10
        for seed in range(100):
            rng = np.random.default_rng(seed)
            z = random_complex(rng, (dim, dim))
            a = (z + z.conj().T) / 2
            dec = linalg.eigh(a, tol)
            rebuilt = (dec.eigenvectors * dec.eigenvalues) @ dec.eigenvectors.conj().T
            assert linalg.frobenius_distance(a, rebuilt) <= 10 * tol * linalg.frobenius_norm(a)

    @given(st.integers(0, 2 ** 31 - 1))
    def test_matches_numpy_and_stays_orthonormal(self, seed):
        rng = np.random.default_rng(seed)
        dim = int(rng.choice([2, 4, 8]))
        z = random_complex(rng, (dim, dim))
        a = (z + z.conj().T) / 2
        dec = linalg.eigh(a)
        assert np.allclose(dec.eigenvalues, np.linalg.eigvalsh(a), atol=1e-11)
        gram = dec.eigenvectors.conj().T @ dec.eigenvectors
        assert np.abs(gram - np.eye(dim)).max() < 1e-10
        for k in range(dim):
            v = dec.eigenvectors[:, k]
            assert np.linalg.norm(a @ v - dec.eigenvalues[k] * v) <= 1e-10 * max(
                linalg.frobenius_norm(a), 1.0)

    def test_degenerate_subspace_is_orthonormal(self):
        # fourfold zero eigenvalue plus two exact doublets
        from braidphase.dynamics import DriveParams, hamiltonian

        h = hamiltonian(DriveParams(theta=0.9, phi=1.7))
        dec = linalg.eigh(h)
        gram = dec.eigenvectors.conj().T @ dec.eigenvectors
        assert np.abs(gram - np.eye(8)).max() < 1e-12

    def test_zero_matrix(self):
        dec = linalg.eigh(np.zeros((3, 3), dtype=complex))
        assert np.array_equal(dec.eigenvalues, np.zeros(3))

    def test_rejects_non_hermitian(self):
        with pytest.raises(ValueError):
            linalg.eigh(np.array([[0, 1], [0, 0]], dtype=complex))

    def test_rejects_non_square(self):
        with pytest.raises(ValueError):
            linalg.eigh(np.zeros((2, 3), dtype=complex))


class TestPartialTrace:
    def test_product_state(self):
        v = np.zeros(8, dtype=complex)
        v[0] = 1.0
        rho = np.outer(v, v.conj())
        reduced = linalg.partial_trace(rho, (0, 1), 3)
        expected = np.zeros((4, 4), dtype=complex)
        expected[0, 0] = 1.0
        assert np.allclose(reduced, expected, atol=0)

    def test_ghz_reduction(self):
        v = np.zeros(8, dtype=complex)
        v[0] = v[7] = 1 / np.sqrt(2)
        rho = np.outer(v, v.conj())
        reduced = linalg.partial_trace(rho, (0, 1), 3)
        expected = np.zeros((4, 4), dtype=complex)
        expected[0, 0] = expected[3, 3] = 0.5  # (|00><00| + |11><11|)/2 by hand
        assert np.allclose(reduced, expected, atol=1e-15)

    @given(st.integers(0, 2 ** 31 - 1))
    def test_trace_preserving_and_psd(self, seed):
        rng = np.random.default_rng(seed)
        v = random_complex(rng, 8)
        v /= np.linalg.norm(v)
        rho = np.outer(v, v.conj())
        for keep in [(0,), (1,), (2,), (0, 1), (1, 2), (0, 2)]:
            reduced = linalg.partial_trace(rho, keep, 3)
            assert abs(np.trace(reduced).real - 1.0) < 1e-12
            dec = linalg.eigh(reduced)
            assert dec.eigenvalues.min() >= -1e-10

    def test_rejects_bad_dimensions(self):
        with pytest.raises(ValueError):
            linalg.partial_trace(np.eye(6) / 6, (0,), 3)

    def test_rejects_bad_keep(self):
        with pytest.raises(ValueError):
            linalg.partial_trace(np.eye(8) / 8, (3,), 3)

    def test_rejects_non_unit_trace(self):
        with pytest.raises(ValueError):
            linalg.partial_trace(np.eye(8, dtype=complex), (0,), 3)


class TestFrobenius:
    def test_zero_distance(self):
        assert linalg.frobenius_distance(np.eye(3), np.eye(3)) == 0.0

    def test_pauli_distance(self):
        # four entries of modulus 2 -> sqrt(4 * 4) = 2 sqrt(2)
        assert linalg.frobenius_distance(SIGMA_Y, -SIGMA_Y) == pytest.approx(
            2 * np.sqrt(2), abs=1e-15)

    def test_hermitian_braid_square(self):
        from braidphase.braid import build_braidset

        bs = build_braidset(1.9)
        assert linalg.frobenius_distance(bs.mbb @ bs.mbb, np.eye(8)) < 1e-14

    def test_shape_mismatch_rejected(self):
        with pytest.raises(ValueError):
            linalg.frobenius_distance(np.eye(2), np.eye(3))


class TestAbsDet:
    def test_hand_values(self):
        a = np.array([[1, 2], [3, 4]], dtype=complex)
        assert linalg.abs_det(a) == pytest.approx(2.0, abs=1e-14)
        assert linalg.abs_det(np.zeros((2, 2), dtype=complex)) == 0.0

    @given(st.integers(0, 2 ** 31 - 1))
    def test_matches_numpy(self, seed):
        rng = np.random.default_rng(seed)
        a = random_complex(rng, (4, 4))
        assert linalg.abs_det(a) == pytest.approx(abs(np.linalg.det(a)), rel=1e-10)
