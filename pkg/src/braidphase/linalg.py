"""Minimal dense complex linear-algebra kernel.

Every other module expresses its math through the helpers here. Matrices and
state vectors are plain complex128 numpy arrays treated as immutable values:
every operation validates its inputs and returns a fresh array.

The Hermitian eigensolver is a cyclic Jacobi iteration on the real-symmetric
embedding of the complex matrix, so results are bit-reproducible and carry no
dependency beyond numpy array arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "NumericalError",
    "EigenDecomposition",
    "matmul",
    "kron",
    "dagger",
    "eigh",
    "partial_trace",
    "frobenius_distance",
    "frobenius_norm",
    "abs_det",
]


class NumericalError(RuntimeError):
    """An iterative numerical procedure failed to reach its target."""


@dataclass(frozen=True)
class EigenDecomposition:
    """Spectral decomposition of a Hermitian matrix.

    eigenvalues  -- real, ascending, shape (n,)
    eigenvectors -- complex, shape (n, n), column k pairs with eigenvalue k;
                    columns are orthonormal. Degenerate eigenvalues come with
                    an arbitrary orthonormal basis of their eigenspace.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def _as_matrix(a, name: str = "matrix") -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2:
        raise ValueError(f"{name} must be 2-dimensional, got shape {a.shape}")
    if not np.all(np.isfinite(a.real)) or not np.all(np.isfinite(a.imag)):
        raise ValueError(f"{name} contains non-finite entries")
    return a


def _require_square(a: np.ndarray, name: str = "matrix") -> int:
    if a.shape[0] != a.shape[1]:
        raise ValueError(f"{name} must be square, got shape {a.shape}")
    return a.shape[0]


def frobenius_norm(a) -> float:
    a = _as_matrix(a)
    return float(np.sqrt(np.sum(np.abs(a) ** 2)))


def frobenius_distance(a, b) -> float:
    """Frobenius distance between two matrices of identical shape."""
    a = _as_matrix(a, "a")
    b = _as_matrix(b, "b")
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    return float(np.sqrt(np.sum(np.abs(a - b) ** 2)))


def matmul(a, b) -> np.ndarray:
    a = _as_matrix(a, "a")
    b = _as_matrix(b, "b")
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"inner dimensions differ: {a.shape} @ {b.shape}")
    return a @ b


def kron(a, b) -> np.ndarray:
    """Kronecker product with the left factor on the most significant slot(s)."""
    return np.kron(_as_matrix(a, "a"), _as_matrix(b, "b"))


def dagger(a) -> np.ndarray:
    """Conjugate transpose as a fresh array; an exact (bitwise) involution."""
    return _as_matrix(a).conj().T.copy()


def _round_robin_schedule(m: int) -> tuple:
    """All index pairs of range(m), grouped into m-1 rounds of disjoint pairs."""
    idx = list(range(m))
    rounds = []
    for _ in range(m - 1):
        rounds.append(tuple(
            (min(idx[i], idx[m - 1 - i]), max(idx[i], idx[m - 1 - i]))
            for i in range(m // 2)))
        idx = [idx[0]] + [idx[-1]] + idx[1:-1]
    return tuple(rounds)


_SCHEDULE_CACHE: dict = {}


def _schedule(m: int) -> tuple:
    if m not in _SCHEDULE_CACHE:
        _SCHEDULE_CACHE[m] = _round_robin_schedule(m)
    return _SCHEDULE_CACHE[m]


def _off_diagonal_mass(t: np.ndarray) -> float:
    return float(np.sqrt(np.sum((t - np.diag(np.diag(t))) ** 2)))


def eigh(a, tol: float = 1e-10, *, target: float = 1e-12,
         max_sweeps: int = 64) -> EigenDecomposition:
    """Full spectral decomposition of a Hermitian matrix.

    The complex n x n matrix is embedded as the 2n x 2n real symmetric block
    matrix [[X, -Y], [Y, X]] (A = X + iY) and diagonalized by cyclic Jacobi
    sweeps, iterated until the off-diagonal Frobenius mass falls below
    ``target`` relative to the matrix norm. Each sweep visits every pivot pair
    once, in a fixed round-robin order that lets disjoint rotations within a
    round be applied as a single orthogonal update.

    Parameters
    ----------
    a : array_like, Hermitian within ``tol`` relative to its Frobenius norm.
    tol : admission tolerance for the Hermiticity check and for eigenvalue
        clustering when extracting complex eigenvectors.
    target : internal off-diagonal convergence target (relative).
    max_sweeps : sweep budget; exceeding it raises NumericalError.
    """
    a = _as_matrix(a)
    n = _require_square(a)
    scale = frobenius_norm(a)
    if scale == 0.0:
        return EigenDecomposition(np.zeros(n), np.eye(n, dtype=complex))
    if frobenius_distance(a, dagger(a)) > tol * scale:
        raise ValueError("matrix is not Hermitian within tolerance")

    x = (a.real + a.real.T) / 2
    y = (a.imag - a.imag.T) / 2
    m = 2 * n
    t = np.block([[x, -y], [y, x]])
    v = np.eye(m)
    t_scale = float(np.sqrt(np.sum(t ** 2)))
    skip = target * t_scale / (10 * m)

    converged = False
    for _ in range(max_sweeps):
        if _off_diagonal_mass(t) <= target * t_scale:
            converged = True
            break
        for rnd in _schedule(m):
            rot = np.eye(m)
            hit = False
            for p, q in rnd:
                tpq = t[p, q]
                if abs(tpq) <= skip:
                    continue
                hit = True
                tau = (t[q, q] - t[p, p]) / (2 * tpq)
                if tau == 0.0:
                    tan = 1.0
                else:
                    tan = np.sign(tau) / (abs(tau) + np.hypot(1.0, tau))
                c = 1.0 / np.hypot(1.0, tan)
                s = tan * c
                rot[p, p] = c
                rot[q, q] = c
                rot[p, q] = s
                rot[q, p] = -s
            if hit:
                t = rot.T @ t @ rot
                v = v @ rot
    if not converged and _off_diagonal_mass(t) > target * t_scale:
        raise NumericalError(
            f"Jacobi iteration did not converge in {max_sweeps} sweeps")

    lam = np.diag(t).copy()
    order = np.argsort(lam, kind="stable")
    lam = lam[order]
    w = v[:, order]
    return _extract_complex_pairs(lam, w, n, cluster_eps=max(tol * scale / 10, 5e-300))


def _extract_complex_pairs(lam: np.ndarray, w: np.ndarray, n: int,
                           cluster_eps: float) -> EigenDecomposition:
    # Real-embedded eigenvalues come in exact pairs (z and iz images); cluster
    # them and pull one complex representative per pair by pivoted
    # Gram-Schmidt over the cluster's mapped eigenvectors.
    m = 2 * n
    clusters = []
    start = 0
    for k in range(1, m + 1):
        if k == m or lam[k] - lam[k - 1] > cluster_eps:
            clusters.append([start, k])
            start = k
    merged = []
    for c in clusters:
        if merged and (merged[-1][1] - merged[-1][0]) % 2 == 1:
            merged[-1][1] = c[1]
        else:
            merged.append(c)
    if (merged[-1][1] - merged[-1][0]) % 2 == 1:
        raise NumericalError("eigenvalue pairing failed in the real embedding")

    values = []
    vectors = []
    for lo, hi in merged:
        want = (hi - lo) // 2
        candidates = [w[:n, k] + 1j * w[n:, k] for k in range(lo, hi)]
        basis: list = []
        while len(basis) < want:
            residuals = []
            for z in candidates:
                r = z.copy()
                for b in basis:
                    r -= np.vdot(b, r) * b
                residuals.append(float(np.sqrt(np.sum(np.abs(r) ** 2))))
            j = int(np.argmax(residuals))
            if residuals[j] < 1e-6:
                raise NumericalError("eigenvector extraction failed")
            z = candidates.pop(j)
            for b in basis:
                z -= np.vdot(b, z) * b
            z /= np.sqrt(np.sum(np.abs(z) ** 2))
            basis.append(z)
        mean = float(np.mean(lam[lo:hi]))
        for b in basis:
            values.append(mean)
            vectors.append(b)
    order = np.argsort(values, kind="stable")
    evals = np.array([values[k] for k in order])
    evecs = np.column_stack([vectors[k] for k in order])
    return EigenDecomposition(evals, evecs)


def partial_trace(rho, keep, n_qubits: int, tol: float = 1e-10) -> np.ndarray:
    """Reduced density matrix on the kept qubits.

    Qubit 0 is the most significant index of the 2**n_qubits basis ordering.
    ``keep`` is an iterable of distinct qubit indices; the output subsystem
    order follows the sorted kept indices. The input must be a density matrix
    (Hermitian, unit trace) within ``tol``.
    """
    rho = _as_matrix(rho, "rho")
    dim = 2 ** n_qubits
    if rho.shape != (dim, dim):
        raise ValueError(
            f"rho has shape {rho.shape}, expected {(dim, dim)} for {n_qubits} qubits")
    keep = sorted(set(int(k) for k in keep))
    if not keep or any(k < 0 or k >= n_qubits for k in keep):
        raise ValueError(f"keep indices {keep} out of range for {n_qubits} qubits")
    scale = frobenius_norm(rho)
    if frobenius_distance(rho, dagger(rho)) > tol * max(scale, 1.0):
        raise ValueError("rho is not Hermitian within tolerance")
    if abs(np.trace(rho).real - 1.0) > tol or abs(np.trace(rho).imag) > tol:
        raise ValueError("rho does not have unit trace within tolerance")

    tensor = rho.reshape([2] * (2 * n_qubits))
    traced = [k for k in range(n_qubits) if k not in keep]
    for axis in sorted(traced, reverse=True):
        tensor = np.trace(tensor, axis1=axis, axis2=axis + tensor.ndim // 2)
    d = 2 ** len(keep)
    return tensor.reshape(d, d)


def abs_det(a) -> float:
    """|det a| via Gaussian elimination with partial pivoting."""
    a = _as_matrix(a).copy()
    n = _require_square(a)
    mod = 1.0
    for k in range(n):
        piv = k + int(np.argmax(np.abs(a[k:, k])))
        if abs(a[piv, k]) == 0.0:
            return 0.0
        if piv != k:
            a[[k, piv]] = a[[piv, k]]
        mod *= abs(a[k, k])
        a[k + 1:, k + 1:] -= np.outer(a[k + 1:, k] / a[k, k], a[k, k + 1:])
    return float(mod)
