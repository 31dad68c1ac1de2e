"""Entanglement measures for the generated three-qubit states.

three_tangle uses the hyperdeterminant combination 4|d1 - 2 d2 + 4 d3| over
the state coefficients; concurrence is the Wootters spin-flip measure
computed through Hermitian eigenproblems only; one_vs_rest_sq is the
pure-state identity 2 (1 - tr rho_q^2), which doubles as an independent
oracle for the monogamy identity

    C^2_{A(BC)} = C^2_AB + C^2_AC + tau.

Closed forms for the states produced by apply_r on basis inputs:

    tau(theta)   = 16 sqrt(3) |sin(theta) cos^3(theta)| / 9
    C_pair(theta) = | |sin(2 theta)|/sqrt(3) - (2/3) cos^2(theta) |
    C^2_one_rest(theta) = (8/9) cos^2(theta) (1 + 2 sin^2(theta))
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg, states

__all__ = [
    "EntanglementReport",
    "three_tangle",
    "tangle_closed_form",
    "concurrence",
    "pair_concurrence_closed_form",
    "one_vs_rest_sq",
    "one_vs_rest_sq_closed_form",
    "full_report",
]

QUBITS = {"A": 0, "B": 1, "C": 2}

SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
FLIP_4 = np.kron(SIGMA_Y, SIGMA_Y)

# Relative floor under which an eigenvalue of a rank-deficient 4x4 product is
# treated as an exact zero; sqrt of raw noise there would cost ~1e-8 accuracy.
RANK_CLAMP = 1e-13


@dataclass(frozen=True)
class EntanglementReport:
    """All measures of one pure three-qubit state.

    monogamy_residual = |c2_a_bc - c_ab^2 - c_ac^2 - tau_abc|.
    """

    tau_abc: float
    c_ab: float
    c_bc: float
    c_ac: float
    c2_a_bc: float
    c2_b_ac: float
    c2_c_ab: float
    monogamy_residual: float


def three_tangle(state) -> float:
    """Residual tangle 4|d1 - 2 d2 + 4 d3| of a pure three-qubit state."""
    a = states.as_state(state).reshape(2, 2, 2)
    d1 = (a[0, 0, 0] ** 2 * a[1, 1, 1] ** 2
          + a[0, 0, 1] ** 2 * a[1, 1, 0] ** 2
          + a[0, 1, 0] ** 2 * a[1, 0, 1] ** 2
          + a[1, 0, 0] ** 2 * a[0, 1, 1] ** 2)
    d2 = (a[0, 0, 0] * a[1, 1, 1] * a[0, 1, 1] * a[1, 0, 0]
          + a[0, 0, 0] * a[1, 1, 1] * a[1, 0, 1] * a[0, 1, 0]
          + a[0, 0, 0] * a[1, 1, 1] * a[1, 1, 0] * a[0, 0, 1]
          + a[0, 1, 1] * a[1, 0, 0] * a[1, 0, 1] * a[0, 1, 0]
          + a[0, 1, 1] * a[1, 0, 0] * a[1, 1, 0] * a[0, 0, 1]
          + a[1, 0, 1] * a[0, 1, 0] * a[1, 1, 0] * a[0, 0, 1])
    d3 = (a[0, 0, 0] * a[1, 1, 0] * a[1, 0, 1] * a[0, 1, 1]
          + a[1, 1, 1] * a[0, 0, 1] * a[0, 1, 0] * a[1, 0, 0])
    return float(4 * abs(d1 - 2 * d2 + 4 * d3))


def tangle_closed_form(theta: float) -> float:
    return float(16 * np.sqrt(3) * abs(np.sin(theta) * np.cos(theta) ** 3) / 9)


def pair_concurrence_closed_form(theta: float) -> float:
    return float(abs(abs(np.sin(2 * theta)) / np.sqrt(3)
                     - 2 * np.cos(theta) ** 2 / 3))


def one_vs_rest_sq_closed_form(theta: float) -> float:
    return float(8 / 9 * np.cos(theta) ** 2 * (1 + 2 * np.sin(theta) ** 2))


def _clamped_sqrt_eigvals(dec: linalg.EigenDecomposition, tol: float) -> np.ndarray:
    lam = dec.eigenvalues.copy()
    if lam.size and lam[0] < -tol:
        raise ValueError(f"matrix has eigenvalue {lam[0]} below -{tol}")
    floor = RANK_CLAMP * max(float(lam[-1]), 0.0) if lam.size else 0.0
    lam[lam < floor] = 0.0
    return np.sqrt(lam)


def _sqrt_psd(rho: np.ndarray, tol: float) -> np.ndarray:
    dec = linalg.eigh(rho, tol)
    roots = _clamped_sqrt_eigvals(dec, tol)
    v = dec.eigenvectors
    return (v * roots) @ v.conj().T


def concurrence(rho2, tol: float = 1e-10) -> float:
    """Wootters concurrence of a two-qubit density matrix.

    Computed as max{0, l1 - l2 - l3 - l4} with l_i the descending square
    roots of eig(sqrt(rho) rho_tilde sqrt(rho)), rho_tilde the spin-flipped
    (sigma_y x sigma_y) rho* (sigma_y x sigma_y). Routing through the
    Hermitian product keeps every eigenproblem Hermitian.
    """
    rho = np.asarray(rho2, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 density matrix, got shape {rho.shape}")
    scale = linalg.frobenius_norm(rho)
    if linalg.frobenius_distance(rho, linalg.dagger(rho)) > tol * max(scale, 1.0):
        raise ValueError("density matrix is not Hermitian within tolerance")
    if abs(np.trace(rho).real - 1.0) > tol or abs(np.trace(rho).imag) > tol:
        raise ValueError("density matrix does not have unit trace within tolerance")

    root = _sqrt_psd(rho, tol)  # also validates positivity
    flipped = FLIP_4 @ rho.conj() @ FLIP_4
    product = root @ flipped @ root
    product = (product + linalg.dagger(product)) / 2
    lam = _clamped_sqrt_eigvals(linalg.eigh(product, tol), tol)
    lam = np.sort(lam)[::-1]
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def one_vs_rest_sq(state, which: str) -> float:
    """Squared concurrence between one qubit and the remaining pair.

    For a pure three-qubit state this is 2 (1 - tr rho_which^2).
    """
    if which not in QUBITS:
        raise ValueError(f"which must be one of {tuple(QUBITS)}, got {which!r}")
    v = states.as_state(state)
    rho = np.outer(v, v.conj())
    reduced = linalg.partial_trace(rho, [QUBITS[which]], 3)
    purity = float(np.trace(reduced @ reduced).real)
    return 2.0 * (1.0 - purity)


def _pair_concurrence(rho_full: np.ndarray, pair, tol: float) -> float:
    reduced = linalg.partial_trace(rho_full, pair, 3, tol)
    return concurrence(reduced, tol)


def full_report(state, tol: float = 1e-10) -> EntanglementReport:
    """Every measure of one pure state plus the monogamy residual."""
    v = states.as_state(state)
    rho = np.outer(v, v.conj())
    tau = three_tangle(v)
    c_ab = _pair_concurrence(rho, (0, 1), tol)
    c_bc = _pair_concurrence(rho, (1, 2), tol)
    c_ac = _pair_concurrence(rho, (0, 2), tol)
    c2_a = one_vs_rest_sq(v, "A")
    c2_b = one_vs_rest_sq(v, "B")
    c2_c = one_vs_rest_sq(v, "C")
    monogamy = abs(c2_a - c_ab ** 2 - c_ac ** 2 - tau)
    return EntanglementReport(
        tau_abc=tau, c_ab=c_ab, c_bc=c_bc, c_ac=c_ac,
        c2_a_bc=c2_a, c2_b_ac=c2_b, c2_c_ab=c2_c,
        monogamy_residual=monogamy)
