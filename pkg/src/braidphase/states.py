"""Three-qubit computational states and their images under the braid matrix.

Basis order is |000>, |001>, ..., |111> with qubit A (the first label) most
significant. States are complex128 vectors of length 8 normalized to 1.
"""

from __future__ import annotations

import numpy as np

from . import linalg, yangbaxter

__all__ = [
    "BASIS_LABELS",
    "basis_state",
    "basis_index",
    "as_state",
    "apply_r",
    "basis_image_formula",
]

BASIS_LABELS = ("000", "001", "010", "011", "100", "101", "110", "111")

NORM_TOL = 1e-12


def basis_index(label: str) -> int:
    if label not in BASIS_LABELS:
        raise ValueError(f"bad basis label {label!r}; expected one of {BASIS_LABELS}")
    return int(label, 2)


def basis_state(label: str) -> np.ndarray:
    """Unit vector |klm> for a three-character 0/1 label."""
    v = np.zeros(8, dtype=complex)
    v[basis_index(label)] = 1.0
    return v


def as_state(amplitudes) -> np.ndarray:
    """Validate and return a fresh normalized 8-amplitude vector."""
    v = np.asarray(amplitudes, dtype=complex)
    if v.shape != (8,):
        raise ValueError(f"state must have 8 amplitudes, got shape {v.shape}")
    if not np.all(np.isfinite(v.real)) or not np.all(np.isfinite(v.imag)):
        raise ValueError("state contains non-finite amplitudes")
    norm = float(np.sqrt(np.sum(np.abs(v) ** 2)))
    if abs(norm - 1.0) > NORM_TOL:
        raise ValueError(f"state norm {norm} deviates from 1 beyond {NORM_TOL}")
    return v.copy()


def apply_r(p: yangbaxter.RParams, state) -> np.ndarray:
    """Image of a state under the unitary three-qubit braid matrix.

    The output norm is asserted (not renormalized): unitarity keeps it at 1
    within NORM_TOL, and a violation raises NumericalError.
    """
    v = as_state(state)
    out = yangbaxter.r_matrix(yangbaxter.THREE_QUBIT, p) @ v
    norm = float(np.sqrt(np.sum(np.abs(out) ** 2)))
    if abs(norm - 1.0) > NORM_TOL:
        raise linalg.NumericalError(f"braid image norm drifted to {norm}")
    return out


def basis_image_formula(label: str, theta: float, phi: float) -> np.ndarray:
    """Hand-coded linear-combination template for the image of |klm>.

    Kept independent of the matrix path: used to cross-check apply_r
    entrywise. Coefficients are sin(theta), +-cos(theta)/sqrt(3) and the same
    scaled by e^{+-i phi}.
    """
    s = np.sin(theta)
    c = np.cos(theta) / np.sqrt(3)
    em = np.exp(-1j * phi)
    ep = np.exp(1j * phi)
    table = {
        "000": {"000": s, "011": -c * ep, "101": -c * ep, "110": -c * ep},
        "001": {"001": s, "010": -c, "100": -c, "111": -c * ep},
        "010": {"010": s, "001": c, "100": -c, "111": c * ep},
        "011": {"011": s, "000": c * em, "101": -c, "110": c},
        "100": {"100": s, "001": c, "010": c, "111": -c * ep},
        "101": {"101": s, "000": c * em, "011": c, "110": -c},
        "110": {"110": s, "000": c * em, "011": -c, "101": c},
        "111": {"111": s, "001": c * em, "010": -c * em, "100": c * em},
    }
    if label not in table:
        raise ValueError(f"bad basis label {label!r}")
    v = np.zeros(8, dtype=complex)
    for target, coeff in table[label].items():
        v[basis_index(target)] = coeff
    return v
