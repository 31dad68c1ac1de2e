"""Braid generators for two and three qubits and their algebra checks.

The 4x4 generator M(phi) is built from spin raising/lowering operators with
the convention S+ = |0><1| (|0> is the S3 = +1/2 state, most significant
qubit first). The 8x8 composite is

    mcal = (M otimes I + I otimes M + (I otimes M)(M otimes I)) / sqrt(3)

and mbb = -i * mcal is its Hermitian partner. The family satisfies the
extraspecial 2-group relations: M^2 = -I, mbb^2 = +I, neighboring lifts
anticommute and obey the sandwich relations A B A = B, B A B = A.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg

__all__ = [
    "SpinOps",
    "SPIN",
    "BraidSet",
    "Es2Report",
    "build_m4",
    "build_braidset",
    "check_es2_relations",
    "m4_transcribed",
    "mcal_transcribed",
    "transcription_diagnostics",
]

SQRT3 = np.sqrt(3.0)


@dataclass(frozen=True)
class SpinOps:
    """Single-qubit spin operators: s_plus = |0><1|, s_minus = |1><0|, s3 = diag(1/2, -1/2)."""

    s_plus: np.ndarray
    s_minus: np.ndarray
    s3: np.ndarray


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    a.setflags(write=False)
    return a


SPIN = SpinOps(
    s_plus=_frozen([[0, 1], [0, 0]]),
    s_minus=_frozen([[0, 0], [1, 0]]),
    s3=_frozen([[0.5, 0], [0, -0.5]]),
)

IDENTITY_2 = _frozen(np.eye(2))


@dataclass(frozen=True)
class BraidSet:
    """Generator family at a fixed phase angle.

    m4   -- 4x4 generator M(phi)
    a8   -- M otimes I (acts on qubits 1,2 of three)
    b8   -- I otimes M (acts on qubits 2,3)
    mcal -- (a8 + b8 + b8 a8)/sqrt(3), anti-Hermitian
    mbb  -- -i mcal, Hermitian
    alpha -- measured scalar in mbb^2 = alpha I (fit as tr(mbb^2)/8)
    """

    phi: float
    m4: np.ndarray
    a8: np.ndarray
    b8: np.ndarray
    mcal: np.ndarray
    mbb: np.ndarray
    alpha: float


@dataclass(frozen=True)
class Es2Report:
    """Named Frobenius residuals of the generator-algebra relations.

    ``residuals`` are the asserted relations; ``ambiguous`` holds the mixed
    triple-product readings that are reported but never gate a run.
    """

    phi: float
    tol: float
    alpha: float
    residuals: dict
    ambiguous: dict
    failures: tuple
    passed: bool


def build_m4(phi: float) -> np.ndarray:
    """4x4 braid generator from spin operators.

    Nonzero entries (row, col, 0-indexed): (0,3)=e^{-i phi}, (1,2)=1,
    (2,1)=-1, (3,0)=-e^{i phi}. Squares to -I and is anti-Hermitian.
    """
    sp, sm = SPIN.s_plus, SPIN.s_minus
    return (np.exp(-1j * phi) * linalg.kron(sp, sp)
            - np.exp(1j * phi) * linalg.kron(sm, sm)
            + linalg.kron(sp, sm)
            - linalg.kron(sm, sp))


def build_braidset(phi: float) -> BraidSet:
    m4 = build_m4(phi)
    a8 = linalg.kron(m4, IDENTITY_2)
    b8 = linalg.kron(IDENTITY_2, m4)
    mcal = (a8 + b8 + linalg.matmul(b8, a8)) / SQRT3
    mbb = -1j * mcal
    alpha = float(np.trace(linalg.matmul(mbb, mbb)).real) / 8.0
    return BraidSet(phi=float(phi), m4=m4, a8=a8, b8=b8,
                    mcal=mcal, mbb=mbb, alpha=alpha)


def check_es2_relations(bs: BraidSet, tol: float = 1e-10) -> Es2Report:
    """Measure every extraspecial-relation residual for one BraidSet.

    Asserted residuals (gate at ``tol``):
      m4_square         ||M^2 + I||
      aba_sandwich      ||A B A - B||          with A = a8, B = b8
      bab_sandwich      ||B A B - A||
      anticommutation   ||A B + B A||
      mbb_square        ||mbb^2 - alpha I||    alpha measured
      mbb_hermitian     ||mbb - mbb^dag||
      mcal_antihermitian ||mcal + mcal^dag||

    Ambiguous (reported only), with mm12 = -i a8, mm23 = -i b8:
      triple_as_printed ||mm12 mm23 mm12 - mm12||
      triple_swapped    ||mm12 mm23 mm12 - mm23||
      triple_sign_flipped ||mm12 mm23 mm12 + mm23||  (the reading that holds)
    """
    a, b = bs.a8, bs.b8
    eye4 = np.eye(4, dtype=complex)
    eye8 = np.eye(8, dtype=complex)
    residuals = {
        "m4_square": linalg.frobenius_distance(bs.m4 @ bs.m4, -eye4),
        "aba_sandwich": linalg.frobenius_distance(a @ b @ a, b),
        "bab_sandwich": linalg.frobenius_distance(b @ a @ b, a),
        "anticommutation": linalg.frobenius_norm(a @ b + b @ a),
        "mbb_square": linalg.frobenius_distance(bs.mbb @ bs.mbb, bs.alpha * eye8),
        "mbb_hermitian": linalg.frobenius_distance(bs.mbb, linalg.dagger(bs.mbb)),
        "mcal_antihermitian": linalg.frobenius_norm(bs.mcal + linalg.dagger(bs.mcal)),
    }
    mm12, mm23 = -1j * a, -1j * b
    triple = mm12 @ mm23 @ mm12
    ambiguous = {
        "triple_as_printed": linalg.frobenius_distance(triple, mm12),
        "triple_swapped": linalg.frobenius_distance(triple, mm23),
        "triple_sign_flipped": linalg.frobenius_norm(triple + mm23),
    }
    failures = tuple(name for name, r in residuals.items() if r > tol)
    return Es2Report(phi=bs.phi, tol=tol, alpha=bs.alpha,
                     residuals=residuals, ambiguous=ambiguous,
                     failures=failures, passed=not failures)


def m4_transcribed(phi: float) -> np.ndarray:
    """Direct entrywise 4x4 transcription kept as a cross-check.

    Its (2,1) and (3,3) entries contradict the operator construction (which
    forces -1 and 0 there); the mismatch is surfaced by
    transcription_diagnostics, never used to build anything.
    """
    em, ep = np.exp(-1j * phi), np.exp(1j * phi)
    return np.array([
        [0, 0, 0, em],
        [0, 0, 1, 0],
        [0, 1, 0, 0],
        [-ep, 0, 0, 1],
    ], dtype=complex)


def mcal_transcribed(phi: float) -> np.ndarray:
    """Direct entrywise 8x8 transcription of the composite generator."""
    em, ep = np.exp(-1j * phi), np.exp(1j * phi)
    m = np.array([
        [0, 0, 0, em, 0, em, em, 0],
        [0, 0, 1, 0, 1, 0, 0, em],
        [0, -1, 0, 0, 1, 0, 0, -em],
        [-ep, 0, 0, 0, 0, 1, -1, 0],
        [0, -1, -1, 0, 0, 0, 0, em],
        [-ep, 0, 0, -1, 0, 0, 1, 0],
        [-ep, 0, 0, 1, 0, -1, 0, 0],
        [0, -ep, ep, 0, -ep, 0, 0, 0],
    ], dtype=complex)
    return m / SQRT3


def transcription_diagnostics(phi: float) -> dict:
    """Frobenius distances between the built operators and their transcriptions.

    The 8x8 distance is expected to vanish; the 4x4 one is expected to equal
    sqrt(5) because the transcription's two contradictory entries differ by
    2 and 1.
    """
    bs = build_braidset(phi)
    return {
        "m4_vs_transcription": linalg.frobenius_distance(bs.m4, m4_transcribed(phi)),
        "mcal_vs_transcription": linalg.frobenius_distance(bs.mcal, mcal_transcribed(phi)),
    }
