"""Driven three-qubit Hamiltonian, its spectrum, and the ladder-operator split.

With theta held fixed and phi(t) advancing at rate phi_dot, the braid matrix
drives the evolution and the generator of that evolution is

    H = (hbar phidot sin(theta) cos(theta) / sqrt(3)) *
            [2 S2_3 (e^{-i phi} S1+ S3+ + e^{i phi} S1- S3-)
             + e^{-i phi} (S1+ S2+ + S2+ S3+) + e^{i phi} (S1- S2- + S2- S3-)]
      + (hbar phidot cos^2(theta) / 3) *
            [2 (S1_3 + S2_3 + S3_3) + 2 S2_3 (S1+ S3- + S1- S3+)
             - (S1+ S2- + S2+ S3- + S1- S2+ + S2- S3+)]

hamiltonian() transcribes exactly that expression; hamiltonian_from_r() is the
independent finite-difference oracle i hbar (dR/dt) R^dag. The spectrum is
{0 x4, -hbar phidot cos(theta) x2, +hbar phidot cos(theta) x2} and the eight
closed-form eigenstates are available as fixtures. Level membership (checked
exactly by the eigen-equations): states 5 and 7 sit at -hbar phidot cos(theta),
states 6 and 8 at +hbar phidot cos(theta), states 1-4 at zero.

su2_ops exposes the ladder split H = B+ I+ + B- I- + B3 I3. Measured bracket
facts, reported by su2_relation_residuals: (I+-)^2 = 0 and [I+, I-] = 2 I3
hold exactly, but [I3, I+-] = +-3 I+- (not +-I+-), and I3^2 equals (9/4) times
the projector onto span{fixture 5..8} rather than I/4. The rescaled family
J+- = I+-/sqrt(3), J3 = I3/3 closes an exact su(2).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .braid import IDENTITY_2, SPIN

__all__ = [
    "DriveParams",
    "Su2Ops",
    "SpectrumReport",
    "FIXTURE_INDICES",
    "LEVEL_STATES",
    "hamiltonian",
    "hamiltonian_from_r",
    "su2_ops",
    "su2_relation_residuals",
    "spectrum",
    "eigenstate_fixture",
    "fixture_batch",
    "fixture_energy",
]

SQRT3 = np.sqrt(3.0)

FIXTURE_INDICES = (1, 2, 3, 4, 5, 6, 7, 8)
LEVEL_STATES = {"zero": (1, 2, 3, 4), "minus": (5, 7), "plus": (6, 8)}


def _lift(op, site: int) -> np.ndarray:
    ops = [IDENTITY_2, IDENTITY_2, IDENTITY_2]
    ops[site] = op
    return linalg.kron(linalg.kron(ops[0], ops[1]), ops[2])


S1P, S2P, S3P = (_lift(SPIN.s_plus, k) for k in range(3))
S1M, S2M, S3M = (_lift(SPIN.s_minus, k) for k in range(3))
S1_3, S2_3, S3_3 = (_lift(SPIN.s3, k) for k in range(3))

# phi-independent pieces of the Hamiltonian, grouped as in its definition
_H_PP = 2 * S2_3 @ S1P @ S3P + S1P @ S2P + S2P @ S3P
_H_MM = 2 * S2_3 @ S1M @ S3M + S1M @ S2M + S2M @ S3M
_H_DIAG = (2 * (S1_3 + S2_3 + S3_3) + 2 * S2_3 @ (S1P @ S3M + S1M @ S3P)
           - (S1P @ S2M + S2P @ S3M + S1M @ S2P + S2M @ S3P))
for _m in (_H_PP, _H_MM, _H_DIAG):
    _m.setflags(write=False)


@dataclass(frozen=True)
class DriveParams:
    """Drive configuration: fixed theta, instantaneous phi, rate phi_dot, scale hbar."""

    theta: float
    phi: float
    phi_dot: float = 1.0
    hbar: float = 1.0

    def __post_init__(self):
        vals = (self.theta, self.phi, self.phi_dot, self.hbar)
        if not all(np.isfinite(v) for v in vals):
            raise ValueError("all drive parameters must be finite")
        if self.hbar <= 0:
            raise ValueError("hbar must be positive")


@dataclass(frozen=True)
class Su2Ops:
    """Ladder operators and field coefficients of the split H = B+ I+ + B- I- + B3 I3."""

    i_plus: np.ndarray
    i_minus: np.ndarray
    i_3: np.ndarray
    b_plus: complex
    b_minus: complex
    b_3: float


@dataclass(frozen=True)
class SpectrumReport:
    """eigh output for H plus closed-form and fixture comparisons.

    degeneracy_pattern lists cluster sizes in ascending-eigenvalue order
    (clusters split at gaps above 1e-8 * ||H||_F). closed_form_match is the
    max deviation from the sorted multiset {0 x4, +-hbar phidot cos(theta) x2}.
    projector_residuals compares, per cluster, the numerical eigenprojector
    with the one spanned by the fixtures assigned to that cluster.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    degeneracy_pattern: tuple
    closed_form_match: float
    fixture_residuals: tuple
    projector_residuals: tuple


def hamiltonian(d: DriveParams) -> np.ndarray:
    """The 8x8 Hermitian drive generator at the given parameters."""
    em = np.exp(-1j * d.phi)
    f1 = d.hbar * d.phi_dot * np.sin(d.theta) * np.cos(d.theta) / SQRT3
    f2 = d.hbar * d.phi_dot * np.cos(d.theta) ** 2 / 3
    return f1 * (em * _H_PP + np.conj(em) * _H_MM) + f2 * _H_DIAG


def hamiltonian_from_r(d: DriveParams, dt: float = 1e-5) -> np.ndarray:
    """Finite-difference oracle i hbar (dR/dt) R^dag, accurate to O(dt^2).

    Independent of hamiltonian(): only the braid matrix enters.
    """
    if not (0 < dt <= 1e-3):
        raise ValueError(f"dt must lie in (0, 1e-3], got {dt}")
    from . import yangbaxter  # local import to keep module load acyclic

    r = lambda phi: yangbaxter.r_matrix(
        yangbaxter.THREE_QUBIT, yangbaxter.RParams(d.theta, phi))
    dr = (r(d.phi + d.phi_dot * dt) - r(d.phi - d.phi_dot * dt)) / (2 * dt)
    return 1j * d.hbar * dr @ linalg.dagger(r(d.phi))


def su2_ops(d: DriveParams) -> Su2Ops:
    i_plus = S1P @ S2P + S2P @ S3P + 2 * S2_3 @ S1P @ S3P
    i_minus = S1M @ S2M + S2M @ S3M + 2 * S2_3 @ S1M @ S3M
    i_3 = (S1_3 + S2_3 + S3_3 + S2_3 @ (S1P @ S3M + S1M @ S3P)
           - 0.5 * (S1P @ S2M + S1M @ S2P + S2P @ S3M + S2M @ S3P))
    b_plus = complex(d.hbar * d.phi_dot * np.sin(d.theta) * np.cos(d.theta)
                     * np.exp(-1j * d.phi) / SQRT3)
    b_3 = float(2 / 3 * d.hbar * d.phi_dot * np.cos(d.theta) ** 2)
    return Su2Ops(i_plus=i_plus, i_minus=i_minus, i_3=i_3,
                  b_plus=b_plus, b_minus=np.conj(b_plus), b_3=b_3)


def _span_projector(vectors) -> np.ndarray:
    basis: list = []
    for v in vectors:
        w = np.asarray(v, dtype=complex).copy()
        for b in basis:
            w -= np.vdot(b, w) * b
        norm = float(np.sqrt(np.sum(np.abs(w) ** 2)))
        if norm > 1e-12:
            basis.append(w / norm)
    p = np.zeros((8, 8), dtype=complex)
    for b in basis:
        p += np.outer(b, b.conj())
    return p


def su2_relation_residuals(d: DriveParams) -> dict:
    """Frobenius residuals of every bracket identity, raw and rescaled.

    The *_unit entries test [I3, I+-] = +-I+-; the *_triple entries test the
    relation that actually holds, [I3, I+-] = +-3 I+-. The rescaled_* entries
    use J+- = I+-/sqrt(3), J3 = I3/3, which close an exact su(2). The
    i3_squared_* entries probe I3^2 against I/4 globally, against I/4 and
    (9/4) I on the span of fixtures 5..8, and against (9/4) P_span globally.
    """
    ops = su2_ops(d)
    ip, im, i3 = ops.i_plus, ops.i_minus, ops.i_3
    eye = np.eye(8, dtype=complex)
    h = hamiltonian(d)
    span = _span_projector([eigenstate_fixture(i, d.theta, d.phi) for i in (5, 6, 7, 8)])
    jp, jm, j3 = ip / SQRT3, im / SQRT3, i3 / 3
    i3sq = i3 @ i3
    restrict = lambda m: span @ m @ span
    return {
        "i_plus_squared": linalg.frobenius_norm(ip @ ip),
        "i_minus_squared": linalg.frobenius_norm(im @ im),
        "cartan_commutator": linalg.frobenius_distance(ip @ im - im @ ip, 2 * i3),
        "ladder_plus_unit": linalg.frobenius_distance(i3 @ ip - ip @ i3, ip),
        "ladder_minus_unit": linalg.frobenius_distance(i3 @ im - im @ i3, -im),
        "ladder_plus_triple": linalg.frobenius_distance(i3 @ ip - ip @ i3, 3 * ip),
        "ladder_minus_triple": linalg.frobenius_distance(i3 @ im - im @ i3, -3 * im),
        "decomposition": linalg.frobenius_distance(
            h, ops.b_plus * ip + ops.b_minus * im + ops.b_3 * i3),
        "i3_squared_quarter_global": linalg.frobenius_distance(i3sq, eye / 4),
        "i3_squared_quarter_span": linalg.frobenius_norm(restrict(i3sq - eye / 4)),
        "i3_squared_nine_quarters_span": linalg.frobenius_norm(restrict(i3sq - 9 * eye / 4)),
        "i3_squared_projector_identity": linalg.frobenius_distance(i3sq, 9 / 4 * span),
        "rescaled_cartan": linalg.frobenius_distance(jp @ jm - jm @ jp, 2 * j3),
        "rescaled_ladder_plus": linalg.frobenius_distance(j3 @ jp - jp @ j3, jp),
        "rescaled_ladder_minus": linalg.frobenius_distance(j3 @ jm - jm @ j3, -jm),
        "rescaled_j3_squared_quarter_span": linalg.frobenius_norm(restrict(j3 @ j3 - eye / 4)),
    }


def fixture_energy(i: int, d: DriveParams) -> float:
    """Energy of the i-th closed-form eigenstate (level membership as measured)."""
    if i not in FIXTURE_INDICES:
        raise ValueError(f"fixture index must be 1..8, got {i}")
    e = d.hbar * d.phi_dot * np.cos(d.theta)
    if i <= 4:
        return 0.0
    return float(-e) if i in LEVEL_STATES["minus"] else float(e)


def fixture_batch(i: int, theta: float, phis: np.ndarray) -> np.ndarray:
    """Fixture states at many phi values, shape (len(phis), 8)."""
    if i not in FIXTURE_INDICES:
        raise ValueError(f"fixture index must be 1..8, got {i}")
    phis = np.asarray(phis, dtype=float)
    n = phis.shape[0]
    out = np.zeros((n, 8), dtype=complex)
    s, c = np.sin(theta / 2), np.cos(theta / 2)
    r2, r3 = 1 / np.sqrt(2), 1 / SQRT3
    em = np.exp(-1j * phis)
    ep = np.exp(1j * phis)
    if i == 1:
        out[:, 0b011], out[:, 0b110] = -r2, r2
    elif i == 2:
        out[:, 0b001], out[:, 0b100] = -r2, r2
    elif i == 3:
        out[:, 0b011], out[:, 0b101] = -r2, r2
    elif i == 4:
        out[:, 0b001], out[:, 0b010] = r2, r2
    elif i == 5:
        out[:, 0b001] = -r3 * em * s
        out[:, 0b010] = r3 * em * s
        out[:, 0b100] = -r3 * em * s
        out[:, 0b111] = c
    elif i == 6:
        out[:, 0b001] = r3 * c
        out[:, 0b010] = -r3 * c
        out[:, 0b100] = r3 * c
        out[:, 0b111] = ep * s
    elif i == 7:
        out[:, 0b000] = -em * s
        out[:, 0b011] = r3 * c
        out[:, 0b101] = r3 * c
        out[:, 0b110] = r3 * c
    else:
        out[:, 0b000] = c
        out[:, 0b011] = r3 * ep * s
        out[:, 0b101] = r3 * ep * s
        out[:, 0b110] = r3 * ep * s
    return out


def eigenstate_fixture(i: int, theta: float, phi: float) -> np.ndarray:
    """The i-th closed-form eigenstate, normalized by construction."""
    v = fixture_batch(i, theta, np.array([phi]))[0]
    norm = float(np.sqrt(np.sum(np.abs(v) ** 2)))
    if abs(norm - 1.0) > 1e-12:
        raise linalg.NumericalError(f"fixture {i} norm drifted to {norm}")
    return v


def spectrum(d: DriveParams, tol: float = 1e-10) -> SpectrumReport:
    """eigh of the Hamiltonian plus closed-form and fixture verification."""
    h = hamiltonian(d)
    dec = linalg.eigh(h, tol)
    scale = linalg.frobenius_norm(h)
    # absolute floor keeps the grouping sane when H is numerically ~0
    gap = max(1e-8 * scale, 1e-12)

    clusters = []
    start = 0
    lam = dec.eigenvalues
    for k in range(1, 9):
        if k == 8 or lam[k] - lam[k - 1] > gap:
            clusters.append((start, k))
            start = k
    pattern = tuple(hi - lo for lo, hi in clusters)

    e = d.hbar * d.phi_dot * np.cos(d.theta)
    closed = np.sort(np.array([0.0, 0.0, 0.0, 0.0, -e, -e, e, e]))
    closed_match = float(np.max(np.abs(lam - closed)))

    fixtures = [eigenstate_fixture(i, d.theta, d.phi) for i in FIXTURE_INDICES]
    energies = [fixture_energy(i, d) for i in FIXTURE_INDICES]
    fixture_residuals = tuple(
        float(np.sqrt(np.sum(np.abs(h @ v - en * v) ** 2)))
        for v, en in zip(fixtures, energies))

    projector_residuals = []
    for lo, hi in clusters:
        vecs = dec.eigenvectors[:, lo:hi]
        p_num = vecs @ vecs.conj().T
        mean = float(np.mean(lam[lo:hi]))
        members = [v for v, en in zip(fixtures, energies)
                   if abs(en - mean) <= max(gap, 1e-12)]
        p_fix = _span_projector(members)
        projector_residuals.append(linalg.frobenius_distance(p_num, p_fix))

    return SpectrumReport(
        eigenvalues=lam,
        eigenvectors=dec.eigenvectors,
        degeneracy_pattern=pattern,
        closed_form_match=closed_match,
        fixture_residuals=fixture_residuals,
        projector_residuals=tuple(projector_residuals),
    )
