"""Numerical toolkit for an 8x8 three-qubit braid system.

Builds the braid generators and their unitary Yang-Baxterized matrix,
generates entangled three-qubit states, computes entanglement measures
(three-tangle, Wootters concurrence, one-vs-rest concurrence), constructs the
driven Hamiltonian with its spectrum, and evaluates geometric phases of the
adiabatic drive loop — each closed-form claim checked by an independent
numerical route.
"""

from .linalg import (
    EigenDecomposition,
    NumericalError,
    abs_det,
    dagger,
    eigh,
    frobenius_distance,
    frobenius_norm,
    kron,
    matmul,
    partial_trace,
)
from .braid import (
    SPIN,
    BraidSet,
    Es2Report,
    SpinOps,
    build_braidset,
    build_m4,
    check_es2_relations,
    transcription_diagnostics,
)
from .yangbaxter import (
    THREE_QUBIT,
    TWO_QUBIT,
    RParams,
    SingularParameterError,
    SpectralParam,
    r_from_spectral,
    r_matrix,
    rational_r,
    theta_from_spectral,
    ybe_residual,
)
from .states import BASIS_LABELS, apply_r, basis_image_formula, basis_state
from .entanglement import (
    EntanglementReport,
    concurrence,
    full_report,
    one_vs_rest_sq,
    one_vs_rest_sq_closed_form,
    pair_concurrence_closed_form,
    tangle_closed_form,
    three_tangle,
)
from .dynamics import (
    DriveParams,
    SpectrumReport,
    Su2Ops,
    eigenstate_fixture,
    fixture_energy,
    hamiltonian,
    hamiltonian_from_r,
    spectrum,
    su2_ops,
    su2_relation_residuals,
)
from .berry import (
    BerryReport,
    berry_analytic,
    berry_wilson,
    closed_form_phase,
    solid_angle,
    zero_level_phase,
)

__version__ = "0.1.0"

__all__ = [
    "EigenDecomposition", "NumericalError", "abs_det", "dagger", "eigh",
    "frobenius_distance", "frobenius_norm", "kron", "matmul", "partial_trace",
    "SPIN", "BraidSet", "Es2Report", "SpinOps", "build_braidset", "build_m4",
    "check_es2_relations", "transcription_diagnostics",
    "THREE_QUBIT", "TWO_QUBIT", "RParams", "SingularParameterError",
    "SpectralParam", "r_from_spectral", "r_matrix", "rational_r",
    "theta_from_spectral", "ybe_residual",
    "BASIS_LABELS", "apply_r", "basis_image_formula", "basis_state",
    "EntanglementReport", "concurrence", "full_report", "one_vs_rest_sq",
    "one_vs_rest_sq_closed_form", "pair_concurrence_closed_form",
    "tangle_closed_form", "three_tangle",
    "DriveParams", "SpectrumReport", "Su2Ops", "eigenstate_fixture",
    "fixture_energy", "hamiltonian", "hamiltonian_from_r", "spectrum",
    "su2_ops", "su2_relation_residuals",
    "BerryReport", "berry_analytic", "berry_wilson", "closed_form_phase",
    "solid_angle", "zero_level_phase",
    "__version__",
]
