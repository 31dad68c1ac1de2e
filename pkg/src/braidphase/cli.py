"""Command-line surface: verification runs, sweeps, and report serialization.

Subcommands: verify-algebra, ybe, entangle, sweep, spectrum, berry.
Every command emits a RunReport (JSON, deterministic byte-for-byte for fixed
flags and seed); sweep writes the CSV contract to --out and the summary
report to stdout. Exit codes: 0 success, 1 a gated check failed, 2 usage
error, 3 numerical failure.

Angles are radians unless --degrees is given. --tol defaults per command to
the tolerance its checks are specified at (see --help of each subcommand).
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import berry, braid, dynamics, entanglement, linalg, states, yangbaxter

__all__ = ["RunReport", "SweepSpec", "build_parser", "main"]

SWEEP_HEADER = ("theta,tau_measured,tau_closed,c_pair_measured,c_pair_closed,"
                "c2_one_rest_measured,c2_one_rest_closed,max_residual")

DEFAULT_TOL = {
    "verify-algebra": 1e-10,
    "ybe": 1e-10,
    "entangle": 1e-9,
    "sweep": 1e-9,
    "spectrum": 1e-10,
    "berry": None,  # method-dependent: 1e-5 analytic, 1e-4 wilson
}

QUANTITIES = ("tangle", "pair_concurrence", "one_vs_rest_sq", "eigenvalues", "berry")


@dataclass(frozen=True)
class RunReport:
    """Uniform result envelope: echoed command, inputs, outputs, and gates."""

    command: str
    parameters: dict
    results: dict
    residual_summary: dict
    passes: dict
    passed: bool

    def to_json(self) -> str:
        payload = {
            "command": self.command,
            "parameters": _plain(self.parameters),
            "results": _plain(self.results),
            "residual_summary": _plain(self.residual_summary),
            "passes": _plain(self.passes),
            "passed": bool(self.passed),
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"


@dataclass(frozen=True)
class SweepSpec:
    """Theta-grid sweep request."""

    theta_min: float
    theta_max: float
    steps: int
    phi: float = 0.0
    quantities: tuple = ("tangle", "pair_concurrence", "one_vs_rest_sq")

    def __post_init__(self):
        if self.theta_min > self.theta_max:
            raise ValueError("theta_min must not exceed theta_max")
        if self.steps < 2:
            raise ValueError("steps must be >= 2")
        bad = [q for q in self.quantities if q not in QUANTITIES]
        if bad:
            raise ValueError(f"unknown quantities {bad}; allowed: {QUANTITIES}")


def _plain(obj):
    """Recursively convert numpy containers/scalars into JSON-ready values."""
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [_plain(v) for v in obj.tolist()]
    if isinstance(obj, (np.bool_, bool)):  # before int: bool is an int subclass
        return bool(obj)
    if isinstance(obj, (np.floating, float)):
        return float(obj)
    if isinstance(obj, (np.integer, int)):
        return int(obj)
    if obj is None or isinstance(obj, str):
        return obj
    raise TypeError(f"cannot serialize {type(obj).__name__} into a report")


def _g17(x: float) -> str:
    return "%.17g" % float(x)


# ---------------------------------------------------------------------------
# command handlers


def cmd_verify_algebra(tol: float, phi_samples: int, seed: int) -> RunReport:
    rng = np.random.default_rng(seed)
    phis = rng.uniform(0.0, 2 * np.pi, phi_samples)
    thetas = rng.uniform(0.0, 2 * np.pi, phi_samples)

    relation_max: dict = {}
    ambiguous_max: dict = {}
    alpha_dev = 0.0
    for phi in phis:
        rep = braid.check_es2_relations(braid.build_braidset(phi), tol)
        for name, val in rep.residuals.items():
            relation_max[name] = max(relation_max.get(name, 0.0), val)
        for name, val in rep.ambiguous.items():
            ambiguous_max[name] = max(ambiguous_max.get(name, 0.0), val)
        alpha_dev = max(alpha_dev, abs(rep.alpha - 1.0))

    unit_max = {yangbaxter.TWO_QUBIT: 0.0, yangbaxter.THREE_QUBIT: 0.0}
    for system in unit_max:
        dim = 4 if system == yangbaxter.TWO_QUBIT else 8
        eye = np.eye(dim, dtype=complex)
        for theta in thetas:
            for phi in phis:
                r = yangbaxter.r_matrix(system, yangbaxter.RParams(theta, phi))
                unit_max[system] = max(
                    unit_max[system],
                    linalg.frobenius_distance(linalg.dagger(r) @ r, eye))

    summary = dict(relation_max)
    summary["alpha_deviation"] = alpha_dev
    summary["unitarity_two_qubit"] = unit_max[yangbaxter.TWO_QUBIT]
    summary["unitarity_three_qubit"] = unit_max[yangbaxter.THREE_QUBIT]
    passes = {name: val <= tol for name, val in summary.items()}
    return RunReport(
        command="verify-algebra",
        parameters={"tol": tol, "phi_samples": phi_samples, "seed": seed},
        results={
            "phi_values": list(phis),
            "theta_values": list(thetas),
            "relation_residuals_max": relation_max,
            "ambiguous_triple_readings_max": ambiguous_max,
            "unitarity_max": dict(unit_max),
            "transcription_diagnostics": braid.transcription_diagnostics(float(phis[0])),
        },
        residual_summary=summary,
        passes=passes,
        passed=all(passes.values()),
    )


def _sample_spectral_pairs(rng, count: int):
    pairs = []
    while len(pairs) < count:
        a, b = rng.uniform(-np.pi, np.pi, 2)
        # keep away from the singular parameterization x + 1/x = 0
        if min(abs(np.cos(a)), abs(np.cos(b)), abs(np.cos(a + b))) < 1e-3:
            continue
        pairs.append((np.exp(1j * a), np.exp(1j * b)))
    return pairs


def cmd_ybe(tol: float, samples: int, phi_samples: int, seed: int) -> RunReport:
    rng = np.random.default_rng(seed)
    pairs = _sample_spectral_pairs(rng, samples)
    phis = rng.uniform(0.0, 2 * np.pi, phi_samples)

    residual = {("two_qubit", "rational"): 0.0, ("three_qubit", "rational"): 0.0,
                ("two_qubit", "unitary"): 0.0, ("three_qubit", "unitary"): 0.0}
    for x, y in pairs:
        sx, sy = yangbaxter.SpectralParam(x), yangbaxter.SpectralParam(y)
        for phi in phis:
            for (system, family) in residual:
                residual[(system, family)] = max(
                    residual[(system, family)],
                    yangbaxter.ybe_residual(system, sx, sy, phi, family=family))

    summary = {
        "two_qubit_rational_max": residual[("two_qubit", "rational")],
        "three_qubit_rational_max": residual[("three_qubit", "rational")],
        "two_qubit_unitary_max": residual[("two_qubit", "unitary")],
        "three_qubit_unitary_max": residual[("three_qubit", "unitary")],
    }
    passes = {"two_qubit_rational": summary["two_qubit_rational_max"] <= tol}
    return RunReport(
        command="ybe",
        parameters={"tol": tol, "samples": samples,
                    "phi_samples": phi_samples, "seed": seed},
        results={
            "gated": "two_qubit_rational",
            "reported_only": ["three_qubit_rational", "two_qubit_unitary",
                              "three_qubit_unitary"],
            "max_residuals": dict(summary),
        },
        residual_summary=summary,
        passes=passes,
        passed=all(passes.values()),
    )


def cmd_entangle(theta: float, phi: float, label: str, tol: float) -> RunReport:
    state = states.apply_r(yangbaxter.RParams(theta, phi), states.basis_state(label))
    rep = entanglement.full_report(state)
    tau_c = entanglement.tangle_closed_form(theta)
    pair_c = entanglement.pair_concurrence_closed_form(theta)
    rest_c = entanglement.one_vs_rest_sq_closed_form(theta)
    summary = {
        "tangle": abs(rep.tau_abc - tau_c),
        "pair_concurrence": max(abs(rep.c_ab - pair_c), abs(rep.c_bc - pair_c),
                                abs(rep.c_ac - pair_c)),
        "one_vs_rest_sq": max(abs(rep.c2_a_bc - rest_c), abs(rep.c2_b_ac - rest_c),
                              abs(rep.c2_c_ab - rest_c)),
        "monogamy": rep.monogamy_residual,
    }
    passes = {name: val <= tol for name, val in summary.items()}
    return RunReport(
        command="entangle",
        parameters={"theta": theta, "phi": phi, "input": label, "tol": tol},
        results={
            "tau_abc": rep.tau_abc,
            "c_ab": rep.c_ab, "c_bc": rep.c_bc, "c_ac": rep.c_ac,
            "c2_a_bc": rep.c2_a_bc, "c2_b_ac": rep.c2_b_ac, "c2_c_ab": rep.c2_c_ab,
            "monogamy_residual": rep.monogamy_residual,
            "closed_forms": {"tangle": tau_c, "pair_concurrence": pair_c,
                             "one_vs_rest_sq": rest_c},
        },
        residual_summary=summary,
        passes=passes,
        passed=all(passes.values()),
    )


def _sweep_row(theta: float, phi: float):
    state = states.apply_r(yangbaxter.RParams(theta, phi), states.basis_state("000"))
    rho = np.outer(state, state.conj())
    tau_m = entanglement.three_tangle(state)
    c_m = entanglement.concurrence(linalg.partial_trace(rho, (0, 1), 3))
    c2_m = entanglement.one_vs_rest_sq(state, "A")
    tau_c = entanglement.tangle_closed_form(theta)
    c_c = entanglement.pair_concurrence_closed_form(theta)
    c2_c = entanglement.one_vs_rest_sq_closed_form(theta)
    worst = max(abs(tau_m - tau_c), abs(c_m - c_c), abs(c2_m - c2_c))
    return (theta, tau_m, tau_c, c_m, c_c, c2_m, c2_c, worst)


def cmd_sweep(spec: SweepSpec, tol: float):
    thetas = np.linspace(spec.theta_min, spec.theta_max, spec.steps)
    with ThreadPoolExecutor(max_workers=4) as pool:
        rows = list(pool.map(lambda t: _sweep_row(float(t), spec.phi), thetas))
    lines = [SWEEP_HEADER]
    lines.extend(",".join(_g17(v) for v in row) for row in rows)
    csv_text = "\n".join(lines) + "\n"
    worst = max(row[-1] for row in rows)
    passes = {"closed_form_match": worst <= tol}
    report = RunReport(
        command="sweep",
        parameters={"theta_min": spec.theta_min, "theta_max": spec.theta_max,
                    "steps": spec.steps, "phi": spec.phi, "tol": tol,
                    "quantities": list(spec.quantities)},
        results={"rows": spec.steps, "input": "000", "pair_column": "c_ab"},
        residual_summary={"closed_form_match_max": worst},
        passes=passes,
        passed=all(passes.values()),
    )
    return report, csv_text


def cmd_spectrum(theta: float, phi: float, phi_dot: float, hbar: float,
                 tol: float) -> RunReport:
    d = dynamics.DriveParams(theta=theta, phi=phi, phi_dot=phi_dot, hbar=hbar)
    rep = dynamics.spectrum(d, tol)
    brackets = dynamics.su2_relation_residuals(d)
    summary = {
        "closed_form_match": rep.closed_form_match,
        "fixture_eigen_equation_max": max(rep.fixture_residuals),
        "projector_match_max": max(rep.projector_residuals),
        "ladder_decomposition": brackets["decomposition"],
    }
    passes = {
        "closed_form_match": summary["closed_form_match"] <= tol,
        "fixture_eigen_equation_max": summary["fixture_eigen_equation_max"] <= tol,
        "projector_match_max": summary["projector_match_max"] <= max(tol, 1e-8),
        "ladder_decomposition": summary["ladder_decomposition"] <= tol,
    }
    return RunReport(
        command="spectrum",
        parameters={"theta": theta, "phi": phi, "phidot": phi_dot,
                    "hbar": hbar, "tol": tol},
        results={
            "eigenvalues": list(rep.eigenvalues),
            "degeneracy_pattern": list(rep.degeneracy_pattern),
            "fixture_residuals": list(rep.fixture_residuals),
            "projector_residuals": list(rep.projector_residuals),
            "bracket_residuals": brackets,
        },
        residual_summary=summary,
        passes=passes,
        passed=all(passes.values()),
    )


def cmd_berry(theta: float, steps: int, method: str, level: str,
              tol: float) -> RunReport:
    if method == "analytic":
        levels = berry.LEVELS if level == "all" else (level,)
    else:
        levels = ("minus", "plus") if level == "all" else (level,)
    reports = [berry.report(lv, theta, steps, method) for lv in levels]
    summary = {f"{r.level}_residual_max": (max(r.residuals) if r.residuals else 0.0)
               for r in reports}
    passes = {name: val <= tol for name, val in summary.items()}
    return RunReport(
        command="berry",
        parameters={"theta": theta, "steps": steps, "method": method,
                    "level": level, "tol": tol},
        results={"reports": [
            {"level": r.level, "method": r.method, "phases": list(r.phases),
             "closed_form": r.closed_form, "solid_angle": r.solid_angle,
             "residuals": list(r.residuals)} for r in reports]},
        residual_summary=summary,
        passes=passes,
        passed=all(passes.values()),
    )


# ---------------------------------------------------------------------------
# argument parsing


def _add_common(parser):
    parser.add_argument("--tol", type=float, default=None,
                        help="pass/fail tolerance (default depends on command)")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for random sampling (ybe, verify-algebra)")
    parser.add_argument("--format", choices=("json", "csv"), default=None,
                        help="output format (csv applies to sweep only)")
    parser.add_argument("--out", default=None, help="write output to this path")
    parser.add_argument("--degrees", action="store_true",
                        help="interpret angle arguments as degrees")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidphase",
        description="Three-qubit braid system: algebra checks, entanglement "
                    "measures, spectra, and geometric phases.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-algebra", help="generator-algebra and unitarity checks")
    p.add_argument("--phi-samples", type=int, default=17)
    _add_common(p)

    p = sub.add_parser("ybe", help="Yang-Baxter residuals over sampled spectral parameters")
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--phi-samples", type=int, default=5)
    _add_common(p)

    p = sub.add_parser("entangle", help="entanglement measures of one generated state")
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--phi", type=float, default=0.0)
    p.add_argument("--input", default="000", choices=states.BASIS_LABELS)
    _add_common(p)

    p = sub.add_parser("sweep", help="theta sweep of the entanglement curves (CSV)")
    p.add_argument("--theta-min", type=float, required=True)
    p.add_argument("--theta-max", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--phi", type=float, default=0.0)
    _add_common(p)

    p = sub.add_parser("spectrum", help="eigenvalues and eigenstate checks of the drive generator")
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--phi", type=float, default=0.0)
    p.add_argument("--phidot", type=float, default=1.0)
    p.add_argument("--hbar", type=float, default=1.0)
    _add_common(p)

    p = sub.add_parser("berry", help="geometric phases of the drive loop")
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--steps", type=int, default=None)
    p.add_argument("--method", choices=("analytic", "wilson"), default="analytic")
    p.add_argument("--level", choices=("zero", "minus", "plus", "all"), default="all")
    _add_common(p)

    return parser


def _angles_to_radians(args):
    for name in ("theta", "phi", "theta_min", "theta_max"):
        if getattr(args, name, None) is not None:
            setattr(args, name, float(np.radians(getattr(args, name))))


def _dispatch(args):
    """Returns (report, primary_text, extra file payload or None)."""
    tol = args.tol if args.tol is not None else DEFAULT_TOL[args.command]
    if args.command == "verify-algebra":
        report = cmd_verify_algebra(tol, args.phi_samples, args.seed)
    elif args.command == "ybe":
        report = cmd_ybe(tol, args.samples, args.phi_samples, args.seed)
    elif args.command == "entangle":
        report = cmd_entangle(args.theta, args.phi, args.input, tol)
    elif args.command == "sweep":
        spec = SweepSpec(theta_min=args.theta_min, theta_max=args.theta_max,
                         steps=args.steps, phi=args.phi)
        report, csv_text = cmd_sweep(spec, tol)
        if (args.format or "csv") == "csv":
            if args.out is None:
                raise ValueError("sweep requires --out for its CSV output")
            return report, report.to_json(), (args.out, csv_text)
        return report, report.to_json(), None
    elif args.command == "spectrum":
        report = cmd_spectrum(args.theta, args.phi, args.phidot, args.hbar, tol)
    elif args.command == "berry":
        if tol is None:
            tol = 1e-5 if args.method == "analytic" else 1e-4
        steps = args.steps
        if steps is None:
            steps = 10_000 if args.method == "analytic" else 800
        report = cmd_berry(args.theta, steps, args.method, args.level, tol)
    else:  # pragma: no cover - argparse enforces the choices
        raise ValueError(f"unknown command {args.command!r}")

    if args.format == "csv" and args.command != "sweep":
        raise ValueError("--format csv is only supported by the sweep command")
    return report, report.to_json(), None


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.degrees:
        _angles_to_radians(args)
    try:
        report, text, extra = _dispatch(args)
    except linalg.NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    except (ValueError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    try:
        if extra is not None:
            path, payload = extra
            with open(path, "w", encoding="utf-8", newline="") as fh:
                fh.write(payload)
            sys.stdout.write(text)
        elif args.out is not None:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0 if report.passed else 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
