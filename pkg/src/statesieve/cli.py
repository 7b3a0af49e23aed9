"""Command-line front end: build, verify, transform, enumerate, partition,
simulate, stats, and pauli subcommands with JSON (default) or text output.

Exit codes: 0 success, 1 a verified property failed, 2 usage errors,
3 validation/resource errors.  SIEVE_TOL overrides the default tolerance;
an explicit --tol wins over the environment.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Sequence

from . import jsonio
from .bases import BASIS_KEYS, Basis, named_basis, standard_basis
from .linalg import DEFAULT_TOL, EigenbasisError, is_unitary
from .partitions import is_atomic, meet_all
from .paulis import cereceda_system, sigma_product_proposition
from .sieve import measure_state, question_count_stats, route_basis_state, sample_detections
from .systems import (PropositionSystem, certify_system,
                      enumerate_systems, minimality_certificate,
                      permute_system, separates, standard_system,
                      system_partitions, verify_requirements)

EXIT_OK = 0
EXIT_PROPERTY_VIOLATION = 1
EXIT_USAGE = 2
EXIT_VALIDATION = 3


def _resolve_tol(args) -> float:
    if args.tol is not None:
        return args.tol
    env = os.environ.get("SIEVE_TOL")
    if env:
        try:
            return float(env)
        except ValueError as e:
            raise ValueError(f"SIEVE_TOL is not a number: {env!r}") from e
    return DEFAULT_TOL


def _parse_perm(text: str) -> list[int]:
    try:
        targets = [int(x) for x in text.split(",")]
    except ValueError as e:
        raise ValueError(f"--perm must be a comma list of integers: {text!r}") from e
    return [t - 1 for t in targets]  # CLI positions are 1-based


def _build_system(args, tol: float) -> tuple[PropositionSystem, Basis]:
    """Diagonal (optionally permuted) system conjugated into the chosen basis."""
    basis, unitary = named_basis(args.basis, args.n, tol, force=args.force)
    system = standard_system(args.n, force=args.force)
    if getattr(args, "perm", None):
        system = permute_system(system, _parse_perm(args.perm), tol)
    if unitary is not None:
        from .bases import transformed_system
        system = transformed_system(unitary, system, tol)
    return system, basis


def _fmt_complex(z: complex) -> str:
    if z.imag == 0:
        return f"{z.real:.6g}"
    return f"{z.real:.6g}{z.imag:+.6g}i"


def _render_text(obj: Any, indent: str = "") -> str:
    """Aligned-text rendering of the JSON structures this tool emits."""
    if isinstance(obj, dict):
        if set(obj) == {"rows", "cols", "data"}:
            m = jsonio.matrix_from_json(obj)
            cells = [[_fmt_complex(m[r, c]) for c in range(m.shape[1])]
                     for r in range(m.shape[0])]
            width = max((len(s) for row in cells for s in row), default=1)
            return "\n".join(
                indent + "  ".join(s.rjust(width) for s in row) for row in cells)
        if set(obj) == {"ground", "blocks"}:
            return indent + " ".join(
                "{" + ",".join(str(i) for i in b) + "}" for b in obj["blocks"])
        lines = []
        for key, value in obj.items():
            if isinstance(value, (dict, list)):
                lines.append(f"{indent}{key}:")
                lines.append(_render_text(value, indent + "  "))
            else:
                lines.append(f"{indent}{key}: {value}")
        return "\n".join(lines)
    if isinstance(obj, list):
        if all(not isinstance(x, (dict, list)) for x in obj):
            return indent + " ".join(str(x) for x in obj)
        return "\n\n".join(_render_text(x, indent + "  ") for x in obj)
    return indent + str(obj)


def _emit(args, payload: Any) -> None:
    if args.format == "text":
        print(_render_text(payload))
    else:
        print(json.dumps(payload, indent=2))


def _cmd_build(args) -> int:
    tol = _resolve_tol(args)
    system, _ = _build_system(args, tol)
    payload = jsonio.system_to_json(system)
    payload["basis"] = args.basis
    _emit(args, payload)
    return EXIT_OK


def _cmd_verify(args) -> int:
    tol = _resolve_tol(args)
    if args.file:
        with open(args.file) as fh:
            system = jsonio.system_from_json(json.load(fh))
        basis = standard_basis(system.n)
        unitary = None
    else:
        system, basis = _build_system(args, tol)
        _, unitary = named_basis(args.basis, args.n, tol, force=args.force)

    failures = list(certify_system(system, tol))
    if unitary is not None and not is_unitary(unitary.matrix, tol):
        failures.append(f"basis unitary '{unitary.name}' failed certification")
    gram = basis.gram_defect()
    if gram > tol:
        failures.append(f"basis Gram defect {gram:.3e} exceeds {tol}")
    separating = False
    try:
        report = verify_requirements(system, basis, tol)
        failures.extend(report.failures)
        separating = separates(system, basis, tol)
        if not separating:
            failures.append("system does not separate the basis")
        payload = jsonio.requirement_report_to_json(report)
    except EigenbasisError as e:
        failures.append(f"requirement checks aborted: {e}")
        payload = {}
    payload["certified"] = not failures
    payload["separates"] = separating
    payload["failures"] = failures
    _emit(args, payload)
    return EXIT_OK if not failures else EXIT_PROPERTY_VIOLATION


def _cmd_transform(args) -> int:
    tol = _resolve_tol(args)
    system, basis = _build_system(args, tol)
    _, unitary = named_basis(args.basis, args.n, tol, force=args.force)
    wanted = [w.strip() for w in args.emit.split(",") if w.strip()]
    known = {"projectors", "partitions", "codes", "basis", "unitary", "meet"}
    unknown = set(wanted) - known
    if unknown:
        raise ValueError(f"unknown --emit items {sorted(unknown)}; choose from {sorted(known)}")
    payload: dict[str, Any] = {"n": args.n, "basis": args.basis}
    if "projectors" in wanted:
        payload["projectors"] = [jsonio.matrix_to_json(p) for p in system.projectors]
    if "partitions" in wanted or "meet" in wanted:
        parts = system_partitions(system, basis, tol)
        if "partitions" in wanted:
            payload["partitions"] = [jsonio.partition_to_json(p) for p in parts]
        if "meet" in wanted:
            m = meet_all(parts)
            payload["meet"] = jsonio.partition_to_json(m)
            payload["atomic"] = is_atomic(m)
    if "codes" in wanted:
        payload["codes"] = [
            {"state": k, "bits": list(route_basis_state(system, basis, k, tol).answer_bits)}
            for k in range(1, basis.size + 1)]
    if "basis" in wanted:
        payload["basis_states"] = jsonio.basis_to_json(basis)
    if "unitary" in wanted:
        payload["unitary"] = (jsonio.matrix_to_json(unitary.matrix)
                              if unitary is not None else None)
    _emit(args, payload)
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    count = 0
    systems_json = []
    for system in enumerate_systems(args.n, limit=args.limit, force=args.force):
        count += 1
        if not args.count_only:
            systems_json.append(jsonio.system_to_json(system))
    payload: dict[str, Any] = {"n": args.n, "count": count}
    if not args.count_only:
        payload["systems"] = systems_json
    _emit(args, payload)
    return EXIT_OK


def _cmd_partition(args) -> int:
    tol = _resolve_tol(args)
    system, basis = _build_system(args, tol)
    parts = system_partitions(system, basis, tol)
    m = meet_all(parts)
    payload = {
        "n": args.n,
        "basis": args.basis,
        "partitions": [jsonio.partition_to_json(p) for p in parts],
        "meet": jsonio.partition_to_json(m),
        "atomic": is_atomic(m),
    }
    _emit(args, payload)
    return EXIT_OK


def _cmd_simulate(args) -> int:
    tol = _resolve_tol(args)
    system, basis = _build_system(args, tol)
    if (args.index is None) == (args.state is None):
        raise ValueError("simulate needs exactly one of --index or --state")
    if args.index is not None:
        state = basis.vectors[args.index - 1] if 1 <= args.index <= basis.size else None
        if state is None:
            raise ValueError(f"--index must be in 1..{basis.size}, got {args.index}")
        outcome = route_basis_state(system, basis, args.index, tol)
        payload: dict[str, Any] = jsonio.outcome_to_json(outcome)
        payload["state"] = basis.labels[args.index - 1]
    else:
        with open(args.state) as fh:
            state = jsonio.vector_from_json(json.load(fh))
        dist = measure_state(system, state, tol)
        payload = jsonio.distribution_to_json(dist)
    if args.sample:
        counts = sample_detections(system, state, args.sample, args.seed, tol)
        payload["sample"] = {"trials": args.sample, "seed": args.seed,
                             "counts": counts}
    _emit(args, payload)
    return EXIT_OK


def _cmd_stats(args) -> int:
    summary = question_count_stats(args.n, args.trials, args.seed,
                                   infer_last=args.infer_last)
    _emit(args, [jsonio.stats_to_json(summary.naive),
                 jsonio.stats_to_json(summary.sieve)])
    return EXIT_OK


def _cmd_pauli(args) -> int:
    tol = _resolve_tol(args)
    if args.cereceda:
        system = cereceda_system()
        payload = jsonio.system_to_json(system)
        payload["axes"] = list(args.cereceda_axes)
        failures = certify_system(system, tol)
        payload["certified"] = not failures
        _emit(args, payload)
        return EXIT_OK if not failures else EXIT_PROPERTY_VIOLATION
    if not args.axes:
        raise ValueError("pauli needs --axes or --cereceda")
    p = sigma_product_proposition(args.axes)
    payload = {"axes": args.axes, "proposition": jsonio.matrix_to_json(p)}
    _emit(args, payload)
    return EXIT_OK


def _cmd_minimality(args) -> int:
    report = minimality_certificate(args.n)
    _emit(args, jsonio.minimality_report_to_json(report))
    return EXIT_OK if report.ok else EXIT_PROPERTY_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="statesieve",
        description="Construct, verify, transform, enumerate, and simulate "
                    "minimal yes-no proposition systems over 2^n states.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--tol", type=float, default=None,
                        help="comparison tolerance (default 1e-10 or SIEVE_TOL)")
    common.add_argument("--force", action="store_true",
                        help="override resource guards")

    sized = argparse.ArgumentParser(add_help=False)
    sized.add_argument("--n", type=int, default=3, help="number of particles")
    sized.add_argument("--basis", choices=BASIS_KEYS, default="standard")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", parents=[common, sized],
                       help="construct a proposition system")
    p.add_argument("--perm", help="comma list: 1-based target position of each column")
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("verify", parents=[common, sized],
                       help="certify projectors, requirements, separation")
    p.add_argument("--perm")
    p.add_argument("--file", help="verify a system from a JSON file instead")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("transform", parents=[common, sized],
                       help="conjugate the system into a named basis")
    p.add_argument("--perm")
    p.add_argument("--emit", default="projectors,partitions",
                   help="comma list from projectors,partitions,codes,basis,unitary,meet")
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("enumerate", parents=[common],
                       help="stream the N! equivalent diagonal systems")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("partition", parents=[common, sized],
                       help="partitions induced on the basis, their meet")
    p.add_argument("--perm")
    p.set_defaults(func=_cmd_partition)

    p = sub.add_parser("simulate", parents=[common, sized],
                       help="route a basis state or measure an arbitrary one")
    p.add_argument("--index", type=int, help="1-based basis state to route")
    p.add_argument("--state", help="JSON vector file to measure")
    p.add_argument("--sample", type=int, default=0,
                   help="also draw this many sequential-measurement samples")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("stats", parents=[common],
                       help="question counts: naive strategy vs the sieve")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--trials", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--infer-last", action="store_true",
                   help="do not count the logically forced final question")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("pauli", parents=[common],
                       help="sigma-product propositions from an axis string")
    p.add_argument("--axes", help="one of x/y/z per particle, e.g. xyy")
    p.add_argument("--cereceda", action="store_true",
                   help="emit the permuted xyy/yxy/yyx triple")
    p.set_defaults(func=_cmd_pauli, cereceda_axes=("xyy", "yxy", "yyx"))

    p = sub.add_parser("minimality", parents=[common],
                       help="why n-1 propositions cannot separate 2^n states")
    p.add_argument("--n", type=int, default=2)
    p.set_defaults(func=_cmd_minimality)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as e:
        error = {"error": {"type": type(e).__name__, "message": str(e)}}
        print(json.dumps(error), file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
