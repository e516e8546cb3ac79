"""Command-line interface.

Exit codes: 0 success (gflow found, check passed, maps equivalent), 1 a
negative answer (no gflow, check failed, maps differ), 2 bad input or a size
cap was hit.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .circuit import Circuit, circuit_to_pattern, eval_circuit, parse_circuit, print_circuit
from .diagram import MbqcDiagram, diagram_from_json, diagram_to_json
from .extract import extract_circuit
from .gflow import GFlow, find_gflow, verify_gflow
from .oracle import OracleCapError, equivalent_up_to_scalar, eval_diagram, run_branches
from .rewrite import reduce_diagram, to_mbqc_form, to_phase_gadget_form

__all__ = ["main"]

EXIT_OK, EXIT_NO, EXIT_ERROR = 0, 1, 2


class CliError(Exception):
    """Bad input; reported on stderr with exit code 2."""


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise CliError(f"{path}: {exc.strerror}") from exc


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _load_diagram(path: str) -> MbqcDiagram:
    try:
        return diagram_from_json(_read(path))
    except (ValueError, TypeError, KeyError) as exc:
        raise CliError(f"{path}: {exc}") from exc


def _load_circuit(path: str) -> Circuit:
    try:
        return parse_circuit(_read(path))
    except ValueError as exc:
        raise CliError(f"{path}: {exc}") from exc


def _load_gflow(path: str) -> GFlow:
    try:
        return GFlow.from_json(_read(path))
    except (ValueError, TypeError, KeyError) as exc:
        raise CliError(f"{path}: {exc}") from exc


def _gflow_for(d: MbqcDiagram, path: str) -> GFlow:
    try:
        f = find_gflow(d.graph)
    except ValueError as exc:
        raise CliError(f"{path}: {exc}") from exc
    if f is None:
        raise CliError(f"{path}: the diagram has no gflow")
    return f


def _kind(path: str, override: str | None) -> str:
    if override:
        return override
    suffix = Path(path).suffix.lower()
    if suffix == ".json":
        return "graph"
    if suffix == ".txt":
        return "circuit"
    raise CliError(f"{path}: cannot infer the artifact kind from {suffix or 'no suffix'!r}; pass --kind")


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    elif text:
        print(text)


# subcommands -----------------------------------------------------------------------


def cmd_find_gflow(args) -> int:
    d = _load_diagram(args.graph)
    try:
        f = find_gflow(d.graph)
    except ValueError as exc:
        raise CliError(f"{args.graph}: {exc}") from exc
    if f is None:
        _emit(args, {"gflow": None}, "no gflow")
        return EXIT_NO
    if args.output:
        _write(args.output, f.to_json() + "\n")
    if args.json:
        print(json.dumps({"gflow": f.to_dict()}, sort_keys=True))
    elif not args.output:
        print(f.to_json())
    return EXIT_OK


def cmd_check_gflow(args) -> int:
    d = _load_diagram(args.graph)
    f = _load_gflow(args.gflow)
    ok, violations = verify_gflow(d.graph, f)
    lines = ["ok"] if ok else [f"vertex {v.vertex}: {v.condition}: {v.detail}" for v in violations]
    payload = {"valid": ok, "violations": [v._asdict() for v in violations]}
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if ok else EXIT_NO


def cmd_simplify(args) -> int:
    d = _load_diagram(args.graph)
    f = _gflow_for(d, args.graph)
    trace = None
    if args.to == "mbqc":
        d2, _ = to_mbqc_form(d, f)
    elif args.to == "phase-gadget":
        d2, _ = to_phase_gadget_form(d, f)
    else:
        if len(d.graph.inputs) != len(d.graph.outputs):
            raise CliError(f"{args.graph}: reduced form needs as many inputs as outputs")
        d2, _, trace = reduce_diagram(d, f)
    _write(args.output, diagram_to_json(d2) + "\n")
    if args.trace:
        _write(args.trace, trace.to_jsonl() if trace is not None else "")
    g = d2.graph
    _emit(
        args,
        {"vertices": len(g), "edges": g.num_edges(), "form": args.to},
        f"{args.to}: {len(d.graph)} -> {len(g)} vertices" if args.output not in (None, "-") else "",
    )
    return EXIT_OK


def cmd_extract(args) -> int:
    d = _load_diagram(args.graph)
    f = _gflow_for(d, args.graph)
    if len(d.graph.inputs) != len(d.graph.outputs):
        raise CliError(f"{args.graph}: extraction needs as many inputs as outputs")
    c = extract_circuit(d, f)
    _write(args.output, print_circuit(c))
    if args.output not in (None, "-"):
        _emit(args, {"width": c.width, "gates": len(c)}, f"{len(c)} gates on {c.width} qubits")
    return EXIT_OK


def cmd_c2p(args) -> int:
    c = _load_circuit(args.circuit)
    d, _ = circuit_to_pattern(c)
    _write(args.output, diagram_to_json(d) + "\n")
    if args.output not in (None, "-"):
        _emit(args, {"vertices": len(d.graph)}, f"{len(d.graph)} vertices")
    return EXIT_OK


def _dense(path: str, kind: str):
    if kind == "circuit":
        return eval_circuit(_load_circuit(path))
    return eval_diagram(_load_diagram(path))


def cmd_verify(args) -> int:
    kinds = list(args.kind or [])
    if len(kinds) == 1:
        kinds *= 2
    if len(kinds) > 2:
        raise CliError("--kind may be given at most twice")
    ka = _kind(args.a, kinds[0] if kinds else None)
    kb = _kind(args.b, kinds[1] if kinds else None)
    a, b = _dense(args.a, ka), _dense(args.b, kb)
    if a.shape != b.shape:
        raise CliError(f"dimension mismatch: {a.shape} vs {b.shape}")
    try:
        ok, z = equivalent_up_to_scalar(a, b, args.tol)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    payload = {"equivalent": ok, "scalar": [z.real, z.imag]}
    _emit(args, payload, f"{'equivalent' if ok else 'different'} scalar={z:.6g}")
    return EXIT_OK if ok else EXIT_NO


def cmd_sim(args) -> int:
    d = _load_diagram(args.graph)
    if args.gflow:
        f = _load_gflow(args.gflow)
    else:
        f = _gflow_for(d, args.graph)
    report = run_branches(d, f)
    worst = report.max_residual
    ok = worst < args.tol
    payload = {
        "order": report.order,
        "branches": len(report.outcomes),
        "max_residual": worst,
        "deterministic": ok,
    }
    text = (
        f"{len(report.outcomes)} branches over {len(report.order)} measurements; "
        f"max residual {worst:.3g}; {'deterministic' if ok else 'NOT deterministic'}"
    )
    _emit(args, payload, text)
    return EXIT_OK if ok else EXIT_NO


# parser ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gflowkit", description="MBQC patterns: gflow, rewriting, extraction.")
    p.add_argument("--json", action="store_true", help="machine-readable JSON on stdout")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("find-gflow", help="find a maximally delayed gflow")
    s.add_argument("graph")
    s.add_argument("-o", "--output")
    s.set_defaults(run=cmd_find_gflow)

    s = sub.add_parser("check-gflow", help="verify a gflow against a graph")
    s.add_argument("graph")
    s.add_argument("gflow")
    s.set_defaults(run=cmd_check_gflow)

    s = sub.add_parser("simplify", help="rewrite into MBQC, phase-gadget or reduced form")
    s.add_argument("graph")
    s.add_argument("--to", choices=["mbqc", "phase-gadget", "reduced"], default="reduced")
    s.add_argument("-o", "--output")
    s.add_argument("--trace", help="write the applied rules as JSON lines")
    s.set_defaults(run=cmd_simplify)

    s = sub.add_parser("extract", help="extract a circuit from a diagram with gflow")
    s.add_argument("graph")
    s.add_argument("-o", "--output")
    s.set_defaults(run=cmd_extract)

    s = sub.add_parser("c2p", help="translate a circuit into a pattern")
    s.add_argument("circuit")
    s.add_argument("-o", "--output")
    s.set_defaults(run=cmd_c2p)

    s = sub.add_parser("verify", help="compare two artifacts up to a scalar")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--tol", type=float, default=1e-8)
    s.add_argument(
        "--kind",
        action="append",
        choices=["graph", "circuit"],
        help="artifact kind; once for both, or twice in argument order",
    )
    s.set_defaults(run=cmd_verify)

    s = sub.add_parser("sim", help="simulate all measurement branches")
    s.add_argument("graph")
    s.add_argument("--branches", action="store_true", help="enumerate every branch (the default)")
    s.add_argument("--gflow", help="use this gflow instead of finding one")
    s.add_argument("--tol", type=float, default=1e-8)
    s.set_defaults(run=cmd_sim)

    for action in sub.choices.values():
        action.add_argument(
            "--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable JSON on stdout"
        )
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        return args.run(args)
    except OracleCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (CliError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
