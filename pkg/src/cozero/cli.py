"""Command-line front end.

Commands: spectrum (assembled spectrum of one n), verify (assembly versus
the brute-force oracle), scan (verify over a range, in parallel),
structure (quotient graph and class table), integrality (integer-spectrum
check). Exit codes: 0 success, 1 error or failed verification,
2 degenerate input (prime or prime power), 3 vertex cap exceeded,
64 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from datetime import datetime, timezone
from multiprocessing import Pool

from . import spectrum as sp
from .errors import EmptyGraphError, VertexCapError
from .fullgraph import (
    DEFAULT_VERTEX_CAP,
    build_full_graph,
    full_graph_connected_predicate,
    to_dot as full_graph_dot,
)
from .numbers import factorize, is_prime
from .quotient import (
    build_quotient,
    build_weighted_laplacian,
    laplacian_csv,
    quotient_connectivity_state,
    to_dot as quotient_dot,
    weighted_degrees,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_DEGENERATE = 2
EXIT_CAP = 3
EXIT_USAGE = 64

SCHEMA_VERSION = 1
FILTERS = ("all", "pq", "p2q", "png-q", "general2prime")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive_float(text: str) -> float:
    value = float(text)
    if value <= 0.0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return value


def _build_parser() -> _Parser:
    parser = _Parser(prog="cozero", description=__doc__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("json", "csv", "dot", "text"), default="text"
    )
    common.add_argument("--tol", type=_positive_float, default=1e-6,
                        help="comparison/integrality tolerance")
    common.add_argument("--merge-tol", type=_positive_float, default=1e-6,
                        help="eigenvalue multiplicity merge tolerance")
    common.add_argument("--cap", type=int, default=None,
                        help="vertex cap for full-graph builds "
                             "(default COZERO_CAP env or %d)" % DEFAULT_VERTEX_CAP)
    common.add_argument("--no-timestamp", action="store_true",
                        help="suppress timestamps/timing for byte-identical output")
    common.add_argument("--out", default=None, help="write output to a file")

    sub = parser.add_subparsers(dest="command", required=True)

    p_spec = sub.add_parser("spectrum", parents=[common],
                            help="assembled Laplacian spectrum of one n")
    p_spec.add_argument("n", type=int)

    p_verify = sub.add_parser("verify", parents=[common],
                              help="check the assembly against the brute-force oracle")
    p_verify.add_argument("n", type=int)

    p_scan = sub.add_parser("scan", parents=[common],
                            help="verify every eligible n in a range")
    p_scan.add_argument("lo", type=int)
    p_scan.add_argument("hi", type=int)
    p_scan.add_argument("--filter", choices=FILTERS, default="all")
    p_scan.add_argument("--jobs", type=int, default=None,
                        help="worker processes (default: available cores)")

    p_struct = sub.add_parser("structure", parents=[common],
                              help="divisor quotient graph and class table")
    p_struct.add_argument("n", type=int)
    p_struct.add_argument("--full", action="store_true",
                          help="with --format dot, emit the full graph instead")

    p_int = sub.add_parser("integrality", parents=[common],
                           help="report whether the spectrum is all-integer")
    p_int.add_argument("n", type=int)

    return parser


def _resolve_cap(args) -> int:
    if args.cap is not None:
        return args.cap
    env = os.environ.get("COZERO_CAP")
    if env is not None:
        return int(env)
    return DEFAULT_VERTEX_CAP


def _emit(text: str, args) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_envelope(payload: dict, args) -> str:
    doc = {"schema": SCHEMA_VERSION}
    if not args.no_timestamp:
        doc["timestamp"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
    doc.update(payload)
    return json.dumps(doc, indent=2) + "\n"


def _format_value(value: float, exact: bool) -> str:
    return str(int(value)) if exact else f"{value:.6f}"


def _spectrum_text(assembled: sp.AssembledSpectrum) -> str:
    if not assembled.combined.entries:
        return "(empty spectrum)"
    return " ".join(
        f"{_format_value(e.value, e.exact)}^{e.multiplicity}"
        for e in assembled.combined.entries
    )


def _degenerate_exit(n: int) -> int:
    f = factorize(n)
    return EXIT_DEGENERATE if f.is_prime_power else EXIT_OK


def _cmd_spectrum(args) -> int:
    n = args.n
    if n < 2:
        sys.stderr.write(f"cozero: n must be >= 2, got {n}\n")
        return EXIT_ERROR
    assembled = sp.assemble_spectrum(n, merge_tol=args.merge_tol)
    if args.format == "text":
        lines = [f"n={n}: {_spectrum_text(assembled)}"]
        if assembled.degenerate == "empty":
            lines = [f"n={n}: degenerate (prime, empty graph)"]
        elif assembled.degenerate == "null":
            lines.append(f"n={n} is a prime power: null graph, all-zero spectrum")
        _emit("\n".join(lines) + "\n", args)
    elif args.format == "json":
        report = sp.spectrum_report(n, tol=args.tol, merge_tol=args.merge_tol,
                                    cap=_resolve_cap(args))
        _emit(_json_envelope(report, args), args)
    elif args.format == "csv":
        _emit(sp.spectrum_csv(assembled), args)
    else:
        sys.stderr.write("cozero: spectrum has no dot rendering; "
                         "use the structure command\n")
        return EXIT_USAGE
    return _degenerate_exit(n)


def _cmd_verify(args) -> int:
    n = args.n
    if n < 2:
        sys.stderr.write(f"cozero: n must be >= 2, got {n}\n")
        return EXIT_ERROR
    if is_prime(n):
        _emit(f"n={n}: degenerate (prime, empty graph)\n", args)
        return EXIT_DEGENERATE
    try:
        report = sp.verify_against_oracle(
            n, tol=args.tol, merge_tol=args.merge_tol, cap=_resolve_cap(args)
        )
    except VertexCapError as exc:
        sys.stderr.write(f"cozero: {exc}\n")
        return EXIT_CAP
    if args.format == "json":
        payload = {
            "n": n,
            "matched": report.matched,
            "vertex_count": report.vertex_count,
            "max_deviation": report.max_deviation,
            "laplacian_integral": report.laplacian_integral,
            "zero_multiplicity": report.zero_multiplicity,
            "component_count": report.component_count,
            "multiplicity_mismatches": [
                list(row) for row in report.multiplicity_mismatches
            ],
        }
        _emit(_json_envelope(payload, args), args)
    else:
        status = "PASS" if report.matched else "FAIL"
        line = (
            f"n={n}: {status} (vertices={report.vertex_count}, "
            f"max_deviation={report.max_deviation:.3e}, "
            f"integral={str(report.laplacian_integral).lower()})"
        )
        lines = [line]
        for value, mult_a, mult_b in report.multiplicity_mismatches:
            lines.append(f"  mismatch at {value:.6f}: assembled {mult_a}, oracle {mult_b}")
        _emit("\n".join(lines) + "\n", args)
    return EXIT_OK if report.matched else EXIT_ERROR


def _matches_filter(n: int, family: str) -> bool:
    f = factorize(n)
    if f.is_prime:
        return False
    exponents = sorted(e for _, e in f.factors)
    if family == "all":
        return True
    if family == "pq":
        return exponents == [1, 1]
    if family == "p2q":
        return sorted(exponents) == [1, 2]
    if family == "png-q":
        return len(exponents) == 2 and min(exponents) == 1
    if family == "general2prime":
        return len(exponents) == 2
    raise ValueError(f"unknown filter {family!r}")


def _scan_one(task: tuple[int, float, float, int]) -> dict:
    n, tol, merge_tol, cap = task
    try:
        report = sp.verify_against_oracle(n, tol=tol, merge_tol=merge_tol, cap=cap)
    except VertexCapError as exc:
        return {"n": n, "status": "CAP", "error": str(exc)}
    except Exception as exc:  # collected, not fatal
        return {"n": n, "status": "ERROR", "error": str(exc)}
    return {
        "n": n,
        "status": "PASS" if report.matched else "FAIL",
        "vertex_count": report.vertex_count,
        "max_deviation": report.max_deviation,
        "laplacian_integral": report.laplacian_integral,
    }


def _cmd_scan(args) -> int:
    if not 2 <= args.lo <= args.hi:
        sys.stderr.write(f"cozero: need 2 <= lo <= hi, got {args.lo}, {args.hi}\n")
        return EXIT_USAGE
    cap = _resolve_cap(args)
    eligible = [
        n for n in range(args.lo, args.hi + 1) if _matches_filter(n, args.filter)
    ]
    tasks = [(n, args.tol, args.merge_tol, cap) for n in eligible]
    jobs = args.jobs if args.jobs else (os.cpu_count() or 1)
    started = time.perf_counter()
    if jobs > 1 and len(tasks) > 1:
        with Pool(processes=jobs) as pool:
            rows = pool.map(_scan_one, tasks)
    else:
        rows = [_scan_one(t) for t in tasks]
    elapsed = time.perf_counter() - started

    failures = [r for r in rows if r["status"] not in ("PASS",)]
    integral_count = sum(1 for r in rows if r.get("laplacian_integral"))
    if args.format == "json":
        payload = {
            "lo": args.lo,
            "hi": args.hi,
            "filter": args.filter,
            "rows": rows,
            "checked": len(rows),
            "failures": len(failures),
            "integral_count": integral_count,
        }
        if not args.no_timestamp:
            payload["elapsed_seconds"] = round(elapsed, 3)
        _emit(_json_envelope(payload, args), args)
    elif args.format == "csv":
        lines = ["n,status,vertex_count,max_deviation,laplacian_integral"]
        for r in rows:
            lines.append(
                f"{r['n']},{r['status']},{r.get('vertex_count', '')},"
                f"{r.get('max_deviation', '')},"
                f"{str(r.get('laplacian_integral', '')).lower()}"
            )
        _emit("\n".join(lines) + "\n", args)
    else:
        lines = []
        for r in rows:
            if r["status"] == "PASS":
                lines.append(
                    f"n={r['n']}: PASS (vertices={r['vertex_count']}, "
                    f"max_deviation={r['max_deviation']:.3e}, "
                    f"integral={str(r['laplacian_integral']).lower()})"
                )
            else:
                lines.append(f"n={r['n']}: {r['status']} {r.get('error', '')}".rstrip())
        lines.append(
            f"checked {len(rows)} values, {len(failures)} failures, "
            f"{integral_count} integral"
        )
        if not args.no_timestamp:
            lines.append(f"elapsed {elapsed:.2f}s")
        _emit("\n".join(lines) + "\n", args)
    return EXIT_OK if not failures else EXIT_ERROR


def _cmd_structure(args) -> int:
    n = args.n
    if n < 2:
        sys.stderr.write(f"cozero: n must be >= 2, got {n}\n")
        return EXIT_ERROR
    q = build_quotient(n)
    if q.is_empty:
        _emit(f"n={n}: degenerate (prime, no proper divisors)\n", args)
        return EXIT_DEGENERATE
    degrees = weighted_degrees(q)
    boundary = n == 4

    if args.format == "dot":
        if args.full:
            try:
                graph = build_full_graph(n, cap=_resolve_cap(args))
            except VertexCapError as exc:
                sys.stderr.write(f"cozero: {exc}\n")
                return EXIT_CAP
            _emit(full_graph_dot(graph), args)
        else:
            _emit(quotient_dot(q, degrees), args)
    elif args.format == "csv":
        _emit(laplacian_csv(build_weighted_laplacian(q)), args)
    elif args.format == "json":
        payload = {
            "n": n,
            "divisor_classes": [
                {"d": d, "size": w, "D": deg}
                for d, w, deg in zip(q.divisors, q.weights, degrees)
            ],
            "edges": [list(e) for e in q.edges()],
            "quotient_connectivity": quotient_connectivity_state(q),
            "full_graph_connected": full_graph_connected_predicate(n),
            "boundary_case": boundary,
        }
        _emit(_json_envelope(payload, args), args)
    else:
        lines = [
            f"n={n}: {q.size} proper divisors, {q.edge_count} quotient edges",
            f"quotient {quotient_connectivity_state(q)}; "
            f"full graph connected: {str(full_graph_connected_predicate(n)).lower()}",
        ]
        if boundary:
            lines.append("note: n=4 is the single-vertex boundary case (even prime squared)")
        lines.append("divisor  size  D")
        for d, w, deg in zip(q.divisors, q.weights, degrees):
            lines.append(f"{d:7d}  {w:4d}  {deg}")
        if q.edge_count:
            lines.append("edges: " + " ".join(f"{a}-{b}" for a, b in q.edges()))
        _emit("\n".join(lines) + "\n", args)
    return EXIT_OK


def _cmd_integrality(args) -> int:
    n = args.n
    if n < 2:
        sys.stderr.write(f"cozero: n must be >= 2, got {n}\n")
        return EXIT_ERROR
    assembled = sp.assemble_spectrum(n, merge_tol=args.merge_tol)
    if assembled.degenerate == "empty":
        _emit(f"n={n}: degenerate (prime, empty graph)\n", args)
        return EXIT_DEGENERATE
    integral = sp.is_laplacian_integral(assembled, args.tol)
    worst = max(
        (abs(e.value - round(e.value)) for e in assembled.combined.entries),
        default=0.0,
    )
    if args.format == "json":
        payload = {
            "n": n,
            "laplacian_integral": integral,
            "worst_integer_distance": worst,
            "degenerate": assembled.degenerate,
        }
        _emit(_json_envelope(payload, args), args)
    else:
        _emit(
            f"n={n}: laplacian_integral={str(integral).lower()} "
            f"(worst integer distance {worst:.3e})\n",
            args,
        )
    return _degenerate_exit(n)


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "spectrum": _cmd_spectrum,
        "verify": _cmd_verify,
        "scan": _cmd_scan,
        "structure": _cmd_structure,
        "integrality": _cmd_integrality,
    }
    try:
        return handlers[args.command](args)
    except EmptyGraphError as exc:
        sys.stderr.write(f"cozero: {exc}\n")
        return EXIT_DEGENERATE
    except VertexCapError as exc:
        sys.stderr.write(f"cozero: {exc}\n")
        return EXIT_CAP
    except (ValueError, ArithmeticError) as exc:
        sys.stderr.write(f"cozero: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
