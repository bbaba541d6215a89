"""Batch command-line front end.

Every subcommand validates its parameters, runs the computation to
completion, and only then writes to stdout, so invalid input never produces
partial output.  Data goes to stdout; progress and error text go to stderr.

Exit codes: 0 = computed and every verified predicate held; 2 = invalid
input; 3 = a scan or cross-check found a counterexample (reported on
stdout, never dropped).

Formats: ``plain`` (tab-separated rows, '#'-prefixed footer lines), ``csv``
(same rows with a header), ``json`` (one object: command, params, result,
duration_ms).  Rationals are always serialized in lowest terms as
"num/den".  Output is byte-deterministic for fixed inputs regardless of
``--jobs`` (the JSON duration_ms field is the sole exception).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .alexander import LaurentPolynomial, cable_alexander, torus_alexander, torus_alexander_factors
from .cobordism import two_summand_scan
from .lens import (
    LensSpace,
    canonicalize,
    correction_numerators,
    delta_range,
    range_bound_scan,
    rational_str,
)
from .surgery import VSequence, _moser_sides, d_positive_integer_surgery, positive_cable_slice_check

__all__ = ["main"]

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_COUNTEREXAMPLE = 3


@dataclass
class CommandOutput:
    params: dict
    result: dict
    header: tuple[str, ...]
    rows: list[tuple]
    footer: list[str] = field(default_factory=list)
    exit_code: int = EXIT_OK


def _cell(value) -> str:
    if isinstance(value, Fraction):
        return rational_str(value)
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _emit(command: str, out: CommandOutput, fmt: str, duration_ms: int) -> None:
    if fmt == "json":
        doc = {
            "command": command,
            "params": out.params,
            "result": out.result,
            "duration_ms": duration_ms,
        }
        print(json.dumps(doc))
        return
    if fmt == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(out.header)
        for row in out.rows:
            writer.writerow([_cell(v) for v in row])
    else:
        for row in out.rows:
            print("\t".join(_cell(v) for v in row))
    for line in out.footer:
        print(f"# {line}")


def _progress_printer(label: str):
    def report(done: int, total: int) -> None:
        if total:
            print(f"{label}: {done}/{total}", file=sys.stderr, flush=True)
        else:
            print(f"{label}: {done}", file=sys.stderr, flush=True)

    return report


def _lens_values(L: LensSpace) -> list[Fraction]:
    numer, den = correction_numerators(L)
    return [Fraction(int(n), den) for n in numer]


def _cmd_lens(args) -> CommandOutput:
    L = canonicalize(args.p, args.q)
    values = _lens_values(L)
    return CommandOutput(
        params={"p": args.p, "q": args.q},
        result={
            "p": L.p,
            "q": L.q,
            "values": [rational_str(v) for v in values],
            "multiset": [rational_str(v) for v in sorted(values)],
        },
        header=("i", "d"),
        rows=[(i, v) for i, v in enumerate(values)],
    )


def _cmd_delta(args) -> CommandOutput:
    L = canonicalize(args.p, args.q)
    value = delta_range(L)
    return CommandOutput(
        params={"p": args.p, "q": args.q},
        result={"p": L.p, "q": L.q, "delta": rational_str(value)},
        header=("delta",),
        rows=[(value,)],
    )


def _cmd_verify_range(args) -> CommandOutput:
    progress = _progress_printer("verify-range pairs") if not args.quiet else None
    report = range_bound_scan(args.p_max, jobs=args.jobs, progress=progress)
    footer = [
        f"pairs_checked={report.pairs_checked}",
        f"violations={len(report.violations)}",
    ]
    return CommandOutput(
        params={"p_max": args.p_max, "jobs": args.jobs},
        result=report.to_dict(),
        header=("p", "q", "delta", "bound"),
        rows=[(p, q, d, Fraction(p, 4)) for p, q, d in report.violations],
        footer=footer,
        exit_code=EXIT_OK if report.ok else EXIT_COUNTEREXAMPLE,
    )


def _cmd_two_summand(args) -> CommandOutput:
    progress = _progress_printer("two-summand tuples") if not args.quiet else None
    report = two_summand_scan(args.pq_max, jobs=args.jobs, progress=progress)
    footer = [
        f"tuples_checked={report.tuples_checked}",
        f"filter_rejected={report.filter_rejected}",
        f"filter_survivors={len(report.filter_survivors)}",
        f"counterexamples={len(report.counterexamples)}",
    ]
    return CommandOutput(
        params={"pq_max": args.pq_max, "jobs": args.jobs},
        result=report.to_dict(),
        header=("p", "q", "a", "b", "constant"),
        rows=[tuple(t) for t in report.counterexamples],
        footer=footer,
        exit_code=EXIT_OK if report.ok else EXIT_COUNTEREXAMPLE,
    )


def _cmd_alexander_torus(args) -> CommandOutput:
    poly = torus_alexander(args.p, args.q)
    factors = list(torus_alexander_factors(args.p, args.q)) if args.q > 1 else []
    return CommandOutput(
        params={"p": args.p, "q": args.q},
        result={
            "p": args.p,
            "q": args.q,
            "polynomial": poly.to_wire(),
            "cyclotomic_factors": factors,
            "degree_span": 0 if poly.is_zero else poly.degree_span,
        },
        header=("polynomial",),
        rows=[(poly.to_wire(),)],
    )


def _cmd_alexander_cable(args) -> CommandOutput:
    delta_j = LaurentPolynomial.from_wire(args.delta_j).alexander_normalized()
    poly = cable_alexander(delta_j, args.p, args.q)
    return CommandOutput(
        params={"p": args.p, "q": args.q, "delta_j": args.delta_j},
        result={
            "p": args.p,
            "q": args.q,
            "companion": delta_j.to_wire(),
            "polynomial": poly.to_wire(),
            "degree_span": poly.degree_span,
        },
        header=("polynomial",),
        rows=[(poly.to_wire(),)],
    )


def _cmd_slice_cable(args) -> CommandOutput:
    report = positive_cable_slice_check(args.p, args.q, args.v0)
    params = {"p": args.p, "q": args.q}
    if args.v0 is not None:
        params["v0"] = args.v0
    return CommandOutput(
        params=params,
        result=report.to_dict(),
        header=("verdict", "path"),
        rows=[(report.verdict.value, report.path or "-")],
        footer=list(report.narrative),
    )


def _cmd_moser(args) -> CommandOutput:
    via_surgery, via_sum = _moser_sides(args.p, args.q)
    equal = via_surgery == via_sum
    return CommandOutput(
        params={"p": args.p, "q": args.q},
        result={
            "p": args.p,
            "q": args.q,
            "equal": equal,
            "surgery_multiset": [rational_str(v) for v in via_surgery],
            "connected_sum_multiset": [rational_str(v) for v in via_sum],
        },
        header=("equal",),
        rows=[(equal,)],
        footer=[
            "surgery_multiset: " + ", ".join(rational_str(v) for v in via_surgery),
            "connected_sum_multiset: " + ", ".join(rational_str(v) for v in via_sum),
        ],
        exit_code=EXIT_OK if equal else EXIT_COUNTEREXAMPLE,
    )


def _parse_v_sequence(text: str) -> VSequence:
    text = text.strip()
    if not text:
        return VSequence.zero()
    try:
        entries = tuple(int(x.strip()) for x in text.split(","))
    except ValueError:
        raise ValueError(f"bad V-sequence {text!r}; expected comma-separated integers")
    return VSequence(entries)


def _cmd_surgery(args) -> CommandOutput:
    V = _parse_v_sequence(args.v)
    multiset = d_positive_integer_surgery(V, args.n)
    numer, den = correction_numerators(LensSpace(args.n, 1 if args.n > 1 else 0))
    values = [
        Fraction(int(numer[i]), den) - 2 * max(V[i], V[args.n - i]) for i in range(args.n)
    ]
    return CommandOutput(
        params={"n": args.n, "v": list(V.values)},
        result={
            "n": args.n,
            "v": list(V.values),
            "values": [rational_str(v) for v in values],
            "multiset": [rational_str(v) for v in multiset],
        },
        header=("i", "d"),
        rows=[(i, v) for i, v in enumerate(values)],
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dterms",
        description="Exact correction terms of lens spaces, surgery multisets, "
        "and sliceness obstruction scans.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", "-f", choices=("plain", "csv", "json"), default="plain",
        help="output format (default: plain)",
    )
    common.add_argument(
        "--jobs", type=int, default=1, metavar="N",
        help="worker processes for scan subcommands (default: 1)",
    )
    common.add_argument(
        "--quiet", action="store_true", help="suppress progress lines on stderr"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("lens", parents=[common], help="correction terms of L(p,q)")
    s.add_argument("p", type=int)
    s.add_argument("q", type=int)
    s.set_defaults(handler=_cmd_lens)

    s = sub.add_parser("delta", parents=[common], help="spread of the multiset of L(p,q)")
    s.add_argument("p", type=int)
    s.add_argument("q", type=int)
    s.set_defaults(handler=_cmd_delta)

    s = sub.add_parser(
        "verify-range", parents=[common],
        help="exhaustively verify delta(p,q) <= p/4 for p <= p-max",
    )
    s.add_argument("--p-max", type=int, required=True, metavar="N")
    s.set_defaults(handler=_cmd_verify_range)

    s = sub.add_parser(
        "two-summand", parents=[common],
        help="scan D(L(pq,1)) =? D(L(p,a)#L(q,b)) + c for pq <= pq-max",
    )
    s.add_argument("--pq-max", type=int, required=True, metavar="N")
    s.set_defaults(handler=_cmd_two_summand)

    s = sub.add_parser("alexander-torus", parents=[common], help="torus knot Alexander polynomial")
    s.add_argument("p", type=int)
    s.add_argument("q", type=int)
    s.set_defaults(handler=_cmd_alexander_torus)

    s = sub.add_parser(
        "alexander-cable", parents=[common], help="cable Alexander polynomial"
    )
    s.add_argument("p", type=int)
    s.add_argument("q", type=int)
    s.add_argument(
        "--delta-j", required=True, metavar="POLY",
        help="companion polynomial as 'exp:coeff,exp:coeff,...'",
    )
    s.set_defaults(handler=_cmd_alexander_cable)

    s = sub.add_parser(
        "slice-cable", parents=[common],
        help="layered sliceness verdict for a positive (p,q)-cable",
    )
    s.add_argument("p", type=int)
    s.add_argument("q", type=int)
    s.add_argument("--v0", type=int, default=None, metavar="N",
                   help="V_0 of the companion knot, if known")
    s.set_defaults(handler=_cmd_slice_cable)

    s = sub.add_parser(
        "moser", parents=[common],
        help="cross-check pq-surgery on the torus knot against L(p,q)#L(q,p)",
    )
    s.add_argument("p", type=int)
    s.add_argument("q", type=int)
    s.set_defaults(handler=_cmd_moser)

    s = sub.add_parser(
        "surgery", parents=[common], help="correction terms of n-surgery from a V-sequence"
    )
    s.add_argument("n", type=int)
    s.add_argument("--v", default="", metavar="V0,V1,...",
                   help="V-sequence entries (default: all zero)")
    s.set_defaults(handler=_cmd_surgery)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        out: CommandOutput = args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    duration_ms = int(round((time.perf_counter() - started) * 1000))
    _emit(args.command, out, args.format, duration_ms)
    return out.exit_code


if __name__ == "__main__":
    sys.exit(main())
