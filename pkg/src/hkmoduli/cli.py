"""Command line front end.

Subcommands:
    check    full report for one (family, n, d, t) query
    table    reports for a d-range and a list of t values
    kva      k-very-ampleness bound for a line bundle on a surface
    witness  just the witness class for one query

Output formats: human (default), json, csv (table only).  JSON output is
canonical: fixed key order, integers, booleans, strings and lists only (no
floats; exact rationals are rendered as strings), so re-serializing the
parsed output reproduces the bytes.

Exit codes: 0 success, 1 usage error, 2 internal inconsistency (the closed
formulas and the brute-force oracle, or two formulas, disagree; this is a
bug report, not a user error).

The --oracle flag cross-checks check/witness answers by brute-force lattice
search.  Bounds default to values that provably contain a witness whenever
one exists; HK_ORACLE_BOUNDS="MAX_A,MAX_B,MAX_E" widens them (values below
the defaults are ignored, the search never shrinks below completeness).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Optional, Sequence

from .bundles import BundleSpec, SurfaceKind, induced_bundle_status, max_k_very_ample
from .lattice import Family
from .moduli import InternalInconsistency, ModuliQuery, ModuliReport, report
from .oracle import SearchBounds, default_bounds, enumerate_witnesses, verify_witness

__all__ = ["main"]

_CSV_HEADER = [
    "family", "n", "d", "t", "non_empty", "components",
    "witness_a", "witness_b", "witness_e",
    "bpf_some_component", "va_some_component",
    "fujita_power", "applies_to_all_components",
]


class _Parser(argparse.ArgumentParser):
    # usage problems must exit 1; argparse's default (2) is reserved for
    # internal inconsistencies.
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(1, "%s: error: %s\n" % (self.prog, message))


def _parse_range(text: str) -> range:
    # ArgumentTypeError (not ValueError) so argparse reports these messages
    # verbatim instead of a generic "invalid value".
    lo, sep, hi = text.partition("..")
    try:
        a, b = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(
            "expected LO..HI, got %r" % (text,)) from None
    if a < 1 or b < a:
        raise argparse.ArgumentTypeError(
            "need 1 <= LO <= HI, got %r" % (text,))
    return range(a, b + 1)


def _parse_t_list(text: str) -> list[int]:
    message = "need a comma separated list of t >= 1, got %r" % (text,)
    try:
        out = [int(part) for part in text.split(",") if part]
    except ValueError:
        raise argparse.ArgumentTypeError(message) from None
    if not out or any(t < 1 for t in out):
        raise argparse.ArgumentTypeError(message)
    return out


def _oracle_bounds(q: ModuliQuery) -> SearchBounds:
    bounds = default_bounds(q)
    raw = os.environ.get("HK_ORACLE_BOUNDS")
    if raw:
        try:
            parts = [int(x) for x in raw.split(",")]
            if len(parts) != 3:
                raise ValueError
        except ValueError:
            raise ValueError(
                "HK_ORACLE_BOUNDS must be MAX_A,MAX_B,MAX_E, got %r" % (raw,))
        bounds = SearchBounds(*(max(a, b) for a, b in zip(bounds, parts)))
    return bounds


def _run_oracle(q: ModuliQuery, rep: ModuliReport) -> dict:
    bounds = _oracle_bounds(q)
    hits = enumerate_witnesses(q, bounds, stop_after=1)
    agrees = bool(hits) == rep.non_empty
    if rep.witness is not None and not verify_witness(rep.witness, q):
        agrees = False
    if not agrees:
        raise InternalInconsistency(
            "oracle search within %r disagrees with the formulas at %r"
            % (bounds, q))
    return {
        "bounds": {"max_a": bounds.max_a, "max_b": bounds.max_b,
                   "max_e": bounds.max_e},
        "witness_found": bool(hits),
        "agrees": True,
    }


def _report_dict(rep: ModuliReport) -> dict:
    return {
        "family": rep.family.value,
        "n": rep.n,
        "d": rep.d,
        "t": rep.t,
        "non_empty": rep.non_empty,
        "components": rep.components,
        "witness": list(rep.witness) if rep.witness is not None else None,
        "bpf_some_component": rep.bpf_some_component,
        "va_some_component": rep.va_some_component,
        "fujita_power": rep.fujita_power,
        "applies_to_all_components": rep.applies_to_all_components,
        "threshold_notes": list(rep.threshold_notes),
    }


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


def _print_report_human(rep: ModuliReport, oracle: Optional[dict]) -> None:
    print("query: family=%s n=%d d=%d t=%d"
          % (rep.family.value, rep.n, rep.d, rep.t))
    print("non-empty: %s" % _yesno(rep.non_empty))
    print("components: %d" % rep.components)
    if rep.witness is None:
        print("witness: none")
    else:
        print("witness: a=%d b=%d e=%d" % rep.witness)
    print("base point free on some component: %s"
          % _yesno(rep.bpf_some_component))
    print("very ample on some component: %s" % _yesno(rep.va_some_component))
    print("applies to all components: %s"
          % _yesno(rep.applies_to_all_components))
    for note in rep.threshold_notes:
        print("note: %s" % note)
    if oracle is not None:
        print("oracle: agrees (witness found: %s; bounds a<=%d |b|<=%d e<=%d)"
              % (_yesno(oracle["witness_found"]),
                 oracle["bounds"]["max_a"], oracle["bounds"]["max_b"],
                 oracle["bounds"]["max_e"]))


def _csv_row(rep: ModuliReport) -> list:
    w = rep.witness
    return [
        rep.family.value, rep.n, rep.d, rep.t,
        int(rep.non_empty), rep.components,
        w.a if w else "", w.b if w else "", w.e if w else "",
        int(rep.bpf_some_component), int(rep.va_some_component),
        rep.fujita_power, int(rep.applies_to_all_components),
    ]


def _cmd_check(args: argparse.Namespace) -> int:
    q = ModuliQuery(Family(args.family), args.n, args.d, args.t)
    rep = report(q)
    oracle = _run_oracle(q, rep) if args.oracle else None
    if args.format == "json":
        obj = _report_dict(rep)
        if oracle is not None:
            obj["oracle"] = oracle
        _emit_json(obj)
    else:
        _print_report_human(rep, oracle)
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    family = Family(args.family)
    cells = [(t, d) for t in sorted(set(args.t)) for d in args.d_range]
    reps = [report(ModuliQuery(family, args.n, d, t)) for t, d in cells]
    if args.format == "json":
        _emit_json([_report_dict(r) for r in reps])
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(_CSV_HEADER)
        for r in reps:
            writer.writerow(_csv_row(r))
        sys.stdout.write(buf.getvalue())
    else:
        print("family=%s n=%d" % (family.value, args.n))
        print("%4s %5s %6s %5s %8s %4s %4s %4s" %
              ("t", "d", "empty?", "comps", "witness", "bpf", "va", "all"))
        for r in reps:
            w = "-" if r.witness is None else ("%d,%d,%d" % r.witness)
            print("%4d %5d %6s %5d %8s %4s %4s %4s" %
                  (r.t, r.d, _yesno(not r.non_empty), r.components, w,
                   _yesno(r.bpf_some_component), _yesno(r.va_some_component),
                   _yesno(r.applies_to_all_components)))
    return 0


def _cmd_kva(args: argparse.Namespace) -> int:
    spec = BundleSpec(SurfaceKind(args.surface), args.a, args.e)
    k = max_k_very_ample(spec)
    if args.format == "json":
        obj = {"surface": spec.surface.value, "a": spec.a, "e": spec.e,
               "max_k_very_ample": k}
        if args.n is not None:
            status = induced_bundle_status(spec, args.n)
            obj["n"] = args.n
            obj["induced_bpf"] = status.bpf
            obj["induced_very_ample"] = status.very_ample
        _emit_json(obj)
    else:
        print("surface=%s a=%d e=%d" % (spec.surface.value, spec.a, spec.e))
        print("max k with L k-very ample: %d" % k)
        if k < 0:
            print("negative bound: L is not base point free")
        if args.n is not None:
            status = induced_bundle_status(spec, args.n)
            print("induced bundle at n=%d: base point free: %s, "
                  "very ample: %s" % (args.n, _yesno(status.bpf),
                                      _yesno(status.very_ample)))
    return 0


def _cmd_witness(args: argparse.Namespace) -> int:
    q = ModuliQuery(Family(args.family), args.n, args.d, args.t)
    rep = report(q)
    oracle = _run_oracle(q, rep) if args.oracle else None
    if args.format == "json":
        obj = {
            "family": rep.family.value, "n": rep.n, "d": rep.d, "t": rep.t,
            "non_empty": rep.non_empty,
            "witness": list(rep.witness) if rep.witness else None,
        }
        if oracle is not None:
            obj["oracle"] = oracle
        _emit_json(obj)
    else:
        if rep.witness is None:
            print("witness: none (moduli space is empty)")
        else:
            print("witness: a=%d b=%d e=%d" % rep.witness)
        if oracle is not None:
            print("oracle: agrees")
    return 0


def _add_query_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", required=True, choices=[f.value for f in Family],
                   help="k3n: Hilbert schemes of points on K3; "
                        "kum: generalized Kummer varieties")
    p.add_argument("--n", required=True, type=int,
                   help="half the complex dimension, n >= 2")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hkmoduli",
                     description="Moduli of polarized hyperkaehler "
                                 "manifolds: exact arithmetic answers.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[], help="full report for one query")
    _add_query_args(p)
    p.add_argument("--d", required=True, type=int, help="half the BBF square")
    p.add_argument("--t", required=True, type=int, help="divisibility")
    p.add_argument("--format", choices=["human", "json"], default="human")
    p.add_argument("--oracle", action="store_true",
                   help="cross-check with brute-force lattice search")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("table", help="sweep d and t at fixed family and n")
    _add_query_args(p)
    p.add_argument("--d-range", required=True, dest="d_range",
                   type=_parse_range, metavar="LO..HI")
    p.add_argument("--t", required=True, type=_parse_t_list, metavar="T1,T2,...")
    p.add_argument("--format", choices=["human", "json", "csv"],
                   default="human")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("kva", help="k-very-ampleness bound on a surface")
    p.add_argument("--surface", required=True,
                   choices=[s.value for s in SurfaceKind])
    p.add_argument("--a", required=True, type=int, help="multiple of H")
    p.add_argument("--e", required=True, type=int, help="H^2 = 2e")
    p.add_argument("--n", type=int, default=None,
                   help="also report the induced bundle status at this n")
    p.add_argument("--format", choices=["human", "json"], default="human")
    p.set_defaults(func=_cmd_kva)

    p = sub.add_parser("witness", help="polarization class for one query")
    _add_query_args(p)
    p.add_argument("--d", required=True, type=int, help="half the BBF square")
    p.add_argument("--t", required=True, type=int, help="divisibility")
    p.add_argument("--format", choices=["human", "json"], default="human")
    p.add_argument("--oracle", action="store_true",
                   help="cross-check with brute-force lattice search")
    p.set_defaults(func=_cmd_witness)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit as exc:
        # argparse exits on usage errors (code 1 via _Parser) and on --help
        # (code 0); fold both into the return-code contract.
        return exc.code if isinstance(exc.code, int) else 1
    except InternalInconsistency as exc:
        print("internal inconsistency: %s" % exc, file=sys.stderr)
        return 2
    except ValueError as exc:
        # bad values that argparse cannot see (env vars, domain checks)
        print("%s: error: %s" % (parser.prog, exc), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
