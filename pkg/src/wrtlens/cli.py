"""Command-line front end: ``wrtlens {invariant,rep,cf,verify,table}``."""
from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from .cyclo import CyclotomicNumber, get_backend
from .errors import DomainError
from .lens import normalize_lens, verify_grid, wrt_invariant
from .modgroup import cf_expand, cf_for_lens
from .tqftrep import check_level, rep_bruteforce, rep_closed_matrix

EXIT_OK, EXIT_DOMAIN, EXIT_VERIFY, EXIT_USAGE = 0, 1, 2, 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def default_tolerance() -> float:
    raw = os.environ.get("WRT_TOLERANCE")
    if raw is None:
        return 1e-9
    try:
        value = float(raw)
    except ValueError:
        raise DomainError(f"WRT_TOLERANCE is not a number: {raw!r}")
    if not value > 0:
        raise DomainError("WRT_TOLERANCE must be positive")
    return value


def _levels(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _fraction(text: str) -> tuple[int, int]:
    try:
        num, den = text.split("/")
        return int(num), int(den)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected NUM/DEN, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wrtlens", description="WRT SO(3) invariants of lens spaces")
    parser.add_argument("--tolerance", type=float, default=None,
                        help="comparison tolerance (default: WRT_TOLERANCE or 1e-9)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    inv = sub.add_parser("invariant", help="invariant of one lens space")
    for flag in ("-p", "-q", "-r"):
        inv.add_argument(flag, type=int, required=True)
    inv.add_argument("--method", choices=["oracle", "closed", "both"], default="oracle")
    inv.add_argument("--exact", action="store_true")
    inv.add_argument("--output", choices=["json", "text"], default="json")

    rep = sub.add_parser("rep", help="full representation matrix of the gluing word")
    for flag in ("-p", "-q", "-r"):
        rep.add_argument(flag, type=int, required=True)
    rep.add_argument("--method", choices=["oracle", "closed"], default="oracle")
    rep.add_argument("--exact", action="store_true")

    cf = sub.add_parser("cf", help="normal-form continued fraction of NUM/DEN")
    cf.add_argument("fraction", type=_fraction)

    ver = sub.add_parser("verify", help="compare both evaluation paths on a grid")
    ver.add_argument("--pmax", type=int, required=True)
    ver.add_argument("--r", type=_levels, required=True)
    ver.add_argument("--exact", action="store_true")
    ver.add_argument("--output", choices=["json", "text"], default="text")

    tab = sub.add_parser("table", help="CSV table of invariants")
    tab.add_argument("--pmax", type=int, required=True)
    tab.add_argument("--r", type=_levels, required=True)
    return parser


def _lens(args) -> tuple[int, int]:
    L = normalize_lens(args.p, args.q)
    if (L.p, L.q) != (args.p, args.q):
        print(f"notice: L({args.p},{args.q}) normalized to L({L.p},{L.q})", file=sys.stderr)
    return L.p, L.q


def _cmd_invariant(args, tol, out) -> int:
    p, q = _lens(args)
    backend = "exact" if args.exact else "numeric"
    methods = ["oracle", "closed"] if args.method == "both" else [args.method]
    results = [wrt_invariant(p, q, args.r, m, backend) for m in methods]
    for res in results:
        for note in res.notes:
            print(f"notice: {note}", file=sys.stderr)
    if args.output == "json":
        payload = [r.to_json() for r in results]
        json.dump(payload[0] if len(payload) == 1 else payload, out, indent=2)
        out.write("\n")
    else:
        for res in results:
            z = res.numeric
            out.write(f"{res.method}: {z.real:.10f} {z.imag:+.10f}i\n")
    if len(results) == 2:
        a, b = results[0].value, results[1].value
        agree = (a == b) if args.exact else abs(complex(a) - complex(b)) <= tol
        if not agree:
            print("paths disagree", file=sys.stderr)
            return EXIT_VERIFY
    return EXIT_OK


def _serialize_matrix(M) -> list:
    return [[v.to_json() if isinstance(v, CyclotomicNumber) else {"re": complex(v).real, "im": complex(v).imag}
             for v in row] for row in M]


def _cmd_rep(args, tol, out) -> int:
    p, q = _lens(args)
    check_level(args.r)
    C, U = cf_for_lens(p, q)
    be = get_backend("exact" if args.exact else "numeric", tol)
    M = rep_bruteforce(args.r, C, be) if args.method == "oracle" else rep_closed_matrix(args.r, C, be)
    json.dump({"p": p, "q": q, "r": args.r, "cf": list(C.entries), "method": args.method,
               "matrix": _serialize_matrix(M)}, out, indent=2)
    out.write("\n")
    return EXIT_OK


def _cmd_cf(args, tol, out) -> int:
    num, den = args.fraction
    out.write(str(cf_expand(num, den)) + "\n")
    return EXIT_OK


def _cmd_verify(args, tol, out) -> int:
    report = verify_grid(args.pmax, args.r, "exact" if args.exact else "numeric", tol)
    if args.output == "json":
        json.dump(report.to_json(), out, indent=2)
        out.write("\n")
    else:
        for r, rel in report.relations.items():
            st6 = rel.get("ST6_value")
            scalar = f"{st6['re']:.12g}{st6['im']:+.3g}i" if st6 else "not scalar"
            out.write(f"r={r}: S^4=I {rel['S4_identity']}, (ST)^6 scalar {scalar}, "
                      f"(ST)^3 = {rel['ST3_over_S2']} * S^2\n")
        for line in report.failures:
            out.write(f"failure: {line}\n")
        for line in report.notes:
            out.write(f"note: {line}\n")
        out.write(report.summary() + "\n")
    return EXIT_OK if report.passed else EXIT_VERIFY


def _cmd_table(args, tol, out) -> int:
    report = verify_grid(args.pmax, args.r, "numeric", tol)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["r", "p", "q", "re", "im", "phi", "deviation"])
    for e in report.entries:
        z = e.numeric
        writer.writerow([e.r, e.p, e.q, repr(z.real), repr(z.imag), e.phi, f"{e.deviation:.3e}"])
    return EXIT_OK if report.passed else EXIT_VERIFY


COMMANDS = {"invariant": _cmd_invariant, "rep": _cmd_rep, "cf": _cmd_cf,
            "verify": _cmd_verify, "table": _cmd_table}


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        tol = args.tolerance if args.tolerance is not None else default_tolerance()
        if tol <= 0:
            raise DomainError("tolerance must be positive")
        return COMMANDS[args.command](args, tol, out)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
