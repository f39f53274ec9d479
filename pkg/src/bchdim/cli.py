"""Command-line entry point: ``bchdim {params,table,verify,coset,genpoly}``.

Exit status: 0 on success, 1 when a verification finds a mismatch, 2 for
invalid or over-scale input.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import List, Optional

from . import cosets as C
from . import formulas as F
from .codes import FULL_ENUMERATION_CAP
from .errors import DomainError
from .gf import build_field, degree, generator_poly, poly_str, serialize_poly
from .qadic import CodeIndex, ndigits, to_digits
from .tables import FORMATTERS, add_distances, generate_table
from .verify import LEVELS, run_level

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2


def _emit_record(rec: dict, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(rec) + "\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(rec.keys())
        w.writerow(["" if v is None else v for v in rec.values()])
    else:
        for key, val in rec.items():
            out.write(f"{key}: {val}\n")


def cmd_params(args, out) -> int:
    r = F.bch_parameters(args.q, args.m, args.delta, args.b)
    rec = {"q": args.q, "m": args.m, "delta": args.delta, "b": args.b, "n": r.n, "k": r.dimension,
           "d_B": r.bose, "source": r.source.value}
    _emit_record(rec, args.format, out)
    return EXIT_OK


def cmd_table(args, out) -> int:
    rows = generate_table(args.q, args.m, args.delta_lo, args.delta_hi, args.b, merge=not args.no_merge)
    if args.with_distance:
        rows = add_distances(rows, args.budget, args.b, use_bch_bound=args.use_bch_bound)
    out.write(FORMATTERS[args.format](rows))
    return EXIT_OK


def cmd_verify(args, out) -> int:
    idx = CodeIndex(args.q, args.m)
    reports = run_level(idx, args.level)
    for rep in reports:
        out.write(rep.line() + "\n")
    bad = [rep for rep in reports if not rep.ok]
    if bad:
        out.write(f"first counterexample: {bad[0].first}\n")
        return EXIT_MISMATCH
    return EXIT_OK


def _class_label(a: int, idx: CodeIndex) -> Optional[str]:
    if idx.m < 4 or a < 1:
        return None
    k = ndigits(a, idx.q) - 1 - idx.h
    lo_k = 1 if idx.odd else 0
    if not lo_k <= k <= idx.max_k:
        return None
    if idx.odd:
        i = C.classify_A(a, k, idx)
        return None if i is None else f"A_{k}({i})"
    i = C.classify_B(a, k, idx)
    return None if i is None else f"B_{k}({i})"


def cmd_coset(args, out) -> int:
    idx = CodeIndex(args.q, args.m)
    rec = C.coset_of(args.a, idx)
    info = {
        "a": args.a,
        "leader": rec.leader,
        "size": rec.size,
        "elements": list(rec.elements),
        "digits": "".join(str(d) if d < 10 else f"[{d}]" for d in to_digits(args.a, idx)),
    }
    if args.a >= 1:
        info["in_S"] = bool(args.a % idx.q) and rec.leader != args.a
        if not idx.odd:
            info["in_H"] = C.in_H(args.a, idx)
        label = _class_label(args.a, idx)
        if label:
            info["class"] = label
    _emit_record(info, args.format, out)
    return EXIT_OK


def cmd_genpoly(args, out) -> int:
    fs = build_field(args.q, args.m)
    g = generator_poly(args.delta, args.b, fs)
    k = fs.n - degree(g)
    expected = F.bch_parameters(args.q, args.m, args.delta, args.b).dimension
    rec = {"q": args.q, "m": args.m, "delta": args.delta, "b": args.b, "n": fs.n,
           "modulus": serialize_poly(fs.ext_modulus), "degree": degree(g), "k": k,
           "coefficients": serialize_poly(g)}
    if args.format == "json":
        out.write(json.dumps(rec) + "\n")
    else:
        for key, val in rec.items():
            out.write(f"{key}: {val}\n")
        out.write(f"g(x) = {poly_str(g)}\n")
    if k != expected:
        sys.stderr.write(f"dimension mismatch: degree gives k={k}, formulas give {expected}\n")
        return EXIT_MISMATCH
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bchdim", description="Parameters of primitive BCH codes.")
    sub = parser.add_subparsers(dest="command", required=True)

    def field_args(p):
        p.add_argument("--q", type=int, required=True, help="alphabet size")
        p.add_argument("--m", type=int, required=True, help="extension degree")

    p = sub.add_parser("params", help="dimension and Bose distance for one designed distance")
    field_args(p)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--b", type=int, default=1, help="first exponent of the root window")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("table", help="parameter table over a range of designed distances")
    field_args(p)
    p.add_argument("--delta-lo", type=int, default=None)
    p.add_argument("--delta-hi", type=int, default=None)
    p.add_argument("--b", type=int, default=1)
    p.add_argument("--format", choices=sorted(FORMATTERS), default="csv")
    p.add_argument("--no-merge", action="store_true", help="one row per delta")
    p.add_argument("--with-distance", action="store_true", help="search for the minimum distance")
    p.add_argument("--budget", type=int, default=FULL_ENUMERATION_CAP, help="codewords the search may try")
    p.add_argument("--use-bch-bound", action="store_true",
                   help="let the search stop at a codeword of weight d_B")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="compare closed forms with brute force")
    field_args(p)
    p.add_argument("--level", choices=sorted(LEVELS), default="all")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("coset", help="inspect one cyclotomic coset")
    field_args(p)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_coset)

    p = sub.add_parser("genpoly", help="generator polynomial over GF(q)")
    field_args(p)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--b", type=int, default=1)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_genpoly)
    return parser


def main(argv: Optional[List[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (DomainError, OverflowError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


def run(argv: List[str]) -> tuple:
    """Run the CLI in-process and return (exit code, captured stdout)."""
    buf = io.StringIO()
    code = main(argv, buf)
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
