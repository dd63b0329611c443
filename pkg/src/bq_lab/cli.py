"""bq-lab command line: family generators, verification, Fermat, search.

Exit status: 0 ok, 1 domain error, 2 identity/verification failure,
64 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import List, Optional

from . import isosceles, scalene
from .fermat import FermatError, Quartic, fermat_iterate, fermat_root_const, fermat_root_leading
from .identities import SECTION_ALIASES, SUITES, run_suite
from .numerics import rat_str, rational_square_root, to_rational
from .quad import NotConstructibleError, PairRecord, QuadSides, equal_pair_check, metrics, scale_to_brahmagupta
from .search import SearchConfig, cross_check_family, default_shards, enumerate_rows, find_equal_pairs, write_csv

EXIT_OK, EXIT_DOMAIN, EXIT_VERIFY, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _rational(text: str) -> Fraction:
    try:
        return to_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _sides(text: str) -> List[Fraction]:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("expected four comma-separated sides")
    return [_rational(p) for p in parts]


def _quartic(text: str) -> Quartic:
    try:
        return Quartic.parse(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="bq-lab", description="Brahmagupta quadrilaterals with equal perimeters and areas.")
    sub = ap.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    fa = sub.add_parser("family-a", help="pair with two equal sides each, from (r1, r2)")
    fa.add_argument("--r1", type=_rational, required=True)
    fa.add_argument("--r2", type=_rational, required=True)
    fa.add_argument("--trapezium", action="store_true", help="emit the trapezium reordering")
    fa.add_argument("--seeds", type=int, default=0, help="also list this many further Fermat seeds")

    fb = sub.add_parser("family-b", help="pair with all sides unequal, from t")
    fb.add_argument("--t", type=_rational, required=True)

    vf = sub.add_parser("verify", help="metrics of a quadruple, or a pair check")
    vf.add_argument("--sides", type=_sides, required=True)
    vf.add_argument("--other", type=_sides, help="second quadruple for an equal-pair check")

    fe = sub.add_parser("fermat", help="rational z making a quartic a square")
    fe.add_argument("--quartic", type=_quartic, required=True,
                    help='"c0,c1,c2,c3,c4" or a polynomial in z')
    fe.add_argument("--anchor", choices=("const", "leading"), default="const")
    fe.add_argument("--iterations", type=int, default=0,
                    help="if positive, iterate and return up to this many solutions")

    se = sub.add_parser("search", help="brute-force enumeration (CSV), or equal pairs (JSON)")
    se.add_argument("--max-perimeter", type=int, required=True)
    se.add_argument("--any-area", action="store_true", help="do not require integer area")
    se.add_argument("--square-diagonals", action="store_true")
    se.add_argument("--shards", type=int, default=None)
    se.add_argument("--pairs", action="store_true", help="emit equal pairs as JSON records")

    idn = sub.add_parser("identities", help="run a symbolic identity suite")
    idn.add_argument("--section", required=True, choices=sorted(SUITES) + sorted(SECTION_ALIASES))

    xc = sub.add_parser("cross-check", help="replay checks on a PairRecord JSON file ('-' for stdin)")
    xc.add_argument("path")
    return ap


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _pair_json(rec: PairRecord) -> dict:
    out = rec.to_json()
    if rec.constructible:
        out["check"] = rec.check().to_json()
        certs = {}
        for name, q in zip(("a", "b"), rec.quads):
            cert = scale_to_brahmagupta(q)
            certs[name] = None if cert is None else cert.to_json()
        out["certificates"] = certs
    return out


def _cmd_family_a(args) -> int:
    ratio = args.r1 / args.r2
    if ratio <= 0:
        raise ValueError("r1/r2 must be positive")
    p = isosceles.IsoParams.from_ratio(ratio)
    rec = isosceles.trapezium_variant(p) if args.trapezium else isosceles.build_pair(p)
    out = _pair_json(rec)
    if args.seeds:
        out["seeds"] = [{"q1": rat_str(s.q1), "q2": rat_str(s.q2)}
                        for s in isosceles.extended_seeds(p, args.seeds)]
    _emit(out)
    return EXIT_OK


def _cmd_family_b(args) -> int:
    rec = scalene.build_pair(args.t)
    _emit(_pair_json(rec))
    return EXIT_OK


def _cmd_verify(args) -> int:
    q = QuadSides.of(args.sides)
    if args.other is None:
        m = metrics(q)
        out = m.to_json()
        cert = scale_to_brahmagupta(q)
        out["certificate"] = None if cert is None else cert.to_json()
        _emit(out)
        return EXIT_OK
    chk = equal_pair_check(q, QuadSides.of(args.other))
    out = chk.to_json()
    out["ok"] = chk.ok
    _emit(out)
    return EXIT_OK if chk.ok else EXIT_VERIFY


def _cmd_fermat(args) -> int:
    f: Quartic = args.quartic
    out = {"quartic": [rat_str(c) for c in f.coeffs], "anchor": args.anchor}
    if args.iterations > 0:
        run = fermat_iterate(f, args.iterations, anchors=(args.anchor,))
        zs = run.solutions
        out.update(stalled=run.stalled, identically_square=run.identically_square)
    else:
        fn = fermat_root_const if args.anchor == "const" else fermat_root_leading
        zs = [fn(f)]
    out["solutions"] = [
        {"z": rat_str(z), "value": rat_str(f(z)), "witness": rat_str(rational_square_root(f(z)))}
        for z in zs
    ]
    _emit(out)
    return EXIT_OK


def _cmd_search(args) -> int:
    cfg = SearchConfig(
        max_perimeter=args.max_perimeter,
        require_integer_area=not args.any_area,
        require_square_diagonals=args.square_diagonals,
        worker_shards=args.shards if args.shards is not None else default_shards(),
    )
    if args.pairs:
        _emit([p.to_json() for p in find_equal_pairs(cfg)])
    else:
        write_csv(enumerate_rows(cfg), sys.stdout)
    return EXIT_OK


def _cmd_identities(args) -> int:
    results = run_suite(args.section)
    for name, ok in results:
        print(f"{'PASS' if ok else 'FAIL'} {name}")
    return EXIT_OK if all(ok for _, ok in results) else EXIT_VERIFY


def _cmd_cross_check(args) -> int:
    text = sys.stdin.read() if args.path == "-" else open(args.path).read()
    data = json.loads(text)
    records = data if isinstance(data, list) else [data]
    status = EXIT_OK
    for rec in records:
        rep = cross_check_family(PairRecord.from_json(rec))
        _emit({"ok": rep.ok, "failures": rep.failures, "details": rep.details})
        if not rep.ok:
            status = EXIT_VERIFY
    return status


COMMANDS = {
    "family-a": _cmd_family_a,
    "family-b": _cmd_family_b,
    "verify": _cmd_verify,
    "fermat": _cmd_fermat,
    "search": _cmd_search,
    "identities": _cmd_identities,
    "cross-check": _cmd_cross_check,
}


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except (NotConstructibleError, FermatError, ValueError, ZeroDivisionError) as exc:
        print(f"bq-lab: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
