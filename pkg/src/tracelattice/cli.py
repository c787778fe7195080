"""Command-line interface: ``tracelattice <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys

from .cyclotomic import Involution, gram_trace_form
from .discgroup import crosscheck_row, ramified_pairs
from .lattice import GramLattice, disc_group, is_even, is_positive_definite
from .quadratic import QuadField, quad_gram
from .roots import EnumerationBudgetExceeded, witt_decompose
from .theorems import check_bk, json_int, sweep


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def cmd_gram(args) -> int:
    theta = Involution.parse(args.theta)
    if args.m is not None:
        L = gram_trace_form(args.m, theta)
    else:
        L = quad_gram(QuadField(args.quad_c), theta)
    _emit(L.to_json())
    return 0


def classify_lattice(L: GramLattice) -> dict:
    dec = witt_decompose(L)
    return {
        "content": L.content,
        "disc": json_int(L.discriminant),
        "invariant_factors": [json_int(s) for s in disc_group(L).invariant_factors],
        "even": is_even(L),
        "positive_definite": is_positive_definite(L),
        "decomposition": "not_root" if dec is None else dec.to_json(),
    }


def cmd_classify(args) -> int:
    with open(args.gram) as fh:
        L = GramLattice.from_json(json.load(fh))
    _emit(classify_lattice(L))
    return 0


def cmd_sweep(args) -> int:
    records = sweep(args.max_m, args.max_quad, max_nodes=args.max_nodes)
    payload = [r.to_json() for r in records]
    with open(args.out, "w") as fh:
        json.dump(payload, fh, indent=2)
    bad = [r for r in records if not r.agrees]
    print(f"{len(records)} fields, {len(bad)} disagreements -> {args.out}")
    for r in bad:
        print(f"  DISAGREE {r.spec.label}: {r.agreement} {r.error or ''}")
    return 1 if bad else 0


def cmd_cyclicity(args) -> int:
    print(f"{'m':>4} {'p':>3} {'e':>3} {'f':>3} {'g':>3}  {'p-exponents':<18} {'snf':>5} {'pred':>5}  agree")
    disagreements = 0
    for m, p in ramified_pairs(args.max_m):
        row = crosscheck_row(m, p)
        disagreements += not row.agree
        exps = ",".join(map(str, row.exponents))
        print(
            f"{m:>4} {p:>3} {row.e:>3} {row.f:>3} {row.g:>3}  {exps:<18} "
            f"{str(row.snf_cyclic):>5} {str(row.predicted):>5}  {'yes' if row.agree else 'NO'}"
        )
    print(f"disagreements: {disagreements}")
    return 1 if disagreements else 0


def cmd_bk_check(args) -> int:
    print(f"{'m':>4}  {'max |b_K - Gram|':>18}  ok")
    failures = 0
    for m in range(1, args.max_m + 1):
        dev = check_bk(m)
        ok = dev <= args.tol
        failures += not ok
        print(f"{m:>4}  {dev:>18.3e}  {'yes' if ok else 'NO'}")
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tracelattice", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gram", help="print a trace-form Gram matrix as JSON")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--m", type=int, help="cyclotomic conductor")
    which.add_argument("--quad-c", type=int, help="squarefree c for Q(sqrt c)")
    p.add_argument("--theta", choices=["id", "conj"], required=True)
    p.set_defaults(func=cmd_gram)

    p = sub.add_parser("classify", help="invariants and root decomposition of a Gram JSON file")
    p.add_argument("--gram", required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("sweep", help="verify predictions over both field families")
    p.add_argument("--max-m", type=int, required=True)
    p.add_argument("--max-quad", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--max-nodes", type=int, default=5_000_000)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("cyclicity", help="p-primary cyclicity: SNF vs ramification")
    p.add_argument("--max-m", type=int, required=True)
    p.set_defaults(func=cmd_cyclicity)

    p = sub.add_parser("bk-check", help="embedding form vs exact trace form")
    p.add_argument("--max-m", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-6)
    p.set_defaults(func=cmd_bk_check)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, EnumerationBudgetExceeded) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
