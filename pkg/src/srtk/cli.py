"""Command line interface.

    srtk report  (FILE | --builtin NAME) [--char p] [--ext k] [--seed s] [--seeds k] [--json]
    srtk check   {cm,buchsbaum,2cm,bstar,level} (FILE | --builtin NAME) [...]
    srtk bounds  (FILE | --builtin NAME) [...]
    srtk expand  b n d [--json]

Exit codes: 0 success / check passed, 1 check failed, 2 bad input,
3 no linear system of parameters found over the chosen field.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .complex import ComplexError, load
from .corpus import UnknownBuiltin, builtin, builtin_names
from .enumeration import ExpansionImpossible, HVectorBundle, d_binomial_expansion
from .homology import is_buchsbaum, is_cohen_macaulay, is_two_cm, reduced_betti
from .linalg import make_field
from .reduction import LsopNotFound, is_buchsbaum_star, level_quotient
from .report import analyze, bounds_section, format_text, to_json

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_LSOP = 0, 1, 2, 3


def _default_char() -> int:
    return int(os.environ.get("SRTK_CHAR", 32003))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group(required=True)
    src.add_argument("file", nargs="?", help="facet-list file")
    src.add_argument("--builtin", metavar="NAME", help=f"one of {', '.join(builtin_names())}")
    common.add_argument("--char", type=int, default=None, help="field characteristic (default 32003 or $SRTK_CHAR)")
    common.add_argument("--ext", type=int, default=1,
                        help="extension degree k: reduce over GF(p^k) (homology stays over GF(p))")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--seeds", type=int, default=1, help="number of consecutive seeds to sample")
    common.add_argument("--json", action="store_true")

    parser = argparse.ArgumentParser(prog="srtk", description="Stanley-Reisner socle and face-vector toolkit")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("report", parents=[common], help="full analysis")
    chk = sub.add_parser("check", parents=[common], help="exit 0 iff the property holds")
    chk.add_argument("property", choices=["cm", "buchsbaum", "2cm", "bstar", "level"])
    sub.add_parser("bounds", parents=[common], help="face-vector inequalities only")
    exp = sub.add_parser("expand", help="d-binomial expansion and growth of b")
    exp.add_argument("b", type=int)
    exp.add_argument("n", type=int)
    exp.add_argument("d", type=int)
    exp.add_argument("--json", action="store_true")
    return parser


def _complex(args):
    if args.builtin:
        return builtin(args.builtin), args.builtin
    return load(args.file), args.file


def _check(args, cx, fld, seeds) -> tuple[bool, dict]:
    p = fld.char
    prop = args.property
    if prop == "cm":
        return is_cohen_macaulay(cx, p), {}
    if prop == "buchsbaum":
        return is_buchsbaum(cx, p), {}
    if prop == "2cm":
        return is_two_cm(cx, p), {}
    if prop == "bstar":
        results = [is_buchsbaum_star(cx, fld, s) for s in seeds]
        detail = {"runs": [{"seed": s, "rows": r.rows, "reason": r.reason} for s, r in zip(seeds, results)]}
        return all(results), detail
    # level: socle of the quotient sits in degree d and has dimension beta_{d-1}
    beta_top = reduced_betti(cx, p)[cx.d - 1]
    runs = [level_quotient(cx, fld, s) for s in seeds]
    ok = all(lq.is_level and lq.socle_degree == cx.d and lq.type == beta_top for lq in runs)
    detail = {"runs": [{"seed": s, "dims": list(lq.dims), "socle": {str(k): v for k, v in lq.socle.items()}}
                       for s, lq in zip(seeds, runs)], "expected_type": beta_top}
    return ok, detail


def _expand(args) -> int:
    try:
        exp = d_binomial_expansion(args.b, args.n, args.d)
    except ExpansionImpossible as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    growth = exp.growth()
    if args.json:
        print(json.dumps({"schema": 1, "b": exp.b, "n": exp.n, "d": exp.d, "m_top": exp.m_top,
                          "ms": [list(t) for t in exp.ms], "s": exp.s, "growth": growth}, indent=2))
    else:
        print(f"{exp.b} = {exp}")
        print(f"{exp.b}^<{exp.d}> = {growth}")
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "expand":
        return _expand(args)

    try:
        cx, name = _complex(args)
        fld = make_field(args.char if args.char is not None else _default_char(), args.ext)
    except (ComplexError, UnknownBuiltin, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    seeds = list(range(args.seed, args.seed + max(1, args.seeds)))

    try:
        if args.command == "report":
            rep = analyze(cx, name, fld, seeds)
            print(to_json(rep) if args.json else format_text(rep))
            return EXIT_OK
        if args.command == "bounds":
            bundle = HVectorBundle.of(cx, fld.char)
            out = {"schema": 1, "complex": name, "n": bundle.n, "d": bundle.d,
                   "h_prime": list(bundle.h_prime), "h_double_prime": list(bundle.h_double_prime),
                   **bounds_section(bundle)}
            if args.json:
                print(json.dumps(out, indent=2))
            else:
                print(f"{name}: h'={bundle.h_prime} h''={bundle.h_double_prime}")
                for key in ("bstar", "soderberg", "h_prime_macaulay", "h_double_prime_reversed_macaulay"):
                    for r in out[key]:
                        print(f"  {key + ':' + r['check']:40s} j={r['j']:>2}  {r['lhs']} {r['relation']} {r['rhs']}  "
                              f"{'ok' if r['ok'] else 'FAIL'}")
            return EXIT_OK if out["ok"] else EXIT_FAIL
        ok, detail = _check(args, cx, fld, seeds)
    except LsopNotFound as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LSOP

    if args.json:
        print(json.dumps({"schema": 1, "complex": name, "property": args.property, "holds": ok, **detail},
                         indent=2))
    else:
        print(f"{name}: {args.property} {'holds' if ok else 'fails'} over {fld!r}")
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
