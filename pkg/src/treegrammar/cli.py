"""Command-line front end.

    treegrammar trees  --edges 3 [--tip-augmented] [--format text|json|csv]
    treegrammar poly   --family g6 --n 4 [--subst x11=x ...]
    treegrammar derive --grammar soy|FILE --seed d --n 3
    treegrammar series --family narayana --order 6
    treegrammar gamma  --family narayana --n 7
    treegrammar roots  --family narayana --n 6 [--subst ...]
    treegrammar verify --suite all --max-n 9 [--jobs 4]

Exit status: 0 on success, 1 if any verification check fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .catalog import FamilyId, family_poly, gf_series
from .grammar import BUILTIN, GrammarParseError, UnknownVariable, load_grammar
from .poly import LaurentPoly, PolyParseError, parse_poly
from .roots import NotSymmetric, ZeroPolynomial, gamma_vector, root_report
from .trees import ALL, TIP_AUGMENTED, enumerate_trees, stats_csv, classify
from .verify import SUITES, run_suite

FAMILY_NAMES = [f.value for f in FamilyId]


class UsageError(Exception):
    pass


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="treegrammar", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp, choices=("text", "json")):
        sp.add_argument("--format", choices=choices, default="text")

    def subst(sp):
        sp.add_argument("--subst", action="append", default=[], metavar="VAR=EXPR",
                        help="substitute a variable; repeatable or comma separated")

    sp = sub.add_parser("trees", help="enumerate plane trees with their statistics")
    sp.add_argument("--edges", type=_nonneg, required=True)
    sp.add_argument("--tip-augmented", action="store_true")
    fmt(sp, ("text", "json", "csv"))

    sp = sub.add_parser("poly", help="family polynomial at n")
    sp.add_argument("--family", choices=FAMILY_NAMES, required=True)
    sp.add_argument("--n", type=_nonneg, required=True)
    subst(sp)
    fmt(sp)

    sp = sub.add_parser("derive", help="iterate a grammar's formal derivative")
    sp.add_argument("--grammar", required=True, help=f"builtin ({', '.join(BUILTIN)}) or a file")
    sp.add_argument("--seed", required=True)
    sp.add_argument("--n", type=_nonneg, required=True)
    fmt(sp)

    sp = sub.add_parser("series", help="closed-form generating function")
    sp.add_argument("--family", choices=FAMILY_NAMES, required=True)
    sp.add_argument("--order", type=_nonneg, required=True)
    fmt(sp)

    sp = sub.add_parser("gamma", help="gamma vector of a univariate family polynomial")
    sp.add_argument("--family", choices=FAMILY_NAMES, default="narayana")
    sp.add_argument("--n", type=_nonneg, required=True)
    subst(sp)
    fmt(sp)

    sp = sub.add_parser("roots", help="Sturm real-root report")
    sp.add_argument("--family", choices=FAMILY_NAMES, required=True)
    sp.add_argument("--n", type=_nonneg, required=True)
    subst(sp)
    fmt(sp)

    sp = sub.add_parser("verify", help="run verification suites")
    sp.add_argument("--suite", choices=("all",) + SUITES, default="all")
    sp.add_argument("--max-n", type=_nonneg, default=None)
    sp.add_argument("--jobs", type=int, default=1)
    fmt(sp)
    return p


def _parse_subst(items: list[str]) -> dict[str, LaurentPoly]:
    out = {}
    for item in items:
        for part in item.split(","):
            if not part.strip():
                continue
            if "=" not in part:
                raise UsageError(f"bad --subst entry {part!r}; expected VAR=EXPR")
            k, v = part.split("=", 1)
            out[k.strip()] = parse_poly(v)
    return out


# univariate views of the families whose real roots are claimed
_UNIVARIATE = {
    "narayana": {},
    "g2": {"x1": "x", "x2": "1"},
    "m2": {"u": "x", "v": "1"},
}


def _family_value(args) -> LaurentPoly:
    p = family_poly(args.family, args.n)
    sigma = _parse_subst(args.subst)
    if args.command in ("gamma", "roots") and not sigma:
        if args.family not in _UNIVARIATE:
            raise UsageError(f"family {args.family} is multivariate; pass --subst to specialize it")
        sigma = {k: parse_poly(v) for k, v in _UNIVARIATE[args.family].items()}
    return p.substitute(sigma) if sigma else p


def _emit(obj, text: str, fmt_: str, out) -> None:
    if fmt_ == "json":
        out.write(json.dumps(obj, sort_keys=False) + "\n")
    else:
        out.write(text + "\n")


def _cmd_trees(args, out) -> int:
    trees = enumerate_trees(args.edges, TIP_AUGMENTED if args.tip_augmented else ALL)
    if args.format == "csv":
        out.write(stats_csv(trees))
    elif args.format == "json":
        rows = [{"encoding": t.encoding, **classify(t).as_dict()} for t in trees]
        out.write(json.dumps({"edges": args.edges, "trees": rows}) + "\n")
    else:
        for t in trees:
            out.write(f"{args.edges} {t.encoding}\n")
    return 0


def _cmd_poly(args, out) -> int:
    p = _family_value(args)
    _emit(p.to_dict(), p.to_text(), args.format, out)
    return 0


def _cmd_derive(args, out) -> int:
    if args.grammar in BUILTIN:
        g = BUILTIN[args.grammar]
    elif Path(args.grammar).is_file():
        g = load_grammar(args.grammar)
    else:
        raise UsageError(f"{args.grammar!r} is neither a builtin grammar nor a file")
    p = g.derive_n(parse_poly(args.seed), args.n)
    _emit(p.to_dict(), p.to_text(), args.format, out)
    return 0


def _cmd_series(args, out) -> int:
    s = gf_series(args.family, args.order)
    _emit(s.to_dict(), s.to_text(), args.format, out)
    return 0


def _cmd_gamma(args, out) -> int:
    gv = gamma_vector(_family_value(args))
    text = f"shift={gv.shift} m={gv.m} gammas=[{', '.join(str(g) for g in gv.gammas)}]"
    _emit(gv.to_dict(), text, args.format, out)
    return 0


def _cmd_roots(args, out) -> int:
    r = root_report(_family_value(args))
    text = (f"all_real={str(r.all_real).lower()} positive_roots={r.positive_roots} "
            f"distinct_real_roots={r.real_roots} degree={r.degree}")
    _emit(r.to_dict(), text, args.format, out)
    return 0


def _cmd_verify(args, out) -> int:
    reports = run_suite(args.suite, args.max_n, args.jobs)
    if args.format == "json":
        out.write(json.dumps([r.to_dict() for r in reports]) + "\n")
    else:
        for r in reports:
            out.write(r.line() + "\n")
        failed = sum(not r.passed for r in reports)
        out.write(f"{len(reports) - failed}/{len(reports)} checks passed\n")
    return 0 if all(r.passed for r in reports) else 1


COMMANDS = {
    "trees": _cmd_trees,
    "poly": _cmd_poly,
    "derive": _cmd_derive,
    "series": _cmd_series,
    "gamma": _cmd_gamma,
    "roots": _cmd_roots,
    "verify": _cmd_verify,
}


def run(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, PolyParseError, GrammarParseError, UnknownVariable,
            NotSymmetric, ZeroPolynomial, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"treegrammar: error: {msg}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"treegrammar: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
