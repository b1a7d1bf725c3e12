"""Command-line front end: ``altnf <command> --n N ...``.

Exit codes: 0 success or verification passed, 1 verification failed,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import carmichael, census, derivations, normal_form, presentation
from .errors import AltnfError
from .perm import format_perm, parse_perm, three_cycle
from .report import VerificationReport
from .words import CARMICHAEL, LOCAL, evaluate, format_word, parse_word

CHECKS = ("relations", "bijectivity", "theorem2", "collisions", "carmichael",
          "stationarity", "solutions")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parse_range(text):
    try:
        a, b = text.split("..")
        return int(a), int(b)
    except ValueError:
        raise UsageError(f"--range expects a..b, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="altnf", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def command(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--n", type=int, required=True, help="degree of A_n")
        p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    command("normalize", "rewrite an x-word into normal form").add_argument("word")
    command("encode", "normal form of a permutation").add_argument("perm")
    command("evaluate", "evaluate an x- or v-word").add_argument("word")
    command("rank", "rank of a normal-form tuple").add_argument("tuple")
    command("unrank", "normal-form tuple of a rank").add_argument("rank", type=int)
    p = command("enumerate", "list every element in rank order")
    p.add_argument("--range", dest="rank_range", help="half-open rank range a..b")
    p.add_argument("--count-only", action="store_true")
    p = command("convert", "rewrite a word over the other generating set")
    p.add_argument("--to", choices=("carmichael", "local"), required=True)
    p.add_argument("word")
    p = command("verify", "run verification checks")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--check", choices=CHECKS)
    group.add_argument("--all", action="store_true")
    p.add_argument("--budget", type=int, default=census.DEFAULT_BUDGET,
                   help="search-node budget for the solutions census")
    return parser


def _emit(args, out, fields):
    """Print ``fields`` as ``key: value`` lines or as one JSON object."""
    if args.format == "json":
        print(json.dumps(fields), file=out)
    else:
        for key, value in fields.items():
            print(f"{key}: {value}", file=out)


def _element_fields(t, p):
    return {
        "tuple": str(t),
        "word": format_word(normal_form.nf_to_word(t)),
        "perm": format_perm(p, cycle=True),
        "one_line": format_perm(p),
        "rank": normal_form.rank(t),
    }


def run_check(name: str, n: int, budget: int = census.DEFAULT_BUDGET) -> VerificationReport:
    if name == "relations":
        std = [three_cycle(i, n) for i in range(1, n - 1)]
        return presentation.check_assignment(std, n)
    if name == "bijectivity":
        return normal_form.check_bijectivity(n)
    if name == "theorem2":
        return derivations.verify_scripts(["theorem2"], n, "theorem2")
    if name == "collisions":
        return derivations.verify_scripts(
            ["xtop_square", "sandwich", "collision", "n4_special", "n4_base"], n, "collisions")
    if name == "carmichael":
        return carmichael.check_carmichael(n)
    if name == "stationarity":
        return presentation.check_stationarity(n)
    if name == "solutions":
        return census.census_solutions(n, budget)
    raise UsageError(f"unknown check {name!r}")


def checks_for_all(n: int) -> list[str]:
    names = ["relations"]
    if n <= 8:
        names.append("bijectivity")
    names += ["theorem2", "collisions"]
    if n >= 4:
        names.append("carmichael")
    if n >= 5:
        names.append("stationarity")
    if 5 <= n <= 7:
        names.append("solutions")
    return names


def _print_report(report, args, out):
    if args.format == "json":
        print(report.to_json(), file=out)
        return
    status = "PASS" if report.passed else "FAIL"
    print(f"{report.check} n={report.n}: {status}", file=out)
    for key, value in report.stats.items():
        print(f"  {key}: {value}", file=out)
    if report.counterexample is not None:
        print(f"  counterexample: {json.dumps(report.counterexample)}", file=out)


def _verify(args, out):
    if args.all:
        reports = [run_check(name, args.n, args.budget) for name in checks_for_all(args.n)]
        passed = all(r.passed for r in reports)
        if args.format == "json":
            print(json.dumps({
                "check": "all", "n": args.n, "passed": passed,
                "stats": {"checks": len(reports), "failed": sum(not r.passed for r in reports)},
                "reports": [r.to_dict() for r in reports],
            }), file=out)
        else:
            for r in reports:
                _print_report(r, args, out)
        return 0 if passed else 1
    report = run_check(args.check, args.n, args.budget)
    _print_report(report, args, out)
    return 0 if report.passed else 1


def _enumerate(args, out):
    start, stop = (0, None) if args.rank_range is None else _parse_range(args.rank_range)
    total = normal_form.order(args.n)
    if args.count_only:
        stop = total if stop is None else min(stop, total)
        count = max(0, stop - max(start, 0))
        print(json.dumps({"count": count}) if args.format == "json" else count, file=out)
        return 0
    r = max(start, 0)
    for t, p in normal_form.enumerate_nf(args.n, start, stop):
        if args.format == "json":
            print(json.dumps({"rank": r, "tuple": str(t), "perm": format_perm(p)}), file=out)
        else:
            print(f"{r}\t{t}\t{format_perm(p)}", file=out)
        r += 1
    return 0


def dispatch(args, out) -> int:
    n = args.n
    if n < 3:
        raise UsageError(f"--n must be >= 3, got {n}")
    cmd = args.command
    if cmd == "normalize":
        w = parse_word(args.word)
        t = normal_form.normalize_word(w, n)
        _emit(args, out, _element_fields(t, normal_form.nf_evaluate(t)))
    elif cmd == "encode":
        p = parse_perm(args.perm, n)
        _emit(args, out, _element_fields(normal_form.encode_perm(p), p))
    elif cmd == "evaluate":
        p = evaluate(parse_word(args.word), n)
        _emit(args, out, {"perm": format_perm(p, cycle=True), "one_line": format_perm(p)})
    elif cmd == "rank":
        t = normal_form.parse_tuple(args.tuple, n)
        _emit(args, out, {"rank": normal_form.rank(t)})
    elif cmd == "unrank":
        _emit(args, out, {"tuple": str(normal_form.unrank(n, args.rank))})
    elif cmd == "enumerate":
        return _enumerate(args, out)
    elif cmd == "convert":
        w = parse_word(args.word)
        if args.to == "carmichael":
            if w.alphabet == CARMICHAEL:
                raise UsageError("word is already over the v generators")
            result = carmichael.x_to_v(w, n)
        else:
            if w.alphabet == LOCAL:
                raise UsageError("word is already over the x generators")
            result = carmichael.v_to_x(w, n)
        _emit(args, out, {"word": format_word(result)})
    elif cmd == "verify":
        return _verify(args, out)
    return 0


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        return dispatch(args, out)
    except UsageError as exc:
        print(f"altnf: usage error: {exc}", file=err)
        return 2
    except (AltnfError, ValueError) as exc:
        print(f"altnf: error: {exc}", file=err)
        return 2


run = main


if __name__ == "__main__":
    sys.exit(main())
