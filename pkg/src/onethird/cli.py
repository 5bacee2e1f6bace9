"""Command-line interface.

Exit codes: 0 success, 1 verification failure or no fit, 2 domain error,
3 enumeration limit exceeded, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import catalog, engine, guesser, oracle
from .errors import DegenerateHexagon, DomainError, LimitExceeded, NoFit, PoleError
from .exact import format_rational
from .hexagon import FamilyOffsets, HexagonSpec, RhombusPos

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_DOMAIN = 2
EXIT_LIMIT = 3
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _typed(parse):
    def conv(text):
        try:
            return parse(text)
        except (ValueError, DegenerateHexagon) as exc:
            raise argparse.ArgumentTypeError(str(exc)) from None

    conv.__name__ = parse.__qualname__
    return conv


def _rat(q) -> str:
    return format_rational(Fraction(q))


def _emit(args, text_lines: list[str], payload: dict) -> None:
    if args.json:
        report = {
            "command": args.command_echo,
            "inputs": payload.pop("inputs"),
            **payload,
            "elapsed_seconds": f"{time.perf_counter() - args.start:.6f}",
        }
        print(json.dumps(report, indent=2))
    else:
        for line in text_lines:
            print(line)


def cmd_prob(args) -> int:
    p = engine.contains_prob(args.hexagon, args.pos)
    _emit(args, [_rat(p)], {
        "inputs": {"hexagon": str(args.hexagon), "pos": str(args.pos)},
        "probability": _rat(p),
    })
    return EXIT_OK


def cmd_gseq(args) -> int:
    values = [engine.g_value(args.family, n) for n in range(args.n_from, args.n_to + 1)]
    _emit(args, [" ".join(_rat(v) for v in values)], {
        "inputs": {"family": str(args.family), "n_from": args.n_from, "n_to": args.n_to},
        "values": [_rat(v) for v in values],
    })
    return EXIT_OK


def _f_payload(f) -> dict:
    num, den = f.integer_form()
    return {
        "f": str(f),
        "f_num": [_rat(c) for c in num.coeffs] or ["0"],
        "f_den": [_rat(c) for c in den.coeffs],
    }


def cmd_guess(args) -> int:
    res = guesser.guess_family(
        args.family, args.n_from, args.n_to, args.max_drop, args.max_deg, args.surplus
    )
    fp = _f_payload(res.f)
    lines = [
        f"f = {fp['f']}",
        f"numerator coefficients: [{', '.join(fp['f_num'])}]",
        f"denominator coefficients: [{', '.join(fp['f_den'])}]",
        f"dropped: {res.dropped}",
        f"valid_from: {res.valid_from}",
    ]
    _emit(args, lines, {
        "inputs": {
            "family": str(args.family), "n_from": args.n_from, "n_to": args.n_to,
            "max_drop": args.max_drop, "max_deg": args.max_deg, "surplus": args.surplus,
        },
        **fp,
        "dropped": res.dropped,
        "valid_from": res.valid_from,
        "surplus_confirmed": res.surplus_confirmed,
    })
    return EXIT_OK


def _verify(job):
    entry, span = job
    return catalog.verify_entry(entry, span)


def cmd_catalog_verify(args) -> int:
    entries = catalog.builtin_entries()
    if args.family is not None:
        entries = [e for e in entries if e.offsets == args.family]
        if not entries:
            raise UsageError(f"no catalog entry for family {args.family}")
    jobs = [(e, args.n_span) for e in entries]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            reports = list(pool.map(_verify, jobs))
    else:
        reports = [_verify(j) for j in jobs]

    lines, rows = [], []
    for rep in reports:
        e = rep.entry
        bad = [r.n for r in rep.rows if not r.ok]
        verdict = "pass" if rep.passed else f"FAIL at n={','.join(map(str, bad))}"
        lines.append(f"{str(e.offsets):>16}  {e.status.value:<11}  n={e.valid_from}..{e.valid_from + args.n_span - 1}  {verdict}")
        rows.append({
            "offsets": list(e.offsets.as_tuple()),
            "status": e.status.value,
            "passed": rep.passed,
            "checks": [
                {"n": r.n, "expected": _rat(r.expected), "actual": _rat(r.actual), "ok": r.ok}
                for r in rep.rows
            ],
        })
    passed = all(r.passed for r in reports)
    lines.append(f"{sum(r.passed for r in reports)}/{len(reports)} entries pass")
    _emit(args, lines, {
        "inputs": {"n_span": args.n_span, "family": str(args.family) if args.family else None},
        "entries": rows,
        "passed": passed,
    })
    return EXIT_OK if passed else EXIT_FAIL


def cmd_catalog_classify(args) -> int:
    normalized, shift = args.family.normalize_c()
    labels = catalog.classify_single_sum(normalized)
    lines = []
    if shift:
        lines.append(f"normalized to {normalized} (n -> n{shift:+d})")
    if labels:
        lines.extend(str(l) for l in labels)
    else:
        lines.append("no single-sum case")
    _emit(args, lines, {
        "inputs": {"family": str(args.family)},
        "normalized": list(normalized.as_tuple()),
        "shift": shift,
        "cases": [str(l) for l in labels],
    })
    return EXIT_OK


def cmd_catalog_export(args) -> int:
    print(catalog.export_json())
    return EXIT_OK


def cmd_oracle(args) -> int:
    if args.method == "dp":
        total = oracle.dp_count_tilings(args.hexagon)
        hits = oracle.dp_count_containing(args.hexagon, args.pos)
    else:
        rep = oracle.oracle_prob(args.hexagon, args.pos, args.limit)
        total, hits = rep.total, rep.containing
    p = Fraction(hits, total)
    _emit(args, [f"{hits}/{total} = {_rat(p)}"], {
        "inputs": {"hexagon": str(args.hexagon), "pos": str(args.pos), "method": args.method},
        "containing": str(hits),
        "total": str(total),
        "probability": _rat(p),
    })
    return EXIT_OK


def cmd_count(args) -> int:
    total = engine.total_tilings(args.hexagon)
    _emit(args, [str(total)], {"inputs": {"hexagon": str(args.hexagon)}, "total": str(total)})
    return EXIT_OK


def cmd_recurrence(args) -> int:
    rep = engine.check_recurrence_332(args.n_to)
    lines = [f"n=1: sum {_rat(rep.initial_sum)}  conjecture {_rat(rep.initial_conj)}  "
             f"{'agree' if rep.initial_agrees else 'DIFFER'}"]
    for r in rep.rows:
        lines.append(f"n={r.n}: rhs {_rat(r.rhs)}  sum {'ok' if r.sum_ok else 'FAIL'}  "
                     f"conjecture {'ok' if r.conj_ok else 'FAIL'}")
    lines.append("pass" if rep.passed else "FAIL")
    _emit(args, lines, {
        "inputs": {"n_to": args.n_to},
        "initial": {"sum": _rat(rep.initial_sum), "conjecture": _rat(rep.initial_conj),
                    "agree": rep.initial_agrees},
        "steps": [
            {"n": r.n, "rhs": _rat(r.rhs), "sum_ok": r.sum_ok, "conjecture_ok": r.conj_ok}
            for r in rep.rows
        ],
        "passed": rep.passed,
    })
    return EXIT_OK if rep.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--limit", type=int, default=oracle.DEFAULT_LIMIT,
                        help="maximum number of tilings to enumerate (default %(default)s)")

    hexagon = _typed(HexagonSpec.parse)
    pos = _typed(RhombusPos.parse)
    family = _typed(FamilyOffsets.parse)

    parser = _Parser(prog="onethird", description="Exact rhombus-containment probabilities in hexagons.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("prob", parents=[common], help="probability via the triple sum")
    p.add_argument("--hexagon", type=hexagon, required=True, metavar="A,B,C")
    p.add_argument("--pos", type=pos, required=True, metavar="X,Y")
    p.set_defaults(func=cmd_prob)

    p = sub.add_parser("gseq", parents=[common], help="normalised sequence (p - 1/3)/R(n)")
    p.add_argument("--family", type=family, required=True, metavar="a,b,c,x,y")
    p.add_argument("--n-from", type=int, default=1)
    p.add_argument("--n-to", type=int, default=11)
    p.set_defaults(func=cmd_gseq)

    p = sub.add_parser("guess", parents=[common], help="guess the rational function f")
    p.add_argument("--family", type=family, required=True, metavar="a,b,c,x,y")
    p.add_argument("--n-from", type=int, default=1)
    p.add_argument("--n-to", type=int, default=15)
    p.add_argument("--max-drop", type=int, default=2)
    p.add_argument("--max-deg", type=int, default=None)
    p.add_argument("--surplus", type=int, default=guesser.DEFAULT_SURPLUS)
    p.set_defaults(func=cmd_guess)

    p = sub.add_parser("catalog", help="built-in formulas")
    csub = p.add_subparsers(dest="catalog_command", required=True, parser_class=_Parser)
    q = csub.add_parser("verify", parents=[common], help="check every entry against the triple sum")
    q.add_argument("--n-span", type=int, default=5)
    q.add_argument("--family", type=family, default=None, metavar="a,b,c,x,y")
    q.add_argument("--jobs", type=int, default=1)
    q.set_defaults(func=cmd_catalog_verify)
    q = csub.add_parser("classify", parents=[common], help="single-sum cases for a family")
    q.add_argument("--family", type=family, required=True, metavar="a,b,c,x,y")
    q.set_defaults(func=cmd_catalog_classify)
    q = csub.add_parser("export", help="print the catalog as JSON")
    q.set_defaults(func=cmd_catalog_export, json=False)

    p = sub.add_parser("oracle", parents=[common], help="brute-force probability")
    p.add_argument("--hexagon", type=hexagon, required=True, metavar="A,B,C")
    p.add_argument("--pos", type=pos, required=True, metavar="X,Y")
    p.add_argument("--method", choices=["enumerate", "dp"], default="enumerate")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("count", parents=[common], help="total number of tilings")
    p.add_argument("--hexagon", type=hexagon, required=True, metavar="A,B,C")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("recurrence", parents=[common], help="check the single-sum recurrence")
    p.add_argument("--n-to", type=int, default=10)
    p.set_defaults(func=cmd_recurrence)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # --help exits 0, argument errors exit with EXIT_USAGE
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    args.start = time.perf_counter()
    args.command_echo = " ".join(sys.argv[1:] if argv is None else argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"onethird: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, DegenerateHexagon, PoleError) as exc:
        print(f"onethird: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except LimitExceeded as exc:
        print(f"onethird: limit exceeded: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except NoFit as exc:
        print(f"onethird: no fit: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as exc:
        print(f"onethird: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
