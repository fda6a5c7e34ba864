"""Command line front end.

    necklace-bv bracket "a a" "~a ~a"
    necklace-bv cobracket "a a ~a ~a" --p 1 --hbar 1
    necklace-bv bvdelta "(a a)(~a ~a)"
    necklace-bv phi "a ~a" --p 1 --hbar 1
    necklace-bv verify all --json report.json

Exit status: 0 when every check passes, 1 when an identity fails, 2 for
configuration and parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .necklace import NecklaceSum, bracket, cobracket
from .quiver import QuiverError, a2, double, format_quiver, jordan, parse_quiver, two_loop
from .symbv import bv_delta
from .syntax import (ParseError, format_bv_element, format_necklace_sum, format_polynomial,
                     format_tensor, parse_bv_element, parse_necklace_sum)
from .verify import SUITES, ConfigError, Setup, run_suite

BUILTIN_QUIVERS = {"jordan": jordan, "a2": a2, "two-loop": two_loop}

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--quiver", default="jordan",
                        help="quiver file, or one of: " + ", ".join(BUILTIN_QUIVERS))
    common.add_argument("--p", type=int, choices=(0, 1), default=0)
    common.add_argument("--hbar", type=_fraction, default=Fraction(1, 2))
    common.add_argument("--dims", default=None,
                        help="per-vertex dimensions, e.g. v=1|1,w=2|2 (n means n|0)")
    common.add_argument("--iota", default="default",
                        help="'default' or a JSON file {vertex: [[rationals]]}")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=200)
    common.add_argument("--max-len", type=int, default=6)
    common.add_argument("--json", metavar="OUT", default=None,
                        help="write a JSON report to OUT ('-' for stdout)")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="necklace-bv", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("bracket", parents=[common], help="necklace bracket of two sums")
    p.add_argument("x")
    p.add_argument("y")
    p = sub.add_parser("cobracket", parents=[common], help="necklace cobracket")
    p.add_argument("x")
    p = sub.add_parser("bvdelta", parents=[common], help="the BV operator Delta_hbar")
    p.add_argument("e")
    p = sub.add_parser("phi", parents=[common], help="trace map to polynomial functions")
    p.add_argument("x")
    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("suite", choices=("all",) + SUITES)
    return parser


def load_quiver(arg: str):
    if arg in BUILTIN_QUIVERS and not Path(arg).exists():
        return BUILTIN_QUIVERS[arg]()
    try:
        text = Path(arg).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read quiver file {arg!r}: {exc.strerror}") from None
    return parse_quiver(text)


def parse_dims(text: str | None, quiver) -> tuple:
    dims = {v: (1, 1) for v in quiver.vertices}
    if not text:
        return tuple(dims[v] for v in quiver.vertices)
    for item in text.split(","):
        name, sep, val = item.partition("=")
        name = name.strip()
        if not sep or name not in dims:
            raise ConfigError(f"bad dimension entry {item!r}")
        n, bar, m = val.partition("|")
        try:
            dims[name] = (int(n), int(m) if bar else 0)
        except ValueError:
            raise ConfigError(f"bad dimension entry {item!r}") from None
        if min(dims[name]) < 0:
            raise ConfigError(f"bad dimension entry {item!r}")
    return tuple(dims[v] for v in quiver.vertices)


def load_iota(arg: str, quiver):
    if arg == "default":
        return None
    try:
        data = json.loads(Path(arg).read_text())
    except OSError as exc:
        raise ConfigError(f"cannot read iota file {arg!r}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"iota file is not valid JSON: {exc}") from None
    if not isinstance(data, dict) or set(data) != set(quiver.vertices):
        raise ConfigError("iota file must map every vertex to a matrix")
    try:
        return [[[Fraction(str(x)) for x in row] for row in data[v]] for v in quiver.vertices]
    except (TypeError, ValueError, ZeroDivisionError):
        raise ConfigError("iota entries must be rationals") from None


def make_setup(args) -> Setup:
    if args.trials < 0 or args.max_len < 0:
        raise ConfigError("trials and max-len must be nonnegative")
    quiver = load_quiver(args.quiver)
    return Setup(quiver, args.p, args.hbar, parse_dims(args.dims, quiver),
                 load_iota(args.iota, quiver), args.max_len)


def config_json(args, setup: Setup) -> dict:
    return {"quiver": format_quiver(setup.quiver), "p": setup.p, "hbar": str(setup.hbar),
            "dims": {v: f"{n}|{m}" for v, (n, m) in zip(setup.quiver.vertices, setup.dims)},
            "iota": args.iota, "seed": args.seed, "trials": args.trials,
            "max_len": args.max_len}


def _check_len(setup: Setup, *sums: NecklaceSum):
    for s in sums:
        for x in s:
            if x.length > setup.max_len:
                raise ConfigError(f"necklace of length {x.length} exceeds max-len {setup.max_len}")


def _emit(args, payload: dict):
    if args.json is None:
        return
    text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if args.json == "-":
        sys.stdout.write(text)
    else:
        Path(args.json).write_text(text)


def run(args) -> int:
    setup = make_setup(args)
    dq = setup.dq
    if args.command == "verify":
        suites = SUITES if args.suite == "all" else (args.suite,)
        reports = []
        # Configuration problems surface before any suite runs.
        if "theorem" in suites:
            setup.rep()
            setup.check_theorem_hypotheses()
        elif any(s != "axioms" for s in suites):
            setup.rep()
        for s in suites:
            reports += run_suite(setup, s, args.trials, args.seed)
        ok = all(r.passed for r in reports)
        if args.json != "-":
            for r in reports:
                print(r.line())
                if r.first_counterexample:
                    print("  " + r.first_counterexample)
            print("PASS" if ok else "FAIL")
        _emit(args, {"config": config_json(args, setup),
                     "suites": [r.to_json() for r in reports], "pass": ok})
        return EXIT_OK if ok else EXIT_FAIL

    if args.command == "bracket":
        x, y = parse_necklace_sum(dq, args.x), parse_necklace_sum(dq, args.y)
        _check_len(setup, x, y)
        result = format_necklace_sum(dq, bracket(dq, x, y))
    elif args.command == "cobracket":
        x = parse_necklace_sum(dq, args.x)
        _check_len(setup, x)
        result = format_tensor(dq, cobracket(dq, x))
    elif args.command == "bvdelta":
        e = parse_bv_element(dq, args.e)
        for mono in e:
            _check_len(setup, NecklaceSum({x: 1 for x in mono}))
        result = format_bv_element(dq, bv_delta(dq, e, setup.hbar))
    else:
        x = parse_necklace_sum(dq, args.x)
        _check_len(setup, x)
        ring, tm = setup.rep()
        result = format_polynomial(ring, tm.phi_sum(x))
    if args.json != "-":
        print(result)
    _emit(args, {"config": config_json(args, setup), "command": args.command,
                 "result": result})
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code else EXIT_OK
    try:
        return run(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
    except (ConfigError, QuiverError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
    return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
