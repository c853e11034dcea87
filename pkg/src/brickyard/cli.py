"""
Command line interface.

Subcommands: bricks, smc, check, mutate, complete, render, verify.  JSON
goes to stdout, human diagnostics to stderr.  Exit codes: 0 success, 1 an
asserted property or suite failed, 2 bad input.  The environment variable
BRICKYARD_CHAR overrides the oracle field characteristic (default 101).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import jsonio, pairs as engine, render, strings, suites
from .arcs import GREEN, RED
from .jsonio import FormatError
from .linalg import validate_char
from .permutations import validate_word
from .quiver import DEFAULT_CHAR
from .strings import sigma_inverse
from .suites import SuiteError
from .universe import get_arc_universe

EXIT_OK = 0
EXIT_PROPERTY = 1
EXIT_INPUT = 2


class InputError(ValueError):
    pass


def _char_from_env() -> int:
    raw = os.environ.get("BRICKYARD_CHAR")
    if raw is None:
        return DEFAULT_CHAR
    try:
        return validate_char(int(raw))
    except ValueError as exc:
        raise InputError(f"BRICKYARD_CHAR: {exc}") from exc


def _emit(payload) -> None:
    sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _parse_perm(text: str) -> tuple[int, ...]:
    parts = text.split(",") if "," in text else list(text)
    try:
        word = tuple(int(x) for x in parts)
        return validate_word(word)
    except ValueError as exc:
        raise InputError(f"bad permutation {text!r}: {exc}") from exc


def cmd_bricks(args) -> int:
    if not 1 <= args.n <= 8:
        raise InputError("--n must lie in [1, 8]")
    bricks = strings.enumerate_bricks(args.n)
    if args.format == "table":
        for b in bricks:
            arc = sigma_inverse(b, GREEN)
            print(f"{b.layers():>12}  support={list(b.support)}  arc={arc.bottom}-{arc.top} {''.join(arc.sides) or '-'}")
        print(f"total: {len(bricks)}")
    else:
        _emit(
            {
                "n": args.n,
                "count": len(bricks),
                "bricks": [
                    {
                        "brick": jsonio.brick_to_json(b),
                        "arc": jsonio.arc_to_json(sigma_inverse(b, GREEN)),
                        "name": b.layers(),
                    }
                    for b in bricks
                ],
            }
        )
    return EXIT_OK


def cmd_smc(args) -> int:
    if args.perm is not None:
        word = _parse_perm(args.perm)
        _emit(jsonio.pair_to_json(engine.smc_from_permutation(word)))
        return EXIT_OK
    if args.n is None or not args.all:
        raise InputError("need either --perm W or --n K --all")
    if not 1 <= args.n <= 6:
        raise InputError("--n must lie in [1, 6] with --all")
    universe = get_arc_universe(args.n)
    for X in engine.all_smcs(args.n, universe):
        _emit(jsonio.pair_to_json(X))
    return EXIT_OK


def _check_report(pair: engine.SemibrickPair) -> dict:
    ok, violation = engine.is_semibrick_pair(pair.universe, pair.D, pair.U)
    report: dict = {"semibrick_pair": ok}
    if not ok:
        report["violation"] = violation.as_dict()
        report["pairwise_completable"] = None
        report["completable"] = None
        return report
    pairwise, obstruction = engine.is_pairwise_completable(pair)
    report["pairwise_completable"] = pairwise
    if obstruction:
        report["obstruction"] = list(obstruction)
    result = engine.is_completable(pair, want_witness=True)
    report["completable"] = result.completable
    report.update(result.as_dict())
    report.pop("explored", None)
    return report


def cmd_check(args) -> int:
    pair = jsonio.pair_from_json(_load_json(args.input), char=_char_from_env())
    report = _check_report(pair)
    _emit(report)
    if args.assert_property:
        key = {"semibrick-pair": "semibrick_pair", "pairwise": "pairwise_completable",
               "completable": "completable"}[args.assert_property]
        if report.get(key) is not True:
            print(f"assertion failed: {args.assert_property}", file=sys.stderr)
            return EXIT_PROPERTY
    return EXIT_OK


def cmd_mutate(args) -> int:
    pair = jsonio.pair_from_json(_load_json(args.input), char=_char_from_env())
    if (args.left is None) == (args.right is None):
        raise InputError("exactly one of --left I or --right J is required")
    try:
        if args.left is not None:
            if not 0 <= args.left < len(pair.D):
                raise InputError(f"--left index out of range [0, {len(pair.D)})")
            mutated = engine.mutate_left(pair, pair.D[args.left])
        else:
            if not 0 <= args.right < len(pair.U):
                raise InputError(f"--right index out of range [0, {len(pair.U)})")
            mutated = engine.mutate_right(pair, pair.U[args.right])
    except engine.MutationError as exc:
        print(f"mutation failed: {exc}", file=sys.stderr)
        return EXIT_PROPERTY
    _emit(jsonio.pair_to_json(mutated))
    return EXIT_OK


def cmd_complete(args) -> int:
    pair = jsonio.pair_from_json(_load_json(args.input), char=_char_from_env())
    try:
        if args.side == "full":
            word = engine.complete_full_rank(pair)
            _emit({"permutation": list(word)})
        elif args.side == "u":
            Dp = engine.completion_of_U(pair.universe, pair.U)
            _emit(jsonio.pair_to_json(engine.SemibrickPair(pair.universe, Dp, pair.U)))
        else:
            Up = engine.completion_of_D(pair.universe, pair.D)
            _emit(jsonio.pair_to_json(engine.SemibrickPair(pair.universe, pair.D, Up)))
    except (engine.NotFullRankError, ValueError) as exc:
        print(f"completion failed: {exc}", file=sys.stderr)
        return EXIT_PROPERTY
    return EXIT_OK


def cmd_render(args) -> int:
    nodes, arcs = jsonio.diagram_from_json(_load_json(args.input))
    if args.format == "ascii":
        print(render.render_ascii(nodes, arcs))
    else:
        print(render.render_tikz(nodes, arcs))
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        report = suites.verify_suite(args.suite, n=args.n, seed=args.seed)
    except SuiteError as exc:
        raise InputError(str(exc)) from exc
    _emit(report)
    return EXIT_OK if report["pass"] else EXIT_PROPERTY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="brickyard", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bricks", help="list the bricks of RA_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.set_defaults(run=cmd_bricks)

    p = sub.add_parser("smc", help="simple minded collections from permutations")
    p.add_argument("--perm", help="one-line permutation, e.g. 53412 or 5,3,4,1,2")
    p.add_argument("--n", type=int)
    p.add_argument("--all", action="store_true", help="stream all (n+1)! collections")
    p.set_defaults(run=cmd_smc)

    p = sub.add_parser("check", help="semibrick pair / completability report")
    p.add_argument("--input", required=True, help="pair JSON file")
    p.add_argument(
        "--assert",
        dest="assert_property",
        choices=("semibrick-pair", "pairwise", "completable"),
        help="exit 1 unless the property holds",
    )
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("mutate", help="left or right mutation at an index")
    p.add_argument("--input", required=True)
    p.add_argument("--left", type=int, help="index into D")
    p.add_argument("--right", type=int, help="index into U")
    p.set_defaults(run=cmd_mutate)

    p = sub.add_parser("complete", help="complete a pair (full rank or one side)")
    p.add_argument("--input", required=True)
    p.add_argument("--side", choices=("full", "u", "d"), default="full")
    p.set_defaults(run=cmd_complete)

    p = sub.add_parser("render", help="render a diagram JSON file")
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=("ascii", "tikz"), default="ascii")
    p.set_defaults(run=cmd_render)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(run=cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except (InputError, FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
