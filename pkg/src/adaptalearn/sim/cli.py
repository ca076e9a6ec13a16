"""adaptalearn-sim command line.

Subcommands:
    replay <script>        replay a trace script file ('-' for stdin)
    verify-table1          run the embedded golden dimension-update scripts
    gen --seed S --events N   print a deterministic pseudo-random script

Exit codes: 0 pass, 1 expectation failure, 2 usage/parse error.
"""

from __future__ import annotations

import argparse
import sys

from .replay import DEFAULT_PERIOD, gen_trace, replay, verify_table1
from .script import ScriptError, parse_script, serialize_script

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="adaptalearn-sim",
        description="Deterministic behavior-trace replay harness.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_replay = sub.add_parser("replay", help="replay a trace script")
    p_replay.add_argument("script", help="script file path, or '-' for stdin")
    p_replay.add_argument("--period", type=float, default=DEFAULT_PERIOD,
                          help="monitor ticker period in simulated seconds")

    p_verify = sub.add_parser("verify-table1",
                              help="replay the golden dimension-update rows")
    p_verify.add_argument("--period", type=float, default=DEFAULT_PERIOD)

    p_gen = sub.add_parser("gen", help="generate a deterministic script")
    p_gen.add_argument("--seed", type=int, required=True)
    p_gen.add_argument("--events", type=int, required=True)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)

    if args.command == "gen":
        if args.events < 0:
            print("--events must be >= 0", file=sys.stderr)
            return EXIT_USAGE
        sys.stdout.write(serialize_script(gen_trace(args.seed, args.events)))
        return EXIT_OK

    if args.command == "verify-table1":
        reports = verify_table1(period=args.period)
        for report in reports:
            sys.stdout.write(report.render())
        passed = sum(1 for r in reports if r.passed)
        print(f"table1: {passed}/{len(reports)} rows pass")
        return EXIT_OK if passed == len(reports) else EXIT_FAILED

    # replay
    try:
        text = (sys.stdin.read() if args.script == "-"
                else open(args.script, encoding="utf-8").read())
    except OSError as exc:
        print(f"cannot read script: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        script = parse_script(text)
    except ScriptError as exc:
        print(f"script error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = replay(script, period=args.period)
    sys.stdout.write(report.render())
    return EXIT_OK if report.passed else EXIT_FAILED


if __name__ == "__main__":
    raise SystemExit(main())
