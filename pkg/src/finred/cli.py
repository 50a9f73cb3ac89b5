"""``finred`` command line: classify, transform, relation, check, compare."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .constructions import TRANSFORMS
from .notions import classify
from .properties import Config, run_suite
from .stream import ParseError, UpStream, first_difference, format_stream, parse_stream
from .succession import relation_edges

EXIT_OK = 0
EXIT_PROPERTY_FAILURE = 1
EXIT_PARSE_ERROR = 2

__all__ = ["main", "parse_stream", "run"]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE_ERROR)


def _stream_arg(text: Optional[str]) -> UpStream:
    if text is None or text == "-":
        text = sys.stdin.read().strip()
    return parse_stream(text)


def _report_parse_error(err: ParseError) -> int:
    print(f"parse error: {err}", file=sys.stderr)
    print(f"  {err.text}", file=sys.stderr)
    print(f"  {' ' * err.offset}^ expected {err.expected}", file=sys.stderr)
    return EXIT_PARSE_ERROR


def cmd_classify(args) -> int:
    s = _stream_arg(args.stream)
    out = classify(s).to_json(s)
    print(json.dumps(out, sort_keys=False) if args.json else json.dumps(out, indent=2))
    return EXIT_OK


def cmd_transform(args) -> int:
    s = _stream_arg(args.stream)
    t = TRANSFORMS[args.name](s)
    if args.json:
        print(json.dumps({"schema": 1, "name": args.name, "input": format_stream(s),
                          "output": format_stream(t)}))
    else:
        print(format_stream(t))
    return EXIT_OK


def cmd_relation(args) -> int:
    s = _stream_arg(args.stream)
    edges = relation_edges(s, args.limit)
    if args.json:
        print(json.dumps({"schema": 1, "stream": format_stream(s),
                          "edges": [[n, m] for n, m in edges]}))
    else:
        for n, m in edges:
            print(f"{n} -|" if m is None else f"{n} -> {m}")
    return EXIT_OK


def cmd_compare(args) -> int:
    s, t = _stream_arg(args.left), _stream_arg(args.right)
    k = first_difference(s, t)
    if args.json:
        print(json.dumps({"schema": 1, "left": format_stream(s), "right": format_stream(t),
                          "bisimilar": k is None, "position": k}))
    else:
        print("bisimilar" if k is None else f"distinct at position {k}")
    return EXIT_OK


def cmd_check(args) -> int:
    result = run_suite(args.max_prefix, args.max_cycle, Config(max_n=args.max_n, fuel=args.fuel))
    if args.json:
        print(json.dumps({
            "schema": 1,
            "streams": result.streams,
            "properties": {
                name: {"passed": result.passed[name], "failed": sorted(result.failed[name])}
                for name in sorted(result.passed)
            },
            "ok": result.ok,
        }))
    else:
        print(f"{result.streams} canonical streams "
              f"(prefix <= {args.max_prefix}, cycle <= {args.max_cycle})")
        for name in sorted(result.passed):
            failed = sorted(result.failed[name])
            status = "PASS" if not failed else "FAIL"
            print(f"{status} {name}: {result.passed[name]} passed, {len(failed)} failed")
            for lit in failed[:5]:
                print(f"    counterexample {lit}")
    return EXIT_OK if result.ok else EXIT_PROPERTY_FAILURE


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    # subcommands must not reset a --json given before the subcommand name
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")

    parser = _Parser(prog="finred", description=__doc__)
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", parents=[common], help="six-notion verdict with witnesses")
    p.add_argument("stream", nargs="?", help="stream literal, e.g. BRB(B); '-' or omitted reads stdin")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("transform", parents=[common], help="apply a stream transformer")
    p.add_argument("--name", required=True, choices=sorted(TRANSFORMS))
    p.add_argument("stream", nargs="?")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("relation", parents=[common], help="dump succession edges n -> m")
    p.add_argument("stream", nargs="?")
    p.add_argument("--limit", type=_nonneg, default=10)
    p.set_defaults(func=cmd_relation)

    p = sub.add_parser("check", parents=[common], help="run the property suite")
    p.add_argument("--max-prefix", type=_nonneg, default=5)
    p.add_argument("--max-cycle", type=_nonneg, default=4)
    p.add_argument("--max-n", type=_nonneg, default=8)
    p.add_argument("--fuel", type=_nonneg, default=1000)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("compare", parents=[common], help="bisimilarity with least difference")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_compare)
    return parser


def run(argv: Sequence[str]) -> int:
    args = build_parser().parse_args(list(argv))
    try:
        return args.func(args)
    except ParseError as err:
        return _report_parse_error(err)


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
