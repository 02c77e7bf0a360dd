"""Command-line surface.

Subcommands: eval, len, geodesic, ball, growth, deadends, polyominoes,
complete, verify.  One flag per resource bound (--radius, --max, --area,
--max-area); outputs are canonically sorted so repeated runs are
byte-identical.  Exit codes: 0 success, 1 verification failure, 2 usage or
parse error, 3 resource ceiling exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import language, metric, oracle, polyomino, verify
from .errors import ResourceLimitError, WordParseError
from .group import Element, evaluate, format_word, parse_word, word_sort_key

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

#: hard practical bound; BFS beyond this is no longer a desk-scale run
MAX_BALL_RADIUS = 22
MAX_GROWTH = 16


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        Path(out).write_text(text if text.endswith("\n") else text + "\n")


def _word_report(word: str) -> dict:
    g = evaluate(word)
    geodesic = metric.is_geodesic(word)
    report = {
        "word": format_word(word),
        "coords": {"n": g.n, "m": g.m},
        "area": g.k,
        "length": metric.length(g),
        "geodesic": geodesic,
        "dead_end": metric.is_dead_end_word(word),
        "extensions": sorted(metric.geodesic_extensions(word)) if geodesic else None,
    }
    return report


def _cmd_eval(args) -> int:
    word = parse_word(args.word)
    _emit(json.dumps(_word_report(word)), args.out)
    return EXIT_OK


def _cmd_len(args) -> int:
    g = Element(args.n, args.m, args.k)
    report = {
        "coords": {"n": g.n, "m": g.m},
        "area": g.k,
        "length": metric.length(g),
        "dead_end": metric.is_dead_end_element(g),
    }
    _emit(json.dumps(report), args.out)
    return EXIT_OK


def _cmd_geodesic(args) -> int:
    word = parse_word(args.word)
    _emit(json.dumps(_word_report(word)), args.out)
    return EXIT_OK


def _cmd_ball(args) -> int:
    if args.radius > MAX_BALL_RADIUS:
        raise ResourceLimitError(
            f"radius {args.radius} beyond the practical ceiling {MAX_BALL_RADIUS}"
        )
    ball = oracle.bfs_ball(args.radius, ceiling=args.radius)
    _emit("\n".join(ball.csv_lines()), args.out)
    return EXIT_OK


def _cmd_growth(args) -> int:
    if args.max > MAX_GROWTH:
        raise ResourceLimitError(
            f"nmax {args.max} beyond the practical ceiling {MAX_GROWTH}"
        )
    rows = oracle.geodesic_growth(args.max, ceiling=args.max)
    _emit("\n".join(oracle.growth_csv_lines(rows)), args.out)
    return EXIT_OK


def _cmd_deadends(args) -> int:
    words = language.generate_dead_end_words(args.area)
    lines = [format_word(w) for w in sorted(words, key=word_sort_key)]
    _emit("\n".join(lines), args.out)
    return EXIT_OK


def _cmd_polyominoes(args) -> int:
    shapes = polyomino.enumerate_min_perimeter(args.area)
    if args.format == "json":
        _emit(json.dumps([shape.to_json_dict() for shape in shapes]), args.out)
        return EXIT_OK
    if args.out is None:
        raise SystemExit("--format svg needs --out DIRECTORY")
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    for index, shape in enumerate(shapes):
        ob = polyomino.OrientedBoundary(shape, polyomino.default_basepoint(shape), 1)
        path = outdir / f"polyomino_k{args.area}_{index:03d}.svg"
        path.write_text(polyomino.polyomino_svg(ob) + "\n")
    sys.stdout.write(f"wrote {len(shapes)} SVG files to {outdir}\n")
    return EXIT_OK


def _cmd_complete(args) -> int:
    word = parse_word(args.word)
    completed = language.extend_to_dead_end(word, max_area=args.max_area)
    _emit(format_word(completed), args.out)
    return EXIT_OK


def _cmd_verify(args) -> int:
    idents = None
    if args.suite:
        idents = [int(part) for part in args.suite.split(",")]
    results = verify.run_checks(idents, report=lambda line: print(line))
    return EXIT_OK if all(r.ok for r in results) else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heisgeo",
        description=(
            "Word metric, geodesics and dead-end words for the discrete "
            "Heisenberg group with generators a, b (A, B are inverses)"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    cmd = sub.add_parser("eval", help="evaluate a word to its normal form")
    cmd.add_argument("word")
    cmd.add_argument("--out")
    cmd.set_defaults(func=_cmd_eval)

    cmd = sub.add_parser("len", help="length of the element (n, m, k)")
    cmd.add_argument("n", type=int)
    cmd.add_argument("m", type=int)
    cmd.add_argument("k", type=int)
    cmd.add_argument("--out")
    cmd.set_defaults(func=_cmd_len)

    cmd = sub.add_parser("geodesic", help="report geodesy of a word")
    cmd.add_argument("word")
    cmd.add_argument("--out")
    cmd.set_defaults(func=_cmd_geodesic)

    cmd = sub.add_parser("ball", help="export a BFS distance ball as CSV")
    cmd.add_argument("--radius", type=int, default=16)
    cmd.add_argument("--out")
    cmd.set_defaults(func=_cmd_ball)

    cmd = sub.add_parser("growth", help="geodesic growth table as CSV")
    cmd.add_argument("--max", type=int, default=12)
    cmd.add_argument("--out")
    cmd.set_defaults(func=_cmd_growth)

    cmd = sub.add_parser("deadends", help="all dead-end words of a given area")
    cmd.add_argument("--area", type=int, required=True)
    cmd.add_argument("--out")
    cmd.set_defaults(func=_cmd_deadends)

    cmd = sub.add_parser(
        "polyominoes", help="minimal-perimeter polyominoes of a given area"
    )
    cmd.add_argument("--area", type=int, required=True)
    cmd.add_argument("--format", choices=("json", "svg"), default="json")
    cmd.add_argument("--out")
    cmd.set_defaults(func=_cmd_polyominoes)

    cmd = sub.add_parser("complete", help="extend a geodesic word to a dead end")
    cmd.add_argument("word")
    cmd.add_argument("--max-area", type=int, default=64)
    cmd.add_argument("--out")
    cmd.set_defaults(func=_cmd_complete)

    cmd = sub.add_parser("verify", help="run the acceptance checks")
    cmd.add_argument("--suite", help="comma-separated check ids, default all")
    cmd.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except WordParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
