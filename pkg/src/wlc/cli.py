"""Command-line front end: ``wlc gen | analyze | solve | classify | verify-hierarchy | export-dot``.

Exit codes: 0 success, 1 invalid input, 2 symmetry size limit exceeded,
3 a verification check failed.  Errors go to standard error as one JSON object.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import io
from .algebra import game_from_expression
from .classify import PRINCIPLE_ORDER, classify
from .core import choice_status, degree, optimal_choices
from .errors import ParseError, SchemaError, SizeLimitExceeded, WLCError
from .principles import assignment, name_of, normalize, parse_principle, solves
from .symmetry import choice_equivalence, structural_classes

EXIT_OK, EXIT_INPUT, EXIT_LIMIT, EXIT_FAILED = 0, 1, 2, 3


def _fmt(game, s):
    return "{" + ", ".join(game.sort_choices(s)) + "}"


def _emit(text, path=None):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load(path):
    if path == "-":
        return io.loads(sys.stdin.read())
    return io.load_document(path)


def cmd_gen(args):
    game = game_from_expression(args.expression)
    meta = {"expression": args.expression}
    if args.label:
        meta["label"] = args.label
    _emit(io.dumps(game, meta), args.output)
    return EXIT_OK


def cmd_analyze(args):
    game = _load(args.file).game
    players = []
    for i, cs in enumerate(game.choices):
        players.append({
            "player": i + 1,
            "choices": [{"choice": c, "status": choice_status(game, i, c).value, "degree": degree(game, c)}
                        for c in cs],
            "optimal": game.sort_choices(optimal_choices(game, i)),
            "equivalence": [list(cell) for cell in choice_equivalence(game, i)],
        })
    data = {"players": players, "structural_classes": [list(cell) for cell in structural_classes(game)]}
    if args.json:
        print(json.dumps(data, indent=2))
        return EXIT_OK
    for p in players:
        print(f"player {p['player']}:")
        for row in p["choices"]:
            print(f"  {row['choice']}: {row['status']} (winning extension size {row['degree']})")
        print(f"  optimal: {{{', '.join(p['optimal'])}}}")
        print("  equivalence classes: " + " ".join("{" + ", ".join(cell) + "}" for cell in p["equivalence"]))
    print("structural classes: " + " ".join("{" + ", ".join(c) + "}" for c in data["structural_classes"]))
    return EXIT_OK


def cmd_solve(args):
    game = _load(args.file).game
    principle = normalize(parse_principle(args.principle))
    a = assignment(principle, game)
    solved = solves(principle, game)
    if args.json:
        data = {"principle": name_of(principle), "solved": solved,
                "permissible": [game.sort_choices(s) for s in a.sets], "flags": sorted(a.flags)}
        if a.trace is not None:
            data["iterations"] = a.trace.iterations
            if args.trace:
                data["trace"] = [[stage.game.sort_choices(s) for s in stage.sets] for stage in a.trace.stages]
        print(json.dumps(data, indent=2))
        return EXIT_OK
    print(f"principle: {name_of(principle)}")
    if args.trace and a.trace is not None:
        for k, stage in enumerate(a.trace.stages):
            sets = " x ".join(_fmt(stage.game, s) for s in stage.sets)
            note = "shrinks" if stage.shrinks else "fixed point"
            print(f"  stage {k}: {sets} ({note})")
        print(f"iterations: {a.trace.iterations}")
    print("permissible: " + " x ".join(_fmt(game, s) for s in a.sets))
    if a.flags:
        print("flags: " + ", ".join(sorted(a.flags)))
    print(f"solved: {str(solved).lower()}")
    return EXIT_OK


def cmd_classify(args):
    game = _load(args.file).game
    report = classify(game)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2))
        return EXIT_OK
    solved = report.solved_by()
    width = max(map(len, PRINCIPLE_ORDER))
    for name in PRINCIPLE_ORDER:
        print(f"{name:<{width}}  {'solved' if name in solved else '-'}")
    print(f"structurally_indeterminate: {str(report.structurally_indeterminate).lower()}")
    if report.unwinnable:
        print("unwinnable: true")
    if report.canonical_choice_sets is not None:
        print("canonical protocol: " + " x ".join(_fmt(game, s) for s in report.canonical_choice_sets))
    if report.flags:
        print("flags: " + ", ".join(sorted(report.flags)))
    return EXIT_OK


def cmd_verify(args):
    from .verification import run_all

    checks = run_all(players=args.players, max_choices=args.max_choices, jobs=args.jobs,
                     sampled=args.sampled, seed=args.seed, pairs=args.pairs)
    for check in checks:
        print(check.line())
    failed = [c for c in checks if not c.passed]
    print(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
    return EXIT_FAILED if failed else EXIT_OK


def cmd_export_dot(args):
    doc = _load(args.file)
    _emit(io.to_dot(doc.game, doc.meta.get("label", "G")), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wlc", description="Analyse pure win-lose coordination games.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="build a game from an expression such as 'Z2 + bar(1x1)'")
    p.add_argument("expression")
    p.add_argument("-o", "--output")
    p.add_argument("--label")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("analyze", help="choice statuses, optimal choices and symmetry classes")
    p.add_argument("file", help="game document, or - for standard input")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("solve", help="permissible sets and verdict for one principle")
    p.add_argument("file")
    p.add_argument("-p", "--principle", required=True, help="e.g. CRC, BIR+, cir(ES&PR)")
    p.add_argument("--trace", action="store_true", help="show every reduction stage")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("classify", help="verdicts for every principle")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify-hierarchy", help="run the reproducible hierarchy checks")
    p.add_argument("--players", type=int, nargs="+", choices=(2, 3), default=[2, 3])
    p.add_argument("--max-choices", type=int, default=3)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--sampled", type=int, default=500, help="random 3-player classes added to the corpus")
    p.add_argument("--pairs", type=int, default=1000, help="random renamings for the structurality check")
    p.add_argument("--seed", type=int, default=2024)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export-dot", help="render the game graph in Graphviz DOT")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export_dot)
    return parser


def _error(exc) -> dict:
    out = {"error": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, ParseError):
        out["position"] = exc.position
        out["expected"] = list(exc.expected)
    if isinstance(exc, SchemaError):
        out["pointer"] = exc.pointer
    return out


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SizeLimitExceeded as exc:
        code = EXIT_LIMIT
        err = _error(exc)
    except (WLCError, ValueError, IndexError, OSError) as exc:
        code = EXIT_INPUT
        err = _error(exc)
    print(json.dumps(err), file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
