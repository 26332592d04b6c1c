"""Command-line front end: ``python -m gblocks <subcommand> ...``.

Exit codes: 0 when every requested check passes, 1 on a failed check or an
invariant violation in the input data, 2 on usage errors, 3 when a file
cannot be read or is not JSON.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Sequence
from typing import Any, TextIO

from pydantic import ValidationError

from . import __version__, config
from .category import check_category, load_category
from .covers import load_cover, parse_move
from .errors import GBlocksError
from .mf import check_path_independence, check_relations, factorization, load_labeling, path_map, tau_dim
from .msdata import check_ms_axioms
from .roundtrip import roundtrip_check
from .schemas import CheckReport, MoveScript

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_FILE = 0, 1, 2, 3


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a machine-readable report")
    common.add_argument("--conductor-limit", type=_positive, default=None, help="largest cyclotomic conductor accepted")

    p = argparse.ArgumentParser(
        prog="gblocks",
        description="Exact checks for G-equivariant fusion categories, Moore-Seiberg data and genus-zero G-modular functors.",
    )
    p.add_argument("--version", action="version", version=f"gblocks {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", parents=[common], help="pentagon, hexagon, G-coherence and twist checks")
    s.add_argument("category")

    s = sub.add_parser("ms-check", parents=[common], help="Moore-Seiberg axioms on block spaces")
    s.add_argument("category")
    s.add_argument("--bound", type=_positive, default=None, help="largest number of tensor factors")

    s = sub.add_parser("dim", parents=[common], help="dimension of the space attached to a labelled cover")
    s.add_argument("category")
    s.add_argument("cover")
    s.add_argument("labels")

    s = sub.add_parser("map", parents=[common], help="matrix of a move script")
    s.add_argument("category")
    s.add_argument("cover")
    s.add_argument("labels")
    s.add_argument("script")

    s = sub.add_parser("paths", parents=[common], help="path independence of move sequences")
    s.add_argument("category")
    s.add_argument("cover")
    s.add_argument("labels")
    s.add_argument("target", nargs="?", default=None, help="second parameterization (defaults to the cover itself)")
    s.add_argument("--depth", type=_positive, default=None, help="largest number of moves explored")

    s = sub.add_parser("relations", parents=[common], help="relations among the moves on small covers")
    s.add_argument("category")
    s.add_argument("--bound", type=_positive, default=None, help="largest number of boundaries on a single block")
    s.add_argument("--max-blocks", type=_positive, default=None)

    s = sub.add_parser("roundtrip", parents=[common], help="read fusion rules and twists back from block spaces")
    s.add_argument("category")
    return p


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _validate(args: argparse.Namespace) -> CheckReport:
    return check_category(load_category(args.category))


def _ms_check(args: argparse.Namespace) -> CheckReport:
    return check_ms_axioms(load_category(args.category), args.bound)


def _relations(args: argparse.Namespace) -> CheckReport:
    return check_relations(load_category(args.category), args.bound, args.max_blocks)


def _roundtrip(args: argparse.Namespace) -> CheckReport:
    return roundtrip_check(load_category(args.category))


def _paths(args: argparse.Namespace) -> CheckReport:
    cat = load_category(args.category)
    graph = load_cover(cat.group, args.cover)
    target = load_cover(cat.group, args.target) if args.target else graph
    labeling = load_labeling(cat, graph, args.labels)
    return check_path_independence(cat, graph, target, labeling, args.depth)


def _dim(args: argparse.Namespace) -> dict[str, Any]:
    cat = load_category(args.category)
    graph = load_cover(cat.group, args.cover)
    labeling = load_labeling(cat, graph, args.labels)
    return {
        "dim": tau_dim(cat, graph, labeling),
        "factorization": [factorization(cat, graph, labeling, c) for c in range(len(graph.cuts))],
    }


def _map(args: argparse.Namespace) -> dict[str, Any]:
    cat = load_category(args.category)
    graph = load_cover(cat.group, args.cover)
    labeling = load_labeling(cat, graph, args.labels)
    with open(args.script, encoding="utf-8") as fh:
        data = json.load(fh)
    try:
        script = MoveScript.model_validate(data)
    except ValidationError as exc:
        raise GBlocksError(f"move script: {exc}") from None
    moves = [parse_move(cat.group, spec) for spec in script.moves]
    bm = path_map(cat, graph, labeling, moves)
    return {
        "moves": [m.describe(cat.group) for m in moves],
        "source": bm.source.describe(),
        "target": bm.target.describe(),
        "target_cover": bm.target.graph.to_document(),
        "matrix": bm.text(),
    }


CHECKS = {
    "validate": _validate,
    "ms-check": _ms_check,
    "paths": _paths,
    "relations": _relations,
    "roundtrip": _roundtrip,
}
COMPUTATIONS = {"dim": _dim, "map": _map}


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------


def dump_json(payload: dict[str, Any], out: TextIO) -> None:
    out.write(json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False))
    out.write("\n")


def print_report(report: CheckReport, out: TextIO) -> None:
    out.write(f"{report.subject}: {'PASS' if report.passed else 'FAIL'}\n")
    for note in report.interpretation_notes:
        out.write(f"  note: {note}\n")
    for axiom in report.axioms:
        out.write(f"  [{axiom.status}] {axiom.name} ({axiom.instances_checked} instances)\n")
        for f in axiom.failures[:5]:
            out.write(f"      at {', '.join(f.witness) or '-'}: {f.detail}\n")
        if len(axiom.failures) > 5:
            out.write(f"      ... {len(axiom.failures) - 5} more\n")


def print_computation(command: str, payload: dict[str, Any], out: TextIO) -> None:
    if command == "dim":
        out.write(f"{payload['dim']}\n")
        for fact in payload["factorization"]:
            terms = " + ".join(f"{t['from_dim']}*{t['to_dim']} [{t['label']}]" for t in fact["terms"])
            out.write(f"  cut {fact['cut']}: {terms or '0'} = {fact['total']}\n")
        return
    out.write(f"{' '.join(payload['moves']) or '(identity)'}: {payload['source']} -> {payload['target']}\n")
    for row in payload["matrix"]:
        out.write("  [" + ", ".join(row) + "]\n")


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


def run_cli(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out if out is not None else sys.stdout
    logging.basicConfig(level=config.LOG_LEVEL, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    if args.conductor_limit is not None:
        config.CONDUCTOR_LIMIT = args.conductor_limit

    try:
        if args.command in CHECKS:
            report = CHECKS[args.command](args)
            if args.json:
                dump_json(report.to_payload(), out)
            else:
                print_report(report, out)
            return EXIT_OK if report.passed else EXIT_FAIL
        payload = COMPUTATIONS[args.command](args)
    except json.JSONDecodeError as exc:
        print(f"gblocks: not valid JSON: {exc}", file=sys.stderr)
        return EXIT_FILE
    except OSError as exc:
        print(f"gblocks: cannot read {exc.filename or 'input'}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_FILE
    except GBlocksError as exc:
        print(f"gblocks: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if args.json:
        dump_json(payload, out)
    else:
        print_computation(args.command, payload, out)
    return EXIT_OK


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
