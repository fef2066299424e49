"""Command-line entry point: ``waba solve | export-asp | validate``.

Exit codes: 0 extensions found (or valid input), 1 no extensions, 2 input error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .asp import export_asp
from .assumptions import assumption_extensions
from .attacks import build_attack_graph
from .derivations import DEFAULT_MAX_ARGUMENTS, ResourceLimitError
from .framework import Framework, validate
from .oracle import oracle_solve
from .output import emit_results, graph_json
from .semantics import SEMANTICS, AbstractFramework, BudgetedExtension, budget_extensions, canonical_semantics
from .semiring import SEMIRINGS, get_semiring, parse_weight
from .syntax import ParseError, parse_document

log = logging.getLogger("waba")

EXIT_FOUND, EXIT_NONE, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _semantics(name: str) -> str:
    try:
        return canonical_semantics(name)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def create_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="waba", description="Weighted assumption-based argumentation solver")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("file", type=Path)
        p.add_argument("--scale", type=int, default=1, help="integer factor applied to decimal weights")
        p.add_argument("--semiring", choices=sorted(SEMIRINGS), default="minmax")

    solve = sub.add_parser("solve", help="enumerate budget-sigma extensions")
    common(solve)
    solve.add_argument("--semantics", type=_semantics, default="stable", metavar="|".join(SEMANTICS))
    solve.add_argument("--budget", default="0", help="N or inf")
    solve.add_argument("--mode", choices=("argument", "assumption"), default=None,
                       help="defaults to assumption for wABA input, argument for abstract input")
    solve.add_argument("--oracle", action="store_true", help="use the brute-force reference solver")
    solve.add_argument("--format", choices=("human", "json"), default="human")
    solve.add_argument("--dump-graph", nargs="?", const="-", metavar="PATH", help="write the attack graph as JSON")
    solve.add_argument("--max-arguments", type=int, default=DEFAULT_MAX_ARGUMENTS)

    exp = sub.add_parser("export-asp", help="write clingo facts and encoding")
    common(exp)
    exp.add_argument("--semantics", type=_semantics, default="stable")
    exp.add_argument("--budget", default="0")

    val = sub.add_parser("validate", help="check framework side conditions")
    common(val)
    return parser


def _load(args) -> Framework | AbstractFramework:
    try:
        text = args.file.read_text()
    except OSError as exc:
        raise InputError(f"cannot read {args.file}: {exc.strerror}") from None
    try:
        doc = parse_document(text, scale=args.scale, semiring=get_semiring(args.semiring))
    except ParseError as exc:
        raise InputError(f"{args.file}: {exc}") from None
    if isinstance(doc, Framework):
        problems = validate(doc)
        if problems:
            raise InputError("\n".join(f"{args.file}: {v.kind}: {v.message}" for v in problems))
    return doc


def _budget(args):
    try:
        return parse_weight(args.budget, args.scale)
    except ValueError as exc:
        raise InputError(f"bad budget: {exc}") from None


def _solve(args, out) -> int:
    doc = _load(args)
    budget = _budget(args)
    spec = get_semiring(args.semiring)
    framework = doc if isinstance(doc, Framework) else None
    if framework is None and args.mode == "assumption":
        raise InputError("assumption mode needs a structured wABA document")
    mode = args.mode or ("assumption" if framework is not None else "argument")

    graph = None
    if args.dump_graph or (mode == "argument" and not args.oracle):
        graph = build_attack_graph(framework, args.max_arguments) if framework else doc
    if args.dump_graph:
        text = json.dumps(graph_json(graph, framework), indent=2) + "\n"
        if args.dump_graph == "-":
            out.write(text)
        else:
            Path(args.dump_graph).write_text(text)

    if args.oracle:
        result = oracle_solve(doc, args.semantics, budget, spec=spec, mode=mode)
        exts = [BudgetedExtension(m, None, c, result.semantics, budget) for m, c in result.extensions]
    elif mode == "assumption":
        exts = assumption_extensions(framework, args.semantics, budget, max_arguments=args.max_arguments)
    else:
        exts = budget_extensions(graph, args.semantics, budget, spec)
    out.write(emit_results(exts, args.format, framework))
    return EXIT_FOUND if exts else EXIT_NONE


def _export(args, out) -> int:
    doc = _load(args)
    if not isinstance(doc, Framework):
        raise InputError("ASP export needs a structured wABA document")
    try:
        result = export_asp(doc, args.semantics, _budget(args))
    except ValueError as exc:
        raise InputError(str(exc)) from None
    out.write(result.text)
    return EXIT_FOUND


def _validate(args, out) -> int:
    doc = _load(args)
    kind = "wABA framework" if isinstance(doc, Framework) else "abstract framework"
    out.write(f"ok: {kind}\n")
    return EXIT_FOUND


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = create_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    handler = {"solve": _solve, "export-asp": _export, "validate": _validate}[args.command]
    try:
        return handler(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ResourceLimitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
