"""Command-line analysis of cycle sets, their solutions and the braces on their permutation groups."""
from __future__ import annotations
from typing import Sequence
from braces import all_ideals, is_simple_brace, is_trivial_brace, socle
from catalog import catalog, get_entry
from cycle_sets import CycleSet, SolutionYBE, enumerate_cycle_sets, from_solution, to_solution
from permutation_braces import gbrace
from plot_structures import plot_cycle_set_table, plot_ideal_lattice
from simplicity import analyze_cycle_set, classify_cycle_set, theorem_characterization
from text_formats import emit_report, parse_structure, render_brace, render_cycle_set, render_solution
from utils import (BraceError, ConsistencyError, CycleSetError, EnumerationError, ParseError, PermutationError,
                   PreconditionError, SolutionError)
import argparse
import json
import multiprocessing
import sys

EXIT_OK = 0
EXIT_INVALID_INPUT = 1
EXIT_USAGE = 2
EXIT_INCONSISTENT = 3

_INPUT_ERRORS = (ParseError, CycleSetError, SolutionError, BraceError, PermutationError, PreconditionError)


class _UsageError(Exception):
    """The command line asks for something that doesn't exist."""


def _read_input(args: argparse.Namespace) -> CycleSet | SolutionYBE:
    if getattr(args, "catalog", None):
        try:
            return get_entry(args.catalog).cycle_set
        except KeyError as error:
            raise _UsageError(error.args[0]) from None
    try:
        with open(args.file, encoding="utf-8") as input_file:
            text = input_file.read()
    except OSError as error:
        raise _UsageError(f"can't read {args.file}: {error.strerror}") from None
    return parse_structure(text)


def _read_cycle_set(args: argparse.Namespace) -> CycleSet:
    structure = _read_input(args)
    return from_solution(structure) if isinstance(structure, SolutionYBE) else structure


def _validate(args: argparse.Namespace) -> tuple[dict[str, object], int]:
    structure = _read_input(args)
    kind = "solution" if isinstance(structure, SolutionYBE) else "cycle set"
    return {"input": args.file, "kind": kind, "size": structure.size, "valid": True}, EXIT_OK


def _analyze(args: argparse.Namespace) -> tuple[dict[str, object], int]:
    cycle_set = _read_cycle_set(args)
    results = analyze_cycle_set(cycle_set)
    if args.plot:
        plot_cycle_set_table(cycle_set, True)
    return results, EXIT_OK


def _brace(args: argparse.Namespace) -> tuple[dict[str, object], int]:
    result = gbrace(_read_cycle_set(args))
    brace = result.brace
    lattice = all_ideals(brace)
    if args.save:
        with open(args.save, "w", encoding="utf-8") as brace_file:
            brace_file.write(render_brace(brace))
    if args.plot:
        plot_ideal_lattice(lattice, True)
    return {
        "order": brace.order,
        "socle": sorted(socle(brace)),
        "ideal_sizes": lattice.sizes(),
        "minimal_ideals": [sorted(ideal) for ideal in lattice.minimal],
        "simple_brace": is_simple_brace(brace),
        "trivial_brace": is_trivial_brace(brace),
        "embedding": list(result.embed),
    }, EXIT_OK


def _theorem(args: argparse.Namespace) -> tuple[dict[str, object], int]:
    result = gbrace(_read_cycle_set(args))
    report = theorem_characterization(result.brace, result.embedded_base())
    code = EXIT_INCONSISTENT if report.preconditions_hold and not report.equivalent else EXIT_OK
    return {"group_order": result.brace.order, **report.to_dict()}, code


def _classify(args: argparse.Namespace) -> tuple[dict[str, object], int]:
    return classify_cycle_set(_read_cycle_set(args)).to_dict(), EXIT_OK


def _enumerate(args: argparse.Namespace) -> tuple[dict[str, object], int]:
    cores = args.cores if args.cores != -1 else multiprocessing.cpu_count()
    listed = []
    for cycle_set in enumerate_cycle_sets(args.size, args.up_to_iso, args.max_size, cores, args.progress):
        simple = classify_cycle_set(cycle_set).simple
        if args.simple_only and not simple:
            continue
        listed.append({"sigma": [str(row) for row in cycle_set.sigma], "simple": simple})
    return {"size": args.size, "up_to_iso": args.up_to_iso, "count": len(listed), "cycle_sets": listed}, EXIT_OK


def _catalog(args: argparse.Namespace) -> tuple[dict[str, object] | list[dict[str, object]], int]:
    if args.action == "list":
        return [{"id": entry.id, "size": entry.cycle_set.size, "description": entry.description}
                for entry in catalog()], EXIT_OK
    if not args.id:
        raise _UsageError("catalog show needs an id.")
    try:
        entry = get_entry(args.id)
    except KeyError as error:
        raise _UsageError(error.args[0]) from None
    return {"id": entry.id, "description": entry.description, "provenance": entry.provenance,
            "expected": entry.expected, "sigma": [str(row) for row in entry.cycle_set.sigma]}, EXIT_OK


def _convert(args: argparse.Namespace) -> tuple[str | dict[str, object], int]:
    structure = _read_input(args)
    if args.to == "solution":
        solution = structure if isinstance(structure, SolutionYBE) else to_solution(structure)
        text = render_solution(solution)
    else:
        text = render_cycle_set(from_solution(structure) if isinstance(structure, SolutionYBE) else structure)
    if getattr(args, "json", False):
        return {"to": args.to, "text": text}, EXIT_OK
    return text, EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    json_flag = argparse.ArgumentParser(add_help=False)
    json_flag.add_argument("--json", action='store_true', default=argparse.SUPPRESS,
                           help='Write the report as JSON. (default: plain text)')
    parser = argparse.ArgumentParser(prog='Cycle Set Analysis',
                                     description='Check and analyze finite cycle sets, the involutive solutions of '
                                                 'the Yang-Baxter equation they encode, and their left braces.')
    parser.add_argument("--json", action='store_true', help='Write the report as JSON. (default: plain text)')
    commands = parser.add_subparsers(dest="command", required=True)

    def add_input(command: argparse.ArgumentParser) -> None:
        source = command.add_mutually_exclusive_group(required=True)
        source.add_argument("file", nargs='?', help='A cycle set or solution file.')
        source.add_argument("-c", "--catalog", help='The id of a bundled cycle set. (examples: P4, E16 or C_7)')

    validate = commands.add_parser("validate", parents=[json_flag], help='Check a cycle set or solution file.')
    validate.add_argument("file", help='A cycle set or solution file.')
    validate.set_defaults(handler=_validate)

    analyze = commands.add_parser("analyze", parents=[json_flag],
                                  help='Indecomposability, retractions and simplicity of a cycle set.')
    add_input(analyze)
    analyze.add_argument("--plot", action='store_true', help='Plot the table of the cycle set. (default: false)')
    analyze.set_defaults(handler=_analyze)

    brace = commands.add_parser("brace", parents=[json_flag], help='The left brace on the permutation group.')
    add_input(brace)
    brace.add_argument("--plot", action='store_true', help='Plot the ideals of the brace. (default: false)')
    brace.add_argument("--save", help='Where to save the addition and multiplication tables. Leave empty to not '
                                      'save. (default: don\'t save)')
    brace.set_defaults(handler=_brace)

    theorem = commands.add_parser("theorem", parents=[json_flag],
                                  help='The three equivalent conditions for simplicity, evaluated independently.')
    add_input(theorem)
    theorem.set_defaults(handler=_theorem)

    classify = commands.add_parser("classify", parents=[json_flag],
                                   help='Which case decides simplicity, checked against brute force.')
    add_input(classify)
    classify.set_defaults(handler=_classify)

    enumerate_command = commands.add_parser("enumerate", parents=[json_flag], help='Every cycle set of a size.')
    enumerate_command.add_argument("size", type=int, help='The number of elements.')
    enumerate_command.add_argument("--simple-only", action='store_true', help='List simple cycle sets only. '
                                                                              '(default: false)')
    enumerate_command.add_argument("--up-to-iso", action='store_true', help='List one cycle set per isomorphism '
                                                                            'class. (default: false)')
    enumerate_command.add_argument("--max-size", default=5, type=int, help='The largest size allowed. '
                                                                           '(default: 5)')
    enumerate_command.add_argument("--cores", default=1, type=int,
                                   help='How many cores to use in the search. (default: 1, use -1 for all cores)')
    enumerate_command.add_argument("--progress", action='store_true', help='Print progress to standard error. '
                                                                           '(default: false)')
    enumerate_command.set_defaults(handler=_enumerate)

    catalog_command = commands.add_parser("catalog", parents=[json_flag], help='The bundled cycle sets.')
    catalog_command.add_argument("action", nargs='?', default="list", choices=["list", "show"],
                                 help='List the entries or show one. (default: list)')
    catalog_command.add_argument("id", nargs='?', help='The entry to show. (examples: P4 or C_5)')
    catalog_command.set_defaults(handler=_catalog)

    convert = commands.add_parser("convert", parents=[json_flag],
                                  help='Turn a cycle set into its solution, or back.')
    convert.add_argument("file", help='A cycle set or solution file.')
    convert.add_argument("--to", required=True, choices=["solution", "cycleset"], help='The output format.')
    convert.set_defaults(handler=_convert)
    return parser


def _report_error(kind: str, message: str, as_json: bool) -> None:
    if as_json:
        print(json.dumps({"error": kind, "message": message}, ensure_ascii=False), file=sys.stderr)
    else:
        print(f"error: {kind}: {message}", file=sys.stderr)


def run(argv: Sequence[str] | None = None) -> int:
    """
    Run one command.

    :param argv: The arguments, without the program name. Defaults to the process arguments.
    :return: The exit code: 0 on success, 1 for invalid input, 2 for a usage error and 3 when two computations of
        the same fact disagree.
    """
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return error.code if isinstance(error.code, int) else EXIT_USAGE
    as_json = getattr(args, "json", False)
    try:
        output, code = args.handler(args)
    except _UsageError as error:
        _report_error("usage", str(error), as_json)
        return EXIT_USAGE
    except EnumerationError as error:
        _report_error("usage", str(error), as_json)
        return EXIT_USAGE
    except ConsistencyError as error:
        _report_error("consistency", str(error), as_json)
        return EXIT_INCONSISTENT
    except _INPUT_ERRORS as error:
        _report_error(type(error).__name__, str(error), as_json)
        return EXIT_INVALID_INPUT
    print(output if isinstance(output, str) else emit_report(output, as_json), end="")
    if code == EXIT_INCONSISTENT:
        _report_error("consistency", "the preconditions hold but the conditions disagree.", as_json)
    return code


if __name__ == "__main__":
    sys.exit(run())
