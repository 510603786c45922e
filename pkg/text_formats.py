"""Reading and writing cycle sets, solutions and braces as text, and rendering analysis reports."""
from __future__ import annotations
from typing import Iterator
from braces import LeftBrace
from cycle_sets import CycleSet, SolutionYBE, validate_solution
from permutations import Perm
from utils import ParseError, SolutionError
import json
import re

_TOKEN = re.compile(r"\(|\)|,|[0-9]+|[^\s(),0-9]+")
_NUMBER = re.compile(r"[0-9]+")
_HEADER = re.compile(r"\s*(\w+)\s+(\S+)\s*$")
_ROW = re.compile(r"\s*(\w+)\s+(\S+)\s*:=")


def parse_perm(text: str, degree: int, line: int | None = None, offset: int = 0) -> Perm:
    """
    Parse a permutation written as disjoint cycles of 1-based points, e.g. "(1,2,3)(4,5)", or "()" for the identity.

    Whitespace is allowed anywhere. Points that aren't mentioned are fixed.

    :param text: The text.
    :param degree: The number of points.
    :param line: The line of `text` in its file, for error messages.
    :param offset: How many columns precede `text` on its line, for error messages.
    :return: The permutation, 0-based.
    """
    tokens = [(match.group(), match.start() + 1 + offset) for match in _TOKEN.finditer(text)]
    end_column = len(text) + 1 + offset
    if not tokens:
        raise ParseError("expected a permutation", line, end_column)
    if [token for token, _ in tokens] == ["(", ")"]:
        return Perm.identity(degree)

    cycles = []
    seen: set[int] = set()
    position = 0

    def expect(expected: str) -> int:
        nonlocal position
        if position >= len(tokens):
            raise ParseError(f"expected '{expected}' but the permutation ended", line, end_column)
        token, column = tokens[position]
        if token != expected:
            raise ParseError(f"expected '{expected}', found '{token}'", line, column)
        position += 1
        return column

    def point() -> int:
        nonlocal position
        if position >= len(tokens):
            raise ParseError("expected a point but the permutation ended", line, end_column)
        token, column = tokens[position]
        if not _NUMBER.fullmatch(token):
            raise ParseError(f"expected a point, found '{token}'", line, column)
        value = int(token)
        if not 1 <= value <= degree:
            raise ParseError(f"point {value} is out of range 1..{degree}", line, column)
        if value - 1 in seen:
            raise ParseError(f"point {value} appears twice, cycles must be disjoint", line, column)
        seen.add(value - 1)
        position += 1
        return value - 1

    while position < len(tokens):
        expect("(")
        cycle = [point()]
        expect(",")
        cycle.append(point())
        while position < len(tokens) and tokens[position][0] == ",":
            position += 1
            cycle.append(point())
        expect(")")
        cycles.append(cycle)
    return Perm.from_cycles(cycles, degree)


def _content_lines(text: str) -> Iterator[tuple[int, str]]:
    """Yield the 1-based number and text of every line that isn't blank once comments are removed."""
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].rstrip()
        if content.strip():
            yield number, content


def _parse_size(number: int, content: str, keyword: str) -> int:
    match = _HEADER.match(content)
    if not match or match.group(1) != keyword:
        raise ParseError(f"expected '{keyword} <size>'", number, 1)
    if not _NUMBER.fullmatch(match.group(2)) or int(match.group(2)) < 1:
        raise ParseError(f"the size must be a positive integer, found '{match.group(2)}'", number, match.start(2) + 1)
    return int(match.group(2))


def _parse_rows(lines: list[tuple[int, str]], keyword: str, size: int) -> list[Perm]:
    """
    Parse `size` consecutive lines "<keyword> <x> := <perm>" with x = 1, ..., size.

    :param lines: The numbered lines, starting at the first row.
    :param keyword: The name of the map, e.g. "sigma".
    :param size: The number of rows and the degree.
    :return: The permutations, in order.
    """
    if len(lines) < size:
        last = lines[-1][0] if lines else None
        raise ParseError(f"expected {size} '{keyword}' rows, found {len(lines)}", last)
    rows = []
    for expected, (number, content) in enumerate(lines[:size], start=1):
        match = _ROW.match(content)
        if not match or match.group(1) != keyword:
            raise ParseError(f"expected '{keyword} {expected} := <permutation>'", number, 1)
        if match.group(2) != str(expected):
            raise ParseError(f"expected row {expected}, found '{match.group(2)}'", number, match.start(2) + 1)
        rows.append(parse_perm(content[match.end():], size, number, match.end()))
    return rows


def parse_cycle_set(text: str) -> CycleSet:
    """
    Parse the cycle set format:

    .. code-block:: text

        # comment
        n 4
        sigma 1 := ( 2,4)
        sigma 2 := ( 1,3)
        sigma 3 := ( 1, 2,3,4)
        sigma 4 := ( 1,4,3,2)

    Syntax errors raise `ParseError`. A well-formed table failing the axioms raises `CycleSetError`.

    :param text: The text.
    :return: The validated cycle set.
    """
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("the input is empty", 1, 1)
    size = _parse_size(*lines[0], "n")
    rows = _parse_rows(lines[1:], "sigma", size)
    if len(lines) > size + 1:
        raise ParseError(f"expected {size} 'sigma' rows, found more", lines[size + 1][0], 1)
    return CycleSet(tuple(rows))


def render_cycle_set(cycle_set: CycleSet) -> str:
    """
    Write a cycle set in the format read by `parse_cycle_set`.

    :param cycle_set: The cycle set.
    :return: The text, ending with a newline.
    """
    lines = [f"n {cycle_set.size}"]
    lines.extend(f"sigma {x + 1} := {row}" for x, row in enumerate(cycle_set.sigma))
    return "\n".join(lines) + "\n"


def parse_solution(text: str) -> SolutionYBE:
    """
    Parse the solution format: "n <size>", then the rows "lambda x := <perm>" for x = 1..n, then "rho y := <perm>".

    :param text: The text.
    :return: The solution, which is checked to be involutive and to satisfy the braid relation.
    """
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("the input is empty", 1, 1)
    size = _parse_size(*lines[0], "n")
    lambdas = _parse_rows(lines[1:], "lambda", size)
    rhos = _parse_rows(lines[size + 1:], "rho", size)
    if len(lines) > 2 * size + 1:
        raise ParseError(f"expected {size} 'rho' rows, found more", lines[2 * size + 1][0], 1)
    solution = SolutionYBE(tuple(lambdas), tuple(rhos))
    report = validate_solution(solution)
    if not report:
        raise SolutionError(report.summary())
    return solution


def render_solution(solution: SolutionYBE) -> str:
    """
    Write a solution in the format read by `parse_solution`.

    :param solution: The solution.
    :return: The text, ending with a newline.
    """
    lines = [f"n {solution.size}"]
    lines.extend(f"lambda {x + 1} := {perm}" for x, perm in enumerate(solution.lambdas))
    lines.extend(f"rho {y + 1} := {perm}" for y, perm in enumerate(solution.rhos))
    return "\n".join(lines) + "\n"


def parse_structure(text: str) -> CycleSet | SolutionYBE:
    """
    Parse either a cycle set or a solution, depending on the name of the first row.

    :param text: The text.
    :return: The parsed value.
    """
    lines = list(_content_lines(text))
    if len(lines) > 1 and lines[1][1].split()[0] == "lambda":
        return parse_solution(text)
    return parse_cycle_set(text)


def _parse_table(block: list[tuple[int, str]], order: int, name: str) -> list[list[int]]:
    if len(block) != order:
        raise ParseError(f"the {name} table has {len(block)} rows, expected {order}", block[0][0], 1)
    table = []
    for number, content in block:
        row = []
        for match in re.finditer(r"\S+", content):
            if not _NUMBER.fullmatch(match.group()):
                raise ParseError(f"expected an element, found '{match.group()}'", number, match.start() + 1)
            row.append(int(match.group()))
        if len(row) != order:
            raise ParseError(f"the {name} table row has {len(row)} entries, expected {order}", number, 1)
        table.append(row)
    return table


def parse_brace(text: str) -> LeftBrace:
    """
    Parse the brace format: "m <order>", the rows of the addition table, a blank line, then the rows of the
    multiplication table. Elements are 0, ..., order - 1 and 0 is neutral for both operations.

    Syntax errors raise `ParseError`. Tables failing the axioms raise `BraceError`.

    :param text: The text.
    :return: The validated brace.
    """
    blocks: list[list[tuple[int, str]]] = [[]]
    header = None
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].rstrip()
        if header is None:
            if content.strip():
                header = (number, content)
            continue
        if content.strip():
            blocks[-1].append((number, content))
        elif blocks[-1]:
            blocks.append([])
    if header is None:
        raise ParseError("the input is empty", 1, 1)
    order = _parse_size(*header, "m")
    blocks = [block for block in blocks if block]
    if len(blocks) != 2:
        raise ParseError(f"expected two tables separated by a blank line, found {len(blocks)}", header[0], 1)
    add_table = _parse_table(blocks[0], order, "addition")
    mul_table = _parse_table(blocks[1], order, "multiplication")
    return LeftBrace.from_tables(add_table, mul_table)


def render_brace(brace: LeftBrace) -> str:
    """
    Write a brace in the format read by `parse_brace`.

    :param brace: The brace.
    :return: The text, ending with a newline.
    """
    width = len(str(brace.order - 1))
    add = [" ".join(str(entry).rjust(width) for entry in row) for row in brace.add_table]
    mul = [" ".join(str(entry).rjust(width) for entry in row) for row in brace.mul_table]
    return "\n".join([f"m {brace.order}"] + add + [""] + mul) + "\n"


def _is_nested(value: object) -> bool:
    if isinstance(value, dict):
        return True
    return isinstance(value, list) and any(isinstance(item, (dict, list)) for item in value)


def _plain_lines(value: object, indent: int) -> list[str]:
    pad = "  " * indent
    if isinstance(value, dict):
        lines = []
        for key, item in value.items():
            if _is_nested(item):
                lines.append(f"{pad}{key}:")
                lines.extend(_plain_lines(item, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_plain_value(item)}")
        return lines
    if isinstance(value, list):
        lines = []
        for item in value:
            if isinstance(item, dict):
                lines.append(f"{pad}-")
                lines.extend(_plain_lines(item, indent + 1))
            else:
                lines.append(f"{pad}- {_plain_value(item)}")
        return lines
    return [f"{pad}{_plain_value(value)}"]


def _plain_value(value: object) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if value is None:
        return "-"
    if isinstance(value, list):
        return "[" + ", ".join(_plain_value(item) for item in value) + "]"
    return str(value)


def emit_report(results: dict[str, object] | list[dict[str, object]], as_json: bool = False) -> str:
    """
    Render analysis results.

    :param results: A dictionary of results, or a list of them. Key order is kept.
    :param as_json: Whether to write JSON instead of indented "key: value" lines.
    :return: The report, ending with a newline.
    """
    if as_json:
        return json.dumps(results, indent=2, ensure_ascii=False) + "\n"
    return "\n".join(_plain_lines(results, 0)) + "\n"
