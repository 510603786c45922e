"""Utilities for the rest of the program."""
from __future__ import annotations
from dataclasses import dataclass, field


class PermutationError(ValueError):
    """A sequence of images isn't a bijection, or two permutations don't share a degree."""


class ParseError(ValueError):
    """The text doesn't follow one of the input grammars."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None) -> None:
        """
        Save where the offending token is.

        :param message: What went wrong.
        :param line: The 1-based line of the offending token, if known.
        :param column: The 1-based column of the offending token, if known.
        """
        self.line = line
        self.column = column
        location = []
        if line is not None:
            location.append(f"line {line}")
        if column is not None:
            location.append(f"column {column}")
        super().__init__(f"{message} ({', '.join(location)})" if location else message)


class CycleSetError(ValueError):
    """A table fails the cycle set axioms, or a partition isn't a congruence."""


class SolutionError(ValueError):
    """A map isn't an involutive non-degenerate solution of the braid relation."""


class BraceError(ValueError):
    """Tables fail the left brace axioms, or a subset isn't closed as required."""


class PreconditionError(ValueError):
    """An operation was called outside its preconditions."""


class EnumerationError(ValueError):
    """The enumeration size guard was exceeded."""


class ConsistencyError(RuntimeError):
    """Two independent computations of the same mathematical fact disagree."""


@dataclass
class ValidationReport:
    """The outcome of checking a list of axioms. Truthy when every axiom holds."""

    subject: str
    failures: list[str] = field(default_factory=list)

    def fail(self, message: str) -> None:
        """
        Record a failed axiom.

        :param message: The axiom and its witness (1-based).
        """
        self.failures.append(message)

    @property
    def passed(self) -> bool:
        """Whether no axiom failed."""
        return not self.failures

    def __bool__(self) -> bool:
        return self.passed

    def summary(self) -> str:
        """
        Describe the report in one line.

        :return: "<subject>: valid" or the first failure with a count of the rest.
        """
        if self.passed:
            return f"{self.subject}: valid"
        more = f" (and {len(self.failures) - 1} more)" if len(self.failures) > 1 else ""
        return f"{self.subject}: {self.failures[0]}{more}"


def is_prime(number: int) -> bool:
    """
    Check whether a number is prime.

    :param number: A non-negative integer.
    :return: Whether `number` is prime.
    """
    if number < 2:
        return False
    divisor = 2
    while divisor * divisor <= number:
        if number % divisor == 0:
            return False
        divisor += 1
    return True


def readable_number(number: int) -> str:
    """
    Turn a number into a more readable format.

    :param number: An integer.
    :return: An easier-to-read format for the number (e.g. 15_000_000 becomes 15.0M).
    """
    if number >= 1_000_000:
        return f"{round(number / 1_000_000, 1)}M"
    if number >= 1_000:
        return f"{round(number / 1_000, 1)}K"
    return str(number)
