"""Finite left braces as addition and multiplication tables: axioms, λ-maps, socle, ideals and cycle bases."""
from __future__ import annotations
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence
from cycle_sets import CycleSet
from permutations import Perm, inverse, orbits
from utils import BraceError, ConsistencyError, ValidationReport
import itertools

Table = tuple[tuple[int, ...], ...]


def _as_table(rows: Sequence[Sequence[int]]) -> Table:
    return tuple(tuple(row) for row in rows)


def _check_group(report: ValidationReport, table: Table, symbol: str, name: str) -> None:
    """
    Check that 0 is neutral, that inverses exist and that the operation is associative.

    :param report: Where to record failures.
    :param table: The operation table.
    :param symbol: The symbol of the operation in messages.
    :param name: The name of the operation in messages.
    """
    order = len(table)
    for a in range(order):
        if table[0][a] != a or table[a][0] != a:
            report.fail(f"0 isn't the {name} neutral element: 0{symbol}{a} = {table[0][a]}, "
                        f"{a}{symbol}0 = {table[a][0]}.")
            return
    for a in range(order):
        if not any(table[a][b] == 0 and table[b][a] == 0 for b in range(order)):
            report.fail(f"{a} has no {name} inverse.")
            return
    for a, b, c in itertools.product(range(order), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            report.fail(f"{symbol} isn't associative: (a{symbol}b){symbol}c ≠ a{symbol}(b{symbol}c) "
                        f"for a={a}, b={b}, c={c}.")
            return


def validate_brace(add_table: Sequence[Sequence[int]], mul_table: Sequence[Sequence[int]]) -> ValidationReport:
    """
    Check the left brace axioms on a pair of 0-based tables sharing the neutral element 0.

    Checks both group structures, commutativity of +, a∘(b+c)+a = a∘b+a∘c on every triple,
    and that a ↦ λ_a is a homomorphism into Aut(A, +).

    :param add_table: add_table[a][b] = a + b.
    :param mul_table: mul_table[a][b] = a∘b.
    :return: A report with one witness per failed axiom.
    """
    report = ValidationReport("left brace")
    add, mul = _as_table(add_table), _as_table(mul_table)
    order = len(add)
    if order == 0:
        report.fail("a left brace needs at least one element.")
        return report
    for name, table in (("addition", add), ("multiplication", mul)):
        if len(table) != order or any(len(row) != order for row in table):
            report.fail(f"the {name} table isn't {order}×{order}.")
        elif any(not 0 <= entry < order for row in table for entry in row):
            report.fail(f"the {name} table has entries outside 0..{order - 1}.")
    if not report.passed:
        return report

    for a, b in itertools.combinations(range(order), 2):
        if add[a][b] != add[b][a]:
            report.fail(f"+ isn't commutative: a+b ≠ b+a for a={a}, b={b}.")
            break
    _check_group(report, add, "+", "additive")
    _check_group(report, mul, "∘", "multiplicative")
    if not report.passed:
        return report

    for a, b, c in itertools.product(range(order), repeat=3):
        if add[mul[a][add[b][c]]][a] != add[mul[a][b]][mul[a][c]]:
            report.fail(f"a∘(b+c)+a ≠ a∘b+a∘c for a={a}, b={b}, c={c}.")
            break

    neg = [add[a].index(0) for a in range(order)]
    lam = [[add[neg[a]][mul[a][b]] for b in range(order)] for a in range(order)]
    for a in range(order):
        if sorted(lam[a]) != list(range(order)):
            report.fail(f"λ_{a} isn't bijective.")
            return report
    for a, b, c in itertools.product(range(order), repeat=3):
        if lam[a][add[b][c]] != add[lam[a][b]][lam[a][c]]:
            report.fail(f"λ_a isn't additive: λ_a(b+c) ≠ λ_a(b)+λ_a(c) for a={a}, b={b}, c={c}.")
            break
    for a, b, c in itertools.product(range(order), repeat=3):
        if lam[mul[a][b]][c] != lam[a][lam[b][c]]:
            report.fail(f"λ isn't multiplicative: λ_(a∘b)(c) ≠ λ_a(λ_b(c)) for a={a}, b={b}, c={c}.")
            break
    return report


@dataclass(frozen=True)
class LeftBrace:
    """A finite left brace on {0, ..., order - 1}, 0 being neutral for both operations."""

    add_table: Table
    mul_table: Table
    neg: tuple[int, ...] = field(init=False, compare=False, repr=False)
    inv: tuple[int, ...] = field(init=False, compare=False, repr=False)
    lambda_table: Table = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        """Validate the tables and precompute inverses and the λ-maps."""
        add, mul = _as_table(self.add_table), _as_table(self.mul_table)
        report = validate_brace(add, mul)
        if not report:
            raise BraceError(report.summary())
        order = len(add)
        neg = tuple(add[a].index(0) for a in range(order))
        object.__setattr__(self, "add_table", add)
        object.__setattr__(self, "mul_table", mul)
        object.__setattr__(self, "neg", neg)
        object.__setattr__(self, "inv", tuple(mul[a].index(0) for a in range(order)))
        object.__setattr__(self, "lambda_table", tuple(tuple(add[neg[a]][mul[a][b]] for b in range(order))
                                                       for a in range(order)))

    @classmethod
    def from_tables(cls, add_table: Sequence[Sequence[int]], mul_table: Sequence[Sequence[int]]) -> LeftBrace:
        """
        Build a brace from nested sequences.

        :param add_table: add_table[a][b] = a + b.
        :param mul_table: mul_table[a][b] = a∘b.
        :return: The validated brace.
        """
        return cls(_as_table(add_table), _as_table(mul_table))

    @classmethod
    def trivial(cls, order: int) -> LeftBrace:
        """
        Return the trivial brace on Z_order, where a + b = a∘b.

        :param order: The number of elements.
        :return: The trivial cyclic brace.
        """
        table = tuple(tuple((a + b) % order for b in range(order)) for a in range(order))
        return cls(table, table)

    @property
    def order(self) -> int:
        """The number of elements."""
        return len(self.add_table)

    def add(self, a: int, b: int) -> int:
        """Return a + b."""
        return self.add_table[a][b]

    def mul(self, a: int, b: int) -> int:
        """Return a∘b."""
        return self.mul_table[a][b]


def lambda_map(brace: LeftBrace, a: int) -> Perm:
    """
    Get λ_a(b) = -a + a∘b.

    :param brace: The brace.
    :param a: An element.
    :return: λ_a as a permutation of the carrier.
    """
    return Perm(brace.lambda_table[a])


def _check_subset(brace: LeftBrace, subset: Iterable[int]) -> frozenset[int]:
    elements = frozenset(subset)
    for element in elements:
        if not 0 <= element < brace.order:
            raise BraceError(f"{element} isn't an element of a brace of order {brace.order}.")
    return elements


def is_left_ideal(brace: LeftBrace, subset: Iterable[int]) -> ValidationReport:
    """
    Check that a subset is a multiplicative subgroup closed under every λ_a.

    :param brace: The brace.
    :param subset: The candidate.
    :return: A report with a witness per failed condition.
    """
    elements = _check_subset(brace, subset)
    report = ValidationReport("left ideal")
    if 0 not in elements:
        report.fail("0 isn't in the subset.")
        return report
    mul, lam = brace.mul_table, brace.lambda_table
    for a, b in itertools.product(sorted(elements), repeat=2):
        if mul[a][b] not in elements:
            report.fail(f"not closed under ∘: {a}∘{b} = {mul[a][b]}.")
            break
    for a in sorted(elements):
        if brace.inv[a] not in elements:
            report.fail(f"not closed under inverses: {a}.")
            break
    for a, b in itertools.product(range(brace.order), sorted(elements)):
        if lam[a][b] not in elements:
            report.fail(f"not λ-invariant: λ_{a}({b}) = {lam[a][b]}.")
            break
    return report


def is_ideal(brace: LeftBrace, subset: Iterable[int]) -> ValidationReport:
    """
    Check that a subset is an ideal: a normal left ideal. Additive closure, implied by the rest, is checked too.

    :param brace: The brace.
    :param subset: The candidate.
    :return: A report with a witness per failed condition.
    """
    elements = _check_subset(brace, subset)
    report = is_left_ideal(brace, elements)
    report.subject = "ideal"
    if not report:
        return report
    add, mul, inv = brace.add_table, brace.mul_table, brace.inv
    for g, a in itertools.product(range(brace.order), sorted(elements)):
        if mul[mul[g][a]][inv[g]] not in elements:
            report.fail(f"not normal: {g}∘{a}∘{g}⁻¹ = {mul[mul[g][a]][inv[g]]}.")
            break
    for a, b in itertools.product(sorted(elements), repeat=2):
        if add[a][brace.neg[b]] not in elements:
            report.fail(f"not an additive subgroup: {a}-{b} = {add[a][brace.neg[b]]}.")
            break
    return report


def socle(brace: LeftBrace) -> frozenset[int]:
    """
    Get Soc(B) = {a | λ_a = id}.

    :param brace: The brace.
    :return: The socle, which is checked to be an ideal.
    """
    identity = tuple(range(brace.order))
    elements = frozenset(a for a in range(brace.order) if brace.lambda_table[a] == identity)
    report = is_ideal(brace, elements)
    if not report:
        raise ConsistencyError(f"the socle isn't an ideal: {report.summary()}")
    return elements


def derived_cycle_set(brace: LeftBrace) -> CycleSet:
    """
    Get the cycle set (B, ·) with a·b = λ_a⁻¹(b).

    :param brace: The brace.
    :return: The cycle set on the carrier.
    """
    return CycleSet(tuple(inverse(lambda_map(brace, a)) for a in range(brace.order)))


def lambda_orbits(brace: LeftBrace) -> list[tuple[int, ...]]:
    """
    Split the carrier into orbits of the λ-action of (B, ∘) on (B, +).

    :param brace: The brace.
    :return: The orbits, ordered by their smallest element.
    """
    return orbits((lambda_map(brace, a) for a in range(brace.order)), range(brace.order))


def additive_span(brace: LeftBrace, subset: Iterable[int]) -> frozenset[int]:
    """
    Get the additive subgroup generated by a subset.

    :param brace: The brace.
    :param subset: The generators.
    :return: The smallest subset containing `subset` and 0, closed under + and -.
    """
    generators = sorted(_check_subset(brace, subset))
    span = {0}
    queue = deque([0])
    while queue:
        element = queue.popleft()
        for generator in generators:
            total = brace.add_table[element][generator]
            if total not in span:
                span.add(total)
                queue.append(total)
    return frozenset(span)


def transitive_cycle_bases(brace: LeftBrace) -> list[tuple[int, ...]]:
    """
    Get every λ-orbit that generates the additive group.

    :param brace: The brace.
    :return: The transitive cycle bases, ordered by their smallest element.
    """
    carrier = frozenset(range(brace.order))
    return [orbit for orbit in lambda_orbits(brace) if additive_span(brace, orbit) == carrier]


def is_transitive_cycle_base(brace: LeftBrace, subset: Iterable[int]) -> bool:
    """
    Check whether a subset is a single λ-orbit generating (B, +).

    :param brace: The brace.
    :param subset: The candidate.
    :return: Whether it is a transitive cycle base.
    """
    return tuple(sorted(set(subset))) in transitive_cycle_bases(brace)


def sub_cycle_set(brace: LeftBrace, subset: Iterable[int]) -> CycleSet:
    """
    Restrict the derived cycle set to a union of λ-orbits.

    The i-th point of the result is the i-th smallest element of `subset`.

    :param brace: The brace.
    :param subset: A union of λ-orbits, so λ_a maps it to itself for every a in the brace.
    :return: The cycle set with x·y = λ_x⁻¹(y).
    """
    points = sorted(_check_subset(brace, subset))
    if not points:
        raise BraceError("a cycle set needs at least one element.")
    position = {element: index for index, element in enumerate(points)}
    for a, y in itertools.product(range(brace.order), points):
        if brace.lambda_table[a][y] not in position:
            raise BraceError(f"the subset isn't λ-closed: λ_{a}({y}) = {brace.lambda_table[a][y]}.")
    rows = []
    for x in points:
        preimage = {image: b for b, image in enumerate(brace.lambda_table[x])}
        rows.append(tuple(position[preimage[y]] for y in points))
    return CycleSet(tuple(rows))


def _invariant_closure(brace: LeftBrace, elements: set[int]) -> set[int]:
    """Close a set under every λ_g and every conjugation by g."""
    mul, inv, lam = brace.mul_table, brace.inv, brace.lambda_table
    queue = deque(elements)
    while queue:
        element = queue.popleft()
        for g in range(brace.order):
            for image in (lam[g][element], mul[mul[g][element]][inv[g]]):
                if image not in elements:
                    elements.add(image)
                    queue.append(image)
    return elements


def ideal_closure(brace: LeftBrace, subset: Iterable[int]) -> frozenset[int]:
    """
    Get the smallest ideal containing a subset.

    Alternates closing under λ and conjugation with taking the additive span until both hold.
    A λ-invariant additive subgroup is a left ideal, so the fixed point is an ideal.

    :param brace: The brace.
    :param subset: The generators.
    :return: The ideal, which is checked.
    """
    members = set(_check_subset(brace, subset)) | {0}
    while True:
        members = set(additive_span(brace, _invariant_closure(brace, members)))
        if len(_invariant_closure(brace, set(members))) == len(members):
            break
    ideal = frozenset(members)
    report = is_ideal(brace, ideal)
    if not report:
        raise ConsistencyError(f"the closure {sorted(ideal)} isn't an ideal: {report.summary()}")
    return ideal


@dataclass(frozen=True)
class IdealLattice:
    """The ideals of a brace, smallest first, with the minimal non-zero ones marked."""

    ideals: tuple[frozenset[int], ...]
    minimal: tuple[frozenset[int], ...]

    def sizes(self) -> list[int]:
        """The size of every ideal, in increasing order."""
        return [len(ideal) for ideal in self.ideals]

    def nontrivial(self) -> tuple[frozenset[int], ...]:
        """The ideals different from {0}."""
        return tuple(ideal for ideal in self.ideals if ideal != frozenset({0}))

    def __len__(self) -> int:
        return len(self.ideals)


def _ideal_key(ideal: frozenset[int]) -> tuple[int, list[int]]:
    return len(ideal), sorted(ideal)


@lru_cache(maxsize=64)
def all_ideals(brace: LeftBrace) -> IdealLattice:
    """
    Get every ideal: the principal ideals closed under pairwise join.

    Every ideal is the join of the principal ideals of its elements, so nothing is missed.

    :param brace: The brace.
    :return: The ideal lattice.
    """
    found = {frozenset({0})}
    for a in range(1, brace.order):
        found.add(ideal_closure(brace, [a]))
    changed = True
    while changed:
        changed = False
        for first, second in itertools.combinations(sorted(found, key=_ideal_key), 2):
            join = ideal_closure(brace, first | second)
            if join not in found:
                found.add(join)
                changed = True
    ideals = tuple(sorted(found, key=_ideal_key))
    nonzero = [ideal for ideal in ideals if len(ideal) > 1]
    minimal = tuple(ideal for ideal in nonzero if not any(other < ideal for other in nonzero))
    return IdealLattice(ideals, minimal)


def quotient_brace(brace: LeftBrace, ideal: Iterable[int]) -> LeftBrace:
    """
    Get B/I, the cosets of an ideal with the induced operations.

    :param brace: The brace.
    :param ideal: An ideal of it.
    :return: The quotient, cosets numbered by their smallest element.
    """
    members = _check_subset(brace, ideal)
    add, mul = brace.add_table, brace.mul_table
    coset_index: dict[int, int] = {}
    representatives = []
    for a in range(brace.order):
        if a in coset_index:
            continue
        for element in (add[a][i] for i in members):
            if element in coset_index:
                raise BraceError("the cosets overlap, so the subset isn't an additive subgroup.")
            coset_index[element] = len(representatives)
        representatives.append(a)
    if len(coset_index) != brace.order:
        raise BraceError("the cosets don't cover the brace, so the subset isn't an additive subgroup.")
    add_quotient = [[coset_index[add[a][b]] for b in representatives] for a in representatives]
    mul_quotient = [[coset_index[mul[a][b]] for b in representatives] for a in representatives]
    for a, b in itertools.product(range(brace.order), repeat=2):
        if (coset_index[add[a][b]] != add_quotient[coset_index[a]][coset_index[b]]
                or coset_index[mul[a][b]] != mul_quotient[coset_index[a]][coset_index[b]]):
            raise BraceError(f"the induced operations depend on representatives at a={a}, b={b}, "
                             f"so the subset isn't an ideal.")
    return LeftBrace.from_tables(add_quotient, mul_quotient)


def is_trivial_brace(brace: LeftBrace) -> bool:
    """
    Check whether a + b = a∘b for all a, b.

    :param brace: The brace.
    :return: Whether the brace is trivial.
    """
    return brace.add_table == brace.mul_table


def additive_order(brace: LeftBrace, a: int) -> int:
    """
    Get the order of an element in (B, +).

    :param brace: The brace.
    :param a: The element.
    :return: The smallest k > 0 with k·a = 0.
    """
    total, order = a, 1
    while total != 0:
        total = brace.add_table[total][a]
        order += 1
    return order


def is_cyclic_additive(brace: LeftBrace) -> bool:
    """
    Check whether (B, +) is cyclic.

    :param brace: The brace.
    :return: Whether one element generates the additive group.
    """
    return any(additive_order(brace, a) == brace.order for a in range(brace.order))


def is_simple_brace(brace: LeftBrace) -> bool:
    """
    Check whether {0} and B are the only ideals.

    :param brace: The brace.
    :return: Whether the brace is simple. The brace of order 1 isn't.
    """
    return brace.order > 1 and len(all_ideals(brace)) == 2


def ideal_action_orbits(brace: LeftBrace, ideal: Iterable[int], subset: Iterable[int]) -> list[tuple[int, ...]]:
    """
    Split a union of λ-orbits into orbits under {λ_i | i ∈ I}.

    These maps form a group, because λ is multiplicative and I is a subgroup.

    :param brace: The brace.
    :param ideal: An ideal.
    :param subset: A union of λ-orbits.
    :return: The orbits, as tuples of carrier elements.
    """
    return orbits((lambda_map(brace, i) for i in sorted(_check_subset(brace, ideal))), _check_subset(brace, subset))
