"""Deciding simplicity of cycle sets through the ideals of their left braces, cross-checked against brute force."""
from __future__ import annotations
from dataclasses import asdict, dataclass, field
from typing import Iterable
from braces import (LeftBrace, additive_span, all_ideals, ideal_action_orbits, is_cyclic_additive, is_ideal,
                    is_simple_brace, is_transitive_cycle_base, is_trivial_brace, quotient_brace, socle,
                    sub_cycle_set)
from cycle_sets import (CycleSet, Congruence, congruence_witness, is_indecomposable, is_irretractable,
                        is_simple_oracle, are_isomorphic, multipermutation_level, permutation_group,
                        retraction_tower, validate)
from permutation_braces import gbrace
from utils import BraceError, ConsistencyError, PreconditionError, ValidationReport, is_prime
import itertools


def _check_ideal_preconditions(brace: LeftBrace, base: tuple[int, ...]) -> None:
    if socle(brace) != frozenset({0}):
        raise PreconditionError("the socle of the brace isn't {0}.")
    if not is_transitive_cycle_base(brace, base):
        raise PreconditionError(f"{list(base)} isn't a transitive cycle base.")


def ideal_to_congruence(brace: LeftBrace, ideal: Iterable[int], base: Iterable[int]) -> Congruence:
    """
    Get the congruence on a transitive cycle base whose classes are the orbits of an ideal.

    :param brace: A brace with trivial socle.
    :param ideal: An ideal I.
    :param base: A transitive cycle base X.
    :return: The congruence on sub_cycle_set(brace, base), whose points are the elements of X in increasing order.
    """
    base = tuple(sorted(set(base)))
    ideal = frozenset(ideal)
    _check_ideal_preconditions(brace, base)
    report = is_ideal(brace, ideal)
    if not report:
        raise PreconditionError(report.summary())
    position = {element: index for index, element in enumerate(base)}
    classes = [[position[element] for element in orbit] for orbit in ideal_action_orbits(brace, ideal, base)]
    congruence = Congruence.from_classes(classes, len(base))
    witness = congruence_witness(sub_cycle_set(brace, base), congruence)
    if witness is not None:
        raise ConsistencyError(f"the orbits of the ideal {sorted(ideal)} aren't a congruence: {witness}")
    return congruence


def congruence_to_ideal(brace: LeftBrace, base: Iterable[int], congruence: Congruence) -> frozenset[int]:
    """
    Get the additive subgroup generated by the differences x - y of equivalent points of a transitive cycle base.

    :param brace: A brace with trivial socle.
    :param base: A transitive cycle base X.
    :param congruence: A congruence of sub_cycle_set(brace, base).
    :return: The subgroup, which is checked to be an ideal whose orbits refine the congruence.
    """
    base = tuple(sorted(set(base)))
    _check_ideal_preconditions(brace, base)
    if congruence.size != len(base):
        raise PreconditionError(f"the congruence is on {congruence.size} points, the base has {len(base)}.")
    witness = congruence_witness(sub_cycle_set(brace, base), congruence)
    if witness is not None:
        raise PreconditionError(f"the partition isn't a congruence: {witness}")
    differences = [brace.add(base[x], brace.neg[base[y]])
                   for x, y in itertools.product(range(len(base)), repeat=2)
                   if congruence.labels[x] == congruence.labels[y]]
    ideal = additive_span(brace, differences)
    report = is_ideal(brace, ideal)
    if not report:
        raise ConsistencyError(f"the span of the differences isn't an ideal: {report.summary()}")
    if not ideal_to_congruence(brace, ideal, base).refines(congruence):
        raise ConsistencyError(f"the orbits of {sorted(ideal)} don't refine the congruence.")
    return ideal


@dataclass
class TheoremReport:
    """The three conditions characterising simple cycle sets, with their preconditions."""

    soc_trivial: bool
    base_transitive: bool
    order_gt_1: bool
    cond1: bool
    cond2: bool
    cond3: bool
    non_transitive_ideal: list[int] | None = None
    minimal_ideals: list[list[int]] = field(default_factory=list)

    @property
    def preconditions_hold(self) -> bool:
        """Whether the brace has trivial socle, more than one element, and the base is a transitive cycle base."""
        return self.soc_trivial and self.base_transitive and self.order_gt_1

    @property
    def equivalent(self) -> bool:
        """Whether the three conditions agree."""
        return self.cond1 == self.cond2 == self.cond3

    def to_dict(self) -> dict[str, object]:
        """The report as plain data, with `equivalent` and `preconditions_hold` included."""
        result = asdict(self)
        result["preconditions_hold"] = self.preconditions_hold
        result["equivalent"] = self.equivalent
        return result


def _acts_transitively(brace: LeftBrace, ideal: frozenset[int], base: tuple[int, ...]) -> bool:
    return len(ideal_action_orbits(brace, ideal, base)) == 1


def theorem_characterization(brace: LeftBrace, base: Iterable[int]) -> TheoremReport:
    """
    Evaluate, independently, the three conditions that are equivalent for a transitive cycle base X
    of a brace with trivial socle:

    1. X is a simple cycle set (by brute force over congruences).
    2. Every non-zero ideal acts transitively on X.
    3. There is a unique minimal non-zero ideal, and it acts transitively on X.

    Nothing is assumed: the preconditions are reported, not required, and nothing raises on failure.

    :param brace: The brace B.
    :param base: A subset X of B.
    :return: The report.
    """
    base = tuple(sorted(set(base)))
    soc_trivial = socle(brace) == frozenset({0})
    base_transitive = bool(base) and is_transitive_cycle_base(brace, base)
    order_gt_1 = brace.order > 1
    try:
        cond1 = is_simple_oracle(sub_cycle_set(brace, base))
        closed = True
    except BraceError:
        # Not a union of λ-orbits, so no cycle set lives on it.
        cond1, closed = False, False
    lattice = all_ideals(brace)
    report = TheoremReport(soc_trivial, base_transitive, order_gt_1, cond1, False, False,
                           minimal_ideals=[sorted(ideal) for ideal in lattice.minimal])
    if not closed:
        return report
    report.cond2 = True
    for ideal in lattice.nontrivial():
        if not _acts_transitively(brace, ideal, base):
            report.cond2 = False
            report.non_transitive_ideal = sorted(ideal)
            break
    report.cond3 = len(lattice.minimal) == 1 and _acts_transitively(brace, lattice.minimal[0], base)
    return report


@dataclass
class PreidReport:
    """What the brace on 𝒢(X) of a simple cycle set X of non-prime size looks like."""

    minimal_ideal_sizes: list[int]
    minimal_ideal: list[int] | None
    difference_span_matches: bool
    sigma_span_matches: bool
    quotient_order: int | None
    quotient_trivial: bool
    quotient_cyclic: bool

    @property
    def passed(self) -> bool:
        """Whether the minimal ideal is unique, spanned by the differences, and the quotient is trivial and cyclic."""
        return (self.minimal_ideal is not None and self.difference_span_matches and self.quotient_trivial
                and self.quotient_cyclic)


def check_preid(cycle_set: CycleSet) -> PreidReport:
    """
    Check the shape of 𝒢(X) for a simple cycle set X of non-prime size: a unique minimal ideal I, additively
    generated by the differences of generators, with 𝒢(X)/I a trivial brace on a cyclic group.

    The differences are taken both between embedded generators e(x) - e(y) and between σ_x - σ_y.

    :param cycle_set: The cycle set.
    :return: The report.
    """
    if not is_simple_oracle(cycle_set):
        raise PreconditionError("the cycle set isn't simple.")
    if is_prime(cycle_set.size):
        raise PreconditionError(f"the size {cycle_set.size} is prime.")
    result = gbrace(cycle_set)
    brace = result.brace
    minimal = all_ideals(brace).minimal
    sigmas = [result.group.index(row) for row in cycle_set.sigma]
    spans = [additive_span(brace, [brace.add(a, brace.neg[b]) for a, b in itertools.product(generators, repeat=2)])
             for generators in (result.embed, sigmas)]
    report = PreidReport([len(ideal) for ideal in minimal], None, False, False, None, False, False)
    if len(minimal) != 1:
        return report
    ideal = minimal[0]
    report.minimal_ideal = sorted(ideal)
    report.difference_span_matches = spans[0] == ideal
    report.sigma_span_matches = spans[1] == ideal
    quotient = quotient_brace(brace, ideal)
    report.quotient_order = quotient.order
    report.quotient_trivial = is_trivial_brace(quotient)
    report.quotient_cyclic = is_cyclic_additive(quotient)
    return report


def check_corcedo(brace: LeftBrace, base: Iterable[int]) -> ValidationReport:
    """
    Check that a transitive cycle base of a simple non-trivial brace is a simple cycle set.

    :param brace: A simple brace that isn't trivial.
    :param base: A transitive cycle base X.
    :return: A report that fails when X isn't simple.
    """
    base = tuple(sorted(set(base)))
    if not is_simple_brace(brace) or is_trivial_brace(brace):
        raise PreconditionError("the brace isn't simple and non-trivial.")
    if not is_transitive_cycle_base(brace, base):
        raise PreconditionError(f"{list(base)} isn't a transitive cycle base.")
    report = ValidationReport("transitive cycle base of a simple brace")
    if not is_simple_oracle(sub_cycle_set(brace, base)):
        report.fail(f"{list(base)} isn't a simple cycle set.")
    return report


@dataclass
class ClassificationReport:
    """Which case of the classification applies to a cycle set, and its verdict."""

    size: int
    branch: str
    simple: bool
    reason: str
    oracle: bool

    def to_dict(self) -> dict[str, object]:
        """The report as plain data."""
        return asdict(self)


def classify_cycle_set(cycle_set: CycleSet) -> ClassificationReport:
    """
    Decide simplicity structurally, then check the verdict against brute force.

    - A single element isn't simple, by definition.
    - Size 2 is always simple.
    - Prime size p > 2: simple iff indecomposable, which means isomorphic to the cyclic cycle set.
    - Otherwise: simple iff irretractable, indecomposable and every non-zero ideal of 𝒢(X) acts
      transitively on the embedded copy of X.

    :param cycle_set: The cycle set.
    :return: The report.
    """
    size = cycle_set.size
    if size == 1:
        branch, simple, reason = "singleton", False, "a single element is never simple"
    elif size == 2:
        branch, simple, reason = "size-2", True, "every cycle set of size 2 is simple"
    elif is_prime(size):
        branch = "prime"
        simple = is_indecomposable(cycle_set)
        if simple != (are_isomorphic(cycle_set, CycleSet.cyclic(size)) is not None):
            raise ConsistencyError(f"an indecomposable cycle set of prime size {size} must be cyclic, and only those.")
        reason = "isomorphic to the cyclic cycle set" if simple else "decomposable"
    else:
        branch = "general"
        if not is_irretractable(cycle_set):
            simple, reason = False, "retractable"
        elif not is_indecomposable(cycle_set):
            simple, reason = False, "decomposable"
        else:
            result = gbrace(cycle_set)
            theorem = theorem_characterization(result.brace, result.embedded_base())
            if not theorem.preconditions_hold or not theorem.equivalent:
                raise ConsistencyError(f"the ideal conditions disagree on 𝒢(X): {theorem.to_dict()}")
            simple = theorem.cond2
            reason = ("every non-zero ideal of 𝒢(X) acts transitively" if simple
                      else f"the ideal {theorem.non_transitive_ideal} of 𝒢(X) doesn't act transitively")
    oracle = is_simple_oracle(cycle_set)
    if simple != oracle:
        raise ConsistencyError(f"the {branch} case says simple={simple}, brute force says simple={oracle}.")
    return ClassificationReport(size, branch, simple, reason, oracle)


def analyze_cycle_set(cycle_set: CycleSet) -> dict[str, object]:
    """
    Collect the structural facts about a cycle set.

    :param cycle_set: The cycle set.
    :return: A dictionary with the keys size, valid, indecomposable, irretractable, simple_oracle, group_order,
        ideal_sizes, theorem, classification, retraction_tower and multipermutation_level.
    """
    result = gbrace(cycle_set)
    theorem = theorem_characterization(result.brace, result.embedded_base())
    classification = classify_cycle_set(cycle_set)
    return {
        "size": cycle_set.size,
        "valid": validate(cycle_set.sigma).passed,
        "indecomposable": is_indecomposable(cycle_set),
        "irretractable": is_irretractable(cycle_set),
        "simple_oracle": is_simple_oracle(cycle_set),
        "group_order": permutation_group(cycle_set).order,
        "ideal_sizes": all_ideals(result.brace).sizes(),
        "theorem": {"cond1": theorem.cond1, "cond2": theorem.cond2, "cond3": theorem.cond3,
                    "equivalent": theorem.equivalent},
        "classification": {"branch": classification.branch, "simple": classification.simple},
        "retraction_tower": retraction_tower(cycle_set),
        "multipermutation_level": multipermutation_level(cycle_set),
    }
