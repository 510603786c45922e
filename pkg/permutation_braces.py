"""The left brace on the permutation group 𝒢(X) of a cycle set, and checks of its universal properties."""
from __future__ import annotations
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable
from braces import LeftBrace, derived_cycle_set, is_transitive_cycle_base, socle, sub_cycle_set
from cycle_sets import CycleSet, permutation_group
from permutations import PermGroup, compose, inverse
from utils import BraceError, ConsistencyError, ValidationReport
import itertools


@dataclass(frozen=True)
class GBraceResult:
    """
    The brace (𝒢(X), +, ∘) together with the embedding of X.

    Element ids are the ids of `group`: 0 is the identity and the multiplication is composition.
    """

    cycle_set: CycleSet
    group: PermGroup
    brace: LeftBrace
    embed: tuple[int, ...]
    additive_words: tuple[tuple[int, ...], ...]

    def embedded_base(self) -> tuple[int, ...]:
        """The image of X, sorted. It is a union of λ-orbits."""
        return tuple(sorted(set(self.embed)))


@lru_cache(maxsize=64)
def gbrace(cycle_set: CycleSet) -> GBraceResult:
    """
    Build the left brace on 𝒢(X).

    X embeds through e(x) = σ_x⁻¹, and λ_g(e(x)) = e(g(x)). So adding a generator is g + e(z) = g∘e(g⁻¹(z)),
    and g + h folds the generators of a word for h found by breadth-first search from the identity.
    The tables are validated, not trusted.

    :param cycle_set: The cycle set X.
    :return: The brace, its group and the embedding.
    """
    group = permutation_group(cycle_set)
    size, order = cycle_set.size, group.order
    embed = tuple(group.index(inverse(row)) for row in cycle_set.sigma)
    elements = group.elements
    mul = tuple(tuple(group.index(compose(g, h)) for h in elements) for g in elements)

    inverses = [inverse(g) for g in elements]
    step = [[mul[g][embed[inverses[g](z)]] for z in range(size)] for g in range(order)]

    words: list[tuple[int, ...] | None] = [None] * order
    words[0] = ()
    queue = deque([0])
    while queue:
        g = queue.popleft()
        for z in range(size):
            total = step[g][z]
            if words[total] is None:
                words[total] = words[g] + (z,)
                queue.append(total)
    reached = sum(word is not None for word in words)
    if reached != order:
        raise BraceError(f"the generators add up to {reached} of the {order} elements of 𝒢(X).")

    add = []
    for g in range(order):
        row = []
        for h in range(order):
            total = g
            for z in words[h]:
                total = step[total][z]
            row.append(total)
        add.append(tuple(row))
    try:
        brace = LeftBrace(tuple(add), mul)
    except BraceError as error:
        raise BraceError(f"the tables built on 𝒢(X) aren't a brace: {error}") from None

    lam = brace.lambda_table
    for g, x in itertools.product(range(order), range(size)):
        if lam[g][embed[x]] != embed[elements[g](x)]:
            raise ConsistencyError(f"λ_g(e(x)) ≠ e(g(x)) for g={elements[g]}, x={x + 1}.")
    return GBraceResult(cycle_set, group, brace, embed, tuple(words))


def check_prelcar(brace: LeftBrace, base: Iterable[int]) -> tuple[ValidationReport, tuple[int, ...] | None]:
    """
    Check that a brace with trivial socle is isomorphic to the brace on 𝒢 of a transitive cycle base.

    The map sending the generator of 𝒢 for x to x in B is extended along right multiplication by generators,
    then checked to be well defined, bijective, and to preserve + and ∘.

    :param brace: The brace B.
    :param base: A transitive cycle base X of B.
    :return: A report and, when it passes, the isomorphism as the image in B of every element id of 𝒢(X).
    """
    base = tuple(sorted(set(base)))
    preconditions = ValidationReport("preconditions")
    if brace.order < 2:
        preconditions.fail("the brace has a single element.")
    if socle(brace) != frozenset({0}):
        preconditions.fail("the socle isn't {0}.")
    if not is_transitive_cycle_base(brace, base):
        preconditions.fail(f"{list(base)} isn't a transitive cycle base.")
    if not preconditions:
        return preconditions, None

    report = ValidationReport("isomorphism")
    result = gbrace(sub_cycle_set(brace, base))
    group_brace = result.brace
    if group_brace.order != brace.order:
        report.fail(f"𝒢(X) has order {group_brace.order}, the brace has order {brace.order}.")
        return report, None

    image: list[int | None] = [None] * group_brace.order
    image[0] = 0
    queue = deque([0])
    while queue and report:
        g = queue.popleft()
        for position, element in enumerate(base):
            product = group_brace.mul_table[g][result.embed[position]]
            value = brace.mul_table[image[g]][element]
            if image[product] is None:
                image[product] = value
                queue.append(product)
            elif image[product] != value:
                report.fail(f"the map isn't well defined at element {product} of 𝒢(X).")
                break
    if not report:
        return report, None
    if None in image or len(set(image)) != brace.order:
        report.fail("the map isn't bijective.")
        return report, None
    for g, h in itertools.product(range(brace.order), repeat=2):
        if image[group_brace.mul_table[g][h]] != brace.mul_table[image[g]][image[h]]:
            report.fail(f"the map doesn't preserve ∘ at ({g}, {h}).")
            break
    for g, h in itertools.product(range(brace.order), repeat=2):
        if image[group_brace.add_table[g][h]] != brace.add_table[image[g]][image[h]]:
            report.fail(f"the map doesn't preserve + at ({g}, {h}).")
            break
    return report, (tuple(image) if report else None)


def socle_quotient_check(brace: LeftBrace) -> ValidationReport:
    """
    Check that a ↦ λ_a is a surjective brace homomorphism onto 𝒢 of the derived cycle set, with kernel Soc(A).

    λ_a is the embedded generator e(a) = σ_a⁻¹.

    :param brace: The brace A.
    :return: A report with a witness on failure.
    """
    report = ValidationReport("socle quotient")
    result = gbrace(derived_cycle_set(brace))
    image = result.embed
    target = result.brace
    for a, b in itertools.product(range(brace.order), repeat=2):
        if image[brace.mul_table[a][b]] != target.mul_table[image[a]][image[b]]:
            report.fail(f"λ doesn't preserve ∘ at ({a}, {b}).")
            break
    for a, b in itertools.product(range(brace.order), repeat=2):
        if image[brace.add_table[a][b]] != target.add_table[image[a]][image[b]]:
            report.fail(f"λ doesn't preserve + at ({a}, {b}).")
            break
    if len(set(image)) != target.order:
        report.fail(f"λ reaches {len(set(image))} of the {target.order} elements of 𝒢(A).")
    kernel = frozenset(a for a in range(brace.order) if image[a] == 0)
    if kernel != socle(brace):
        report.fail(f"the kernel {sorted(kernel)} isn't the socle {sorted(socle(brace))}.")
    return report
