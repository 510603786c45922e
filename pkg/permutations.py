"""Permutations of {0, ..., n - 1} and the permutation groups they generate."""
from __future__ import annotations
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence
from utils import PermutationError


@dataclass(frozen=True)
class Perm:
    """A bijection of {0, ..., degree - 1}, stored as its tuple of images."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        """Check that the images form a bijection."""
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if not images:
            raise PermutationError("a permutation needs a positive degree.")
        if sorted(images) != list(range(len(images))):
            seen: set[int] = set()
            for point, image in enumerate(images):
                if not 0 <= image < len(images):
                    raise PermutationError(f"image {image + 1} of point {point + 1} is out of range.")
                if image in seen:
                    raise PermutationError(f"image {image + 1} is repeated, so the map isn't injective.")
                seen.add(image)

    @classmethod
    def identity(cls, degree: int) -> Perm:
        """
        Return the identity permutation.

        :param degree: The number of points.
        :return: The identity on {0, ..., degree - 1}.
        """
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> Perm:
        """
        Build a permutation from disjoint cycles of 0-based points.

        :param cycles: The cycles, e.g. [(0, 1, 2), (3, 4)]. Points not mentioned are fixed.
        :param degree: The number of points.
        :return: The permutation sending each point to the next one in its cycle.
        """
        images = list(range(degree))
        for cycle in cycles:
            for index, point in enumerate(cycle):
                images[point] = cycle[(index + 1) % len(cycle)]
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        """The number of points the permutation acts on."""
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def is_identity(self) -> bool:
        """Whether every point is fixed."""
        return all(point == image for point, image in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """
        Return the non-trivial cycles, each starting at its smallest point.

        :return: The cycles ordered by their smallest point.
        """
        seen = [False] * self.degree
        cycles = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            point = self.images[start]
            while point != start:
                cycle.append(point)
                seen[point] = True
                point = self.images[point]
            if len(cycle) > 1:
                cycles.append(tuple(cycle))
        return cycles

    def cycle_type(self) -> tuple[int, ...]:
        """
        Return the cycle lengths, fixed points included, in decreasing order.

        :return: A partition of the degree. Conjugate permutations share it.
        """
        lengths = [len(cycle) for cycle in self.cycles()]
        fixed = self.degree - sum(lengths)
        return tuple(sorted(lengths, reverse=True)) + (1,) * fixed

    def __str__(self) -> str:
        """Cycle notation with 1-based points, e.g. "(1,2,3)(4,5)", or "()" for the identity."""
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + ",".join(str(point + 1) for point in cycle) + ")" for cycle in cycles)


def compose(p: Perm, q: Perm) -> Perm:
    """
    Compose two permutations, applying `q` first: (p∘q)(i) = p(q(i)).

    :param p: The permutation applied second.
    :param q: The permutation applied first.
    :return: The composition p∘q.
    """
    if p.degree != q.degree:
        raise PermutationError(f"can't compose permutations of degrees {p.degree} and {q.degree}.")
    p_images = p.images
    return Perm(tuple(p_images[image] for image in q.images))


def inverse(p: Perm) -> Perm:
    """
    Invert a permutation.

    :param p: The permutation.
    :return: The permutation q with compose(p, q) the identity.
    """
    images = [0] * p.degree
    for point, image in enumerate(p.images):
        images[image] = point
    return Perm(tuple(images))


@dataclass(frozen=True)
class PermGroup:
    """A finite permutation group, stored as the full list of its elements in discovery order."""

    degree: int
    generators: tuple[Perm, ...]
    elements: tuple[Perm, ...]
    element_index: dict[Perm, int] = field(compare=False, hash=False, repr=False)

    @property
    def order(self) -> int:
        """The number of elements."""
        return len(self.elements)

    def index(self, element: Perm) -> int:
        """
        Get the id of an element.

        :param element: A permutation in the group.
        :return: Its position in discovery order (the identity is 0).
        """
        try:
            return self.element_index[element]
        except KeyError:
            raise PermutationError(f"{element} isn't in the group.") from None

    def __contains__(self, element: object) -> bool:
        return element in self.element_index


def group_closure(generators: Sequence[Perm], degree: int | None = None) -> PermGroup:
    """
    Generate a permutation group by breadth-first closure under right multiplication by the generators.

    Finite degree makes closure under composition enough: inverses are powers.

    :param generators: The generators. They must share a degree.
    :param degree: The degree, needed only when there are no generators.
    :return: The group, with the identity as element 0 and the other ids in discovery order.
    """
    generators = tuple(generators)
    if degree is None:
        if not generators:
            raise PermutationError("the degree is needed to close an empty set of generators.")
        degree = generators[0].degree
    for generator in generators:
        if generator.degree != degree:
            raise PermutationError(f"generator {generator} doesn't have degree {degree}.")
    identity = Perm.identity(degree)
    elements = [identity]
    element_index = {identity: 0}
    queue = deque([identity])
    while queue:
        element = queue.popleft()
        for generator in generators:
            product = compose(element, generator)
            if product not in element_index:
                element_index[product] = len(elements)
                elements.append(product)
                queue.append(product)
    return PermGroup(degree, generators, tuple(elements), element_index)


def orbits(perms: Iterable[Perm], points: Iterable[int]) -> list[tuple[int, ...]]:
    """
    Split points into orbits under the group generated by some permutations.

    :param perms: The permutations. Closing them under composition doesn't change the orbits of a finite group.
    :param points: The points to split. They must be a union of orbits.
    :return: The orbits, each sorted, ordered by their smallest point.
    """
    perms = list(perms)
    points = sorted(set(points))
    allowed = set(points)
    seen: set[int] = set()
    result = []
    for start in points:
        if start in seen:
            continue
        orbit = {start}
        queue = deque([start])
        while queue:
            point = queue.popleft()
            for perm in perms:
                image = perm(point)
                if image not in orbit:
                    if image not in allowed:
                        raise PermutationError(f"point {image + 1} leaves the given point set, "
                                               f"which isn't a union of orbits.")
                    orbit.add(image)
                    queue.append(image)
        seen |= orbit
        result.append(tuple(sorted(orbit)))
    return result


def is_transitive(group: PermGroup, points: Iterable[int] | None = None) -> bool:
    """
    Check whether a group has a single orbit on a set of points.

    :param group: The permutation group.
    :param points: The points. Defaults to every point of the group's degree.
    :return: Whether `points` is non-empty and forms one orbit.
    """
    points = list(range(group.degree)) if points is None else list(points)
    if not points:
        return False
    return len(orbits(group.generators, points)) == 1
