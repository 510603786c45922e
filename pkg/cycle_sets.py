"""Finite non-degenerate cycle sets and the involutive solutions of the Yang-Baxter equation they encode."""
from __future__ import annotations
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence
from permutations import Perm, PermGroup, group_closure, inverse, is_transitive
from utils import CycleSetError, EnumerationError, PermutationError, SolutionError, ValidationReport, readable_number
import itertools
import multiprocessing
import sys


def _images(row: Perm | Sequence[int]) -> tuple[int, ...]:
    return row.images if isinstance(row, Perm) else tuple(row)


def validate(sigma: Sequence[Perm] | Sequence[Sequence[int]]) -> ValidationReport:
    """
    Check the cycle set axioms on a table of left multiplications.

    :param sigma: The rows σ_x, either as `Perm` or as sequences of 0-based images, so that x·y = sigma[x][y].
    :return: A report with one 1-based witness per failed axiom instance.
    """
    report = ValidationReport("cycle set")
    size = len(sigma)
    if size == 0:
        report.fail("a cycle set needs at least one element.")
        return report
    rows = []
    for x, row in enumerate(sigma):
        images = _images(row)
        if len(images) != size:
            report.fail(f"σ_{x + 1} has {len(images)} images, expected {size}.")
            continue
        try:
            Perm(images)
        except PermutationError as error:
            report.fail(f"σ_{x + 1} isn't bijective: {error}")
            continue
        rows.append(images)
    if not report.passed:
        return report

    for x, y, z in itertools.product(range(size), repeat=3):
        row_x, row_y = rows[x], rows[y]
        if rows[row_x[y]][row_x[z]] != rows[row_y[x]][row_y[z]]:
            report.fail(f"(x·y)·(x·z) ≠ (y·x)·(y·z) for x={x + 1}, y={y + 1}, z={z + 1}.")
            break

    square_of: dict[int, int] = {}
    for x in range(size):
        square = rows[x][x]
        if square in square_of:
            report.fail(f"the squaring map isn't bijective: {square_of[square] + 1}·{square_of[square] + 1} = "
                        f"{x + 1}·{x + 1} = {square + 1}.")
            break
        square_of[square] = x
    return report


@dataclass(frozen=True)
class CycleSet:
    """A finite non-degenerate cycle set, x·y = sigma[x](y). Construction validates every axiom."""

    sigma: tuple[Perm, ...]

    def __post_init__(self) -> None:
        """Validate the table and normalise the rows to `Perm`."""
        report = validate(self.sigma)
        if not report:
            raise CycleSetError(report.summary())
        object.__setattr__(self, "sigma", tuple(row if isinstance(row, Perm) else Perm(tuple(row))
                                                for row in self.sigma))

    @classmethod
    def trivial(cls, size: int) -> CycleSet:
        """
        Return the trivial cycle set, x·y = y.

        :param size: The number of elements.
        :return: The cycle set whose rows are all the identity.
        """
        return cls(tuple(Perm.identity(size) for _ in range(size)))

    @classmethod
    def cyclic(cls, size: int) -> CycleSet:
        """
        Return the cyclic cycle set, x·y = y + 1 (mod size).

        :param size: The number of elements.
        :return: The cycle set whose rows are all the same `size`-cycle.
        """
        row = Perm(tuple((point + 1) % size for point in range(size)))
        return cls(tuple(row for _ in range(size)))

    @property
    def size(self) -> int:
        """The number of elements."""
        return len(self.sigma)

    def multiply(self, x: int, y: int) -> int:
        """
        Return x·y.

        :param x: The left factor.
        :param y: The right factor.
        :return: sigma[x](y).
        """
        return self.sigma[x].images[y]

    def table(self) -> list[tuple[int, ...]]:
        """The rows of images, table()[x][y] = x·y."""
        return [row.images for row in self.sigma]

    def squaring_map(self) -> Perm:
        """The map x ↦ x·x, a bijection by non-degeneracy."""
        return Perm(tuple(self.multiply(x, x) for x in range(self.size)))


@dataclass(frozen=True)
class SolutionYBE:
    """A non-degenerate map r(x, y) = (λ_x(y), ρ_y(x)) on a finite set."""

    lambdas: tuple[Perm, ...]
    rhos: tuple[Perm, ...]

    @classmethod
    def from_rows(cls, lambda_rows: Sequence[Sequence[int]], rho_rows: Sequence[Sequence[int]]) -> SolutionYBE:
        """
        Build a solution from raw 0-based tables, rejecting degenerate ones.

        :param lambda_rows: lambda_rows[x][y] = λ_x(y).
        :param rho_rows: rho_rows[y][x] = ρ_y(x).
        :return: The solution.
        """
        maps = []
        for name, rows in (("λ", lambda_rows), ("ρ", rho_rows)):
            perms = []
            for x, row in enumerate(rows):
                try:
                    perms.append(Perm(tuple(row)))
                except PermutationError as error:
                    raise SolutionError(f"{name}_{x + 1} isn't bijective, so the solution is degenerate: {error}"
                                        ) from None
            maps.append(tuple(perms))
        return cls(maps[0], maps[1])

    @property
    def size(self) -> int:
        """The number of points."""
        return len(self.lambdas)

    def apply(self, x: int, y: int) -> tuple[int, int]:
        """
        Apply r.

        :param x: The first coordinate.
        :param y: The second coordinate.
        :return: (λ_x(y), ρ_y(x)).
        """
        return self.lambdas[x].images[y], self.rhos[y].images[x]


def validate_solution(solution: SolutionYBE) -> ValidationReport:
    """
    Check the braid relation on every triple and involutivity on every pair.

    Non-degeneracy holds by construction, since λ and ρ are stored as `Perm`.

    :param solution: The solution to check.
    :return: A report with 1-based witnesses.
    """
    report = ValidationReport("solution")
    size = solution.size
    if len(solution.rhos) != size or any(perm.degree != size for perm in solution.lambdas + solution.rhos):
        report.fail(f"every λ_x and ρ_x must act on the same {size} points.")
        return report
    apply = solution.apply
    for x, y in itertools.product(range(size), repeat=2):
        if apply(*apply(x, y)) != (x, y):
            report.fail(f"r²(x, y) ≠ (x, y) for x={x + 1}, y={y + 1}, so r isn't involutive.")
            break
    for x, y, z in itertools.product(range(size), repeat=3):
        a, b = apply(x, y)
        b, c = apply(b, z)
        a, b = apply(a, b)
        left = (a, b, c)
        b, c = apply(y, z)
        a, b = apply(x, b)
        b, c = apply(b, c)
        if left != (a, b, c):
            report.fail(f"the braid relation fails on ({x + 1}, {y + 1}, {z + 1}).")
            break
    return report


def to_solution(cycle_set: CycleSet) -> SolutionYBE:
    """
    Get the solution associated to a cycle set: r(x, y) = (σ_x⁻¹(y), σ_x⁻¹(y)·x).

    :param cycle_set: The cycle set.
    :return: The solution with λ_x = σ_x⁻¹ and ρ_y(x) = σ_{λ_x(y)}(x).
    """
    lambdas = tuple(inverse(row) for row in cycle_set.sigma)
    size = cycle_set.size
    rhos = tuple(Perm(tuple(cycle_set.multiply(lambdas[x].images[y], x) for x in range(size)))
                 for y in range(size))
    return SolutionYBE(lambdas, rhos)


def from_solution(solution: SolutionYBE) -> CycleSet:
    """
    Recover the cycle set of an involutive non-degenerate solution, σ_x = λ_x⁻¹.

    :param solution: The solution.
    :return: The cycle set whose associated solution is `solution`.
    """
    report = validate_solution(solution)
    if not report:
        raise SolutionError(report.summary())
    return CycleSet(tuple(inverse(perm) for perm in solution.lambdas))


@lru_cache(maxsize=256)
def permutation_group(cycle_set: CycleSet) -> PermGroup:
    """
    Get 𝒢(X), the permutation group generated by the left multiplications.

    :param cycle_set: The cycle set.
    :return: The group, element 0 being the identity.
    """
    return group_closure(cycle_set.sigma, cycle_set.size)


def is_indecomposable(cycle_set: CycleSet) -> bool:
    """
    Check whether 𝒢(X) acts transitively on X.

    :param cycle_set: The cycle set.
    :return: Whether the cycle set is indecomposable.
    """
    return is_transitive(permutation_group(cycle_set))


@dataclass(frozen=True)
class Congruence:
    """A partition of {0, ..., n - 1}, stored by mapping every point to the smallest point of its class."""

    labels: tuple[int, ...]

    @classmethod
    def discrete(cls, size: int) -> Congruence:
        """The partition into singletons."""
        return cls(tuple(range(size)))

    @classmethod
    def full(cls, size: int) -> Congruence:
        """The partition with a single class."""
        return cls((0,) * size)

    @classmethod
    def from_classes(cls, classes: Iterable[Iterable[int]], size: int) -> Congruence:
        """
        Build the canonical labelling of a partition.

        :param classes: Disjoint classes covering {0, ..., size - 1}.
        :param size: The number of points.
        :return: The partition.
        """
        labels = [-1] * size
        for cls_points in classes:
            members = sorted(cls_points)
            for point in members:
                if labels[point] != -1:
                    raise CycleSetError(f"point {point + 1} is in two classes.")
                labels[point] = members[0]
        if -1 in labels:
            raise CycleSetError(f"point {labels.index(-1) + 1} is in no class.")
        return cls(tuple(labels))

    @property
    def size(self) -> int:
        """The number of points."""
        return len(self.labels)

    def classes(self) -> list[tuple[int, ...]]:
        """The classes, ordered by their smallest point."""
        grouped: dict[int, list[int]] = {}
        for point, label in enumerate(self.labels):
            grouped.setdefault(label, []).append(point)
        return [tuple(grouped[label]) for label in sorted(grouped)]

    def class_index(self) -> tuple[int, ...]:
        """The index, in `classes()`, of the class of every point."""
        order = {label: index for index, label in enumerate(sorted(set(self.labels)))}
        return tuple(order[label] for label in self.labels)

    def is_discrete(self) -> bool:
        """Whether every class is a singleton."""
        return len(set(self.labels)) == self.size

    def is_full(self) -> bool:
        """Whether there is a single class."""
        return len(set(self.labels)) == 1

    def refines(self, other: Congruence) -> bool:
        """
        Check whether x ∼ y implies x ∼' y.

        :param other: The coarser candidate.
        :return: Whether every class of this partition lies inside a class of `other`.
        """
        return all(other.labels[point] == other.labels[label] for point, label in enumerate(self.labels))


def congruence_witness(cycle_set: CycleSet, congruence: Congruence) -> str | None:
    """
    Look for a violation of x ∼ y and x' ∼ y' implies x·x' ∼ y·y'.

    Checking every point against the smallest point of its class, from both sides, is enough.

    :param cycle_set: The cycle set.
    :param congruence: The candidate partition.
    :return: A description of a violation, or None if the partition is a congruence.
    """
    labels = congruence.labels
    rows = cycle_set.table()
    for x, representative in enumerate(labels):
        if x == representative:
            continue
        for z in range(cycle_set.size):
            if labels[rows[x][z]] != labels[rows[representative][z]]:
                return f"{x + 1} ∼ {representative + 1} but {x + 1}·{z + 1} ≁ {representative + 1}·{z + 1}."
            if labels[rows[z][x]] != labels[rows[z][representative]]:
                return f"{x + 1} ∼ {representative + 1} but {z + 1}·{x + 1} ≁ {z + 1}·{representative + 1}."
    return None


def congruence_closure(cycle_set: CycleSet, pairs: Iterable[tuple[int, int]]) -> Congruence:
    """
    Get the smallest congruence containing some pairs.

    Union-find, rescanning until stable: whenever a ∼ b, merge a·c with b·c and c·a with c·b for every c.

    :param cycle_set: The cycle set.
    :param pairs: 0-based pairs of points to identify.
    :return: The generated congruence.
    """
    size = cycle_set.size
    rows = cycle_set.table()
    parent = list(range(size))

    def find(point: int) -> int:
        while parent[point] != point:
            parent[point] = parent[parent[point]]
            point = parent[point]
        return point

    def union(a: int, b: int) -> bool:
        root_a, root_b = find(a), find(b)
        if root_a == root_b:
            return False
        # The smaller root wins, so every root is the smallest point of its class.
        if root_a < root_b:
            parent[root_b] = root_a
        else:
            parent[root_a] = root_b
        return True

    for a, b in pairs:
        if not (0 <= a < size and 0 <= b < size):
            raise CycleSetError(f"pair ({a + 1}, {b + 1}) is out of range.")
        union(a, b)

    changed = True
    while changed:
        changed = False
        for x in range(size):
            root = find(x)
            if root == x:
                continue
            row_x, row_root = rows[x], rows[root]
            for z in range(size):
                changed |= union(row_x[z], row_root[z])
                changed |= union(rows[z][x], rows[z][root])
    return Congruence(tuple(find(x) for x in range(size)))


def _pairs_of(congruence: Congruence) -> list[tuple[int, int]]:
    return [(point, label) for point, label in enumerate(congruence.labels) if point != label]


def all_congruences(cycle_set: CycleSet) -> list[Congruence]:
    """
    Get every congruence: the principal ones closed under join.

    :param cycle_set: The cycle set.
    :return: The congruences, coarsest last.
    """
    size = cycle_set.size
    found = {Congruence.discrete(size)}
    for x, y in itertools.combinations(range(size), 2):
        found.add(congruence_closure(cycle_set, [(x, y)]))
    changed = True
    while changed:
        changed = False
        for first, second in itertools.combinations(sorted(found, key=lambda c: c.labels), 2):
            join = congruence_closure(cycle_set, _pairs_of(first) + _pairs_of(second))
            if join not in found:
                found.add(join)
                changed = True
    return sorted(found, key=lambda c: (-len(set(c.labels)), c.labels))


def quotient(cycle_set: CycleSet, congruence: Congruence) -> CycleSet:
    """
    Get the quotient cycle set, [x]·[y] = [x·y].

    :param cycle_set: The cycle set.
    :param congruence: A congruence of it.
    :return: The quotient, with classes numbered by `congruence.classes()`.
    """
    if congruence.size != cycle_set.size:
        raise CycleSetError(f"the partition is on {congruence.size} points, the cycle set has {cycle_set.size}.")
    classes = congruence.classes()
    index = congruence.class_index()
    rows = [tuple(index[cycle_set.multiply(cls_x[0], cls_y[0])] for cls_y in classes) for cls_x in classes]
    for x, y in itertools.product(range(cycle_set.size), repeat=2):
        if index[cycle_set.multiply(x, y)] != rows[index[x]][index[y]]:
            raise CycleSetError(f"the product of classes depends on representatives at x={x + 1}, y={y + 1}, "
                                f"so the partition isn't a congruence.")
    return CycleSet(tuple(rows))


def retraction_congruence(cycle_set: CycleSet) -> Congruence:
    """
    Get the retract relation, x ∼ y iff σ_x = σ_y.

    :param cycle_set: The cycle set.
    :return: The relation as a partition.
    """
    first_with_row: dict[Perm, int] = {}
    return Congruence(tuple(first_with_row.setdefault(row, x) for x, row in enumerate(cycle_set.sigma)))


def retraction(cycle_set: CycleSet) -> tuple[CycleSet, tuple[int, ...]]:
    """
    Get Ret(X), the quotient by equal left multiplications.

    :param cycle_set: The cycle set.
    :return: The retraction and the projection sending each point to its class index.
    """
    congruence = retraction_congruence(cycle_set)
    return quotient(cycle_set, congruence), congruence.class_index()


def is_irretractable(cycle_set: CycleSet) -> bool:
    """
    Check whether Ret(X) = X.

    :param cycle_set: The cycle set.
    :return: Whether the left multiplications are pairwise distinct.
    """
    return len(set(cycle_set.sigma)) == cycle_set.size


def retraction_tower(cycle_set: CycleSet) -> list[int]:
    """
    Get the sizes of X, Ret(X), Ret²(X), ... until a singleton or a fixed point.

    :param cycle_set: The cycle set.
    :return: The strictly decreasing sizes.
    """
    sizes = [cycle_set.size]
    while cycle_set.size > 1 and not is_irretractable(cycle_set):
        cycle_set = retraction(cycle_set)[0]
        sizes.append(cycle_set.size)
    return sizes


def multipermutation_level(cycle_set: CycleSet) -> int | None:
    """
    Get the smallest k with |Ret^k(X)| = 1.

    :param cycle_set: The cycle set.
    :return: k, or None when the retractions stop at an irretractable cycle set with more than one element.
    """
    sizes = retraction_tower(cycle_set)
    return len(sizes) - 1 if sizes[-1] == 1 else None


@lru_cache(maxsize=256)
def is_simple_oracle(cycle_set: CycleSet) -> bool:
    """
    Decide simplicity by brute force: a proper congruence exists iff some principal congruence is proper.

    :param cycle_set: The cycle set.
    :return: Whether |X| > 1 and the only congruences are the discrete and the full one.
    """
    if cycle_set.size < 2:
        return False
    return all(congruence_closure(cycle_set, [(x, y)]).is_full()
               for x, y in itertools.combinations(range(cycle_set.size), 2))


def relabel(cycle_set: CycleSet, bijection: Sequence[int]) -> CycleSet:
    """
    Transport a cycle set along a bijection f, so that f becomes an isomorphism.

    :param cycle_set: The cycle set.
    :param bijection: bijection[x] = f(x), 0-based.
    :return: The cycle set with f(x)·f(y) = f(x·y).
    """
    size = cycle_set.size
    if sorted(bijection) != list(range(size)):
        raise PermutationError("the relabelling isn't a bijection of the points.")
    rows = [[0] * size for _ in range(size)]
    for x, y in itertools.product(range(size), repeat=2):
        rows[bijection[x]][bijection[y]] = bijection[cycle_set.multiply(x, y)]
    return CycleSet(tuple(tuple(row) for row in rows))


def _point_invariants(cycle_set: CycleSet) -> list[tuple[tuple[int, ...], bool]]:
    return [(row.cycle_type(), row(x) == x) for x, row in enumerate(cycle_set.sigma)]


def isomorphism_invariant(cycle_set: CycleSet) -> tuple[object, ...]:
    """
    Get a value shared by isomorphic cycle sets.

    :param cycle_set: The cycle set.
    :return: The sorted point invariants and the cycle type of the squaring map.
    """
    return tuple(sorted(_point_invariants(cycle_set))), cycle_set.squaring_map().cycle_type()


def are_isomorphic(first: CycleSet, second: CycleSet) -> tuple[int, ...] | None:
    """
    Search for an isomorphism by backtracking, propagating f(x·y) = f(x)·f(y) after every choice.

    :param first: The source cycle set.
    :param second: The target cycle set.
    :return: The bijection as a tuple of images, or None if the cycle sets aren't isomorphic.
    """
    size = first.size
    if size != second.size or isomorphism_invariant(first) != isomorphism_invariant(second):
        return None
    source_invariants = _point_invariants(first)
    target_invariants = _point_invariants(second)
    source, target = first.table(), second.table()

    def propagate(mapping: dict[int, int], used: set[int], x: int, image: int) -> bool:
        queue = [(x, image)]
        while queue:
            point, value = queue.pop()
            if point in mapping:
                if mapping[point] != value:
                    return False
                continue
            if value in used or source_invariants[point] != target_invariants[value]:
                return False
            mapping[point] = value
            used.add(value)
            for other, other_value in list(mapping.items()):
                queue.append((source[point][other], target[value][other_value]))
                queue.append((source[other][point], target[other_value][value]))
        return True

    def search(mapping: dict[int, int], used: set[int]) -> dict[int, int] | None:
        if len(mapping) == size:
            return mapping
        x = min(point for point in range(size) if point not in mapping)
        for image in range(size):
            if image in used or source_invariants[x] != target_invariants[image]:
                continue
            new_mapping, new_used = dict(mapping), set(used)
            if propagate(new_mapping, new_used, x, image):
                result = search(new_mapping, new_used)
                if result is not None:
                    return result
        return None

    found = search({}, set())
    return None if found is None else tuple(found[x] for x in range(size))


def _partial_identity_holds(rows: list[tuple[int, ...]]) -> bool:
    """
    Check the cycle set identity on the triples that the assigned rows decide and that involve the newest row.

    :param rows: The rows σ_0, ..., σ_k assigned so far.
    :return: Whether no decided triple fails.
    """
    newest = len(rows) - 1
    size = len(rows[0])
    for x in range(newest + 1):
        row_x = rows[x]
        for y in range(newest + 1):
            a, b = row_x[y], rows[y][x]
            if a > newest or b > newest or newest not in (x, y, a, b):
                continue
            row_a, row_b, row_y = rows[a], rows[b], rows[y]
            for z in range(size):
                if row_a[row_x[z]] != row_b[row_y[z]]:
                    return False
    return True


def _extend_rows(rows: list[tuple[int, ...]], candidates: list[tuple[int, ...]], size: int
                 ) -> Iterator[tuple[tuple[int, ...], ...]]:
    if len(rows) == size:
        yield tuple(rows)
        return
    squares = {row[x] for x, row in enumerate(rows)}
    for candidate in candidates:
        if candidate[len(rows)] in squares:  # The squaring map must stay injective.
            continue
        rows.append(candidate)
        if _partial_identity_holds(rows):
            yield from _extend_rows(rows, candidates, size)
        rows.pop()


def _enumerate_from_first_rows(size: int, first_rows: list[tuple[int, ...]], print_info: bool = False
                               ) -> list[tuple[tuple[int, ...], ...]]:
    candidates = list(itertools.permutations(range(size)))
    tables = []
    for done, first_row in enumerate(first_rows):
        if _partial_identity_holds([first_row]):
            tables.extend(_extend_rows([first_row], candidates, size))
        if print_info:
            print(f"First rows searched: {readable_number(done + 1)}/{readable_number(len(first_rows))}, "
                  f"cycle sets found: {readable_number(len(tables))}", file=sys.stderr)
    return tables


def _enumerate_worker(results: multiprocessing.Queue[list[tuple[tuple[int, ...], ...]]], size: int,
                      first_rows: list[tuple[int, ...]]) -> None:
    """
    Enumerate the tables starting with some first rows. Used inside multiprocessing. Don't use this function directly.

    :param results: Where to put the tables found.
    :param size: The number of elements.
    :param first_rows: The choices of σ_0 this worker is responsible for.
    """
    results.put(_enumerate_from_first_rows(size, first_rows))


def _enumerate_tables(size: int, cores: int, print_info: bool) -> list[tuple[tuple[int, ...], ...]]:
    first_rows = list(itertools.permutations(range(size)))
    if cores <= 1:
        return _enumerate_from_first_rows(size, first_rows, print_info)
    results: multiprocessing.Queue[list[tuple[tuple[int, ...], ...]]] = multiprocessing.Queue()
    worker_pool = []
    for core in range(cores):
        p = multiprocessing.Process(target=_enumerate_worker, args=(results, size, first_rows[core::cores]))
        p.start()
        worker_pool.append(p)
    tables = []
    for _ in range(cores):
        tables.extend(results.get())
    for p in worker_pool:
        p.join()
    # Sorting restores the order of the single-process search.
    return sorted(tables)


def enumerate_cycle_sets(size: int, up_to_iso: bool = False, max_size: int = 5, cores: int = 1,
                         print_info: bool = False) -> Iterator[CycleSet]:
    """
    Enumerate every non-degenerate cycle set on {0, ..., size - 1}, building the table row by row.

    :param size: The number of elements.
    :param up_to_iso: Whether to keep only the first cycle set of every isomorphism class.
    :param max_size: The size guard. The search is exponential in the size.
    :param cores: How many processes to shard the search over (by the choice of σ_0). The output doesn't depend on it.
    :param print_info: Whether to print progress to standard error.
    :return: The cycle sets, in lexicographic order of their tables.
    """
    if size < 1:
        raise EnumerationError("cycle sets need at least one element.")
    if size > max_size:
        raise EnumerationError(f"size {size} exceeds the enumeration guard of {max_size}.")
    return _filter_cycle_sets(_enumerate_tables(size, cores, print_info), up_to_iso)


def _filter_cycle_sets(tables: list[tuple[tuple[int, ...], ...]], up_to_iso: bool) -> Iterator[CycleSet]:
    representatives: dict[tuple[object, ...], list[CycleSet]] = {}
    for table in tables:
        cycle_set = CycleSet(table)
        if up_to_iso:
            bucket = representatives.setdefault(isomorphism_invariant(cycle_set), [])
            if any(are_isomorphic(cycle_set, other) is not None for other in bucket):
                continue
            bucket.append(cycle_set)
        yield cycle_set
