"""Test cycle sets, their solutions, congruences, retractions and enumeration."""
from catalog import catalog
from cycle_sets import (Congruence, CycleSet, SolutionYBE, all_congruences, are_isomorphic, congruence_closure,
                        congruence_witness, enumerate_cycle_sets, from_solution, is_indecomposable,
                        is_irretractable, is_simple_oracle, multipermutation_level, permutation_group, quotient,
                        relabel, retraction, retraction_tower, to_solution, validate, validate_solution)
from permutations import Perm
from utils import CycleSetError, EnumerationError, SolutionError
import itertools
import pytest

SWAP = Perm((1, 0))
IDENTITY = Perm((0, 1))


def test_validate(p4: CycleSet) -> None:
    """Test the axioms and their witnesses."""
    assert validate(p4.sigma)
    assert validate([SWAP, SWAP])
    assert validate([IDENTITY, IDENTITY])

    report = validate([IDENTITY, SWAP])
    assert not report
    assert "x=1, y=2, z=1" in report.summary()
    with pytest.raises(CycleSetError):
        CycleSet((IDENTITY, SWAP))

    assert not validate([(0, 1), (0, 0)])
    assert not validate([(0, 1, 2), (1, 0)])
    assert not validate([])


def test_models() -> None:
    """Test the trivial and cyclic cycle sets."""
    trivial = CycleSet.trivial(3)
    assert trivial.multiply(2, 1) == 1
    assert not is_indecomposable(trivial)
    assert not is_irretractable(trivial)
    assert retraction_tower(trivial) == [3, 1]
    assert multipermutation_level(trivial) == 1
    assert not is_simple_oracle(trivial)

    cyclic = CycleSet.cyclic(5)
    assert is_indecomposable(cyclic)
    assert not is_irretractable(cyclic)
    assert multipermutation_level(cyclic) == 1
    assert is_simple_oracle(cyclic)
    assert permutation_group(cyclic).order == 5
    assert cyclic.squaring_map().images == (1, 2, 3, 4, 0)

    assert not is_simple_oracle(CycleSet.trivial(1))
    assert is_simple_oracle(CycleSet.trivial(2))


def test_p4(p4: CycleSet) -> None:
    """Test the smallest simple cycle set of non-prime size."""
    assert p4.size == 4
    assert is_indecomposable(p4)
    assert is_irretractable(p4)
    assert is_simple_oracle(p4)
    assert permutation_group(p4).order == 8
    assert retraction_tower(p4) == [4]
    assert multipermutation_level(p4) is None
    assert retraction(p4)[0] == p4


def test_solutions() -> None:
    """Test the correspondence between cycle sets and solutions on every catalog entry."""
    for entry in catalog():
        solution = to_solution(entry.cycle_set)
        assert validate_solution(solution), entry.id
        assert from_solution(solution) == entry.cycle_set

    flip = to_solution(CycleSet.trivial(3))
    assert flip.apply(0, 2) == (2, 0)


def test_invalid_solutions() -> None:
    """Test the rejection of maps that aren't involutive non-degenerate solutions."""
    not_involutive = SolutionYBE((IDENTITY, IDENTITY), (SWAP, SWAP))
    report = validate_solution(not_involutive)
    assert not report
    assert "involutive" in report.summary()
    with pytest.raises(SolutionError):
        from_solution(not_involutive)

    with pytest.raises(SolutionError):
        SolutionYBE.from_rows([[0, 0], [0, 1]], [[0, 1], [0, 1]])
    assert SolutionYBE.from_rows([[0, 1], [0, 1]], [[0, 1], [0, 1]]).size == 2


def test_congruences(p4: CycleSet) -> None:
    """Test congruence closures, quotients and the congruence lattice."""
    trivial = CycleSet.trivial(3)
    assert congruence_closure(trivial, [(0, 1)]).labels == (0, 0, 2)
    assert congruence_closure(trivial, [(2, 1)]).classes() == [(0,), (1, 2)]

    congruences = all_congruences(trivial)
    assert len(congruences) == 5
    assert congruences[0].is_discrete()
    assert congruences[-1].is_full()

    for x, y in itertools.combinations(range(4), 2):
        assert congruence_closure(p4, [(x, y)]).is_full()
    assert all_congruences(p4) == [Congruence.discrete(4), Congruence.full(4)]

    halves = Congruence.from_classes([[0, 1], [2, 3]], 4)
    assert quotient(CycleSet.trivial(4), halves) == CycleSet.trivial(2)
    assert halves.refines(Congruence.full(4))
    assert not Congruence.full(4).refines(halves)

    cyclic = CycleSet.cyclic(3)
    uneven = Congruence.from_classes([[0, 1], [2]], 3)
    assert congruence_witness(cyclic, uneven) is not None
    assert congruence_witness(cyclic, Congruence.full(3)) is None
    with pytest.raises(CycleSetError):
        quotient(cyclic, uneven)
    with pytest.raises(CycleSetError):
        Congruence.from_classes([[0, 1], [1, 2]], 3)


def test_isomorphism(p4: CycleSet) -> None:
    """Test relabelling and the isomorphism search."""
    relabelled = relabel(p4, (3, 0, 2, 1))
    assert relabelled != p4
    bijection = are_isomorphic(p4, relabelled)
    assert bijection is not None
    for x, y in itertools.product(range(4), repeat=2):
        assert bijection[p4.multiply(x, y)] == relabelled.multiply(bijection[x], bijection[y])

    assert are_isomorphic(CycleSet.trivial(3), CycleSet.cyclic(3)) is None
    assert are_isomorphic(CycleSet.trivial(2), CycleSet.trivial(3)) is None


def test_enumeration(labelled_cycle_sets: dict[int, list[CycleSet]],
                     cycle_sets_up_to_iso: dict[int, list[CycleSet]]) -> None:
    """Test the number of cycle sets of small sizes."""
    assert labelled_cycle_sets[1] == [CycleSet.trivial(1)]
    assert labelled_cycle_sets[2] == [CycleSet.trivial(2), CycleSet.cyclic(2)]
    assert [len(cycle_sets_up_to_iso[size]) for size in range(1, 5)] == [1, 2, 5, 23]

    for size in range(1, 5):
        assert len(set(labelled_cycle_sets[size])) == len(labelled_cycle_sets[size])
        representatives = cycle_sets_up_to_iso[size]
        for cycle_set in labelled_cycle_sets[size]:
            assert sum(are_isomorphic(cycle_set, other) is not None for other in representatives) == 1

    assert list(enumerate_cycle_sets(3, cores=2)) == labelled_cycle_sets[3]

    with pytest.raises(EnumerationError):
        enumerate_cycle_sets(6)
    with pytest.raises(EnumerationError):
        enumerate_cycle_sets(0)


def test_retraction_is_a_homomorphism(labelled_cycle_sets: dict[int, list[CycleSet]]) -> None:
    """Test that the projection onto Ret(X) is onto and preserves the operation."""
    for cycle_sets in labelled_cycle_sets.values():
        for cycle_set in cycle_sets:
            retracted, projection = retraction(cycle_set)
            assert set(projection) == set(range(retracted.size))
            for x, y in itertools.product(range(cycle_set.size), repeat=2):
                assert projection[cycle_set.multiply(x, y)] == retracted.multiply(projection[x], projection[y])


def test_congruence_closure_laws(labelled_cycle_sets: dict[int, list[CycleSet]]) -> None:
    """Test that the closure grows with its pairs and that closing a congruence gives it back."""
    for size in range(2, 5):
        for cycle_set in labelled_cycle_sets[size]:
            pairs = list(itertools.combinations(range(size), 2))
            for first, second in itertools.product(pairs, repeat=2):
                smaller = congruence_closure(cycle_set, [first])
                assert smaller.refines(congruence_closure(cycle_set, [first, second]))
                assert congruence_closure(cycle_set, list(enumerate(smaller.labels))) == smaller
                assert congruence_witness(cycle_set, smaller) is None


def test_round_trip_on_small_cycle_sets(labelled_cycle_sets: dict[int, list[CycleSet]]) -> None:
    """Test the correspondence with solutions on every cycle set with at most 4 elements."""
    for cycle_sets in labelled_cycle_sets.values():
        for cycle_set in cycle_sets:
            solution = to_solution(cycle_set)
            assert validate_solution(solution)
            assert from_solution(solution) == cycle_set
