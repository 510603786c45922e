"""Test the characterisation of simple cycle sets by ideals, against brute force."""
from braces import LeftBrace, all_ideals, is_ideal, lambda_orbits, sub_cycle_set
from catalog import get_entry
from cycle_sets import (Congruence, CycleSet, all_congruences, is_indecomposable, is_irretractable,
                        is_simple_oracle)
from permutation_braces import gbrace
from permutations import Perm
from simplicity import (analyze_cycle_set, check_corcedo, check_preid, classify_cycle_set, congruence_to_ideal,
                        ideal_to_congruence, theorem_characterization)
from utils import BraceError, PreconditionError, is_prime
import pytest


def test_theorem_p4(p4: CycleSet) -> None:
    """Test the three conditions on the brace of order 8."""
    result = gbrace(p4)
    report = theorem_characterization(result.brace, result.embedded_base())
    assert report.preconditions_hold
    assert report.cond1 and report.cond2 and report.cond3
    assert report.equivalent
    assert [len(ideal) for ideal in report.minimal_ideals] == [4]
    assert report.to_dict()["equivalent"] is True


@pytest.mark.parametrize("entry_id", ["E12a", "E12b", "E16", "E27"])
def test_theorem_catalog(entry_id: str) -> None:
    """Test the three conditions on the larger bundled examples."""
    result = gbrace(get_entry(entry_id).cycle_set)
    report = theorem_characterization(result.brace, result.embedded_base())
    assert report.preconditions_hold
    assert report.cond1 and report.cond2 and report.cond3


def test_theorem_preconditions() -> None:
    """Test that a brace with a large socle is reported, not rejected."""
    report = theorem_characterization(LeftBrace.trivial(4), [1])
    assert not report.soc_trivial
    assert report.base_transitive
    assert not report.preconditions_hold
    assert not report.cond1

    klein = LeftBrace.from_tables([[a ^ b for b in range(4)] for a in range(4)],
                                  [[(a + b) % 4 for b in range(4)] for a in range(4)])
    not_closed = theorem_characterization(klein, [1])
    assert not not_closed.base_transitive
    assert not not_closed.cond1 and not not_closed.cond2 and not not_closed.cond3

    # A point of a larger λ-orbit is closed under its own λ-map but isn't a union of orbits.
    cycle_set = CycleSet(tuple(Perm.from_cycles(cycles, 4) for cycles in [[(2, 3)], [(0, 2, 1, 3)], [(0, 1)],
                                                                         [(0, 3, 1, 2)]]))
    brace = gbrace(cycle_set).brace
    orbit = max(lambda_orbits(brace), key=len)
    assert len(orbit) > 1
    with pytest.raises(BraceError):
        sub_cycle_set(brace, [orbit[0]])
    partial = theorem_characterization(brace, [orbit[0]])
    assert not partial.base_transitive and not partial.preconditions_hold
    assert not partial.cond1 and not partial.cond2 and not partial.cond3


def test_theorem_on_small_cycle_sets(cycle_sets_up_to_iso: dict[int, list[CycleSet]]) -> None:
    """Test that the conditions agree whenever the preconditions hold, on every small cycle set."""
    checked = 0
    for size in range(2, 5):
        for cycle_set in cycle_sets_up_to_iso[size]:
            result = gbrace(cycle_set)
            report = theorem_characterization(result.brace, result.embedded_base())
            if report.preconditions_hold:
                checked += 1
                assert report.cond1 == report.cond2 == report.cond3, report.to_dict()
    assert checked > 0


def test_galois_correspondence(p4: CycleSet) -> None:
    """Test the passage between ideals and congruences on the brace of order 8."""
    result = gbrace(p4)
    brace, base = result.brace, result.embedded_base()
    lattice = all_ideals(brace)

    assert ideal_to_congruence(brace, {0}, base).is_discrete()
    assert ideal_to_congruence(brace, range(8), base).is_full()
    assert ideal_to_congruence(brace, lattice.minimal[0], base).is_full()

    for ideal in lattice.ideals:
        congruence = ideal_to_congruence(brace, ideal, base)
        assert congruence_to_ideal(brace, base, congruence) <= ideal

    assert congruence_to_ideal(brace, base, Congruence.discrete(4)) == frozenset({0})
    full_ideal = congruence_to_ideal(brace, base, Congruence.full(4))
    assert len(full_ideal) >= 4
    assert ideal_to_congruence(brace, full_ideal, base).is_full()
    assert congruence_to_ideal(brace, base, ideal_to_congruence(brace, full_ideal, base)) == full_ideal

    with pytest.raises(PreconditionError):
        ideal_to_congruence(brace, {0, base[0]}, base)
    with pytest.raises(PreconditionError):
        ideal_to_congruence(LeftBrace.trivial(4), {0}, [1])
    with pytest.raises(PreconditionError):
        congruence_to_ideal(LeftBrace.trivial(4), [1], Congruence.full(1))


@pytest.mark.parametrize("entry_id", ["E12b", "E16"])
def test_galois_correspondence_catalog(entry_id: str) -> None:
    """Test that every ideal gives a congruence and every congruence an ideal."""
    cycle_set = get_entry(entry_id).cycle_set
    result = gbrace(cycle_set)
    brace, base = result.brace, result.embedded_base()
    for ideal in all_ideals(brace).ideals:
        congruence = ideal_to_congruence(brace, ideal, base)
        assert congruence_to_ideal(brace, base, congruence) <= ideal
    for congruence in all_congruences(sub_cycle_set(brace, base)):
        ideal = congruence_to_ideal(brace, base, congruence)
        assert is_ideal(brace, ideal)
        assert ideal_to_congruence(brace, ideal, base).refines(congruence)


def test_galois_on_small_cycle_sets(cycle_sets_up_to_iso: dict[int, list[CycleSet]]) -> None:
    """Test the correspondence on every small brace with a transitive embedded base."""
    for size in range(2, 5):
        for cycle_set in cycle_sets_up_to_iso[size]:
            result = gbrace(cycle_set)
            brace, base = result.brace, result.embedded_base()
            report = theorem_characterization(brace, base)
            if not report.preconditions_hold:
                continue
            for ideal in all_ideals(brace).ideals:
                congruence = ideal_to_congruence(brace, ideal, base)
                assert congruence_to_ideal(brace, base, congruence) <= ideal
            for congruence in all_congruences(sub_cycle_set(brace, base)):
                ideal = congruence_to_ideal(brace, base, congruence)
                assert ideal_to_congruence(brace, ideal, base).refines(congruence)


def test_preid() -> None:
    """Test the unique minimal ideal of simple cycle sets of non-prime size."""
    p4 = check_preid(get_entry("P4").cycle_set)
    assert p4.passed
    assert p4.minimal_ideal_sizes == [4]
    assert p4.quotient_order == 2
    assert p4.sigma_span_matches

    e12a = check_preid(get_entry("E12a").cycle_set)
    assert e12a.passed
    assert e12a.quotient_order == 1

    e27 = check_preid(get_entry("E27").cycle_set)
    assert e27.passed
    assert e27.minimal_ideal_sizes == [27]
    assert e27.quotient_order == 3

    with pytest.raises(PreconditionError):
        check_preid(CycleSet.cyclic(5))
    with pytest.raises(PreconditionError):
        check_preid(CycleSet.trivial(4))


def test_corcedo() -> None:
    """Test that a transitive cycle base of a simple non-trivial brace is simple."""
    result = gbrace(get_entry("E12a").cycle_set)
    assert check_corcedo(result.brace, result.embedded_base())
    with pytest.raises(PreconditionError):
        check_corcedo(LeftBrace.trivial(5), [1])
    with pytest.raises(PreconditionError):
        check_corcedo(gbrace(get_entry("P4").cycle_set).brace, [1])


def test_classify() -> None:
    """Test each case of the classification."""
    c7 = classify_cycle_set(get_entry("C_7").cycle_set)
    assert (c7.branch, c7.simple, c7.oracle) == ("prime", True, True)

    e16 = classify_cycle_set(get_entry("E16").cycle_set)
    assert (e16.branch, e16.simple) == ("general", True)

    trivial = classify_cycle_set(CycleSet.trivial(4))
    assert (trivial.branch, trivial.simple, trivial.reason) == ("general", False, "retractable")

    assert classify_cycle_set(CycleSet.trivial(1)).branch == "singleton"
    assert not classify_cycle_set(CycleSet.trivial(1)).simple
    assert classify_cycle_set(CycleSet.trivial(2)).simple
    assert not classify_cycle_set(CycleSet.trivial(3)).simple


def test_classify_small_cycle_sets(labelled_cycle_sets: dict[int, list[CycleSet]]) -> None:
    """Test the classification against brute force on every cycle set of size at most 4."""
    for size in range(1, 5):
        for cycle_set in labelled_cycle_sets[size]:
            report = classify_cycle_set(cycle_set)
            assert report.simple == is_simple_oracle(cycle_set)
            if size == 2:
                assert report.simple
            if report.simple and size > 2:
                assert is_indecomposable(cycle_set)
            if report.simple and not is_prime(size):
                assert is_irretractable(cycle_set)


def test_analyze() -> None:
    """Test the summary of a cycle set."""
    results = analyze_cycle_set(get_entry("P4").cycle_set)
    assert list(results) == ["size", "valid", "indecomposable", "irretractable", "simple_oracle", "group_order",
                             "ideal_sizes", "theorem", "classification", "retraction_tower",
                             "multipermutation_level"]
    assert results["group_order"] == 8
    assert results["ideal_sizes"] == [1, 4, 8]
    assert results["theorem"] == {"cond1": True, "cond2": True, "cond3": True, "equivalent": True}

    singleton = analyze_cycle_set(CycleSet.trivial(1))
    assert singleton["simple_oracle"] is False
    assert singleton["multipermutation_level"] == 0

