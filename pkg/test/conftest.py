"""Shared fixtures and plotting setup for the tests."""
from cycle_sets import CycleSet, enumerate_cycle_sets
from catalog import get_entry
import matplotlib
import pytest

matplotlib.use("Agg")


@pytest.fixture(scope="session")
def labelled_cycle_sets() -> dict[int, list[CycleSet]]:
    """Every cycle set on 1 to 4 points."""
    return {size: list(enumerate_cycle_sets(size)) for size in range(1, 5)}


@pytest.fixture(scope="session")
def cycle_sets_up_to_iso() -> dict[int, list[CycleSet]]:
    """One cycle set per isomorphism class, on 1 to 4 points."""
    return {size: list(enumerate_cycle_sets(size, up_to_iso=True)) for size in range(1, 5)}


@pytest.fixture(scope="session")
def p4() -> CycleSet:
    """The smallest simple cycle set of non-prime size."""
    return get_entry("P4").cycle_set
