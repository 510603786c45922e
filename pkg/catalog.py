"""The bundled cycle sets with known properties, read from data/catalog."""
from __future__ import annotations
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from cycle_sets import CycleSet
from text_formats import parse_cycle_set

CATALOG_DIRECTORY = Path(__file__).parent / "data" / "catalog"

# Facts every entry must reproduce: the order of 𝒢(X), the sizes of the ideals of its brace, and simplicity of X.
_EXPECTED: dict[str, dict[str, object]] = {
    "P4": {"group_order": 8, "ideal_sizes": [1, 4, 8], "simple": True},
    "E12a": {"group_order": 24, "ideal_sizes": [1, 24], "simple": True, "simple_brace": True},
    "E12b": {"group_order": 48, "ideal_sizes": [1, 24, 48], "simple": True},
    "E16": {"group_order": 32, "ideal_sizes": [1, 16, 32], "simple": True},
    "E27": {"group_order": 81, "ideal_sizes": [1, 27, 81], "simple": True},
}

_DESCRIPTIONS = {
    "P4": "Size 4, the smallest simple cycle set that isn't of prime size.",
    "E12a": "Size 12, a transitive cycle base of a simple brace of order 24.",
    "E12b": "Size 12, whose brace has a single non-trivial ideal, of order 24.",
    "E16": "Size 16, whose brace has a single non-trivial ideal, of order 16.",
    "E27": "Size 27, whose brace has a single non-trivial ideal, of order 27.",
}


@dataclass(frozen=True)
class CatalogEntry:
    """A bundled cycle set with the facts it is known to satisfy."""

    id: str
    description: str
    provenance: str
    cycle_set: CycleSet
    expected: dict[str, object] = field(compare=False, hash=False)


def _cyclic_expected(size: int) -> dict[str, object]:
    return {"group_order": size, "ideal_sizes": [1, size], "simple": True, "trivial_brace": True,
            "irretractable": False, "multipermutation_level": 1}


def _entry_order(path: Path) -> tuple[int, int, str]:
    stem = path.stem
    if stem.startswith("C_"):
        return 1, int(stem[2:]), stem
    return 0, 0, stem


@lru_cache(maxsize=1)
def catalog() -> tuple[CatalogEntry, ...]:
    """
    Read every bundled cycle set.

    :return: The entries, the cyclic ones last and by increasing size.
    """
    entries = []
    for path in sorted(CATALOG_DIRECTORY.glob("*.txt"), key=_entry_order):
        text = path.read_text(encoding="utf-8")
        provenance = " ".join(line.lstrip("# ").strip() for line in text.splitlines() if line.startswith("#"))
        cycle_set = parse_cycle_set(text)
        if path.stem.startswith("C_"):
            expected = _cyclic_expected(cycle_set.size)
            description = f"Cyclic cycle set of prime size {cycle_set.size}."
        else:
            expected = dict(_EXPECTED[path.stem])
            description = _DESCRIPTIONS[path.stem]
        expected["size"] = cycle_set.size
        entries.append(CatalogEntry(path.stem, description, provenance, cycle_set, expected))
    return tuple(entries)


def get_entry(entry_id: str) -> CatalogEntry:
    """
    Find a bundled cycle set.

    :param entry_id: The id, e.g. "P4" or "C_5".
    :return: The entry.
    """
    for entry in catalog():
        if entry.id == entry_id:
            return entry
    raise KeyError(f"there's no catalog entry '{entry_id}', the ids are: {', '.join(e.id for e in catalog())}.")
