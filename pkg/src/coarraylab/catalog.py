"""Built-in library of reference arrays with their published properties.

Entries live in ``data/catalog.json`` so users can add arrays without
touching source. Each expected claim carries a provenance tag: "PAPER" for
values stated in the literature the entry comes from, "DERIVED" for values
computed by brute-force pair enumeration. The corpus test re-verifies every
claim against a fresh analysis.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .core import SensorArray
from .parsing import parse_array

FAMILIES = frozenset(
    {"MRA", "MHA", "ULA", "coprime", "ODNRA", "WCSA", "nested-variant", "custom"}
)

EXPECTED_KEYS = frozenset({"hole_free", "holes", "aperture", "primary_weights"})

SOURCES = frozenset({"PAPER", "DERIVED"})


class UnknownEntryError(LookupError):
    """Requested catalog id does not exist."""

    def __init__(self, entry_id: str):
        super().__init__(f"no catalog entry with id {entry_id!r}")
        self.entry_id = entry_id


@dataclass(frozen=True)
class ExpectedClaim:
    """A published or derived value with its provenance tag."""

    value: object
    source: str  # "PAPER" or "DERIVED"


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    name: str
    family: str
    definition_format: str  # "positions" or "ies"
    definition_text: str
    expected: dict[str, ExpectedClaim]

    def sensor_array(self) -> SensorArray:
        return parse_array(self.definition_text, self.definition_format)


def _parse_entry(raw: dict) -> CatalogEntry:
    family = raw["family"]
    if family not in FAMILIES:
        raise ValueError(f"catalog entry {raw['id']!r} has unknown family {family!r}")
    definition = raw["definition"]
    expected = {}
    for key, claim in raw.get("expected", {}).items():
        if key not in EXPECTED_KEYS:
            raise ValueError(f"catalog entry {raw['id']!r} has unknown claim {key!r}")
        if claim["source"] not in SOURCES:
            raise ValueError(
                f"catalog entry {raw['id']!r} claim {key!r} has unknown "
                f"source {claim['source']!r}"
            )
        expected[key] = ExpectedClaim(value=claim["value"], source=claim["source"])
    return CatalogEntry(
        id=raw["id"],
        name=raw["name"],
        family=family,
        definition_format=definition["format"],
        definition_text=definition["text"],
        expected=expected,
    )


@lru_cache(maxsize=1)
def _load() -> dict[str, CatalogEntry]:
    data = resources.files("coarraylab").joinpath("data/catalog.json").read_text()
    raw = json.loads(data)
    entries = {}
    for item in raw["entries"]:
        entry = _parse_entry(item)
        if entry.id in entries:
            raise ValueError(f"duplicate catalog id {entry.id!r}")
        entries[entry.id] = entry
    return entries


def list_entries() -> list[CatalogEntry]:
    """All catalog entries, sorted by id."""
    return [entry for _, entry in sorted(_load().items())]


def get_entry(entry_id: str) -> CatalogEntry:
    """Look up one entry by id; raises UnknownEntryError if absent."""
    try:
        return _load()[entry_id]
    except KeyError:
        raise UnknownEntryError(entry_id) from None
