"""Curated occupation catalog: display name to standardized occupation code.

The catalog is a data file so deployers can substitute the occupations most
relevant to their community; the shipped file carries fifty accessible
occupations drawn from the standardized occupational taxonomy.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path

from ..errors import NotFoundError, ValidationError

ONET_CODE_RE = re.compile(r"^\d{2}-\d{4}\.\d{2}$")

CATALOG_SIZE = 50


class CatalogError(ValidationError):
    code = "occupation-catalog-invalid"


class UnknownOccupationError(NotFoundError):
    code = "unknown-occupation"


@dataclass(frozen=True)
class OccupationEntry:
    display_name: str
    onet_code: str


class OccupationCatalog:
    def __init__(self, entries: list[OccupationEntry]) -> None:
        if len(entries) != CATALOG_SIZE:
            raise CatalogError(f"occupation catalog must have exactly {CATALOG_SIZE} entries, got {len(entries)}")
        names = [e.display_name for e in entries]
        if len(set(names)) != len(names):
            dupes = sorted({n for n in names if names.count(n) > 1})
            raise CatalogError(f"duplicate occupation names: {dupes}")
        for entry in entries:
            if not ONET_CODE_RE.fullmatch(entry.onet_code):
                raise CatalogError(
                    f"occupation {entry.display_name!r} has malformed code {entry.onet_code!r}"
                )
        self.entries = tuple(entries)
        self._by_name = {e.display_name: e.onet_code for e in entries}

    @classmethod
    def load(cls, path: str | Path) -> "OccupationCatalog":
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        return cls([OccupationEntry(display_name=i["name"], onet_code=i["code"]) for i in data])

    def resolve(self, display_name: str) -> str:
        try:
            return self._by_name[display_name]
        except KeyError:
            raise UnknownOccupationError(f"unknown occupation {display_name!r}") from None

    def names(self) -> list[str]:
        return [e.display_name for e in self.entries]
