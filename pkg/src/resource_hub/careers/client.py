"""Career-data client, response parsing, and the TTL dataset cache.

The upstream API returns one JSON document per query kind: a records array
under a kind-specific key. Parsing keeps every cell as a string; numeric
interpretation is a presentation concern. Recorded response fixtures for
all fourteen kinds are committed so the whole module runs offline.

Concurrent identical cache misses coalesce into a single upstream call
(single-flight): the per-key lock is held across the fetch, so the second
caller finds the entry cached when it acquires the lock.
"""

from __future__ import annotations

import json
import os
import threading
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Protocol

import httpx

from ..errors import ProviderUnavailableError
from .queries import KIND_SPECS, RequestDescriptor, build_request, cache_key

CAREER_API_KEY_ENV = "CAREER_DATA_API_KEY"

DEFAULT_CACHE_TTL_SECONDS = 24 * 3600  # labor-market data updates slowly

# records key + (column name, record field) pairs per kind
_PARSE_SPECS: dict[str, tuple[str, tuple[tuple[str, str], ...]]] = {
    "American Job Center": ("Centers", (
        ("Name", "Name"), ("Address", "Address"), ("City", "City"),
        ("State", "State"), ("Zip", "Zip"), ("Phone", "Phone"), ("Distance", "Distance"),
    )),
    "Apprenticeship Offices": ("Offices", (
        ("Name", "Name"), ("Sponsor", "Sponsor"), ("City", "City"),
        ("State", "State"), ("Phone", "Phone"),
    )),
    "Certifications": ("Certifications", (
        ("Name", "Name"), ("Organization", "Organization"), ("Type", "Type"),
    )),
    "Employment Patterns": ("Industries", (
        ("Industry", "Industry"), ("PercentEmployed", "PercentEmployed"),
        ("EstimatedWorkers", "EstimatedWorkers"),
    )),
    "Labor Market Information": ("Wages", (
        ("Area", "Area"), ("MedianWageHourly", "MedianWageHourly"),
        ("MedianWageAnnual", "MedianWageAnnual"), ("AveragePayAnnual", "AveragePayAnnual"),
    )),
    "Occupations": ("Profile", (
        ("Title", "Title"), ("Description", "Description"),
        ("EducationRequired", "EducationRequired"), ("TrainingRequired", "TrainingRequired"),
    )),
    "Occupational Reports": ("Reports", (
        ("ReportType", "ReportType"), ("Occupation", "Occupation"), ("Value", "Value"),
    )),
    "Salaries and Wages": ("SalaryPercentiles", (
        ("Percentile", "Percentile"), ("Hourly", "Hourly"), ("Annual", "Annual"),
        ("Area", "Area"),
    )),
    "Skills Gaps": ("Comparisons", (
        ("Dimension", "Dimension"), ("FirstOccupation", "FirstOccupation"),
        ("SecondOccupation", "SecondOccupation"), ("Difference", "Difference"),
    )),
    "State Resources": ("Resources", (
        ("Program", "Program"), ("Description", "Description"),
        ("Phone", "Phone"), ("Website", "Website"),
    )),
    "Tools and Technology": ("Items", (
        ("Type", "Type"), ("Name", "Name"),
    )),
    "Training": ("Programs", (
        ("ProgramName", "ProgramName"), ("Provider", "Provider"), ("City", "City"),
        ("State", "State"), ("Length", "Length"),
    )),
    "Unemployment": ("Rates", (
        ("State", "State"), ("Rate", "Rate"), ("Count", "Count"), ("PeriodYear", "PeriodYear"),
    )),
    "Youth Programs": ("Programs", (
        ("Name", "Name"), ("Organization", "Organization"), ("City", "City"),
        ("Phone", "Phone"), ("AgeRange", "AgeRange"),
    )),
}


class CareerDataError(ProviderUnavailableError):
    code = "career-data-unavailable"


class UpstreamStatusError(CareerDataError):
    """Upstream answered with a non-success status."""

    code = "career-data-status"

    def __init__(self, status: int, message: str = "") -> None:
        super().__init__(message or f"upstream returned status {status}")
        self.status = status


class DataParseError(CareerDataError):
    """Upstream body did not match the documented response shape."""

    code = "career-data-parse"


@dataclass(frozen=True)
class CareerDataset:
    kind: str
    columns: tuple[str, ...]
    rows: tuple[tuple[str, ...], ...]
    fetched_at: float
    cache_key: str


class CareerClient(Protocol):
    def fetch_table(self, descriptor: RequestDescriptor) -> str: ...


class HttpCareerClient:
    """HTTP client for the upstream career-data API; key via environment."""

    def __init__(self, base_url: str, api_key: str | None = None, timeout: float = 20.0) -> None:
        self.base_url = base_url.rstrip("/")
        self._api_key = api_key if api_key is not None else os.environ.get(CAREER_API_KEY_ENV, "")
        self._client = httpx.Client(timeout=timeout)

    def fetch_table(self, descriptor: RequestDescriptor) -> str:
        url = f"{self.base_url}/{descriptor.path}"
        headers = {"Authorization": f"Bearer {self._api_key}"}
        try:
            response = self._client.get(url, params=dict(descriptor.query), headers=headers)
        except httpx.HTTPError as exc:
            raise CareerDataError(f"career-data request failed: {type(exc).__name__}") from exc
        if response.status_code // 100 != 2:
            raise UpstreamStatusError(response.status_code)
        return response.text


class FixtureCareerClient:
    """Serves committed recorded responses; one fixture file per kind slug."""

    def __init__(self, fixture_dir: str | Path) -> None:
        self.fixture_dir = Path(fixture_dir)
        self.calls = 0

    def fetch_table(self, descriptor: RequestDescriptor) -> str:
        self.calls += 1
        path = self.fixture_dir / f"{descriptor.kind}.json"
        if not path.exists():
            raise CareerDataError(f"no recorded fixture for kind {descriptor.kind!r}")
        return path.read_text(encoding="utf-8")


def parse_dataset(kind: str, body: str, fetched_at: float, key: str) -> CareerDataset:
    records_key, column_spec = _PARSE_SPECS[kind]
    try:
        document = json.loads(body)
    except json.JSONDecodeError as exc:
        raise DataParseError(f"{kind} response is not valid JSON: {exc}") from exc
    records = document.get(records_key) if isinstance(document, dict) else None
    if not isinstance(records, list):
        raise DataParseError(f"{kind} response is missing the {records_key!r} records array")
    columns = tuple(name for name, _ in column_spec)
    rows = []
    for record in records:
        if not isinstance(record, dict):
            raise DataParseError(f"{kind} response contains a non-object record")
        rows.append(tuple(str(record.get(field, "")) for _, field in column_spec))
    return CareerDataset(
        kind=KIND_SPECS[kind]["slug"], columns=columns, rows=tuple(rows),
        fetched_at=fetched_at, cache_key=key,
    )


class DatasetCache:
    """TTL cache over parsed datasets, keyed by the deterministic cache key.

    Reads are concurrent; writes are serialized per key. The per-key lock
    doubles as the single-flight guard during fetches.
    """

    def __init__(self, ttl_seconds: float = DEFAULT_CACHE_TTL_SECONDS) -> None:
        self.ttl_seconds = ttl_seconds
        self._entries: dict[str, tuple[float, CareerDataset]] = {}
        self._key_locks: dict[str, threading.Lock] = {}
        self._meta_lock = threading.Lock()

    def lock_for(self, key: str) -> threading.Lock:
        with self._meta_lock:
            return self._key_locks.setdefault(key, threading.Lock())

    def get(self, key: str, now: float | None = None) -> CareerDataset | None:
        now = time.time() if now is None else now
        entry = self._entries.get(key)
        if entry is None:
            return None
        expires_at, dataset = entry
        if now >= expires_at:
            return None
        return dataset

    def put(self, key: str, dataset: CareerDataset, now: float | None = None) -> None:
        now = time.time() if now is None else now
        self._entries[key] = (now + self.ttl_seconds, dataset)


def fetch(kind: str, params: dict, client: CareerClient, cache: DatasetCache) -> CareerDataset:
    """Cached fetch: validation first, then cache, then one upstream call.

    No network call happens for requests that fail validation, and an
    immediate repeat of a successful fetch is served from cache.
    """
    descriptor = build_request(kind, params)
    key = cache_key(kind, params)
    cached = cache.get(key)
    if cached is not None:
        return cached
    with cache.lock_for(key):
        cached = cache.get(key)
        if cached is not None:
            return cached
        body = client.fetch_table(descriptor)
        dataset = parse_dataset(kind, body, fetched_at=time.time(), key=key)
        cache.put(key, dataset)
        return dataset
