"""Occupational data: curated occupation catalog, query kinds, cached client."""

from .catalog import OccupationCatalog, OccupationEntry
from .client import (
    CareerDataError,
    CareerDataset,
    DatasetCache,
    FixtureCareerClient,
    HttpCareerClient,
    fetch,
)
from .queries import (
    KIND_NAMES,
    KIND_SLUGS,
    LocationQuery,
    RequestDescriptor,
    build_request,
    cache_key,
    validate_location,
)

__all__ = [
    "CareerDataError",
    "CareerDataset",
    "DatasetCache",
    "FixtureCareerClient",
    "HttpCareerClient",
    "KIND_NAMES",
    "KIND_SLUGS",
    "LocationQuery",
    "OccupationCatalog",
    "OccupationEntry",
    "RequestDescriptor",
    "build_request",
    "cache_key",
    "fetch",
    "validate_location",
]
