"""The fourteen occupational-data query kinds and their request descriptors.

Each kind has a fixed parameter signature; build_request validates the
supplied parameters against it exactly (no missing, no extra) and produces
a deterministic descriptor (path template plus sorted query parameters)
that is compared against committed golden files in tests.

Location-taking kinds accept one of three forms: city+state, zip, or state,
optionally with a search radius in miles.
"""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass

from ..errors import ValidationError
from .catalog import ONET_CODE_RE

US_STATE_CODES = frozenset(
    "AL AK AZ AR CA CO CT DE FL GA HI ID IL IN IA KS KY LA ME MD MA MI MN MS MO MT NE NV "
    "NH NJ NM NY NC ND OH OK OR PA RI SC SD TN TX UT VT VA WA WV WI WY DC PR GU VI AS MP".split()
)

NATIONAL_SCOPE = "US"  # sentinel for nationwide occupational reports

_ZIP_RE = re.compile(r"^\d{5}$")

# Parameter vocabulary:
#   occupation / occupation_2 -- standardized occupation code (DD-DDDD.DD)
#   state                     -- 2-letter state code
#   scope                     -- state code or the "US" sentinel
#   city / zip / radius       -- location query parts
LOCATION_PARAMS = ("city", "state", "zip", "radius")

KIND_SPECS: dict[str, dict] = {
    "American Job Center": {"slug": "american-job-center", "signature": "location",
                            "path": "ajc/find"},
    "Apprenticeship Offices": {"slug": "apprenticeship-offices", "signature": "location",
                               "path": "apprenticeship/offices"},
    "Certifications": {"slug": "certifications", "signature": ("occupation",),
                       "path": "occupation/{occupation}/certifications"},
    "Employment Patterns": {"slug": "employment-patterns", "signature": ("occupation",),
                            "path": "occupation/{occupation}/employment-patterns"},
    "Labor Market Information": {"slug": "labor-market-information",
                                 "signature": ("occupation", "state"),
                                 "path": "occupation/{occupation}/labor-market"},
    "Occupations": {"slug": "occupations", "signature": ("occupation", "state"),
                    "path": "occupation/{occupation}/profile"},
    "Occupational Reports": {"slug": "occupational-reports", "signature": ("scope",),
                             "path": "reports/{scope}"},
    "Salaries and Wages": {"slug": "salaries-and-wages", "signature": ("occupation", "state"),
                           "path": "occupation/{occupation}/salaries"},
    "Skills Gaps": {"slug": "skills-gaps", "signature": ("occupation", "occupation_2"),
                    "path": "skills-gaps/{occupation}/vs/{occupation_2}"},
    "State Resources": {"slug": "state-resources", "signature": ("state", "radius"),
                        "path": "state-resources/{state}"},
    "Tools and Technology": {"slug": "tools-and-technology", "signature": ("occupation",),
                             "path": "occupation/{occupation}/tools-technology"},
    "Training": {"slug": "training", "signature": "location", "path": "training/programs"},
    "Unemployment": {"slug": "unemployment", "signature": ("state",),
                     "path": "unemployment/{state}"},
    "Youth Programs": {"slug": "youth-programs", "signature": "location",
                       "path": "youth-programs"},
}

KIND_NAMES = tuple(KIND_SPECS)
KIND_SLUGS = {spec["slug"]: name for name, spec in KIND_SPECS.items()}


class UnknownKindError(ValidationError):
    code = "unknown-query-kind"


class ParameterError(ValidationError):
    code = "bad-query-parameters"


class LocationError(ValidationError):
    code = "bad-location"


@dataclass(frozen=True)
class LocationQuery:
    kind: str  # "city+state", "zip", or "state"
    city: str | None = None
    state: str | None = None
    zip: str | None = None
    radius_miles: int | None = None

    def as_query(self) -> dict[str, str]:
        query: dict[str, str] = {}
        if self.city is not None:
            query["city"] = self.city
        if self.state is not None:
            query["state"] = self.state
        if self.zip is not None:
            query["zip"] = self.zip
        if self.radius_miles is not None:
            query["radius"] = str(self.radius_miles)
        return query


@dataclass(frozen=True)
class RequestDescriptor:
    kind: str  # slug
    path: str
    query: tuple[tuple[str, str], ...]  # sorted (key, value) pairs

    def to_json(self) -> str:
        return json.dumps(
            {"kind": self.kind, "path": self.path, "query": dict(self.query)},
            sort_keys=True,
        )


def validate_location(raw: dict) -> LocationQuery:
    """Normalize raw location fields into one of the three location forms."""
    unknown = set(raw) - set(LOCATION_PARAMS)
    if unknown:
        raise LocationError(f"unknown location fields: {sorted(unknown)}")
    city = raw.get("city") or None
    state = raw.get("state") or None
    zip_code = raw.get("zip") or None
    radius = raw.get("radius")

    radius_miles: int | None = None
    if radius not in (None, ""):
        try:
            radius_miles = int(radius)
        except (TypeError, ValueError):
            raise LocationError(f"radius must be an integer, got {radius!r}") from None
        if radius_miles <= 0:
            raise LocationError(f"radius must be positive, got {radius_miles}")

    if state is not None:
        state = state.upper()
        if state not in US_STATE_CODES:
            raise LocationError(f"unknown state code {state!r}")
    if zip_code is not None and not _ZIP_RE.fullmatch(str(zip_code)):
        raise LocationError(f"zip must be exactly 5 digits, got {zip_code!r}")

    if zip_code is not None:
        if city is not None or state is not None:
            raise LocationError("zip queries take no city or state")
        return LocationQuery(kind="zip", zip=str(zip_code), radius_miles=radius_miles)
    if city is not None:
        if state is None:
            raise LocationError("city queries require a state")
        return LocationQuery(kind="city+state", city=city, state=state, radius_miles=radius_miles)
    if state is not None:
        return LocationQuery(kind="state", state=state, radius_miles=radius_miles)
    raise LocationError("location requires a city+state, a zip, or a state")


def _validate_occupation(value: object, param: str) -> str:
    if not isinstance(value, str) or not ONET_CODE_RE.fullmatch(value):
        raise ParameterError(f"{param} must be an occupation code (DD-DDDD.DD), got {value!r}")
    return value


def build_request(kind: str, params: dict) -> RequestDescriptor:
    """Validate params against the kind's signature and build its descriptor."""
    if kind not in KIND_SPECS:
        raise UnknownKindError(f"unknown career query kind {kind!r}")
    spec = KIND_SPECS[kind]
    signature = spec["signature"]

    if signature == "location":
        location = validate_location(params)
        return RequestDescriptor(
            kind=spec["slug"],
            path=spec["path"],
            query=tuple(sorted(location.as_query().items())),
        )

    expected = set(signature)
    supplied = set(params)
    missing = expected - supplied
    if missing:
        raise ParameterError(f"{kind} is missing parameters: {sorted(missing)}")
    extra = supplied - expected
    if extra:
        raise ParameterError(f"{kind} does not take parameters: {sorted(extra)}")

    values: dict[str, str] = {}
    for param in signature:
        value = params[param]
        if param in ("occupation", "occupation_2"):
            values[param] = _validate_occupation(value, param)
        elif param == "state":
            if not isinstance(value, str) or value.upper() not in US_STATE_CODES:
                raise ParameterError(f"state must be a 2-letter state code, got {value!r}")
            values[param] = value.upper()
        elif param == "scope":
            scope = str(value).upper()
            if scope != NATIONAL_SCOPE and scope not in US_STATE_CODES:
                raise ParameterError(f"scope must be a state code or {NATIONAL_SCOPE!r}, got {value!r}")
            values[param] = scope
        elif param == "radius":
            try:
                radius = int(value)
            except (TypeError, ValueError):
                raise ParameterError(f"radius must be an integer, got {value!r}") from None
            if radius <= 0:
                raise ParameterError(f"radius must be positive, got {radius}")
            values[param] = str(radius)
        else:  # pragma: no cover - signature vocabulary is closed
            raise ParameterError(f"unhandled parameter {param!r}")

    path = spec["path"].format(**values)
    in_path = {p for p in values if "{" + p + "}" in spec["path"]}
    query = tuple(sorted((k, v) for k, v in values.items() if k not in in_path))
    return RequestDescriptor(kind=spec["slug"], path=path, query=query)


def cache_key(kind: str, params: dict) -> str:
    """Deterministic key over (kind, params); stable across process restarts."""
    canonical = json.dumps({"kind": kind, "params": {k: str(v) for k, v in sorted(params.items())}},
                           sort_keys=True)
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()
