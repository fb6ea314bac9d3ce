"""Anonymized usage events and the append-only event log.

An event is four flat fields: timestamp, per-visit session id, kind, and a
target drawn from a closed per-kind vocabulary. There is deliberately no
field that could carry an IP address, device identifier, or free-form
personal text, and a pattern guard rejects IP- or email-shaped targets even
if someone widens the vocabulary by mistake.

Log format: one record per line, UTF-8, four space-separated fields
(ISO-8601 UTC timestamp, session_id, kind, target). No nested structures.
Records are flushed and fsynced before the write is acknowledged.
"""

from __future__ import annotations

import json
import os
import re
import threading
import uuid
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from ..errors import ValidationError

EVENT_KINDS = (
    "tab_opened",
    "button_clicked",
    "question_submitted",
    "audio_played",
    "resume_generated",
    "career_panel_opened",
    "link_accessed",
)

_EVENT_FIELDS = {"session_id", "kind", "target", "timestamp"}

# Target labels are slugs; ":" is allowed so audio targets can carry a
# language suffix (phrase-id:lang). No whitespace, ever.
_TARGET_RE = re.compile(r"^[A-Za-z0-9][A-Za-z0-9:._-]*$")
_SESSION_ID_RE = re.compile(r"^[A-Za-z0-9._-]+$")

_IPV4_RE = re.compile(r"(?:^|[^0-9])(?:\d{1,3}\.){3}\d{1,3}(?:[^0-9]|$)")
# two or more hex-ish colon groups; the {0,4} arm catches "::" compression
_IPV6_RE = re.compile(r"(?:^|[^0-9A-Za-z:])(?:[0-9A-Fa-f]{0,4}:){2,7}[0-9A-Fa-f]{1,4}(?:[^0-9A-Za-z:]|$)")
_EMAIL_RE = re.compile(r"[^@\s]+@[^@\s]+\.[^@\s]+")


class EventSchemaError(ValidationError):
    code = "event-schema"


class PIIRejectedError(ValidationError):
    code = "pii-rejected"


def new_session_id() -> str:
    """Fresh opaque per-visit id: 122 random bits, hex, no ':' or whitespace."""
    return uuid.uuid4().hex


def looks_like_pii(value: str) -> bool:
    return bool(_IPV4_RE.search(value) or _IPV6_RE.search(value) or _EMAIL_RE.search(value))


@dataclass(frozen=True)
class UsageEvent:
    session_id: str
    kind: str
    target: str
    timestamp: float

    def to_line(self) -> str:
        ts = datetime.fromtimestamp(self.timestamp, tz=timezone.utc).isoformat()
        return f"{ts} {self.session_id} {self.kind} {self.target}"


class TargetVocabulary:
    """Closed per-kind target vocabulary.

    The service composes this from static sets plus content-derived labels
    (tab names, career panel kinds, phrase audio ids) at startup; events
    with targets outside the vocabulary are schema violations.
    """

    def __init__(self, allowed: dict[str, set[str] | list[str] | tuple[str, ...]]) -> None:
        unknown = set(allowed) - set(EVENT_KINDS)
        if unknown:
            raise ValidationError(f"vocabulary names unknown event kinds: {sorted(unknown)}")
        self._allowed = {kind: frozenset(targets) for kind, targets in allowed.items()}

    @classmethod
    def load(cls, path: str | Path) -> "TargetVocabulary":
        with open(path, encoding="utf-8") as fh:
            return cls(json.load(fh))

    def allows(self, kind: str, target: str) -> bool:
        return target in self._allowed.get(kind, frozenset())

    def targets(self, kind: str) -> frozenset[str]:
        return self._allowed.get(kind, frozenset())

    def extended(self, kind: str, targets: set[str] | list[str]) -> "TargetVocabulary":
        merged = {k: set(v) for k, v in self._allowed.items()}
        merged.setdefault(kind, set()).update(targets)
        return TargetVocabulary(merged)


def validate_event(payload: dict, vocabulary: TargetVocabulary) -> UsageEvent:
    """Validate a raw event payload against the schema and the PII guard.

    Rejects unknown fields outright (there is no legitimate extra field,
    and that is exactly where identifiers would sneak in).
    """
    if not isinstance(payload, dict):
        raise EventSchemaError("event payload must be an object")
    extra = set(payload) - _EVENT_FIELDS
    if extra:
        raise EventSchemaError(f"event carries forbidden fields: {sorted(extra)}")
    missing = {"session_id", "kind", "target"} - set(payload)
    if missing:
        raise EventSchemaError(f"event is missing fields: {sorted(missing)}")

    session_id = payload["session_id"]
    kind = payload["kind"]
    target = payload["target"]
    timestamp = payload.get("timestamp")

    if not isinstance(session_id, str) or not _SESSION_ID_RE.fullmatch(session_id):
        raise EventSchemaError("session_id must be a non-empty token without ':' or whitespace")
    if kind not in EVENT_KINDS:
        raise EventSchemaError(f"unknown event kind {kind!r}")
    if not isinstance(target, str) or not _TARGET_RE.fullmatch(target):
        raise EventSchemaError(f"target {target!r} is not a valid label")
    if looks_like_pii(target) or looks_like_pii(session_id):
        raise PIIRejectedError("value matches an IP-address or email pattern")
    if not vocabulary.allows(kind, target):
        raise EventSchemaError(f"target {target!r} is not in the {kind!r} vocabulary")
    if timestamp is None:
        ts = datetime.now(tz=timezone.utc).timestamp()
    elif isinstance(timestamp, (int, float)) and not isinstance(timestamp, bool):
        ts = float(timestamp)
    else:
        raise EventSchemaError("timestamp must be numeric epoch seconds")

    return UsageEvent(session_id=session_id, kind=kind, target=target, timestamp=ts)


class EventLog:
    """Append-only, line-delimited event log on local disk.

    Writers are serialized internally; each accepted record is flushed and
    fsynced before record() returns. Reads take a consistent snapshot (the
    lines present at call time).
    """

    def __init__(self, path: str | Path, vocabulary: TargetVocabulary) -> None:
        self.path = Path(path)
        self.vocabulary = vocabulary
        self._lock = threading.Lock()
        self.path.parent.mkdir(parents=True, exist_ok=True)
        self.path.touch(exist_ok=True)

    def record(self, payload: dict) -> UsageEvent:
        event = validate_event(payload, self.vocabulary)
        line = event.to_line()
        with self._lock:
            with self.path.open("a", encoding="utf-8") as fh:
                fh.write(line + "\n")
                fh.flush()
                os.fsync(fh.fileno())
        return event

    def lines(self) -> list[str]:
        with self._lock:
            with self.path.open(encoding="utf-8") as fh:
                return fh.read().splitlines()


def parse_line(line: str) -> UsageEvent:
    """Parse one log line; raises ValueError on corrupt input."""
    parts = line.split(" ")
    if len(parts) != 4:
        raise ValueError(f"expected 4 fields, got {len(parts)}")
    ts_text, session_id, kind, target = parts
    timestamp = datetime.fromisoformat(ts_text).timestamp()
    if kind not in EVENT_KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    if not session_id or not target:
        raise ValueError("empty field")
    return UsageEvent(session_id=session_id, kind=kind, target=target, timestamp=timestamp)
