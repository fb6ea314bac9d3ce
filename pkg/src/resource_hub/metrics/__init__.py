"""Anonymized usage metrics: session ids, event log, classification, roll-ups."""

from .aggregate import AggregateReport, aggregate_lines, render_report
from .classify import QUESTION_CATEGORIES, RuleTable, category_slug
from .events import (
    EVENT_KINDS,
    EventLog,
    EventSchemaError,
    PIIRejectedError,
    TargetVocabulary,
    UsageEvent,
    new_session_id,
    validate_event,
)

__all__ = [
    "AggregateReport",
    "EVENT_KINDS",
    "EventLog",
    "EventSchemaError",
    "PIIRejectedError",
    "QUESTION_CATEGORIES",
    "RuleTable",
    "TargetVocabulary",
    "UsageEvent",
    "aggregate_lines",
    "category_slug",
    "new_session_id",
    "render_report",
    "validate_event",
]
