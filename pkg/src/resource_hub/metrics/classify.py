"""Deterministic rule-based classification of assistant questions.

The rule table is a data file: an ordered list of categories, each with a
set of single-token keywords. A question goes to the category with the most
keyword hits; ties break by table order. No keyword hit at all means the
input was exploratory, accidental, or too fragmentary to classify, and it
lands in the asked-in-error bucket.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path

from ..errors import ValidationError

QUESTION_CATEGORIES = (
    "Finding a job",
    "Resume/CV creation",
    "Common-Question type",
    "Preparing for an interview",
    "Emotional support",
    "Questions asked in error",
)

ERROR_CATEGORY = "Questions asked in error"

_PUNCT_RE = re.compile(r"[^\w\s]")


def category_slug(category: str) -> str:
    """Event-target slug for a category, e.g. "Resume/CV creation" -> "resume-cv-creation"."""
    return re.sub(r"[^a-z0-9]+", "-", category.lower()).strip("-")


def _tokenize(text: str) -> list[str]:
    return _PUNCT_RE.sub("", text.casefold()).split()


@dataclass(frozen=True)
class Rule:
    category: str
    keywords: frozenset[str]


class RuleTable:
    """Ordered keyword rules; order is the tie-break priority."""

    def __init__(self, rules: list[Rule]) -> None:
        for rule in rules:
            if rule.category not in QUESTION_CATEGORIES:
                raise ValidationError(f"rule table names unknown category {rule.category!r}")
            if rule.category == ERROR_CATEGORY and rule.keywords:
                raise ValidationError("the asked-in-error category is the fallback; it takes no keywords")
        self.rules = [r for r in rules if r.category != ERROR_CATEGORY]

    @classmethod
    def load(cls, path: str | Path) -> "RuleTable":
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        rules = [
            Rule(category=item["category"], keywords=frozenset(item["keywords"]))
            for item in data["rules"]
        ]
        return cls(rules)

    def classify(self, text: str) -> str:
        """Total and deterministic over arbitrary text."""
        tokens = set(_tokenize(text))
        if not tokens:
            return ERROR_CATEGORY
        best_category = None
        best_hits = 0
        for rule in self.rules:  # strict > keeps the earliest rule on ties
            hits = len(tokens & rule.keywords)
            if hits > best_hits:
                best_hits = hits
                best_category = rule.category
        if best_category is None:
            return ERROR_CATEGORY
        return best_category
