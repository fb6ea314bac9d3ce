"""Multilingual FAQ, mindfulness content, and location-based resource queries.

Content files are the single source of truth; this module only loads,
validates, and serves them. FAQ entries and written mindfulness invitations
must carry all four language variants (enforced at load). The locator never
sees user coordinates: it builds a "<resource> near me" embed URL and the
map provider resolves "near me" client-side.
"""

from __future__ import annotations

import json
import urllib.parse
from dataclasses import dataclass
from pathlib import Path

from .errors import NotFoundError, ValidationError
from .langs import SUPPORTED_LANGUAGES, require_language

FAQ_CATEGORIES = (
    "Finding and Getting a Job",
    "Relationships",
    "Well-being",
    "Getting Adjusted to a New Place",
    "Community Resources",
    "FitBit",
)

MINDFULNESS_SECTIONS = (
    "Meditation/Breathing Invitations and Exercises",
    "Wellness",
    "Breathing and Meditation",
    "Connecting with Nature",
    "Education",
)

KIND_INVITATION = "written-invitation"
KIND_VIDEO = "embedded-video"

# Fixed resource categories with the search phrase embedded into the map query.
LOCATOR_CATEGORIES = {
    "affordable grocery stores": "affordable grocery store",
    "culturally specific grocery stores": "culturally specific grocery store",
    "farmers markets": "farmers market",
    "food pantries": "food pantry",
}

DEFAULT_MAP_EMBED_BASE = "https://www.google.com/maps"


class ContentFileError(ValidationError):
    """A content file failed validation; message names the entry."""

    code = "content-invalid"


class UnknownFAQCategoryError(NotFoundError):
    code = "unknown-faq-category"


class UnknownSectionError(NotFoundError):
    code = "unknown-section"


class UnknownLocatorCategoryError(NotFoundError):
    code = "unknown-locator-category"


@dataclass(frozen=True)
class FAQEntry:
    entry_id: str
    category: str
    question_by_lang: dict[str, str]
    answer_by_lang: dict[str, str]


@dataclass(frozen=True)
class MindfulnessItem:
    item_id: str
    section: str
    kind: str  # KIND_INVITATION or KIND_VIDEO
    title: str
    body_by_lang: dict[str, str] | None = None
    video_url: str | None = None


@dataclass(frozen=True)
class ContentStore:
    faq: tuple[FAQEntry, ...]
    mindfulness: tuple[MindfulnessItem, ...]


def _require_lang_map(value: dict, entry_id: str, what: str) -> dict[str, str]:
    for lang in SUPPORTED_LANGUAGES:
        if not value.get(lang, "").strip():
            raise ContentFileError(f"entry {entry_id!r} is missing the {lang!r} {what}")
    return {lang: value[lang] for lang in SUPPORTED_LANGUAGES}


def load_faq(path: str | Path) -> tuple[FAQEntry, ...]:
    entries: list[FAQEntry] = []
    with Path(path).open(encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ContentFileError(f"FAQ entry on line {lineno} is not valid JSON: {exc}") from exc
            entry_id = record.get("id", f"<line {lineno}>")
            category = record.get("category")
            if category not in FAQ_CATEGORIES:
                raise ContentFileError(f"FAQ entry {entry_id!r} has unknown category {category!r}")
            entries.append(FAQEntry(
                entry_id=entry_id,
                category=category,
                question_by_lang=_require_lang_map(record.get("question", {}), entry_id, "question"),
                answer_by_lang=_require_lang_map(record.get("answer", {}), entry_id, "answer"),
            ))
    if not entries:
        raise ContentFileError(f"FAQ file {path} contains no entries")
    return tuple(entries)


def load_mindfulness(path: str | Path) -> tuple[MindfulnessItem, ...]:
    items: list[MindfulnessItem] = []
    with Path(path).open(encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ContentFileError(f"mindfulness item on line {lineno} is not valid JSON: {exc}") from exc
            item_id = record.get("id", f"<line {lineno}>")
            section = record.get("section")
            if section not in MINDFULNESS_SECTIONS:
                raise ContentFileError(f"mindfulness item {item_id!r} has unknown section {section!r}")
            kind = record.get("kind")
            if kind == KIND_INVITATION:
                items.append(MindfulnessItem(
                    item_id=item_id,
                    section=section,
                    kind=kind,
                    title=record.get("title", ""),
                    body_by_lang=_require_lang_map(record.get("body", {}), item_id, "body"),
                ))
            elif kind == KIND_VIDEO:
                url = record.get("video_url", "")
                parsed = urllib.parse.urlparse(url)
                if parsed.scheme not in ("http", "https") or not parsed.netloc:
                    raise ContentFileError(f"mindfulness item {item_id!r} has invalid video URL {url!r}")
                items.append(MindfulnessItem(
                    item_id=item_id, section=section, kind=kind,
                    title=record.get("title", ""), video_url=url,
                ))
            else:
                raise ContentFileError(f"mindfulness item {item_id!r} has unknown kind {kind!r}")
    if not items:
        raise ContentFileError(f"mindfulness file {path} contains no items")
    return tuple(items)


def load_content(faq_path: str | Path, mindfulness_path: str | Path) -> ContentStore:
    return ContentStore(faq=load_faq(faq_path), mindfulness=load_mindfulness(mindfulness_path))


def list_faq(store: ContentStore, category: str, lang: str) -> list[dict]:
    """FAQ entries for a category in authored order, localized."""
    require_language(lang)
    if category not in FAQ_CATEGORIES:
        raise UnknownFAQCategoryError(f"unknown FAQ category {category!r}")
    return [
        {
            "id": e.entry_id,
            "category": e.category,
            "question": e.question_by_lang[lang],
            "answer": e.answer_by_lang[lang],
        }
        for e in store.faq
        if e.category == category
    ]


def list_mindfulness(store: ContentStore, section: str, lang: str) -> list[dict]:
    """Mindfulness items for a section in authored order; invitations localized."""
    require_language(lang)
    if section not in MINDFULNESS_SECTIONS:
        raise UnknownSectionError(f"unknown mindfulness section {section!r}")
    items = []
    for item in store.mindfulness:
        if item.section != section:
            continue
        if item.kind == KIND_INVITATION:
            assert item.body_by_lang is not None
            items.append({
                "id": item.item_id, "section": section, "kind": item.kind,
                "title": item.title, "body": item.body_by_lang[lang],
            })
        else:
            items.append({
                "id": item.item_id, "section": section, "kind": item.kind,
                "title": item.title, "video_url": item.video_url,
            })
    return items


def locator_query(category: str, embed_base: str = DEFAULT_MAP_EMBED_BASE) -> str:
    """Map-embed URL whose query decodes to exactly "<search_phrase> near me"."""
    try:
        phrase = LOCATOR_CATEGORIES[category]
    except KeyError:
        raise UnknownLocatorCategoryError(f"unknown locator category {category!r}") from None
    query = urllib.parse.urlencode({"q": f"{phrase} near me", "output": "embed"})
    return f"{embed_base}?{query}"
