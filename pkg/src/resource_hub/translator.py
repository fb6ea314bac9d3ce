"""Categorized multilingual phrase bank and custom free-text translation.

Every phrase ships with text and a pronunciation-audio reference in all four
languages; completeness is enforced at load time, not request time. Custom
translation goes Spanish/French/Arabic -> English only, through the
translation provider boundary.

Phrase bank file format: UTF-8 JSON Lines, one entry per line with fields
id / category / text (map lang -> phrase) / audio (map lang -> asset path).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .errors import NotFoundError, ProviderUnavailableError, ValidationError
from .langs import SUPPORTED_LANGUAGES, TRANSLATABLE_SOURCES, require_language
from .providers import TranslationProvider

PHRASE_CATEGORIES = (
    "Common Words",
    "Words for Healthy and Unhealthy Relationships",
    "Words for Job Search",
    "Words for Emotional Well-Being",
    "Words for a Different Kind of Feeling",
    "Greetings",
    "Introductions",
    "General Questions and Responses",
    "Feeling and Emotional Well-Being",
    "Health and Well-Being",
    "School and Family",
)

MAX_TRANSLATION_CHARS = 2000


class PhraseBankError(ValidationError):
    """A phrase bank file failed validation; message names the entry."""

    code = "phrase-bank-invalid"


class UnknownCategoryError(NotFoundError):
    code = "unknown-category"


class TranslationUnavailableError(ProviderUnavailableError):
    """Distinct from validation errors: the provider call itself failed."""

    code = "translation-unavailable"


@dataclass(frozen=True)
class PhraseEntry:
    phrase_id: str
    category: str
    text_by_lang: dict[str, str]
    audio_by_lang: dict[str, str]


@dataclass(frozen=True)
class PhraseBank:
    entries: tuple[PhraseEntry, ...]
    categories: tuple[str, ...] = PHRASE_CATEGORIES


@dataclass(frozen=True)
class TranslationRequest:
    source_lang: str
    text: str


def load_phrase_bank(path: str | Path) -> PhraseBank:
    """Load and validate the phrase bank.

    Every entry must carry text and an audio reference for all four
    languages and name a known category; violations are reported with the
    offending entry id.
    """
    path = Path(path)
    entries: list[PhraseEntry] = []
    seen: set[str] = set()
    with path.open(encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise PhraseBankError(f"phrase entry on line {lineno} is not valid JSON: {exc}") from exc
            entry_id = record.get("id", f"<line {lineno}>")
            category = record.get("category")
            if category not in PHRASE_CATEGORIES:
                raise PhraseBankError(f"phrase entry {entry_id!r} has unknown category {category!r}")
            text = record.get("text", {})
            audio = record.get("audio", {})
            for lang in SUPPORTED_LANGUAGES:
                if not text.get(lang, "").strip():
                    raise PhraseBankError(f"phrase entry {entry_id!r} is missing {lang!r} text")
                if not audio.get(lang, "").strip():
                    raise PhraseBankError(f"phrase entry {entry_id!r} is missing {lang!r} audio reference")
            if entry_id in seen:
                raise PhraseBankError(f"duplicate phrase id {entry_id!r} on line {lineno}")
            seen.add(entry_id)
            entries.append(PhraseEntry(
                phrase_id=entry_id,
                category=category,
                text_by_lang={lang: text[lang] for lang in SUPPORTED_LANGUAGES},
                audio_by_lang={lang: audio[lang] for lang in SUPPORTED_LANGUAGES},
            ))
    if not entries:
        raise PhraseBankError(f"phrase bank file {path} contains no entries")
    return PhraseBank(entries=tuple(entries))


def get_phrases(bank: PhraseBank, category: str, lang: str) -> list[tuple[str, str, str]]:
    """All (phrase_id, text, audio reference) for a category, in file order."""
    require_language(lang)
    if category not in bank.categories:
        raise UnknownCategoryError(f"unknown phrase category {category!r}")
    return [
        (e.phrase_id, e.text_by_lang[lang], e.audio_by_lang[lang])
        for e in bank.entries
        if e.category == category
    ]


def validate_translation_request(source_lang: str, text: str) -> TranslationRequest:
    if source_lang not in TRANSLATABLE_SOURCES:
        raise ValidationError(
            f"source language must be one of {', '.join(TRANSLATABLE_SOURCES)}, got {source_lang!r}"
        )
    if not text.strip():
        raise ValidationError("translation text is empty")
    if len(text) > MAX_TRANSLATION_CHARS:
        raise ValidationError(
            f"translation text exceeds {MAX_TRANSLATION_CHARS} characters ({len(text)})"
        )
    return TranslationRequest(source_lang=source_lang, text=text)


def translate_to_english(request: TranslationRequest, provider: TranslationProvider) -> str:
    """Translate validated free text into English via the provider.

    Validation always happens before the provider is called; provider
    failures surface as TranslationUnavailableError.
    """
    try:
        translated = provider.translate(request.source_lang, request.text)
    except Exception as exc:
        raise TranslationUnavailableError(f"translation provider failed: {type(exc).__name__}") from exc
    if not translated.strip():
        raise TranslationUnavailableError("translation provider returned empty text")
    return translated
