"""Phrase bank completeness and custom translation."""

from __future__ import annotations

import json

import pytest

from resource_hub import translator
from resource_hub.errors import ValidationError
from resource_hub.providers import FailingTranslationProvider, RecordedTranslationProvider


@pytest.fixture(scope="module")
def bank(data_dir):
    return translator.load_phrase_bank(data_dir / "phrase_bank.jsonl")


@pytest.fixture(scope="module")
def recorded(data_dir):
    return RecordedTranslationProvider(fixture_path=data_dir / "translations_fixture.json")


def write_bank(path, records):
    with open(path, "w", encoding="utf-8") as fh:
        for record in records:
            fh.write(json.dumps(record, ensure_ascii=False) + "\n")
    return path


def full_entry(pid="p-1", category="Greetings", drop_text=None, drop_audio=None):
    text = {"en": "Hello", "es": "Hola", "fr": "Bonjour", "ar": "مرحبا"}
    audio = {lang: f"{pid}.{lang}.wav" for lang in text}
    if drop_text:
        text.pop(drop_text)
    if drop_audio:
        audio.pop(drop_audio)
    return {"id": pid, "category": category, "text": text, "audio": audio}


def test_shipped_bank_is_complete(bank):
    assert bank.categories == translator.PHRASE_CATEGORIES
    for entry in bank.entries:
        for lang in ("en", "es", "fr", "ar"):
            assert entry.text_by_lang[lang].strip()
            assert entry.audio_by_lang[lang].strip()


def test_missing_language_variant_names_the_entry(tmp_path):
    path = write_bank(tmp_path / "bank.jsonl", [full_entry(drop_text="ar")])
    with pytest.raises(translator.PhraseBankError, match="'p-1' is missing 'ar' text"):
        translator.load_phrase_bank(path)


def test_missing_audio_reference_names_the_entry(tmp_path):
    path = write_bank(tmp_path / "bank.jsonl", [full_entry(drop_audio="fr")])
    with pytest.raises(translator.PhraseBankError, match="audio"):
        translator.load_phrase_bank(path)


def test_unknown_category_is_rejected(tmp_path):
    path = write_bank(tmp_path / "bank.jsonl", [full_entry(category="Weather")])
    with pytest.raises(translator.PhraseBankError, match="Weather"):
        translator.load_phrase_bank(path)


def test_get_phrases_selects_language_and_order(bank):
    rows = translator.get_phrases(bank, "Greetings", "fr")
    assert [pid for pid, _, _ in rows] == ["greet-good-morning", "greet-good-evening", "greet-welcome"]
    assert all(audio.endswith(".fr.wav") for _, _, audio in rows)
    english = translator.get_phrases(bank, "Words for Job Search", "en")
    assert ("job-resume", "Resume", "job-resume.en.wav") in english


def test_get_phrases_rejects_unknown_inputs(bank):
    with pytest.raises(translator.UnknownCategoryError):
        translator.get_phrases(bank, "Weather", "en")
    with pytest.raises(ValidationError):
        translator.get_phrases(bank, "Greetings", "de")


def test_translate_recorded_fixture(recorded):
    request = translator.validate_translation_request("es", "hola")
    assert translator.translate_to_english(request, recorded) == "hello"


def test_translate_is_deterministic_with_mock(recorded):
    request = translator.validate_translation_request("fr", "une phrase inconnue")
    first = translator.translate_to_english(request, recorded)
    second = translator.translate_to_english(request, recorded)
    assert first == second


def test_validation_happens_before_any_provider_call():
    counting = RecordedTranslationProvider(fixtures={})
    with pytest.raises(ValidationError):
        translator.validate_translation_request("es", "")
    with pytest.raises(ValidationError):
        translator.validate_translation_request("en", "hello")
    with pytest.raises(ValidationError):
        translator.validate_translation_request("fr", "x" * 2001)
    assert counting.calls == 0


def test_over_length_boundary():
    assert translator.validate_translation_request("fr", "x" * 2000).text
    with pytest.raises(ValidationError, match="2000"):
        translator.validate_translation_request("fr", "x" * 2001)


def test_provider_failure_is_distinct_from_validation():
    request = translator.validate_translation_request("ar", "مرحبا")
    with pytest.raises(translator.TranslationUnavailableError):
        translator.translate_to_english(request, FailingTranslationProvider())
