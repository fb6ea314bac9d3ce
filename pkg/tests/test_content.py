"""FAQ, mindfulness, and locator content serving."""

from __future__ import annotations

import urllib.parse

import pytest

from resource_hub import content
from resource_hub.errors import ValidationError


@pytest.fixture(scope="module")
def store(data_dir):
    return content.load_content(data_dir / "faq.jsonl", data_dir / "mindfulness.jsonl")


def test_every_faq_entry_has_four_language_variants(store):
    for entry in store.faq:
        for lang in ("en", "es", "fr", "ar"):
            assert entry.question_by_lang[lang].strip()
            assert entry.answer_by_lang[lang].strip()


def test_list_faq_localizes(store):
    english = content.list_faq(store, "Community Resources", "en")
    assert len(english) >= 1
    spanish_fitbit = content.list_faq(store, "FitBit", "es")
    assert spanish_fitbit and all("Fitbit" in e["question"] for e in spanish_fitbit)
    assert spanish_fitbit[0]["answer"] != content.list_faq(store, "FitBit", "en")[0]["answer"]


def test_list_faq_rejects_unknown_category_and_language(store):
    with pytest.raises(content.UnknownFAQCategoryError):
        content.list_faq(store, "Weather", "en")
    with pytest.raises(ValidationError):
        content.list_faq(store, "FitBit", "de")


def test_mindfulness_sections(store):
    nature = content.list_mindfulness(store, "Connecting with Nature", "en")
    assert any(item["kind"] == "embedded-video" for item in nature)
    invitations = content.list_mindfulness(
        store, "Meditation/Breathing Invitations and Exercises", "fr")
    assert invitations and all(item["kind"] == "written-invitation" for item in invitations)
    assert all(item["body"] for item in invitations)
    with pytest.raises(content.UnknownSectionError):
        content.list_mindfulness(store, "Sleep", "en")


def test_written_invitations_carry_all_four_languages(store):
    for item in store.mindfulness:
        if item.kind == content.KIND_INVITATION:
            assert item.body_by_lang is not None
            for lang in ("en", "es", "fr", "ar"):
                assert item.body_by_lang[lang].strip()
        else:
            assert item.video_url and item.video_url.startswith("http")


def test_invalid_video_url_rejected(tmp_path, data_dir):
    bad = tmp_path / "mind.jsonl"
    bad.write_text(
        '{"id": "v1", "section": "Wellness", "kind": "embedded-video", '
        '"title": "T", "video_url": "not-a-url"}\n'
    )
    with pytest.raises(content.ContentFileError, match="v1"):
        content.load_mindfulness(bad)


def test_locator_urls_decode_to_the_search_phrase():
    for category, phrase in content.LOCATOR_CATEGORIES.items():
        url = content.locator_query(category)
        query = urllib.parse.parse_qs(urllib.parse.urlparse(url).query)
        assert query["q"] == [f"{phrase} near me"]


def test_locator_examples():
    url = content.locator_query("food pantries")
    decoded = urllib.parse.parse_qs(urllib.parse.urlparse(url).query)["q"][0]
    assert decoded == "food pantry near me"
    decoded = urllib.parse.parse_qs(
        urllib.parse.urlparse(content.locator_query("farmers markets")).query)["q"][0]
    assert decoded == "farmers market near me"
    with pytest.raises(content.UnknownLocatorCategoryError):
        content.locator_query("bookstores")


def test_locator_respects_configured_embed_base():
    url = content.locator_query("food pantries", embed_base="https://maps.internal/embed")
    assert url.startswith("https://maps.internal/embed?")
