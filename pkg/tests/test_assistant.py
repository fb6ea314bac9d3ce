"""Session management and verbatim-first dispatch."""

from __future__ import annotations

import hashlib

import pytest

from resource_hub import qa
from resource_hub.assistant import (
    Assistant,
    FALLBACK_TEXT,
    InstructionProfileSet,
    SOURCE_CORPUS,
    SOURCE_DEGRADED,
    SOURCE_GENERATED,
)
from resource_hub.errors import NotFoundError, ValidationError
from resource_hub.providers import MockChatProvider

PROFILE_SHAS = {
    "1.0": "c6187fd0613b6dde3786c78ba2f38e646f6142d6f2f54e3411e27d9b0d5375cc",
    "2.0": "95252e558d060a86a8f2a11ba78066361ad770bd6a249a3bdc8379681599a8a1",
    "3.0": "48aa9192f31f66123746ded3386f0ccf9488cdff83a6fcc341d15f73e463f4b5",
}


@pytest.fixture(scope="module")
def profiles(data_dir):
    return InstructionProfileSet.load(data_dir / "instruction_profiles.json")


@pytest.fixture()
def provider():
    return MockChatProvider()


@pytest.fixture()
def assistant(corpus, profiles, provider):
    return Assistant(corpus=corpus, provider=provider, profiles=profiles)


def test_shipped_profiles_are_byte_exact(profiles):
    for version, expected_sha in PROFILE_SHAS.items():
        text = profiles.get(version).text
        assert hashlib.sha256(text.encode("utf-8")).hexdigest() == expected_sha
    assert profiles.default == "3.0"
    assert "answer with the exact response provided" in profiles.get("3.0").text
    assert "helpful assistant who answers user questions clearly" in profiles.get("1.0").text


def test_create_session_languages(assistant):
    session = assistant.create_session("en")
    assert session.history == []
    assert assistant.create_session("ar").language_pref == "ar"
    with pytest.raises(ValidationError, match="de"):
        assistant.create_session("de")


def test_corpus_question_bypasses_provider(assistant, provider, corpus):
    session = assistant.create_session("en")
    reply = assistant.handle_message(session.session_id, "What is a job interview like?")
    assert reply.source == SOURCE_CORPUS
    assert reply.matched_pair == "q-job-interview"
    assert reply.text == qa.get_answer(corpus, "q-job-interview")
    assert provider.calls == 0


def test_miss_goes_to_provider_with_grounding_and_history(assistant, provider, corpus, profiles):
    session = assistant.create_session("en")
    reply = assistant.handle_message(session.session_id, "How can I prepare for a dishwashing job?")
    assert reply.source == SOURCE_GENERATED
    assert provider.calls == 1
    exchange = provider.exchanges[0]
    assert exchange["model_id"] == "gpt-4o-11-20-2024"
    assert exchange["instructions"] == profiles.get("3.0").text
    assert exchange["grounding"] == corpus.raw_text
    assert exchange["messages"][-1].text == "How can I prepare for a dishwashing job?"


def test_empty_message_rejected_without_history_change(assistant):
    session = assistant.create_session("en")
    with pytest.raises(ValidationError):
        assistant.handle_message(session.session_id, "   !!! ")
    assert session.history == []


def test_provider_failure_degrades_and_keeps_history(corpus, profiles):
    provider = MockChatProvider(fail=True)
    assistant = Assistant(corpus=corpus, provider=provider, profiles=profiles)
    session = assistant.create_session("es")
    reply = assistant.handle_message(session.session_id, "Necesito ayuda con algo nuevo")
    assert reply.source == SOURCE_DEGRADED
    assert reply.text == FALLBACK_TEXT["es"]
    assert len(session.history) == 2
    assert session.history[0].text == "Necesito ayuda con algo nuevo"


def test_history_discipline(assistant):
    session = assistant.create_session("en")
    for i in range(4):
        assistant.handle_message(session.session_id, f"question number {i} about something")
    assert len(session.history) == 8
    roles = [entry.role for entry in session.history]
    assert roles == ["user", "assistant"] * 4
    stamps = [entry.timestamp for entry in session.history]
    assert stamps == sorted(stamps)


def test_set_profile_changes_provider_instructions(assistant, provider, profiles):
    session = assistant.create_session("en")
    assistant.set_profile(session.session_id, "1.0")
    assistant.handle_message(session.session_id, "Something not in the corpus at all")
    assert provider.exchanges[-1]["instructions"] == profiles.get("1.0").text


def test_unknown_profile_and_session(assistant):
    session = assistant.create_session("en")
    with pytest.raises(NotFoundError, match="4.0"):
        assistant.set_profile(session.session_id, "4.0")
    with pytest.raises(NotFoundError):
        assistant.handle_message("no-such-session", "hello there friend")


def test_source_tag_soundness(assistant, corpus):
    session = assistant.create_session("en")
    for text in ("What is 2-1-1 and how do I use it?", "Banana weather protocol?"):
        reply = assistant.handle_message(session.session_id, text)
        if reply.source == SOURCE_CORPUS:
            assert reply.matched_pair is not None
            assert reply.text == qa.get_answer(corpus, reply.matched_pair)
        else:
            assert reply.matched_pair is None
