"""Interview practice state machine."""

from __future__ import annotations

import random

import pytest

from resource_hub.errors import ValidationError
from resource_hub.providers import CannedChatProvider, MockChatProvider
from resource_hub.resume import InterviewCenter, load_question_bank
from resource_hub.resume.interview import (
    FEEDBACK_UNAVAILABLE,
    STATE_ACTIVE,
    STATE_ENDED,
    SessionStateError,
    UnknownQuestionError,
)

FEEDBACK_REPLY = (
    "Clarity: Easy to follow.\n"
    "Confidence: Steady voice.\n"
    "Completeness: Covered the main points.\n"
)


@pytest.fixture(scope="module")
def bank(data_dir):
    return load_question_bank(data_dir / "interview_questions.json")


@pytest.fixture()
def center(bank):
    return InterviewCenter(bank, CannedChatProvider(FEEDBACK_REPLY))


def test_question_bank_carries_the_five_core_questions(bank):
    assert bank["tell-me-about-yourself"] == "Can you tell me about yourself?"
    assert bank["salary-expectations"] == "What are your salary expectations?"
    assert len(bank) >= 5


def test_start_active_session_with_zero_turns(center):
    session = center.start_interview("tell-me-about-yourself")
    assert session.state == STATE_ACTIVE
    assert session.turns == []
    assert center.start_interview("salary-expectations").state == STATE_ACTIVE


def test_unknown_question_rejected(center):
    with pytest.raises(UnknownQuestionError, match="unknown-q"):
        center.start_interview("unknown-q")


def test_turn_records_three_dimension_feedback(center):
    session = center.start_interview("tell-me-about-yourself")
    feedback = center.submit_turn(session.session_id, "I have been a cook for five years.")
    assert feedback.clarity == "Easy to follow."
    assert feedback.confidence == "Steady voice."
    assert feedback.completeness == "Covered the main points."
    assert len(session.turns) == 1


def test_empty_transcript_rejected(center):
    session = center.start_interview("leisure-time")
    with pytest.raises(ValidationError):
        center.submit_turn(session.session_id, "   ")
    assert session.turns == []


def test_provider_failure_still_records_the_turn(bank):
    center = InterviewCenter(bank, MockChatProvider(fail=True))
    session = center.start_interview("handling-pressure")
    feedback = center.submit_turn(session.session_id, "I slow down and make a list.")
    assert feedback.available is False
    assert feedback.clarity == FEEDBACK_UNAVAILABLE
    assert len(session.turns) == 1


def test_end_produces_summary_referencing_turn_count(center):
    session = center.start_interview("independent-or-team")
    for i in range(3):
        center.submit_turn(session.session_id, f"Answer number {i + 1}.")
    summary = center.end_interview(session.session_id)
    assert session.state == STATE_ENDED
    assert "3 responses reviewed" in summary
    assert session.summary == summary


def test_ended_sessions_are_immutable(center):
    session = center.start_interview("tell-me-about-yourself")
    center.submit_turn(session.session_id, "One answer.")
    center.end_interview(session.session_id)
    with pytest.raises(SessionStateError):
        center.submit_turn(session.session_id, "Another answer.")
    with pytest.raises(SessionStateError):
        center.end_interview(session.session_id)
    assert len(session.turns) == 1


def test_end_requires_at_least_one_turn(center):
    session = center.start_interview("salary-expectations")
    with pytest.raises(SessionStateError):
        center.end_interview(session.session_id)
    assert session.state == STATE_ACTIVE


def test_summary_survives_provider_failure_at_end(bank):
    class FailOnSummary:
        def __init__(self):
            self.calls = 0

        def send(self, model_id, instructions, grounding, messages):
            self.calls += 1
            if "summary" in instructions.lower():
                from resource_hub.errors import ProviderUnavailableError
                raise ProviderUnavailableError("summary generation down")
            return FEEDBACK_REPLY

    center = InterviewCenter(bank, FailOnSummary())
    session = center.start_interview("tell-me-about-yourself")
    center.submit_turn(session.session_id, "An answer.")
    summary = center.end_interview(session.session_id)
    assert session.state == STATE_ENDED
    assert "1 response reviewed" in summary


def test_random_action_sequences_never_violate_the_state_machine(bank):
    """Model-checked walk: the recorded session always matches the model."""
    rng = random.Random(1347)
    center = InterviewCenter(bank, CannedChatProvider(FEEDBACK_REPLY))
    question_ids = list(bank)
    for _ in range(200):
        session = center.start_interview(rng.choice(question_ids))
        model_turns = 0
        model_state = STATE_ACTIVE
        for _ in range(rng.randrange(1, 8)):
            action = rng.choice(["turn", "empty-turn", "end"])
            if action == "turn":
                try:
                    center.submit_turn(session.session_id, f"answer {model_turns + 1}")
                    assert model_state == STATE_ACTIVE
                    model_turns += 1
                except SessionStateError:
                    assert model_state == STATE_ENDED
            elif action == "empty-turn":
                with pytest.raises((ValidationError, SessionStateError)):
                    center.submit_turn(session.session_id, "")
            else:
                try:
                    summary = center.end_interview(session.session_id)
                    assert model_state == STATE_ACTIVE and model_turns >= 1
                    model_state = STATE_ENDED
                    assert f"{model_turns} response" in summary
                except SessionStateError:
                    assert model_state == STATE_ENDED or model_turns == 0
            assert len(session.turns) == model_turns
            assert session.state == model_state
            assert (session.summary is not None) == (model_state == STATE_ENDED)
