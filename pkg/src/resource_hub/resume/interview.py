"""Turn-taking interview practice with per-turn feedback and a final summary.

The state machine is deliberately strict: a session is active or ended,
turns only grow while active, ending requires at least one turn, and an
ended session rejects every mutation. Speech capture and playback live at
the UI/provider boundary; this module works on transcripts.
"""

from __future__ import annotations

import json
import threading
import uuid
from dataclasses import dataclass, field
from pathlib import Path

from ..errors import NotFoundError, ProviderUnavailableError, ValidationError
from ..providers import ChatMessage, ChatProvider, DEFAULT_CHAT_MODEL

STATE_ACTIVE = "active"
STATE_ENDED = "ended"

FEEDBACK_DIMENSIONS = ("clarity", "confidence", "completeness")

FEEDBACK_INSTRUCTIONS = (
    "You are an encouraging interview coach. The user answers the interview "
    "question: {question!r}. Give short feedback on their spoken answer in "
    "exactly three labeled sections:\nClarity:\nConfidence:\nCompleteness:\n"
    "One or two sentences each, naming one strength and one thing to improve. "
    "No scores or grades."
)

SUMMARY_INSTRUCTIONS = (
    "You are an encouraging interview coach. The user practiced the interview "
    "question: {question!r} and gave the numbered answers below. Write a short "
    "written summary of their performance with actionable suggestions, "
    "referencing each answer. No scores or grades."
)

FEEDBACK_UNAVAILABLE = "Feedback is temporarily unavailable for this response."


class UnknownQuestionError(NotFoundError):
    code = "unknown-question"


class UnknownInterviewError(NotFoundError):
    code = "unknown-interview"


class SessionStateError(ValidationError):
    """A mutation was attempted in the wrong state (ended, or no turns)."""

    code = "interview-state"
    http_status = 409


@dataclass(frozen=True)
class TurnFeedback:
    clarity: str
    confidence: str
    completeness: str
    available: bool = True


@dataclass(frozen=True)
class Turn:
    transcript: str
    feedback: TurnFeedback


@dataclass
class InterviewSession:
    session_id: str
    question_id: str
    question_text: str
    turns: list[Turn] = field(default_factory=list)
    state: str = STATE_ACTIVE
    summary: str | None = None


def load_question_bank(path: str | Path) -> dict[str, str]:
    """Fixed question bank: id -> question text, from a data file."""
    with open(path, encoding="utf-8") as fh:
        items = json.load(fh)
    bank = {item["id"]: item["text"] for item in items}
    if not bank:
        raise ValidationError(f"question bank {path} is empty")
    return bank


def _parse_feedback(reply: str) -> TurnFeedback:
    notes = {dim: "" for dim in FEEDBACK_DIMENSIONS}
    current: str | None = None
    for raw_line in reply.splitlines():
        line = raw_line.strip()
        if not line:
            continue
        lowered = line.lower()
        matched = False
        for dim in FEEDBACK_DIMENSIONS:
            if lowered.startswith(dim + ":"):
                current = dim
                remainder = line[len(dim) + 1 :].strip()
                if remainder:
                    notes[dim] = remainder
                matched = True
                break
        if not matched and current is not None:
            notes[current] = (notes[current] + " " + line).strip()
    if not any(notes.values()):
        # unlabeled reply: keep the prose rather than losing it
        notes = {dim: reply.strip() for dim in FEEDBACK_DIMENSIONS}
    return TurnFeedback(
        clarity=notes["clarity"], confidence=notes["confidence"],
        completeness=notes["completeness"], available=True,
    )


class InterviewCenter:
    """Owns interview sessions; same exclusive-per-session contract as chat."""

    def __init__(self, question_bank: dict[str, str], provider: ChatProvider,
                 model_id: str = DEFAULT_CHAT_MODEL) -> None:
        self.question_bank = dict(question_bank)
        self.provider = provider
        self.model_id = model_id
        self._sessions: dict[str, InterviewSession] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._registry_lock = threading.Lock()

    def start_interview(self, question_id: str) -> InterviewSession:
        if question_id not in self.question_bank:
            raise UnknownQuestionError(f"unknown interview question {question_id!r}")
        session = InterviewSession(
            session_id=uuid.uuid4().hex,
            question_id=question_id,
            question_text=self.question_bank[question_id],
        )
        with self._registry_lock:
            self._sessions[session.session_id] = session
            self._locks[session.session_id] = threading.Lock()
        return session

    def get_session(self, session_id: str) -> InterviewSession:
        try:
            return self._sessions[session_id]
        except KeyError:
            raise UnknownInterviewError(f"unknown interview session {session_id!r}") from None

    def submit_turn(self, session_id: str, transcript: str) -> TurnFeedback:
        session = self.get_session(session_id)
        if not transcript.strip():
            raise ValidationError("transcript is empty")
        with self._locks[session_id]:
            if session.state != STATE_ACTIVE:
                raise SessionStateError("interview session has ended")
            feedback = self._feedback_for(session, transcript)
            session.turns.append(Turn(transcript=transcript, feedback=feedback))
        return feedback

    def _feedback_for(self, session: InterviewSession, transcript: str) -> TurnFeedback:
        try:
            reply = self.provider.send(
                model_id=self.model_id,
                instructions=FEEDBACK_INSTRUCTIONS.format(question=session.question_text),
                grounding="",
                messages=[ChatMessage(role="user", text=transcript)],
            )
            return _parse_feedback(reply)
        except ProviderUnavailableError:
            # the turn is still recorded; only the feedback is unavailable
            return TurnFeedback(
                clarity=FEEDBACK_UNAVAILABLE, confidence=FEEDBACK_UNAVAILABLE,
                completeness=FEEDBACK_UNAVAILABLE, available=False,
            )

    def end_interview(self, session_id: str) -> str:
        session = self.get_session(session_id)
        with self._locks[session_id]:
            if session.state != STATE_ACTIVE:
                raise SessionStateError("interview session already ended")
            if not session.turns:
                raise SessionStateError("cannot end an interview with no turns")
            turn_count = len(session.turns)
            header = f"Interview practice summary ({turn_count} response{'s' if turn_count != 1 else ''} reviewed)."
            numbered = "\n".join(
                f"{i}. {turn.transcript}" for i, turn in enumerate(session.turns, start=1)
            )
            try:
                prose = self.provider.send(
                    model_id=self.model_id,
                    instructions=SUMMARY_INSTRUCTIONS.format(question=session.question_text),
                    grounding="",
                    messages=[ChatMessage(role="user", text=numbered)],
                )
            except ProviderUnavailableError:
                prose = ("Summary generation was unavailable; the per-turn feedback above "
                         "still applies.")
            session.summary = f"{header}\n{prose}"
            session.state = STATE_ENDED
        return session.summary
