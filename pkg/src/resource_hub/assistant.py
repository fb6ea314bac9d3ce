"""Chat sessions and dispatch: corpus answer on a hit, grounded generation on a miss.

Dispatch is programmatic, not prompt-level. Every incoming message is first
matched against the curated corpus; a hit returns the stored answer
byte-for-byte with no provider call. Only misses reach the chat provider,
which receives the active instruction profile, the corpus text as grounding,
and the full session history. Provider failure degrades to a fixed,
translated fallback message and never loses the user's message.
"""

from __future__ import annotations

import json
import threading
import time
import uuid
from dataclasses import dataclass, field
from pathlib import Path

from . import qa
from .errors import NotFoundError, ProviderUnavailableError, ValidationError
from .langs import SUPPORTED_LANGUAGES, require_language
from .providers import DEFAULT_CHAT_MODEL, ChatMessage, ChatProvider

SOURCE_CORPUS = "corpus-verbatim"
SOURCE_GENERATED = "generated"
SOURCE_DEGRADED = "degraded"

PROFILE_VERSIONS = ("1.0", "2.0", "3.0")
DEFAULT_PROFILE = "3.0"

# Shown verbatim when the chat provider is unavailable; points users at the
# always-available Common Questions tab.
FALLBACK_TEXT = {
    "en": "I'm sorry, the assistant is temporarily unavailable. Please try the Common Questions tab for answers to frequent questions, or try again in a moment.",
    "es": "Lo sentimos, el asistente no está disponible temporalmente. Consulte la pestaña Preguntas Comunes para ver respuestas a preguntas frecuentes, o inténtelo de nuevo en un momento.",
    "fr": "Désolé, l'assistant est temporairement indisponible. Veuillez consulter l'onglet Questions Courantes pour les réponses aux questions fréquentes, ou réessayez dans un instant.",
    "ar": "عذرًا، المساعد غير متاح مؤقتًا. يرجى الاطلاع على تبويب الأسئلة الشائعة للحصول على إجابات للأسئلة المتكررة، أو المحاولة مرة أخرى بعد قليل.",
}


class UnknownSessionError(NotFoundError):
    code = "unknown-session"


class UnknownProfileError(NotFoundError):
    code = "unknown-profile"


@dataclass(frozen=True)
class InstructionProfile:
    version: str
    text: str


class InstructionProfileSet:
    """The shipped instruction profiles, loaded from a data file."""

    def __init__(self, profiles: dict[str, str], default: str = DEFAULT_PROFILE) -> None:
        missing = [v for v in PROFILE_VERSIONS if v not in profiles]
        if missing:
            raise ValidationError(f"instruction profile file is missing versions: {missing}")
        if default not in profiles:
            raise ValidationError(f"default profile {default!r} is not defined")
        self._profiles = {v: InstructionProfile(version=v, text=t) for v, t in profiles.items()}
        self.default = default

    @classmethod
    def load(cls, path: str | Path) -> "InstructionProfileSet":
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        return cls(profiles=data["profiles"], default=data.get("default", DEFAULT_PROFILE))

    def get(self, version: str) -> InstructionProfile:
        try:
            return self._profiles[version]
        except KeyError:
            raise UnknownProfileError(
                f"unknown instruction profile {version!r}; known: {', '.join(sorted(self._profiles))}"
            ) from None


@dataclass(frozen=True)
class HistoryEntry:
    role: str  # "user" or "assistant"
    text: str
    timestamp: float


@dataclass
class ChatSession:
    session_id: str
    language_pref: str
    profile: str
    history: list[HistoryEntry] = field(default_factory=list)

    def _append(self, role: str, text: str) -> None:
        last = self.history[-1].timestamp if self.history else 0.0
        self.history.append(HistoryEntry(role=role, text=text, timestamp=max(time.time(), last)))


@dataclass(frozen=True)
class AssistantReply:
    text: str
    source: str  # SOURCE_CORPUS, SOURCE_GENERATED, or SOURCE_DEGRADED
    matched_pair: str | None = None


class Assistant:
    """Owns sessions and the dispatch policy.

    Sessions are processed exclusively and sequentially per session_id
    (a lock per session); distinct sessions proceed concurrently.
    """

    def __init__(
        self,
        corpus: qa.QACorpus,
        provider: ChatProvider,
        profiles: InstructionProfileSet,
        threshold: float = qa.DEFAULT_MATCH_THRESHOLD,
        model_id: str = DEFAULT_CHAT_MODEL,
    ) -> None:
        self.corpus = corpus
        self.provider = provider
        self.profiles = profiles
        self.threshold = threshold
        self.model_id = model_id
        self._sessions: dict[str, ChatSession] = {}
        self._session_locks: dict[str, threading.Lock] = {}
        self._registry_lock = threading.Lock()

    def create_session(self, language_pref: str = "en") -> ChatSession:
        require_language(language_pref)
        session = ChatSession(
            session_id=uuid.uuid4().hex,
            language_pref=language_pref,
            profile=self.profiles.default,
        )
        with self._registry_lock:
            self._sessions[session.session_id] = session
            self._session_locks[session.session_id] = threading.Lock()
        return session

    def get_session(self, session_id: str) -> ChatSession:
        try:
            return self._sessions[session_id]
        except KeyError:
            raise UnknownSessionError(f"unknown chat session {session_id!r}") from None

    def set_profile(self, session_id: str, version: str) -> ChatSession:
        session = self.get_session(session_id)
        self.profiles.get(version)  # validates
        with self._session_locks[session_id]:
            session.profile = version
        return session

    def handle_message(self, session_id: str, text: str) -> AssistantReply:
        session = self.get_session(session_id)
        if not qa.normalize(text):
            raise ValidationError("message is empty")

        with self._session_locks[session_id]:
            match = qa.match_query(self.corpus, text, self.threshold)
            if match.verdict == qa.VERBATIM_HIT and match.pair_id is not None:
                reply = AssistantReply(
                    text=qa.get_answer(self.corpus, match.pair_id),
                    source=SOURCE_CORPUS,
                    matched_pair=match.pair_id,
                )
            else:
                reply = self._generate(session, text)
            session._append("user", text)
            session._append("assistant", reply.text)
        return reply

    def _generate(self, session: ChatSession, text: str) -> AssistantReply:
        profile = self.profiles.get(session.profile)
        messages = [ChatMessage(role=e.role, text=e.text) for e in session.history]
        messages.append(ChatMessage(role="user", text=text))
        try:
            reply_text = self.provider.send(
                model_id=self.model_id,
                instructions=profile.text,
                grounding=self.corpus.raw_text,
                messages=messages,
            )
            return AssistantReply(text=reply_text, source=SOURCE_GENERATED)
        except ProviderUnavailableError:
            fallback = FALLBACK_TEXT.get(session.language_pref, FALLBACK_TEXT["en"])
            return AssistantReply(text=fallback, source=SOURCE_DEGRADED)


__all__ = [
    "Assistant",
    "AssistantReply",
    "ChatSession",
    "FALLBACK_TEXT",
    "HistoryEntry",
    "InstructionProfile",
    "InstructionProfileSet",
    "PROFILE_VERSIONS",
    "SOURCE_CORPUS",
    "SOURCE_DEGRADED",
    "SOURCE_GENERATED",
    "SUPPORTED_LANGUAGES",
]
