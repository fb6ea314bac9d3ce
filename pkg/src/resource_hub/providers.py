"""External provider boundaries: chat completion and text translation.

Both providers are defined as minimal protocols with deterministic mocks so
every feature is exercisable offline. The HTTP implementations read their
credentials from environment variables; credentials are never logged and
never appear in error messages.
"""

from __future__ import annotations

import json
import os
import threading
from dataclasses import dataclass, field
from typing import Protocol

import httpx

from .errors import ProviderUnavailableError

DEFAULT_CHAT_MODEL = "gpt-4o-11-20-2024"

CHAT_API_KEY_ENV = "CHAT_PROVIDER_API_KEY"
TRANSLATE_API_KEY_ENV = "TRANSLATE_PROVIDER_API_KEY"


@dataclass(frozen=True)
class ChatMessage:
    role: str  # "user" or "assistant"
    text: str


class ChatProvider(Protocol):
    """Chat-completion boundary.

    The request carries the model id, instruction prose, grounding text
    (the curated corpus, inlined), and the role-tagged message history.
    The reply is plain text.
    """

    def send(self, model_id: str, instructions: str, grounding: str,
             messages: list[ChatMessage]) -> str: ...


class TranslationProvider(Protocol):
    """Free-text translation boundary: (source language, text) -> English text."""

    def translate(self, source_lang: str, text: str) -> str: ...


class ProviderCallError(ProviderUnavailableError):
    """The provider call failed (timeout, transport error, bad status)."""

    code = "provider-call-failed"


# ---------------------------------------------------------------------------
# Deterministic mocks
# ---------------------------------------------------------------------------

@dataclass
class MockChatProvider:
    """Deterministic chat provider for tests and offline mode.

    Replies echo a stable digest of the last user message so assertions can
    distinguish generated replies from corpus ones. Set `fail` to exercise
    the degraded path. `calls` counts successful and failed sends alike;
    `exchanges` records everything passed in for contract assertions.
    """

    reply_prefix: str = "Here is some general guidance: "
    fail: bool = False
    calls: int = 0
    exchanges: list[dict] = field(default_factory=list)

    def send(self, model_id: str, instructions: str, grounding: str,
             messages: list[ChatMessage]) -> str:
        self.calls += 1
        self.exchanges.append({
            "model_id": model_id,
            "instructions": instructions,
            "grounding": grounding,
            "messages": list(messages),
        })
        if self.fail:
            raise ProviderCallError("mock chat provider configured to fail")
        last_user = next((m.text for m in reversed(messages) if m.role == "user"), "")
        return f"{self.reply_prefix}{last_user}"


@dataclass
class CannedChatProvider:
    """Chat provider that always returns a fixed text; used where offline
    mode needs replies in a specific labeled format (review, interview)."""

    text: str
    calls: int = 0

    def send(self, model_id: str, instructions: str, grounding: str,
             messages: list[ChatMessage]) -> str:
        self.calls += 1
        return self.text


class RecordedTranslationProvider:
    """Translation mock backed by a recorded-fixture table.

    Lookup key is "<source_lang>:<text>". Unrecorded inputs fall back to a
    deterministic tagged echo so offline mode stays usable end to end.
    """

    def __init__(self, fixtures: dict[str, str] | None = None,
                 fixture_path: str | os.PathLike | None = None) -> None:
        self.fixtures = dict(fixtures or {})
        if fixture_path is not None:
            with open(fixture_path, encoding="utf-8") as fh:
                self.fixtures.update(json.load(fh))
        self.calls = 0

    def translate(self, source_lang: str, text: str) -> str:
        self.calls += 1
        key = f"{source_lang}:{text}"
        if key in self.fixtures:
            return self.fixtures[key]
        return f"[{source_lang}->en] {text}"


class FailingTranslationProvider:
    def translate(self, source_lang: str, text: str) -> str:
        raise ProviderCallError("translation provider configured to fail")


# ---------------------------------------------------------------------------
# HTTP implementations
# ---------------------------------------------------------------------------

class HttpChatProvider:
    """Chat provider speaking an OpenAI-compatible chat-completions endpoint.

    Instructions and grounding travel as a single system message; the
    session history follows as role-tagged messages. Safe for concurrent
    calls: one locked client, per-call request objects.
    """

    def __init__(self, base_url: str, api_key: str | None = None, timeout: float = 30.0) -> None:
        self.base_url = base_url.rstrip("/")
        self._api_key = api_key if api_key is not None else os.environ.get(CHAT_API_KEY_ENV, "")
        self._client = httpx.Client(timeout=timeout)
        self._lock = threading.Lock()

    def send(self, model_id: str, instructions: str, grounding: str,
             messages: list[ChatMessage]) -> str:
        system_text = instructions
        if grounding:
            system_text += "\n\nReference question-answer document:\n" + grounding
        payload = {
            "model": model_id,
            "messages": [{"role": "system", "content": system_text}]
            + [{"role": m.role, "content": m.text} for m in messages],
        }
        headers = {"Authorization": f"Bearer {self._api_key}"}
        try:
            with self._lock:
                response = self._client.post(
                    f"{self.base_url}/chat/completions", json=payload, headers=headers
                )
            response.raise_for_status()
            body = response.json()
            return body["choices"][0]["message"]["content"]
        except httpx.HTTPError as exc:
            raise ProviderCallError(f"chat provider request failed: {type(exc).__name__}") from exc
        except (KeyError, IndexError, ValueError) as exc:
            raise ProviderCallError("chat provider returned an unexpected body") from exc


class HttpTranslationProvider:
    """Translation provider speaking a simple translate endpoint.

    POST {base_url}/translate with {"source": code, "target": "en",
    "text": ...}; expects {"text": translated}.
    """

    def __init__(self, base_url: str, api_key: str | None = None, timeout: float = 15.0) -> None:
        self.base_url = base_url.rstrip("/")
        self._api_key = api_key if api_key is not None else os.environ.get(TRANSLATE_API_KEY_ENV, "")
        self._client = httpx.Client(timeout=timeout)

    def translate(self, source_lang: str, text: str) -> str:
        payload = {"source": source_lang, "target": "en", "text": text}
        headers = {"Authorization": f"Bearer {self._api_key}"}
        try:
            response = self._client.post(f"{self.base_url}/translate", json=payload, headers=headers)
            response.raise_for_status()
            return response.json()["text"]
        except httpx.HTTPError as exc:
            raise ProviderCallError(f"translation request failed: {type(exc).__name__}") from exc
        except (KeyError, ValueError) as exc:
            raise ProviderCallError("translation provider returned an unexpected body") from exc
