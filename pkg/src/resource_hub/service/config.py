"""Service configuration.

Content file paths default to the data files shipped inside the package.
The service refuses to start when a content file is missing; a missing
provider credential only degrades the endpoints that need it.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, fields
from importlib import resources
from pathlib import Path

from ..errors import ValidationError
from ..providers import CHAT_API_KEY_ENV, DEFAULT_CHAT_MODEL, TRANSLATE_API_KEY_ENV
from ..careers.client import CAREER_API_KEY_ENV, DEFAULT_CACHE_TTL_SECONDS
from ..content import DEFAULT_MAP_EMBED_BASE
from ..qa import DEFAULT_MATCH_THRESHOLD


def packaged_data_dir() -> Path:
    return Path(str(resources.files("resource_hub") / "data"))


@dataclass
class ServiceConfig:
    host: str = "127.0.0.1"
    port: int = 8080

    # content files (service refuses to start if any is missing)
    corpus_path: str = ""
    profiles_path: str = ""
    phrase_bank_path: str = ""
    faq_path: str = ""
    mindfulness_path: str = ""
    occupations_path: str = ""
    classifier_rules_path: str = ""
    interview_questions_path: str = ""
    metrics_vocab_path: str = ""
    translation_fixture_path: str = ""
    career_fixture_dir: str = ""

    # behavior
    match_threshold: float = DEFAULT_MATCH_THRESHOLD
    cache_ttl_seconds: float = DEFAULT_CACHE_TTL_SECONDS
    model_id: str = DEFAULT_CHAT_MODEL
    map_embed_base: str = DEFAULT_MAP_EMBED_BASE
    render_engine: str = "builtin"  # "builtin" or path to an executable
    render_concurrency: int = 2
    event_log_path: str = "usage-events.log"
    audio_dir: str = ""  # optional; pronunciation recordings served statically
    ui_dir: str = ""  # optional; built web UI served at / for same-origin deployment

    # providers: mocked entirely when offline_fixtures is set
    offline_fixtures: bool = False
    chat_base_url: str = "https://api.openai.com/v1"
    translate_base_url: str = ""
    career_base_url: str = ""

    def __post_init__(self) -> None:
        data = packaged_data_dir()
        defaults = {
            "corpus_path": data / "qa_corpus.jsonl",
            "profiles_path": data / "instruction_profiles.json",
            "phrase_bank_path": data / "phrase_bank.jsonl",
            "faq_path": data / "faq.jsonl",
            "mindfulness_path": data / "mindfulness.jsonl",
            "occupations_path": data / "occupations.json",
            "classifier_rules_path": data / "classifier_rules.json",
            "interview_questions_path": data / "interview_questions.json",
            "metrics_vocab_path": data / "metrics_vocab.json",
            "translation_fixture_path": data / "translations_fixture.json",
            "career_fixture_dir": data / "fixtures" / "career",
        }
        for name, default in defaults.items():
            if not getattr(self, name):
                setattr(self, name, str(default))

    @classmethod
    def from_file(cls, path: str | Path) -> "ServiceConfig":
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
        known = {f.name for f in fields(cls)}
        unknown = set(raw) - known
        if unknown:
            raise ValidationError(f"unknown config keys: {sorted(unknown)}")
        return cls(**raw)

    def require_content_files(self) -> None:
        """Startup gate: every content file must exist."""
        required = [
            self.corpus_path, self.profiles_path, self.phrase_bank_path,
            self.faq_path, self.mindfulness_path, self.occupations_path,
            self.classifier_rules_path, self.interview_questions_path,
            self.metrics_vocab_path,
        ]
        missing = [p for p in required if not Path(p).is_file()]
        if missing:
            raise ValidationError(f"missing content files: {missing}")

    def credential_present(self, env_var: str) -> bool:
        return bool(os.environ.get(env_var, "").strip())

    def provider_status(self) -> dict[str, str]:
        """Component readiness, before considering offline mode."""
        if self.offline_fixtures:
            return {"chat": "ok", "translation": "ok", "career-data": "ok"}
        return {
            "chat": "ok" if self.credential_present(CHAT_API_KEY_ENV) else "degraded",
            "translation": "ok" if self.translate_base_url
            and self.credential_present(TRANSLATE_API_KEY_ENV) else "degraded",
            "career-data": "ok" if self.career_base_url
            and self.credential_present(CAREER_API_KEY_ENV) else "degraded",
        }
