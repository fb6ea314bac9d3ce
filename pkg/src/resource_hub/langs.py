"""The platform's four delivery languages; all content ships 1-to-1 in each."""

from __future__ import annotations

SUPPORTED_LANGUAGES = ("en", "es", "fr", "ar")

TRANSLATABLE_SOURCES = ("es", "fr", "ar")  # custom translation is X -> English only


def require_language(lang: str) -> str:
    from .errors import ValidationError

    if lang not in SUPPORTED_LANGUAGES:
        raise ValidationError(
            f"unsupported language {lang!r}; supported: {', '.join(SUPPORTED_LANGUAGES)}"
        )
    return lang
