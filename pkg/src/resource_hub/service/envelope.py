"""Uniform error envelope with localized human messages.

Every error response has the same shape regardless of module:

    {"error": {"code": ..., "message": ..., "detail": ..., "request_id": ...}}

`message` is the localized, user-facing line chosen by the request's lang
parameter; `detail` is the untranslated developer-facing description.
"""

from __future__ import annotations

from ..errors import HubError
from ..langs import SUPPORTED_LANGUAGES

_MESSAGES: dict[str, dict[str, str]] = {
    "invalid-input": {
        "en": "The request is invalid. Please check your input and try again.",
        "es": "La solicitud no es válida. Verifique los datos e inténtelo de nuevo.",
        "fr": "La demande n'est pas valide. Vérifiez votre saisie et réessayez.",
        "ar": "الطلب غير صالح. يرجى التحقق من المدخلات والمحاولة مرة أخرى.",
    },
    "not-found": {
        "en": "The requested item was not found.",
        "es": "No se encontró el elemento solicitado.",
        "fr": "L'élément demandé est introuvable.",
        "ar": "العنصر المطلوب غير موجود.",
    },
    "provider-unavailable": {
        "en": "This feature is temporarily unavailable. Please try again later.",
        "es": "Esta función no está disponible temporalmente. Inténtelo más tarde.",
        "fr": "Cette fonction est temporairement indisponible. Réessayez plus tard.",
        "ar": "هذه الميزة غير متاحة مؤقتًا. يرجى المحاولة لاحقًا.",
    },
    "internal-error": {
        "en": "Something went wrong on our side. Please try again.",
        "es": "Algo salió mal de nuestro lado. Inténtelo de nuevo.",
        "fr": "Une erreur s'est produite de notre côté. Veuillez réessayer.",
        "ar": "حدث خطأ من جانبنا. يرجى المحاولة مرة أخرى.",
    },
}

# specific codes reuse the message family of their base behavior
_CODE_FAMILIES = {400: "invalid-input", 404: "not-found", 409: "invalid-input",
                  502: "provider-unavailable", 503: "provider-unavailable"}


def localized_message(status: int, lang: str) -> str:
    family = _CODE_FAMILIES.get(status, "internal-error")
    lang = lang if lang in SUPPORTED_LANGUAGES else "en"
    return _MESSAGES[family][lang]


def envelope(error: HubError | None, status: int, detail: str,
             lang: str, request_id: str) -> dict:
    code = error.code if error is not None else "internal-error"
    return {
        "error": {
            "code": code,
            "message": localized_message(status, lang),
            "detail": detail,
            "request_id": request_id,
        }
    }
