"""Error hierarchy shared across modules.

Every service-visible failure derives from HubError so the HTTP layer can
render one uniform envelope: a stable machine code plus a human message.
"""

from __future__ import annotations


class HubError(Exception):
    """Base class for errors that map onto the service error envelope."""

    code = "internal-error"
    http_status = 500


class ValidationError(HubError):
    """Caller-supplied input failed validation."""

    code = "invalid-input"
    http_status = 400


class NotFoundError(HubError):
    """A named resource (id, category, section, kind) does not exist."""

    code = "not-found"
    http_status = 404


class ProviderUnavailableError(HubError):
    """An external provider is unreachable, failing, or unconfigured."""

    code = "provider-unavailable"
    http_status = 503
