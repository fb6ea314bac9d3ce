"""Narrative resume review: extracted PDF text in, three prose lists out.

The report is qualitative coaching only. There are no scores, ratings, or
attribute grades anywhere in its structure, and tests assert that shape.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import ValidationError
from ..providers import ChatMessage, ChatProvider, DEFAULT_CHAT_MODEL
from .pdftext import extract_text

MAX_UPLOAD_BYTES = 5 * 1024 * 1024

REVIEW_INSTRUCTIONS = (
    "You are a supportive career coach. Review the resume text the user provides "
    "and reply with narrative, actionable feedback in exactly three labeled sections:\n"
    "Strengths:\n- one strength per line\n"
    "Weaknesses:\n- one weakness per line\n"
    "Improvements:\n- one concrete improvement per line\n"
    "Write plain, encouraging prose. Do not assign scores, grades, or ratings."
)

_SECTION_RE = re.compile(r"^(strengths|weaknesses|improvements)\s*:\s*$", re.I)


class EmptyResumeTextError(ValidationError):
    code = "empty-resume-text"


@dataclass(frozen=True)
class ReviewReport:
    strengths: tuple[str, ...]
    weaknesses: tuple[str, ...]
    improvements: tuple[str, ...]


def parse_review_reply(reply: str) -> ReviewReport:
    """Parse the three labeled sections; an unparseable reply is preserved
    whole as a single improvements item rather than dropped."""
    sections: dict[str, list[str]] = {"strengths": [], "weaknesses": [], "improvements": []}
    current: str | None = None
    for raw_line in reply.splitlines():
        line = raw_line.strip()
        if not line:
            continue
        header = _SECTION_RE.match(line)
        if header:
            current = header.group(1).lower()
            continue
        if current is not None:
            sections[current].append(line.lstrip("-* ").strip())
    if not any(sections.values()):
        return ReviewReport(strengths=(), weaknesses=(), improvements=(reply.strip(),))
    return ReviewReport(
        strengths=tuple(sections["strengths"]),
        weaknesses=tuple(sections["weaknesses"]),
        improvements=tuple(sections["improvements"]),
    )


def review_resume(pdf: bytes, provider: ChatProvider,
                  model_id: str = DEFAULT_CHAT_MODEL) -> ReviewReport:
    """Extract the resume text and ask the provider for narrative feedback.

    Raises on unreadable PDFs, empty extracted text, oversized uploads, and
    provider failure (propagated, so callers can answer degraded).
    """
    if len(pdf) > MAX_UPLOAD_BYTES:
        raise ValidationError(f"resume upload exceeds {MAX_UPLOAD_BYTES} bytes")
    text = extract_text(pdf)
    if not text.strip():
        raise EmptyResumeTextError("no text could be extracted from the PDF")
    reply = provider.send(
        model_id=model_id,
        instructions=REVIEW_INSTRUCTIONS,
        grounding="",
        messages=[ChatMessage(role="user", text=text)],
    )
    return parse_review_reply(reply)
