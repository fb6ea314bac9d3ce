"""Resume building, narrative review, and interview practice."""

from .interview import InterviewCenter, InterviewSession, load_question_bank
from .pdftext import extract_text, UnreadablePdfError
from .render import (
    BuiltinRenderEngine,
    EngineFailureError,
    RenderEngine,
    SubprocessRenderEngine,
    build_resume,
)
from .review import ReviewReport, review_resume
from .schema import (
    CertificationItem,
    EducationItem,
    ExperienceItem,
    RenderDocument,
    ResumeInput,
    map_to_render_schema,
)

__all__ = [
    "BuiltinRenderEngine",
    "CertificationItem",
    "EducationItem",
    "EngineFailureError",
    "ExperienceItem",
    "InterviewCenter",
    "InterviewSession",
    "RenderDocument",
    "RenderEngine",
    "ResumeInput",
    "ReviewReport",
    "SubprocessRenderEngine",
    "UnreadablePdfError",
    "build_resume",
    "extract_text",
    "load_question_bank",
    "map_to_render_schema",
    "review_resume",
]
