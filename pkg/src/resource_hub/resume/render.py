"""PDF rendering behind a swappable engine boundary.

An engine takes the serialized render document (a YAML file on disk) plus
an isolated working directory and produces a PDF path. Deployments point
SubprocessRenderEngine at their document-compilation tool; the built-in
engine renders a clean single-column layout locally so the platform works
with no external tooling. Built-in rendering wraps only at word boundaries
and targets Latin-script text (standard PDF fonts).
"""

from __future__ import annotations

import subprocess
import tempfile
import threading
from dataclasses import dataclass
from pathlib import Path
from typing import Protocol

import yaml
from reportlab.lib.pagesizes import LETTER
from reportlab.pdfbase.pdfmetrics import stringWidth
from reportlab.pdfgen import canvas

from ..errors import HubError
from .schema import RenderDocument, ResumeInput, map_to_render_schema

PAGE_WIDTH, PAGE_HEIGHT = LETTER
MARGIN = 54.0
BODY_FONT = "Helvetica"
BOLD_FONT = "Helvetica-Bold"


class EngineFailureError(HubError):
    """Render-engine invocation failed; carries captured diagnostics."""

    code = "render-engine-failure"
    http_status = 502

    def __init__(self, message: str, diagnostics: str = "") -> None:
        super().__init__(message)
        self.diagnostics = diagnostics


class RenderEngine(Protocol):
    def render(self, document_path: Path, workdir: Path) -> Path: ...


class SubprocessRenderEngine:
    """Invokes an external executable: <exe> <document.yaml> <output.pdf>."""

    def __init__(self, executable: str, timeout: float = 60.0) -> None:
        self.executable = executable
        self.timeout = timeout

    def render(self, document_path: Path, workdir: Path) -> Path:
        pdf_path = workdir / "resume.pdf"
        command = [self.executable, str(document_path), str(pdf_path)]
        try:
            completed = subprocess.run(
                command, capture_output=True, text=True, timeout=self.timeout, cwd=workdir,
            )
        except subprocess.TimeoutExpired as exc:
            raise EngineFailureError(
                f"render engine timed out after {self.timeout}s",
                diagnostics=str(exc.stdout or "") + str(exc.stderr or ""),
            ) from exc
        except OSError as exc:
            raise EngineFailureError(f"render engine could not be invoked: {exc}") from exc
        if completed.returncode != 0:
            raise EngineFailureError(
                f"render engine exited with status {completed.returncode}",
                diagnostics=(completed.stdout + "\n" + completed.stderr).strip(),
            )
        if not pdf_path.exists():
            raise EngineFailureError("render engine produced no PDF", diagnostics=completed.stdout)
        return pdf_path


@dataclass
class _Cursor:
    canvas: canvas.Canvas
    y: float

    def line(self, text: str, font: str, size: float, indent: float = 0.0) -> None:
        max_width = PAGE_WIDTH - 2 * MARGIN - indent
        for piece in _wrap(text, font, size, max_width):
            if self.y < MARGIN + size:
                self.canvas.showPage()
                self.y = PAGE_HEIGHT - MARGIN
            self.canvas.setFont(font, size)
            self.canvas.drawString(MARGIN + indent, self.y, piece)
            self.y -= size * 1.35

    def gap(self, amount: float) -> None:
        self.y -= amount


def _wrap(text: str, font: str, size: float, max_width: float) -> list[str]:
    words = text.split()
    if not words:
        return []
    lines: list[str] = []
    current = words[0]
    for word in words[1:]:
        candidate = f"{current} {word}"
        if stringWidth(candidate, font, size) <= max_width:
            current = candidate
        else:
            lines.append(current)
            current = word
    lines.append(current)
    return lines


class BuiltinRenderEngine:
    """Local renderer: single-column letter-size layout via reportlab."""

    def render(self, document_path: Path, workdir: Path) -> Path:
        try:
            document = yaml.safe_load(document_path.read_text(encoding="utf-8"))
            cv = document["cv"]
        except (OSError, yaml.YAMLError, KeyError, TypeError) as exc:
            raise EngineFailureError(f"render document is invalid: {exc}") from exc

        pdf_path = workdir / "resume.pdf"
        page = canvas.Canvas(str(pdf_path), pagesize=LETTER, invariant=1)
        cursor = _Cursor(canvas=page, y=PAGE_HEIGHT - MARGIN)

        cursor.line(cv.get("name", ""), BOLD_FONT, 18)
        contact = " | ".join(
            cv[key] for key in ("location", "email", "phone") if cv.get(key)
        )
        if contact:
            cursor.line(contact, BODY_FONT, 10)
        cursor.gap(10)

        sections = cv.get("sections", {})
        renderers = {
            "education": self._education,
            "experience": self._experience,
            "certifications": self._certifications,
            "skills": self._skills,
        }
        for section, entries in sections.items():
            cursor.line(section.capitalize(), BOLD_FONT, 13)
            cursor.gap(2)
            renderers.get(section, self._fallback)(cursor, entries)
            cursor.gap(8)

        page.showPage()
        page.save()
        return pdf_path

    @staticmethod
    def _education(cursor: _Cursor, entries: list[dict]) -> None:
        for entry in entries:
            heading = " - ".join(v for v in (entry.get("institution"), entry.get("area")) if v)
            cursor.line(heading, BOLD_FONT, 11)
            if entry.get("date"):
                cursor.line(entry["date"], BODY_FONT, 10, indent=12)
            cursor.gap(3)

    @staticmethod
    def _experience(cursor: _Cursor, entries: list[dict]) -> None:
        for entry in entries:
            heading = " - ".join(v for v in (entry.get("company"), entry.get("position")) if v)
            cursor.line(heading, BOLD_FONT, 11)
            if entry.get("date"):
                cursor.line(entry["date"], BODY_FONT, 10, indent=12)
            for highlight in entry.get("highlights", []):
                cursor.line(f"* {highlight}", BODY_FONT, 10, indent=12)
            cursor.gap(3)

    @staticmethod
    def _certifications(cursor: _Cursor, entries: list[dict]) -> None:
        for entry in entries:
            cursor.line(entry.get("name", ""), BOLD_FONT, 11)
            detail = " | ".join(v for v in (entry.get("summary"), entry.get("date")) if v)
            if detail:
                cursor.line(detail, BODY_FONT, 10, indent=12)
            cursor.gap(3)

    @staticmethod
    def _skills(cursor: _Cursor, entries: list[str]) -> None:
        for skill in entries:
            cursor.line(f"* {skill}", BODY_FONT, 10, indent=12)

    @staticmethod
    def _fallback(cursor: _Cursor, entries: object) -> None:
        for entry in entries if isinstance(entries, list) else [entries]:
            cursor.line(str(entry), BODY_FONT, 10, indent=12)


def build_resume(
    resume: ResumeInput,
    engine: RenderEngine,
    limiter: threading.Semaphore | None = None,
) -> bytes:
    """Map, serialize, render; returns the PDF bytes.

    Each invocation runs in its own temporary working directory. The
    optional semaphore bounds concurrent engine invocations.
    """
    document: RenderDocument = map_to_render_schema(resume)
    yaml_text = document.to_yaml()
    if limiter is not None:
        limiter.acquire()
    try:
        with tempfile.TemporaryDirectory(prefix="resume-render-") as tmp:
            workdir = Path(tmp)
            document_path = workdir / "document.yaml"
            document_path.write_text(yaml_text, encoding="utf-8")
            pdf_path = engine.render(document_path, workdir)
            pdf = pdf_path.read_bytes()
    finally:
        if limiter is not None:
            limiter.release()
    if not pdf.startswith(b"%PDF-"):
        raise EngineFailureError("render engine produced a non-PDF file")
    return pdf
