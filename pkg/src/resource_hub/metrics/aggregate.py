"""Roll-ups over the event log: key totals, per-tab counts, question mix.

Counts are plain event-log cardinalities, so reports over concatenated logs
add componentwise. Corrupt lines are never silently dropped: they are
skipped and surfaced in a diagnostics counter.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from .classify import QUESTION_CATEGORIES, category_slug
from .events import parse_line

TAB_TARGETS = (
    "resume",
    "career-services",
    "mindfulness",
    "translator",
    "common-questions",
    "locator",
)

_TAB_LABELS = {
    "resume": "Resume",
    "career-services": "Career Services",
    "mindfulness": "Mindfulness",
    "translator": "Translator",
    "common-questions": "Common Questions",
    "locator": "Locator",
}


@dataclass
class AggregateReport:
    session_count: int = 0
    question_count: int = 0
    resume_generated_count: int = 0
    audio_play_count: int = 0
    tab_counts: dict[str, int] = field(default_factory=dict)
    question_category_counts: dict[str, int] = field(default_factory=dict)
    career_panel_counts: dict[str, int] = field(default_factory=dict)
    skipped_lines: int = 0

    def __add__(self, other: "AggregateReport") -> "AggregateReport":
        def merge(a: dict[str, int], b: dict[str, int]) -> dict[str, int]:
            return dict(Counter(a) + Counter(b))

        return AggregateReport(
            session_count=self.session_count + other.session_count,
            question_count=self.question_count + other.question_count,
            resume_generated_count=self.resume_generated_count + other.resume_generated_count,
            audio_play_count=self.audio_play_count + other.audio_play_count,
            tab_counts=merge(self.tab_counts, other.tab_counts),
            question_category_counts=merge(self.question_category_counts, other.question_category_counts),
            career_panel_counts=merge(self.career_panel_counts, other.career_panel_counts),
            skipped_lines=self.skipped_lines + other.skipped_lines,
        )


def aggregate_lines(lines: Iterable[str]) -> AggregateReport:
    """Aggregate raw log lines into a report.

    Session count is the number of distinct session ids, which is additive
    across logs only when their session-id sets are disjoint (ids are
    per-visit and unique, so disjointness holds for real logs).
    """
    sessions: set[str] = set()
    report = AggregateReport()
    for line in lines:
        if not line.strip():
            continue
        try:
            event = parse_line(line)
        except ValueError:
            report.skipped_lines += 1
            continue
        sessions.add(event.session_id)
        if event.kind == "question_submitted":
            report.question_count += 1
            report.question_category_counts[event.target] = (
                report.question_category_counts.get(event.target, 0) + 1
            )
        elif event.kind == "resume_generated":
            report.resume_generated_count += 1
        elif event.kind == "audio_played":
            report.audio_play_count += 1
        elif event.kind == "tab_opened":
            report.tab_counts[event.target] = report.tab_counts.get(event.target, 0) + 1
        elif event.kind == "career_panel_opened":
            report.career_panel_counts[event.target] = (
                report.career_panel_counts.get(event.target, 0) + 1
            )
    report.session_count = len(sessions)
    return report


def render_report(report: AggregateReport) -> str:
    """Plain-text summary: key totals, then per-tab access frequency."""
    lines = [
        "Key results",
        "-----------",
        f"User sessions:                 {report.session_count}",
        f"Questions asked to assistant:  {report.question_count}",
        f"Resumes generated:             {report.resume_generated_count}",
        f"American Job Center accessed:  {report.career_panel_counts.get('american-job-center', 0)}",
        f"Audio pronunciations played:   {report.audio_play_count}",
        "",
        "Tabs accessed",
        "-------------",
    ]
    for target in TAB_TARGETS:
        label = _TAB_LABELS[target]
        lines.append(f"{label + ':':<31}{report.tab_counts.get(target, 0)}")
    lines += ["", "Question types", "--------------"]
    for category in QUESTION_CATEGORIES:
        slug = category_slug(category)
        lines.append(f"{category + ':':<31}{report.question_category_counts.get(slug, 0)}")
    if report.skipped_lines:
        lines += ["", f"Skipped corrupt log lines: {report.skipped_lines}"]
    return "\n".join(lines)
