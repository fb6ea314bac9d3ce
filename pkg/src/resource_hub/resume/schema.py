"""Structured resume input and its mapping onto the render-engine document.

The render document is a YAML-compatible tree: a top-level cv mapping with
contact fields and a sections mapping (education, experience,
certifications, skills). Mapping is lossless for non-empty input fields,
fabricates nothing, and serializes with a fixed field order so identical
inputs yield identical bytes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import yaml

from ..errors import ValidationError


@dataclass(frozen=True)
class EducationItem:
    institution: str
    credential: str = ""
    dates: str = ""  # free-form, never parsed


@dataclass(frozen=True)
class ExperienceItem:
    employer: str
    title: str = ""
    dates: str = ""
    bullets: tuple[str, ...] = ()


@dataclass(frozen=True)
class CertificationItem:
    name: str
    issuer: str = ""
    date: str = ""


@dataclass(frozen=True)
class ResumeInput:
    name: str
    phone: str = ""
    email: str = ""
    location: str = ""
    education: tuple[EducationItem, ...] = ()
    experience: tuple[ExperienceItem, ...] = ()
    certifications: tuple[CertificationItem, ...] = ()
    skills: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if not self.name.strip():
            raise ValidationError("resume name is required")

    @classmethod
    def from_dict(cls, payload: dict) -> "ResumeInput":
        personal = payload.get("personal", {})
        return cls(
            name=personal.get("name", ""),
            phone=personal.get("phone", ""),
            email=personal.get("email", ""),
            location=personal.get("location", ""),
            education=tuple(
                EducationItem(
                    institution=e.get("institution", ""),
                    credential=e.get("credential", ""),
                    dates=e.get("dates", ""),
                )
                for e in payload.get("education", [])
            ),
            experience=tuple(
                ExperienceItem(
                    employer=e.get("employer", ""),
                    title=e.get("title", ""),
                    dates=e.get("dates", ""),
                    bullets=tuple(e.get("bullets", [])),
                )
                for e in payload.get("experience", [])
            ),
            certifications=tuple(
                CertificationItem(
                    name=c.get("name", ""),
                    issuer=c.get("issuer", ""),
                    date=c.get("date", ""),
                )
                for c in payload.get("certifications", [])
            ),
            skills=tuple(payload.get("skills", [])),
        )

    def all_strings(self) -> list[str]:
        """Every non-empty input string; the round-trip oracle checks each."""
        strings = [self.name, self.phone, self.email, self.location]
        for e in self.education:
            strings += [e.institution, e.credential, e.dates]
        for x in self.experience:
            strings += [x.employer, x.title, x.dates, *x.bullets]
        for c in self.certifications:
            strings += [c.name, c.issuer, c.date]
        strings += list(self.skills)
        return [s for s in strings if s.strip()]


@dataclass(frozen=True)
class RenderDocument:
    data: dict = field(hash=False)

    def to_yaml(self) -> str:
        return yaml.safe_dump(self.data, sort_keys=False, allow_unicode=True, width=10_000)


def _put(mapping: dict, key: str, value: str) -> None:
    if value.strip():
        mapping[key] = value


def map_to_render_schema(resume: ResumeInput) -> RenderDocument:
    """Populate the render document from resume input, nothing added or lost."""
    cv: dict = {"name": resume.name}
    _put(cv, "location", resume.location)
    _put(cv, "email", resume.email)
    _put(cv, "phone", resume.phone)

    sections: dict = {}
    if resume.education:
        sections["education"] = []
        for item in resume.education:
            entry: dict = {"institution": item.institution}
            _put(entry, "area", item.credential)
            _put(entry, "date", item.dates)
            sections["education"].append(entry)
    if resume.experience:
        sections["experience"] = []
        for item in resume.experience:
            entry = {"company": item.employer}
            _put(entry, "position", item.title)
            _put(entry, "date", item.dates)
            if item.bullets:
                entry["highlights"] = list(item.bullets)
            sections["experience"].append(entry)
    if resume.certifications:
        sections["certifications"] = []
        for item in resume.certifications:
            entry = {"name": item.name}
            _put(entry, "summary", item.issuer)
            _put(entry, "date", item.date)
            sections["certifications"].append(entry)
    if resume.skills:
        sections["skills"] = list(resume.skills)

    if sections:
        cv["sections"] = sections
    return RenderDocument(data={"cv": cv})
