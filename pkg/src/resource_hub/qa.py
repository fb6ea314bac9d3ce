"""Curated question-answer corpus: loading, validation, and verbatim-first matching.

The corpus is the assistant's ground-truth reference. Each record pairs a
commonly asked question with a reviewed answer that must be returned
byte-for-byte when the user's query matches. Matching is deliberately
non-semantic: token-set Jaccard similarity over normalized text, compared
against a threshold, so dispatch decisions are deterministic and reviewable
without any model dependency.

Corpus file format: UTF-8 JSON Lines, one record per line with fields
id / category / language / question / answer. JSON string escaping keeps
answers with embedded newlines on a single line and restores them exactly.
"""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass
from pathlib import Path

from .errors import NotFoundError, ValidationError

CATEGORIES = ("well-being", "employment", "navigation", "family", "chicago-services")

DEFAULT_MATCH_THRESHOLD = 0.75

VERBATIM_HIT = "verbatim-hit"
MISS = "miss"

_PUNCT_RE = re.compile(r"[^\w\s]")
_WS_RE = re.compile(r"\s+")


class CorpusError(ValidationError):
    """A corpus file failed to parse or validate; message names the record."""

    code = "corpus-invalid"


class UnknownPairError(NotFoundError):
    code = "unknown-pair"


@dataclass(frozen=True)
class QAPair:
    id: str
    question: str
    answer: str
    category: str
    language: str = "en"


@dataclass(frozen=True)
class QACorpus:
    pairs: tuple[QAPair, ...]
    version: str
    source_path: str
    raw_text: str  # exact file content, inlined into provider grounding

    def __post_init__(self) -> None:
        object.__setattr__(self, "_by_id", {p.id: p for p in self.pairs})

    def pair(self, pair_id: str) -> QAPair:
        try:
            return self._by_id[pair_id]  # type: ignore[attr-defined]
        except KeyError:
            raise UnknownPairError(f"no corpus pair with id {pair_id!r}") from None


@dataclass(frozen=True)
class MatchResult:
    verdict: str  # VERBATIM_HIT or MISS
    pair_id: str | None
    score: float


def normalize(text: str) -> str:
    """Case-fold, strip punctuation, collapse whitespace runs, trim ends."""
    stripped = _PUNCT_RE.sub("", text.casefold())
    return _WS_RE.sub(" ", stripped).strip()


def token_set(text: str) -> frozenset[str]:
    normalized = normalize(text)
    return frozenset(normalized.split()) if normalized else frozenset()


def token_set_jaccard(a: str, b: str) -> float:
    """|A∩B| / |A∪B| over normalized token sets; 0.0 when the union is empty."""
    ta, tb = token_set(a), token_set(b)
    union = ta | tb
    if not union:
        return 0.0
    return len(ta & tb) / len(union)


def load_corpus(path: str | Path) -> QACorpus:
    """Load and validate a corpus file.

    Raises CorpusError naming the offending record on: unparseable line,
    missing field, duplicate id, empty question or answer, unknown category.
    Answers are kept byte-identical to the file content.
    """
    path = Path(path)
    raw_text = path.read_text(encoding="utf-8")
    lines = [line for line in raw_text.splitlines() if line.strip()]
    if not lines:
        raise CorpusError(f"corpus file {path} contains no records")

    pairs: list[QAPair] = []
    seen: set[str] = set()
    for lineno, line in enumerate(lines, start=1):
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            raise CorpusError(f"corpus record on line {lineno} is not valid JSON: {exc}") from exc
        if not isinstance(record, dict):
            raise CorpusError(f"corpus record on line {lineno} is not an object")
        try:
            pair = QAPair(
                id=record["id"],
                question=record["question"],
                answer=record["answer"],
                category=record["category"],
                language=record.get("language", "en"),
            )
        except KeyError as exc:
            raise CorpusError(f"corpus record on line {lineno} is missing field {exc}") from exc
        if not pair.id:
            raise CorpusError(f"corpus record on line {lineno} has an empty id")
        if pair.id in seen:
            raise CorpusError(f"duplicate corpus id {pair.id!r} on line {lineno}")
        if not pair.question.strip():
            raise CorpusError(f"corpus record {pair.id!r} has an empty question")
        if not pair.answer.strip():
            raise CorpusError(f"corpus record {pair.id!r} has an empty answer")
        if pair.category not in CATEGORIES:
            raise CorpusError(f"corpus record {pair.id!r} has unknown category {pair.category!r}")
        seen.add(pair.id)
        pairs.append(pair)

    version = hashlib.sha256(raw_text.encode("utf-8")).hexdigest()[:12]
    return QACorpus(pairs=tuple(pairs), version=version, source_path=str(path), raw_text=raw_text)


def match_query(corpus: QACorpus, query: str, threshold: float = DEFAULT_MATCH_THRESHOLD) -> MatchResult:
    """Score the query against every corpus question; best score wins.

    Ties at equal score go to the lowest corpus index. A query with no
    tokens after normalization is always a miss with score 0.
    """
    if not 0.0 <= threshold <= 1.0:
        raise ValidationError(f"threshold must be in [0, 1], got {threshold}")
    query_tokens = token_set(query)
    if not query_tokens:
        return MatchResult(verdict=MISS, pair_id=None, score=0.0)

    best_pair: QAPair | None = None
    best_score = 0.0
    for pair in corpus.pairs:  # strict > keeps the lowest-index pair on ties
        score = token_set_jaccard(query, pair.question)
        if score > best_score:
            best_score = score
            best_pair = pair

    if best_pair is not None and best_score >= threshold:
        return MatchResult(verdict=VERBATIM_HIT, pair_id=best_pair.id, score=best_score)
    return MatchResult(verdict=MISS, pair_id=None, score=best_score)


def get_answer(corpus: QACorpus, pair_id: str) -> str:
    """Return the stored answer, byte-identical to the corpus file."""
    return corpus.pair(pair_id).answer
