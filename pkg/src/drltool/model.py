"""Core data model: bands, answers, questionnaires, and assessment sessions.

All types are immutable values; the recording operations return updated
copies instead of mutating, so assessments can be shared freely.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from datetime import datetime, timezone
from enum import Enum
from functools import total_ordering
from typing import Mapping, Optional

from .errors import (
    NoApplicableQuestionsError,
    NotFinalizedError,
    QuestionExcludedError,
    QuestionnaireValidationError,
    UnknownQuestionError,
)


class Band(str, Enum):
    """The three readiness bands, in the usual order of progression."""

    C = "C"
    B = "B"
    A = "A"

    @property
    def theme(self) -> str:
        return _BAND_THEMES[self]

    @property
    def title(self) -> str:
        return f"Band {self.value}"


_BAND_THEMES = {Band.C: "accessibility", Band.B: "validity", Band.A: "utility"}

#: Band progression order: data matures from C towards A.
BAND_PROGRESSION: tuple[Band, ...] = (Band.C, Band.B, Band.A)


@total_ordering
class Answer(Enum):
    """Four-option ordinal answer scale.

    "Don't know" is always the worst answer, "Yes" the one to strive for;
    the total order is DONT_KNOW < NO < PARTIALLY < YES.
    """

    DONT_KNOW = "dont_know"
    NO = "no"
    PARTIALLY = "partially"
    YES = "yes"

    @property
    def ordinal(self) -> int:
        return _ANSWER_ORDINALS[self]

    @property
    def label(self) -> str:
        return _ANSWER_LABELS[self]

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, Answer):
            return NotImplemented
        return self.ordinal < other.ordinal


_ANSWER_ORDINALS = {Answer.DONT_KNOW: 0, Answer.NO: 1, Answer.PARTIALLY: 2, Answer.YES: 3}
_ANSWER_LABELS = {
    Answer.DONT_KNOW: "Don't know",
    Answer.NO: "No",
    Answer.PARTIALLY: "Partially",
    Answer.YES: "Yes",
}


@dataclass(frozen=True)
class Question:
    id: str
    band: Band
    headline: str
    guidance: str
    order_index: int


@dataclass(frozen=True)
class QuestionnaireDefinition:
    """A versioned, ordered set of questions."""

    version: str
    questions: tuple[Question, ...]

    @property
    def in_order(self) -> tuple[Question, ...]:
        return tuple(sorted(self.questions, key=lambda q: q.order_index))

    @property
    def question_ids(self) -> tuple[str, ...]:
        return tuple(q.id for q in self.in_order)

    def question(self, question_id: str) -> Question:
        for q in self.questions:
            if q.id == question_id:
                return q
        raise UnknownQuestionError(f"no such question: {question_id}")

    def by_band(self, band: Band) -> tuple[Question, ...]:
        return tuple(q for q in self.in_order if q.band == band)


def validate_questionnaire(definition: QuestionnaireDefinition) -> list[str]:
    """Check a questionnaire against its invariants.

    Returns the list of violations; an empty list means the definition is ok.
    Violations are data, not failures, so nothing is raised here.
    """
    violations: list[str] = []
    if not definition.questions:
        violations.append("questionnaire has no questions")
        return violations

    seen: set[str] = set()
    for q in definition.questions:
        if q.id in seen:
            violations.append(f"duplicate id {q.id}")
        seen.add(q.id)

    order = sorted(q.order_index for q in definition.questions)
    if order != list(range(1, len(definition.questions) + 1)):
        violations.append(
            "non-contiguous order: order_index values must be exactly 1..N, got "
            + ", ".join(str(i) for i in order)
        )

    for q in definition.questions:
        if not isinstance(q.band, Band):
            violations.append(f"unknown band {q.band!r} on {q.id}")

    return violations


@dataclass(frozen=True)
class Response:
    answer: Answer
    note: Optional[str] = None


@dataclass(frozen=True)
class Assessment:
    """One assessment session: a point-in-time snapshot of the answers.

    ``responses`` and ``not_applicable`` are disjoint; once finalized their
    union covers every question of the questionnaire.
    """

    id: str
    project_id: str
    label: str
    timestamp: datetime
    questionnaire: QuestionnaireDefinition
    responses: Mapping[str, Response] = field(default_factory=dict)
    not_applicable: frozenset[str] = frozenset()

    @property
    def questionnaire_version(self) -> str:
        return self.questionnaire.version

    @property
    def applicable_questions(self) -> tuple[Question, ...]:
        return tuple(q for q in self.questionnaire.in_order if q.id not in self.not_applicable)

    @property
    def is_finalized(self) -> bool:
        ids = set(self.questionnaire.question_ids)
        answered = set(self.responses)
        if answered & self.not_applicable:
            return False
        return answered | self.not_applicable == ids

    def answer_for(self, question_id: str) -> Answer:
        return self.responses[question_id].answer

    def note_for(self, question_id: str) -> Optional[str]:
        resp = self.responses.get(question_id)
        return resp.note if resp else None


def _as_utc(ts: datetime) -> datetime:
    if ts.tzinfo is None:
        return ts.replace(tzinfo=timezone.utc)
    return ts.astimezone(timezone.utc)


def make_assessment_id(label: str, timestamp: datetime) -> str:
    slug = re.sub(r"[^a-z0-9]+", "-", label.lower()).strip("-") or "session"
    return f"{slug}-{_as_utc(timestamp):%Y%m%dT%H%M%SZ}"


def create_assessment(
    project_id: str,
    label: str,
    timestamp: datetime,
    definition: QuestionnaireDefinition,
    assessment_id: str | None = None,
) -> Assessment:
    """Start a new, empty assessment against a validated questionnaire."""
    violations = validate_questionnaire(definition)
    if violations:
        raise QuestionnaireValidationError(violations)
    ts = _as_utc(timestamp)
    return Assessment(
        id=assessment_id or make_assessment_id(label, ts),
        project_id=project_id,
        label=label,
        timestamp=ts,
        questionnaire=definition,
    )


def record_answer(
    assessment: Assessment,
    question_id: str,
    answer: Answer | str,
    note: Optional[str] = None,
) -> Assessment:
    """Record (or overwrite) the agreed answer for one question."""
    assessment.questionnaire.question(question_id)
    if question_id in assessment.not_applicable:
        raise QuestionExcludedError(f"question excluded: {question_id}")
    value = answer if isinstance(answer, Answer) else Answer(answer)
    updated = dict(assessment.responses)
    updated[question_id] = Response(value, note)
    return replace(assessment, responses=updated)


def set_applicability(assessment: Assessment, question_id: str, applicable: bool) -> Assessment:
    """Include or exclude a question from this assessment.

    Excluding a question discards any answer already recorded for it; at
    least one question must always remain applicable.
    """
    assessment.questionnaire.question(question_id)
    if applicable:
        return replace(assessment, not_applicable=assessment.not_applicable - {question_id})
    excluded = assessment.not_applicable | {question_id}
    if len(excluded) >= len(assessment.questionnaire.questions):
        raise NoApplicableQuestionsError("at least one question must remain applicable")
    remaining = {qid: r for qid, r in assessment.responses.items() if qid != question_id}
    return replace(assessment, responses=remaining, not_applicable=excluded)


def require_finalized(assessment: Assessment) -> None:
    if not assessment.is_finalized:
        ids = set(assessment.questionnaire.question_ids)
        open_ids = sorted(ids - set(assessment.responses) - assessment.not_applicable)
        raise NotFinalizedError(
            "assessment is not finalized; unanswered questions: " + ", ".join(open_ids)
        )


def record_answers(
    assessment: Assessment,
    answers: Mapping[str, Answer | str],
    notes: Mapping[str, str] | None = None,
) -> Assessment:
    """Record a batch of answers, in questionnaire order."""
    notes = notes or {}
    for q in assessment.questionnaire.in_order:
        if q.id in answers:
            assessment = record_answer(assessment, q.id, answers[q.id], notes.get(q.id))
    return assessment
