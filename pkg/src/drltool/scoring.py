"""Ordinal scoring, the radar-area metric, band summaries, and snapshot diffs."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import total_ordering
from typing import Mapping, Optional, Sequence

from .errors import DegeneratePolygonError, IncomparableQuestionnairesError
from .model import (
    BAND_PROGRESSION,
    Answer,
    Assessment,
    Band,
    require_finalized,
)


@dataclass(frozen=True)
class ScoredAnswer:
    """Numeric view of an answer: ordinal 0..3 and radial position 0..1."""

    ordinal: int
    radial: float


def score_answer(answer: Answer) -> ScoredAnswer:
    """Map an answer to its score: the worst sits at the chart center (0),
    the best at the edge (1), with equal spacing in between."""
    return ScoredAnswer(answer.ordinal, answer.ordinal / 3)


class BandStatus(str, Enum):
    CLEARED = "cleared"
    PARTIAL = "partial"
    BLOCKED = "blocked"
    UNKNOWN = "unknown"


@total_ordering
class EffectiveBand(Enum):
    """Where the project stands on the band ladder."""

    PRE_C = "pre-C"
    C = "C"
    B = "B"
    A_READY = "A-ready"

    @property
    def rank(self) -> int:
        return _LADDER.index(self)

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, EffectiveBand):
            return NotImplemented
        return self.rank < other.rank


_LADDER = (EffectiveBand.PRE_C, EffectiveBand.C, EffectiveBand.B, EffectiveBand.A_READY)


@dataclass(frozen=True)
class BandSummary:
    band: Band
    status: BandStatus
    counts: Mapping[Answer, int]
    applicable_count: int
    vacuous: bool = False


@dataclass(frozen=True)
class ReadinessScore:
    """Headline numbers for one finalized assessment.

    ``normalized_area`` is None when fewer than three questions are
    applicable and the radar polygon degenerates.
    """

    normalized_area: Optional[float]
    mean_score: float
    unknown_count: int
    effective_band: EffectiveBand


class DeltaKind(str, Enum):
    IMPROVED = "improved"
    REGRESSED = "regressed"
    UNCHANGED = "unchanged"
    APPLICABILITY_CHANGED = "applicability_changed"


@dataclass(frozen=True)
class QuestionDelta:
    question_id: str
    before: Optional[Answer]  # None means not applicable in that snapshot
    after: Optional[Answer]
    kind: DeltaKind


@dataclass(frozen=True)
class AssessmentDiff:
    pairs: tuple[QuestionDelta, ...]
    area_delta: Optional[float]
    resolved_unknowns: int

    def count(self, kind: DeltaKind) -> int:
        return sum(1 for p in self.pairs if p.kind == kind)


def _applicable_radii(assessment: Assessment) -> list[float]:
    return [
        score_answer(assessment.answer_for(q.id)).radial
        for q in assessment.applicable_questions
    ]


def polygon_ratio(radii: Sequence[float]) -> float:
    """Closed form for radar-polygon area over the all-best polygon area.

    With equal angular spacing the wedge areas reduce to products of
    neighbouring radii: sum(r_k * r_{k+1}, cyclic) / N.
    """
    n = len(radii)
    return sum(radii[k] * radii[(k + 1) % n] for k in range(n)) / n


def normalized_area(assessment: Assessment) -> float:
    """Radar-polygon area of the answers, normalized to the all-Yes polygon.

    The assessment method aims for the enclosed responses to cover as large
    an area as possible; this makes that objective a number in [0, 1].
    """
    require_finalized(assessment)
    radii = _applicable_radii(assessment)
    if len(radii) < 3:
        raise DegeneratePolygonError("degenerate polygon; use mean_score")
    return polygon_ratio(radii)


def mean_score(assessment: Assessment) -> float:
    """Arithmetic mean of the answer scores, in [0, 1].

    Complements the area metric, which annihilates isolated good answers
    whose neighbours sit at the center.
    """
    require_finalized(assessment)
    radii = _applicable_radii(assessment)
    return sum(radii) / len(radii)


def band_summary(assessment: Assessment) -> tuple[BandSummary, ...]:
    """Per-band status, in C, B, A order.

    A band is cleared only when every applicable question in it is Yes; a
    single "Don't know" marks the whole band unknown. A band whose questions
    are all excluded is vacuously cleared and flagged as such.
    """
    require_finalized(assessment)
    summaries = []
    for band in BAND_PROGRESSION:
        answers = [
            assessment.answer_for(q.id)
            for q in assessment.applicable_questions
            if q.band == band
        ]
        counts = {value: answers.count(value) for value in Answer}
        if not answers:
            status, vacuous = BandStatus.CLEARED, True
        elif counts[Answer.DONT_KNOW] > 0:
            status, vacuous = BandStatus.UNKNOWN, False
        elif counts[Answer.NO] > 0:
            status, vacuous = BandStatus.BLOCKED, False
        elif counts[Answer.PARTIALLY] > 0:
            status, vacuous = BandStatus.PARTIAL, False
        else:
            status, vacuous = BandStatus.CLEARED, False
        summaries.append(
            BandSummary(
                band=band,
                status=status,
                counts=counts,
                applicable_count=len(answers),
                vacuous=vacuous,
            )
        )
    return tuple(summaries)


def effective_band(assessment: Assessment) -> EffectiveBand:
    """Highest band such that it and every band below it are cleared."""
    cleared = {s.band: s.status == BandStatus.CLEARED for s in band_summary(assessment)}
    if not cleared[Band.C]:
        return EffectiveBand.PRE_C
    if not cleared[Band.B]:
        return EffectiveBand.C
    if not cleared[Band.A]:
        return EffectiveBand.B
    return EffectiveBand.A_READY


def unknown_count(assessment: Assessment) -> int:
    require_finalized(assessment)
    return sum(
        1
        for q in assessment.applicable_questions
        if assessment.answer_for(q.id) is Answer.DONT_KNOW
    )


def readiness_score(assessment: Assessment) -> ReadinessScore:
    require_finalized(assessment)
    try:
        area = normalized_area(assessment)
    except DegeneratePolygonError:
        area = None
    return ReadinessScore(
        normalized_area=area,
        mean_score=mean_score(assessment),
        unknown_count=unknown_count(assessment),
        effective_band=effective_band(assessment),
    )


def diff_assessments(before: Assessment, after: Assessment) -> AssessmentDiff:
    """Per-question deltas between two snapshots of the same questionnaire.

    Scores are compared over the intersection of the applicable sets;
    questions whose applicability changed are reported as such rather than
    refusing the comparison.
    """
    if before.questionnaire_version != after.questionnaire_version:
        raise IncomparableQuestionnairesError("incomparable questionnaires")
    require_finalized(before)
    require_finalized(after)

    pairs: list[QuestionDelta] = []
    shared_before: list[float] = []
    shared_after: list[float] = []
    resolved = 0
    for q in before.questionnaire.in_order:
        b_applicable = q.id not in before.not_applicable
        a_applicable = q.id not in after.not_applicable
        b_answer = before.answer_for(q.id) if b_applicable else None
        a_answer = after.answer_for(q.id) if a_applicable else None
        if b_applicable != a_applicable:
            kind = DeltaKind.APPLICABILITY_CHANGED
        elif not b_applicable:
            kind = DeltaKind.UNCHANGED
        elif a_answer > b_answer:  # type: ignore[operator]
            kind = DeltaKind.IMPROVED
        elif a_answer < b_answer:  # type: ignore[operator]
            kind = DeltaKind.REGRESSED
        else:
            kind = DeltaKind.UNCHANGED
        pairs.append(QuestionDelta(q.id, b_answer, a_answer, kind))

        if b_applicable and a_applicable:
            shared_before.append(score_answer(b_answer).radial)
            shared_after.append(score_answer(a_answer).radial)
            if b_answer is Answer.DONT_KNOW and a_answer > b_answer:
                resolved += 1

    if len(shared_before) >= 3:
        area_delta = polygon_ratio(shared_after) - polygon_ratio(shared_before)
    else:
        area_delta = None
    return AssessmentDiff(tuple(pairs), area_delta, resolved)
