"""Shared test helpers: an independent area oracle, random assessments,
and a hypothesis strategy for whole projects."""

from __future__ import annotations

import math
import random
from datetime import datetime, timezone

from hypothesis import strategies as st

from drltool.model import Answer, Assessment, create_assessment, record_answer, set_applicability
from drltool.questions import default_questionnaire
from drltool.store import append_assessment, new_project


def oracle_vertices(radii: list[float]) -> list[tuple[float, float]]:
    """Explicit Cartesian vertices: axis k at angle pi/2 - 2*pi*k/N."""
    n = len(radii)
    pts = []
    for k, r in enumerate(radii):
        theta = math.pi / 2 - 2 * math.pi * k / n
        pts.append((r * math.cos(theta), r * math.sin(theta)))
    return pts


def shoelace_area(pts: list[tuple[float, float]]) -> float:
    total = 0.0
    n = len(pts)
    for k in range(n):
        x1, y1 = pts[k]
        x2, y2 = pts[(k + 1) % n]
        total += x1 * y2 - x2 * y1
    return abs(total) / 2.0


def oracle_normalized_area(radii: list[float]) -> float:
    """Shoelace area of the answer polygon over the all-best polygon area."""
    return shoelace_area(oracle_vertices(radii)) / shoelace_area(
        oracle_vertices([1.0] * len(radii))
    )


def radii_of(assessment: Assessment) -> list[float]:
    return [
        assessment.answer_for(q.id).ordinal / 3 for q in assessment.applicable_questions
    ]


_TS = datetime(2021, 1, 1, 12, 0, 0, tzinfo=timezone.utc)


def random_assessment(
    rng: random.Random, min_axes: int = 3, max_axes: int = 15
) -> Assessment:
    """A finalized assessment over the default questionnaire with a random
    applicable subset (min_axes..max_axes questions) and random answers."""
    questionnaire = default_questionnaire()
    ids = list(questionnaire.question_ids)
    keep = set(rng.sample(ids, rng.randint(min_axes, max_axes)))
    assessment = create_assessment("rand", "sample", _TS, questionnaire)
    for qid in ids:
        if qid in keep:
            assessment = record_answer(assessment, qid, rng.choice(list(Answer)))
        else:
            assessment = set_applicability(assessment, qid, False)
    return assessment


def raise_one_answer(rng: random.Random, assessment: Assessment) -> Assessment | None:
    """Raise a single randomly chosen answer one or more steps; None if the
    assessment is already all-Yes."""
    candidates = [
        q.id
        for q in assessment.applicable_questions
        if assessment.answer_for(q.id) is not Answer.YES
    ]
    if not candidates:
        return None
    qid = rng.choice(candidates)
    current = assessment.answer_for(qid)
    higher = [a for a in Answer if a > current]
    return record_answer(assessment, qid, rng.choice(higher))


_project_text = st.text(
    alphabet=st.characters(blacklist_categories=("Cs",)), min_size=0, max_size=30
)
_project_timestamps = st.datetimes(
    min_value=datetime(2000, 1, 1),
    max_value=datetime(2035, 1, 1),
    timezones=st.just(timezone.utc),
).map(lambda d: d.replace(microsecond=0))


@st.composite
def projects(draw):
    """Valid projects over the default questionnaire: 0..4 finalized
    assessments with random answers, notes, and applicability sets."""
    questionnaire = default_questionnaire()
    ids = list(questionnaire.question_ids)
    project = new_project(
        draw(st.uuids().map(lambda u: f"p-{u.hex[:8]}")),
        draw(_project_text),
        draw(_project_text),
    )
    n = draw(st.integers(min_value=0, max_value=4))
    stamps = sorted(draw(st.lists(_project_timestamps, min_size=n, max_size=n, unique=True)))
    for i, ts in enumerate(stamps):
        a = create_assessment(project.project.id, draw(_project_text), ts, questionnaire, f"a{i}")
        excluded = draw(st.sets(st.sampled_from(ids), max_size=5))
        for qid in sorted(excluded):
            a = set_applicability(a, qid, False)
        for qid in ids:
            if qid not in excluded:
                note = draw(st.one_of(st.none(), _project_text))
                a = record_answer(a, qid, draw(st.sampled_from(list(Answer))), note)
        project = append_assessment(project, a)
    return project
