"""Tests for scoring: answer mapping, area metric, band statuses, diffs."""

from __future__ import annotations

import random
from datetime import datetime, timezone

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import oracle_normalized_area, radii_of, raise_one_answer, random_assessment
from drltool.errors import DegeneratePolygonError, IncomparableQuestionnairesError
from drltool.model import (
    Answer,
    Band,
    Question,
    QuestionnaireDefinition,
    create_assessment,
    record_answer,
    set_applicability,
)
from drltool.questions import default_questionnaire
from drltool.scoring import (
    BandStatus,
    DeltaKind,
    EffectiveBand,
    band_summary,
    diff_assessments,
    effective_band,
    mean_score,
    normalized_area,
    polygon_ratio,
    readiness_score,
    score_answer,
)

T0 = datetime(2021, 3, 1, 9, 0, 0, tzinfo=timezone.utc)


def uniform_assessment(answer: Answer, n: int = 15):
    """All applicable questions answered identically; keeps the first n."""
    questionnaire = default_questionnaire()
    a = create_assessment("P1", "s", T0, questionnaire)
    ids = list(questionnaire.question_ids)
    for qid in ids[n:]:
        a = set_applicability(a, qid, False)
    for qid in ids[:n]:
        a = record_answer(a, qid, answer)
    return a


def assessment_with(answers: dict[str, Answer]):
    a = create_assessment("P1", "s", T0, default_questionnaire())
    for qid, answer in answers.items():
        a = record_answer(a, qid, answer)
    return a


class TestScoreAnswer:
    @pytest.mark.parametrize(
        "answer,ordinal",
        [(Answer.DONT_KNOW, 0), (Answer.NO, 1), (Answer.PARTIALLY, 2), (Answer.YES, 3)],
    )
    def test_mapping(self, answer, ordinal):
        scored = score_answer(answer)
        assert scored.ordinal == ordinal
        assert scored.radial == ordinal / 3

    def test_extremes(self):
        assert score_answer(Answer.DONT_KNOW).radial == 0.0
        assert score_answer(Answer.YES).radial == 1.0


class TestNormalizedArea:
    def test_all_yes(self):
        assert normalized_area(uniform_assessment(Answer.YES)) == pytest.approx(1.0, abs=1e-12)

    def test_all_partially_similarity(self):
        # similar polygon scaled by 2/3: area ratio (2/3)^2
        assert normalized_area(uniform_assessment(Answer.PARTIALLY)) == pytest.approx(
            4 / 9, abs=1e-12
        )

    def test_all_dont_know(self):
        assert normalized_area(uniform_assessment(Answer.DONT_KNOW)) == 0.0

    def test_four_axis_case_against_oracle(self):
        # radii [1, 2/3, 1/3, 0]; oracle value frozen from the explicit
        # Cartesian shoelace computation: 2/9
        radii = [1.0, 2 / 3, 1 / 3, 0.0]
        assert oracle_normalized_area(radii) == pytest.approx(2 / 9, abs=1e-12)
        assert polygon_ratio(radii) == pytest.approx(2 / 9, abs=1e-12)

    def test_isolated_spike_scores_zero(self):
        answers = {qid: Answer.DONT_KNOW for qid in default_questionnaire().question_ids}
        answers["Q5"] = Answer.YES
        a = assessment_with(answers)
        assert normalized_area(a) == 0.0
        assert oracle_normalized_area(radii_of(a)) == pytest.approx(0.0, abs=1e-12)

    def test_degenerate_polygon(self):
        a = uniform_assessment(Answer.YES, n=2)
        with pytest.raises(DegeneratePolygonError, match="use mean_score"):
            normalized_area(a)

    def test_closed_form_matches_oracle_on_random_assessments(self):
        rng = random.Random(20210518)
        for _ in range(300):
            a = random_assessment(rng)
            assert normalized_area(a) == pytest.approx(
                oracle_normalized_area(radii_of(a)), abs=1e-12
            )

    def test_rotation_and_reflection_invariance(self):
        rng = random.Random(7)
        for _ in range(200):
            radii = [rng.choice([0, 1 / 3, 2 / 3, 1.0]) for _ in range(rng.randint(3, 15))]
            base = polygon_ratio(radii)
            shift = rng.randrange(len(radii))
            rotated = radii[shift:] + radii[:shift]
            assert polygon_ratio(rotated) == pytest.approx(base, abs=1e-12)
            assert polygon_ratio(list(reversed(radii))) == pytest.approx(base, abs=1e-12)

    @pytest.mark.parametrize(
        "original,permuted",
        [
            ([1.0, 1.0, 0.0, 0.0], [1.0, 0.0, 1.0, 0.0]),
            ([1.0, 2 / 3, 1 / 3, 0.0, 0.0], [1.0, 0.0, 2 / 3, 0.0, 1 / 3]),
        ],
    )
    def test_not_invariant_under_arbitrary_permutation(self, original, permuted):
        assert sorted(original) == sorted(permuted)
        assert polygon_ratio(original) != pytest.approx(polygon_ratio(permuted), abs=1e-9)


class TestMeanScore:
    def test_all_yes(self):
        assert mean_score(uniform_assessment(Answer.YES)) == pytest.approx(1.0)

    def test_all_partially(self):
        assert mean_score(uniform_assessment(Answer.PARTIALLY)) == pytest.approx(2 / 3)

    def test_single_yes_among_unknowns(self):
        answers = {qid: Answer.DONT_KNOW for qid in default_questionnaire().question_ids}
        answers["Q1"] = Answer.YES
        assert mean_score(assessment_with(answers)) == pytest.approx(1 / 15)


class TestBandSummary:
    def test_first_session_fixture_statuses(self, kickoff):
        statuses = {s.band: s.status for s in band_summary(kickoff)}
        assert statuses[Band.C] is BandStatus.UNKNOWN
        assert statuses[Band.B] is BandStatus.BLOCKED
        assert statuses[Band.A] is BandStatus.UNKNOWN

    def test_first_session_fixture_tallies(self, kickoff):
        summaries = {s.band: s for s in band_summary(kickoff)}
        assert summaries[Band.C].counts[Answer.DONT_KNOW] == 3
        assert summaries[Band.C].counts[Answer.NO] == 2
        assert summaries[Band.B].counts[Answer.NO] == 2
        assert summaries[Band.A].counts[Answer.PARTIALLY] == 2
        assert summaries[Band.A].applicable_count == 8

    def test_all_yes_cleared(self):
        assert all(
            s.status is BandStatus.CLEARED and not s.vacuous
            for s in band_summary(uniform_assessment(Answer.YES))
        )

    def test_vacuous_band(self):
        a = create_assessment("P1", "s", T0, default_questionnaire())
        a = set_applicability(a, "Q6", False)
        a = set_applicability(a, "Q7", False)
        for qid in default_questionnaire().question_ids:
            if qid not in ("Q6", "Q7"):
                a = record_answer(a, qid, Answer.PARTIALLY)
        summary = {s.band: s for s in band_summary(a)}[Band.B]
        assert summary.status is BandStatus.CLEARED and summary.vacuous
        assert summary.applicable_count == 0

    def test_partial_status(self):
        statuses = {s.band: s.status for s in band_summary(uniform_assessment(Answer.PARTIALLY))}
        assert set(statuses.values()) == {BandStatus.PARTIAL}

    def test_statuses_partition(self):
        rng = random.Random(99)
        for _ in range(100):
            a = random_assessment(rng)
            for s in band_summary(a):
                assert isinstance(s.status, BandStatus)  # exactly one status per band


class TestEffectiveBand:
    def test_all_yes_is_a_ready(self):
        assert effective_band(uniform_assessment(Answer.YES)) is EffectiveBand.A_READY

    def test_accessibility_blocked_is_pre_c(self):
        answers = {qid: Answer.YES for qid in default_questionnaire().question_ids}
        answers["Q1"] = Answer.NO
        assert effective_band(assessment_with(answers)) is EffectiveBand.PRE_C

    def test_utility_partial_is_b(self):
        answers = {qid: Answer.YES for qid in default_questionnaire().question_ids}
        answers["Q8"] = Answer.PARTIALLY
        assert effective_band(assessment_with(answers)) is EffectiveBand.B

    def test_ladder_order(self):
        assert (
            EffectiveBand.PRE_C < EffectiveBand.C < EffectiveBand.B < EffectiveBand.A_READY
        )


class TestReadinessScore:
    def test_perfect_scores_iff_all_yes(self):
        score = readiness_score(uniform_assessment(Answer.YES))
        assert score.normalized_area == pytest.approx(1.0)
        assert score.mean_score == pytest.approx(1.0)
        assert score.unknown_count == 0

    def test_unknown_count(self, kickoff):
        assert readiness_score(kickoff).unknown_count == 7

    def test_degenerate_area_is_none(self):
        score = readiness_score(uniform_assessment(Answer.YES, n=2))
        assert score.normalized_area is None
        assert score.mean_score == pytest.approx(1.0)


class TestDiff:
    def test_fixture_progression(self, kickoff, pre_experiment):
        diff = diff_assessments(kickoff, pre_experiment)
        assert diff.area_delta is not None and diff.area_delta > 0
        assert diff.resolved_unknowns == 7
        assert diff.count(DeltaKind.REGRESSED) == 0

    def test_identical_snapshots(self, kickoff):
        diff = diff_assessments(kickoff, kickoff)
        assert diff.area_delta == 0
        assert diff.resolved_unknowns == 0
        assert all(p.kind is DeltaKind.UNCHANGED for p in diff.pairs)

    def test_single_improvement_classified(self):
        before = assessment_with(
            {qid: Answer.YES for qid in default_questionnaire().question_ids} | {"Q6": Answer.NO}
        )
        after = assessment_with({qid: Answer.YES for qid in default_questionnaire().question_ids})
        diff = diff_assessments(before, after)
        kinds = {p.question_id: p.kind for p in diff.pairs}
        assert kinds["Q6"] is DeltaKind.IMPROVED
        assert diff.count(DeltaKind.IMPROVED) == 1

    def test_regression_classified(self):
        before = assessment_with({qid: Answer.YES for qid in default_questionnaire().question_ids})
        after = assessment_with(
            {qid: Answer.YES for qid in default_questionnaire().question_ids}
            | {"Q3": Answer.PARTIALLY}
        )
        diff = diff_assessments(before, after)
        kinds = {p.question_id: p.kind for p in diff.pairs}
        assert kinds["Q3"] is DeltaKind.REGRESSED

    def test_version_mismatch_rejected(self, kickoff):
        other_def = QuestionnaireDefinition(
            "custom-1",
            tuple(
                Question(q.id, q.band, q.headline, q.guidance, q.order_index)
                for q in default_questionnaire().questions
            ),
        )
        other = create_assessment("P1", "s", T0, other_def)
        for qid in other_def.question_ids:
            other = record_answer(other, qid, Answer.YES)
        with pytest.raises(IncomparableQuestionnairesError, match="incomparable"):
            diff_assessments(kickoff, other)

    def test_applicability_change_reported_and_excluded_from_area(self):
        answers = {qid: Answer.PARTIALLY for qid in default_questionnaire().question_ids}
        before = assessment_with(answers)
        after = create_assessment("P1", "s2", T0, default_questionnaire())
        after = set_applicability(after, "Q4", False)
        for qid in default_questionnaire().question_ids:
            if qid != "Q4":
                after = record_answer(after, qid, Answer.PARTIALLY)
        diff = diff_assessments(before, after)
        kinds = {p.question_id: p.kind for p in diff.pairs}
        assert kinds["Q4"] is DeltaKind.APPLICABILITY_CHANGED
        # shared applicable answers identical, so the area over the shared
        # fourteen axes cancels exactly
        assert diff.area_delta == pytest.approx(0.0, abs=1e-12)

    def test_diff_of_assessment_with_itself_is_all_zero(self):
        rng = random.Random(41)
        for _ in range(50):
            a = random_assessment(rng)
            diff = diff_assessments(a, a)
            assert diff.resolved_unknowns == 0
            assert diff.area_delta in (0, None)
            assert diff.count(DeltaKind.IMPROVED) == diff.count(DeltaKind.REGRESSED) == 0


class TestMonotonicity:
    def test_raising_one_answer_never_hurts(self):
        rng = random.Random(20210301)
        checked = 0
        while checked < 300:
            a = random_assessment(rng)
            raised = raise_one_answer(rng, a)
            if raised is None:
                continue
            checked += 1
            assert mean_score(raised) >= mean_score(a) - 1e-12
            assert effective_band(raised) >= effective_band(a)
            if len(a.applicable_questions) >= 3:
                assert normalized_area(raised) >= normalized_area(a) - 1e-12


@settings(max_examples=200, deadline=None)
@given(
    radii=st.lists(st.sampled_from([0.0, 1 / 3, 2 / 3, 1.0]), min_size=3, max_size=15),
    data=st.data(),
)
def test_polygon_ratio_cyclic_invariance_property(radii, data):
    shift = data.draw(st.integers(min_value=0, max_value=len(radii) - 1))
    rotated = radii[shift:] + radii[:shift]
    assert polygon_ratio(rotated) == pytest.approx(polygon_ratio(radii), abs=1e-12)
    assert polygon_ratio(list(reversed(radii))) == pytest.approx(
        polygon_ratio(radii), abs=1e-12
    )
