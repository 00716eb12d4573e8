"""Markdown readiness reports for a single assessment snapshot."""

from __future__ import annotations

from typing import Optional

from .hints import hints_for
from .model import Answer, Assessment
from .scoring import (
    BandStatus,
    DeltaKind,
    band_summary,
    diff_assessments,
    readiness_score,
)
from .store import ProjectFile

_EXCERPT_LIMIT = 110


def _excerpt(text: str) -> str:
    """First sentence of the guidance, clipped for table use."""
    sentence = text.split(". ")[0].rstrip(".") + "."
    if len(sentence) > _EXCERPT_LIMIT:
        sentence = sentence[: _EXCERPT_LIMIT - 1].rstrip() + "\u2026"
    return sentence


def _cell(text: Optional[str]) -> str:
    return (text or "").replace("|", "\\|").replace("\n", " ")


def _fmt_area(value: Optional[float]) -> str:
    return "n/a" if value is None else f"{value:.4f}"


def build_report(
    project: ProjectFile,
    assessment: Assessment,
    previous: Optional[Assessment] = None,
    chart_filename: Optional[str] = None,
    hint_overlay: Optional[dict[str, tuple[str, ...]]] = None,
) -> str:
    """Render one snapshot as a deterministic markdown document."""
    score = readiness_score(assessment)
    lines: list[str] = []
    out = lines.append

    out(f"# Data readiness report: {project.project.name}")
    out("")
    out(f"- Project: `{project.project.id}`")
    out(f"- Session: {assessment.label} (`{assessment.id}`)")
    out(f"- Date: {assessment.timestamp:%Y-%m-%d %H:%M} UTC")
    out(f"- Questionnaire: {assessment.questionnaire_version}")
    out("")
    if chart_filename:
        out(f"![Readiness radar]({chart_filename})")
        out("")

    out("## Readiness")
    out("")
    out(f"- Effective band: **{score.effective_band.value}**")
    out(f"- Normalized area: {_fmt_area(score.normalized_area)}")
    out(f"- Mean score: {score.mean_score:.4f}")
    out(f"- Unknown answers: {score.unknown_count}")
    out("")

    out("## Band summaries")
    out("")
    out("| Band | Theme | Status | Yes | Partially | No | Don't know |")
    out("| --- | --- | --- | ---: | ---: | ---: | ---: |")
    for summary in band_summary(assessment):
        status = summary.status.value
        if summary.vacuous:
            status += " (vacuous)"
        out(
            f"| {summary.band.title} | {summary.band.theme} | {status} "
            f"| {summary.counts[Answer.YES]} | {summary.counts[Answer.PARTIALLY]} "
            f"| {summary.counts[Answer.NO]} | {summary.counts[Answer.DONT_KNOW]} |"
        )
    out("")

    out("## Answers")
    out("")
    out("| # | Question | Answer | Note | Guidance |")
    out("| --- | --- | --- | --- | --- |")
    for q in assessment.applicable_questions:
        answer = assessment.answer_for(q.id)
        out(
            f"| {q.id} | {_cell(q.headline)} | {answer.label} "
            f"| {_cell(assessment.note_for(q.id))} | {_cell(_excerpt(q.guidance))} |"
        )
    excluded = [q for q in assessment.questionnaire.in_order if q.id in assessment.not_applicable]
    if excluded:
        out("")
        out("Not applicable: " + ", ".join(q.id for q in excluded))
    out("")

    if previous is not None:
        diff = diff_assessments(previous, assessment)
        out(f"## Progress since {previous.label}")
        out("")
        out(f"- Area delta: {_fmt_area(diff.area_delta)}")
        out(f"- Resolved unknowns: {diff.resolved_unknowns}")
        out(
            f"- Improved: {diff.count(DeltaKind.IMPROVED)}, "
            f"regressed: {diff.count(DeltaKind.REGRESSED)}, "
            f"unchanged: {diff.count(DeltaKind.UNCHANGED)}, "
            f"applicability changed: {diff.count(DeltaKind.APPLICABILITY_CHANGED)}"
        )
        changed = [p for p in diff.pairs if p.kind is not DeltaKind.UNCHANGED]
        if changed:
            out("")
            out("| # | Before | After | Change |")
            out("| --- | --- | --- | --- |")
            for pair in changed:
                before = pair.before.label if pair.before else "n/a"
                after = pair.after.label if pair.after else "n/a"
                out(f"| {pair.question_id} | {before} | {after} | {pair.kind.value} |")
        out("")

    out("## Risk hints")
    out("")
    flagged = [
        q for q in assessment.applicable_questions
        if assessment.answer_for(q.id) is not Answer.YES
    ]
    if not flagged:
        out("All applicable questions are answered Yes; nothing flagged.")
        out("")
    for q in flagged:
        answer = assessment.answer_for(q.id)
        out(f"### {q.id} \u2014 {q.headline} ({answer.label})")
        out("")
        hints = hints_for(q.id, hint_overlay)
        if hints:
            for hint in hints:
                out(f"> {hint}")
                out(">")
            lines.pop()  # drop the trailing blockquote separator
        else:
            out("(no hints recorded for this question)")
        out("")

    return "\n".join(lines).rstrip("\n") + "\n"
