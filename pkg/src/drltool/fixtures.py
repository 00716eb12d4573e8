"""Bundled demo project: two assessment sessions of a fictitious undertaking.

The first session is an immature kickoff state with many unknowns; the
second, taken before the first round of experiments, has no unknowns left
and encloses a visibly larger radar area. They double as test fixtures and
as sample data for the CLI and web UI.
"""

from __future__ import annotations

from datetime import datetime, timezone
from importlib import resources
from pathlib import Path

from .model import Answer, Assessment, create_assessment, record_answer
from .questions import default_questionnaire
from .store import ProjectFile, append_assessment, new_project

SAMPLE_PROJECT_ID = "demo"

_DK, _NO, _PART, _YES = Answer.DONT_KNOW, Answer.NO, Answer.PARTIALLY, Answer.YES

# Kickoff: the only certainties are six No answers; the stakeholders partially
# agree on the objective and the purpose of the data; everything else is open.
_KICKOFF_ANSWERS = {
    "Q1": _DK, "Q2": _DK, "Q3": _DK,
    "Q4": _NO, "Q5": _NO, "Q6": _NO, "Q7": _NO,
    "Q8": _PART, "Q9": _PART,
    "Q10": _NO, "Q11": _NO,
    "Q12": _DK, "Q13": _DK, "Q14": _DK, "Q15": _DK,
}
_KICKOFF_NOTES = {
    "Q4": "no ethics assessment made",
    "Q8": "stakeholders partially agree on the objective",
}

# Pre-experiment: access and format are in place and the data is trusted;
# licenses, legal access, and ethics are not quite there yet. Q11 and Q14 sit
# between No and Partially in the session record; encoded as No, with the
# reasoning captured in the notes.
_PRE_EXPERIMENT_ANSWERS = {
    "Q1": _YES, "Q2": _PART, "Q3": _PART, "Q4": _PART, "Q5": _YES,
    "Q6": _YES, "Q7": _YES,
    "Q8": _PART, "Q9": _YES, "Q10": _YES,
    "Q11": _NO, "Q12": _NO, "Q13": _PART, "Q14": _NO, "Q15": _YES,
}
_PRE_EXPERIMENT_NOTES = {
    "Q11": "evaluation steps unclear while the business objective is unsettled",
    "Q13": "security classification still work in progress",
    "Q14": "management plays it safe: no external sharing for now",
}


def _build(label: str, timestamp: datetime, answers: dict, notes: dict) -> Assessment:
    assessment = create_assessment(
        SAMPLE_PROJECT_ID, label, timestamp, default_questionnaire()
    )
    for qid, answer in answers.items():
        assessment = record_answer(assessment, qid, answer, notes.get(qid))
    return assessment


def kickoff_assessment() -> Assessment:
    return _build(
        "kickoff",
        datetime(2021, 3, 1, 9, 0, 0, tzinfo=timezone.utc),
        _KICKOFF_ANSWERS,
        _KICKOFF_NOTES,
    )


def pre_experiment_assessment() -> Assessment:
    return _build(
        "pre-experiment",
        datetime(2021, 6, 1, 9, 0, 0, tzinfo=timezone.utc),
        _PRE_EXPERIMENT_ANSWERS,
        _PRE_EXPERIMENT_NOTES,
    )


def sample_project() -> ProjectFile:
    project = new_project(
        SAMPLE_PROJECT_ID,
        "Demo project",
        "Fictitious first data-driven undertaking of a large organization, "
        "assessed at kickoff and again before the first experiments.",
    )
    project = append_assessment(project, kickoff_assessment())
    project = append_assessment(project, pre_experiment_assessment())
    return project


def sample_project_text() -> str:
    """The bundled project document, exactly as shipped."""
    with resources.files("drltool").joinpath("data/sample_project.drl.json").open(
        "r", encoding="utf-8"
    ) as handle:
        return handle.read()


def install_sample_project(data_dir: Path) -> Path:
    """Copy the bundled demo project into a data directory."""
    target = Path(data_dir) / f"{SAMPLE_PROJECT_ID}.drl.json"
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(sample_project_text(), encoding="utf-8")
    return target
