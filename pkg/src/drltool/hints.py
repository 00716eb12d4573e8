"""Risk hints: failure modes observed in real projects, keyed by question.

Reports attach these to every question answered below Yes. Users can merge
their own corpus over the built-in one via a JSON overlay file of the form
{"Q3": ["hint", ...], ...}.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import ProjectFormatError

RISK_HINTS: dict[str, tuple[str, ...]] = {
    "Q1": (
        "Ownership of the data was clearly specified, yet staff never released "
        "it: uncertainty about what the project might conclude, and fear of job "
        "losses, stalled access for months. Readiness depends on the data "
        "actually being handed over, not on an agreement that it will be.",
    ),
    "Q2": (
        "A team assumed its news data was in the public domain; it turned out "
        "to be a proprietary feed under license restrictions. They lost access "
        "to the data generation process, could not address de-duplication at "
        "the source, and were barred from publishing the dataset with their "
        "findings.",
    ),
    "Q3": (
        "Personal data handled without the appropriate legal competence can "
        "sink a project whose technical side is perfectly sound. Involve legal "
        "early; retrofitting lawful access rarely works.",
    ),
    "Q4": (
        "Ethics probes into sensitive data, such as individuals' medical "
        "information, run under strict rules with long lead times. Projects "
        "that defer the assessment find their data frozen exactly when the "
        "experiments are due to start.",
    ),
    "Q5": (
        "Raw data stored as PDF files generated by different sources forced a "
        "project into endless conversion work: PDF is an output format, and "
        "there is no reliable way to turn an arbitrary PDF into useful input.",
    ),
    "Q6": (
        "Data assumed to be of good quality showed low inter-annotator "
        "agreement once someone actually investigated. The existing labels "
        "could not be trusted and the annotation work had to be redone.",
    ),
    "Q7": (
        "Annotation guidelines that were elaborate on paper fell short in "
        "practice; annotation became so slow that only a small dataset "
        "materialized, narrowing the range of applicable techniques. "
        "Guidelines have to be unambiguous, precise, and possible for an "
        "annotator to remember.",
        "Existing records assumed to be useful for distant supervision turned "
        "out incomplete and insufficient, severely limiting the approaches "
        "that remained on the table.",
    ),
    "Q8": (
        "A problem formulation anchored to an interesting technology instead "
        "of an actual need drifts every time stakeholders meet; the data "
        "requirements drift with it.",
    ),
    "Q9": (
        "When the people responsible for a data source do not know what the "
        "project uses it for, the data they produce quietly stops fitting the "
        "objective.",
    ),
    "Q10": (
        "Data known to be annotated turned out to be labelled at the document "
        "level where the task needed sequence-level annotations; the planned "
        "extraction approach had to be abandoned for plain classification.",
        "Volume and velocity looked sufficient until availability was aligned "
        "with the use case, where the data proved too sparse and the task "
        "could not be pursued.",
    ),
    "Q11": (
        "A team with data at an exceptionally high readiness level still had "
        "to fall back to unsupervised learning: nobody had planned for the "
        "annotation work that training, validation, and testing required.",
    ),
    "Q12": (
        "A one-off success that depends on heroic data wrangling does not "
        "repeat; if incoming data is stored in a form that keeps it below "
        "accessibility, every follow-up project starts from scratch.",
    ),
    "Q13": (
        "Data that is not classified and access-controlled to your "
        "organization's security standard tends to get locked down abruptly "
        "mid-project, taking the experiments down with it.",
    ),
    "Q14": (
        "Shared datasets can leak more than their contents: volumes, fields, "
        "and gaps reveal business plans and abilities. Assess the leak risk "
        "before anything leaves the project.",
    ),
    "Q15": (
        "Being able to share is not being allowed to share: licenses, lawful "
        "access, and the ethics assessment all carry through to any "
        "publication of the data.",
    ),
}


def hints_for(question_id: str, overlay: dict[str, tuple[str, ...]] | None = None) -> tuple[str, ...]:
    merged = dict(RISK_HINTS)
    if overlay:
        merged.update(overlay)
    return merged.get(question_id, ())


def load_overlay(path: Path) -> dict[str, tuple[str, ...]]:
    """Read a user hint overlay: a JSON object of question id to hint list."""
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ProjectFormatError(f"malformed hint overlay: {exc.msg}", f"line {exc.lineno}") from exc
    if not isinstance(data, dict):
        raise ProjectFormatError("hint overlay must be an object", "$")
    overlay: dict[str, tuple[str, ...]] = {}
    for qid, hints in data.items():
        if not isinstance(hints, list) or not all(isinstance(h, str) for h in hints):
            raise ProjectFormatError("hints must be a list of strings", f"$.{qid}")
        overlay[qid] = tuple(hints)
    return overlay
