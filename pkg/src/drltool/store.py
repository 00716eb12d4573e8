"""Versioned, human-readable persistence of projects and their assessments.

The project file is the audit trail of a project's readiness history, so it
is canonical JSON: fixed key order, ISO-8601 UTC timestamps with seconds
precision, answers serialized as lowercase strings, trailing newline.
Parsing is strict; unknown keys are rejected with the offending key named.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass, replace
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Mapping

from .errors import (
    DuplicateAssessmentError,
    IncomparableQuestionnairesError,
    NotFinalizedError,
    ProjectFormatError,
    UnknownSnapshotError,
    UnsupportedSchemaVersionError,
)
from .model import (
    Answer,
    Assessment,
    Band,
    Question,
    QuestionnaireDefinition,
    Response,
    validate_questionnaire,
)
from .questions import default_questionnaire

SCHEMA_VERSION = "1"
FILE_SUFFIX = ".drl.json"
DATA_DIR_ENV = "DRL_DATA_DIR"


@dataclass(frozen=True)
class ProjectInfo:
    id: str
    name: str
    description: str = ""


@dataclass(frozen=True)
class ProjectFile:
    """A project: its questionnaire plus the chronological assessment series."""

    project: ProjectInfo
    questionnaire: QuestionnaireDefinition
    assessments: tuple[Assessment, ...] = ()
    schema_version: str = SCHEMA_VERSION

    def assessment(self, selector: str) -> Assessment:
        """Look up a snapshot by id, or failing that by label."""
        for a in self.assessments:
            if a.id == selector:
                return a
        matches = [a for a in self.assessments if a.label == selector]
        if len(matches) == 1:
            return matches[0]
        if len(matches) > 1:
            ids = ", ".join(a.id for a in matches)
            raise UnknownSnapshotError(f"label '{selector}' is ambiguous: {ids}")
        raise UnknownSnapshotError(f"no such snapshot: {selector}")


def new_project(
    project_id: str,
    name: str,
    description: str = "",
    questionnaire: QuestionnaireDefinition | None = None,
) -> ProjectFile:
    return ProjectFile(
        project=ProjectInfo(id=project_id, name=name, description=description),
        questionnaire=questionnaire or default_questionnaire(),
    )


def default_data_dir() -> Path:
    return Path(os.environ.get(DATA_DIR_ENV, "drl-data"))


def project_path(data_dir: Path, project_id: str) -> Path:
    return Path(data_dir) / f"{project_id}{FILE_SUFFIX}"


def append_assessment(project: ProjectFile, assessment: Assessment) -> ProjectFile:
    """Insert a finalized assessment, preserving timestamp order."""
    if not assessment.is_finalized:
        raise NotFinalizedError("only finalized assessments can be appended")
    if assessment.questionnaire_version != project.questionnaire.version:
        raise IncomparableQuestionnairesError("incomparable questionnaires")
    if any(a.id == assessment.id for a in project.assessments):
        raise DuplicateAssessmentError(f"assessment id already used: {assessment.id}")
    series = sorted([*project.assessments, assessment], key=lambda a: a.timestamp)
    return replace(project, assessments=tuple(series))


# --- serialization -----------------------------------------------------------

def _format_timestamp(ts: datetime) -> str:
    return ts.astimezone(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def _question_to_dict(q: Question) -> dict[str, Any]:
    return {
        "id": q.id,
        "band": q.band.value,
        "headline": q.headline,
        "guidance": q.guidance,
        "order_index": q.order_index,
    }


def _assessment_to_dict(a: Assessment) -> dict[str, Any]:
    ordered_ids = [qid for qid in a.questionnaire.question_ids]
    responses: dict[str, Any] = {}
    for qid in ordered_ids:
        if qid in a.responses:
            resp = a.responses[qid]
            entry: dict[str, Any] = {"answer": resp.answer.value}
            if resp.note is not None:
                entry["note"] = resp.note
            responses[qid] = entry
    return {
        "id": a.id,
        "project_id": a.project_id,
        "label": a.label,
        "timestamp": _format_timestamp(a.timestamp),
        "questionnaire_version": a.questionnaire_version,
        "responses": responses,
        "not_applicable": [qid for qid in ordered_ids if qid in a.not_applicable],
    }


def project_to_dict(project: ProjectFile) -> dict[str, Any]:
    return {
        "schema_version": project.schema_version,
        "project": {
            "id": project.project.id,
            "name": project.project.name,
            "description": project.project.description,
        },
        "questionnaire": {
            "version": project.questionnaire.version,
            "questions": [_question_to_dict(q) for q in project.questionnaire.in_order],
        },
        "assessments": [_assessment_to_dict(a) for a in project.assessments],
    }


def _validate_project(project: ProjectFile) -> None:
    violations = validate_questionnaire(project.questionnaire)
    if violations:
        raise ProjectFormatError("invalid questionnaire: " + "; ".join(violations), "$.questionnaire")
    known = set(project.questionnaire.question_ids)
    seen_ids: set[str] = set()
    previous: datetime | None = None
    for i, a in enumerate(project.assessments):
        path = f"$.assessments[{i}]"
        if a.id in seen_ids:
            raise ProjectFormatError(f"duplicate assessment id '{a.id}'", path)
        seen_ids.add(a.id)
        if a.questionnaire_version != project.questionnaire.version:
            raise ProjectFormatError(
                f"questionnaire_version '{a.questionnaire_version}' does not match "
                f"'{project.questionnaire.version}'",
                path,
            )
        if previous is not None and a.timestamp < previous:
            raise ProjectFormatError("assessments are not in timestamp order", path)
        previous = a.timestamp
        stray = (set(a.responses) | a.not_applicable) - known
        if stray:
            raise ProjectFormatError(
                "unknown question ids: " + ", ".join(sorted(stray)), path
            )
        overlap = set(a.responses) & a.not_applicable
        if overlap:
            raise ProjectFormatError(
                "answered questions marked not applicable: " + ", ".join(sorted(overlap)),
                path,
            )


def dumps_project(project: ProjectFile) -> str:
    _validate_project(project)
    return json.dumps(project_to_dict(project), indent=2, ensure_ascii=False) + "\n"


def save_project(project: ProjectFile, destination: Path) -> Path:
    """Write the canonical document atomically (temp file, then rename)."""
    destination = Path(destination)
    text = dumps_project(project)
    destination.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(
        prefix=destination.name + ".", suffix=".tmp", dir=destination.parent
    )
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(text)
            handle.flush()
            os.fsync(handle.fileno())
        os.replace(tmp_name, destination)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise
    return destination


# --- parsing -----------------------------------------------------------------

def _expect(value: Any, kind: type, path: str, what: str) -> Any:
    if not isinstance(value, kind) or (kind is int and isinstance(value, bool)):
        raise ProjectFormatError(
            f"expected {what}, got {type(value).__name__}", path
        )
    return value


def _check_keys(obj: Mapping[str, Any], required: tuple[str, ...], optional: tuple[str, ...], path: str) -> None:
    allowed = set(required) | set(optional)
    for key in obj:
        if key not in allowed:
            raise ProjectFormatError(f"unknown key '{key}'", path)
    for key in required:
        if key not in obj:
            raise ProjectFormatError(f"missing key '{key}'", path)


def _parse_timestamp(raw: Any, path: str) -> datetime:
    text = _expect(raw, str, path, "an ISO-8601 timestamp string")
    try:
        return datetime.strptime(text, "%Y-%m-%dT%H:%M:%SZ").replace(tzinfo=timezone.utc)
    except ValueError:
        pass
    try:
        parsed = datetime.fromisoformat(text)
    except ValueError as exc:
        raise ProjectFormatError(f"invalid timestamp '{text}'", path) from exc
    if parsed.tzinfo is None:
        raise ProjectFormatError(f"timestamp '{text}' lacks a UTC offset", path)
    return parsed.astimezone(timezone.utc)


def _parse_answer(raw: Any, path: str) -> Answer:
    text = _expect(raw, str, path, "an answer string")
    try:
        return Answer(text)
    except ValueError as exc:
        valid = ", ".join(a.value for a in Answer)
        raise ProjectFormatError(f"invalid answer '{text}' (expected one of {valid})", path) from exc


def _parse_question(raw: Any, path: str) -> Question:
    obj = _expect(raw, dict, path, "a question object")
    _check_keys(obj, ("id", "band", "headline", "guidance", "order_index"), (), path)
    band_text = _expect(obj["band"], str, f"{path}.band", "a band code")
    try:
        band = Band(band_text)
    except ValueError as exc:
        raise ProjectFormatError(f"unknown band '{band_text}'", f"{path}.band") from exc
    return Question(
        id=_expect(obj["id"], str, f"{path}.id", "a question id"),
        band=band,
        headline=_expect(obj["headline"], str, f"{path}.headline", "a string"),
        guidance=_expect(obj["guidance"], str, f"{path}.guidance", "a string"),
        order_index=_expect(obj["order_index"], int, f"{path}.order_index", "an integer"),
    )


def _parse_assessment(
    raw: Any, questionnaire: QuestionnaireDefinition, path: str
) -> Assessment:
    obj = _expect(raw, dict, path, "an assessment object")
    _check_keys(
        obj,
        ("id", "project_id", "label", "timestamp", "questionnaire_version",
         "responses", "not_applicable"),
        (),
        path,
    )
    responses_raw = _expect(obj["responses"], dict, f"{path}.responses", "an object")
    responses: dict[str, Response] = {}
    for qid, entry_raw in responses_raw.items():
        entry_path = f"{path}.responses.{qid}"
        entry = _expect(entry_raw, dict, entry_path, "a response object")
        _check_keys(entry, ("answer",), ("note",), entry_path)
        note = entry.get("note")
        if note is not None:
            note = _expect(note, str, f"{entry_path}.note", "a string")
        responses[qid] = Response(_parse_answer(entry["answer"], f"{entry_path}.answer"), note)
    na_raw = _expect(obj["not_applicable"], list, f"{path}.not_applicable", "a list")
    not_applicable = frozenset(
        _expect(qid, str, f"{path}.not_applicable[{i}]", "a question id")
        for i, qid in enumerate(na_raw)
    )
    declared_version = _expect(
        obj["questionnaire_version"], str, f"{path}.questionnaire_version", "a string"
    )
    if declared_version != questionnaire.version:
        raise ProjectFormatError(
            f"questionnaire_version '{declared_version}' does not match "
            f"'{questionnaire.version}'",
            f"{path}.questionnaire_version",
        )
    return Assessment(
        id=_expect(obj["id"], str, f"{path}.id", "a string"),
        project_id=_expect(obj["project_id"], str, f"{path}.project_id", "a string"),
        label=_expect(obj["label"], str, f"{path}.label", "a string"),
        timestamp=_parse_timestamp(obj["timestamp"], f"{path}.timestamp"),
        questionnaire=questionnaire,
        responses=responses,
        not_applicable=not_applicable,
    )


def project_from_dict(data: Any) -> ProjectFile:
    obj = _expect(data, dict, "$", "a project object")
    if "schema_version" not in obj:
        raise ProjectFormatError("missing key 'schema_version'", "$")
    version = obj["schema_version"]
    if version != SCHEMA_VERSION:
        raise UnsupportedSchemaVersionError(
            f"unsupported schema version {version!r}", "$.schema_version"
        )
    _check_keys(obj, ("schema_version", "project", "questionnaire", "assessments"), (), "$")

    info_raw = _expect(obj["project"], dict, "$.project", "an object")
    _check_keys(info_raw, ("id", "name", "description"), (), "$.project")
    info = ProjectInfo(
        id=_expect(info_raw["id"], str, "$.project.id", "a string"),
        name=_expect(info_raw["name"], str, "$.project.name", "a string"),
        description=_expect(info_raw["description"], str, "$.project.description", "a string"),
    )

    q_raw = _expect(obj["questionnaire"], dict, "$.questionnaire", "an object")
    _check_keys(q_raw, ("version", "questions"), (), "$.questionnaire")
    questions_raw = _expect(q_raw["questions"], list, "$.questionnaire.questions", "a list")
    questionnaire = QuestionnaireDefinition(
        version=_expect(q_raw["version"], str, "$.questionnaire.version", "a string"),
        questions=tuple(
            _parse_question(item, f"$.questionnaire.questions[{i}]")
            for i, item in enumerate(questions_raw)
        ),
    )

    assessments_raw = _expect(obj["assessments"], list, "$.assessments", "a list")
    assessments = [
        _parse_assessment(item, questionnaire, f"$.assessments[{i}]")
        for i, item in enumerate(assessments_raw)
    ]
    # Normalize: the on-disk order may drift, the in-memory series never does.
    assessments.sort(key=lambda a: a.timestamp)

    project = ProjectFile(
        project=info,
        questionnaire=questionnaire,
        assessments=tuple(assessments),
        schema_version=SCHEMA_VERSION,
    )
    _validate_project(project)
    return project


def loads_project(text: str) -> ProjectFile:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProjectFormatError(f"malformed JSON: {exc.msg}", f"line {exc.lineno}") from exc
    return project_from_dict(data)


def load_project(source: Path) -> ProjectFile:
    return loads_project(Path(source).read_text(encoding="utf-8"))
