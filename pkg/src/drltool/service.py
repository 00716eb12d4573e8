"""Thin HTTP facade over the store, scoring, and render modules.

The service keeps no state beyond the project files on disk; every request
re-reads them, and writes are serialized per project. Error responses all
carry a machine code from a closed set: not_found, validation, conflict,
incomparable, degenerate, internal.
"""

from __future__ import annotations

import threading
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Optional

from fastapi import Body, FastAPI, Query, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from starlette.exceptions import HTTPException as StarletteHTTPException

from . import store
from .errors import (
    AxisSetMismatchError,
    DegeneratePolygonError,
    DrlError,
    DuplicateAssessmentError,
    IncomparableQuestionnairesError,
    NoApplicableQuestionsError,
    NotFinalizedError,
    ProjectFormatError,
    QuestionExcludedError,
    QuestionnaireValidationError,
    TooFewAxesError,
    UnknownProjectError,
    UnknownQuestionError,
    UnknownSnapshotError,
    UnsupportedSchemaVersionError,
)
from .model import Assessment, create_assessment, record_answer, set_applicability
from .render import (
    Representation,
    layout_radar,
    render_parallel_svg,
    render_radar_svg,
    select_representation,
)
from .scoring import (
    AssessmentDiff,
    BandSummary,
    ReadinessScore,
    band_summary,
    diff_assessments,
    readiness_score,
)
from .store import ProjectFile, _parse_answer, _parse_timestamp

DEFAULT_PORT = 7070

_NOT_FOUND = (404, "not_found")
_VALIDATION = (400, "validation")
_CONFLICT = (409, "conflict")
_INCOMPARABLE = (409, "incomparable")
_DEGENERATE = (400, "degenerate")

_ERROR_MAP: list[tuple[type, tuple[int, str]]] = [
    (UnknownProjectError, _NOT_FOUND),
    (UnknownSnapshotError, _NOT_FOUND),
    (DuplicateAssessmentError, _CONFLICT),
    (IncomparableQuestionnairesError, _INCOMPARABLE),
    (DegeneratePolygonError, _DEGENERATE),
    (TooFewAxesError, _DEGENERATE),
    (AxisSetMismatchError, _INCOMPARABLE),
    (UnsupportedSchemaVersionError, _VALIDATION),
    (ProjectFormatError, _VALIDATION),
    (QuestionnaireValidationError, _VALIDATION),
    (UnknownQuestionError, _VALIDATION),
    (QuestionExcludedError, _VALIDATION),
    (NoApplicableQuestionsError, _VALIDATION),
    (NotFinalizedError, _VALIDATION),
]


def _error_response(status: int, code: str, message: str, path: Optional[str] = None) -> JSONResponse:
    error: dict[str, Any] = {"code": code, "message": message}
    if path is not None:
        error["path"] = path
    return JSONResponse(status_code=status, content={"error": error})


def _map_error(exc: DrlError) -> JSONResponse:
    for klass, (status, code) in _ERROR_MAP:
        if isinstance(exc, klass):
            path = getattr(exc, "path", None)
            return _error_response(status, code, str(exc), path)
    return _error_response(400, "validation", str(exc))


def _score_dict(score: ReadinessScore) -> dict[str, Any]:
    return {
        "normalized_area": score.normalized_area,
        "mean_score": score.mean_score,
        "unknown_count": score.unknown_count,
        "effective_band": score.effective_band.value,
    }


def _band_summaries_dict(summaries: tuple[BandSummary, ...]) -> list[dict[str, Any]]:
    return [
        {
            "band": s.band.value,
            "theme": s.band.theme,
            "status": s.status.value,
            "vacuous": s.vacuous,
            "applicable_count": s.applicable_count,
            "counts": {answer.value: count for answer, count in s.counts.items()},
        }
        for s in summaries
    ]


def _diff_dict(before: Assessment, after: Assessment, diff: AssessmentDiff) -> dict[str, Any]:
    return {
        "before": before.id,
        "after": after.id,
        "area_delta": diff.area_delta,
        "resolved_unknowns": diff.resolved_unknowns,
        "pairs": [
            {
                "question_id": p.question_id,
                "before": p.before.value if p.before else None,
                "after": p.after.value if p.after else None,
                "kind": p.kind.value,
            }
            for p in diff.pairs
        ],
    }


def _computed_block(project: ProjectFile) -> dict[str, Any]:
    assessments = [
        {
            "id": a.id,
            "label": a.label,
            "timestamp": store._format_timestamp(a.timestamp),
            "score": _score_dict(readiness_score(a)),
            "band_summaries": _band_summaries_dict(band_summary(a)),
        }
        for a in project.assessments
    ]
    diffs = [
        _diff_dict(before, after, diff_assessments(before, after))
        for before, after in zip(project.assessments, project.assessments[1:])
    ]
    return {"assessments": assessments, "diffs": diffs}


def _build_assessment(project: ProjectFile, payload: Any) -> Assessment:
    if not isinstance(payload, dict):
        raise ProjectFormatError("expected an assessment object", "$")
    allowed = {"label", "responses", "not_applicable", "id", "timestamp"}
    for key in payload:
        if key not in allowed:
            raise ProjectFormatError(f"unknown key '{key}'", "$")
    for key in ("label", "responses"):
        if key not in payload:
            raise ProjectFormatError(f"missing key '{key}'", "$")
    label = payload["label"]
    if not isinstance(label, str):
        raise ProjectFormatError("label must be a string", "$.label")
    if "timestamp" in payload:
        timestamp = _parse_timestamp(payload["timestamp"], "$.timestamp")
    else:
        timestamp = datetime.now(timezone.utc).replace(microsecond=0)
    assessment_id = payload.get("id")
    if assessment_id is not None and not isinstance(assessment_id, str):
        raise ProjectFormatError("id must be a string", "$.id")

    assessment = create_assessment(
        project.project.id, label, timestamp, project.questionnaire, assessment_id
    )
    na_raw = payload.get("not_applicable", [])
    if not isinstance(na_raw, list):
        raise ProjectFormatError("not_applicable must be a list", "$.not_applicable")
    for i, qid in enumerate(na_raw):
        if not isinstance(qid, str):
            raise ProjectFormatError("expected a question id", f"$.not_applicable[{i}]")
        try:
            assessment = set_applicability(assessment, qid, False)
        except DrlError as exc:
            raise ProjectFormatError(str(exc), f"$.not_applicable[{i}]") from exc

    responses = payload["responses"]
    if not isinstance(responses, dict):
        raise ProjectFormatError("responses must be an object", "$.responses")
    for qid, entry in responses.items():
        entry_path = f"$.responses.{qid}"
        if not isinstance(entry, dict):
            raise ProjectFormatError("expected a response object", entry_path)
        for key in entry:
            if key not in ("answer", "note"):
                raise ProjectFormatError(f"unknown key '{key}'", entry_path)
        if "answer" not in entry:
            raise ProjectFormatError("missing key 'answer'", entry_path)
        note = entry.get("note")
        if note is not None and not isinstance(note, str):
            raise ProjectFormatError("note must be a string", f"{entry_path}.note")
        answer = _parse_answer(entry["answer"], f"{entry_path}.answer")
        try:
            assessment = record_answer(assessment, qid, answer, note)
        except DrlError as exc:
            raise ProjectFormatError(str(exc), entry_path) from exc

    if not assessment.is_finalized:
        missing = sorted(
            set(project.questionnaire.question_ids)
            - set(assessment.responses)
            - assessment.not_applicable
        )
        raise ProjectFormatError(
            "unanswered questions: " + ", ".join(missing),
            f"$.responses.{missing[0]}",
        )
    return assessment


def create_app(data_dir: Path | None = None) -> FastAPI:
    app = FastAPI(title="drl-toolkit", docs_url=None, redoc_url=None)
    # the web UI is a static page served from elsewhere (file:// or any
    # static server); this is a localhost facilitation tool, so CORS is open
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )
    app.state.data_dir = Path(data_dir) if data_dir else store.default_data_dir()
    app.state.locks = {}
    app.state.locks_guard = threading.Lock()

    def project_lock(project_id: str) -> threading.Lock:
        with app.state.locks_guard:
            return app.state.locks.setdefault(project_id, threading.Lock())

    def load(project_id: str) -> ProjectFile:
        path = store.project_path(app.state.data_dir, project_id)
        if not path.exists():
            raise UnknownProjectError(f"no such project: {project_id}")
        return store.load_project(path)

    @app.exception_handler(DrlError)
    async def handle_drl_error(request: Request, exc: DrlError) -> JSONResponse:
        return _map_error(exc)

    @app.exception_handler(StarletteHTTPException)
    async def handle_http_error(request: Request, exc: StarletteHTTPException) -> JSONResponse:
        code = "not_found" if exc.status_code == 404 else "validation"
        if exc.status_code >= 500:
            code = "internal"
        return _error_response(exc.status_code, code, str(exc.detail))

    @app.exception_handler(RequestValidationError)
    async def handle_request_error(request: Request, exc: RequestValidationError) -> JSONResponse:
        return _error_response(400, "validation", "invalid request")

    @app.exception_handler(Exception)
    async def handle_internal(request: Request, exc: Exception) -> JSONResponse:
        return _error_response(500, "internal", "internal error")

    @app.get("/projects")
    def list_projects() -> JSONResponse:
        data_dir: Path = app.state.data_dir
        rows = []
        if data_dir.is_dir():
            for path in sorted(data_dir.glob(f"*{store.FILE_SUFFIX}")):
                stem = path.name[: -len(store.FILE_SUFFIX)]
                try:
                    project = store.load_project(path)
                except Exception as exc:
                    rows.append({"id": stem, "error": str(exc)})
                    continue
                row: dict[str, Any] = {
                    "id": project.project.id,
                    "name": project.project.name,
                    "effective_band": None,
                    "normalized_area": None,
                }
                if project.assessments:
                    score = readiness_score(project.assessments[-1])
                    row["effective_band"] = score.effective_band.value
                    row["normalized_area"] = score.normalized_area
                rows.append(row)
        rows.sort(key=lambda r: r["id"])
        return JSONResponse(content=rows)

    @app.get("/projects/{project_id}")
    def get_project(project_id: str) -> JSONResponse:
        project = load(project_id)
        body = store.project_to_dict(project)
        body["computed"] = _computed_block(project)
        return JSONResponse(content=body)

    @app.post("/projects/{project_id}/assessments")
    def submit_assessment(
        project_id: str,
        payload: Any = Body(...),
        dry_run: bool = Query(default=False),
    ) -> JSONResponse:
        if dry_run:
            project = load(project_id)
            assessment = _build_assessment(project, payload)
            store.append_assessment(project, assessment)  # full check, result dropped
        else:
            with project_lock(project_id):
                project = load(project_id)
                assessment = _build_assessment(project, payload)
                updated = store.append_assessment(project, assessment)
                store.save_project(
                    updated, store.project_path(app.state.data_dir, project_id)
                )
        body = {
            "id": assessment.id,
            "score": _score_dict(readiness_score(assessment)),
            "band_summaries": _band_summaries_dict(band_summary(assessment)),
        }
        return JSONResponse(status_code=200 if dry_run else 201, content=body)

    @app.get("/projects/{project_id}/chart.svg")
    def get_chart(project_id: str, snapshots: str = Query(default="latest")) -> Response:
        project = load(project_id)
        if not project.assessments:
            raise UnknownSnapshotError("project has no snapshots")
        if snapshots == "latest":
            selected = [project.assessments[-1]]
        elif snapshots == "all":
            selected = list(project.assessments)
        else:
            selectors = [s.strip() for s in snapshots.split(",") if s.strip()]
            if not selectors:
                raise ProjectFormatError("empty snapshot selection", "$.snapshots")
            selected = [project.assessment(s) for s in selectors]
        layouts = [layout_radar(a) for a in selected]
        if select_representation(len(layouts)) is Representation.PARALLEL:
            svg = render_parallel_svg(layouts)
        else:
            svg = render_radar_svg(layouts)
        return Response(content=svg, media_type="image/svg+xml")

    return app


def serve(data_dir: Path | None = None, port: int = DEFAULT_PORT, host: str = "127.0.0.1") -> None:
    """Run the service; binds to localhost by default."""
    import uvicorn

    uvicorn.run(create_app(data_dir), host=host, port=port, log_level="info")
