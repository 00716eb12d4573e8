"""Command-line front end: run sessions, inspect, compare, render, report, serve."""

from __future__ import annotations

import argparse
import json
import sys
import textwrap
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Optional, Sequence

from . import service, store
from .errors import (
    DrlError,
    NoApplicableQuestionsError,
    TooFewAxesError,
    UnknownProjectError,
    UnknownSnapshotError,
)
from .hints import load_overlay
from .model import (
    Answer,
    Assessment,
    create_assessment,
    record_answer,
    require_finalized,
    set_applicability,
)
from .render import (
    Representation,
    layout_radar,
    render_parallel_svg,
    render_radar_svg,
    select_representation,
)
from .report import build_report
from .scoring import DeltaKind, band_summary, diff_assessments, readiness_score
from .store import ProjectFile, _parse_answer, _parse_timestamp


class SessionAborted(DrlError):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse, but usage problems exit with status 1 instead of 2."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--data-dir",
        type=Path,
        default=None,
        help="project file directory (default: $DRL_DATA_DIR or ./drl-data)",
    )

    parser = _Parser(
        prog="drl",
        description="Assess and track the data readiness of a project.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("init", parents=[common], help="create a new project file")
    p.add_argument("--project", required=True, help="project id (also the file name)")
    p.add_argument("--name", default=None, help="display name (default: the id)")
    p.add_argument("--description", default="")
    p.set_defaults(func=cmd_init)

    p = sub.add_parser("questions", parents=[common], help="list the questionnaire")
    p.add_argument("--full", action="store_true", help="include the guidance paragraphs")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_questions)

    p = sub.add_parser("assess", parents=[common], help="record an assessment session")
    p.add_argument("--project", required=True)
    p.add_argument("--label", required=True, help='session label, e.g. "kickoff"')
    p.add_argument("--answers", type=Path, default=None,
                   help="JSON answers file for a non-interactive session")
    p.add_argument("--timestamp", default=None,
                   help="session time (ISO-8601 UTC; default: now)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_assess)

    p = sub.add_parser("show", parents=[common], help="show a project and one snapshot")
    p.add_argument("--project", required=True)
    p.add_argument("--snapshot", default=None, help="snapshot id or label (default: latest)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_show)

    p = sub.add_parser("compare", parents=[common], help="diff two snapshots")
    p.add_argument("before", help="snapshot id or label")
    p.add_argument("after", help="snapshot id or label")
    p.add_argument("--project", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("render", parents=[common], help="render snapshots as SVG")
    p.add_argument("--project", required=True)
    p.add_argument("--snapshots", default="latest",
                   help='"latest", "all", or comma-separated ids/labels')
    p.add_argument("--out", type=Path, default=None, help="output file (default: stdout)")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("report", parents=[common], help="write a markdown readiness report")
    p.add_argument("--project", required=True)
    p.add_argument("--snapshot", default=None, help="snapshot id or label (default: latest)")
    p.add_argument("--out", type=Path, default=None,
                   help="report file; a chart SVG is written alongside (default: stdout)")
    p.add_argument("--hints", type=Path, default=None, help="JSON hint overlay file")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("serve", parents=[common], help="run the HTTP service")
    p.add_argument("--port", type=int, default=service.DEFAULT_PORT)
    p.add_argument("--host", default="127.0.0.1")
    p.set_defaults(func=cmd_serve)

    return parser


def _data_dir(args: argparse.Namespace) -> Path:
    return args.data_dir if args.data_dir is not None else store.default_data_dir()


def _load_project(args: argparse.Namespace) -> tuple[ProjectFile, Path]:
    path = store.project_path(_data_dir(args), args.project)
    if not path.exists():
        raise UnknownProjectError(f"no such project: {args.project} (looked in {path.parent})")
    return store.load_project(path), path


def _select_snapshots(project: ProjectFile, spec: str) -> list[Assessment]:
    if not project.assessments:
        raise UnknownSnapshotError("project has no snapshots")
    if spec == "latest":
        return [project.assessments[-1]]
    if spec == "all":
        return list(project.assessments)
    selectors = [s.strip() for s in spec.split(",") if s.strip()]
    if not selectors:
        raise UnknownSnapshotError("empty snapshot selection")
    return [project.assessment(s) for s in selectors]


def _summary_lines(assessment: Assessment) -> list[str]:
    lines = []
    for summary in band_summary(assessment):
        status = summary.status.value.capitalize()
        if summary.vacuous:
            status += " (vacuous)"
        tally = ", ".join(
            f"{summary.counts[value]} {value.label.lower()}"
            for value in reversed(Answer)
            if summary.counts[value]
        )
        lines.append(
            f"{summary.band.title}: {status} ({summary.band.theme}"
            + (f"; {tally})" if tally else ")")
        )
    score = readiness_score(assessment)
    area = "n/a" if score.normalized_area is None else f"{score.normalized_area:.4f}"
    lines.append(f"Effective band: {score.effective_band.value}")
    lines.append(f"Normalized area: {area}")
    lines.append(f"Mean score: {score.mean_score:.4f}")
    lines.append(f"Unknown answers: {score.unknown_count}")
    return lines


def _summary_json(assessment: Assessment) -> dict[str, Any]:
    return {
        "id": assessment.id,
        "label": assessment.label,
        "timestamp": store._format_timestamp(assessment.timestamp),
        "score": service._score_dict(readiness_score(assessment)),
        "band_summaries": service._band_summaries_dict(band_summary(assessment)),
    }


def cmd_init(args: argparse.Namespace) -> int:
    path = store.project_path(_data_dir(args), args.project)
    if path.exists():
        raise DrlError(f"project already exists: {path}")
    project = store.new_project(args.project, args.name or args.project, args.description)
    store.save_project(project, path)
    print(f"created {path}")
    return 0


def cmd_questions(args: argparse.Namespace) -> int:
    from .questions import default_questionnaire

    questionnaire = default_questionnaire()
    if args.json:
        print(json.dumps(
            [store._question_to_dict(q) for q in questionnaire.in_order],
            indent=2, ensure_ascii=False,
        ))
        return 0
    band = None
    for q in questionnaire.in_order:
        if q.band != band:
            band = q.band
            print(f"\n{band.title} — {band.theme}")
        print(f"  {q.id:<4} {q.headline}")
        if args.full:
            print(textwrap.indent(textwrap.fill(q.guidance, width=72), "       "))
    return 0


_ANSWER_KEYS = {
    "y": Answer.YES,
    "p": Answer.PARTIALLY,
    "n": Answer.NO,
    "d": Answer.DONT_KNOW,
}


def run_interactive_session(assessment: Assessment) -> Assessment:
    """Walk the questionnaire on stdin/stdout; EOF aborts the session."""
    questions = assessment.questionnaire.in_order
    total = len(questions)
    try:
        for i, q in enumerate(questions, 1):
            print(f"\n[{i}/{total}] {q.id} ({q.band.title} — {q.band.theme})")
            print(q.headline)
            print(textwrap.fill(q.guidance, width=78))
            while True:
                raw = input("Answer [y=yes p=partially n=no d=don't know s=skip]: ")
                raw = raw.strip().lower()
                if raw in _ANSWER_KEYS:
                    note = input("Note (enter for none): ").strip() or None
                    assessment = record_answer(assessment, q.id, _ANSWER_KEYS[raw], note)
                    break
                if raw == "s":
                    try:
                        assessment = set_applicability(assessment, q.id, False)
                        break
                    except NoApplicableQuestionsError:
                        print("at least one question must remain applicable")
                        continue
                print("please answer y, p, n, d, or s")
    except EOFError:
        raise SessionAborted("session aborted; nothing recorded") from None
    return assessment


def _apply_answers_file(assessment: Assessment, path: Path) -> Assessment:
    """Answers file: {"Q1": "yes", "Q4": {"answer": "no", "note": "..."},
    "Q5": "n/a", ...}. Unlisted questions stay unanswered."""
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise DrlError(f"malformed answers file: {exc.msg} (line {exc.lineno})") from exc
    if not isinstance(data, dict):
        raise DrlError("answers file must be a JSON object")
    for q in assessment.questionnaire.in_order:
        if q.id not in data:
            continue
        entry = data[q.id]
        if isinstance(entry, str) and entry.lower() in ("n/a", "na", "skip"):
            assessment = set_applicability(assessment, q.id, False)
        elif isinstance(entry, str):
            assessment = record_answer(assessment, q.id, _parse_answer(entry, f"$.{q.id}"))
        elif isinstance(entry, dict) and "answer" in entry:
            assessment = record_answer(
                assessment, q.id,
                _parse_answer(entry["answer"], f"$.{q.id}.answer"),
                entry.get("note"),
            )
        else:
            raise DrlError(f"unrecognized entry for {q.id} in answers file")
    unknown = set(data) - set(assessment.questionnaire.question_ids)
    if unknown:
        raise DrlError("answers file names unknown questions: " + ", ".join(sorted(unknown)))
    return assessment


def cmd_assess(args: argparse.Namespace) -> int:
    project, path = _load_project(args)
    if args.timestamp:
        timestamp = _parse_timestamp(args.timestamp, "--timestamp")
    else:
        timestamp = datetime.now(timezone.utc).replace(microsecond=0)
    assessment = create_assessment(args.project, args.label, timestamp, project.questionnaire)
    if args.answers:
        assessment = _apply_answers_file(assessment, args.answers)
    else:
        assessment = run_interactive_session(assessment)
    require_finalized(assessment)

    updated = store.append_assessment(project, assessment)
    store.save_project(updated, path)

    if args.json:
        print(json.dumps(_summary_json(assessment), indent=2, ensure_ascii=False))
    else:
        print()
        for line in _summary_lines(assessment):
            print(line)
        print(f"\nrecorded snapshot {assessment.id} in {path}")
    return 0


def cmd_show(args: argparse.Namespace) -> int:
    project, _ = _load_project(args)
    selected: Optional[Assessment] = None
    if args.snapshot:
        selected = project.assessment(args.snapshot)
    elif project.assessments:
        selected = project.assessments[-1]

    if args.json:
        body: dict[str, Any] = {
            "project": {
                "id": project.project.id,
                "name": project.project.name,
                "description": project.project.description,
            },
            "snapshots": [_summary_json(a) for a in project.assessments],
            "selected": _summary_json(selected) if selected else None,
        }
        print(json.dumps(body, indent=2, ensure_ascii=False))
        return 0

    print(f"{project.project.name} ({project.project.id})")
    if project.project.description:
        print(project.project.description)
    if not project.assessments:
        print("no snapshots recorded yet")
        return 0
    print("\nSnapshots:")
    for a in project.assessments:
        marker = "*" if selected is not None and a.id == selected.id else " "
        print(f" {marker} {a.label:<20} {a.timestamp:%Y-%m-%d %H:%M}  {a.id}")
    if selected is not None:
        print(f"\n{selected.label} ({selected.timestamp:%Y-%m-%d %H:%M} UTC)")
        for line in _summary_lines(selected):
            print(line)
    return 0


def cmd_compare(args: argparse.Namespace) -> int:
    project, _ = _load_project(args)
    before = project.assessment(args.before)
    after = project.assessment(args.after)
    diff = diff_assessments(before, after)
    area_before = readiness_score(before).normalized_area
    area_after = readiness_score(after).normalized_area
    unknowns_after = readiness_score(after).unknown_count

    if args.json:
        body = service._diff_dict(before, after, diff)
        body["area_before"] = area_before
        body["area_after"] = area_after
        body["unknowns_after"] = unknowns_after
        print(json.dumps(body, indent=2, ensure_ascii=False))
        return 0

    print(f"Comparing {before.label} ({before.timestamp:%Y-%m-%d}) → "
          f"{after.label} ({after.timestamp:%Y-%m-%d})")
    print()
    fmt = lambda v: "n/a" if v is None else f"{v:.4f}"  # noqa: E731
    delta = "n/a" if diff.area_delta is None else f"{diff.area_delta:+.4f}"
    print(f"Normalized area: {fmt(area_before)} → {fmt(area_after)} (delta {delta})")
    print(f"Resolved unknowns: {diff.resolved_unknowns}")
    print(f"Unknown answers remaining: {unknowns_after}")
    print(
        f"Improved: {diff.count(DeltaKind.IMPROVED)}  "
        f"Regressed: {diff.count(DeltaKind.REGRESSED)}  "
        f"Unchanged: {diff.count(DeltaKind.UNCHANGED)}  "
        f"Applicability changed: {diff.count(DeltaKind.APPLICABILITY_CHANGED)}"
    )
    print()
    for pair in diff.pairs:
        b = pair.before.label if pair.before else "n/a"
        a = pair.after.label if pair.after else "n/a"
        print(f"  {pair.question_id:<4} {b:<12} → {a:<12} {pair.kind.value}")
    return 0


def cmd_render(args: argparse.Namespace) -> int:
    project, _ = _load_project(args)
    selected = _select_snapshots(project, args.snapshots)
    layouts = [layout_radar(a) for a in selected]
    if select_representation(len(layouts)) is Representation.PARALLEL:
        svg = render_parallel_svg(layouts)
    else:
        svg = render_radar_svg(layouts)
    if args.out:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text(svg, encoding="utf-8")
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(svg)
    return 0


def cmd_report(args: argparse.Namespace) -> int:
    project, _ = _load_project(args)
    selected = _select_snapshots(project, args.snapshot or "latest")[0]
    index = next(i for i, a in enumerate(project.assessments) if a.id == selected.id)
    previous = project.assessments[index - 1] if index > 0 else None
    overlay = load_overlay(args.hints) if args.hints else None

    chart_filename = None
    chart_svg = None
    if args.out is not None:
        try:
            chart_svg = render_radar_svg([layout_radar(selected)])
            chart_filename = args.out.with_suffix(".svg").name
        except TooFewAxesError:
            chart_svg = None

    text = build_report(project, selected, previous, chart_filename, overlay)
    if args.out:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text(text, encoding="utf-8")
        written = [str(args.out)]
        if chart_svg is not None:
            chart_path = args.out.with_suffix(".svg")
            chart_path.write_text(chart_svg, encoding="utf-8")
            written.append(str(chart_path))
        print("wrote " + " and ".join(written))
    else:
        sys.stdout.write(text)
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    service.serve(_data_dir(args), port=args.port, host=args.host)
    return 0


def run_command(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        return args.func(args)
    except KeyboardInterrupt:
        print("aborted; nothing recorded", file=sys.stderr)
        return 1
    except DrlError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_command())
