"""Tests for persistence: canonical JSON, strict parsing, round trips."""

from __future__ import annotations

import json
from datetime import datetime, timedelta, timezone

import pytest
from hypothesis import given, settings

from helpers import projects
from drltool.errors import (
    DuplicateAssessmentError,
    IncomparableQuestionnairesError,
    NotFinalizedError,
    ProjectFormatError,
    UnknownSnapshotError,
    UnsupportedSchemaVersionError,
)
from drltool.fixtures import sample_project, sample_project_text
from drltool.model import Answer, create_assessment, record_answer, set_applicability
from drltool.questions import default_questionnaire
from drltool.store import (
    append_assessment,
    dumps_project,
    load_project,
    loads_project,
    new_project,
    project_path,
    save_project,
)

T0 = datetime(2021, 3, 1, 9, 0, 0, tzinfo=timezone.utc)


def finalized(project_id="p", label="kickoff", ts=T0, answer=Answer.YES, na=()):
    a = create_assessment(project_id, label, ts, default_questionnaire())
    for qid in na:
        a = set_applicability(a, qid, False)
    for qid in default_questionnaire().question_ids:
        if qid not in na:
            a = record_answer(a, qid, answer)
    return a


class TestSaveLoad:
    def test_schema_version_present(self, demo_project):
        assert '"schema_version": "1"' in dumps_project(demo_project)

    def test_round_trip_identity(self, tmp_path, demo_project):
        path = save_project(demo_project, tmp_path / "demo.drl.json")
        assert load_project(path) == demo_project

    def test_timestamp_serialized_verbatim(self, demo_project):
        assert '"timestamp": "2021-03-01T09:00:00Z"' in dumps_project(demo_project)

    def test_trailing_newline(self, demo_project):
        assert dumps_project(demo_project).endswith("}\n")

    def test_answers_serialized_as_strings(self, demo_project):
        text = dumps_project(demo_project)
        assert '"answer": "dont_know"' in text
        assert '"answer": "partially"' in text

    def test_bundled_fixture_file_matches_builder(self):
        assert sample_project_text() == dumps_project(sample_project())

    def test_bundled_fixture_loads(self):
        project = loads_project(sample_project_text())
        assert len(project.assessments) == 2
        assert project.assessments[0].timestamp < project.assessments[1].timestamp
        assert project.assessments[0].label == "kickoff"

    def test_atomic_write_leaves_no_temp_files(self, tmp_path, demo_project):
        save_project(demo_project, tmp_path / "demo.drl.json")
        assert [p.name for p in tmp_path.iterdir()] == ["demo.drl.json"]

    def test_failed_write_preserves_original(self, tmp_path, demo_project, monkeypatch):
        path = save_project(demo_project, tmp_path / "demo.drl.json")
        original = path.read_bytes()

        import drltool.store as store_mod

        def boom(src, dst):
            raise OSError("disk full")

        monkeypatch.setattr(store_mod.os, "replace", boom)
        with pytest.raises(OSError):
            save_project(sample_project(), path)
        monkeypatch.undo()
        assert path.read_bytes() == original
        assert [p.name for p in tmp_path.iterdir()] == ["demo.drl.json"]


class TestStrictParsing:
    def test_unsupported_schema_version(self):
        doc = json.loads(sample_project_text())
        doc["schema_version"] = "99"
        with pytest.raises(UnsupportedSchemaVersionError, match="unsupported schema version '99'"):
            loads_project(json.dumps(doc))

    def test_unknown_top_level_key(self):
        doc = json.loads(sample_project_text())
        doc["extra"] = 1
        with pytest.raises(ProjectFormatError, match="unknown key 'extra'"):
            loads_project(json.dumps(doc))

    def test_corrupted_required_key_rejected(self):
        # single-character corruption of a required key: missing + unknown
        text = sample_project_text().replace('"questionnaire":', '"questionnaird":', 1)
        with pytest.raises(ProjectFormatError):
            loads_project(text)

    def test_corrupted_nested_key_rejected(self):
        text = sample_project_text().replace('"headline":', '"headlirne":', 1)
        with pytest.raises(ProjectFormatError, match="headlirne|headline"):
            loads_project(text)

    def test_error_names_json_path(self):
        doc = json.loads(sample_project_text())
        doc["assessments"][0]["responses"]["Q1"]["answer"] = "maybe"
        with pytest.raises(ProjectFormatError, match=r"\$\.assessments\[0\]\.responses\.Q1\.answer"):
            loads_project(json.dumps(doc))

    def test_malformed_json(self):
        with pytest.raises(ProjectFormatError, match="malformed JSON"):
            loads_project("{not json")

    def test_out_of_order_assessments_normalized(self):
        doc = json.loads(sample_project_text())
        doc["assessments"].reverse()
        project = loads_project(json.dumps(doc))
        assert [a.label for a in project.assessments] == ["kickoff", "pre-experiment"]

    def test_overlapping_na_and_response_rejected(self):
        doc = json.loads(sample_project_text())
        doc["assessments"][0]["not_applicable"] = ["Q1"]
        with pytest.raises(ProjectFormatError, match="not applicable"):
            loads_project(json.dumps(doc))

    def test_version_mismatch_rejected(self):
        doc = json.loads(sample_project_text())
        doc["assessments"][0]["questionnaire_version"] = "other"
        with pytest.raises(ProjectFormatError, match="does not match"):
            loads_project(json.dumps(doc))

    def test_naive_timestamp_rejected(self):
        doc = json.loads(sample_project_text())
        doc["assessments"][0]["timestamp"] = "2021-03-01T09:00:00"
        with pytest.raises(ProjectFormatError, match="UTC offset"):
            loads_project(json.dumps(doc))

    def test_offset_timestamp_normalized_to_utc(self):
        doc = json.loads(sample_project_text())
        doc["assessments"][0]["timestamp"] = "2021-03-01T10:00:00+01:00"
        project = loads_project(json.dumps(doc))
        assert project.assessments[0].timestamp == T0
        # canonical form re-serializes as Z
        assert '"timestamp": "2021-03-01T09:00:00Z"' in dumps_project(project)


class TestAppend:
    def test_appends_in_timestamp_order(self, demo_project):
        early = finalized(demo_project.project.id, "pre-kickoff", T0 - timedelta(days=30))
        updated = append_assessment(demo_project, early)
        assert [a.label for a in updated.assessments] == [
            "pre-kickoff", "kickoff", "pre-experiment",
        ]

    def test_series_grows(self, demo_project):
        nxt = finalized(demo_project.project.id, "wrap-up", T0 + timedelta(days=200))
        assert len(append_assessment(demo_project, nxt).assessments) == 3

    def test_duplicate_id_rejected(self, demo_project):
        dup = finalized(demo_project.project.id, "kickoff", T0)
        assert dup.id == demo_project.assessments[0].id
        with pytest.raises(DuplicateAssessmentError):
            append_assessment(demo_project, dup)

    def test_version_mismatch_rejected(self, demo_project):
        from drltool.model import QuestionnaireDefinition

        other = QuestionnaireDefinition("custom-2", default_questionnaire().questions)
        a = create_assessment("p", "s", T0 + timedelta(days=1), other)
        for qid in other.question_ids:
            a = record_answer(a, qid, Answer.YES)
        with pytest.raises(IncomparableQuestionnairesError, match="incomparable"):
            append_assessment(demo_project, a)

    def test_non_finalized_rejected(self, demo_project):
        a = create_assessment(demo_project.project.id, "late", T0 + timedelta(days=90),
                              default_questionnaire())
        with pytest.raises(NotFinalizedError):
            append_assessment(demo_project, a)


class TestLookup:
    def test_by_label_and_id(self, demo_project):
        by_label = demo_project.assessment("kickoff")
        assert demo_project.assessment(by_label.id) is by_label

    def test_unknown_snapshot(self, demo_project):
        with pytest.raises(UnknownSnapshotError, match="no such snapshot"):
            demo_project.assessment("nope")

    def test_project_path_suffix(self, tmp_path):
        assert project_path(tmp_path, "demo").name == "demo.drl.json"

    def test_data_dir_env_override(self, monkeypatch):
        from pathlib import Path

        from drltool.store import default_data_dir

        monkeypatch.setenv("DRL_DATA_DIR", "/srv/readiness")
        assert default_data_dir() == Path("/srv/readiness")
        monkeypatch.delenv("DRL_DATA_DIR")
        assert default_data_dir() == Path("drl-data")


# --- property tests ----------------------------------------------------------


@settings(max_examples=60, deadline=None)
@given(projects())
def test_round_trip_load_save_identity(project):
    assert loads_project(dumps_project(project)) == project


@settings(max_examples=60, deadline=None)
@given(projects())
def test_canonical_idempotence(project):
    text = dumps_project(project)
    assert dumps_project(loads_project(text)) == text
