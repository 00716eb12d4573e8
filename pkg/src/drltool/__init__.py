"""Data readiness assessment toolkit.

Define the questionnaire, record stakeholder sessions on the four-option
ordinal scale, score band-level and area-based readiness, render radar and
parallel charts, and persist, serve, and report project readiness over time.
"""

from .errors import DrlError
from .model import (
    Answer,
    Assessment,
    Band,
    Question,
    QuestionnaireDefinition,
    Response,
    create_assessment,
    record_answer,
    record_answers,
    set_applicability,
    validate_questionnaire,
)
from .questions import DEFAULT_VERSION, default_questionnaire
from .render import (
    ChartLayout,
    RenderOptions,
    Representation,
    layout_radar,
    render_parallel_svg,
    render_radar_svg,
    select_representation,
)
from .scoring import (
    AssessmentDiff,
    BandStatus,
    BandSummary,
    DeltaKind,
    EffectiveBand,
    ReadinessScore,
    band_summary,
    diff_assessments,
    effective_band,
    mean_score,
    normalized_area,
    readiness_score,
    score_answer,
)
from .store import (
    ProjectFile,
    ProjectInfo,
    append_assessment,
    load_project,
    new_project,
    save_project,
)

__version__ = "0.1.0"

__all__ = [
    "Answer",
    "Assessment",
    "AssessmentDiff",
    "Band",
    "BandStatus",
    "BandSummary",
    "ChartLayout",
    "DEFAULT_VERSION",
    "DeltaKind",
    "DrlError",
    "EffectiveBand",
    "ProjectFile",
    "ProjectInfo",
    "Question",
    "QuestionnaireDefinition",
    "ReadinessScore",
    "RenderOptions",
    "Representation",
    "Response",
    "append_assessment",
    "band_summary",
    "create_assessment",
    "default_questionnaire",
    "diff_assessments",
    "effective_band",
    "layout_radar",
    "load_project",
    "mean_score",
    "new_project",
    "normalized_area",
    "readiness_score",
    "record_answer",
    "record_answers",
    "render_parallel_svg",
    "render_radar_svg",
    "save_project",
    "score_answer",
    "select_representation",
    "set_applicability",
    "validate_questionnaire",
]
