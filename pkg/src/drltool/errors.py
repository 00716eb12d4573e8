"""Exception types shared across the toolkit."""

from __future__ import annotations


class DrlError(Exception):
    """Base class for all toolkit errors."""


class QuestionnaireValidationError(DrlError):
    """A questionnaire definition violates its structural invariants."""

    def __init__(self, violations: list[str]):
        self.violations = list(violations)
        super().__init__("invalid questionnaire: " + "; ".join(self.violations))


class UnknownQuestionError(DrlError):
    pass


class QuestionExcludedError(DrlError):
    pass


class NoApplicableQuestionsError(DrlError):
    pass


class NotFinalizedError(DrlError):
    pass


class DegeneratePolygonError(DrlError):
    """Fewer than three applicable questions: the radar polygon collapses."""


class TooFewAxesError(DrlError):
    pass


class OverlayLimitError(DrlError):
    """More snapshots than an overlay stays legible for."""


class AxisSetMismatchError(DrlError):
    pass


class IncomparableQuestionnairesError(DrlError):
    pass


class ProjectFormatError(DrlError):
    """A project document failed to parse or validate.

    ``path`` is a JSON-path-like locator of the offending element.
    """

    def __init__(self, message: str, path: str = "$"):
        self.path = path
        super().__init__(f"{message} at {path}")


class UnsupportedSchemaVersionError(ProjectFormatError):
    pass


class DuplicateAssessmentError(DrlError):
    pass


class UnknownProjectError(DrlError):
    pass


class UnknownSnapshotError(DrlError):
    pass
