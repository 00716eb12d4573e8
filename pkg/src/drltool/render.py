"""Deterministic chart generation: radar layout geometry and SVG output.

Rendering is pure string building; identical inputs yield byte-identical
SVG documents, which makes golden-file testing and HTTP caching trivial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from datetime import datetime
from enum import Enum
from typing import Optional, Sequence
from xml.sax.saxutils import escape

from .errors import AxisSetMismatchError, OverlayLimitError, TooFewAxesError
from .model import Answer, Assessment, QuestionnaireDefinition, require_finalized
from .scoring import score_answer

#: Overlaying radar charts stays legible only for a small number of
#: snapshots; beyond this many, use the parallel plot.
OVERLAY_LIMIT = 3


@dataclass(frozen=True)
class ChartAxis:
    question_id: str
    angle: float  # radians; axis 0 points due north
    radius: float  # 0 = worst answer at the center, 1 = best at the edge
    answer: Answer


@dataclass(frozen=True)
class ChartLayout:
    """Resolved radar geometry for one snapshot, ready to draw."""

    axes: tuple[ChartAxis, ...]
    label: str
    timestamp: datetime

    @property
    def n_axes(self) -> int:
        return len(self.axes)

    @property
    def question_ids(self) -> tuple[str, ...]:
        return tuple(a.question_id for a in self.axes)


@dataclass(frozen=True)
class SeriesStyle:
    stroke: str
    fill: str
    stroke_width: float
    fill_opacity: float


@dataclass(frozen=True)
class RenderOptions:
    width: int = 800
    height: int = 800
    margin: int = 60
    ring_guides: tuple[float, ...] = (1 / 3, 2 / 3, 1.0)
    series_styles: Optional[tuple[SeriesStyle, ...]] = None
    show_labels: bool = True

    def __post_init__(self) -> None:
        if self.width <= 2 * self.margin or self.height <= 2 * self.margin:
            raise ValueError("width and height must each exceed twice the margin")


class Representation(str, Enum):
    RADAR = "radar"
    RADAR_OVERLAY = "radar_overlay"
    PARALLEL = "parallel"


def select_representation(n_snapshots: int) -> Representation:
    """Radar for one snapshot, overlay up to the legibility limit, parallel beyond."""
    if n_snapshots < 1:
        raise ValueError("need at least one snapshot")
    if n_snapshots == 1:
        return Representation.RADAR
    if n_snapshots <= OVERLAY_LIMIT:
        return Representation.RADAR_OVERLAY
    return Representation.PARALLEL


def layout_radar(
    assessment: Assessment, definition: QuestionnaireDefinition | None = None
) -> ChartLayout:
    """One axis per applicable question: the first due north, then clockwise.

    The worst answer sits at the center of the chart, the best closest to
    the chart's edge.
    """
    require_finalized(assessment)
    definition = definition or assessment.questionnaire
    questions = [q for q in definition.in_order if q.id not in assessment.not_applicable]
    n = len(questions)
    if n < 3:
        raise TooFewAxesError("too few axes")
    axes = []
    for k, q in enumerate(questions):
        answer = assessment.answer_for(q.id)
        axes.append(
            ChartAxis(
                question_id=q.id,
                angle=math.pi / 2 - 2 * math.pi * k / n,
                radius=score_answer(answer).radial,
                answer=answer,
            )
        )
    return ChartLayout(axes=tuple(axes), label=assessment.label, timestamp=assessment.timestamp)


def radar_vertices(layout: ChartLayout, opts: RenderOptions) -> list[tuple[float, float]]:
    """Cartesian vertices of the answer polygon, in SVG pixel coordinates."""
    cx, cy, scale = _frame(opts)
    return [
        (cx + scale * a.radius * math.cos(a.angle), cy - scale * a.radius * math.sin(a.angle))
        for a in layout.axes
    ]


def _frame(opts: RenderOptions) -> tuple[float, float, float]:
    cx = opts.width / 2
    cy = opts.height / 2
    scale = min(opts.width, opts.height) / 2 - opts.margin
    return cx, cy, scale


def _fmt(value: float) -> str:
    text = f"{value:.2f}"
    return text.rstrip("0").rstrip(".") if "." in text else text


# Latest snapshot emphasized, earlier ones muted; fills stay translucent so
# overlapping polygons remain readable.
_OVERLAY_PALETTE = ("#8c96a3", "#4f9d8d", "#1f6feb")
_PARALLEL_PALETTE = (
    "#1f6feb", "#d1242f", "#2da44e", "#bf8700",
    "#8250df", "#e85aad", "#57606a", "#0d7d87",
)


def _overlay_styles(count: int) -> tuple[SeriesStyle, ...]:
    styles = []
    for i in range(count):
        color = _OVERLAY_PALETTE[len(_OVERLAY_PALETTE) - count + i]
        latest = i == count - 1
        styles.append(
            SeriesStyle(
                stroke=color,
                fill=color,
                stroke_width=2.5 if latest else 1.5,
                fill_opacity=0.25 if latest else 0.12,
            )
        )
    return tuple(styles)


def _require_shared_axes(layouts: Sequence[ChartLayout]) -> None:
    first = layouts[0].question_ids
    for layout in layouts[1:]:
        if layout.question_ids != first:
            raise AxisSetMismatchError(
                "layouts cover different axis sets: "
                f"{','.join(first)} vs {','.join(layout.question_ids)}"
            )


def _legend_lines(layouts: Sequence[ChartLayout], styles: Sequence[SeriesStyle]) -> list[str]:
    parts = []
    for i, (layout, style) in enumerate(zip(layouts, styles)):
        y = 20 + 18 * i
        text = escape(f"{layout.label} ({layout.timestamp:%Y-%m-%d})")
        parts.append(
            f'<rect x="16" y="{y - 9}" width="12" height="12" fill="{style.stroke}"/>'
            f'<text x="34" y="{y + 2}" font-family="sans-serif" font-size="13" '
            f'fill="#24292f">{text}</text>'
        )
    return parts


def _svg_document(opts: RenderOptions, body: list[str]) -> str:
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{opts.width}" '
        f'height="{opts.height}" viewBox="0 0 {opts.width} {opts.height}">',
        f'<rect width="{opts.width}" height="{opts.height}" fill="#ffffff"/>',
        *body,
        "</svg>",
    ]
    return "\n".join(lines) + "\n"


def render_radar_svg(
    layouts: Sequence[ChartLayout], opts: RenderOptions = RenderOptions()
) -> str:
    """Render up to three snapshots as a radar chart (later ones on top)."""
    if not layouts:
        raise ValueError("nothing to render")
    if len(layouts) > OVERLAY_LIMIT:
        raise OverlayLimitError("use parallel plot")
    _require_shared_axes(layouts)

    cx, cy, scale = _frame(opts)
    axes = layouts[0].axes
    body: list[str] = []

    body.append('<g stroke="#d0d7de" fill="none">')
    for guide in opts.ring_guides:
        body.append(f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(scale * guide)}"/>')
    for axis in axes:
        x = cx + scale * math.cos(axis.angle)
        y = cy - scale * math.sin(axis.angle)
        body.append(
            f'<line x1="{_fmt(cx)}" y1="{_fmt(cy)}" x2="{_fmt(x)}" y2="{_fmt(y)}"/>'
        )
    body.append("</g>")

    if opts.show_labels:
        body.append('<g font-family="sans-serif" font-size="13" fill="#24292f">')
        for axis in axes:
            lx = cx + (scale + 18) * math.cos(axis.angle)
            ly = cy - (scale + 18) * math.sin(axis.angle)
            body.append(
                f'<text x="{_fmt(lx)}" y="{_fmt(ly)}" text-anchor="middle" '
                f'dominant-baseline="middle">{escape(axis.question_id)}</text>'
            )
        body.append("</g>")

    styles = opts.series_styles or _overlay_styles(len(layouts))
    for layout, style in zip(layouts, styles):
        points = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in radar_vertices(layout, opts))
        body.append(
            f'<polygon points="{points}" fill="{style.fill}" '
            f'fill-opacity="{_fmt(style.fill_opacity)}" stroke="{style.stroke}" '
            f'stroke-width="{_fmt(style.stroke_width)}"/>'
        )

    body.extend(_legend_lines(layouts, styles))
    return _svg_document(opts, body)


def render_parallel_svg(
    layouts: Sequence[ChartLayout], opts: RenderOptions = RenderOptions()
) -> str:
    """Parallel-coordinates view: one vertical axis per question, one
    polyline per snapshot. Worst answers sit low, best high, mirroring the
    radar's center-to-edge scale."""
    if len(layouts) < 2:
        raise ValueError("parallel plot needs at least two snapshots")
    _require_shared_axes(layouts)

    axes = layouts[0].axes
    n = len(axes)
    left, right = opts.margin, opts.width - opts.margin
    top, bottom = opts.margin, opts.height - opts.margin

    def x_at(k: int) -> float:
        return left + k * (right - left) / (n - 1)

    def y_at(ordinal: int) -> float:
        return bottom - (ordinal / 3) * (bottom - top)

    body: list[str] = []
    body.append('<g stroke="#d0d7de" fill="none">')
    for value in Answer:
        y = y_at(value.ordinal)
        body.append(f'<line x1="{_fmt(left)}" y1="{_fmt(y)}" x2="{_fmt(right)}" y2="{_fmt(y)}"/>')
    for k in range(n):
        x = x_at(k)
        body.append(f'<line x1="{_fmt(x)}" y1="{_fmt(top)}" x2="{_fmt(x)}" y2="{_fmt(bottom)}"/>')
    body.append("</g>")

    if opts.show_labels:
        body.append('<g font-family="sans-serif" font-size="12" fill="#24292f">')
        for value in Answer:
            y = y_at(value.ordinal)
            body.append(
                f'<text x="{_fmt(left - 8)}" y="{_fmt(y + 4)}" '
                f'text-anchor="end">{escape(value.label)}</text>'
            )
        for k, axis in enumerate(axes):
            body.append(
                f'<text x="{_fmt(x_at(k))}" y="{_fmt(bottom + 20)}" '
                f'text-anchor="middle">{escape(axis.question_id)}</text>'
            )
        body.append("</g>")

    styles = opts.series_styles or tuple(
        SeriesStyle(
            stroke=_PARALLEL_PALETTE[i % len(_PARALLEL_PALETTE)],
            fill="none",
            stroke_width=2.0,
            fill_opacity=0.0,
        )
        for i in range(len(layouts))
    )
    for layout, style in zip(layouts, styles):
        points = " ".join(
            f"{_fmt(x_at(k))},{_fmt(y_at(axis.answer.ordinal))}"
            for k, axis in enumerate(layout.axes)
        )
        body.append(
            f'<polyline points="{points}" fill="none" stroke="{style.stroke}" '
            f'stroke-width="{_fmt(style.stroke_width)}"/>'
        )

    legend_styles = styles
    body.extend(_legend_lines(layouts, legend_styles))
    return _svg_document(opts, body)
