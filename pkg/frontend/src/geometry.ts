// Client-side radar geometry for the live preview, mirroring the service's
// chart conventions: first question due north, clockwise, worst answer at
// the center and best at the edge. The preview is advisory; the canonical
// chart always comes from the service.

import type { AnswerValue, QuestionDto, ResponseDto } from "./types.js";
import { orderedQuestions } from "./session.js";

export interface PreviewAxis {
  questionId: string;
  angle: number;
  radius: number;
}

const ORDINALS: Record<AnswerValue, number> = {
  dont_know: 0,
  no: 1,
  partially: 2,
  yes: 3,
};

export function ordinalOf(value: AnswerValue): number {
  return ORDINALS[value];
}

export function previewLayout(
  questions: QuestionDto[],
  answers: Record<string, ResponseDto>,
  notApplicable: string[],
): PreviewAxis[] {
  const excluded = new Set(notApplicable);
  const applicable = orderedQuestions(questions).filter((q) => !excluded.has(q.id));
  const n = applicable.length;
  return applicable.map((q, k) => {
    const response = answers[q.id];
    // unanswered axes sit at the center until the group agrees on an answer
    const radius = response ? ordinalOf(response.answer) / 3 : 0;
    return {
      questionId: q.id,
      angle: Math.PI / 2 - (2 * Math.PI * k) / n,
      radius,
    };
  });
}

export function vertex(
  axis: PreviewAxis,
  cx: number,
  cy: number,
  scale: number,
): [number, number] {
  return [
    cx + scale * axis.radius * Math.cos(axis.angle),
    cy - scale * axis.radius * Math.sin(axis.angle),
  ];
}

function fmt(value: number): string {
  return String(Math.round(value * 100) / 100);
}

export function polygonPoints(
  axes: PreviewAxis[],
  cx: number,
  cy: number,
  scale: number,
): string {
  return axes
    .map((axis) => {
      const [x, y] = vertex(axis, cx, cy, scale);
      return `${fmt(x)},${fmt(y)}`;
    })
    .join(" ");
}

export function previewSvg(axes: PreviewAxis[], size = 260): string {
  const cx = size / 2;
  const cy = size / 2;
  const scale = size / 2 - 18;
  const rings = [1 / 3, 2 / 3, 1]
    .map((g) => `<circle cx="${cx}" cy="${cy}" r="${fmt(scale * g)}" fill="none" stroke="#d0d7de"/>`)
    .join("");
  const spokes = axes
    .map((axis) => {
      const [x, y] = vertex({ ...axis, radius: 1 }, cx, cy, scale);
      return `<line x1="${cx}" y1="${cy}" x2="${fmt(x)}" y2="${fmt(y)}" stroke="#d0d7de"/>`;
    })
    .join("");
  const labels = axes
    .map((axis) => {
      const [x, y] = vertex({ ...axis, radius: 1.14 }, cx, cy, scale);
      return `<text x="${fmt(x)}" y="${fmt(y)}" font-size="9" text-anchor="middle" dominant-baseline="middle" fill="#57606a">${axis.questionId}</text>`;
    })
    .join("");
  const polygon = `<polygon points="${polygonPoints(axes, cx, cy, scale)}" fill="#1f6feb" fill-opacity="0.25" stroke="#1f6feb" stroke-width="2"/>`;
  return `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${size} ${size}" width="${size}" height="${size}">${rings}${spokes}${polygon}${labels}</svg>`;
}
