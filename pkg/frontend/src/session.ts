// Pure session-state machine for the question wizard. All transitions
// return new states; the DOM layer never mutates state directly.

import type { AnswerValue, QuestionDto, ResponseDto } from "./types.js";

export type Phase = "answering" | "review" | "submitted";

export interface SessionState {
  projectId: string;
  label: string;
  cursor: number;
  answers: Record<string, ResponseDto>;
  notApplicable: string[];
  phase: Phase;
}

export function newSession(projectId: string, label: string): SessionState {
  return {
    projectId,
    label,
    cursor: 0,
    answers: {},
    notApplicable: [],
    phase: "answering",
  };
}

export function orderedQuestions(questions: QuestionDto[]): QuestionDto[] {
  return [...questions].sort((a, b) => a.order_index - b.order_index);
}

function clampCursor(index: number, questions: QuestionDto[]): number {
  return Math.max(0, Math.min(index, questions.length - 1));
}

export function currentQuestion(state: SessionState, questions: QuestionDto[]): QuestionDto {
  return orderedQuestions(questions)[clampCursor(state.cursor, questions)];
}

export function recordAnswer(
  state: SessionState,
  questions: QuestionDto[],
  value: AnswerValue,
  note?: string,
): SessionState {
  const question = currentQuestion(state, questions);
  const answers = { ...state.answers };
  answers[question.id] = note ? { answer: value, note } : { answer: value };
  return {
    ...state,
    answers,
    notApplicable: state.notApplicable.filter((qid) => qid !== question.id),
    cursor: clampCursor(state.cursor + 1, questions),
  };
}

export function skipCurrent(state: SessionState, questions: QuestionDto[]): SessionState {
  const question = currentQuestion(state, questions);
  const excluded = new Set(state.notApplicable);
  excluded.add(question.id);
  if (excluded.size >= questions.length) {
    throw new Error("at least one question must remain applicable");
  }
  const answers = { ...state.answers };
  delete answers[question.id];
  return {
    ...state,
    answers,
    notApplicable: [...excluded],
    cursor: clampCursor(state.cursor + 1, questions),
  };
}

export function goTo(state: SessionState, questions: QuestionDto[], index: number): SessionState {
  return { ...state, cursor: clampCursor(index, questions), phase: "answering" };
}

export function goToQuestion(
  state: SessionState,
  questions: QuestionDto[],
  questionId: string,
): SessionState {
  const index = orderedQuestions(questions).findIndex((q) => q.id === questionId);
  return index < 0 ? state : goTo(state, questions, index);
}

export function openQuestions(state: SessionState, questions: QuestionDto[]): QuestionDto[] {
  const excluded = new Set(state.notApplicable);
  return orderedQuestions(questions).filter(
    (q) => !excluded.has(q.id) && !(q.id in state.answers),
  );
}

export function isComplete(state: SessionState, questions: QuestionDto[]): boolean {
  return openQuestions(state, questions).length === 0;
}

export function enterReview(state: SessionState, questions: QuestionDto[]): SessionState {
  if (!isComplete(state, questions)) {
    throw new Error("cannot review: unanswered questions remain");
  }
  return { ...state, phase: "review" };
}

export function markSubmitted(state: SessionState): SessionState {
  if (state.phase !== "review") {
    throw new Error("submit only from the review phase");
  }
  return { ...state, phase: "submitted" };
}
