// Shared test data: a minimal project shaped like the service's responses.

import type {
  AnswerValue,
  BandCode,
  ProjectDto,
  QuestionDto,
  SubmitResultDto,
} from "../src/types.js";

export function makeQuestions(): QuestionDto[] {
  const bands: BandCode[] = [
    "C", "C", "C", "C", "C",
    "B", "B",
    "A", "A", "A", "A", "A", "A", "A", "A",
  ];
  return bands.map((band, i) => ({
    id: `Q${i + 1}`,
    band,
    headline: `Question ${i + 1}?`,
    guidance: `Guidance for question ${i + 1}.`,
    order_index: i + 1,
  }));
}

export function makeProject(): ProjectDto {
  return {
    schema_version: "1",
    project: { id: "proj", name: "Proj", description: "" },
    questionnaire: { version: "drl-2021", questions: makeQuestions() },
    assessments: [],
    computed: { assessments: [], diffs: [] },
  };
}

export function fakeSubmitResult(id = "s-1"): SubmitResultDto {
  // deliberately implausible numbers: if the UI shows them verbatim, it is
  // not computing anything on its own
  const counts: Record<AnswerValue, number> = {
    dont_know: 7,
    no: 5,
    partially: 2,
    yes: 1,
  };
  return {
    id,
    score: {
      normalized_area: 0.1234,
      mean_score: 0.9876,
      unknown_count: 42,
      effective_band: "B",
    },
    band_summaries: [
      { band: "C", theme: "accessibility", status: "unknown", vacuous: false, applicable_count: 5, counts },
      { band: "B", theme: "validity", status: "blocked", vacuous: false, applicable_count: 2, counts },
      { band: "A", theme: "utility", status: "partial", vacuous: false, applicable_count: 8, counts },
    ],
  };
}
