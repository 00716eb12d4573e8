// DTOs mirroring the service's JSON bodies.

export type AnswerValue = "dont_know" | "no" | "partially" | "yes";
export type BandCode = "C" | "B" | "A";

export const ANSWER_LABELS: Record<AnswerValue, string> = {
  dont_know: "Don't know",
  no: "No",
  partially: "Partially",
  yes: "Yes",
};

export interface QuestionDto {
  id: string;
  band: BandCode;
  headline: string;
  guidance: string;
  order_index: number;
}

export interface QuestionnaireDto {
  version: string;
  questions: QuestionDto[];
}

export interface ResponseDto {
  answer: AnswerValue;
  note?: string;
}

export interface AssessmentDto {
  id: string;
  project_id: string;
  label: string;
  timestamp: string;
  questionnaire_version: string;
  responses: Record<string, ResponseDto>;
  not_applicable: string[];
}

export interface ScoreDto {
  normalized_area: number | null;
  mean_score: number;
  unknown_count: number;
  effective_band: string;
}

export interface BandSummaryDto {
  band: BandCode;
  theme: string;
  status: string;
  vacuous: boolean;
  applicable_count: number;
  counts: Record<AnswerValue, number>;
}

export interface DiffPairDto {
  question_id: string;
  before: AnswerValue | null;
  after: AnswerValue | null;
  kind: string;
}

export interface DiffDto {
  before: string;
  after: string;
  area_delta: number | null;
  resolved_unknowns: number;
  pairs: DiffPairDto[];
}

export interface ComputedAssessmentDto {
  id: string;
  label: string;
  timestamp: string;
  score: ScoreDto;
  band_summaries: BandSummaryDto[];
}

export interface ProjectDto {
  schema_version: string;
  project: { id: string; name: string; description: string };
  questionnaire: QuestionnaireDto;
  assessments: AssessmentDto[];
  computed: { assessments: ComputedAssessmentDto[]; diffs: DiffDto[] };
}

export interface ProjectRowDto {
  id: string;
  name?: string;
  effective_band?: string | null;
  normalized_area?: number | null;
  error?: string;
}

export interface SubmitResultDto {
  id: string;
  score: ScoreDto;
  band_summaries: BandSummaryDto[];
}

export interface AssessmentPayload {
  label: string;
  timestamp?: string;
  id?: string;
  responses: Record<string, ResponseDto>;
  not_applicable: string[];
}
