// Session wizard: one question at a time, live preview radar, review with
// service-computed summaries, then an atomic submit.

import { Api, ApiError } from "./api.js";
import { clearDraft, loadDraft, saveDraft } from "./draft.js";
import { previewLayout, previewSvg } from "./geometry.js";
import {
  SessionState,
  currentQuestion,
  enterReview,
  goTo,
  goToQuestion,
  isComplete,
  markSubmitted,
  newSession,
  openQuestions,
  orderedQuestions,
  recordAnswer,
  skipCurrent,
} from "./session.js";
import {
  ANSWER_LABELS,
  AnswerValue,
  ProjectDto,
  SubmitResultDto,
} from "./types.js";

const ANSWER_ORDER: AnswerValue[] = ["yes", "partially", "no", "dont_know"];

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export class SessionWizard {
  state: SessionState;
  review: SubmitResultDto | null = null;
  result: SubmitResultDto | null = null;
  errorMessage: string | null = null;

  constructor(
    readonly root: HTMLElement,
    readonly api: Api,
    readonly project: ProjectDto,
    readonly label: string,
    readonly storage: Storage,
    readonly onDone?: () => void,
  ) {
    this.state =
      loadDraft(storage, project.project.id, label) ??
      newSession(project.project.id, label);
    this.render();
  }

  private get questions() {
    return this.project.questionnaire.questions;
  }

  private update(next: SessionState): void {
    this.state = next;
    saveDraft(this.storage, this.state);
    this.render();
  }

  answer(value: AnswerValue, note?: string): void {
    this.errorMessage = null;
    this.update(recordAnswer(this.state, this.questions, value, note));
  }

  skip(): void {
    this.errorMessage = null;
    try {
      this.update(skipCurrent(this.state, this.questions));
    } catch (err) {
      this.errorMessage = (err as Error).message;
      this.render();
    }
  }

  async startReview(): Promise<void> {
    this.errorMessage = null;
    this.state = enterReview(this.state, this.questions);
    saveDraft(this.storage, this.state);
    try {
      // dry run: the service validates and scores without persisting, so
      // every number on the review screen is service-computed
      this.review = await this.api.submitAssessment(
        this.state.projectId,
        this.payload(),
        true,
      );
    } catch (err) {
      this.handleServiceError(err);
    }
    this.render();
  }

  async submit(): Promise<void> {
    this.errorMessage = null;
    try {
      this.result = await this.api.submitAssessment(this.state.projectId, this.payload());
      this.update(markSubmitted(this.state));
      clearDraft(this.storage, this.state.projectId, this.state.label);
      if (this.onDone) this.onDone();
    } catch (err) {
      // state is retained (and still drafted) so the facilitator can retry
      this.handleServiceError(err);
      this.render();
    }
  }

  private handleServiceError(err: unknown): void {
    if (err instanceof ApiError) {
      this.errorMessage = err.message;
      const match = err.path?.match(/\$\.responses\.(Q\w+)/);
      if (match) {
        // jump back to the offending question
        this.state = goToQuestion(this.state, this.questions, match[1]);
        saveDraft(this.storage, this.state);
      }
    } else {
      this.errorMessage = `service unreachable: ${(err as Error).message}`;
    }
  }

  payload() {
    return {
      label: this.state.label,
      responses: this.state.answers,
      not_applicable: this.state.notApplicable,
    };
  }

  render(): void {
    this.root.innerHTML = "";
    const container = el("div", "wizard");
    this.root.appendChild(container);

    const heading = el("h2", "", `Session: ${this.label} — ${this.project.project.name}`);
    container.appendChild(heading);

    if (this.errorMessage) {
      container.appendChild(el("p", "error", this.errorMessage));
    }

    if (this.state.phase === "answering") this.renderAnswering(container);
    else if (this.state.phase === "review") this.renderReview(container);
    else this.renderSubmitted(container);
  }

  private renderAnswering(container: HTMLElement): void {
    const questions = orderedQuestions(this.questions);
    const question = currentQuestion(this.state, this.questions);
    const open = openQuestions(this.state, this.questions).length;

    const progress = el(
      "p",
      "progress",
      `Question ${this.state.cursor + 1} of ${questions.length} — ${open} open`,
    );
    container.appendChild(progress);

    const card = el("section", "question-card");
    card.appendChild(el("span", "band-tag", `Band ${question.band}`));
    card.appendChild(el("h3", "headline", `${question.id}. ${question.headline}`));
    card.appendChild(el("p", "guidance", question.guidance));

    const existing = this.state.answers[question.id];
    const note = el("textarea", "note");
    note.placeholder = "Note (optional)";
    note.value = existing?.note ?? "";

    const buttons = el("div", "answers");
    for (const value of ANSWER_ORDER) {
      const button = el("button", "answer", ANSWER_LABELS[value]);
      button.dataset.answer = value;
      if (existing?.answer === value) button.classList.add("selected");
      button.addEventListener("click", () => this.answer(value, note.value.trim() || undefined));
      buttons.appendChild(button);
    }
    const skip = el("button", "skip", "Not applicable");
    skip.dataset.action = "skip";
    skip.addEventListener("click", () => this.skip());
    buttons.appendChild(skip);

    card.appendChild(buttons);
    card.appendChild(note);
    container.appendChild(card);

    const nav = el("div", "nav");
    const prev = el("button", "", "Back");
    prev.dataset.action = "prev";
    prev.disabled = this.state.cursor === 0;
    prev.addEventListener("click", () =>
      this.update(goTo(this.state, this.questions, this.state.cursor - 1)),
    );
    const next = el("button", "", "Forward");
    next.dataset.action = "next";
    next.disabled = this.state.cursor >= questions.length - 1;
    next.addEventListener("click", () =>
      this.update(goTo(this.state, this.questions, this.state.cursor + 1)),
    );
    const reviewButton = el("button", "primary", "Review");
    reviewButton.dataset.action = "review";
    reviewButton.disabled = !isComplete(this.state, this.questions);
    reviewButton.addEventListener("click", () => void this.startReview());
    nav.append(prev, next, reviewButton);
    container.appendChild(nav);

    const preview = el("div", "preview");
    preview.innerHTML = previewSvg(
      previewLayout(this.questions, this.state.answers, this.state.notApplicable),
    );
    container.appendChild(preview);
  }

  private renderReview(container: HTMLElement): void {
    container.appendChild(el("p", "progress", "Review the session before submitting."));

    if (this.review) {
      const score = this.review.score;
      const scoreList = el("ul", "score");
      scoreList.appendChild(
        el("li", "", `Effective band: ${score.effective_band}`),
      );
      scoreList.appendChild(
        el(
          "li",
          "",
          `Normalized area: ${score.normalized_area === null ? "n/a" : score.normalized_area.toFixed(4)}`,
        ),
      );
      scoreList.appendChild(el("li", "", `Mean score: ${score.mean_score.toFixed(4)}`));
      scoreList.appendChild(el("li", "", `Unknown answers: ${score.unknown_count}`));
      container.appendChild(scoreList);

      const table = el("table", "bands");
      const head = el("tr");
      for (const column of ["Band", "Theme", "Status", "Yes", "Partially", "No", "Don't know"]) {
        head.appendChild(el("th", "", column));
      }
      table.appendChild(head);
      for (const summary of this.review.band_summaries) {
        const row = el("tr");
        row.appendChild(el("td", "", `Band ${summary.band}`));
        row.appendChild(el("td", "", summary.theme));
        row.appendChild(el("td", "", summary.vacuous ? `${summary.status} (vacuous)` : summary.status));
        row.appendChild(el("td", "", String(summary.counts.yes)));
        row.appendChild(el("td", "", String(summary.counts.partially)));
        row.appendChild(el("td", "", String(summary.counts.no)));
        row.appendChild(el("td", "", String(summary.counts.dont_know)));
        table.appendChild(row);
      }
      container.appendChild(table);
    }

    const nav = el("div", "nav");
    const back = el("button", "", "Back to questions");
    back.dataset.action = "back";
    back.addEventListener("click", () =>
      this.update(goTo(this.state, this.questions, this.state.cursor)),
    );
    const submit = el("button", "primary", "Submit");
    submit.dataset.action = "submit";
    submit.addEventListener("click", () => void this.submit());
    nav.append(back, submit);
    container.appendChild(nav);

    const preview = el("div", "preview");
    preview.innerHTML = previewSvg(
      previewLayout(this.questions, this.state.answers, this.state.notApplicable),
    );
    container.appendChild(preview);
  }

  private renderSubmitted(container: HTMLElement): void {
    container.appendChild(el("p", "progress", "Session recorded."));
    if (this.result) {
      container.appendChild(el("p", "recorded-id", `Snapshot id: ${this.result.id}`));
      container.appendChild(
        el("p", "", `Effective band: ${this.result.score.effective_band}`),
      );
    }
  }
}
