import { beforeEach, describe, expect, it } from "vitest";

import { clearDraft, loadDraft, saveDraft } from "../src/draft.js";
import { newSession, recordAnswer } from "../src/session.js";
import { makeQuestions } from "./fixtures.js";

const questions = makeQuestions();

describe("draft persistence", () => {
  beforeEach(() => window.localStorage.clear());

  it("round-trips an in-progress session", () => {
    let state = newSession("proj", "kickoff");
    state = recordAnswer(state, questions, "partially", "wip");
    saveDraft(window.localStorage, state);
    expect(loadDraft(window.localStorage, "proj", "kickoff")).toEqual(state);
  });

  it("is keyed by project and label", () => {
    saveDraft(window.localStorage, newSession("proj", "kickoff"));
    expect(loadDraft(window.localStorage, "proj", "other")).toBeNull();
    expect(loadDraft(window.localStorage, "other", "kickoff")).toBeNull();
  });

  it("saving a submitted state clears the draft instead", () => {
    const state = newSession("proj", "kickoff");
    saveDraft(window.localStorage, state);
    saveDraft(window.localStorage, { ...state, phase: "submitted" });
    expect(loadDraft(window.localStorage, "proj", "kickoff")).toBeNull();
  });

  it("ignores corrupt drafts", () => {
    window.localStorage.setItem("drl-draft:proj:kickoff", "{broken");
    expect(loadDraft(window.localStorage, "proj", "kickoff")).toBeNull();
  });

  it("clears explicitly", () => {
    saveDraft(window.localStorage, newSession("proj", "kickoff"));
    clearDraft(window.localStorage, "proj", "kickoff");
    expect(loadDraft(window.localStorage, "proj", "kickoff")).toBeNull();
  });
});
