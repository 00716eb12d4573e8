// Local draft persistence so a session survives a page reload before it
// has been submitted.

import type { SessionState } from "./session.js";

function key(projectId: string, label: string): string {
  return `drl-draft:${projectId}:${label}`;
}

export function saveDraft(storage: Storage, state: SessionState): void {
  if (state.phase === "submitted") {
    clearDraft(storage, state.projectId, state.label);
    return;
  }
  storage.setItem(key(state.projectId, state.label), JSON.stringify(state));
}

export function loadDraft(
  storage: Storage,
  projectId: string,
  label: string,
): SessionState | null {
  const raw = storage.getItem(key(projectId, label));
  if (!raw) return null;
  try {
    const state = JSON.parse(raw) as SessionState;
    return state.projectId === projectId && state.label === label ? state : null;
  } catch {
    return null;
  }
}

export function clearDraft(storage: Storage, projectId: string, label: string): void {
  storage.removeItem(key(projectId, label));
}
