// Typed client for the readiness service. The UI does no scoring math of
// its own: every number it shows originates from one of these calls.

import type {
  AssessmentPayload,
  ProjectDto,
  ProjectRowDto,
  SubmitResultDto,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
    readonly path?: string,
  ) {
    super(message);
  }
}

async function raiseFor(res: Response): Promise<never> {
  let code = "internal";
  let message = `${res.status} ${res.statusText}`;
  let path: string | undefined;
  try {
    const body = await res.json();
    if (body && body.error) {
      code = body.error.code ?? code;
      message = body.error.message ?? message;
      path = body.error.path;
    }
  } catch {
    // non-JSON error body; keep the status text
  }
  throw new ApiError(res.status, code, message, path);
}

export class Api {
  constructor(readonly base: string) {}

  private async getJSON<T>(path: string): Promise<T> {
    const res = await fetch(`${this.base}${path}`);
    if (!res.ok) await raiseFor(res);
    return (await res.json()) as T;
  }

  listProjects(): Promise<ProjectRowDto[]> {
    return this.getJSON("/projects");
  }

  getProject(id: string): Promise<ProjectDto> {
    return this.getJSON(`/projects/${encodeURIComponent(id)}`);
  }

  async submitAssessment(
    projectId: string,
    payload: AssessmentPayload,
    dryRun = false,
  ): Promise<SubmitResultDto> {
    const suffix = dryRun ? "?dry_run=true" : "";
    const res = await fetch(
      `${this.base}/projects/${encodeURIComponent(projectId)}/assessments${suffix}`,
      {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify(payload),
      },
    );
    if (!res.ok) await raiseFor(res);
    return (await res.json()) as SubmitResultDto;
  }

  chartUrl(projectId: string, snapshots = "all"): string {
    return `${this.base}/projects/${encodeURIComponent(projectId)}/chart.svg?snapshots=${encodeURIComponent(snapshots)}`;
  }

  async fetchChart(projectId: string, snapshots = "all"): Promise<string> {
    const res = await fetch(this.chartUrl(projectId, snapshots));
    if (!res.ok) await raiseFor(res);
    return await res.text();
  }
}
