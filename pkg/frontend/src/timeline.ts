// Timeline view: service-rendered chart (overlay up to three snapshots,
// parallel plot beyond), plus the diff table and score trend, all taken
// verbatim from the service's computed block.

import { Api } from "./api.js";
import { ANSWER_LABELS, ProjectDto } from "./types.js";

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

function fmtArea(value: number | null): string {
  return value === null ? "n/a" : value.toFixed(4);
}

export class TimelineView {
  constructor(readonly root: HTMLElement, readonly api: Api) {}

  async show(projectId: string): Promise<void> {
    const project = await this.api.getProject(projectId);
    const chart =
      project.assessments.length > 0
        ? await this.api.fetchChart(projectId, "all")
        : null;
    this.render(project, chart);
  }

  render(project: ProjectDto, chart: string | null): void {
    this.root.innerHTML = "";
    const container = el("div", "timeline");
    this.root.appendChild(container);

    container.appendChild(el("h2", "", `Timeline — ${project.project.name}`));

    const computed = project.computed.assessments;
    if (computed.length === 0) {
      container.appendChild(el("p", "", "No snapshots recorded yet."));
      return;
    }

    const trend = el("table", "trend");
    const head = el("tr");
    for (const column of ["Session", "Date", "Effective band", "Area", "Unknowns"]) {
      head.appendChild(el("th", "", column));
    }
    trend.appendChild(head);
    for (const snapshot of computed) {
      const row = el("tr");
      row.appendChild(el("td", "", snapshot.label));
      row.appendChild(el("td", "", snapshot.timestamp.slice(0, 10)));
      row.appendChild(el("td", "", snapshot.score.effective_band));
      row.appendChild(el("td", "", fmtArea(snapshot.score.normalized_area)));
      row.appendChild(el("td", "", String(snapshot.score.unknown_count)));
      trend.appendChild(row);
    }
    container.appendChild(trend);

    if (chart) {
      const chartBox = el("div", "chart");
      chartBox.innerHTML = chart;
      container.appendChild(chartBox);
    }

    // diff pane: latest consecutive comparison; hidden with fewer than two
    const diffs = project.computed.diffs;
    if (diffs.length > 0) {
      const diff = diffs[diffs.length - 1];
      const pane = el("section", "diff");
      pane.appendChild(el("h3", "", `Progress: ${diff.before} → ${diff.after}`));
      pane.appendChild(
        el(
          "p",
          "",
          `Area delta: ${fmtArea(diff.area_delta)} — resolved unknowns: ${diff.resolved_unknowns}`,
        ),
      );
      const table = el("table", "pairs");
      const headRow = el("tr");
      for (const column of ["#", "Before", "After", "Change"]) {
        headRow.appendChild(el("th", "", column));
      }
      table.appendChild(headRow);
      for (const pair of diff.pairs) {
        const row = el("tr", `kind-${pair.kind}`);
        row.appendChild(el("td", "", pair.question_id));
        row.appendChild(el("td", "", pair.before ? ANSWER_LABELS[pair.before] : "n/a"));
        row.appendChild(el("td", "", pair.after ? ANSWER_LABELS[pair.after] : "n/a"));
        row.appendChild(el("td", "", pair.kind));
        table.appendChild(row);
      }
      pane.appendChild(table);
      container.appendChild(pane);
    }
  }
}
