// App shell: project list, session wizard, timeline.

import { Api } from "./api.js";
import { TimelineView } from "./timeline.js";
import { SessionWizard } from "./wizard.js";

declare global {
  interface Window {
    DRL_API?: string;
  }
}

const api = new Api(window.DRL_API ?? "http://127.0.0.1:7070");

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

async function showProjects(root: HTMLElement): Promise<void> {
  root.innerHTML = "";
  root.appendChild(el("h2", "", "Projects"));
  let rows;
  try {
    rows = await api.listProjects();
  } catch (err) {
    root.appendChild(el("p", "error", `Cannot reach the service: ${(err as Error).message}`));
    return;
  }
  if (rows.length === 0) {
    root.appendChild(el("p", "", "No projects found in the data directory."));
    return;
  }
  const list = el("ul", "projects");
  for (const row of rows) {
    const item = el("li");
    if (row.error) {
      item.appendChild(el("span", "error", `${row.id}: ${row.error}`));
      list.appendChild(item);
      continue;
    }
    const open = el("button", "link", `${row.name} (${row.id})`);
    open.addEventListener("click", () => void showProject(root, row.id));
    item.appendChild(open);
    item.appendChild(
      el(
        "span",
        "meta",
        row.effective_band
          ? ` — ${row.effective_band}, area ${row.normalized_area?.toFixed(4) ?? "n/a"}`
          : " — no snapshots",
      ),
    );
    list.appendChild(item);
  }
  root.appendChild(list);
}

async function showProject(root: HTMLElement, projectId: string): Promise<void> {
  root.innerHTML = "";
  const back = el("button", "link", "← projects");
  back.addEventListener("click", () => void showProjects(root));
  root.appendChild(back);

  const controls = el("div", "controls");
  const labelInput = el("input") as HTMLInputElement;
  labelInput.placeholder = "session label, e.g. kickoff";
  const start = el("button", "primary", "New session");
  start.addEventListener("click", () => {
    const label = labelInput.value.trim();
    if (!label) return;
    void startSession(root, projectId, label);
  });
  controls.append(labelInput, start);
  root.appendChild(controls);

  const timelineRoot = el("div");
  root.appendChild(timelineRoot);
  try {
    await new TimelineView(timelineRoot, api).show(projectId);
  } catch (err) {
    timelineRoot.appendChild(el("p", "error", (err as Error).message));
  }
}

async function startSession(root: HTMLElement, projectId: string, label: string): Promise<void> {
  const project = await api.getProject(projectId);
  root.innerHTML = "";
  const wizardRoot = el("div");
  root.appendChild(wizardRoot);
  new SessionWizard(wizardRoot, api, project, label, window.localStorage, () => {
    const done = el("button", "link", "Back to timeline");
    done.addEventListener("click", () => void showProject(root, projectId));
    wizardRoot.appendChild(done);
  });
}

const appRoot = document.querySelector<HTMLElement>("#app");
if (appRoot) {
  void showProjects(appRoot);
}
