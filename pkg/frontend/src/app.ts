/**
 * Page wiring: session list and creation on the left, review board and
 * export view in the middle, the what-if panel docked alongside so
 * exploratory rewording informs the next accept/reject.
 */
import { ApiClient } from "./api.js";
import { createBoard, type Board } from "./board.js";
import { renderExportTable } from "./exportView.js";
import { createWhatIfPanel } from "./whatif.js";
import type { SessionSummary } from "./types.js";

export interface App {
  element: HTMLElement;
  refreshSessions(): Promise<void>;
  openSession(sessionId: string): Promise<void>;
}

export function createApp(root: HTMLElement, apiBase = ""): App {
  const doc = root.ownerDocument;
  const api = new ApiClient(apiBase);

  root.textContent = "";
  const banner = doc.createElement("div");
  banner.className = "error-banner";
  banner.hidden = true;

  const layout = doc.createElement("div");
  layout.className = "layout";

  const sidebar = doc.createElement("aside");
  sidebar.className = "sidebar";
  const sessionHeading = doc.createElement("h2");
  sessionHeading.textContent = "Sessions";
  const sessionList = doc.createElement("ul");
  sessionList.className = "session-list";
  const form = doc.createElement("form");
  form.className = "session-form";
  const textarea = doc.createElement("textarea");
  textarea.placeholder = "one title per line";
  textarea.rows = 4;
  const submit = doc.createElement("button");
  submit.type = "submit";
  submit.textContent = "create session";
  form.append(textarea, submit);
  sidebar.append(sessionHeading, sessionList, form);

  const mainColumn = doc.createElement("main");
  mainColumn.className = "main-column";
  const boardHost = doc.createElement("div");
  boardHost.className = "board-host";
  const exportButton = doc.createElement("button");
  exportButton.className = "export-btn";
  exportButton.textContent = "export dataset";
  exportButton.hidden = true;
  const exportHost = doc.createElement("div");
  exportHost.className = "export-host";
  mainColumn.append(boardHost, exportButton, exportHost);

  const whatIf = createWhatIfPanel(doc, (text) => api.score(text));

  layout.append(sidebar, mainColumn, whatIf.element);
  root.append(banner, layout);

  let board: Board | undefined;
  let currentSessionId: string | undefined;

  function showBanner(message: string, retry: () => void): void {
    banner.textContent = "";
    banner.hidden = false;
    banner.appendChild(doc.createTextNode(message + " "));
    const button = doc.createElement("button");
    button.textContent = "retry";
    button.addEventListener("click", () => {
      banner.hidden = true;
      retry();
    });
    banner.appendChild(button);
  }

  function renderSessionList(sessions: SessionSummary[]): void {
    sessionList.textContent = "";
    if (sessions.length === 0) {
      const empty = doc.createElement("li");
      empty.className = "empty-state";
      empty.textContent = "no sessions yet";
      sessionList.appendChild(empty);
      return;
    }
    for (const session of sessions) {
      const item = doc.createElement("li");
      const link = doc.createElement("a");
      link.href = "#";
      link.dataset["sessionId"] = session.session_id;
      link.textContent =
        `${session.session_id.slice(0, 8)} · ${session.title_count} titles ` +
        `· ${session.pending_count} pending / ${session.accepted_count} accepted`;
      link.addEventListener("click", (event) => {
        event.preventDefault();
        void openSession(session.session_id);
      });
      item.appendChild(link);
      item.classList.toggle("active", session.session_id === currentSessionId);
      sessionList.appendChild(item);
    }
  }

  async function refreshSessions(): Promise<void> {
    try {
      renderSessionList(await api.listSessions());
    } catch (error) {
      showBanner(
        `cannot reach the review service: ${error instanceof Error ? error.message : error}`,
        () => void refreshSessions(),
      );
    }
  }

  async function refreshExport(): Promise<void> {
    if (!currentSessionId) return;
    const rows = await api.exportPairs(currentSessionId);
    exportHost.textContent = "";
    exportHost.appendChild(renderExportTable(doc, rows));
  }

  async function openSession(sessionId: string): Promise<void> {
    currentSessionId = sessionId;
    boardHost.textContent = "";
    exportHost.textContent = "";
    board = createBoard(doc, api, sessionId, {
      onChange: () => {
        void refreshSessions();
        void refreshExport();
      },
    });
    boardHost.appendChild(board.element);
    exportButton.hidden = false;
    try {
      await board.refresh();
    } catch (error) {
      showBanner(
        `cannot load session: ${error instanceof Error ? error.message : error}`,
        () => void openSession(sessionId),
      );
      return;
    }
    await refreshSessions();
  }

  exportButton.addEventListener("click", () => void refreshExport());

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    const titles = textarea.value
      .split("\n")
      .map((line) => line.trim())
      .filter((line) => line.length > 0);
    if (titles.length === 0) return;
    void (async () => {
      try {
        const session = await api.createSession(titles);
        textarea.value = "";
        await openSession(session.session_id);
      } catch (error) {
        showBanner(
          `cannot create session: ${error instanceof Error ? error.message : error}`,
          () => undefined,
        );
      }
    })();
  });

  void refreshSessions();

  return { element: root, refreshSessions, openSession };
}
