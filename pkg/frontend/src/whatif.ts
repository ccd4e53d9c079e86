/**
 * What-if panel: free-text input with a live per-word score table.
 * Requests are debounced; a failed request shows an inline message and
 * keeps the previous table. The panel never touches session candidates.
 */
import type { ScoreReport } from "./types.js";

export interface WhatIfPanel {
  element: HTMLElement;
  /** Resolves when the in-flight (or next) score render settles. */
  refresh(text: string): Promise<void>;
}

export function createWhatIfPanel(
  doc: Document,
  score: (text: string) => Promise<ScoreReport>,
  debounceMs = 300,
): WhatIfPanel {
  const panel = doc.createElement("section");
  panel.className = "whatif";
  const heading = doc.createElement("h2");
  heading.textContent = "What if…";
  const input = doc.createElement("input");
  input.type = "text";
  input.placeholder = "type a title to score it";
  input.className = "whatif-input";
  const error = doc.createElement("div");
  error.className = "whatif-error";
  error.hidden = true;
  const table = doc.createElement("table");
  table.className = "whatif-table";
  const titleScore = doc.createElement("p");
  titleScore.className = "whatif-title-score";
  panel.append(heading, input, error, table, titleScore);

  let timer: ReturnType<typeof setTimeout> | undefined;
  let requestSerial = 0;

  function renderReport(report: ScoreReport): void {
    error.hidden = true;
    table.textContent = "";
    titleScore.textContent = "";
    if (report.words.length === 0) {
      return;
    }
    const header = doc.createElement("tr");
    for (const column of ["word", "familiarity", "novelty", "polarity", "composite"]) {
      const th = doc.createElement("th");
      th.textContent = column;
      header.appendChild(th);
    }
    table.appendChild(header);
    for (const word of report.words) {
      const row = doc.createElement("tr");
      row.dataset["word"] = word.word;
      const cells: [string, string | undefined][] = [
        [word.word, undefined],
        [word.familiarity.toFixed(3), String(word.familiarity)],
        [word.novelty.toFixed(3), String(word.novelty)],
        [word.polarity, String(word.valence)],
        [word.composite.toFixed(3), String(word.composite)],
      ];
      for (const [text, value] of cells) {
        const td = doc.createElement("td");
        td.textContent = text;
        if (value !== undefined) td.dataset["value"] = value;
        row.appendChild(td);
      }
      table.appendChild(row);
    }
    titleScore.textContent = `title score ${report.title_score.toFixed(3)}`;
    titleScore.dataset["value"] = String(report.title_score);
  }

  async function run(text: string): Promise<void> {
    const serial = ++requestSerial;
    if (text.trim() === "") {
      table.textContent = "";
      titleScore.textContent = "";
      error.hidden = true;
      return;
    }
    try {
      const report = await score(text);
      if (serial === requestSerial) {
        renderReport(report);
      }
    } catch (err) {
      if (serial === requestSerial) {
        // keep the previous table visible, surface the failure inline
        error.textContent = `scoring failed: ${err instanceof Error ? err.message : String(err)}`;
        error.hidden = false;
      }
    }
  }

  input.addEventListener("input", () => {
    if (timer !== undefined) clearTimeout(timer);
    timer = setTimeout(() => void run(input.value), debounceMs);
  });

  return {
    element: panel,
    refresh: (text: string) => {
      input.value = text;
      return run(text);
    },
  };
}
