/**
 * Export view: the accepted original/treatment pairs as a two-column table.
 */
import type { ExportRow } from "./types.js";

export function renderExportTable(doc: Document, rows: ExportRow[]): HTMLElement {
  const wrapper = doc.createElement("section");
  wrapper.className = "export-view";
  const heading = doc.createElement("h2");
  heading.textContent = "Verified dataset";
  wrapper.appendChild(heading);

  if (rows.length === 0) {
    const empty = doc.createElement("p");
    empty.className = "empty-state";
    empty.textContent = "no accepted candidates yet";
    wrapper.appendChild(empty);
    return wrapper;
  }

  const table = doc.createElement("table");
  table.className = "export-table";
  const header = doc.createElement("tr");
  for (const column of ["ORIGINAL", "TREATMENT"]) {
    const th = doc.createElement("th");
    th.textContent = column;
    header.appendChild(th);
  }
  table.appendChild(header);
  for (const row of rows) {
    const tr = doc.createElement("tr");
    const original = doc.createElement("td");
    original.textContent = row.original;
    const treatment = doc.createElement("td");
    treatment.textContent = row.treatment;
    tr.append(original, treatment);
    table.appendChild(tr);
  }
  wrapper.appendChild(table);
  return wrapper;
}
