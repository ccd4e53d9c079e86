/**
 * Candidate card rendering: original/treatment texts with the changed word
 * highlighted, score bars for both words, polarity chips, status badge,
 * and accept/reject controls.
 *
 * Every displayed number comes verbatim from the service payload; the exact
 * value is kept in a data-value attribute and the visible label is only a
 * rounded rendering of it.
 */
import { diffTitles, renderSegments } from "./diff.js";
import type { Candidate, WordScore } from "./types.js";

export type DecisionHandler = (
  candidate: Candidate,
  decision: "accepted" | "rejected",
) => void;

function el<K extends keyof HTMLElementTagNameMap>(
  doc: Document,
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = doc.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function scoreBar(doc: Document, label: string, value: number): HTMLElement {
  const row = el(doc, "div", "bar-row");
  row.appendChild(el(doc, "span", "bar-label", label));
  const track = el(doc, "div", "bar-track");
  const fill = el(doc, "div", "bar-fill");
  fill.style.width = `${Math.max(0, Math.min(1, value)) * 100}%`;
  fill.dataset["value"] = String(value);
  fill.dataset["metric"] = label;
  track.appendChild(fill);
  row.appendChild(track);
  row.appendChild(el(doc, "span", "bar-number", value.toFixed(3)));
  return row;
}

function polarityChip(doc: Document, score: WordScore): HTMLElement {
  const chip = el(doc, "span", `chip chip-${score.polarity}`, score.polarity);
  chip.dataset["valence"] = String(score.valence);
  chip.title = `valence ${score.valence}`;
  return chip;
}

function scoreBlock(doc: Document, heading: string, word: string, score: WordScore): HTMLElement {
  const block = el(doc, "div", "score-block");
  const head = el(doc, "div", "score-head");
  head.appendChild(el(doc, "span", "score-word", word));
  head.appendChild(polarityChip(doc, score));
  block.appendChild(el(doc, "div", "score-heading", heading));
  block.appendChild(head);
  block.appendChild(scoreBar(doc, "familiarity", score.familiarity));
  block.appendChild(scoreBar(doc, "novelty", score.novelty));
  block.appendChild(scoreBar(doc, "composite", score.composite));
  return block;
}

export function renderCandidateCard(
  doc: Document,
  candidate: Candidate,
  onDecide: DecisionHandler,
): HTMLElement {
  const card = el(doc, "article", `card card-${candidate.status}`);
  card.dataset["candidateId"] = candidate.candidate_id;
  card.dataset["status"] = candidate.status;
  card.dataset["delta"] = String(candidate.delta);

  const header = el(doc, "div", "card-header");
  header.appendChild(
    el(doc, "span", "card-change", `${candidate.original} → ${candidate.replacement}`),
  );
  const badge = el(doc, "span", `badge badge-${candidate.status}`, candidate.status);
  header.appendChild(badge);
  card.appendChild(header);

  const diff = diffTitles(candidate.original_title, candidate.treatment_title);
  const originalLine = el(doc, "p", "title-line title-original");
  renderSegments(originalLine, diff.original);
  const treatmentLine = el(doc, "p", "title-line title-treatment");
  renderSegments(treatmentLine, diff.treatment);
  card.appendChild(originalLine);
  card.appendChild(treatmentLine);

  const scores = el(doc, "div", "score-grid");
  scores.appendChild(scoreBlock(doc, "original word", candidate.original, candidate.original_score));
  scores.appendChild(
    scoreBlock(doc, "replacement word", candidate.replacement, candidate.replacement_score),
  );
  card.appendChild(scores);

  const footer = el(doc, "div", "card-footer");
  const delta = el(doc, "span", "delta", `Δ composite ${candidate.delta.toFixed(3)}`);
  delta.dataset["value"] = String(candidate.delta);
  footer.appendChild(delta);

  const actions = el(doc, "div", "actions");
  const accept = el(doc, "button", "btn btn-accept", "accept");
  const reject = el(doc, "button", "btn btn-reject", "reject");
  const pending = candidate.status === "pending";
  accept.disabled = !pending;
  reject.disabled = !pending;
  // Double-click guard: the first click disables both buttons synchronously,
  // so only one decision fires; a revert re-enables them via setCardStatus.
  const handle = (decision: "accepted" | "rejected") => {
    if (accept.disabled || reject.disabled) return;
    accept.disabled = true;
    reject.disabled = true;
    onDecide(candidate, decision);
  };
  accept.addEventListener("click", () => handle("accepted"));
  reject.addEventListener("click", () => handle("rejected"));
  actions.appendChild(accept);
  actions.appendChild(reject);
  footer.appendChild(actions);

  const error = el(doc, "div", "card-error");
  error.hidden = true;
  card.appendChild(footer);
  card.appendChild(error);
  return card;
}

/** Flip a rendered card to a new status (optimistically or from the server). */
export function setCardStatus(card: HTMLElement, status: Candidate["status"]): void {
  card.className = `card card-${status}`;
  card.dataset["status"] = status;
  const badge = card.querySelector(".badge");
  if (badge) {
    badge.className = `badge badge-${status}`;
    badge.textContent = status;
  }
  const pending = status === "pending";
  for (const button of card.querySelectorAll<HTMLButtonElement>(".btn")) {
    button.disabled = !pending;
  }
}

export function showCardError(card: HTMLElement, message: string): void {
  const error = card.querySelector<HTMLElement>(".card-error");
  if (error) {
    error.textContent = message;
    error.hidden = false;
  }
}
