/**
 * Review board: the ranked candidate cards for one session, with status
 * filtering and the accept/reject decision flow (optimistic update,
 * server-state reconciliation on conflict).
 */
import { ApiClient, ApiError } from "./api.js";
import { renderCandidateCard, setCardStatus, showCardError } from "./cards.js";
import { optimistic } from "./optimistic.js";
import type { Candidate, CandidateStatus } from "./types.js";

export type StatusFilter = "all" | CandidateStatus;

export interface Board {
  element: HTMLElement;
  /** Fetch candidates (optionally filtered) and render them in rank order. */
  refresh(): Promise<void>;
  setFilter(filter: StatusFilter): Promise<void>;
}

export interface BoardOptions {
  /** Called after any decision settles against the service. */
  onChange?: () => void;
}

export function createBoard(
  doc: Document,
  api: ApiClient,
  sessionId: string,
  options: BoardOptions = {},
): Board {
  const element = doc.createElement("section");
  element.className = "board";

  const filterBar = doc.createElement("div");
  filterBar.className = "filter-bar";
  const list = doc.createElement("div");
  list.className = "card-list";
  element.append(filterBar, list);

  let filter: StatusFilter = "all";

  const filters: StatusFilter[] = ["all", "pending", "accepted", "rejected"];
  for (const name of filters) {
    const button = doc.createElement("button");
    button.className = "filter-btn";
    button.dataset["filter"] = name;
    button.textContent = name;
    button.addEventListener("click", () => void setFilter(name));
    filterBar.appendChild(button);
  }

  function markActiveFilter(): void {
    for (const button of filterBar.querySelectorAll<HTMLElement>(".filter-btn")) {
      button.classList.toggle("active", button.dataset["filter"] === filter);
    }
  }

  async function applyDecision(
    card: HTMLElement,
    candidate: Candidate,
    decision: "accepted" | "rejected",
  ): Promise<void> {
    const previous = (card.dataset["status"] ?? "pending") as CandidateStatus;
    let failure: unknown;
    const updated = await optimistic({
      apply: () => {
        setCardStatus(card, decision);
        return previous;
      },
      remote: () => api.decide(sessionId, candidate.candidate_id, decision),
      revert: (snapshot) => setCardStatus(card, snapshot),
      onError: (error) => {
        failure = error;
      },
    });
    if (updated) {
      // confirm with the service's answer (always equals the optimistic one)
      setCardStatus(card, updated.status);
      options.onChange?.();
    } else if (failure instanceof ApiError && failure.status === 409) {
      // decided elsewhere: adopt the server's state for this card
      try {
        const fresh = await api.candidates(sessionId);
        const server = fresh.find((c) => c.candidate_id === candidate.candidate_id);
        if (server) setCardStatus(card, server.status);
      } catch {
        // leave the reverted state if the refresh itself fails
      }
      showCardError(card, String(failure instanceof Error ? failure.message : failure));
      options.onChange?.();
    } else {
      showCardError(
        card,
        failure instanceof Error ? failure.message : "decision failed",
      );
    }
    element.dispatchEvent(
      new CustomEvent("decision-settled", {
        detail: { candidateId: candidate.candidate_id },
      }),
    );
  }

  function render(candidates: Candidate[]): void {
    list.textContent = "";
    if (candidates.length === 0) {
      const empty = doc.createElement("p");
      empty.className = "empty-state";
      empty.textContent = "no candidates";
      list.appendChild(empty);
      return;
    }
    for (const candidate of candidates) {
      const card = renderCandidateCard(doc, candidate, (c, decision) => {
        void applyDecision(card, c, decision);
      });
      list.appendChild(card);
    }
  }

  async function refresh(): Promise<void> {
    markActiveFilter();
    const candidates = await api.candidates(
      sessionId,
      filter === "all" ? undefined : filter,
    );
    render(candidates);
  }

  async function setFilter(next: StatusFilter): Promise<void> {
    filter = next;
    await refresh();
  }

  return { element, refresh, setFilter };
}
