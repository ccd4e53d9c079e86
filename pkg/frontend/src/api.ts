/**
 * Typed client for the review service endpoints.
 */
import type {
  Candidate,
  CandidateStatus,
  ExportRow,
  ScoreReport,
  SessionDetail,
  SessionSummary,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export class ApiClient {
  constructor(private readonly baseUrl: string = "") {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    let response: Response;
    try {
      response = await fetch(this.baseUrl + path, init);
    } catch (err) {
      throw new ApiError(0, `service unreachable: ${String(err)}`);
    }
    if (!response.ok) {
      let detail = `${response.status} ${response.statusText}`;
      try {
        const body = (await response.json()) as { detail?: unknown };
        if (typeof body.detail === "string") {
          detail = body.detail;
        }
      } catch {
        // non-JSON error body; keep the status line
      }
      throw new ApiError(response.status, detail);
    }
    return (await response.json()) as T;
  }

  private post<T>(path: string, body: unknown): Promise<T> {
    return this.request<T>(path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  listSessions(): Promise<SessionSummary[]> {
    return this.request("/api/sessions");
  }

  createSession(titles: string[]): Promise<SessionDetail> {
    return this.post("/api/sessions", { titles });
  }

  getSession(sessionId: string): Promise<SessionDetail> {
    return this.request(`/api/sessions/${encodeURIComponent(sessionId)}`);
  }

  candidates(sessionId: string, status?: CandidateStatus): Promise<Candidate[]> {
    const query = status ? `?status=${status}` : "";
    return this.request(`/api/sessions/${encodeURIComponent(sessionId)}/candidates${query}`);
  }

  decide(
    sessionId: string,
    candidateId: string,
    decision: "accepted" | "rejected",
  ): Promise<Candidate> {
    return this.post(`/api/sessions/${encodeURIComponent(sessionId)}/decisions`, {
      candidate_id: candidateId,
      decision,
    });
  }

  score(text: string): Promise<ScoreReport> {
    return this.request(`/api/score?text=${encodeURIComponent(text)}`);
  }

  exportPairs(sessionId: string): Promise<ExportRow[]> {
    return this.request(`/api/sessions/${encodeURIComponent(sessionId)}/export?format=json`);
  }

  exportTsvUrl(sessionId: string): string {
    return `${this.baseUrl}/api/sessions/${encodeURIComponent(sessionId)}/export?format=tsv`;
  }
}
