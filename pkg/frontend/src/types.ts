/**
 * Wire types mirroring the review service JSON payloads.
 * The UI never recomputes any of these numbers; it only displays them.
 */

export type CandidateStatus = "pending" | "accepted" | "rejected";

export type PolarityLabel = "positive" | "negative" | "neutral";

export interface WordScore {
  familiarity: number;
  novelty: number;
  polarity: PolarityLabel;
  valence: number;
  composite: number;
}

export interface ScoredWord extends WordScore {
  word: string;
  position: number;
}

export interface ScoreReport {
  text: string;
  title_score: number;
  words: ScoredWord[];
}

export interface Candidate {
  candidate_id: string;
  title_id: string;
  position: number;
  original: string;
  replacement: string;
  original_score: WordScore;
  replacement_score: WordScore;
  delta: number;
  status: CandidateStatus;
  original_title: string;
  treatment_title: string;
}

export interface SessionSummary {
  session_id: string;
  created_at: string;
  title_count: number;
  candidate_count: number;
  pending_count: number;
  accepted_count: number;
  rejected_count: number;
}

export interface SessionDetail extends SessionSummary {
  titles: { id: string; text: string }[];
  candidates: Candidate[];
  decisions: { candidate_id: string; decision: string; timestamp: string }[];
}

export interface ExportRow {
  original: string;
  treatment: string;
}
