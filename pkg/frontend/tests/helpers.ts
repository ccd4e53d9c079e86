import type { Candidate, WordScore } from "../src/types.js";

export function waitFor(
  predicate: () => boolean,
  timeoutMs = 10_000,
  intervalMs = 25,
): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  return new Promise((resolve, reject) => {
    const tick = () => {
      if (predicate()) return resolve();
      if (Date.now() > deadline) return reject(new Error("waitFor timed out"));
      setTimeout(tick, intervalMs);
    };
    tick();
  });
}

export function fixtureScore(overrides: Partial<WordScore> = {}): WordScore {
  return {
    familiarity: 0.7305,
    novelty: 1,
    polarity: "negative",
    valence: -0.62,
    composite: 0.8547514258543241,
    ...overrides,
  };
}

export function fixtureCandidate(overrides: Partial<Candidate> = {}): Candidate {
  return {
    candidate_id: "1:0:death",
    title_id: "1",
    position: 0,
    original: "end",
    replacement: "death",
    original_score: fixtureScore({
      familiarity: 0,
      novelty: 0.7297,
      polarity: "neutral",
      valence: 0,
      composite: 0,
    }),
    replacement_score: fixtureScore(),
    delta: 0.8547514258543241,
    status: "pending",
    original_title: "End of the library",
    treatment_title: "Death of the library",
    ...overrides,
  };
}
