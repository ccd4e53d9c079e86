/**
 * Optimistic mutation helper: apply the UI change immediately, run the
 * remote call, revert on failure. The snapshot returned by apply() is
 * handed back to revert() so callers decide what state to capture.
 */

export interface OptimisticOptions<S, R> {
  /** Apply the change immediately; returns a snapshot for revert. */
  apply: () => S;
  /** Perform the remote operation. */
  remote: () => Promise<R>;
  /** Undo the change when the remote operation fails. */
  revert: (snapshot: S) => void;
  /** Called with the error after revert. */
  onError?: (error: unknown) => void;
}

export async function optimistic<S, R>(options: OptimisticOptions<S, R>): Promise<R | undefined> {
  const snapshot = options.apply();
  try {
    return await options.remote();
  } catch (error) {
    options.revert(snapshot);
    options.onError?.(error);
    return undefined;
  }
}
