/** Editor state: active tool, stroke buffer, request sequencing.
 *
 * Concurrency rules (mirroring the service's per-session queueing):
 *  - at most one generate request in flight; edits arriving meanwhile
 *    collapse into a single pending request (last write wins);
 *  - every issued request gets a monotonically increasing ticket, and a
 *    response is applied only if no newer request has been issued since
 *    (stale responses are discarded).
 */

import type { GenerateOverrides, GenerateResult, ServiceClient } from "./api.js";
import type { Point } from "./strokes.js";

export type Tool = "mask-brush" | "mask-eraser" | "stroke" | "picker";

export interface EditorState {
  sessionId: string | null;
  tool: Tool;
  brushRadius: number;
  strokeBuffer: Point[];
  lastResultB64: string | null;
  orientationPreviewB64: string | null;
}

export function initialState(): EditorState {
  return {
    sessionId: null,
    tool: "mask-brush",
    brushRadius: 4,
    strokeBuffer: [],
    lastResultB64: null,
    orientationPreviewB64: null,
  };
}

export const MASK_DEBOUNCE_MS = 250;

type Timer = ReturnType<typeof setTimeout>;

/** Trailing-edge debounce; each call restarts the timer. */
export class Debouncer {
  private timer: Timer | null = null;

  constructor(
    private readonly delayMs: number,
    private readonly setTimer: typeof setTimeout = setTimeout,
    private readonly clearTimer: typeof clearTimeout = clearTimeout,
  ) {}

  schedule(fn: () => void): void {
    if (this.timer !== null) this.clearTimer(this.timer);
    this.timer = this.setTimer(() => {
      this.timer = null;
      fn();
    }, this.delayMs);
  }

  cancel(): void {
    if (this.timer !== null) this.clearTimer(this.timer);
    this.timer = null;
  }
}

export class GenerationQueue {
  private ticket = 0;
  private applied = 0;
  private inFlight = false;
  private pending: GenerateOverrides | null = null;
  /** Count of requests actually sent to the service (observable in tests). */
  issuedCount = 0;

  constructor(
    private readonly client: ServiceClient,
    private readonly sessionId: string,
    private readonly onResult: (result: GenerateResult) => void,
    private readonly onError: (err: unknown) => void = () => {},
  ) {}

  /** Queue a generation; collapses with any not-yet-sent request. */
  request(overrides: GenerateOverrides = {}): void {
    if (this.inFlight) {
      this.pending = overrides; // last write wins
      return;
    }
    void this.send(overrides);
  }

  private async send(overrides: GenerateOverrides): Promise<void> {
    const ticket = ++this.ticket;
    this.inFlight = true;
    this.issuedCount++;
    try {
      const result = await this.client.generate(this.sessionId, overrides);
      if (ticket > this.applied && ticket === this.ticket && this.pending === null) {
        this.applied = ticket;
        this.onResult(result);
      } // else: a newer request superseded this one; the response is stale
    } catch (err) {
      this.onError(err);
    } finally {
      this.inFlight = false;
      if (this.pending !== null) {
        const next = this.pending;
        this.pending = null;
        void this.send(next);
      }
    }
  }

  get busy(): boolean {
    return this.inFlight;
  }
}
