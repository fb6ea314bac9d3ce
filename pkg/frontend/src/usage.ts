import { ApiClient } from "./api.js";

// One usage event per meaningful interaction, keyed by a per-visit session
// id. Emission is fire-and-forget: metrics must never break the UI.

export class UsageRecorder {
  private sessionId: string | null = null;
  private pending: Promise<void> = Promise.resolve();

  constructor(private api: ApiClient) {}

  private async ensureSession(): Promise<string> {
    if (this.sessionId === null) {
      this.sessionId = (await this.api.metricsSession()).session_id;
    }
    return this.sessionId;
  }

  emit(kind: string, target: string): void {
    this.pending = this.pending
      .then(async () => {
        const sessionId = await this.ensureSession();
        await this.api.recordEvent({ session_id: sessionId, kind, target });
      })
      .catch(() => undefined);
  }

  emitQuestion(text: string): void {
    this.pending = this.pending
      .then(async () => {
        const sessionId = await this.ensureSession();
        await this.api.recordEvent({ session_id: sessionId, kind: "question_submitted", text });
      })
      .catch(() => undefined);
  }

  // test hook: resolves when every queued emission has settled
  flush(): Promise<void> {
    return this.pending;
  }
}
