// Session state: the last confirmed server payload plus the mutation
// history ribbon. Optimistic updates are forbidden -- the view only changes
// when a payload with a strictly newer revision arrives.

import { ApiClient, SeedPayload } from "./api";

export interface HistoryEntry {
  vertex: number | null; // null marks the initial seed
  revision: number;
}

export type Listener = (payload: SeedPayload) => void;

export class SessionState {
  private payload: SeedPayload | null = null;
  private listeners: Listener[] = [];
  readonly history: HistoryEntry[] = [];

  constructor(private client: ApiClient) {}

  get current(): SeedPayload | null {
    return this.payload;
  }

  get sessionId(): string {
    if (!this.payload) throw new Error("no active session");
    return this.payload.session_id;
  }

  subscribe(listener: Listener): void {
    this.listeners.push(listener);
  }

  /** Accept a server payload; stale (non-increasing revision) payloads from
   * out-of-order responses are dropped. */
  accept(payload: SeedPayload): boolean {
    if (this.payload && payload.session_id === this.payload.session_id
        && payload.revision <= this.payload.revision) {
      return false;
    }
    this.payload = payload;
    for (const listener of this.listeners) listener(payload);
    return true;
  }

  async start(matrix: SeedPayload["matrix"], path: number[] = []): Promise<SeedPayload> {
    const payload = await this.client.createSession(matrix, path);
    this.payload = payload;
    this.history.length = 0;
    this.history.push({ vertex: null, revision: payload.revision });
    for (const v of path) this.history.push({ vertex: v, revision: payload.revision });
    for (const listener of this.listeners) listener(payload);
    return payload;
  }

  isMutable(vertex: number): boolean {
    return this.payload !== null && vertex >= 1 && vertex <= this.payload.matrix.r;
  }

  async mutate(vertex: number): Promise<SeedPayload> {
    if (!this.isMutable(vertex)) {
      throw new Error(`vertex ${vertex} is frozen or out of range`);
    }
    const payload = await this.client.mutate(this.sessionId, vertex);
    if (this.accept(payload)) {
      this.history.push({ vertex, revision: payload.revision });
    }
    return payload;
  }

  async undo(): Promise<SeedPayload> {
    const payload = await this.client.undo(this.sessionId);
    if (this.accept(payload) && this.history.length > 1) {
      this.history.pop();
    }
    return payload;
  }

  canUndo(): boolean {
    return this.payload !== null && this.payload.path.length > 0;
  }
}
