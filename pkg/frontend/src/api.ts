// Typed client for the clusterlab HTTP JSON API. The UI never computes
// algebra itself; every displayed value comes from one of these payloads.

export interface PolyPayload {
  text: string;
  terms: Array<{ coeff: number; exponents: number[] }>;
}

export interface MatrixPayload {
  n: number;
  r: number;
  matrix: number[][];
}

export interface QuiverPayload {
  n: number;
  r: number;
  frozen: number[];
  // [from, to, multiplicity] triples, 1-based vertex numbers
  arrows: Array<[number, number, number]>;
}

export interface SeedPayload {
  session_id: string;
  revision: number;
  path: number[];
  matrix: MatrixPayload;
  variables: PolyPayload[];
  reduced_indices: number[][];
  quiver: QuiverPayload;
}

export interface NeighborhoodVertex {
  key_id: number;
  variables: string[];
  reduced_indices: number[][];
  path: number[];
}

export interface NeighborhoodPayload {
  vertices: NeighborhoodVertex[];
  edges: Array<[number, number, number]>;
  complete: boolean;
  current: number;
  truncated: boolean;
  revision: number;
}

export interface GVectorsPayload {
  session_id: string;
  revision: number;
  full: number[][];
  reduced: number[][];
}

export class ApiError extends Error {
  constructor(public status: number, public detail: string) {
    super(`${status}: ${detail}`);
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private baseUrl: string,
    private fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchImpl(this.baseUrl + path, init);
    const body = await response.json();
    if (!response.ok) {
      throw new ApiError(response.status, body?.detail ?? "request failed");
    }
    return body as T;
  }

  health(): Promise<{ status: string }> {
    return this.request("/api/health");
  }

  createSession(matrix: MatrixPayload, path: number[] = []): Promise<SeedPayload> {
    return this.request("/api/session", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ ...matrix, path }),
    });
  }

  getSession(sessionId: string): Promise<SeedPayload> {
    return this.request(`/api/session/${sessionId}`);
  }

  mutate(sessionId: string, vertex: number): Promise<SeedPayload> {
    return this.request(`/api/session/${sessionId}/mutate`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ vertex }),
    });
  }

  undo(sessionId: string): Promise<SeedPayload> {
    return this.request(`/api/session/${sessionId}/undo`, { method: "POST" });
  }

  neighborhood(sessionId: string, depth: number): Promise<NeighborhoodPayload> {
    return this.request(`/api/session/${sessionId}/neighborhood?depth=${depth}`);
  }

  gvectors(sessionId: string): Promise<GVectorsPayload> {
    return this.request(`/api/session/${sessionId}/gvectors`);
  }
}
