/** Typed client over the service HTTP API (the UI's only backend). */

export interface StrokeWire {
  points: [number, number][];
  radius: number;
}

export interface SessionInfo {
  id: string;
  hw: [number, number];
  orientation_preview: string; // base64 PNG
}

export interface SessionStateWire {
  id: string;
  hw: [number, number];
  mask: string;
  orientation_preview: string;
  orientation_field: string;
  appearance_source: string;
  checkpoint: string | null;
  seq: number;
}

export interface GenerateResult {
  image: string; // base64 PNG
  seq: number;
}

export interface StrokesResult {
  orientation_preview: string;
  changed: boolean;
  seq?: number;
}

export interface KnnEntry {
  id: string;
  mean_rgb: [number, number, number];
  thumbnail: string;
}

export interface KnnResult {
  ids: string[];
  entries: KnnEntry[];
}

export interface GenerateOverrides {
  mask?: string;
  orientation?: string;
  orientation_rotate?: number;
  appearance_ref_id?: string;
  appearance_rgb?: string;
}

export interface ApiError {
  code: number;
  message: string;
}

export class ServiceError extends Error {
  constructor(public readonly code: number, message: string) {
    super(message);
    this.name = "ServiceError";
  }
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

/** Thin wrapper; `fetchImpl` is injectable so tests can run under node or
 * stub the network entirely. */
export class ServiceClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchImpl: FetchLike = (u, i) => fetch(u, i),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const res = await this.fetchImpl(this.baseUrl + path, init);
    const body = await res.json();
    if (!res.ok) {
      const err = body as ApiError;
      throw new ServiceError(err.code ?? res.status, err.message ?? "request failed");
    }
    return body as T;
  }

  private post<T>(path: string, payload: unknown): Promise<T> {
    return this.request<T>(path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(payload),
    });
  }

  health(): Promise<{ status: string; checkpoint: string | null; library_size: number }> {
    return this.request("/health");
  }

  createSession(imageB64: string, maskB64?: string): Promise<SessionInfo> {
    const body: Record<string, string> = { image: imageB64 };
    if (maskB64 !== undefined) body.mask = maskB64;
    return this.post("/session", body);
  }

  sessionState(id: string): Promise<SessionStateWire> {
    return this.request(`/session/${id}/state`);
  }

  generate(id: string, overrides: GenerateOverrides = {}): Promise<GenerateResult> {
    return this.post(`/session/${id}/generate`, overrides);
  }

  submitStrokes(id: string, strokes: StrokeWire[]): Promise<StrokesResult> {
    return this.post(`/session/${id}/strokes`, strokes);
  }

  knn(rgbHex: string, k = 8): Promise<KnnResult> {
    return this.request(`/appearance/knn?rgb=${encodeURIComponent(rgbHex)}&k=${k}`);
  }
}
