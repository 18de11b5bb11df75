/** Thin typed client for the game service; all exact numbers come from here. */

import type {
  Advice,
  BestResponseReport,
  FinalAction,
  FinalResponse,
  HostConfig,
  SessionView,
  Stats,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    detail: string,
  ) {
    super(detail);
    this.name = "ApiError";
  }
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method, headers: { "Content-Type": "application/json" } };
    if (body !== undefined) {
      init.body = JSON.stringify(body);
    }
    const response = await this.fetchFn(this.baseUrl + path, init);
    const text = await response.text();
    const data = text ? JSON.parse(text) : null;
    if (!response.ok) {
      const detail =
        data && typeof data === "object" && "detail" in data
          ? String((data as { detail: unknown }).detail)
          : `HTTP ${response.status}`;
      throw new ApiError(response.status, detail);
    }
    return data as T;
  }

  createSession(config: HostConfig): Promise<SessionView> {
    return this.request("POST", "/sessions", config);
  }

  pick(sessionId: string, door: number): Promise<SessionView> {
    return this.request("POST", `/sessions/${sessionId}/pick`, { door });
  }

  final(sessionId: string, action: FinalAction): Promise<FinalResponse> {
    return this.request("POST", `/sessions/${sessionId}/final`, { action });
  }

  advice(sessionId: string): Promise<Advice> {
    return this.request("GET", `/sessions/${sessionId}/advice`);
  }

  stats(sessionId: string): Promise<Stats> {
    return this.request("GET", `/sessions/${sessionId}/stats`);
  }

  bestResponse(config: HostConfig): Promise<BestResponseReport> {
    return this.request("POST", "/best-response", config);
  }
}
