import type { AnalyzePayload, HealthPayload, RecommendPayload, Variant } from "./types.js";

/** Thrown on 422: the password fails the composition policy. */
export class PolicyRejection extends Error {
  constructor(public violations: string[]) {
    super(`policy violation: ${violations.join(", ")}`);
  }
}

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

/** Thin client for /v1/analyze, /v1/recommend and /v1/health. */
export class ApiClient {
  constructor(
    private baseUrl: string = "",
    private fetchFn: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async post<T>(path: string, body: unknown): Promise<T> {
    const response = await this.fetchFn(this.baseUrl + path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    if (response.status === 422) {
      const payload = (await response.json()) as { violations: string[] };
      throw new PolicyRejection(payload.violations);
    }
    if (!response.ok) {
      throw new ApiError(response.status, `${path} failed with ${response.status}`);
    }
    return (await response.json()) as T;
  }

  analyze(password: string): Promise<AnalyzePayload> {
    return this.post<AnalyzePayload>("/v1/analyze", { password });
  }

  recommend(password: string, variant?: Variant, seed?: number): Promise<RecommendPayload> {
    const body: Record<string, unknown> = { password };
    if (variant !== undefined) body.variant = variant;
    if (seed !== undefined) body.seed = seed;
    return this.post<RecommendPayload>("/v1/recommend", body);
  }

  async health(): Promise<HealthPayload> {
    const response = await this.fetchFn(this.baseUrl + "/v1/health");
    return (await response.json()) as HealthPayload;
  }
}
