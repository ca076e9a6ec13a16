// Thin fetch client for the service endpoints.

import type {
  EventKind,
  EventResult,
  LoginResult,
  ModuleInfo,
  PageData,
  Profile,
  SurveySummary,
} from "./types";

export class ApiError extends Error {
  constructor(readonly status: number, detail: string) {
    super(detail);
  }
}

export class ApiClient {
  private token: string | null = null;

  constructor(private readonly base: string = "") {}

  setToken(token: string | null): void {
    this.token = token;
  }

  private async request<T>(
    method: string,
    path: string,
    body?: unknown,
  ): Promise<T> {
    const headers: Record<string, string> = {};
    if (body !== undefined) headers["Content-Type"] = "application/json";
    if (this.token) headers["Authorization"] = `Bearer ${this.token}`;
    const response = await fetch(this.base + path, {
      method,
      headers,
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (!response.ok) {
      let detail = response.statusText;
      try {
        const parsed = await response.json();
        if (parsed && typeof parsed.detail === "string") detail = parsed.detail;
      } catch {
        // non-JSON error body; keep the status text
      }
      throw new ApiError(response.status, detail);
    }
    const text = await response.text();
    return (text ? JSON.parse(text) : undefined) as T;
  }

  register(name: string, password: string): Promise<{ user_id: string }> {
    return this.request("POST", "/register", { name, password });
  }

  async login(name: string, password: string): Promise<LoginResult> {
    const result = await this.request<LoginResult>("POST", "/login", {
      name,
      password,
    });
    this.setToken(result.token);
    return result;
  }

  submitIls(answers: string[]): Promise<{ scores: Record<string, number> }> {
    return this.request("POST", "/ils", { answers });
  }

  fetchProfile(): Promise<Profile> {
    return this.request("GET", "/profile");
  }

  fetchModules(): Promise<{ modules: ModuleInfo[] }> {
    return this.request("GET", "/modules");
  }

  fetchPage(moduleId: string): Promise<PageData> {
    return this.request("GET", `/modules/${encodeURIComponent(moduleId)}/page`);
  }

  postEvent(kind: EventKind): Promise<EventResult> {
    return this.request("POST", "/events", { kind });
  }

  submitSurvey(scores: number[], respondentId = "anonymous") {
    return this.request("POST", "/survey", {
      respondent_id: respondentId,
      scores,
    });
  }

  fetchSurveySummary(): Promise<{ summary: SurveySummary; responses: number }> {
    return this.request("GET", "/survey/summary");
  }

  async fetchAdminTrace(): Promise<string> {
    const response = await fetch(this.base + "/admin/trace", {
      headers: this.token ? { Authorization: `Bearer ${this.token}` } : {},
    });
    if (!response.ok) throw new ApiError(response.status, response.statusText);
    return response.text();
  }

  fetchAdminAgents(): Promise<{ agents: string[] }> {
    return this.request("GET", "/admin/agents");
  }
}
