// Typed client for the backend's documented endpoints. The fetch
// implementation is injectable so tests can stub every response.

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export interface AssistantReply {
  text: string;
  source: "corpus-verbatim" | "generated" | "degraded";
  matched_pair: string | null;
}

export interface FaqEntry {
  id: string;
  category: string;
  question: string;
  answer: string;
}

export interface MindfulnessItem {
  id: string;
  kind: "written-invitation" | "embedded-video";
  title: string;
  body?: string;
  video_url?: string;
}

export interface PhraseRow {
  id: string;
  text: string;
  audio: string;
}

export interface CareerTable {
  kind: string;
  columns: string[];
  rows: string[][];
}

export interface CareerKind {
  name: string;
  slug: string;
  params: string[];
}

export interface TurnFeedback {
  clarity: string;
  confidence: string;
  completeness: string;
  available: boolean;
}

export class ApiError extends Error {
  constructor(
    public status: number,
    public code: string,
    message: string,
    public detail: string,
  ) {
    super(message);
  }
}

export class ApiClient {
  constructor(
    private baseUrl = "",
    private fetchImpl: FetchLike = (input, init) => fetch(input, init),
    public lang = "en",
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const joiner = path.includes("?") ? "&" : "?";
    const url = `${this.baseUrl}${path}${joiner}lang=${this.lang}`;
    const init: RequestInit = { method };
    if (body !== undefined) {
      init.headers = { "Content-Type": "application/json" };
      init.body = JSON.stringify(body);
    }
    const response = await this.fetchImpl(url, init);
    if (!response.ok) {
      const envelope = await response.json().catch(() => null);
      const error = envelope?.error ?? {};
      throw new ApiError(response.status, error.code ?? "unknown",
        error.message ?? "", error.detail ?? "");
    }
    return (await response.json()) as T;
  }

  createChatSession(language: string): Promise<{ session_id: string }> {
    return this.request("POST", "/api/chat/session", { language });
  }

  sendChatMessage(sessionId: string, text: string): Promise<AssistantReply> {
    return this.request("POST", `/api/chat/${sessionId}/message`, { text });
  }

  listFaq(category: string): Promise<{ entries: FaqEntry[] }> {
    return this.request("GET", `/api/faq?category=${encodeURIComponent(category)}`);
  }

  listMindfulness(section: string): Promise<{ items: MindfulnessItem[] }> {
    return this.request("GET", `/api/mindfulness?section=${encodeURIComponent(section)}`);
  }

  listPhrases(category: string): Promise<{ phrases: PhraseRow[] }> {
    return this.request("GET", `/api/phrases?category=${encodeURIComponent(category)}`);
  }

  translate(sourceLang: string, text: string): Promise<{ text: string }> {
    return this.request("POST", "/api/translate", { source_lang: sourceLang, text });
  }

  locator(category: string): Promise<{ embed_url: string }> {
    return this.request("GET", `/api/locator?category=${encodeURIComponent(category)}`);
  }

  occupations(): Promise<{ occupations: { name: string; code: string }[] }> {
    return this.request("GET", "/api/career/occupations");
  }

  careerKinds(): Promise<{ kinds: CareerKind[] }> {
    return this.request("GET", "/api/career/kinds");
  }

  careerQuery(slug: string, params: Record<string, string>): Promise<CareerTable> {
    const query = new URLSearchParams(params).toString();
    return this.request("GET", `/api/career/${slug}?${query}`);
  }

  async buildResume(payload: unknown): Promise<Blob> {
    const response = await this.fetchImpl(`${this.baseUrl}/api/resume/build?lang=${this.lang}`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(payload),
    });
    if (!response.ok) {
      const envelope = await response.json().catch(() => null);
      const error = envelope?.error ?? {};
      throw new ApiError(response.status, error.code ?? "unknown",
        error.message ?? "", error.detail ?? "");
    }
    return response.blob();
  }

  interviewQuestions(): Promise<{ questions: { id: string; text: string }[] }> {
    return this.request("GET", "/api/interview/questions");
  }

  startInterview(questionId: string): Promise<{ session_id: string; question: string }> {
    return this.request("POST", "/api/interview/session", { question_id: questionId });
  }

  submitTurn(sessionId: string, transcript: string): Promise<{ turn: number; feedback: TurnFeedback }> {
    return this.request("POST", `/api/interview/${sessionId}/turn`, { transcript });
  }

  endInterview(sessionId: string): Promise<{ summary: string }> {
    return this.request("POST", `/api/interview/${sessionId}/end`);
  }

  metricsSession(): Promise<{ session_id: string }> {
    return this.request("POST", "/api/metrics/session");
  }

  recordEvent(payload: Record<string, unknown>): Promise<{ recorded: boolean }> {
    return this.request("POST", "/api/metrics/event", payload);
  }
}
