// Thin client for the gamecol session protocol.  One in-flight request per
// session, enforced here so a double-click cannot race the engine's reply.

import type {
  InternalsPayload,
  MoveResponse,
  SessionPayload,
} from './types';

export class ApiError extends Error {
  constructor(
    public status: number,
    message: string,
  ) {
    super(message);
  }
}

type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export interface NewGameForm {
  graph: string | { n: number; edges: [number, number][] };
  mode: 'coloring' | 'marking' | 'bob-marking';
  shades?: number;
  human: 'alice' | 'bob';
  policy: string;
  first?: 'alice' | 'bob';
}

export class ApiClient {
  private inFlight = new Set<string>();

  constructor(
    private baseUrl: string,
    private fetchImpl: FetchLike = fetch,
  ) {}

  private async request<T>(
    method: string,
    path: string,
    body?: unknown,
  ): Promise<T> {
    const resp = await this.fetchImpl(this.baseUrl + path, {
      method,
      headers: { 'Content-Type': 'application/json' },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    const doc = await resp.json();
    if (!resp.ok) {
      throw new ApiError(resp.status, (doc as { error?: string }).error ?? 'request failed');
    }
    return doc as T;
  }

  /** Run fn while holding the session's single request slot. */
  private async exclusive<T>(sessionId: string, fn: () => Promise<T>): Promise<T> {
    if (this.inFlight.has(sessionId)) {
      throw new ApiError(0, 'a request for this session is already in flight');
    }
    this.inFlight.add(sessionId);
    try {
      return await fn();
    } finally {
      this.inFlight.delete(sessionId);
    }
  }

  newGame(form: NewGameForm): Promise<SessionPayload> {
    return this.request<SessionPayload>('POST', '/session', form);
  }

  getState(sessionId: string): Promise<SessionPayload> {
    return this.exclusive(sessionId, () =>
      this.request<SessionPayload>('GET', `/session/${sessionId}`),
    );
  }

  playMove(
    sessionId: string,
    vertex: number,
    shade: number | null,
  ): Promise<MoveResponse> {
    const body = shade == null ? { vertex } : { vertex, shade };
    return this.exclusive(sessionId, () =>
      this.request<MoveResponse>('POST', `/session/${sessionId}/move`, body),
    );
  }

  getInternals(sessionId: string): Promise<InternalsPayload> {
    return this.exclusive(sessionId, () =>
      this.request<InternalsPayload>('GET', `/session/${sessionId}/internals`),
    );
  }

  deleteSession(sessionId: string): Promise<unknown> {
    return this.exclusive(sessionId, () =>
      this.request('DELETE', `/session/${sessionId}`),
    );
  }
}
