// Thin fetch wrapper over the session endpoints. Typed engine errors are
// rethrown as ServiceError so the UI can render them inline.

import {
  CueJson,
  EventDoc,
  ServiceErrorBody,
  SessionView,
  TerrainAction,
} from "./protocol.js";

export class ServiceError extends Error {
  readonly type: string;
  readonly reason?: string;

  constructor(body: ServiceErrorBody) {
    super(body.detail || body.type);
    this.type = body.type;
    this.reason = body.reason;
  }
}

async function call<T>(url: string, init?: RequestInit): Promise<T> {
  const response = await fetch(url, {
    headers: { "content-type": "application/json" },
    ...init,
  });
  const body = await response.json();
  if (!response.ok) {
    throw new ServiceError(
      body?.error ?? { type: `HTTP${response.status}`, detail: url },
    );
  }
  return body as T;
}

export class ApiClient {
  constructor(readonly baseUrl: string) {}

  private url(path: string): string {
    return this.baseUrl.replace(/\/$/, "") + path;
  }

  createSession(body: { config_text?: string; seed?: number } = {}): Promise<SessionView> {
    return call(this.url("/sessions"), {
      method: "POST",
      body: JSON.stringify(body),
    });
  }

  getView(id: string): Promise<SessionView> {
    return call(this.url(`/sessions/${id}`));
  }

  scan(id: string, text: string): Promise<{ result: unknown; session: SessionView }> {
    return call(this.url(`/sessions/${id}/scan`), {
      method: "POST",
      body: JSON.stringify({ text }),
    });
  }

  cubeMove(id: string, move: string): Promise<{ result: unknown; session: SessionView }> {
    return call(this.url(`/sessions/${id}/cube`), {
      method: "POST",
      body: JSON.stringify({ move }),
    });
  }

  cubeState(
    id: string,
    state: { perm: number[]; orient: number[] },
  ): Promise<{ result: unknown; session: SessionView }> {
    return call(this.url(`/sessions/${id}/cube`), {
      method: "POST",
      body: JSON.stringify({ state }),
    });
  }

  terrain(id: string, action: TerrainAction): Promise<{ result: unknown; session: SessionView }> {
    return call(this.url(`/sessions/${id}/terrain`), {
      method: "POST",
      body: JSON.stringify(action),
    });
  }

  cue(id: string): Promise<CueJson> {
    return call(this.url(`/sessions/${id}/cue`));
  }

  events(id: string, since: number): Promise<{ events: EventDoc[]; next: number }> {
    return call(this.url(`/sessions/${id}/events?since=${since}`));
  }
}

/**
 * Subscribe to the per-session event feed in seq order: server-sent events
 * when EventSource exists (browser), with polling as the fallback.
 * Returns an unsubscribe function.
 */
export function subscribe(
  client: ApiClient,
  id: string,
  since: number,
  onEvents: (events: EventDoc[]) => void,
  pollMs = 400,
): () => void {
  if (typeof EventSource !== "undefined") {
    const source = new EventSource(
      client.baseUrl.replace(/\/$/, "") + `/sessions/${id}/stream?since=${since}`,
    );
    source.onmessage = (msg) => onEvents([JSON.parse(msg.data) as EventDoc]);
    return () => source.close();
  }
  let cursor = since;
  let stopped = false;
  const tick = async () => {
    if (stopped) return;
    try {
      const batch = await client.events(id, cursor);
      if (batch.events.length) {
        cursor = batch.events[batch.events.length - 1].seq;
        onEvents(batch.events);
      }
    } catch {
      // transient; next poll retries
    }
    if (!stopped) setTimeout(tick, pollMs);
  };
  void tick();
  return () => {
    stopped = true;
  };
}
