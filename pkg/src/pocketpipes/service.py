"""HTTP session service.

JSON endpoints over the session engine, one lock per session so requests
serialize in arrival order.  Events stream per session, either by polling
``GET /sessions/{id}/events?since=N`` or over the server-sent-events
endpoint ``GET /sessions/{id}/stream``.
"""

import asyncio
import json
import threading
import uuid
from dataclasses import dataclass, field

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, StreamingResponse

from . import session as session_mod
from .cube import CubeState, parse_scan_text
from .errors import GameError
from .session import GameConfig, GameSession, action_from_dict


@dataclass
class _Entry:
    session: GameSession
    lock: threading.Lock = field(default_factory=threading.Lock)


class SessionStore:
    def __init__(self, default_config: GameConfig | None = None):
        self.default_config = default_config or session_mod.DEFAULT_CONFIG
        self._entries: dict[str, _Entry] = {}
        self._guard = threading.Lock()

    def create(self, config: GameConfig | None = None, seed: int | None = None,
               session_id: str | None = None) -> GameSession:
        session = GameSession(
            config or self.default_config,
            session_id=session_id or uuid.uuid4().hex[:12],
            seed=seed,
        )
        with self._guard:
            self._entries[session.id] = _Entry(session)
        return session

    def get(self, session_id: str) -> _Entry:
        with self._guard:
            entry = self._entries.get(session_id)
        if entry is None:
            raise KeyError(session_id)
        return entry

    def ids(self):
        with self._guard:
            return list(self._entries)


class NotFound(Exception):
    pass


def create_app(store: SessionStore | None = None) -> FastAPI:
    app = FastAPI(title="pocketpipes", version="0.1.0")
    app.state.store = store or SessionStore()

    def entry(session_id: str) -> _Entry:
        try:
            return app.state.store.get(session_id)
        except KeyError:
            raise NotFound(session_id)

    @app.exception_handler(GameError)
    async def game_error_handler(_req: Request, exc: GameError):
        return JSONResponse(status_code=409, content={"error": exc.to_dict()})

    @app.exception_handler(NotFound)
    async def not_found_handler(_req: Request, exc: NotFound):
        return JSONResponse(
            status_code=404,
            content={"error": {"type": "NotFound", "detail": str(exc)}},
        )

    @app.post("/sessions")
    def create_session(body: dict | None = None):
        body = body or {}
        config = None
        if body.get("config_text"):
            config = GameConfig.from_text(body["config_text"])
        session = app.state.store.create(config=config, seed=body.get("seed"))
        return session.view()

    @app.get("/sessions")
    def list_sessions():
        return {"sessions": app.state.store.ids()}

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        e = entry(session_id)
        with e.lock:
            return e.session.view()

    @app.post("/sessions/{session_id}/scan")
    def post_scan(session_id: str, body: dict):
        e = entry(session_id)
        observations = parse_scan_text(body["text"])
        with e.lock:
            result = e.session.submit_scan(observations)
            view = e.session.view()
        return {"result": result, "session": view}

    @app.post("/sessions/{session_id}/cube")
    def post_cube(session_id: str, body: dict):
        e = entry(session_id)
        observed = None
        if body.get("state") is not None:
            observed = CubeState(
                tuple(body["state"]["perm"]), tuple(body["state"]["orient"])
            )
        with e.lock:
            result = e.session.submit_cube_state(
                observed=observed, move=body.get("move")
            )
            view = e.session.view()
        return {"result": result, "session": view}

    @app.post("/sessions/{session_id}/terrain")
    def post_terrain(session_id: str, body: dict):
        e = entry(session_id)
        action = action_from_dict(body)
        with e.lock:
            result = e.session.submit_terrain_action(action)
            view = e.session.view()
        return {"result": result, "session": view}

    @app.get("/sessions/{session_id}/cue")
    def get_cue(session_id: str):
        e = entry(session_id)
        with e.lock:
            return e.session.view()["cue"]

    @app.get("/sessions/{session_id}/events")
    def get_events(session_id: str, since: int = 0):
        e = entry(session_id)
        with e.lock:
            events = [ev.to_dict() for ev in e.session.events if ev.seq > since]
            next_seq = len(e.session.events)
        return {"events": events, "next": next_seq}

    @app.get("/sessions/{session_id}/save")
    def get_save(session_id: str):
        e = entry(session_id)
        with e.lock:
            return e.session.save()

    @app.get("/sessions/{session_id}/stream")
    async def stream(session_id: str, since: int = 0, limit: int = 0):
        # limit=0 streams forever; a positive limit closes the stream after
        # that many events (used by tests and one-shot consumers)
        e = entry(session_id)

        async def gen():
            cursor = since
            sent = 0
            while True:
                with e.lock:
                    fresh = [ev.to_dict() for ev in e.session.events
                             if ev.seq > cursor]
                for doc in fresh:
                    cursor = doc["seq"]
                    sent += 1
                    yield f"data: {json.dumps(doc)}\n\n"
                    if limit and sent >= limit:
                        return
                await asyncio.sleep(0.15)

        return StreamingResponse(gen(), media_type="text/event-stream")

    return app
