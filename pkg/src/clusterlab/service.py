"""HTTP JSON API for the interactive mutation explorer.

Sessions are in-memory with idle expiry; a session's seed is always the
replay of its recorded path from the originating initial seed.  All
responses are canonical JSON: object keys sorted, integers unquoted,
polynomials rendered as strings plus structured term arrays.
"""

from __future__ import annotations

import json
import threading
import time
import uuid
from dataclasses import dataclass, field

from fastapi import FastAPI, HTTPException, Request, Response

from .exmatrix import ExtendedExchangeMatrix, SkewSymmetryError, to_ice_quiver
from .explorer import explore
from .gvec import indices_along_path
from .laurent import LaurentPoly
from .seed import Seed, apply_path, mutate_seed

DEFAULT_SESSION_TTL = 3600.0
NEIGHBORHOOD_MAX_DEPTH = 3
NEIGHBORHOOD_MAX_SEEDS = 1000


def canonical_json(payload) -> Response:
    return Response(
        content=json.dumps(payload, sort_keys=True), media_type="application/json"
    )


def poly_payload(p: LaurentPoly) -> dict:
    return {
        "text": p.render(),
        "terms": [{"coeff": c, "exponents": list(e)} for e, c in p.terms()],
    }


@dataclass
class Session:
    session_id: str
    initial: Seed
    current: Seed
    path: list[int] = field(default_factory=list)
    revision: int = 0
    last_access: float = field(default_factory=time.monotonic)
    lock: threading.Lock = field(default_factory=threading.Lock)

    def payload(self) -> dict:
        seed = self.current
        quiver = to_ice_quiver(seed.matrix)
        gvectors = indices_along_path(self.initial.matrix, tuple(self.path))
        return {
            "session_id": self.session_id,
            "revision": self.revision,
            "path": list(self.path),
            "matrix": seed.matrix.to_json(),
            "variables": [poly_payload(v) for v in seed.variables],
            "reduced_indices": [list(g.reduced) for g in gvectors[: seed.r]],
            "quiver": {
                "n": quiver.n,
                "r": quiver.r,
                "frozen": sorted(quiver.frozen),
                "arrows": sorted(
                    [i, j, c] for (i, j), c in quiver.arrows.items()
                ),
            },
        }


class SessionStore:
    def __init__(self, ttl: float = DEFAULT_SESSION_TTL):
        self.ttl = ttl
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    def create(self, initial: Seed) -> Session:
        session = Session(uuid.uuid4().hex, initial, initial)
        with self._lock:
            self._purge()
            self._sessions[session.session_id] = session
        return session

    def get(self, session_id: str) -> Session:
        with self._lock:
            self._purge()
            session = self._sessions.get(session_id)
        if session is None:
            raise HTTPException(status_code=404, detail=f"unknown session {session_id}")
        session.last_access = time.monotonic()
        return session

    def _purge(self) -> None:
        now = time.monotonic()
        stale = [
            sid
            for sid, s in self._sessions.items()
            if now - s.last_access > self.ttl
        ]
        for sid in stale:
            del self._sessions[sid]


def create_app(
    initial_seed: Seed | None = None, session_ttl: float = DEFAULT_SESSION_TTL
) -> FastAPI:
    app = FastAPI(title="clusterlab", version="0.1.0")
    store = SessionStore(session_ttl)
    app.state.store = store
    app.state.default_seed = initial_seed

    @app.get("/api/health")
    def health():
        return canonical_json({"status": "ok"})

    @app.post("/api/session")
    async def create_session(request: Request):
        body = await request.json()
        if not isinstance(body, dict):
            raise HTTPException(status_code=400, detail="request body must be an object")
        if "matrix" in body or "n" in body:
            source = body if "n" in body else body["matrix"]
            try:
                matrix = ExtendedExchangeMatrix.from_json(source)
            except (SkewSymmetryError, ValueError, TypeError) as exc:
                raise HTTPException(status_code=400, detail=str(exc))
        elif app.state.default_seed is not None:
            matrix = app.state.default_seed.matrix
        else:
            raise HTTPException(status_code=400, detail="request must carry a matrix")
        initial = Seed.initial(matrix)
        path = [int(v) for v in body.get("path") or []]
        try:
            current = apply_path(initial, path)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        session = store.create(initial)
        session.path = path
        session.current = current
        return canonical_json(session.payload())

    @app.get("/api/session/{session_id}")
    def get_session(session_id: str):
        return canonical_json(store.get(session_id).payload())

    @app.post("/api/session/{session_id}/mutate")
    async def mutate(session_id: str, request: Request):
        body = await request.json()
        vertex = body.get("vertex") if isinstance(body, dict) else None
        if not isinstance(vertex, int):
            raise HTTPException(status_code=400, detail="body must carry an integer 'vertex'")
        session = store.get(session_id)
        with session.lock:
            if not 1 <= vertex <= session.current.r:
                raise HTTPException(
                    status_code=400,
                    detail=f"vertex {vertex} is frozen or out of range",
                )
            session.current = mutate_seed(session.current, vertex)
            session.path.append(vertex)
            session.revision += 1
            return canonical_json(session.payload())

    @app.post("/api/session/{session_id}/undo")
    def undo(session_id: str):
        session = store.get(session_id)
        with session.lock:
            if not session.path:
                raise HTTPException(status_code=400, detail="nothing to undo")
            session.path.pop()
            session.current = apply_path(session.initial, session.path)
            session.revision += 1
            return canonical_json(session.payload())

    @app.get("/api/session/{session_id}/neighborhood")
    def neighborhood(session_id: str, depth: int = 1):
        if not 0 <= depth <= NEIGHBORHOOD_MAX_DEPTH:
            raise HTTPException(
                status_code=400,
                detail=f"depth must be in 0..{NEIGHBORHOOD_MAX_DEPTH}",
            )
        session = store.get(session_id)
        with session.lock:
            center = Seed.initial(session.current.matrix)
            graph = explore(
                center, max_seeds=NEIGHBORHOOD_MAX_SEEDS, max_depth=depth
            )
            ids = graph.key_ids()
            payload = graph.to_json()
            payload["current"] = ids[graph.initial_key]
            payload["truncated"] = not graph.complete
            payload["revision"] = session.revision
            return canonical_json(payload)

    @app.get("/api/session/{session_id}/gvectors")
    def gvectors(session_id: str):
        session = store.get(session_id)
        with session.lock:
            gs = indices_along_path(session.initial.matrix, tuple(session.path))
            return canonical_json(
                {
                    "session_id": session.session_id,
                    "revision": session.revision,
                    "full": [list(g.full) for g in gs],
                    "reduced": [list(g.reduced) for g in gs[: session.current.r]],
                }
            )

    return app


def serve(port: int, seed: Seed | None = None, host: str = "127.0.0.1") -> None:
    import uvicorn

    uvicorn.run(create_app(seed), host=host, port=port, log_level="warning")
