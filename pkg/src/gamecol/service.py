"""Live game sessions over a small JSON HTTP protocol.

The service layer never decides legality itself: every check goes through
the same engine predicates the solvers use.  The engine replies
synchronously inside the human's move request.  Sessions live in memory,
optionally snapshotted to JSON files on each mutation.
"""

from __future__ import annotations

import json
import re
import threading
import uuid
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from typing import Optional

from .engine import (
    ALICE,
    BOB,
    BOB_SCORING,
    STANDARD,
    UNCOLORED,
    ColoringState,
    MarkingState,
    SolverLimits,
    is_bob_win,
    is_legal_coloring_move,
    is_legal_marking_move,
    other_player,
)
from .graph6 import write_graph6
from .graphs import Graph, GraphError
from .gspec import GraphSpecError, parse_graph_spec
from .strategies import (
    ComposedColoringStrategy,
    coloring_strategy_from_name,
    marking_strategy_from_name,
)

COLORING = "coloring"
MARKING = "marking"
BOB_MARKING = "bob-marking"

SERVICE_LIMITS = SolverLimits(
    coloring_vertices=12, coloring_shades=16, marking_vertices=18
)


class SessionError(Exception):
    def __init__(self, status: int, message: str) -> None:
        super().__init__(message)
        self.status = status
        self.message = message


class GameSession:
    """One live game; all mutation happens under the session lock."""

    def __init__(
        self,
        sid: str,
        graph: Graph,
        mode: str,
        shades: Optional[int],
        human: str,
        policy: str,
        first: str,
    ) -> None:
        self.id = sid
        self.graph = graph
        self.mode = mode
        self.shades = shades
        self.human = human
        self.policy = policy
        self.first = first
        self.history: list[dict] = []
        self.max_score = 0
        self.winner: Optional[str] = None
        self.score: Optional[int] = None
        self.finished = False
        self.lock = threading.Lock()
        engine_side = other_player(human)
        if mode == COLORING:
            assert shades is not None
            self.state = ColoringState.initial(graph, shades, first)
            self.strategy = coloring_strategy_from_name(
                policy, graph, shades, first, SERVICE_LIMITS
            )
        else:
            scoring = BOB_SCORING if mode == BOB_MARKING else STANDARD
            self.state = MarkingState.initial(graph, scoring, first)
            self.strategy = marking_strategy_from_name(
                policy, graph, scoring, first, SERVICE_LIMITS
            )
        if engine_side != ALICE and policy not in ("exact", "naive-lowest"):
            raise SessionError(
                400, f"policy {policy!r} plays Alice; set human=bob"
            )

    # -- state transitions ------------------------------------------------

    @property
    def engine_side(self) -> str:
        return other_player(self.human)

    @property
    def status(self) -> str:
        if self.finished:
            return "finished"
        return (
            "awaiting-human" if self.state.to_move == self.human else "awaiting-engine"
        )

    def _record(self, player: str, vertex: int, shade: Optional[int], note) -> dict:
        rec = {
            "ply": len(self.history),
            "player": player,
            "vertex": vertex,
            "shade": shade,
            "annotations": note,
        }
        self.history.append(rec)
        return rec

    def _apply_coloring(self, player: str, vertex: int, shade: int, note) -> dict:
        if not is_legal_coloring_move(self.state, vertex, shade):
            raise SessionError(409, f"illegal move: vertex {vertex} shade {shade}")
        self.state = self.state.apply(vertex, shade)
        rec = self._record(player, vertex, shade, note)
        if is_bob_win(self.state):
            self.finished = True
            self.winner = BOB
        elif self.state.is_complete:
            self.finished = True
            self.winner = ALICE
        return rec

    def _apply_marking(self, player: str, vertex: int, note) -> dict:
        if not is_legal_marking_move(self.state, vertex):
            raise SessionError(409, f"illegal mark: vertex {vertex}")
        self.max_score = max(self.max_score, self.state.score_if_marked(vertex))
        self.state = self.state.apply(vertex)
        rec = self._record(player, vertex, None, note)
        if self.state.is_complete:
            self.finished = True
            self.score = self.max_score + 1
        return rec

    def engine_step(self) -> Optional[dict]:
        """Let the engine move when it is its turn; returns the move record."""
        if self.finished or self.state.to_move != self.engine_side:
            return None
        last = self._last_move_of(self.human)
        if self.mode == COLORING:
            mv = self.strategy.respond(
                self.state,
                (last["vertex"], last["shade"]) if last else None,
            )
            note = getattr(self.strategy, "last_annotation", None)
            return self._apply_coloring(self.engine_side, mv[0], mv[1], note)
        reply = self.strategy.respond(
            self.state, last["vertex"] if last else None
        )
        return self._apply_marking(self.engine_side, reply, None)

    def _last_move_of(self, player: str) -> Optional[dict]:
        for rec in reversed(self.history):
            if rec["player"] == player:
                return rec
        return None

    def human_move(self, vertex: int, shade: Optional[int]) -> tuple[dict, Optional[dict]]:
        if self.finished:
            raise SessionError(410, "game already finished")
        if self.state.to_move != self.human:
            raise SessionError(409, "not your turn")
        if self.mode == COLORING:
            if shade is None:
                raise SessionError(400, "coloring move needs a shade")
            human_rec = self._apply_coloring(self.human, vertex, shade, None)
        else:
            human_rec = self._apply_marking(self.human, vertex, None)
        engine_rec = self.engine_step()
        return human_rec, engine_rec

    # -- views -------------------------------------------------------------

    def to_json(self) -> dict:
        doc = {
            "id": self.id,
            "mode": self.mode,
            "shades": self.shades,
            "human": self.human,
            "policy": self.policy,
            "first": self.first,
            "status": self.status,
            "to_move": None if self.finished else self.state.to_move,
            "winner": self.winner,
            "score": self.score,
            "graph": {
                "n": self.graph.n,
                "edges": [list(e) for e in self.graph.edge_list()],
            },
            "graph6": write_graph6(self.graph.unlabeled()),
            "history": self.history,
        }
        if self.graph.labels is not None:
            doc["graph"]["labels"] = [_label_json(l) for l in self.graph.labels]
        if self.mode == COLORING:
            doc["assignment"] = [
                None if a == UNCOLORED else a for a in self.state.assignment
            ]
            if isinstance(self.strategy, ComposedColoringStrategy):
                doc["k"] = self.strategy.palette.k
                doc["per_color"] = self.strategy.palette.per_color
        else:
            doc["marks"] = list(self.state.marked_by)
            doc["max_score"] = self.max_score
        return doc

    def internals(self) -> dict:
        if isinstance(self.strategy, ComposedColoringStrategy):
            snap = self.strategy.ledger_snapshot()
            snap["available"] = True
            return snap
        return {"available": False, "games": []}

    def replay_state(self):
        """Rebuild the position by replaying history through engine rules."""
        if self.mode == COLORING:
            state = ColoringState.initial(self.graph, self.shades, self.first)
            for rec in self.history:
                state = state.apply(rec["vertex"], rec["shade"])
        else:
            scoring = BOB_SCORING if self.mode == BOB_MARKING else STANDARD
            state = MarkingState.initial(self.graph, scoring, self.first)
            for rec in self.history:
                state = state.apply(rec["vertex"])
        return state


class SessionStore:
    def __init__(self, snapshot_dir: Optional[str] = None) -> None:
        self.sessions: dict[str, GameSession] = {}
        self.lock = threading.Lock()
        self.snapshot_dir = Path(snapshot_dir) if snapshot_dir else None
        if self.snapshot_dir:
            self.snapshot_dir.mkdir(parents=True, exist_ok=True)

    def create(self, params: dict) -> GameSession:
        graph = _graph_from_params(params)
        mode = params.get("mode", COLORING)
        if mode not in (COLORING, MARKING, BOB_MARKING):
            raise SessionError(400, f"unknown mode {mode!r}")
        human = params.get("human", BOB)
        if human not in (ALICE, BOB):
            raise SessionError(400, "human must be alice or bob")
        default_first = BOB if mode == BOB_MARKING else ALICE
        first = params.get("first", default_first)
        if first not in (ALICE, BOB):
            raise SessionError(400, "first must be alice or bob")
        shades = None
        if mode == COLORING:
            shades = params.get("shades")
            if not isinstance(shades, int) or shades < 1:
                raise SessionError(400, "coloring mode needs a positive shade count")
        policy = params.get("policy", "exact")
        sid = uuid.uuid4().hex[:12]
        try:
            session = GameSession(sid, graph, mode, shades, human, policy, first)
        except (GraphError, GraphSpecError, ValueError) as exc:
            raise SessionError(400, str(exc)) from exc
        session.engine_step()
        with self.lock:
            self.sessions[sid] = session
        self._snapshot(session)
        return session

    def get(self, sid: str) -> GameSession:
        with self.lock:
            session = self.sessions.get(sid)
        if session is None:
            raise SessionError(404, f"unknown session {sid}")
        return session

    def delete(self, sid: str) -> None:
        with self.lock:
            if sid not in self.sessions:
                raise SessionError(404, f"unknown session {sid}")
            del self.sessions[sid]
        if self.snapshot_dir:
            target = self.snapshot_dir / f"{sid}.json"
            if target.exists():
                target.unlink()

    def _snapshot(self, session: GameSession) -> None:
        if self.snapshot_dir:
            target = self.snapshot_dir / f"{session.id}.json"
            target.write_text(json.dumps(session.to_json(), sort_keys=True))


def _label_json(label):
    from .graphs import ProductVertex

    if isinstance(label, ProductVertex):
        return [label.u, label.v]
    if isinstance(label, tuple):
        return list(label)
    return label


def _graph_from_params(params: dict) -> Graph:
    spec = params.get("graph")
    if isinstance(spec, str):
        try:
            return parse_graph_spec(spec)
        except (GraphSpecError, GraphError) as exc:
            raise SessionError(400, str(exc)) from exc
    if isinstance(spec, dict):
        try:
            return Graph.from_edges(spec["n"], spec.get("edges", []))
        except (KeyError, TypeError, GraphError) as exc:
            raise SessionError(400, f"bad graph object: {exc}") from exc
    raise SessionError(400, "graph must be a spec string or {n, edges}")


# ---------------------------------------------------------------------------
# HTTP layer

_SESSION_RE = re.compile(r"^/session/([0-9a-f]+)$")
_MOVE_RE = re.compile(r"^/session/([0-9a-f]+)/move$")
_INTERNALS_RE = re.compile(r"^/session/([0-9a-f]+)/internals$")


def make_handler(store: SessionStore):
    class Handler(BaseHTTPRequestHandler):
        def log_message(self, fmt, *args):  # quiet
            pass

        def _reply(self, status: int, doc: dict) -> None:
            body = json.dumps(doc, sort_keys=True).encode()
            self.send_response(status)
            self.send_header("Content-Type", "application/json")
            self.send_header("Content-Length", str(len(body)))
            self.send_header("Access-Control-Allow-Origin", "*")
            self.send_header("Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS")
            self.send_header("Access-Control-Allow-Headers", "Content-Type")
            self.end_headers()
            self.wfile.write(body)

        def _body(self) -> dict:
            length = int(self.headers.get("Content-Length") or 0)
            if length == 0:
                return {}
            try:
                return json.loads(self.rfile.read(length))
            except json.JSONDecodeError as exc:
                raise SessionError(400, f"bad JSON body: {exc}") from exc

        def _dispatch(self) -> None:
            try:
                self._route()
            except SessionError as exc:
                self._reply(exc.status, {"error": exc.message})
            except Exception as exc:  # defensive: never kill the thread
                self._reply(500, {"error": f"{type(exc).__name__}: {exc}"})

        def _route(self) -> None:
            method, path = self.command, self.path
            if method == "OPTIONS":
                self._reply(200, {})
                return
            if method == "POST" and path == "/session":
                session = store.create(self._body())
                self._reply(201, session.to_json())
                return
            m = _SESSION_RE.match(path)
            if m:
                sid = m.group(1)
                if method == "GET":
                    self._reply(200, store.get(sid).to_json())
                    return
                if method == "DELETE":
                    store.delete(sid)
                    self._reply(200, {"deleted": sid})
                    return
            m = _MOVE_RE.match(path)
            if m and method == "POST":
                session = store.get(m.group(1))
                body = self._body()
                if "vertex" not in body or not isinstance(body["vertex"], int):
                    raise SessionError(400, "move needs an integer vertex")
                shade = body.get("shade")
                if shade is not None and not isinstance(shade, int):
                    raise SessionError(400, "shade must be an integer")
                with session.lock:
                    human_rec, engine_rec = session.human_move(body["vertex"], shade)
                    doc = {
                        "state": session.to_json(),
                        "human_move": human_rec,
                        "engine_move": engine_rec,
                    }
                store._snapshot(session)
                self._reply(200, doc)
                return
            m = _INTERNALS_RE.match(path)
            if m and method == "GET":
                session = store.get(m.group(1))
                with session.lock:
                    self._reply(200, session.internals())
                return
            raise SessionError(404, f"no route {method} {path}")

        do_GET = do_POST = do_DELETE = do_OPTIONS = _dispatch

    return Handler


def make_server(port: int, store: Optional[SessionStore] = None) -> ThreadingHTTPServer:
    store = store or SessionStore()
    server = ThreadingHTTPServer(("127.0.0.1", port), make_handler(store))
    server.store = store  # type: ignore[attr-defined]
    return server


def serve(port: int, snapshot_dir: Optional[str] = None, host: str = "0.0.0.0") -> None:
    store = SessionStore(snapshot_dir)
    server = ThreadingHTTPServer((host, port), make_handler(store))
    print(f"gamecol service on http://{host}:{port}")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        server.shutdown()
