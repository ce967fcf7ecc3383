"""Wire protocol for the live demo UI.

Newline-delimited JSON messages over a WebSocket. The client streams gaze
samples (typically a pointer standing in for gaze) and switches pairings;
the server answers with recognition events, authoritative interface-state
snapshots, and per-frame orbit positions. The client never advances state
on its own, so engine and display cannot desynchronize.

Client to server:
    {"sample": {"t_ms": int, "x": float, "y": float, "valid": bool}}
    {"cmd": "set_pairing", "pairing": "DwellGestures"}
    {"cmd": "reset"}

Server to client:
    {"hello": {"protocol_version": 1, "pairings": [...], ...}}  on connect
    {"state": {...}}             on connect and whenever state changes
    {"event": {...}}             when a recognition event fires
    {"orbit_positions": [[target_id, x, y], ...]}   at frame cadence
    {"error": "..."}             malformed input (connection stays open)
"""

import json
from typing import Optional

from .arbiter import ALL_PAIRINGS, Arbiter, Pairing
from .geometry import orbit_position
from .interface import InterfaceModel, InterfaceState, TaskSpec
from .layouts import build_screen_layouts
from .types import EngineConfig, GazeSample

PROTOCOL_VERSION = 1
DEFAULT_PAIRING = "DwellGestures"


class DemoSession:
    """One client's engine instance behind the wire protocol."""

    def __init__(
        self,
        config: Optional[EngineConfig] = None,
        task: Optional[TaskSpec] = None,
        pairing_name: str = DEFAULT_PAIRING,
    ):
        self.config = config or EngineConfig()
        self.task = task or TaskSpec()
        self._last_t: Optional[int] = None
        self._set_pairing(pairing_name)

    def _set_pairing(self, pairing_name: str) -> None:
        self.pairing = Pairing.from_name(pairing_name)
        self.layouts = build_screen_layouts(self.pairing, self.config)
        self.model = InterfaceModel(self.layouts, self.config)
        self.state: InterfaceState = self.model.initial_state()
        self.arbiter = Arbiter(self.pairing, self.config, self.model.layout_for(self.state))
        self._last_t = None

    def hello_message(self) -> dict:
        return {
            "hello": {
                "protocol_version": PROTOCOL_VERSION,
                "pairings": [p.name for p in ALL_PAIRINGS],
                "pairing": self.pairing.name,
                "sample_interval_ms": round(self.config.nominal_dt_ms),
            }
        }

    def state_message(self) -> dict:
        layout = self.model.layout_for(self.state)
        return {
            "state": {
                "pairing": self.pairing.name,
                "screen": self.state.screen,
                "track_index": self.state.track_index,
                "playing": self.state.playing,
                "feedback": list(self.state.feedback) if self.state.feedback else None,
                "alert_until": self.state.alert_until,
                "gesture_navigation": self.pairing.navigation == "gestures",
                "task": {
                    "app_target_id": self.task.app_target_id,
                    "start_track_index": self.task.start_track_index,
                    "target_track_index": self.task.target_track_index,
                },
                "layout": {
                    "screen_id": layout.screen_id,
                    "width_pt": layout.width_pt,
                    "height_pt": layout.height_pt,
                    "edge_strip_width_pt": layout.edge_strip_width_pt,
                    "targets": [
                        {
                            "id": t.id,
                            "x": t.center[0],
                            "y": t.center[1],
                            "diameter_pt": t.diameter_pt,
                            "role": t.role,
                            "orbits": t.orbit is not None,
                            "orbit_radius_pt": t.orbit.radius_pt if t.orbit else None,
                        }
                        for t in layout.targets
                    ],
                },
            }
        }

    def _orbit_positions(self, t_ms: int) -> dict:
        layout = self.model.layout_for(self.state)
        return {
            "orbit_positions": [
                [t.id, *orbit_position(t, t_ms)] for t in layout.targets if t.orbit is not None
            ]
        }

    def handle(self, message: dict) -> list[dict]:
        """Process one inbound message, returning outbound messages in order."""
        if "sample" in message:
            return self._handle_sample(message["sample"])
        cmd = message.get("cmd")
        if cmd == "set_pairing":
            try:
                self._set_pairing(message.get("pairing", ""))
            except ValueError as exc:
                return [{"error": str(exc)}]
            return [self.state_message()]
        if cmd == "reset":
            self._set_pairing(self.pairing.name)
            return [self.state_message()]
        return [{"error": f"unrecognized message {sorted(message)!r}"}]

    def _handle_sample(self, doc: dict) -> list[dict]:
        try:
            sample = GazeSample(
                t_ms=int(doc["t_ms"]),
                x=float(doc["x"]),
                y=float(doc["y"]),
                valid=bool(doc.get("valid", True)),
            )
        except (KeyError, TypeError, ValueError) as exc:
            return [{"error": f"bad sample: {exc}"}]
        # A timestamp restart means the client reloaded; start a fresh stream.
        if self._last_t is not None and sample.t_ms <= self._last_t:
            self.arbiter = Arbiter(
                self.pairing, self.config, self.model.layout_for(self.state)
            )
            self.state = InterfaceState(
                screen=self.state.screen,
                track_index=self.state.track_index,
                playing=self.state.playing,
            )
        self._last_t = sample.t_ms

        out: list[dict] = []
        before = self.state
        self.state = self.model.clear_expired(self.state, sample.t_ms)
        event = self.arbiter.step(sample, self.model.layout_for(self.state))
        if event is not None:
            out.append(
                {
                    "event": {
                        "t_ms": event.t_ms,
                        "technique": event.technique,
                        "payload": event.payload,
                        "score": event.score,
                        "pairing": self.pairing.name,
                        "screen_id": self.state.screen,
                    }
                }
            )
            if not self.state.playing:
                self.state, _ = self.model.apply_event(self.state, event, self.task, sample.t_ms)
        if self.state != before:
            out.append(self.state_message())
        out.append(self._orbit_positions(sample.t_ms))
        return out


def create_app(
    config: Optional[EngineConfig] = None,
    task: Optional[TaskSpec] = None,
    pairing_name: str = DEFAULT_PAIRING,
):
    """FastAPI app exposing the protocol at /ws."""
    from fastapi import FastAPI, WebSocket, WebSocketDisconnect

    app = FastAPI(title="gazepair demo server")

    @app.get("/healthz")
    def healthz() -> dict:
        return {"ok": True, "protocol_version": PROTOCOL_VERSION}

    @app.websocket("/ws")
    async def ws_endpoint(websocket: WebSocket) -> None:
        await websocket.accept()
        session = DemoSession(config=config, task=task, pairing_name=pairing_name)
        await websocket.send_text(json.dumps(session.hello_message()) + "\n")
        await websocket.send_text(json.dumps(session.state_message()) + "\n")
        try:
            while True:
                raw = await websocket.receive_text()
                for line in raw.splitlines():
                    line = line.strip()
                    if not line:
                        continue
                    try:
                        message = json.loads(line)
                    except json.JSONDecodeError as exc:
                        await websocket.send_text(
                            json.dumps({"error": f"bad json: {exc}"}) + "\n"
                        )
                        continue
                    for reply in session.handle(message):
                        await websocket.send_text(json.dumps(reply) + "\n")
        except WebSocketDisconnect:
            return

    return app
