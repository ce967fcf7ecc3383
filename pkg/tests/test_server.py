from __future__ import annotations

import json

import pytest
from fastapi.testclient import TestClient

from gazepair.arbiter import Pairing
from gazepair.interface import TaskSpec
from gazepair.server import DemoSession, create_app
from gazepair.simulator import ZERO_NOISE, run_trial


def recv(ws) -> dict:
    return json.loads(ws.receive_text())


def send(ws, doc: dict) -> None:
    ws.send_text(json.dumps(doc) + "\n")


@pytest.fixture
def client():
    app = create_app(task=TaskSpec())
    with TestClient(app) as c:
        yield c


def test_health_endpoint(client):
    res = client.get("/healthz")
    assert res.status_code == 200
    assert res.json()["protocol_version"] == 1


def test_hello_and_initial_state(client):
    with client.websocket_connect("/ws") as ws:
        hello = recv(ws)["hello"]
        assert hello["protocol_version"] == 1
        assert len(hello["pairings"]) == 6
        state = recv(ws)["state"]
        assert state["screen"] == "home1"
        assert state["playing"] is False
        assert state["layout"]["screen_id"] == "home1"
        assert len(state["layout"]["targets"]) == 8


def test_set_pairing_and_reset(client):
    with client.websocket_connect("/ws") as ws:
        recv(ws)
        recv(ws)
        send(ws, {"cmd": "set_pairing", "pairing": "PursuitsPursuits"})
        state = recv(ws)["state"]
        assert state["pairing"] == "PursuitsPursuits"
        assert all(t["orbits"] for t in state["layout"]["targets"])
        send(ws, {"cmd": "set_pairing", "pairing": "NoSuchPairing"})
        assert "error" in recv(ws)
        send(ws, {"cmd": "reset"})
        assert recv(ws)["state"]["screen"] == "home1"


def test_malformed_messages_keep_connection(client):
    with client.websocket_connect("/ws") as ws:
        recv(ws)
        recv(ws)
        ws.send_text("this is not json\n")
        assert "error" in recv(ws)
        send(ws, {"unknown": 1})
        assert "error" in recv(ws)
        send(ws, {"sample": {"t_ms": 0}})
        assert "error" in recv(ws)
        # still alive
        send(ws, {"cmd": "reset"})
        assert "state" in recv(ws)


def _drive_trial(ws, samples):
    """Push a scripted sample stream, collecting server messages."""
    events = []
    states = []
    for s in samples:
        send(ws, {"sample": {"t_ms": s.t_ms, "x": s.x, "y": s.y, "valid": s.valid}})
        while True:
            msg = recv(ws)
            if "orbit_positions" in msg:
                break  # cadence marker: the last reply for this sample
            if "event" in msg:
                events.append(msg["event"])
            elif "state" in msg:
                states.append(msg["state"])
        if states and states[-1]["playing"]:
            break
    return events, states


def test_scripted_noiseless_trial_completes(client):
    offline = run_trial(Pairing.from_name("DwellGestures"), TaskSpec(), ZERO_NOISE)
    assert offline.result.completed
    with client.websocket_connect("/ws") as ws:
        recv(ws)
        recv(ws)
        events, states = _drive_trial(ws, offline.samples)
    assert len(events) == 7
    assert [e["technique"] for e in events] == [
        e.technique for e in offline.events
    ]
    assert states[-1]["playing"] is True
    screens = [s["screen"] for s in states]
    assert screens[0] == "home2"  # first transition
    assert "player" in screens


def test_orbit_positions_every_sample(client):
    with client.websocket_connect("/ws") as ws:
        recv(ws)
        recv(ws)
        send(ws, {"cmd": "set_pairing", "pairing": "PursuitsGestures"})
        recv(ws)
        for t in (0, 33, 67):
            send(ws, {"sample": {"t_ms": t, "x": 10.0, "y": 10.0}})
            msg = recv(ws)
            assert "orbit_positions" in msg
            assert len(msg["orbit_positions"]) == 6  # six orbiting apps


def test_timestamp_restart_resets_stream(client):
    with client.websocket_connect("/ws") as ws:
        recv(ws)
        recv(ws)
        send(ws, {"sample": {"t_ms": 1000, "x": 10.0, "y": 10.0}})
        recv(ws)
        # client reload: time starts over; server must not raise
        send(ws, {"sample": {"t_ms": 0, "x": 10.0, "y": 10.0}})
        msg = recv(ws)
        assert "orbit_positions" in msg or "state" in msg


def test_session_handle_is_pure_python():
    session = DemoSession(task=TaskSpec())
    out = session.handle({"sample": {"t_ms": 0, "x": 1.0, "y": 2.0}})
    assert any("orbit_positions" in m for m in out)
    out = session.handle({"cmd": "set_pairing", "pairing": "DwellDwell"})
    assert "state" in out[0]
