"""File formats: gaze traces, layout/config files, and line-delimited logs.

Traces are CSV with a one-line header, timestamps in ms and coordinates in
points with three decimal digits. Layouts and configs share one versioned
JSON document. Event, action, and trial logs are JSON lines; numeric detail
survives a round trip unchanged.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable, Optional

from .interface import ActionRecord, TaskSpec, TrialResult
from .simulator import NoiseProfile
from .types import (
    EngineConfig,
    GazeSample,
    OrbitSpec,
    RecognitionEvent,
    ScreenLayout,
    TargetSpec,
)

FORMAT_VERSION = 1
TRACE_HEADER = "t_ms,x_pt,y_pt,valid"


# -- gaze traces ------------------------------------------------------------

def trace_lines(samples: Iterable[GazeSample]) -> Iterable[str]:
    yield TRACE_HEADER
    for s in samples:
        yield f"{s.t_ms},{s.x:.3f},{s.y:.3f},{int(s.valid)}"


def write_trace(path: Path, samples: Iterable[GazeSample]) -> None:
    path.write_text("\n".join(trace_lines(samples)) + "\n", encoding="utf-8")


def read_trace(path: Path) -> list[GazeSample]:
    lines = path.read_text(encoding="utf-8").splitlines()
    if not lines or lines[0] != TRACE_HEADER:
        raise ValueError(f"{path}: missing trace header {TRACE_HEADER!r}")
    samples = []
    for line in lines[1:]:
        if not line:
            continue
        t, x, y, valid = line.split(",")
        samples.append(GazeSample(t_ms=int(t), x=float(x), y=float(y), valid=valid == "1"))
    return samples


# -- layout / config documents ------------------------------------------------

def config_to_dict(config: EngineConfig) -> dict:
    return {
        "dwell_ms": config.dwell_ms,
        "corr_window_samples": config.corr_window_samples,
        "corr_threshold": config.corr_threshold,
        "gesture_ms": config.gesture_ms,
        "sample_rate_hz": config.sample_rate_hz,
        "feedback_ms": config.feedback_ms,
        "proximity_gate_pt": config.proximity_gate_pt,
    }


def config_from_dict(doc: dict) -> EngineConfig:
    return EngineConfig(**doc)


def _orbit_to_dict(orbit: OrbitSpec) -> dict:
    return {
        "radius_pt": orbit.radius_pt,
        "angular_speed_deg_s": orbit.angular_speed_deg_s,
        "initial_phase_deg": orbit.initial_phase_deg,
        "direction": orbit.direction,
    }


def _target_to_dict(t: TargetSpec) -> dict:
    doc = {
        "id": t.id,
        "center": list(t.center),
        "diameter_pt": t.diameter_pt,
        "role": t.role,
    }
    if t.orbit is not None:
        doc["orbit"] = _orbit_to_dict(t.orbit)
    return doc


def _target_from_dict(doc: dict) -> TargetSpec:
    orbit = doc.get("orbit")
    return TargetSpec(
        id=doc["id"],
        center=tuple(doc["center"]),
        diameter_pt=doc["diameter_pt"],
        role=doc["role"],
        orbit=OrbitSpec(**orbit) if orbit else None,
    )


def layout_to_dict(layout: ScreenLayout) -> dict:
    return {
        "screen_id": layout.screen_id,
        "width_pt": layout.width_pt,
        "height_pt": layout.height_pt,
        "edge_buffer_px": layout.edge_buffer_px,
        "scale_factor": layout.scale_factor,
        "targets": [_target_to_dict(t) for t in layout.targets],
    }


def layout_from_dict(doc: dict) -> ScreenLayout:
    return ScreenLayout(
        screen_id=doc["screen_id"],
        width_pt=doc["width_pt"],
        height_pt=doc["height_pt"],
        edge_buffer_px=doc["edge_buffer_px"],
        scale_factor=doc["scale_factor"],
        targets=tuple(_target_from_dict(t) for t in doc["targets"]),
    )


def write_layout_file(
    path: Path, config: EngineConfig, layouts: dict[str, ScreenLayout]
) -> None:
    doc = {
        "format_version": FORMAT_VERSION,
        "config": config_to_dict(config),
        "layouts": {sid: layout_to_dict(lay) for sid, lay in sorted(layouts.items())},
    }
    path.write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n", encoding="utf-8")


def read_layout_file(path: Path) -> tuple[EngineConfig, dict[str, ScreenLayout]]:
    doc = json.loads(path.read_text(encoding="utf-8"))
    version = doc.get("format_version")
    if version != FORMAT_VERSION:
        raise ValueError(f"{path}: unsupported format_version {version!r}")
    config = config_from_dict(doc["config"])
    layouts = {sid: layout_from_dict(d) for sid, d in doc["layouts"].items()}
    return config, layouts


# -- line-delimited logs ------------------------------------------------------

def event_to_dict(
    event: RecognitionEvent, pairing: Optional[str] = None, screen_id: Optional[str] = None
) -> dict:
    return {
        "t_ms": event.t_ms,
        "technique": event.technique,
        "payload": event.payload,
        "score": event.score,
        "pairing": pairing,
        "screen_id": screen_id,
    }


def event_from_dict(doc: dict) -> RecognitionEvent:
    return RecognitionEvent(
        t_ms=doc["t_ms"],
        technique=doc["technique"],
        payload=doc["payload"],
        score=doc["score"],
    )


def action_to_dict(record: ActionRecord) -> dict:
    return {
        "t_ms": record.t_ms,
        "screen_id": record.screen_id,
        "technique": record.technique,
        "role": record.role,
        "payload": record.payload,
        "correct": record.correct,
    }


def action_from_dict(doc: dict) -> ActionRecord:
    return ActionRecord(
        t_ms=doc["t_ms"],
        screen_id=doc["screen_id"],
        technique=doc["technique"],
        role=doc["role"],
        payload=doc["payload"],
        correct=doc["correct"],
    )


def result_to_dict(result: TrialResult) -> dict:
    return {
        "completed": result.completed,
        "duration_ms": result.duration_ms,
        "actions": result.actions,
        "errors": result.errors,
        "failure_cause": result.failure_cause,
        "step_times_ms": list(result.step_times_ms),
    }


def result_from_dict(doc: dict) -> TrialResult:
    return TrialResult(
        completed=doc["completed"],
        duration_ms=doc["duration_ms"],
        actions=doc["actions"],
        errors=doc["errors"],
        failure_cause=doc["failure_cause"],
        step_times_ms=tuple(doc["step_times_ms"]),
    )


def task_to_dict(task: TaskSpec) -> dict:
    return {
        "target_app_slot": task.target_app_slot,
        "start_track_index": task.start_track_index,
        "target_track_index": task.target_track_index,
    }


def task_from_dict(doc: dict) -> TaskSpec:
    return TaskSpec(**doc)


def profile_to_dict(profile: NoiseProfile) -> dict:
    return {
        "name": profile.name,
        "fixation_jitter_sd_pt": profile.fixation_jitter_sd_pt,
        "pursuit_lag_ms": profile.pursuit_lag_ms,
        "pursuit_noise_sd_pt": profile.pursuit_noise_sd_pt,
        "saccade_duration_ms": profile.saccade_duration_ms,
        "body_sway_amp_pt": profile.body_sway_amp_pt,
        "body_sway_hz": profile.body_sway_hz,
        "rng_seed": profile.rng_seed,
    }


def profile_from_dict(doc: dict) -> NoiseProfile:
    return NoiseProfile(**doc)


def write_jsonl(path: Path, rows: Iterable[dict]) -> None:
    with path.open("w", encoding="utf-8") as fh:
        for row in rows:
            fh.write(json.dumps(row, sort_keys=True) + "\n")


def read_jsonl(path: Path) -> list[dict]:
    rows = []
    with path.open("r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                rows.append(json.loads(line))
    return rows
