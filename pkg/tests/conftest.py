from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gazepair.simulator import t_at
from gazepair.types import EngineConfig, GazeSample, OrbitSpec, ScreenLayout, TargetSpec


@pytest.fixture
def config() -> EngineConfig:
    return EngineConfig()


@pytest.fixture
def bare_layout() -> ScreenLayout:
    return ScreenLayout(
        screen_id="test",
        width_pt=375.0,
        height_pt=812.0,
        targets=(),
    )


def make_trace(points, start_index: int = 0, valid=None) -> list[GazeSample]:
    """Samples on the nominal 30 Hz grid from a list of (x, y) points."""
    out = []
    for i, (x, y) in enumerate(points):
        ok = True if valid is None else valid[i]
        out.append(GazeSample(t_ms=t_at(start_index + i), x=float(x), y=float(y), valid=ok))
    return out


def orbiting_target(
    target_id: str = "t0",
    center=(187.5, 406.0),
    phase: float = 0.0,
    direction: str = "clockwise",
    radius: float = 30.0,
) -> TargetSpec:
    return TargetSpec(
        id=target_id,
        center=center,
        orbit=OrbitSpec(radius_pt=radius, initial_phase_deg=phase, direction=direction),
    )
