"""Screen geometry: orbit trajectories, circle containment, edge strips.

Coordinates follow the screen convention: origin at the top-left corner,
x grows rightward, y grows downward, everything in points. With y pointing
down, a clockwise orbit on screen corresponds to an increasing angle in the
(cos, sin) parametrization.
"""

from __future__ import annotations

import math
from typing import Optional

from .types import CLOCKWISE, ScreenLayout, TargetSpec

STRIP_LEFT = "left"
STRIP_RIGHT = "right"


def orbit_position(target: TargetSpec, t_ms: float) -> tuple[float, float]:
    """Position of the target's orbiting circle at time t_ms.

    Deterministic and continuous in t. Raises ValueError when the target
    has no orbit.
    """
    orbit = target.orbit
    if orbit is None:
        raise ValueError(f"target {target.id!r} has no orbit")
    sign = 1.0 if orbit.direction == CLOCKWISE else -1.0
    theta_deg = orbit.initial_phase_deg + sign * orbit.angular_speed_deg_s * (t_ms / 1000.0)
    theta = math.radians(theta_deg)
    cx, cy = target.center
    return (cx + orbit.radius_pt * math.cos(theta), cy + orbit.radius_pt * math.sin(theta))


def point_in_target(x: float, y: float, target: TargetSpec) -> bool:
    """Circle containment, boundary inclusive."""
    cx, cy = target.center
    dx = x - cx
    dy = y - cy
    r = target.radius_pt
    return dx * dx + dy * dy <= r * r


def distance(a: tuple[float, float], b: tuple[float, float]) -> float:
    return math.hypot(a[0] - b[0], a[1] - b[1])


def strip_side(layout: ScreenLayout, x: float) -> Optional[str]:
    """Which edge strip contains x, if any. Boundaries count as inside."""
    w = layout.edge_strip_width_pt
    if x <= w:
        return STRIP_LEFT
    if x >= layout.width_pt - w:
        return STRIP_RIGHT
    return None
