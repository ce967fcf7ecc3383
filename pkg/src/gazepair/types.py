"""Domain types shared by the recognizers, the arbiter, and the harness."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

CLOCKWISE = "clockwise"
COUNTERCLOCKWISE = "counterclockwise"

ROLE_SELECTION = "selection"
ROLE_NAV_LEFT = "navigation-left"
ROLE_NAV_RIGHT = "navigation-right"
ROLE_CONTROL = "control"
ROLES = (ROLE_SELECTION, ROLE_NAV_LEFT, ROLE_NAV_RIGHT, ROLE_CONTROL)

TECH_DWELL = "dwell"
TECH_PURSUITS = "pursuits"
TECH_GESTURE = "gesture"


@dataclass(frozen=True)
class GazeSample:
    """One timestamped 2-D gaze estimate in screen points.

    Timestamps must strictly increase within a stream. Gaps larger than the
    nominal inter-sample interval are legal (dropped frames); coordinates may
    lie outside the screen.
    """

    t_ms: int
    x: float
    y: float
    valid: bool = True


@dataclass(frozen=True)
class OrbitSpec:
    """Circular trajectory of the small orbiting circle attached to a target.

    Position is periodic with period 360 / angular_speed_deg_s seconds
    (3 s at the 120 deg/s default).
    """

    radius_pt: float
    angular_speed_deg_s: float = 120.0
    initial_phase_deg: float = 0.0
    direction: str = CLOCKWISE

    def __post_init__(self) -> None:
        if self.radius_pt <= 0:
            raise ValueError("orbit radius must be positive")
        if self.angular_speed_deg_s <= 0:
            raise ValueError("orbit angular speed must be positive")
        if not 0.0 <= self.initial_phase_deg < 360.0:
            raise ValueError("initial phase must lie in [0, 360)")
        if self.direction not in (CLOCKWISE, COUNTERCLOCKWISE):
            raise ValueError(f"unknown orbit direction {self.direction!r}")

    @property
    def period_s(self) -> float:
        return 360.0 / self.angular_speed_deg_s


@dataclass(frozen=True)
class TargetSpec:
    """Geometry and interaction role of one on-screen element.

    The default 65 pt diameter corresponds to 195 px at scale factor 3.
    An orbit is present exactly when the target is selectable by pursuit
    in the active pairing.
    """

    id: str
    center: tuple[float, float]
    diameter_pt: float = 65.0
    role: str = ROLE_SELECTION
    orbit: Optional[OrbitSpec] = None

    def __post_init__(self) -> None:
        if self.diameter_pt <= 0:
            raise ValueError(f"target {self.id!r}: diameter must be positive")
        if self.role not in ROLES:
            raise ValueError(f"target {self.id!r}: unknown role {self.role!r}")

    @property
    def radius_pt(self) -> float:
        return self.diameter_pt / 2.0


@dataclass(frozen=True)
class ScreenLayout:
    """Full-screen arrangement of targets plus the gesture edge strips.

    The edge strips are two vertical bands of width edge_buffer_px /
    scale_factor points flush against the left and right screen edges.
    """

    screen_id: str
    width_pt: float
    height_pt: float
    targets: tuple[TargetSpec, ...]
    edge_buffer_px: float = 160.0
    scale_factor: float = 3.0

    def __post_init__(self) -> None:
        if self.width_pt <= 0 or self.height_pt <= 0:
            raise ValueError("screen dimensions must be positive")
        if self.scale_factor <= 0:
            raise ValueError("scale factor must be positive")
        object.__setattr__(self, "targets", tuple(self.targets))
        ids = [t.id for t in self.targets]
        if len(set(ids)) != len(ids):
            raise ValueError(f"layout {self.screen_id!r}: duplicate target ids")
        for t in self.targets:
            x, y = t.center
            r = t.radius_pt
            if x - r < 0 or x + r > self.width_pt or y - r < 0 or y + r > self.height_pt:
                raise ValueError(
                    f"layout {self.screen_id!r}: target {t.id!r} extends outside the screen"
                )

    @property
    def edge_strip_width_pt(self) -> float:
        return self.edge_buffer_px / self.scale_factor

    def target(self, target_id: str) -> TargetSpec:
        for t in self.targets:
            if t.id == target_id:
                return t
        raise KeyError(target_id)

    def targets_with_role(self, *roles: str) -> tuple[TargetSpec, ...]:
        return tuple(t for t in self.targets if t.role in roles)


@dataclass(frozen=True)
class EngineConfig:
    """Tunable recognition parameters.

    Defaults: 800 ms dwell, a rolling window of 30 samples scored against a
    0.8 correlation threshold, 1000 ms gestures at 30 Hz sampling. The
    optional proximity gate restricts pursuit correlation to targets whose
    orbiting circle is currently near the gaze point.
    """

    dwell_ms: int = 800
    corr_window_samples: int = 30
    corr_threshold: float = 0.8
    gesture_ms: int = 1000
    sample_rate_hz: float = 30.0
    feedback_ms: int = 1000
    proximity_gate_pt: Optional[float] = None

    def __post_init__(self) -> None:
        if self.dwell_ms <= 0:
            raise ValueError("dwell_ms must be positive")
        if self.corr_window_samples < 2:
            raise ValueError("correlation window needs at least 2 samples")
        if not 0.0 < self.corr_threshold <= 1.0:
            raise ValueError("correlation threshold must lie in (0, 1]")
        if self.sample_rate_hz <= 0:
            raise ValueError("sample rate must be positive")
        if self.proximity_gate_pt is not None and self.proximity_gate_pt <= 0:
            raise ValueError("proximity gate must be positive when set")

    @property
    def nominal_dt_ms(self) -> float:
        return 1000.0 / self.sample_rate_hz


@dataclass(frozen=True)
class RecognitionEvent:
    """A detected input: a dwell or pursuit selection, or a gesture stroke.

    payload holds the target id for dwell/pursuits and the stroke direction
    ("left" or "right") for gestures. score is the correlation for
    pursuits/gesture events and absent for dwell.
    """

    t_ms: int
    technique: str
    payload: str
    score: Optional[float] = None
