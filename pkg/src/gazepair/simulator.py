"""Synthetic 30 Hz gaze streams from a scripted user agent.

The agent executes a task through a chosen pairing in a closed loop: it
watches the interface state, derives the next intent (fixate a target,
pursue an orbit, stroke toward an edge strip, or settle), and emits noisy
samples that the arbiter consumes. Oculomotor noise is parametric: white
fixation jitter, lagged pursuit with its own noise level, minimum-jerk
saccadic strokes, and sinusoidal body sway for walking. Everything is
deterministic for a given seed.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, replace
from typing import Callable, Iterable, Optional

from .arbiter import Arbiter, Pairing
from .geometry import STRIP_LEFT, STRIP_RIGHT, orbit_position
from .interface import (
    ACTION_NAVIGATE,
    FAIL_NONE,
    FAIL_TASK_TIMEOUT,
    TASK_TIMEOUT_MS,
    ActionRecord,
    InterfaceModel,
    InterfaceState,
    TaskSpec,
    TrialResult,
)
from .layouts import build_screen_layouts
from .types import (
    ROLE_NAV_LEFT,
    ROLE_NAV_RIGHT,
    EngineConfig,
    GazeSample,
    RecognitionEvent,
    ScreenLayout,
    TargetSpec,
)

# 65 pt spans 2.09 degrees at the reference viewing distance.
DEG_PER_PT = 2.09 / 65.0

SETTLE_MS_DEFAULT = 200

KIND_FIXATE = "fixate"
KIND_PURSUE = "pursue"
KIND_STROKE = "stroke"
KIND_TRANSITION = "transition"
KIND_SETTLE = "settle"


@dataclass(frozen=True)
class NoiseProfile:
    """Oculomotor and motor-activity noise parameters.

    A sitting profile has zero body sway. fixation_jitter_sd_pt applies to
    fixations, settles, and saccadic strokes; pursuit samples use
    pursuit_noise_sd_pt and trail the orbit by pursuit_lag_ms.
    """

    name: str = "custom"
    fixation_jitter_sd_pt: float = 0.0
    pursuit_lag_ms: float = 0.0
    pursuit_noise_sd_pt: float = 0.0
    saccade_duration_ms: float = 100.0
    body_sway_amp_pt: float = 0.0
    body_sway_hz: float = 0.0
    rng_seed: int = 0

    def __post_init__(self) -> None:
        for field_name in (
            "fixation_jitter_sd_pt",
            "pursuit_noise_sd_pt",
            "body_sway_amp_pt",
            "body_sway_hz",
        ):
            if getattr(self, field_name) < 0:
                raise ValueError(f"{field_name} must be non-negative")

    def with_seed(self, seed: int) -> "NoiseProfile":
        return replace(self, rng_seed=seed)


ZERO_NOISE = NoiseProfile(name="zero", saccade_duration_ms=0.0)

# Sitting jitter targets the 1.6 degree tracker-accuracy equivalent as
# measured by measure_accuracy_deg; walking inflates jitter and pursuit
# noise and adds lateral sway at a typical torso-sway frequency.
SITTING = NoiseProfile(
    name="sitting",
    fixation_jitter_sd_pt=39.7,
    pursuit_lag_ms=100.0,
    pursuit_noise_sd_pt=6.0,
    saccade_duration_ms=100.0,
    rng_seed=0,
)
WALKING = NoiseProfile(
    name="walking",
    fixation_jitter_sd_pt=51.6,
    pursuit_lag_ms=130.0,
    pursuit_noise_sd_pt=12.0,
    saccade_duration_ms=100.0,
    body_sway_amp_pt=22.0,
    body_sway_hz=0.9,
    rng_seed=0,
)

PROFILES = {"zero": ZERO_NOISE, "sitting": SITTING, "walking": WALKING}


def t_at(index: int, sample_rate_hz: float = 30.0) -> int:
    """Timestamp of the index-th sample on the nominal grid, in whole ms."""
    return round(index * 1000.0 / sample_rate_hz)


def sample_count(duration_ms: float, sample_rate_hz: float = 30.0) -> int:
    return round(duration_ms * sample_rate_hz / 1000.0)


def minimum_jerk(tau: float) -> float:
    """Smooth monotone 0..1 position profile with zero end velocities."""
    return tau * tau * tau * (10.0 + tau * (-15.0 + 6.0 * tau))


class _Sway:
    """Additive sinusoidal body sway; lateral dominant, vertical bob at
    twice the frequency."""

    def __init__(self, profile: NoiseProfile, rng: random.Random):
        self._amp = profile.body_sway_amp_pt
        self._hz = profile.body_sway_hz
        self._phase_x = rng.uniform(0.0, 2.0 * math.pi)
        self._phase_y = rng.uniform(0.0, 2.0 * math.pi)

    def offset(self, t_ms: int) -> tuple[float, float]:
        if self._amp == 0.0:
            return (0.0, 0.0)
        w = 2.0 * math.pi * self._hz * (t_ms / 1000.0)
        return (
            self._amp * math.sin(w + self._phase_x),
            0.4 * self._amp * math.sin(2.0 * w + self._phase_y),
        )


def _emit(
    positions: Iterable[tuple[int, float, float, str]],
    profile: NoiseProfile,
    rng: random.Random,
    sway: _Sway,
) -> list[GazeSample]:
    samples = []
    for t, x, y, kind in positions:
        sd = profile.pursuit_noise_sd_pt if kind == KIND_PURSUE else profile.fixation_jitter_sd_pt
        sx, sy = sway.offset(t)
        samples.append(
            GazeSample(
                t_ms=t,
                x=x + rng.gauss(0.0, sd) + sx,
                y=y + rng.gauss(0.0, sd) + sy,
            )
        )
    return samples


def gen_fixation(
    point: tuple[float, float],
    duration_ms: float,
    profile: NoiseProfile,
    rng: random.Random,
    sample_rate_hz: float = 30.0,
    start_index: int = 0,
) -> list[GazeSample]:
    """Noisy fixation at a point, sampled on the nominal grid."""
    if duration_ms <= 0:
        raise ValueError("duration must be positive")
    sway = _Sway(profile, rng)
    n = sample_count(duration_ms, sample_rate_hz)
    positions = (
        (t_at(start_index + i, sample_rate_hz), point[0], point[1], KIND_FIXATE)
        for i in range(n)
    )
    return _emit(positions, profile, rng, sway)


def gen_pursuit(
    target: TargetSpec,
    duration_ms: float,
    profile: NoiseProfile,
    rng: random.Random,
    sample_rate_hz: float = 30.0,
    start_index: int = 0,
) -> list[GazeSample]:
    """Noisy tracking of a target's orbiting circle, trailing by the lag."""
    if target.orbit is None:
        raise ValueError(f"target {target.id!r} has no orbit")
    sway = _Sway(profile, rng)
    n = sample_count(duration_ms, sample_rate_hz)

    def positions():
        for i in range(n):
            t = t_at(start_index + i, sample_rate_hz)
            x, y = orbit_position(target, t - profile.pursuit_lag_ms)
            yield (t, x, y, KIND_PURSUE)

    return _emit(positions(), profile, rng, sway)


def stroke_endpoints(layout: ScreenLayout, direction: str) -> tuple[float, float]:
    """Start and end x of a stroke: from the opposite third of the screen
    into the middle of the destination edge strip."""
    strip = layout.edge_strip_width_pt
    if direction == STRIP_RIGHT:
        return (layout.width_pt * 0.25, layout.width_pt - strip / 2.0)
    return (layout.width_pt * 0.75, strip / 2.0)


def gen_stroke(
    direction: str,
    layout: ScreenLayout,
    profile: NoiseProfile,
    rng: random.Random,
    config: Optional[EngineConfig] = None,
    y_pt: Optional[float] = None,
    start_index: int = 0,
) -> list[GazeSample]:
    """A single minimum-jerk horizontal sweep ending inside an edge strip."""
    if direction not in (STRIP_LEFT, STRIP_RIGHT):
        raise ValueError(f"unknown stroke direction {direction!r}")
    config = config or EngineConfig()
    sway = _Sway(profile, rng)
    x0, x1 = stroke_endpoints(layout, direction)
    y = layout.height_pt / 2.0 if y_pt is None else y_pt
    n = sample_count(config.gesture_ms, config.sample_rate_hz)

    def positions():
        for i in range(n):
            t = t_at(start_index + i, config.sample_rate_hz)
            tau = i / (n - 1)
            yield (t, x0 + (x1 - x0) * minimum_jerk(tau), y, KIND_STROKE)

    return _emit(positions(), profile, rng, sway)


class _Segment:
    __slots__ = ("kind", "provider", "remaining")

    def __init__(
        self,
        kind: str,
        provider: Callable[[int], tuple[float, float]],
        length: Optional[int],
    ):
        self.kind = kind
        self.provider = provider
        self.remaining = length  # None = unbounded


class _ScriptedAgent:
    """Derives intents from the interface state and emits planned gaze
    positions one sample at a time.

    Plans are rebuilt lazily: after the interface state changes (reaction
    settle first) and whenever a finite plan runs out without effect, which
    retries the intent.
    """

    def __init__(
        self,
        model: InterfaceModel,
        task: TaskSpec,
        pairing: Pairing,
        profile: NoiseProfile,
        config: EngineConfig,
        settle_ms: int = SETTLE_MS_DEFAULT,
    ):
        self._model = model
        self._task = task
        self._pairing = pairing
        self._profile = profile
        self._config = config
        self._settle_ms = settle_ms
        self._dt = 1000.0 / config.sample_rate_hz
        layout = next(iter(model.layouts.values()))
        self._gaze: tuple[float, float] = (layout.width_pt / 2.0, layout.height_pt / 2.0)
        self._segments: list[_Segment] = []
        self._pending_settle = False
        self._state: Optional[InterfaceState] = None
        self._state_key: Optional[tuple] = None

    def observe(self, state: InterfaceState, settle: bool = True) -> None:
        key = (state.screen, state.track_index, state.playing)
        changed = key != self._state_key
        self._state = state
        self._state_key = key
        if changed:
            self._segments = []
            self._pending_settle = settle

    def next_position(self, t_ms: int) -> tuple[float, float, str]:
        while True:
            if not self._segments:
                self._plan(self._pending_settle, t_ms)
                self._pending_settle = True  # retries pause before re-trying
            seg = self._segments[0]
            if seg.remaining is not None and seg.remaining <= 0:
                self._segments.pop(0)
                continue
            pos = seg.provider(t_ms)
            if seg.remaining is not None:
                seg.remaining -= 1
            self._gaze = pos
            return (pos[0], pos[1], seg.kind)

    # -- planning ---------------------------------------------------------

    def _plan(self, settle_first: bool, t_ms: int) -> None:
        assert self._state is not None
        state = self._state
        segments: list[_Segment] = []
        if settle_first and self._settle_ms > 0:
            segments.append(self._hold(KIND_SETTLE, self._settle_ms))
        action, argument = self._model.correct_action(state, self._task)
        layout = self._model.layout_for(state)
        if action == ACTION_NAVIGATE:
            technique = self._pairing.navigation
            if technique == "gestures":
                segments.extend(self._stroke_segments(layout, argument))
            else:
                role = ROLE_NAV_RIGHT if argument == STRIP_RIGHT else ROLE_NAV_LEFT
                target = layout.targets_with_role(role)[0]
                segments.extend(self._acquire_segments(target, technique, t_ms))
        else:
            target = layout.target(argument)
            segments.extend(self._acquire_segments(target, self._pairing.selection, t_ms))
        self._segments = segments

    def _hold(self, kind: str, duration_ms: float) -> _Segment:
        anchor = self._gaze
        n = max(1, sample_count(duration_ms, self._config.sample_rate_hz))
        return _Segment(kind, lambda t, p=anchor: p, n)

    def _transition(self, dest: tuple[float, float]) -> list[_Segment]:
        n = sample_count(self._profile.saccade_duration_ms, self._config.sample_rate_hz)
        start = self._gaze
        if n <= 0 or (abs(dest[0] - start[0]) < 1.0 and abs(dest[1] - start[1]) < 1.0):
            return []
        steps = [
            (
                start[0] + (dest[0] - start[0]) * minimum_jerk((i + 1) / n),
                start[1] + (dest[1] - start[1]) * minimum_jerk((i + 1) / n),
            )
            for i in range(n)
        ]
        return [_Segment(KIND_TRANSITION, self._waypoints(steps), n)]

    @staticmethod
    def _waypoints(steps: list[tuple[float, float]]) -> Callable[[int], tuple[float, float]]:
        it = iter(steps)
        last = steps[-1]

        def provider(t_ms: int) -> tuple[float, float]:
            return next(it, last)

        return provider

    def _acquire_segments(
        self, target: TargetSpec, technique: str, t_ms: int
    ) -> list[_Segment]:
        if technique == "dwell":
            segs = self._transition(target.center)
            segs.append(_Segment(KIND_FIXATE, lambda t, p=target.center: p, None))
            return segs
        lag = self._profile.pursuit_lag_ms
        arrival_samples = sample_count(self._profile.saccade_duration_ms, self._config.sample_rate_hz)

        def track(t: int, tg=target, lg=lag):
            return orbit_position(tg, t - lg)

        # Aim the saccade at where the pursued circle will be on landing.
        landing_t = t_ms + arrival_samples * self._dt
        segs = self._transition(orbit_position(target, landing_t - lag))
        segs.append(_Segment(KIND_PURSUE, track, None))
        return segs

    def _stroke_segments(self, layout: ScreenLayout, direction: str) -> list[_Segment]:
        x0, x1 = stroke_endpoints(layout, direction)
        y = min(max(self._gaze[1], 60.0), layout.height_pt - 60.0)
        segs = self._transition((x0, y))
        n = sample_count(self._config.gesture_ms, self._config.sample_rate_hz)
        steps = [(x0 + (x1 - x0) * minimum_jerk(i / (n - 1)), y) for i in range(n)]
        segs.append(_Segment(KIND_STROKE, self._waypoints(steps), n))
        return segs


@dataclass
class TrialRun:
    """All three logs of one simulated trial."""

    samples: list[GazeSample]
    events: list[RecognitionEvent]
    actions: list[ActionRecord]
    result: TrialResult


def run_trial(
    pairing: Pairing,
    task: TaskSpec,
    profile: NoiseProfile,
    config: Optional[EngineConfig] = None,
    layouts: Optional[dict[str, ScreenLayout]] = None,
    settle_ms: int = SETTLE_MS_DEFAULT,
) -> TrialRun:
    """Closed-loop simulation of one trial; deterministic per profile seed."""
    config = config or EngineConfig()
    layouts = layouts or build_screen_layouts(pairing, config)
    model = InterfaceModel(layouts, config)
    rng = random.Random(profile.rng_seed)
    sway = _Sway(profile, rng)
    agent = _ScriptedAgent(model, task, pairing, profile, config, settle_ms)

    state = model.initial_state()
    agent.observe(state, settle=False)  # the first intent starts immediately

    arbiter = Arbiter(pairing, config, model.layout_for(state))
    samples: list[GazeSample] = []
    events: list[RecognitionEvent] = []
    actions: list[ActionRecord] = []
    step_times: list[int] = []
    last_correct = 0
    completed = False
    duration: Optional[int] = None
    failure = FAIL_NONE

    n = 0
    while True:
        t = t_at(n, config.sample_rate_hz)
        state = model.clear_expired(state, t)
        px, py, kind = agent.next_position(t)
        sd = profile.pursuit_noise_sd_pt if kind == KIND_PURSUE else profile.fixation_jitter_sd_pt
        sx, sy = sway.offset(t)
        sample = GazeSample(
            t_ms=t,
            x=px + rng.gauss(0.0, sd) + sx,
            y=py + rng.gauss(0.0, sd) + sy,
        )
        samples.append(sample)
        event = arbiter.step(sample, model.layout_for(state))
        if event is not None:
            events.append(event)
            state, record = model.apply_event(state, event, task, t)
            actions.append(record)
            if record.correct:
                last_correct = t
                step_times.append(t)
            agent.observe(state)
        if state.playing:
            if t <= TASK_TIMEOUT_MS:
                completed = True
                duration = t
            else:
                failure = FAIL_TASK_TIMEOUT
            break
        cause = model.check_timeouts(state, 0, last_correct, t)
        if cause is not None:
            failure = cause
            break
        n += 1

    result = TrialResult(
        completed=completed,
        duration_ms=duration,
        actions=len(actions),
        errors=sum(1 for a in actions if not a.correct),
        failure_cause=FAIL_NONE if completed else failure,
        step_times_ms=tuple(step_times),
    )
    return TrialRun(samples=samples, events=events, actions=actions, result=result)


def measure_accuracy_deg(
    profile: NoiseProfile,
    n_samples: int = 20_000,
    seed: int = 12345,
) -> float:
    """Mean absolute gaze-vs-intent error of a generated fixation trace,
    converted to degrees (65 pt corresponds to 2.09 degrees)."""
    rng = random.Random(seed)
    point = (187.5, 406.0)
    trace = gen_fixation(point, n_samples * 1000.0 / 30.0, profile, rng)
    total = 0.0
    for s in trace:
        total += math.hypot(s.x - point[0], s.y - point[1])
    return (total / len(trace)) * DEG_PER_PT
