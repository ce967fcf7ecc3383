"""Task state machine: two home pages and a thirty-track music player.

The model consumes recognition events, advances the screen/track state,
labels every action against the unique optimal plan (navigate to page two,
open the music app, navigate four tracks toward the goal, play it), and
schedules activation feedback plus the alert raised by wrong app launches.
Timeout checking is a separate pure query so the caller owns the clock.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Mapping, Optional

from .geometry import STRIP_LEFT, STRIP_RIGHT
from .layouts import (
    PLAY_ID,
    SCREEN_HOME1,
    SCREEN_HOME2,
    SCREEN_PLAYER,
    TRACK_COUNT,
    app_id,
)
from .types import (
    ROLE_NAV_LEFT,
    ROLE_NAV_RIGHT,
    ROLE_SELECTION,
    TECH_GESTURE,
    EngineConfig,
    RecognitionEvent,
    ScreenLayout,
)

TASK_TIMEOUT_MS = 60_000
STEP_TIMEOUT_MS = 20_000
ALERT_MS = 1_000

FAIL_NONE = "none"
FAIL_TASK_TIMEOUT = "task_timeout_60s"
FAIL_STEP_TIMEOUT = "step_timeout_20s"

ACTION_NAVIGATE = "navigate"
ACTION_SELECT = "select"


class ProtocolError(RuntimeError):
    """An event referenced a target that is absent from the current screen."""


@dataclass(frozen=True)
class InterfaceState:
    screen: str = SCREEN_HOME1
    track_index: Optional[int] = None
    playing: bool = False
    feedback: Optional[tuple[str, int]] = None  # (target id, expiry t_ms)
    alert_until: Optional[int] = None


@dataclass(frozen=True)
class TaskSpec:
    """Play one given track: the app lives in a fixed slot on page two and
    the goal track sits exactly four navigation steps from the start."""

    target_app_slot: int = 9
    start_track_index: int = 13
    target_track_index: int = 17

    def __post_init__(self) -> None:
        if not 6 <= self.target_app_slot <= 11:
            raise ValueError("music app slot must be on the second home page")
        for idx in (self.start_track_index, self.target_track_index):
            if not 0 <= idx < TRACK_COUNT:
                raise ValueError("track indices must lie in [0, 30)")
        if abs(self.target_track_index - self.start_track_index) != 4:
            raise ValueError("goal track must be exactly four steps from the start")

    @property
    def app_target_id(self) -> str:
        return app_id(self.target_app_slot)

    @property
    def direction(self) -> str:
        return STRIP_RIGHT if self.target_track_index > self.start_track_index else STRIP_LEFT


@dataclass(frozen=True)
class ActionRecord:
    t_ms: int
    screen_id: str
    technique: str
    role: str  # "selection" | "navigation"
    payload: str
    correct: bool


@dataclass(frozen=True)
class TrialResult:
    completed: bool
    duration_ms: Optional[int]
    actions: int
    errors: int
    failure_cause: str
    step_times_ms: tuple[int, ...]


class InterfaceModel:
    """Pure state machine over a set of per-screen layouts."""

    def __init__(self, layouts: Mapping[str, ScreenLayout], config: Optional[EngineConfig] = None):
        self.layouts = dict(layouts)
        self.config = config or EngineConfig()
        for screen_id in (SCREEN_HOME1, SCREEN_HOME2, SCREEN_PLAYER):
            if screen_id not in self.layouts:
                raise ValueError(f"missing layout for screen {screen_id!r}")

    def initial_state(self) -> InterfaceState:
        return InterfaceState()

    def layout_for(self, state: InterfaceState) -> ScreenLayout:
        return self.layouts[state.screen]

    def correct_action(self, state: InterfaceState, task: TaskSpec) -> tuple[str, str]:
        """The unique next step of the optimal plan from this state."""
        if state.screen == SCREEN_HOME1:
            return (ACTION_NAVIGATE, STRIP_RIGHT)
        if state.screen == SCREEN_HOME2:
            return (ACTION_SELECT, task.app_target_id)
        assert state.track_index is not None
        if state.track_index == task.target_track_index:
            return (ACTION_SELECT, PLAY_ID)
        direction = STRIP_RIGHT if task.target_track_index > state.track_index else STRIP_LEFT
        return (ACTION_NAVIGATE, direction)

    def _resolve(self, state: InterfaceState, event: RecognitionEvent) -> tuple[str, str]:
        if event.technique == TECH_GESTURE:
            return (ACTION_NAVIGATE, event.payload)
        layout = self.layout_for(state)
        try:
            target = layout.target(event.payload)
        except KeyError:
            raise ProtocolError(
                f"event for target {event.payload!r} does not belong to screen {state.screen!r}"
            ) from None
        if target.role == ROLE_NAV_LEFT:
            return (ACTION_NAVIGATE, STRIP_LEFT)
        if target.role == ROLE_NAV_RIGHT:
            return (ACTION_NAVIGATE, STRIP_RIGHT)
        if target.role == ROLE_SELECTION:
            return (ACTION_SELECT, target.id)
        raise ProtocolError(f"target {target.id!r} has non-interactive role {target.role!r}")

    def apply_event(
        self, state: InterfaceState, event: RecognitionEvent, task: TaskSpec, now: int
    ) -> tuple[InterfaceState, ActionRecord]:
        action, argument = self._resolve(state, event)
        correct = (action, argument) == self.correct_action(state, task)
        feedback_id = (
            f"strip_{event.payload}" if event.technique == TECH_GESTURE else event.payload
        )
        new = replace(state, feedback=(feedback_id, now + self.config.feedback_ms))

        if action == ACTION_NAVIGATE:
            new = self._navigate(new, argument)
            role = "navigation"
        else:
            new = self._select(new, argument, task, now)
            role = "selection"

        record = ActionRecord(
            t_ms=now,
            screen_id=state.screen,
            technique=event.technique,
            role=role,
            payload=event.payload,
            correct=correct,
        )
        return new, record

    def _navigate(self, state: InterfaceState, direction: str) -> InterfaceState:
        if state.screen == SCREEN_HOME1:
            return replace(state, screen=SCREEN_HOME2) if direction == STRIP_RIGHT else state
        if state.screen == SCREEN_HOME2:
            return replace(state, screen=SCREEN_HOME1) if direction == STRIP_LEFT else state
        assert state.track_index is not None
        delta = 1 if direction == STRIP_RIGHT else -1
        clamped = min(max(state.track_index + delta, 0), TRACK_COUNT - 1)
        return replace(state, track_index=clamped)

    def _select(
        self, state: InterfaceState, target_id: str, task: TaskSpec, now: int
    ) -> InterfaceState:
        if state.screen in (SCREEN_HOME1, SCREEN_HOME2):
            if state.screen == SCREEN_HOME2 and target_id == task.app_target_id:
                return replace(
                    state, screen=SCREEN_PLAYER, track_index=task.start_track_index
                )
            # Wrong app: stay put and raise the one-second alert.
            return replace(state, alert_until=now + ALERT_MS)
        if target_id == PLAY_ID:
            if state.track_index == task.target_track_index:
                return replace(state, playing=True)
            return state  # wrong track plays are logged silently
        return state

    def check_timeouts(
        self, state: InterfaceState, trial_start: int, last_correct_action: int, now: int
    ) -> Optional[str]:
        """Failure cause if the trial has run out of time, else None."""
        if state.playing:
            return None
        if now - trial_start > TASK_TIMEOUT_MS:
            return FAIL_TASK_TIMEOUT
        if now - last_correct_action > STEP_TIMEOUT_MS:
            return FAIL_STEP_TIMEOUT
        return None

    def clear_expired(self, state: InterfaceState, now: int) -> InterfaceState:
        feedback = state.feedback
        alert = state.alert_until
        if feedback is not None and feedback[1] < now:
            feedback = None
        if alert is not None and alert < now:
            alert = None
        if feedback is state.feedback and alert is state.alert_until:
            return state
        return replace(state, feedback=feedback, alert_until=alert)
