"""Single-stroke horizontal gaze gestures with edge-strip confirmation.

The horizontal gaze path over the rolling window is compared against two
templates, a strictly increasing linear ramp and its reverse. Template
matching only runs when the newest sample already lies inside one of the
two edge strips ("screen bounds gazing"), and the winning template must
point at the strip the stroke actually ended in. Pearson correlation is
offset and scale invariant, so the ramp amplitude is immaterial.
"""

from __future__ import annotations

from collections import deque
from typing import Optional

from .correlation import AxisStats, pearson_against
from .geometry import STRIP_LEFT, STRIP_RIGHT, strip_side
from .types import TECH_GESTURE, EngineConfig, GazeSample, RecognitionEvent, ScreenLayout


class GestureRecognizer:
    """Streaming left/right stroke detector over one screen layout."""

    def __init__(self, config: EngineConfig, layout: ScreenLayout):
        self._config = config
        self._layout = layout
        self._window = config.corr_window_samples
        n = self._window
        self._ramp_right = tuple(float(i) for i in range(n))
        self._ramp_left = tuple(float(n - 1 - i) for i in range(n))
        self._xs: deque[float] = deque()
        self._last_t: Optional[int] = None

    def reset(self) -> None:
        self._xs.clear()

    def buffer_size(self) -> int:
        return len(self._xs)

    def step(self, sample: GazeSample) -> Optional[RecognitionEvent]:
        if self._last_t is not None and sample.t_ms <= self._last_t:
            raise ValueError("gaze timestamps must strictly increase")
        self._last_t = sample.t_ms
        if not sample.valid:
            return None

        self._xs.append(sample.x)
        if len(self._xs) > self._window:
            self._xs.popleft()
        if len(self._xs) < self._window:
            return None

        side = strip_side(self._layout, sample.x)
        if side is None:
            return None
        stats = AxisStats(tuple(self._xs))
        r_right = pearson_against(stats, self._ramp_right)
        r_left = pearson_against(stats, self._ramp_left)
        if r_right is None or r_left is None:
            return None
        if r_right >= r_left:
            direction, score = STRIP_RIGHT, r_right
        else:
            direction, score = STRIP_LEFT, r_left
        if score >= self._config.corr_threshold and direction == side:
            event = RecognitionEvent(
                t_ms=sample.t_ms, technique=TECH_GESTURE, payload=direction, score=score
            )
            self.reset()
            return event
        return None
