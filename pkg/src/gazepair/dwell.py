"""Dwell-time selection over static targets.

A timer starts when a raw gaze point first lands inside a target. From then
on the mean of all gaze points accumulated since the timer started is tested
against that target's circle, which tolerates per-sample scatter that the
raw points alone would not. If the mean leaves the circle the timer cancels
(a new one may start at the very same sample); once the dwell duration has
elapsed with the mean still inside, a selection event is emitted.
"""

from __future__ import annotations

from typing import Iterable, Optional

from .geometry import point_in_target
from .types import TECH_DWELL, EngineConfig, GazeSample, RecognitionEvent, TargetSpec


class DwellRecognizer:
    """Streaming dwell detector bound to a fixed set of static targets."""

    def __init__(self, config: EngineConfig, targets: Iterable[TargetSpec]):
        self._config = config
        self._targets = tuple(targets)
        self._last_t: Optional[int] = None
        self._anchor: Optional[TargetSpec] = None
        self._entry_t = 0
        self._sum_x = 0.0
        self._sum_y = 0.0
        self._count = 0

    def reset(self) -> None:
        self._anchor = None
        self._entry_t = 0
        self._sum_x = 0.0
        self._sum_y = 0.0
        self._count = 0

    def buffer_size(self) -> int:
        return self._count

    @property
    def targets(self) -> tuple[TargetSpec, ...]:
        return self._targets

    def _entry_target(self, x: float, y: float) -> Optional[TargetSpec]:
        # Layouts keep targets disjoint; nearest center then lowest id breaks
        # any pathological overlap deterministically.
        hits = [t for t in self._targets if point_in_target(x, y, t)]
        if not hits:
            return None
        if len(hits) == 1:
            return hits[0]
        return min(hits, key=lambda t: ((x - t.center[0]) ** 2 + (y - t.center[1]) ** 2, t.id))

    def step(self, sample: GazeSample) -> Optional[RecognitionEvent]:
        if self._last_t is not None and sample.t_ms <= self._last_t:
            raise ValueError("gaze timestamps must strictly increase")
        self._last_t = sample.t_ms
        if not sample.valid:
            return None

        if self._anchor is not None:
            self._sum_x += sample.x
            self._sum_y += sample.y
            self._count += 1
            mean_x = self._sum_x / self._count
            mean_y = self._sum_y / self._count
            if not point_in_target(mean_x, mean_y, self._anchor):
                self._cancel()
            elif sample.t_ms - self._entry_t >= self._config.dwell_ms:
                event = RecognitionEvent(
                    t_ms=sample.t_ms, technique=TECH_DWELL, payload=self._anchor.id
                )
                self.reset()
                return event

        if self._anchor is None:
            target = self._entry_target(sample.x, sample.y)
            if target is not None:
                self._anchor = target
                self._entry_t = sample.t_ms
                self._sum_x = sample.x
                self._sum_y = sample.y
                self._count = 1
        return None

    def _cancel(self) -> None:
        self._anchor = None
        self._sum_x = 0.0
        self._sum_y = 0.0
        self._count = 0
