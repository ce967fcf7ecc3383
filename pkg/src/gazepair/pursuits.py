"""Pursuit-based selection: match the gaze trajectory against orbiting targets.

Gaze samples and each target's orbit positions are buffered in a rolling
window. Once the window is full, each target is scored with the lower of the
two per-axis Pearson correlations; the best-scoring target is selected when
its score reaches the threshold, after which the window clears. Otherwise the
window slides by one sample. With a proximity gate configured, targets whose
orbiting circle is currently too far from the gaze point sit out that step.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Optional

from .correlation import AxisStats, pearson_against
from .geometry import orbit_position
from .types import TECH_PURSUITS, EngineConfig, GazeSample, RecognitionEvent, TargetSpec


class PursuitsRecognizer:
    """Streaming pursuit detector over a fixed set of orbiting targets."""

    def __init__(self, config: EngineConfig, targets: Iterable[TargetSpec]):
        self._config = config
        self._targets = tuple(targets)
        for t in self._targets:
            if t.orbit is None:
                raise ValueError(f"pursuit target {t.id!r} has no orbit")
        # Ascending id gives the deterministic tie-break at equal scores.
        self._scan_order = sorted(self._targets, key=lambda t: t.id)
        self._window = config.corr_window_samples
        self._gx: deque[float] = deque()
        self._gy: deque[float] = deque()
        self._tx: dict[str, deque[float]] = {t.id: deque() for t in self._targets}
        self._ty: dict[str, deque[float]] = {t.id: deque() for t in self._targets}
        self._last_t: Optional[int] = None

    def reset(self) -> None:
        self._gx.clear()
        self._gy.clear()
        for d in self._tx.values():
            d.clear()
        for d in self._ty.values():
            d.clear()

    def buffer_size(self) -> int:
        return len(self._gx)

    @property
    def targets(self) -> tuple[TargetSpec, ...]:
        return self._targets

    def step(self, sample: GazeSample) -> Optional[RecognitionEvent]:
        if self._last_t is not None and sample.t_ms <= self._last_t:
            raise ValueError("gaze timestamps must strictly increase")
        self._last_t = sample.t_ms
        if not sample.valid:
            return None

        self._gx.append(sample.x)
        self._gy.append(sample.y)
        positions: dict[str, tuple[float, float]] = {}
        for t in self._targets:
            pos = orbit_position(t, sample.t_ms)
            positions[t.id] = pos
            self._tx[t.id].append(pos[0])
            self._ty[t.id].append(pos[1])
        if len(self._gx) > self._window:
            self._gx.popleft()
            self._gy.popleft()
            for t in self._targets:
                self._tx[t.id].popleft()
                self._ty[t.id].popleft()
        if len(self._gx) < self._window:
            return None

        gate = self._config.proximity_gate_pt
        stats_x = AxisStats(tuple(self._gx))
        stats_y = AxisStats(tuple(self._gy))
        best: Optional[TargetSpec] = None
        best_score: Optional[float] = None
        for t in self._scan_order:
            if gate is not None:
                px, py = positions[t.id]
                dx = sample.x - px
                dy = sample.y - py
                if dx * dx + dy * dy > gate * gate:
                    continue
            r_x = pearson_against(stats_x, tuple(self._tx[t.id]))
            if r_x is None:
                continue
            if best_score is not None and r_x <= best_score:
                continue  # min(r_x, r_y) cannot beat the incumbent
            r_y = pearson_against(stats_y, tuple(self._ty[t.id]))
            if r_y is None:
                continue
            score = min(r_x, r_y)
            if best_score is None or score > best_score:
                best = t
                best_score = score
        if best is not None and best_score is not None and best_score >= self._config.corr_threshold:
            event = RecognitionEvent(
                t_ms=sample.t_ms, technique=TECH_PURSUITS, payload=best.id, score=best_score
            )
            self.reset()
            return event
        return None
