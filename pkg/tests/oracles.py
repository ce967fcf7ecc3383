"""Independent reference implementations used to cross-check the engine.

Everything here recomputes from scratch: the textbook correlation formula
instead of the engine's centered two-pass, and event streams rebuilt at
every step from the raw trace instead of rolling buffers. Shared with the
engine is only the documented rule set (window size, zero-variance
sentinel, threshold, tie-breaks, strip confirmation, reset on emission).
"""

from __future__ import annotations

import math
from typing import Optional, Sequence

import numpy as np

from gazepair.geometry import orbit_position, strip_side
from gazepair.types import EngineConfig, GazeSample, ScreenLayout, TargetSpec


def naive_pearson(xs: Sequence[float], ys: Sequence[float]) -> Optional[float]:
    """Single-pass textbook formula; None for constant input."""
    n = len(xs)
    if n != len(ys):
        raise ValueError("length mismatch")
    if n < 2:
        raise ValueError("need at least 2 samples")
    if all(x == xs[0] for x in xs) or all(y == ys[0] for y in ys):
        return None
    sx = sum(xs)
    sy = sum(ys)
    sxx = sum(x * x for x in xs)
    syy = sum(y * y for y in ys)
    sxy = sum(x * y for x, y in zip(xs, ys))
    num = n * sxy - sx * sy
    den = math.sqrt((n * sxx - sx * sx) * (n * syy - sy * sy))
    if den == 0.0:
        return None
    return max(-1.0, min(1.0, num / den))


def _window_corrs(values: np.ndarray, others: np.ndarray, window: int) -> np.ndarray:
    """Correlation of every length-`window` window of `values` against the
    aligned windows of each column of `others`.

    Returns shape (n_windows, n_columns); NaN marks zero-variance windows.
    """
    v = np.lib.stride_tricks.sliding_window_view(values, window)  # (n_win, window)
    v_const = v.max(axis=1) == v.min(axis=1)
    vc = v - v.mean(axis=1, keepdims=True)
    vss = np.einsum("nw,nw->n", vc, vc)
    out = np.empty((v.shape[0], others.shape[1]))
    for j in range(others.shape[1]):
        o = np.lib.stride_tricks.sliding_window_view(others[:, j], window)
        o_const = o.max(axis=1) == o.min(axis=1)
        oc = o - o.mean(axis=1, keepdims=True)
        num = np.einsum("nw,nw->n", vc, oc)
        den = np.sqrt(vss * np.einsum("nw,nw->n", oc, oc))
        with np.errstate(invalid="ignore", divide="ignore"):
            r = num / den
        r = np.clip(r, -1.0, 1.0)
        r[v_const | o_const] = np.nan
        r[~np.isfinite(r)] = np.nan
        out[:, j] = r
    return out


def oracle_pursuit_events(
    samples: Sequence[GazeSample],
    targets: Sequence[TargetSpec],
    config: EngineConfig,
) -> list[tuple[int, str, float]]:
    """Full-recompute pursuit event stream over a raw trace."""
    window = config.corr_window_samples
    valid = [s for s in samples if s.valid]
    if len(valid) < window:
        return []
    ordered = sorted(targets, key=lambda t: t.id)
    gx = np.array([s.x for s in valid])
    gy = np.array([s.y for s in valid])
    ts = [s.t_ms for s in valid]
    ox = np.empty((len(valid), len(ordered)))
    oy = np.empty((len(valid), len(ordered)))
    for j, t in enumerate(ordered):
        for i, t_ms in enumerate(ts):
            ox[i, j], oy[i, j] = orbit_position(t, t_ms)

    rx = _window_corrs(gx, ox, window)  # (n_windows, n_targets)
    ry = _window_corrs(gy, oy, window)
    scores = np.minimum(rx, ry)  # NaN propagates

    gate = config.proximity_gate_pt
    events: list[tuple[int, str, float]] = []
    reset_from = 0  # first valid-sample index usable after the last emission
    for end in range(window - 1, len(valid)):
        start = end - window + 1
        if start < reset_from:
            continue
        best_j = -1
        best_score = -math.inf
        for j, t in enumerate(ordered):
            if gate is not None:
                px, py = orbit_position(t, ts[end])
                if math.hypot(gx[end] - px, gy[end] - py) > gate:
                    continue
            s = scores[start, j]
            if math.isnan(s):
                continue
            if s > best_score:
                best_score = s
                best_j = j
        if best_j >= 0 and best_score >= config.corr_threshold:
            events.append((ts[end], ordered[best_j].id, float(best_score)))
            reset_from = end + 1
    return events


def oracle_gesture_events(
    samples: Sequence[GazeSample],
    layout: ScreenLayout,
    config: EngineConfig,
) -> list[tuple[int, str, float]]:
    """Full-recompute gesture event stream over a raw trace."""
    window = config.corr_window_samples
    valid = [s for s in samples if s.valid]
    if len(valid) < window:
        return []
    ramp_right = list(range(window))
    ramp_left = list(reversed(ramp_right))
    events: list[tuple[int, str, float]] = []
    reset_from = 0
    for end in range(window - 1, len(valid)):
        start = end - window + 1
        if start < reset_from:
            continue
        side = strip_side(layout, valid[end].x)
        if side is None:
            continue
        xs = [s.x for s in valid[start : end + 1]]
        r_right = naive_pearson(xs, ramp_right)
        r_left = naive_pearson(xs, ramp_left)
        if r_right is None or r_left is None:
            continue
        if r_right >= r_left:
            direction, score = "right", r_right
        else:
            direction, score = "left", r_left
        if score >= config.corr_threshold and direction == side:
            events.append((valid[end].t_ms, direction, score))
            reset_from = end + 1
    return events
