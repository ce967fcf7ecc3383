"""Sample Pearson correlation over short rolling windows.

A constant series has zero variance and no defined correlation; those cases
return None ("no correlation"), which every caller ranks below any real
score. A stationary gaze therefore never matches a moving trajectory.
"""

from __future__ import annotations

import math
from typing import Optional, Sequence


def _is_constant(values: Sequence[float]) -> bool:
    first = values[0]
    for v in values:
        if v != first:
            return False
    return True


class AxisStats:
    """Mean and centered deviations of one window axis, reusable across
    several counterpart series in the same step."""

    __slots__ = ("mean", "dev", "ss", "constant")

    def __init__(self, values: Sequence[float]):
        n = len(values)
        self.constant = _is_constant(values)
        self.mean = math.fsum(values) / n
        m = self.mean
        self.dev = [v - m for v in values]
        self.ss = math.fsum(d * d for d in self.dev)


def pearson_against(stats: AxisStats, ys: Sequence[float]) -> Optional[float]:
    """Correlate a pre-computed axis against one counterpart series."""
    n = len(stats.dev)
    if len(ys) != n:
        raise ValueError("series length mismatch")
    if stats.constant or _is_constant(ys):
        return None
    mean_y = math.fsum(ys) / n
    sxy = 0.0
    syy = 0.0
    dev = stats.dev
    for i in range(n):
        dy = ys[i] - mean_y
        sxy += dev[i] * dy
        syy += dy * dy
    denom = math.sqrt(stats.ss * syy)
    if denom == 0.0:
        return None
    r = sxy / denom
    if r > 1.0:
        return 1.0
    if r < -1.0:
        return -1.0
    return r


def pearson(xs: Sequence[float], ys: Sequence[float]) -> Optional[float]:
    """Sample Pearson coefficient of two equal-length series.

    Returns a value in [-1, 1], or None when either series is constant.
    Raises ValueError for mismatched lengths or fewer than two samples.
    """
    if len(xs) != len(ys):
        raise ValueError("series length mismatch")
    if len(xs) < 2:
        raise ValueError("correlation needs at least 2 samples")
    return pearson_against(AxisStats(xs), ys)


def score_beats(candidate: Optional[float], incumbent: Optional[float]) -> bool:
    """True when candidate strictly outranks incumbent; None ranks lowest."""
    if candidate is None:
        return False
    if incumbent is None:
        return True
    return candidate > incumbent
