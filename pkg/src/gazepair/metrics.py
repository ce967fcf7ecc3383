"""Study measures: completion time/rate, error rate, per-role error rates.

Rates with an empty denominator carry an explicit marker instead of NaN so
exported tables never contain undefined numbers. Completion-time averaging
follows the imputation rule: within a condition, times of incomplete trials
are replaced by the mean of that condition's completed times before
averaging, which never changes the completion rate itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .interface import ActionRecord, TrialResult

ROLE_NAVIGATION = "navigation"
ROLE_SELECTION = "selection"


@dataclass(frozen=True)
class RateStat:
    """A percentage with its counts; pct is None when undefined."""

    pct: Optional[float]
    numerator: int
    denominator: int

    @property
    def defined(self) -> bool:
        return self.denominator > 0

    def display(self) -> str:
        return "n/a" if self.pct is None else f"{self.pct:.1f}%"


@dataclass(frozen=True)
class CompletionStats:
    rate_pct: float
    mean_time_ms: Optional[float]
    sd_time_ms: Optional[float]
    n_trials: int
    n_completed: int


def compute_error_rate(records: Sequence[ActionRecord]) -> RateStat:
    """Percentage of incorrect actions; an empty list reports 0 with a
    zero denominator as the explicit empty flag."""
    total = len(records)
    if total == 0:
        return RateStat(pct=0.0, numerator=0, denominator=0)
    errors = sum(1 for r in records if not r.correct)
    return RateStat(pct=100.0 * errors / total, numerator=errors, denominator=total)


def compute_completion_stats(results: Sequence[TrialResult]) -> CompletionStats:
    """Completion rate plus imputed mean/sd of completion times."""
    if not results:
        raise ValueError("needs at least one trial result")
    n = len(results)
    completed = [r for r in results if r.completed]
    rate = 100.0 * len(completed) / n
    if not completed:
        return CompletionStats(rate, None, None, n, 0)
    completed_mean = sum(r.duration_ms for r in completed) / len(completed)
    imputed = [
        float(r.duration_ms) if r.completed else completed_mean for r in results
    ]
    mean = sum(imputed) / n
    if n > 1:
        sd = math.sqrt(sum((v - mean) ** 2 for v in imputed) / (n - 1))
    else:
        sd = 0.0
    return CompletionStats(rate, mean, sd, n, len(completed))


def compute_role_error_rates(
    records: Sequence[ActionRecord],
) -> tuple[RateStat, RateStat]:
    """(false navigation, false selection) rates over the given actions.

    A role nobody exercised yields an undefined marker, never 0.
    """
    nav = [r for r in records if r.role == ROLE_NAVIGATION]
    sel = [r for r in records if r.role == ROLE_SELECTION]

    def rate(rows: list[ActionRecord]) -> RateStat:
        if not rows:
            return RateStat(pct=None, numerator=0, denominator=0)
        bad = sum(1 for r in rows if not r.correct)
        return RateStat(pct=100.0 * bad / len(rows), numerator=bad, denominator=len(rows))

    return rate(nav), rate(sel)


def mean_trial_error_rate(per_trial_records: Sequence[Sequence[ActionRecord]]) -> Optional[float]:
    """Mean of per-trial error rates; trials without actions are skipped."""
    rates = []
    for records in per_trial_records:
        stat = compute_error_rate(records)
        if stat.defined:
            rates.append(stat.pct)
    if not rates:
        return None
    return sum(rates) / len(rates)
