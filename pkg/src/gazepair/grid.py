"""Condition-grid execution and the metrics report.

The default grid crosses the six pairings with sitting/walking, three trials
per condition for each simulated participant. Per-trial seeds derive from a
sha256 hash of (base seed, participant, pairing, profile, trial), so any
single trial can be re-run in isolation. Reports are pure functions of the
persisted logs; replaying a run directory reproduces the report byte for
byte.
"""

from __future__ import annotations

import hashlib
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Optional

from . import iofmt
from .arbiter import ALL_PAIRINGS, Pairing
from .interface import ActionRecord, TaskSpec, TrialResult
from .metrics import (
    CompletionStats,
    RateStat,
    compute_completion_stats,
    compute_role_error_rates,
    mean_trial_error_rate,
)
from .simulator import SITTING, WALKING, ZERO_NOISE, NoiseProfile, TrialRun, run_trial
from .types import EngineConfig


@dataclass(frozen=True)
class ConditionGrid:
    pairings: tuple[Pairing, ...] = ALL_PAIRINGS
    profiles: tuple[NoiseProfile, ...] = (SITTING, WALKING)
    trials_per_condition: int = 3
    participants: int = 24
    task: TaskSpec = field(default_factory=TaskSpec)

    def __post_init__(self) -> None:
        if self.trials_per_condition < 1 or self.participants < 1:
            raise ValueError("grid needs at least one trial and one participant")
        names = [p.name for p in self.profiles]
        if len(set(names)) != len(names):
            raise ValueError("profile names must be distinct within a grid")

    @property
    def size(self) -> int:
        return len(self.pairings) * len(self.profiles) * self.trials_per_condition * self.participants


def zero_noise_grid(**overrides) -> ConditionGrid:
    """The full grid with both motor profiles silenced."""
    profiles = (
        replace(ZERO_NOISE, name="sitting"),
        replace(ZERO_NOISE, name="walking"),
    )
    return ConditionGrid(profiles=profiles, **overrides)


def derive_seed(base_seed: int, participant: int, pairing: str, profile: str, trial: int) -> int:
    key = f"{base_seed}|{participant}|{pairing}|{profile}|{trial}"
    digest = hashlib.sha256(key.encode("utf-8")).hexdigest()
    return int(digest[:16], 16)


@dataclass(frozen=True)
class TrialKey:
    participant: int
    pairing: str
    profile: str
    trial: int
    seed: int

    def to_dict(self) -> dict:
        return {
            "participant": self.participant,
            "pairing": self.pairing,
            "profile": self.profile,
            "trial": self.trial,
            "seed": self.seed,
        }


def trial_keys(grid: ConditionGrid, base_seed: int) -> list[TrialKey]:
    keys = []
    for participant in range(grid.participants):
        for pairing in grid.pairings:
            for profile in grid.profiles:
                for trial in range(grid.trials_per_condition):
                    keys.append(
                        TrialKey(
                            participant=participant,
                            pairing=pairing.name,
                            profile=profile.name,
                            trial=trial,
                            seed=derive_seed(
                                base_seed, participant, pairing.name, profile.name, trial
                            ),
                        )
                    )
    return keys


def _run_cell(args: tuple) -> TrialRun:
    pairing_name, profile, task, config, seed = args
    pairing = Pairing.from_name(pairing_name)
    return run_trial(pairing, task, profile.with_seed(seed), config)


@dataclass(frozen=True)
class ConditionMetrics:
    pairing: str
    profile: str
    n_trials: int
    completion: CompletionStats
    error_rate_pct: Optional[float]
    false_navigation: RateStat
    false_selection: RateStat


@dataclass(frozen=True)
class MetricsReport:
    base_seed: int
    conditions: tuple[ConditionMetrics, ...]

    def condition(self, pairing: str, profile: str) -> ConditionMetrics:
        for c in self.conditions:
            if c.pairing == pairing and c.profile == profile:
                return c
        raise KeyError((pairing, profile))

    def to_dict(self) -> dict:
        return {
            "format_version": iofmt.FORMAT_VERSION,
            "base_seed": self.base_seed,
            "conditions": [
                {
                    "pairing": c.pairing,
                    "profile": c.profile,
                    "n_trials": c.n_trials,
                    "completion_rate_pct": c.completion.rate_pct,
                    "mean_time_ms": c.completion.mean_time_ms,
                    "sd_time_ms": c.completion.sd_time_ms,
                    "error_rate_pct": c.error_rate_pct,
                    "false_navigation_pct": c.false_navigation.pct,
                    "false_navigation_counts": [
                        c.false_navigation.numerator,
                        c.false_navigation.denominator,
                    ],
                    "false_selection_pct": c.false_selection.pct,
                    "false_selection_counts": [
                        c.false_selection.numerator,
                        c.false_selection.denominator,
                    ],
                }
                for c in self.conditions
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        def num(v: Optional[float], unit: str = "") -> str:
            return "n/a" if v is None else f"{v:.1f}{unit}"

        header = (
            f"{'pairing':<18}{'profile':<9}{'trials':>7}{'completion':>11}"
            f"{'time_s':>8}{'sd_s':>7}{'error':>8}{'f.nav':>8}{'f.sel':>8}"
        )
        lines = [header, "-" * len(header)]
        for c in self.conditions:
            mean_s = None if c.completion.mean_time_ms is None else c.completion.mean_time_ms / 1000.0
            sd_s = None if c.completion.sd_time_ms is None else c.completion.sd_time_ms / 1000.0
            lines.append(
                f"{c.pairing:<18}{c.profile:<9}{c.n_trials:>7}"
                f"{num(c.completion.rate_pct, '%'):>11}{num(mean_s):>8}{num(sd_s):>7}"
                f"{num(c.error_rate_pct, '%'):>8}{num(c.false_navigation.pct, '%'):>8}"
                f"{num(c.false_selection.pct, '%'):>8}"
            )
        return "\n".join(lines) + "\n"


def build_report(
    grid: ConditionGrid,
    base_seed: int,
    results: dict[TrialKey, tuple[TrialResult, list[ActionRecord]]],
) -> MetricsReport:
    conditions = []
    for pairing in grid.pairings:
        for profile in grid.profiles:
            cell = [
                (key, value)
                for key, value in results.items()
                if key.pairing == pairing.name and key.profile == profile.name
            ]
            cell.sort(key=lambda kv: (kv[0].participant, kv[0].trial))
            trial_results = [value[0] for _, value in cell]
            per_trial_actions = [value[1] for _, value in cell]
            pooled_actions = [a for actions in per_trial_actions for a in actions]
            false_nav, false_sel = compute_role_error_rates(pooled_actions)
            conditions.append(
                ConditionMetrics(
                    pairing=pairing.name,
                    profile=profile.name,
                    n_trials=len(trial_results),
                    completion=compute_completion_stats(trial_results),
                    error_rate_pct=mean_trial_error_rate(per_trial_actions),
                    false_navigation=false_nav,
                    false_selection=false_sel,
                )
            )
    return MetricsReport(base_seed=base_seed, conditions=tuple(conditions))


def run_grid(
    grid: ConditionGrid,
    config: Optional[EngineConfig] = None,
    base_seed: int = 0,
    out_dir: Optional[Path] = None,
    workers: int = 1,
    write_traces: bool = True,
) -> MetricsReport:
    """Execute every trial of the grid and assemble the report.

    With out_dir set, persists trial results, action and event logs, gaze
    traces, and the report in JSON and aligned-table form.
    """
    config = config or EngineConfig()
    keys = trial_keys(grid, base_seed)
    args = [
        (key.pairing, _profile_by_name(grid, key.profile), grid.task, config, key.seed)
        for key in keys
    ]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            runs = list(pool.map(_run_cell, args, chunksize=8))
    else:
        runs = [_run_cell(a) for a in args]

    results = {key: (run.result, run.actions) for key, run in zip(keys, runs)}
    report = build_report(grid, base_seed, results)

    if out_dir is not None:
        out_dir = Path(out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        meta = {
            "format_version": iofmt.FORMAT_VERSION,
            "base_seed": base_seed,
            "participants": grid.participants,
            "trials_per_condition": grid.trials_per_condition,
            "pairings": [p.name for p in grid.pairings],
            "profiles": [iofmt.profile_to_dict(p) for p in grid.profiles],
            "task": iofmt.task_to_dict(grid.task),
        }
        (out_dir / "run_meta.json").write_text(
            json.dumps(meta, indent=2, sort_keys=True) + "\n", encoding="utf-8"
        )
        iofmt.write_jsonl(
            out_dir / "trials.jsonl",
            (
                {**key.to_dict(), "task": iofmt.task_to_dict(grid.task),
                 "result": iofmt.result_to_dict(run.result)}
                for key, run in zip(keys, runs)
            ),
        )
        iofmt.write_jsonl(
            out_dir / "actions.jsonl",
            (
                {**key.to_dict(), **iofmt.action_to_dict(action)}
                for key, run in zip(keys, runs)
                for action in run.actions
            ),
        )
        iofmt.write_jsonl(
            out_dir / "events.jsonl",
            (
                {
                    **key.to_dict(),
                    **iofmt.event_to_dict(event, pairing=key.pairing, screen_id=action.screen_id),
                }
                for key, run in zip(keys, runs)
                for event, action in zip(run.events, run.actions)
            ),
        )
        (out_dir / "report.json").write_text(report.to_json(), encoding="utf-8")
        (out_dir / "report.txt").write_text(report.to_text(), encoding="utf-8")
        iofmt.write_layout_file(out_dir / "engine_config.json", config, {})
        if write_traces:
            trace_dir = out_dir / "traces"
            trace_dir.mkdir(exist_ok=True)
            for key, run in zip(keys, runs):
                name = f"p{key.participant:02d}_{key.pairing}_{key.profile}_t{key.trial}.csv"
                iofmt.write_trace(trace_dir / name, run.samples)
    return report


def _profile_by_name(grid: ConditionGrid, name: str) -> NoiseProfile:
    for p in grid.profiles:
        if p.name == name:
            return p
    raise KeyError(name)


def replay_report(out_dir: Path) -> MetricsReport:
    """Recompute the report from a run directory's persisted logs."""
    out_dir = Path(out_dir)
    meta = json.loads((out_dir / "run_meta.json").read_text(encoding="utf-8"))
    if meta.get("format_version") != iofmt.FORMAT_VERSION:
        raise ValueError(f"{out_dir}: unsupported run_meta format_version")
    grid = ConditionGrid(
        pairings=tuple(Pairing.from_name(n) for n in meta["pairings"]),
        profiles=tuple(iofmt.profile_from_dict(d) for d in meta["profiles"]),
        trials_per_condition=meta["trials_per_condition"],
        participants=meta["participants"],
        task=iofmt.task_from_dict(meta["task"]),
    )
    trial_rows = iofmt.read_jsonl(out_dir / "trials.jsonl")
    action_rows = iofmt.read_jsonl(out_dir / "actions.jsonl")
    if not trial_rows:
        raise ValueError(f"{out_dir}: no trials recorded")

    keys = []
    results: dict[TrialKey, tuple[TrialResult, list[ActionRecord]]] = {}
    for row in trial_rows:
        key = TrialKey(
            participant=row["participant"],
            pairing=row["pairing"],
            profile=row["profile"],
            trial=row["trial"],
            seed=row["seed"],
        )
        keys.append(key)
        results[key] = (iofmt.result_from_dict(row["result"]), [])
    by_key = {(k.participant, k.pairing, k.profile, k.trial): k for k in keys}
    for row in action_rows:
        key = by_key[(row["participant"], row["pairing"], row["profile"], row["trial"])]
        results[key][1].append(iofmt.action_from_dict(row))
    return build_report(grid, meta["base_seed"], results)
