from __future__ import annotations

import random
import statistics
from dataclasses import replace

import pytest

from gazepair.arbiter import ALL_PAIRINGS, Pairing
from gazepair.dwell import DwellRecognizer
from gazepair.gestures import GestureRecognizer
from gazepair.interface import FAIL_STEP_TIMEOUT, FAIL_TASK_TIMEOUT, TaskSpec
from gazepair.layouts import build_screen_layouts
from gazepair.pursuits import PursuitsRecognizer
from gazepair.simulator import (
    SITTING,
    WALKING,
    ZERO_NOISE,
    NoiseProfile,
    gen_fixation,
    gen_pursuit,
    gen_stroke,
    measure_accuracy_deg,
    run_trial,
)
from gazepair.types import EngineConfig, TargetSpec

from conftest import orbiting_target
from oracles import oracle_pursuit_events


def test_noiseless_fixation_is_constant():
    rng = random.Random(0)
    samples = gen_fixation((100.0, 200.0), 800.0, ZERO_NOISE, rng)
    assert len(samples) == 24
    assert all(s.x == 100.0 and s.y == 200.0 for s in samples)
    assert samples[0].t_ms == 0
    assert samples[-1].t_ms == 767


def test_fixation_seed_determinism():
    a = gen_fixation((50.0, 60.0), 1000.0, SITTING, random.Random(123))
    b = gen_fixation((50.0, 60.0), 1000.0, SITTING, random.Random(123))
    assert a == b
    c = gen_fixation((50.0, 60.0), 1000.0, SITTING, random.Random(124))
    assert a != c


def test_fixation_jitter_sd_calibrated():
    profile = NoiseProfile(fixation_jitter_sd_pt=2.0)
    rng = random.Random(7)
    samples = gen_fixation((0.0, 0.0), 10_000 * 1000.0 / 30.0, profile, rng)
    assert len(samples) == 10_000
    sd_x = statistics.stdev(s.x for s in samples)
    sd_y = statistics.stdev(s.y for s in samples)
    assert abs(sd_x - 2.0) / 2.0 < 0.05
    assert abs(sd_y - 2.0) / 2.0 < 0.05


def test_sitting_profile_hits_accuracy_equivalent():
    # mean absolute error of the sitting profile calibrated near 1.6 degrees
    assert measure_accuracy_deg(SITTING) == pytest.approx(1.6, abs=0.05)


def test_perfect_pursuit_closes_loop_with_recognizer(config):
    target = orbiting_target("t0", phase=45.0)
    rng = random.Random(0)
    samples = gen_pursuit(target, 2000.0, ZERO_NOISE, rng)
    rec = PursuitsRecognizer(config, [target])
    events = []
    for i, s in enumerate(samples):
        ev = rec.step(s)
        if ev is not None:
            events.append((i, ev))
            break
    assert events
    index, ev = events[0]
    assert index == 29
    assert ev.payload == "t0"
    assert ev.score == pytest.approx(1.0, abs=1e-9)


def test_lagged_pursuit_matches_oracle_decision(config):
    target = orbiting_target("t0", phase=0.0)
    profile = NoiseProfile(pursuit_lag_ms=200.0)
    rng = random.Random(0)
    samples = gen_pursuit(target, 3000.0, profile, rng)
    want = oracle_pursuit_events(samples, [target], config)
    rec = PursuitsRecognizer(config, [target])
    got = []
    for s in samples:
        ev = rec.step(s)
        if ev is not None:
            got.append((ev.t_ms, ev.payload, ev.score))
    assert len(got) == len(want)
    for g, w in zip(got, want):
        assert g[0] == w[0] and g[1] == w[1]
        assert g[2] == pytest.approx(w[2], abs=1e-9)
    # a 200 ms lag on a circular orbit still correlates far above threshold
    assert got, "lagged tracking should still select"
    assert got[0][2] >= 0.8


def test_locked_to_opposite_twin_selects_twin_not_intended(config):
    intended = orbiting_target("intended", phase=0.0, direction="clockwise")
    twin = orbiting_target("twin", phase=0.0, direction="counterclockwise")
    rng = random.Random(0)
    samples = gen_pursuit(twin, 2000.0, ZERO_NOISE, rng)
    rec = PursuitsRecognizer(config, [intended, twin])
    events = []
    for s in samples:
        ev = rec.step(s)
        if ev is not None:
            events.append(ev)
    assert events
    assert all(ev.payload == "twin" for ev in events)


def test_noiseless_stroke_detected(config):
    pairing = Pairing.from_name("DwellGestures")
    layout = build_screen_layouts(pairing, config)["home1"]
    rng = random.Random(0)
    samples = gen_stroke("right", layout, ZERO_NOISE, rng, config)
    assert len(samples) == 30
    rec = GestureRecognizer(config, layout)
    events = [ev for s in samples if (ev := rec.step(s))]
    assert len(events) == 1
    assert events[0].payload == "right"
    assert events[0].score >= 0.8
    # minimum-jerk vs linear ramp, frozen from the textbook oracle
    assert events[0].score == pytest.approx(0.984176, abs=1e-5)


def test_truncated_stroke_misses_strip(config):
    pairing = Pairing.from_name("DwellGestures")
    layout = build_screen_layouts(pairing, config)["home1"]
    rng = random.Random(0)
    samples = gen_stroke("right", layout, ZERO_NOISE, rng, config)
    # cut the sweep at half screen width: same shape, endpoint outside
    scale = 0.5 * layout.width_pt / samples[-1].x
    truncated = [replace(s, x=s.x * scale) for s in samples]
    rec = GestureRecognizer(config, layout)
    events = [ev for s in truncated if (ev := rec.step(s))]
    assert events == []


def test_left_stroke_mirror_symmetry(config):
    pairing = Pairing.from_name("DwellGestures")
    layout = build_screen_layouts(pairing, config)["home1"]
    right = gen_stroke("right", layout, ZERO_NOISE, random.Random(0), config)
    left = gen_stroke("left", layout, ZERO_NOISE, random.Random(0), config)
    rec_r = GestureRecognizer(config, layout)
    rec_l = GestureRecognizer(config, layout)
    ev_r = [ev for s in right if (ev := rec_r.step(s))][0]
    ev_l = [ev for s in left if (ev := rec_l.step(s))][0]
    assert ev_r.payload == "right"
    assert ev_l.payload == "left"
    assert ev_l.score == pytest.approx(ev_r.score, abs=1e-9)


@pytest.mark.parametrize("pairing", ALL_PAIRINGS, ids=lambda p: p.name)
def test_zero_noise_trial_completes_perfectly(pairing):
    run = run_trial(pairing, TaskSpec(), ZERO_NOISE)
    assert run.result.completed
    assert run.result.errors == 0
    assert run.result.actions == 7
    assert len(run.result.step_times_ms) == 7
    assert run.result.duration_ms <= 60_000


def test_absurd_jitter_times_out_without_crash():
    profile = NoiseProfile(
        name="absurd", fixation_jitter_sd_pt=375.0, pursuit_noise_sd_pt=375.0, rng_seed=5
    )
    run = run_trial(Pairing.from_name("DwellGestures"), TaskSpec(), profile)
    assert not run.result.completed
    assert run.result.failure_cause in (FAIL_STEP_TIMEOUT, FAIL_TASK_TIMEOUT)


def test_end_to_end_seed_determinism():
    pairing = Pairing.from_name("PursuitsGestures")
    a = run_trial(pairing, TaskSpec(), WALKING.with_seed(99))
    b = run_trial(pairing, TaskSpec(), WALKING.with_seed(99))
    assert a.samples == b.samples
    assert a.events == b.events
    assert a.actions == b.actions
    assert a.result == b.result


def test_trace_timestamps_strictly_increase():
    run = run_trial(Pairing.from_name("DwellDwell"), TaskSpec(), SITTING.with_seed(3))
    ts = [s.t_ms for s in run.samples]
    assert all(b > a for a, b in zip(ts, ts[1:]))


def _dwell_detection_rate(jitter: float, seeds: int = 200) -> float:
    config = EngineConfig()
    target = TargetSpec(id="t", center=(187.5, 400.0))
    hits = 0
    for seed in range(seeds):
        profile = NoiseProfile(fixation_jitter_sd_pt=jitter)
        rng = random.Random(seed)
        samples = gen_fixation(target.center, 3000.0, profile, rng)
        rec = DwellRecognizer(config, [target])
        if any(rec.step(s) for s in samples):
            hits += 1
    return hits / seeds


def _pursuit_detection_rate(noise: float, seeds: int = 200) -> float:
    config = EngineConfig()
    target = orbiting_target("t", phase=0.0)
    hits = 0
    for seed in range(seeds):
        profile = NoiseProfile(pursuit_noise_sd_pt=noise)
        rng = random.Random(seed)
        samples = gen_pursuit(target, 3000.0, profile, rng)
        rec = PursuitsRecognizer(config, [target])
        if any(rec.step(s) for s in samples):
            hits += 1
    return hits / seeds


def _gesture_detection_rate(sway: float, seeds: int = 200) -> float:
    config = EngineConfig()
    layout = build_screen_layouts(Pairing.from_name("DwellGestures"), config)["home1"]
    hits = 0
    for seed in range(seeds):
        profile = NoiseProfile(body_sway_amp_pt=sway, body_sway_hz=0.9)
        rng = random.Random(seed)
        samples = gen_stroke("right", layout, profile, rng, config)
        rec = GestureRecognizer(config, layout)
        if any(rec.step(s) for s in samples):
            hits += 1
    return hits / seeds


def test_detection_rate_monotone_in_dominant_noise():
    dwell_rates = [_dwell_detection_rate(j) for j in (0.0, 20.0, 60.0, 140.0)]
    assert all(b <= a for a, b in zip(dwell_rates, dwell_rates[1:])), dwell_rates
    pursuit_rates = [_pursuit_detection_rate(n) for n in (0.0, 8.0, 16.0, 32.0)]
    assert all(b <= a for a, b in zip(pursuit_rates, pursuit_rates[1:])), pursuit_rates
    gesture_rates = [_gesture_detection_rate(a) for a in (0.0, 25.0, 60.0, 140.0)]
    assert all(b <= a for a, b in zip(gesture_rates, gesture_rates[1:])), gesture_rates
