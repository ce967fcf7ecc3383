"""Command-line front end: grid runs, log replay, trace export, demo server."""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import replace
from pathlib import Path

from . import iofmt
from .arbiter import ALL_PAIRINGS, Pairing
from .geometry import STRIP_LEFT, STRIP_RIGHT
from .grid import ConditionGrid, replay_report, run_grid, zero_noise_grid
from .interface import TaskSpec
from .layouts import build_screen_layouts
from .simulator import PROFILES, NoiseProfile, gen_fixation, gen_pursuit, gen_stroke, run_trial
from .types import EngineConfig


def _load_config(path: str | None) -> EngineConfig:
    if path is None:
        return EngineConfig()
    config, _ = iofmt.read_layout_file(Path(path))
    return config


def _resolve_profile(spec) -> NoiseProfile:
    if isinstance(spec, str):
        try:
            return PROFILES[spec]
        except KeyError:
            raise SystemExit(f"unknown profile {spec!r}; choose from {sorted(PROFILES)}")
    return iofmt.profile_from_dict(spec)


def _load_grid(path: str | None, zero_noise: bool) -> ConditionGrid:
    if path is None:
        return zero_noise_grid() if zero_noise else ConditionGrid()
    doc = json.loads(Path(path).read_text(encoding="utf-8"))
    if doc.get("format_version") != iofmt.FORMAT_VERSION:
        raise SystemExit(f"{path}: unsupported format_version")
    kwargs = {}
    if "pairings" in doc:
        kwargs["pairings"] = tuple(Pairing.from_name(n) for n in doc["pairings"])
    if "profiles" in doc:
        kwargs["profiles"] = tuple(_resolve_profile(p) for p in doc["profiles"])
    if "trials_per_condition" in doc:
        kwargs["trials_per_condition"] = doc["trials_per_condition"]
    if "participants" in doc:
        kwargs["participants"] = doc["participants"]
    if "task" in doc:
        kwargs["task"] = iofmt.task_from_dict(doc["task"])
    grid = ConditionGrid(**kwargs)
    if zero_noise:
        grid = replace(
            grid,
            profiles=tuple(
                replace(NoiseProfile(name=p.name), saccade_duration_ms=0.0)
                for p in grid.profiles
            ),
        )
    return grid


def _cmd_run(args: argparse.Namespace) -> int:
    grid = _load_grid(args.grid, args.zero_noise)
    config = _load_config(args.config)
    out_dir = Path(args.out) if args.out else None
    report = run_grid(
        grid,
        config=config,
        base_seed=args.seed,
        out_dir=out_dir,
        workers=args.parallel,
        write_traces=not args.no_traces,
    )
    sys.stdout.write(report.to_text())
    if out_dir:
        print(f"\nlogs and report written to {out_dir}")
    return 0


def _cmd_replay(args: argparse.Namespace) -> int:
    report = replay_report(Path(args.dir))
    sys.stdout.write(report.to_text())
    if args.out:
        Path(args.out).write_text(report.to_json(), encoding="utf-8")
    return 0


def _cmd_gen_traces(args: argparse.Namespace) -> int:
    profile = PROFILES[args.profile].with_seed(args.seed)
    rng = random.Random(args.seed)
    config = EngineConfig()
    pairing = Pairing.from_name(args.pairing)
    layouts = build_screen_layouts(pairing, config)
    if args.kind == "fixation":
        layout = layouts["home1"]
        target = layout.target("app_0")
        samples = gen_fixation(target.center, args.duration_ms, profile, rng)
    elif args.kind == "pursuit":
        layout = layouts["home1"]
        orbiting = [t for t in layout.targets if t.orbit is not None]
        if not orbiting:
            raise SystemExit(f"pairing {pairing.name} has no orbiting home targets")
        samples = gen_pursuit(orbiting[0], args.duration_ms, profile, rng)
    elif args.kind == "stroke":
        direction = STRIP_RIGHT if args.direction == "right" else STRIP_LEFT
        samples = gen_stroke(direction, layouts["home1"], profile, rng, config)
    else:  # trial
        run = run_trial(pairing, TaskSpec(), profile, config, layouts)
        samples = run.samples
    iofmt.write_trace(Path(args.out), samples)
    print(f"wrote {len(samples)} samples to {args.out}")
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .server import create_app

    app = create_app(config=_load_config(args.config), pairing_name=args.pairing)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gazepair")
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="execute a condition grid and report metrics")
    run_p.add_argument("--grid", help="grid spec JSON file (defaults to the full 6x2 grid)")
    run_p.add_argument("--config", help="engine config JSON file")
    run_p.add_argument("--seed", type=int, default=0, help="base seed for trial derivation")
    run_p.add_argument("--out", help="output directory for logs and report")
    run_p.add_argument("--parallel", type=int, default=1, help="worker processes")
    run_p.add_argument("--zero-noise", action="store_true", help="silence all noise profiles")
    run_p.add_argument("--no-traces", action="store_true", help="skip writing per-trial gaze traces")
    run_p.set_defaults(func=_cmd_run)

    replay_p = sub.add_parser("replay", help="recompute metrics from persisted logs")
    replay_p.add_argument("dir", help="run output directory")
    replay_p.add_argument("--out", help="write the recomputed report JSON here")
    replay_p.set_defaults(func=_cmd_replay)

    gen_p = sub.add_parser("gen-traces", help="emit standalone synthetic gaze traces")
    gen_p.add_argument("--kind", choices=("fixation", "pursuit", "stroke", "trial"), required=True)
    gen_p.add_argument("--out", required=True, help="trace CSV path")
    gen_p.add_argument("--seed", type=int, default=0)
    gen_p.add_argument("--profile", choices=sorted(PROFILES), default="sitting")
    gen_p.add_argument("--pairing", choices=[p.name for p in ALL_PAIRINGS], default="PursuitsGestures")
    gen_p.add_argument("--duration-ms", type=float, default=3000.0)
    gen_p.add_argument("--direction", choices=("left", "right"), default="right")
    gen_p.set_defaults(func=_cmd_gen_traces)

    serve_p = sub.add_parser("serve", help="host the demo UI wire protocol")
    serve_p.add_argument("--port", type=int, default=8000)
    serve_p.add_argument("--host", default="127.0.0.1")
    serve_p.add_argument("--config", help="engine config JSON file")
    serve_p.add_argument("--pairing", choices=[p.name for p in ALL_PAIRINGS], default="DwellGestures")
    serve_p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
