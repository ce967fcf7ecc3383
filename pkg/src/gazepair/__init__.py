"""Streaming gaze-input recognition with paired selection/navigation
techniques, a home-screen/music-player task model, a synthetic gaze
simulator, and an experiment harness."""

from .arbiter import ALL_PAIRINGS, Arbiter, ConfigurationError, Pairing, build_arbiter
from .correlation import pearson
from .dwell import DwellRecognizer
from .geometry import orbit_position, strip_side
from .gestures import GestureRecognizer
from .grid import ConditionGrid, MetricsReport, derive_seed, replay_report, run_grid, zero_noise_grid
from .interface import (
    ActionRecord,
    InterfaceModel,
    InterfaceState,
    ProtocolError,
    TaskSpec,
    TrialResult,
)
from .layouts import build_screen_layouts
from .metrics import (
    compute_completion_stats,
    compute_error_rate,
    compute_role_error_rates,
)
from .pursuits import PursuitsRecognizer
from .simulator import (
    PROFILES,
    SITTING,
    WALKING,
    ZERO_NOISE,
    NoiseProfile,
    TrialRun,
    gen_fixation,
    gen_pursuit,
    gen_stroke,
    run_trial,
)
from .types import (
    EngineConfig,
    GazeSample,
    OrbitSpec,
    RecognitionEvent,
    ScreenLayout,
    TargetSpec,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_PAIRINGS",
    "ActionRecord",
    "Arbiter",
    "ConditionGrid",
    "ConfigurationError",
    "DwellRecognizer",
    "EngineConfig",
    "GazeSample",
    "GestureRecognizer",
    "InterfaceModel",
    "InterfaceState",
    "MetricsReport",
    "NoiseProfile",
    "OrbitSpec",
    "PROFILES",
    "Pairing",
    "ProtocolError",
    "PursuitsRecognizer",
    "RecognitionEvent",
    "SITTING",
    "ScreenLayout",
    "TargetSpec",
    "TaskSpec",
    "TrialResult",
    "TrialRun",
    "WALKING",
    "ZERO_NOISE",
    "build_arbiter",
    "build_screen_layouts",
    "compute_completion_stats",
    "compute_error_rate",
    "compute_role_error_rates",
    "derive_seed",
    "gen_fixation",
    "gen_pursuit",
    "gen_stroke",
    "orbit_position",
    "pearson",
    "replay_report",
    "run_grid",
    "run_trial",
    "strip_side",
    "zero_noise_grid",
]
