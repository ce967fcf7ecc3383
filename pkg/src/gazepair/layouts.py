"""Default phone screens: two home pages and the music player.

Geometry mimics a 375 x 812 pt handset at scale factor 3 (so the default
160 px edge buffer is 53.3 pt wide). Each home page shows six app circles
plus left/right navigation buttons; the player shows previous, play, and
next controls. All targets sit clear of the edge strips and toward the
screen center. Orbits are attached per pairing: a role gets orbiting
circles exactly when its technique is pursuit.
"""

from __future__ import annotations

from dataclasses import replace
from typing import Optional

from .arbiter import Pairing
from .types import (
    CLOCKWISE,
    COUNTERCLOCKWISE,
    ROLE_NAV_LEFT,
    ROLE_NAV_RIGHT,
    ROLE_SELECTION,
    EngineConfig,
    OrbitSpec,
    ScreenLayout,
    TargetSpec,
)

PHONE_WIDTH_PT = 375.0
PHONE_HEIGHT_PT = 812.0
DEFAULT_ORBIT_RADIUS_PT = 30.0
TRACK_COUNT = 30

SCREEN_HOME1 = "home1"
SCREEN_HOME2 = "home2"
SCREEN_PLAYER = "player"
SCREEN_IDS = (SCREEN_HOME1, SCREEN_HOME2, SCREEN_PLAYER)

_APP_COLS = (130.0, 245.0)
_APP_ROWS = (280.0, 410.0, 540.0)
_NAV_Y = 680.0
_NAV_LEFT_X = 95.0
_NAV_RIGHT_X = 280.0
_PLAYER_ROW_Y = 560.0

NAV_LEFT_ID = "nav_left"
NAV_RIGHT_ID = "nav_right"
PLAY_ID = "play"
NEXT_ID = "next"
PREV_ID = "prev"


def app_id(slot: int) -> str:
    return f"app_{slot}"


def home_screen_for_slot(slot: int) -> str:
    return SCREEN_HOME1 if slot < 6 else SCREEN_HOME2


def _home_targets(page: int) -> list[TargetSpec]:
    base = 0 if page == 1 else 6
    targets = []
    slot = base
    for y in _APP_ROWS:
        for x in _APP_COLS:
            targets.append(TargetSpec(id=app_id(slot), center=(x, y), role=ROLE_SELECTION))
            slot += 1
    targets.append(TargetSpec(id=NAV_LEFT_ID, center=(_NAV_LEFT_X, _NAV_Y), role=ROLE_NAV_LEFT))
    targets.append(TargetSpec(id=NAV_RIGHT_ID, center=(_NAV_RIGHT_X, _NAV_Y), role=ROLE_NAV_RIGHT))
    return targets


def _player_targets() -> list[TargetSpec]:
    return [
        TargetSpec(id=PREV_ID, center=(95.0, _PLAYER_ROW_Y), role=ROLE_NAV_LEFT),
        TargetSpec(id=PLAY_ID, center=(187.5, _PLAYER_ROW_Y), role=ROLE_SELECTION),
        TargetSpec(id=NEXT_ID, center=(280.0, _PLAYER_ROW_Y), role=ROLE_NAV_RIGHT),
    ]


def _attach_orbits(
    targets: list[TargetSpec], pairing: Pairing, orbit_radius_pt: float
) -> tuple[TargetSpec, ...]:
    pursuit_roles = set()
    if pairing.selection == "pursuits":
        pursuit_roles.add(ROLE_SELECTION)
    if pairing.navigation == "pursuits":
        pursuit_roles.update((ROLE_NAV_LEFT, ROLE_NAV_RIGHT))
    orbiting = [t for t in targets if t.role in pursuit_roles]
    n = len(orbiting)
    out = []
    index = 0
    for t in targets:
        if t.role in pursuit_roles:
            # Evenly spread start positions, alternating direction so half
            # of the circles move opposite to the other half.
            orbit = OrbitSpec(
                radius_pt=orbit_radius_pt,
                initial_phase_deg=(360.0 * index / n) % 360.0,
                direction=CLOCKWISE if index % 2 == 0 else COUNTERCLOCKWISE,
            )
            out.append(replace(t, orbit=orbit))
            index += 1
        else:
            out.append(t)
    return tuple(out)


def build_screen_layouts(
    pairing: Pairing,
    config: Optional[EngineConfig] = None,
    orbit_radius_pt: float = DEFAULT_ORBIT_RADIUS_PT,
) -> dict[str, ScreenLayout]:
    """The three screens with orbits assigned for the given pairing."""
    config = config or EngineConfig()
    screens = {
        SCREEN_HOME1: _home_targets(1),
        SCREEN_HOME2: _home_targets(2),
        SCREEN_PLAYER: _player_targets(),
    }
    return {
        screen_id: ScreenLayout(
            screen_id=screen_id,
            width_pt=PHONE_WIDTH_PT,
            height_pt=PHONE_HEIGHT_PT,
            targets=_attach_orbits(targets, pairing, orbit_radius_pt),
        )
        for screen_id, targets in screens.items()
    }
