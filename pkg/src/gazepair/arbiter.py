"""Pairing of two input techniques over one shared interaction state.

One technique is bound to selection targets and another to navigation
(buttons or edge strips). Every sample is fed to both recognizers; their
candidate events are merged at a barrier into at most one event per step,
and any emission resets both recognizers globally so data collection starts
over. Arbitration is a pure function of the candidates, independent of the
order the recognizers ran in.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .dwell import DwellRecognizer
from .gestures import GestureRecognizer
from .pursuits import PursuitsRecognizer
from .types import (
    ROLE_NAV_LEFT,
    ROLE_NAV_RIGHT,
    ROLE_SELECTION,
    EngineConfig,
    GazeSample,
    RecognitionEvent,
    ScreenLayout,
)

SELECTION_TECHNIQUES = ("dwell", "pursuits")
NAVIGATION_TECHNIQUES = ("dwell", "pursuits", "gestures")

_NAME_PART = {"dwell": "Dwell", "pursuits": "Pursuits", "gestures": "Gestures"}


class ConfigurationError(ValueError):
    """Layout and pairing disagree about target roles or orbits."""


@dataclass(frozen=True)
class Pairing:
    """One of the six constructible selection/navigation technique pairs."""

    selection: str
    navigation: str

    def __post_init__(self) -> None:
        if self.selection not in SELECTION_TECHNIQUES:
            raise ValueError(f"{self.selection!r} cannot be bound to selection")
        if self.navigation not in NAVIGATION_TECHNIQUES:
            raise ValueError(f"{self.navigation!r} cannot be bound to navigation")

    @property
    def name(self) -> str:
        return _NAME_PART[self.selection] + _NAME_PART[self.navigation]

    @classmethod
    def from_name(cls, name: str) -> "Pairing":
        for p in ALL_PAIRINGS:
            if p.name == name:
                return p
        raise ValueError(f"unknown pairing {name!r}")


ALL_PAIRINGS = tuple(
    Pairing(sel, nav) for sel in SELECTION_TECHNIQUES for nav in NAVIGATION_TECHNIQUES
)


def _pursuit_bound_roles(pairing: Pairing) -> set[str]:
    roles: set[str] = set()
    if pairing.selection == "pursuits":
        roles.add(ROLE_SELECTION)
    if pairing.navigation == "pursuits":
        roles.update((ROLE_NAV_LEFT, ROLE_NAV_RIGHT))
    return roles


def validate_layout_for_pairing(pairing: Pairing, layout: ScreenLayout) -> None:
    """Targets bound to pursuit must orbit; all others must not."""
    pursuit_roles = _pursuit_bound_roles(pairing)
    for t in layout.targets:
        if t.role in pursuit_roles and t.orbit is None:
            raise ConfigurationError(
                f"layout {layout.screen_id!r}: target {t.id!r} is bound to pursuit "
                f"in {pairing.name} but has no orbit"
            )
        if t.role not in pursuit_roles and t.orbit is not None:
            raise ConfigurationError(
                f"layout {layout.screen_id!r}: target {t.id!r} orbits but is not "
                f"bound to pursuit in {pairing.name}"
            )


class Arbiter:
    """Runs a pairing's two recognizers over a shared exclusive state.

    dwell_precedence controls the one conflict the correlation rule cannot
    settle: a scoreless dwell candidate versus a scored candidate in the
    same step. By default the committed fixation wins.
    """

    def __init__(
        self,
        pairing: Pairing,
        config: EngineConfig,
        layout: ScreenLayout,
        dwell_precedence: bool = True,
        eval_navigation_first: bool = False,
    ):
        self.pairing = pairing
        self.config = config
        self.dwell_precedence = dwell_precedence
        self.eval_navigation_first = eval_navigation_first
        self.last_candidates: tuple[Optional[RecognitionEvent], Optional[RecognitionEvent]] = (
            None,
            None,
        )
        self._layout: Optional[ScreenLayout] = None
        self._bind(layout)

    def _bind(self, layout: ScreenLayout) -> None:
        validate_layout_for_pairing(self.pairing, layout)
        selection_targets = layout.targets_with_role(ROLE_SELECTION)
        navigation_targets = layout.targets_with_role(ROLE_NAV_LEFT, ROLE_NAV_RIGHT)
        self.selection_recognizer = self._build(self.pairing.selection, selection_targets, layout)
        self.navigation_recognizer = self._build(self.pairing.navigation, navigation_targets, layout)
        self._layout = layout

    def _build(self, technique: str, targets, layout: ScreenLayout):
        if technique == "dwell":
            return DwellRecognizer(self.config, targets)
        if technique == "pursuits":
            return PursuitsRecognizer(self.config, targets)
        return GestureRecognizer(self.config, layout)

    @property
    def layout(self) -> ScreenLayout:
        assert self._layout is not None
        return self._layout

    def reset(self) -> None:
        self.selection_recognizer.reset()
        self.navigation_recognizer.reset()

    def rebind(self, layout: ScreenLayout) -> None:
        self._bind(layout)

    def step(self, sample: GazeSample, layout: Optional[ScreenLayout] = None) -> Optional[RecognitionEvent]:
        """Feed one sample to both recognizers and merge their candidates.

        Passing a layout with a different screen_id rebinds the arbiter to
        the new screen and drops any partial recognition state.
        """
        if layout is not None and layout.screen_id != self.layout.screen_id:
            self._bind(layout)
        if self.eval_navigation_first:
            nav_event = self.navigation_recognizer.step(sample)
            sel_event = self.selection_recognizer.step(sample)
        else:
            sel_event = self.selection_recognizer.step(sample)
            nav_event = self.navigation_recognizer.step(sample)
        self.last_candidates = (sel_event, nav_event)
        merged = self._arbitrate(sel_event, nav_event)
        if merged is not None:
            self.reset()
        return merged

    def _arbitrate(
        self, sel_event: Optional[RecognitionEvent], nav_event: Optional[RecognitionEvent]
    ) -> Optional[RecognitionEvent]:
        if sel_event is None:
            return nav_event
        if nav_event is None:
            return sel_event
        sel_scored = sel_event.score is not None
        nav_scored = nav_event.score is not None
        if sel_scored and nav_scored:
            # Highest correlation wins; the selection channel takes exact ties.
            return nav_event if nav_event.score > sel_event.score else sel_event
        if not sel_scored and not nav_scored:
            return sel_event
        dwell_event = nav_event if sel_scored else sel_event
        scored_event = sel_event if sel_scored else nav_event
        return dwell_event if self.dwell_precedence else scored_event


def build_arbiter(
    pairing: Pairing,
    config: EngineConfig,
    layout: ScreenLayout,
    dwell_precedence: bool = True,
) -> Arbiter:
    """Fresh arbiter for a pairing, validated against the layout's roles."""
    return Arbiter(pairing, config, layout, dwell_precedence=dwell_precedence)
