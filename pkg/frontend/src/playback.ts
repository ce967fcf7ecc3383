// Scripted pointer playback: given the current server snapshot, produce the
// pointer path for the next correct step of the task (stroke into a strip,
// or hold a target center long enough to dwell). The driver replays one
// burst, watches for the snapshot to change, and re-plans, so the whole
// task runs hands-free against a live server.

import type { StateSnapshot, WireTarget } from "./protocol.js";

export interface Pt {
  x: number;
  y: number;
}

function minimumJerk(tau: number): number {
  return tau * tau * tau * (10 + tau * (-15 + 6 * tau));
}

function target(snapshot: StateSnapshot, id: string): WireTarget {
  const t = snapshot.layout.targets.find((t) => t.id === id);
  if (!t) throw new Error(`target ${id} missing from screen ${snapshot.screen}`);
  return t;
}

function strokePath(snapshot: StateSnapshot, direction: "left" | "right", fromY: number): Pt[] {
  const w = snapshot.layout.width_pt;
  const strip = snapshot.layout.edge_strip_width_pt;
  const x0 = direction === "right" ? w * 0.25 : w * 0.75;
  const x1 = direction === "right" ? w - strip / 2 : strip / 2;
  const y = Math.min(Math.max(fromY, 60), snapshot.layout.height_pt - 60);
  const path: Pt[] = [];
  for (let i = 0; i < 30; i++) {
    path.push({ x: x0 + (x1 - x0) * minimumJerk(i / 29), y });
  }
  for (let i = 0; i < 5; i++) path.push({ x: x1, y }); // let the window settle in-strip
  return path;
}

function holdPath(center: Pt, ticks = 30): Pt[] {
  return Array.from({ length: ticks }, () => ({ x: center.x, y: center.y }));
}

function settle(at: Pt, ticks = 6): Pt[] {
  return holdPath(at, ticks);
}

/**
 * The pointer path for the next correct action, starting from `current`.
 * Assumes the noiseless DwellGestures-style task flow: selection by holding
 * (dwell) and navigation by strokes when gesture navigation is active, by
 * holding the navigation buttons otherwise.
 */
export function nextBurst(snapshot: StateSnapshot, current: Pt): Pt[] {
  if (snapshot.playing) return [];
  const strokes = snapshot.gesture_navigation;
  if (snapshot.screen === "home1") {
    return strokes
      ? [...settle(current), ...strokePath(snapshot, "right", current.y)]
      : [...settle(current), ...holdPath(target(snapshot, "nav_right"), 32)];
  }
  if (snapshot.screen === "home2") {
    const app = target(snapshot, snapshot.task.app_target_id);
    return [...settle(current), ...holdPath(app, 32)];
  }
  // player
  const track = snapshot.track_index ?? 0;
  const goal = snapshot.task.target_track_index;
  if (track === goal) {
    return [...settle(current), ...holdPath(target(snapshot, "play"), 32)];
  }
  const direction = goal > track ? "right" : "left";
  if (strokes) {
    return [...settle(current), ...strokePath(snapshot, direction, current.y)];
  }
  const button = target(snapshot, direction === "right" ? "next" : "prev");
  return [...settle(current), ...holdPath(button, 32)];
}
