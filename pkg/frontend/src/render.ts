// Canvas rendering of the authoritative server snapshot. Targets draw at
// their server-declared size, orbiting circles draw only at server-reported
// positions (never extrapolated locally), feedback targets fill yellow
// while the snapshot carries them, and the alert banner mirrors
// snapshot.alert_until. Edge strips are shaded when gesture navigation is
// active.

import type { UiSessionState } from "./session.js";
import type { WireTarget } from "./protocol.js";

// Structural subset of CanvasRenderingContext2D so tests can record calls.
export interface Draw2D {
  fillStyle: string;
  strokeStyle: string;
  lineWidth: number;
  font: string;
  textAlign: string;
  textBaseline: string;
  clearRect(x: number, y: number, w: number, h: number): void;
  fillRect(x: number, y: number, w: number, h: number): void;
  beginPath(): void;
  arc(x: number, y: number, r: number, a0: number, a1: number): void;
  fill(): void;
  stroke(): void;
  fillText(text: string, x: number, y: number): void;
}

export const COLORS = {
  background: "#101418",
  screen: "#1c2127",
  strip: "rgba(120, 170, 255, 0.14)",
  target: "#2e3742",
  targetEdge: "#55606e",
  feedback: "#ffd60a",
  orbit: "#4dabf7",
  text: "#dbe2ea",
  alert: "#e0383d",
  complete: "#37b24d",
};

const ORBIT_DOT_RADIUS = 9;

function targetLabel(t: WireTarget, trackIndex: number | null): string {
  if (t.id.startsWith("app_")) return `App ${t.id.slice(4)}`;
  switch (t.id) {
    case "nav_left":
      return "<";
    case "nav_right":
      return ">";
    case "prev":
      return "|<";
    case "next":
      return ">|";
    case "play":
      return trackIndex === null ? "play" : "play";
    default:
      return t.id;
  }
}

function drawCircle(ctx: Draw2D, x: number, y: number, r: number, fill: string, edge: string): void {
  ctx.beginPath();
  ctx.arc(x, y, r, 0, Math.PI * 2);
  ctx.fillStyle = fill;
  ctx.fill();
  ctx.strokeStyle = edge;
  ctx.lineWidth = 2;
  ctx.stroke();
}

export function renderFrame(ctx: Draw2D, session: UiSessionState): void {
  const snap = session.snapshot;
  if (!snap) {
    ctx.fillStyle = COLORS.background;
    ctx.clearRect(0, 0, 375, 812);
    ctx.fillRect(0, 0, 375, 812);
    ctx.fillStyle = COLORS.text;
    ctx.font = "16px system-ui";
    ctx.textAlign = "center";
    ctx.textBaseline = "middle";
    ctx.fillText(session.connection === "closed" ? "disconnected" : "connecting...", 187, 400);
    return;
  }
  const layout = snap.layout;
  const w = layout.width_pt;
  const h = layout.height_pt;
  ctx.clearRect(0, 0, w, h);
  ctx.fillStyle = COLORS.screen;
  ctx.fillRect(0, 0, w, h);

  if (snap.gesture_navigation) {
    const strip = layout.edge_strip_width_pt;
    ctx.fillStyle = COLORS.strip;
    ctx.fillRect(0, 0, strip, h);
    ctx.fillRect(w - strip, 0, strip, h);
  }

  const feedbackId = snap.feedback ? snap.feedback[0] : null;
  for (const target of layout.targets) {
    const fill = target.id === feedbackId ? COLORS.feedback : COLORS.target;
    drawCircle(ctx, target.x, target.y, target.diameter_pt / 2, fill, COLORS.targetEdge);
    ctx.fillStyle = target.id === feedbackId ? "#1a1a1a" : COLORS.text;
    ctx.font = "13px system-ui";
    ctx.textAlign = "center";
    ctx.textBaseline = "middle";
    ctx.fillText(targetLabel(target, snap.track_index), target.x, target.y);
  }

  // orbiting circles exactly where the server last said they are
  for (const [id, ox, oy] of session.orbitPositions) {
    if (!layout.targets.some((t) => t.id === id && t.orbits)) continue;
    drawCircle(ctx, ox, oy, ORBIT_DOT_RADIUS, COLORS.orbit, COLORS.orbit);
  }

  // strip feedback after a gesture: shade the struck side brighter
  if (feedbackId === "strip_left" || feedbackId === "strip_right") {
    const strip = layout.edge_strip_width_pt;
    ctx.fillStyle = "rgba(255, 214, 10, 0.35)";
    ctx.fillRect(feedbackId === "strip_left" ? 0 : w - strip, 0, strip, h);
  }

  ctx.fillStyle = COLORS.text;
  ctx.font = "15px system-ui";
  ctx.textAlign = "center";
  ctx.textBaseline = "middle";
  if (snap.screen === "player") {
    ctx.fillText(`Track ${(snap.track_index ?? 0) + 1} / 30`, w / 2, 300);
    ctx.fillText(
      snap.track_index === snap.task.target_track_index ? "(requested track)" : " ",
      w / 2,
      330,
    );
  } else {
    ctx.fillText(snap.screen === "home1" ? "Home 1 / 2" : "Home 2 / 2", w / 2, 120);
    ctx.fillText(`open ${snap.task.app_target_id}`, w / 2, 148);
  }

  if (snap.alert_until !== null) {
    ctx.fillStyle = COLORS.alert;
    ctx.fillRect(0, 0, w, 40);
    ctx.fillStyle = "#ffffff";
    ctx.font = "14px system-ui";
    ctx.fillText("wrong app", w / 2, 20);
  }

  if (snap.playing) {
    ctx.fillStyle = COLORS.complete;
    ctx.fillRect(0, h / 2 - 30, w, 60);
    ctx.fillStyle = "#ffffff";
    ctx.font = "18px system-ui";
    ctx.fillText("playing - task complete", w / 2, h / 2);
  }
}
