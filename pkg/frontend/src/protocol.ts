// Wire protocol shared with the engine server: newline-delimited JSON over
// a WebSocket. The server is authoritative for all interface state.

export const PROTOCOL_VERSION = 1;

export interface WireTarget {
  id: string;
  x: number;
  y: number;
  diameter_pt: number;
  role: "selection" | "navigation-left" | "navigation-right" | "control";
  orbits: boolean;
  orbit_radius_pt: number | null;
}

export interface WireLayout {
  screen_id: string;
  width_pt: number;
  height_pt: number;
  edge_strip_width_pt: number;
  targets: WireTarget[];
}

export interface WireTask {
  app_target_id: string;
  start_track_index: number;
  target_track_index: number;
}

export interface StateSnapshot {
  pairing: string;
  screen: string;
  track_index: number | null;
  playing: boolean;
  feedback: [string, number] | null; // [target id, expiry t_ms]
  alert_until: number | null;
  gesture_navigation: boolean;
  task: WireTask;
  layout: WireLayout;
}

export interface HelloMessage {
  protocol_version: number;
  pairings: string[];
  pairing: string;
  sample_interval_ms: number;
}

export interface EventMessage {
  t_ms: number;
  technique: string;
  payload: string;
  score: number | null;
  pairing: string;
  screen_id: string;
}

export type OrbitPositions = Array<[string, number, number]>;

export type ServerMessage =
  | { kind: "hello"; hello: HelloMessage }
  | { kind: "state"; state: StateSnapshot }
  | { kind: "event"; event: EventMessage }
  | { kind: "orbits"; positions: OrbitPositions }
  | { kind: "error"; error: string };

export function parseServerLine(line: string): ServerMessage | null {
  const text = line.trim();
  if (!text) return null;
  let doc: any;
  try {
    doc = JSON.parse(text);
  } catch {
    return { kind: "error", error: `unparseable server line: ${text.slice(0, 80)}` };
  }
  if (doc.hello) return { kind: "hello", hello: doc.hello };
  if (doc.state) return { kind: "state", state: doc.state };
  if (doc.event) return { kind: "event", event: doc.event };
  if (doc.orbit_positions) return { kind: "orbits", positions: doc.orbit_positions };
  if (doc.error) return { kind: "error", error: String(doc.error) };
  return { kind: "error", error: `unrecognized server message: ${text.slice(0, 80)}` };
}

export interface GazeSampleOut {
  t_ms: number;
  x: number;
  y: number;
  valid: boolean;
}

export function sampleLine(sample: GazeSampleOut): string {
  return JSON.stringify({ sample }) + "\n";
}

export function setPairingLine(pairing: string): string {
  return JSON.stringify({ cmd: "set_pairing", pairing }) + "\n";
}

export function resetLine(): string {
  return JSON.stringify({ cmd: "reset" }) + "\n";
}
