// Client-side session state. The one rule: rendered state always equals the
// most recent server snapshot. Events and orbit positions are annotations;
// only a state message may change what screen/track/playing we draw, so a
// dropped connection freezes the view instead of guessing.

import type {
  EventMessage,
  HelloMessage,
  OrbitPositions,
  ServerMessage,
  StateSnapshot,
} from "./protocol.js";
import { PROTOCOL_VERSION } from "./protocol.js";

export type Connection = "connecting" | "open" | "closed";

export interface UiSessionState {
  connection: Connection;
  hello: HelloMessage | null;
  snapshot: StateSnapshot | null;
  orbitPositions: OrbitPositions;
  lastEvent: EventMessage | null;
  lastFrameT: number;
  error: string | null;
}

export function initialSessionState(): UiSessionState {
  return {
    connection: "connecting",
    hello: null,
    snapshot: null,
    orbitPositions: [],
    lastEvent: null,
    lastFrameT: 0,
    error: null,
  };
}

export class SessionStore {
  state: UiSessionState = initialSessionState();

  apply(msg: ServerMessage): void {
    switch (msg.kind) {
      case "hello":
        if (msg.hello.protocol_version !== PROTOCOL_VERSION) {
          this.state.error = `protocol version ${msg.hello.protocol_version} unsupported`;
          return;
        }
        this.state.hello = msg.hello;
        break;
      case "state":
        this.state.snapshot = msg.state;
        break;
      case "event":
        this.state.lastEvent = msg.event;
        this.state.lastFrameT = Math.max(this.state.lastFrameT, msg.event.t_ms);
        break;
      case "orbits":
        this.state.orbitPositions = msg.positions;
        break;
      case "error":
        this.state.error = msg.error;
        break;
    }
  }

  setConnection(connection: Connection): void {
    this.state.connection = connection;
    // no snapshot changes here: a closed socket freezes the last view
  }

  noteSampleSent(t_ms: number): void {
    this.state.lastFrameT = Math.max(this.state.lastFrameT, t_ms);
  }
}
