// Thin WebSocket wrapper: splits newline-delimited JSON, feeds the session
// store, reconnects with capped backoff. The store decides what each
// message means; this layer never touches interface state.

import { parseServerLine } from "./protocol.js";
import type { SessionStore } from "./session.js";

export interface SocketLike {
  send(data: string): void;
  close(): void;
  onopen: ((ev?: unknown) => void) | null;
  onclose: ((ev?: unknown) => void) | null;
  onmessage: ((ev: { data: unknown }) => void) | null;
  readyState: number;
}

export type SocketFactory = (url: string) => SocketLike;

export interface LiveConnection {
  send(line: string): void;
  close(): void;
}

const OPEN = 1;

export function connectLive(
  url: string,
  store: SessionStore,
  factory: SocketFactory = (u) => new WebSocket(u) as unknown as SocketLike,
): LiveConnection {
  let socket: SocketLike | null = null;
  let closed = false;
  let retryMs = 1000;

  const open = () => {
    store.setConnection("connecting");
    socket = factory(url);
    socket.onopen = () => {
      retryMs = 1000;
      store.setConnection("open");
    };
    socket.onmessage = (ev) => {
      for (const line of String(ev.data).split("\n")) {
        const msg = parseServerLine(line);
        if (msg) store.apply(msg);
      }
    };
    socket.onclose = () => {
      store.setConnection("closed");
      if (!closed) {
        setTimeout(open, retryMs);
        retryMs = Math.min(retryMs * 2, 8000);
      }
    };
  };

  open();

  return {
    send(line: string) {
      if (socket && socket.readyState === OPEN) socket.send(line);
    },
    close() {
      closed = true;
      socket?.close();
    },
  };
}
