// Application entry: wires the canvas, the pairing menu, the pointer
// sampler, and the live socket together. The render loop draws whatever the
// session store holds; nothing here advances interface state on its own.

import { nextBurst, type Pt } from "./playback.js";
import { PointerSampler, toLayoutPt } from "./pointer.js";
import { resetLine, sampleLine, setPairingLine } from "./protocol.js";
import { renderFrame, type Draw2D } from "./render.js";
import { SessionStore } from "./session.js";
import { connectLive } from "./socket.js";

const LAYOUT_W = 375;
const LAYOUT_H = 812;

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

export function boot(): void {
  const canvas = el<HTMLCanvasElement>("screen");
  canvas.width = LAYOUT_W;
  canvas.height = LAYOUT_H;
  const ctx = canvas.getContext("2d") as unknown as Draw2D;
  const pairingSelect = el<HTMLSelectElement>("pairing");
  const resetButton = el<HTMLButtonElement>("reset");
  const demoButton = el<HTMLButtonElement>("demo");
  const status = el<HTMLSpanElement>("status");

  const store = new SessionStore();
  const proto = location.protocol === "https:" ? "wss" : "ws";
  const host = location.hostname || "127.0.0.1";
  const port = new URLSearchParams(location.search).get("port") ?? "8000";
  const live = connectLive(`${proto}://${host}:${port}/ws`, store);

  const sampler = new PointerSampler(33);
  const t0 = performance.now();
  let scripted: Pt[] = [];

  canvas.addEventListener("pointermove", (ev) => {
    scripted = []; // a real pointer takes over from the scripted demo
    const rect = canvas.getBoundingClientRect();
    sampler.update(toLayoutPt(ev.clientX, ev.clientY, rect, LAYOUT_W, LAYOUT_H));
  });
  canvas.addEventListener("pointerleave", () => sampler.markOutside());

  setInterval(() => {
    if (store.state.connection !== "open") return;
    if (scripted.length > 0) {
      const pt = scripted.shift()!;
      sampler.update({ x: pt.x, y: pt.y, inside: true });
    }
    const sample = sampler.tick(performance.now() - t0);
    if (sample) {
      store.noteSampleSent(sample.t_ms);
      live.send(sampleLine(sample));
    }
  }, 33);

  let knownPairings = "";
  const render = () => {
    const s = store.state;
    if (s.hello && knownPairings !== s.hello.pairings.join()) {
      knownPairings = s.hello.pairings.join();
      pairingSelect.innerHTML = "";
      for (const name of s.hello.pairings) {
        const opt = document.createElement("option");
        opt.value = name;
        opt.textContent = name;
        pairingSelect.appendChild(opt);
      }
      pairingSelect.value = s.hello.pairing;
    }
    if (s.snapshot && pairingSelect.value !== s.snapshot.pairing) {
      pairingSelect.value = s.snapshot.pairing;
    }
    status.textContent =
      s.connection === "open"
        ? s.error ?? `${s.snapshot?.pairing ?? ""} | ${s.snapshot?.screen ?? ""}`
        : s.connection;
    renderFrame(ctx, s);
    requestAnimationFrame(render);
  };
  requestAnimationFrame(render);

  // when the scripted demo runs out mid-step, re-plan from the snapshot
  setInterval(() => {
    if (demoButton.dataset.running === "1" && scripted.length === 0 && store.state.snapshot) {
      if (store.state.snapshot.playing) {
        demoButton.dataset.running = "0";
        return;
      }
      const at = lastPointer();
      scripted = nextBurst(store.state.snapshot, at);
    }
  }, 100);

  const lastPointer = (): Pt => {
    const snap = store.state.snapshot;
    return { x: (snap?.layout.width_pt ?? LAYOUT_W) / 2, y: (snap?.layout.height_pt ?? LAYOUT_H) / 2 };
  };

  pairingSelect.addEventListener("change", () => {
    scripted = [];
    live.send(setPairingLine(pairingSelect.value));
  });
  resetButton.addEventListener("click", () => {
    scripted = [];
    live.send(resetLine());
  });
  demoButton.addEventListener("click", () => {
    demoButton.dataset.running = "1";
    scripted = [];
    live.send(resetLine());
  });
}

boot();
