// Pointer-as-gaze sampling: the pointer position is downsampled to one gaze
// sample per 33 ms tick (latest position wins) and converted from canvas
// client coordinates to layout points. Samples keep flowing while the
// pointer rests so dwell can accumulate; a pointer outside the canvas
// yields valid=false samples.

import type { GazeSampleOut } from "./protocol.js";

export interface CanvasRect {
  left: number;
  top: number;
  width: number;
  height: number;
}

export interface PointerPoint {
  x: number;
  y: number;
  inside: boolean;
}

export function toLayoutPt(
  clientX: number,
  clientY: number,
  rect: CanvasRect,
  layoutWidth: number,
  layoutHeight: number,
): PointerPoint {
  const fx = (clientX - rect.left) / rect.width;
  const fy = (clientY - rect.top) / rect.height;
  return {
    x: fx * layoutWidth,
    y: fy * layoutHeight,
    inside: fx >= 0 && fx <= 1 && fy >= 0 && fy <= 1,
  };
}

export class PointerSampler {
  private latest: PointerPoint | null = null;
  private lastT = -1;
  readonly intervalMs: number;

  constructor(intervalMs = 33) {
    this.intervalMs = intervalMs;
  }

  update(point: PointerPoint): void {
    this.latest = point;
  }

  markOutside(): void {
    if (this.latest) this.latest = { ...this.latest, inside: false };
  }

  /** One sample per tick, or null before any pointer contact. */
  tick(nowMs: number): GazeSampleOut | null {
    if (!this.latest) return null;
    let t = Math.round(nowMs);
    if (t <= this.lastT) t = this.lastT + 1; // timestamps must strictly increase
    this.lastT = t;
    return {
      t_ms: t,
      x: this.latest.x,
      y: this.latest.y,
      valid: this.latest.inside,
    };
  }
}
