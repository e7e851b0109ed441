/** Pointer-path handling for the orientation stroke tool. */

import type { StrokeWire } from "./api.js";

export type Point = [number, number];

export const MIN_SPACING_PX = 2;

/**
 * Downsample a raw pointer path so consecutive kept points are at least
 * `spacing` pixels apart (arc-length order preserved).  The final point is
 * always kept so the stroke reaches where the pointer lifted, unless it
 * coincides with the previous kept point.
 */
export function downsamplePath(path: Point[], spacing = MIN_SPACING_PX): Point[] {
  if (path.length === 0) return [];
  const kept: Point[] = [path[0]];
  for (let i = 1; i < path.length; i++) {
    const [px, py] = kept[kept.length - 1];
    const [x, y] = path[i];
    if (Math.hypot(x - px, y - py) >= spacing) kept.push([x, y]);
  }
  const last = path[path.length - 1];
  const tail = kept[kept.length - 1];
  if ((tail[0] !== last[0] || tail[1] !== last[1]) && kept.length >= 1) {
    if (Math.hypot(last[0] - tail[0], last[1] - tail[1]) > 0) kept.push([last[0], last[1]]);
  }
  return kept;
}

/**
 * Convert a raw pointer path into the shared wire format, or null when the
 * gesture is too short to form a stroke (single-point clicks are ignored).
 */
export function pathToStroke(path: Point[], radius: number, spacing = MIN_SPACING_PX): StrokeWire | null {
  const pts = downsamplePath(path, spacing);
  if (pts.length < 2) return null;
  return { points: pts.map(([x, y]) => [x, y] as [number, number]), radius };
}
