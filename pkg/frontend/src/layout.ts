/** Force-directed layout for small graphs, pure and deterministic so it can
 * be unit-tested. Positions are normalized to [0,1] x [0,1]. */
import type { GraphJson } from "./api.js";

export interface Point {
  x: number;
  y: number;
}

/** Deterministic pseudo-random stream (mulberry32). */
export function rngStream(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export function circularLayout(n: number): Point[] {
  const pts: Point[] = [];
  for (let i = 0; i < n; i++) {
    const a = (2 * Math.PI * i) / Math.max(1, n);
    pts.push({ x: 0.5 + 0.45 * Math.cos(a), y: 0.5 + 0.45 * Math.sin(a) });
  }
  return pts;
}

export function forceLayout(
  g: GraphJson,
  iterations = 150,
  seed = 1,
): Point[] {
  const n = g.n;
  if (n === 0) return [];
  const rand = rngStream(seed);
  const pos: Point[] = Array.from({ length: n }, () => ({
    x: rand(),
    y: rand(),
  }));
  const k = Math.sqrt(1 / n); // ideal edge length
  for (let it = 0; it < iterations; it++) {
    const disp: Point[] = Array.from({ length: n }, () => ({ x: 0, y: 0 }));
    // repulsion between all pairs
    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        let dx = pos[i].x - pos[j].x;
        let dy = pos[i].y - pos[j].y;
        let d = Math.hypot(dx, dy);
        if (d < 1e-9) {
          dx = rand() - 0.5;
          dy = rand() - 0.5;
          d = Math.hypot(dx, dy);
        }
        const f = (k * k) / d;
        disp[i].x += (dx / d) * f;
        disp[i].y += (dy / d) * f;
        disp[j].x -= (dx / d) * f;
        disp[j].y -= (dy / d) * f;
      }
    }
    // attraction along edges
    for (const [i, j] of g.edges) {
      const dx = pos[i].x - pos[j].x;
      const dy = pos[i].y - pos[j].y;
      const d = Math.hypot(dx, dy) || 1e-9;
      const f = (d * d) / k;
      disp[i].x -= (dx / d) * f;
      disp[i].y -= (dy / d) * f;
      disp[j].x += (dx / d) * f;
      disp[j].y += (dy / d) * f;
    }
    const temp = 0.1 * (1 - it / iterations);
    for (let i = 0; i < n; i++) {
      const d = Math.hypot(disp[i].x, disp[i].y) || 1e-9;
      const step = Math.min(d, temp);
      pos[i].x += (disp[i].x / d) * step;
      pos[i].y += (disp[i].y / d) * step;
    }
  }
  return normalize(pos);
}

/** Rescale positions into [0,1]^2 with a small margin. */
export function normalize(pts: Point[], margin = 0.05): Point[] {
  if (pts.length === 0) return [];
  const xs = pts.map((p) => p.x);
  const ys = pts.map((p) => p.y);
  const minX = Math.min(...xs);
  const maxX = Math.max(...xs);
  const minY = Math.min(...ys);
  const maxY = Math.max(...ys);
  const spanX = maxX - minX || 1;
  const spanY = maxY - minY || 1;
  const scale = 1 - 2 * margin;
  return pts.map((p) => ({
    x: margin + (scale * (p.x - minX)) / spanX,
    y: margin + (scale * (p.y - minY)) / spanY,
  }));
}
