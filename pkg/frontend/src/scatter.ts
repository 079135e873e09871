/** Pure helpers that turn sweep rows into plottable point sets and scales. */
import type { SweepRow } from "./csv.js";

export type Metric =
  | "rounds"
  | "last_change_round"
  | "n_reshuffles"
  | "active_count"
  | "largest_component"
  | "active_edges";

export interface ScatterPoint {
  delta: number;
  value: number;
  converged: boolean;
}

export function scatterPoints(rows: SweepRow[], metric: Metric): ScatterPoint[] {
  const pts: ScatterPoint[] = [];
  for (const r of rows) {
    const v = r[metric];
    if (v === null) continue;
    pts.push({ delta: r.delta, value: v, converged: r.converged });
  }
  return pts;
}

/** Median of `metric` per delta value, sorted by delta. */
export function medianSeries(
  rows: SweepRow[],
  metric: Metric,
): Array<{ delta: number; median: number }> {
  const byDelta = new Map<number, number[]>();
  for (const r of rows) {
    const v = r[metric];
    if (v === null) continue;
    const bucket = byDelta.get(r.delta);
    if (bucket) bucket.push(v);
    else byDelta.set(r.delta, [v]);
  }
  const out: Array<{ delta: number; median: number }> = [];
  for (const [delta, values] of byDelta) {
    values.sort((a, b) => a - b);
    const m = values.length;
    const median =
      m % 2 === 1 ? values[(m - 1) / 2] : (values[m / 2 - 1] + values[m / 2]) / 2;
    out.push({ delta, median });
  }
  out.sort((a, b) => a.delta - b.delta);
  return out;
}

export interface LinearScale {
  (v: number): number;
  domain: [number, number];
  range: [number, number];
}

export function linearScale(
  domain: [number, number],
  range: [number, number],
): LinearScale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const span = d1 - d0 || 1;
  const fn = ((v: number) => r0 + ((v - d0) / span) * (r1 - r0)) as LinearScale;
  fn.domain = domain;
  fn.range = range;
  return fn;
}

/** Domain padded by 5% on each side; degenerate domains get a unit span. */
export function paddedExtent(values: number[]): [number, number] {
  if (values.length === 0) return [0, 1];
  let lo = Math.min(...values);
  let hi = Math.max(...values);
  if (lo === hi) {
    lo -= 0.5;
    hi += 0.5;
  }
  const pad = 0.05 * (hi - lo);
  return [lo - pad, hi + pad];
}
