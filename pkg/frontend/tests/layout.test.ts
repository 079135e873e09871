import { describe, expect, it } from "vitest";
import { circularLayout, forceLayout, normalize, rngStream } from "../src/layout.js";

describe("rngStream", () => {
  it("is deterministic and in [0,1)", () => {
    const a = rngStream(7);
    const b = rngStream(7);
    for (let i = 0; i < 100; i++) {
      const va = a();
      expect(va).toBe(b());
      expect(va).toBeGreaterThanOrEqual(0);
      expect(va).toBeLessThan(1);
    }
  });
});

describe("circularLayout", () => {
  it("places n points on a circle around the center", () => {
    const pts = circularLayout(8);
    expect(pts).toHaveLength(8);
    for (const p of pts) {
      const r = Math.hypot(p.x - 0.5, p.y - 0.5);
      expect(r).toBeCloseTo(0.45, 10);
    }
  });
});

describe("forceLayout", () => {
  const p4 = { n: 4, edges: [[0, 1], [1, 2], [2, 3]] as [number, number][] };

  it("is deterministic for a fixed seed", () => {
    const a = forceLayout(p4, 50, 3);
    const b = forceLayout(p4, 50, 3);
    expect(a).toEqual(b);
  });

  it("keeps positions inside the unit square", () => {
    const pts = forceLayout(p4, 80, 1);
    for (const p of pts) {
      expect(p.x).toBeGreaterThanOrEqual(0);
      expect(p.x).toBeLessThanOrEqual(1);
      expect(p.y).toBeGreaterThanOrEqual(0);
      expect(p.y).toBeLessThanOrEqual(1);
    }
  });

  it("places path endpoints farther apart than adjacent vertices", () => {
    const pts = forceLayout(p4, 150, 1);
    const d = (i: number, j: number) =>
      Math.hypot(pts[i].x - pts[j].x, pts[i].y - pts[j].y);
    expect(d(0, 3)).toBeGreaterThan(d(0, 1));
  });

  it("handles the empty graph", () => {
    expect(forceLayout({ n: 0, edges: [] })).toEqual([]);
  });
});

describe("normalize", () => {
  it("rescales to the margin box", () => {
    const pts = normalize(
      [{ x: -3, y: 10 }, { x: 5, y: 30 }],
      0.05,
    );
    expect(pts[0].x).toBeCloseTo(0.05, 10);
    expect(pts[1].x).toBeCloseTo(0.95, 10);
    expect(pts[0].y).toBeCloseTo(0.05, 10);
    expect(pts[1].y).toBeCloseTo(0.95, 10);
  });

  it("handles degenerate spans without NaN", () => {
    const pts = normalize([{ x: 1, y: 1 }, { x: 1, y: 1 }]);
    for (const p of pts) {
      expect(Number.isFinite(p.x)).toBe(true);
      expect(Number.isFinite(p.y)).toBe(true);
    }
  });
});
