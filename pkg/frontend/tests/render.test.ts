import { describe, expect, it } from "vitest";
import { circularLayout } from "../src/layout.js";
import { graphSvg, residualSvg, scatterSvg } from "../src/render.js";

const P3 = { n: 3, edges: [[0, 1], [1, 2]] as [number, number][] };

describe("graphSvg", () => {
  it("emits one line per edge and one circle per vertex", () => {
    const svg = graphSvg(P3, circularLayout(3));
    expect(svg.match(/<line /g)).toHaveLength(2);
    expect(svg.match(/<circle /g)).toHaveLength(3);
    expect(svg.startsWith("<svg")).toBe(true);
    expect(svg.endsWith("</svg>")).toBe(true);
  });

  it("greys out inactive vertices when values are given", () => {
    const svg = graphSvg(P3, circularLayout(3), [1, 0, 0.5]);
    expect(svg).toContain('fill="#ddd"');
    expect(svg).toContain("rgba(31,119,180");
  });
});

describe("residualSvg", () => {
  const traj = {
    converged: true,
    rounds: 2,
    last_change_round: 1,
    reshuffles: [[5, 0]] as Array<[number, number]>,
    active_changes: [],
    terminal: [1, 0],
    residuals: [[1, 0.5], [2, 0.05], [3, 0.005]] as Array<[number, number]>,
  };

  it("draws the residual path and reshuffle markers", () => {
    const svg = residualSvg(traj);
    expect(svg).toContain("<path");
    expect(svg).toContain("stroke-dasharray");
  });

  it("copes with an empty residual history", () => {
    const svg = residualSvg({ ...traj, residuals: [], reshuffles: [] });
    expect(svg.startsWith("<svg")).toBe(true);
  });
});

describe("scatterSvg", () => {
  const pts = [
    { delta: 0.3, value: 2, converged: true },
    { delta: 0.6, value: 50, converged: false },
  ];

  it("draws points, a median line, and threshold markers", () => {
    const svg = scatterSvg(
      pts,
      [{ delta: 0.3, median: 2 }, { delta: 0.6, median: 50 }],
      [[0.5, "-"]],
      "rounds",
    );
    expect(svg.match(/<circle /g)).toHaveLength(2);
    expect(svg).toContain('stroke="#ff7f0e"');
    expect(svg).toContain("stroke-dasharray");
    expect(svg).toContain("rounds");
  });

  it("escapes the metric label", () => {
    const svg = scatterSvg(pts, [], [], "<rounds>");
    expect(svg).not.toContain("<rounds>");
    expect(svg).toContain("&lt;rounds&gt;");
  });
});
