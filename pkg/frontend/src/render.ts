/** SVG string builders. Pure string generation so they are testable without
 * a DOM; `main.ts` injects the output via innerHTML. */
import type { GraphJson, TrajectoryJson } from "./api.js";
import type { Point } from "./layout.js";
import { linearScale, paddedExtent, type ScatterPoint } from "./scatter.js";

function esc(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function graphSvg(
  g: GraphJson,
  pos: Point[],
  values: number[] | null = null,
  width = 480,
  height = 480,
): string {
  const parts: string[] = [
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${width} ${height}" ` +
      `width="${width}" height="${height}">`,
  ];
  for (const [i, j] of g.edges) {
    parts.push(
      `<line x1="${(pos[i].x * width).toFixed(1)}" y1="${(pos[i].y * height).toFixed(1)}" ` +
        `x2="${(pos[j].x * width).toFixed(1)}" y2="${(pos[j].y * height).toFixed(1)}" ` +
        `stroke="#999" stroke-width="1"/>`,
    );
  }
  for (let i = 0; i < g.n; i++) {
    const v = values ? values[i] : 0.5;
    const fill = v > 0 ? `rgba(31,119,180,${(0.25 + 0.75 * v).toFixed(3)})` : "#ddd";
    const r = g.n > 120 ? 3 : 7;
    parts.push(
      `<circle cx="${(pos[i].x * width).toFixed(1)}" cy="${(pos[i].y * height).toFixed(1)}" ` +
        `r="${r}" fill="${fill}" stroke="#333" stroke-width="0.8">` +
        `<title>${i}${values ? `: ${values[i].toFixed(4)}` : ""}</title></circle>`,
    );
  }
  parts.push("</svg>");
  return parts.join("");
}

export function residualSvg(
  traj: TrajectoryJson,
  width = 640,
  height = 240,
): string {
  const pts = traj.residuals.filter(([, d]) => d > 0);
  if (pts.length === 0) {
    return `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}"></svg>`;
  }
  const xs = linearScale(paddedExtent(pts.map(([t]) => t)), [40, width - 10]);
  const logs = pts.map(([, d]) => Math.log10(d));
  const ys = linearScale(paddedExtent(logs), [height - 20, 10]);
  const path = pts
    .map(([t, d], i) => `${i === 0 ? "M" : "L"}${xs(t).toFixed(1)},${ys(Math.log10(d)).toFixed(1)}`)
    .join(" ");
  const marks = traj.reshuffles
    .map(
      ([t]) =>
        `<line x1="${xs(t).toFixed(1)}" y1="10" x2="${xs(t).toFixed(1)}" ` +
        `y2="${height - 20}" stroke="#d62728" stroke-dasharray="4 3"/>`,
    )
    .join("");
  return (
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${width} ${height}" ` +
    `width="${width}" height="${height}">` +
    `<path d="${path}" fill="none" stroke="#1f77b4" stroke-width="1.5"/>` +
    marks +
    `<text x="6" y="${height / 2}" font-size="10" transform="rotate(-90 10 ${height / 2})">log10 residual</text>` +
    `<text x="${width / 2}" y="${height - 4}" font-size="10">step</text>` +
    "</svg>"
  );
}

export function scatterSvg(
  points: ScatterPoint[],
  medians: Array<{ delta: number; median: number }>,
  thresholds: Array<[number, string]>,
  metricLabel: string,
  width = 640,
  height = 320,
): string {
  if (points.length === 0) {
    return `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}"></svg>`;
  }
  const xs = linearScale(paddedExtent(points.map((p) => p.delta)), [45, width - 10]);
  const ys = linearScale(paddedExtent(points.map((p) => p.value)), [height - 25, 10]);
  const parts: string[] = [
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${width} ${height}" ` +
      `width="${width}" height="${height}">`,
  ];
  for (const [v] of thresholds) {
    if (v < xs.domain[0] || v > xs.domain[1]) continue;
    parts.push(
      `<line x1="${xs(v).toFixed(1)}" y1="10" x2="${xs(v).toFixed(1)}" ` +
        `y2="${height - 25}" stroke="#aaa" stroke-dasharray="2 3"/>`,
    );
  }
  for (const p of points) {
    const color = p.converged ? "#1f77b4" : "#d62728";
    parts.push(
      `<circle cx="${xs(p.delta).toFixed(1)}" cy="${ys(p.value).toFixed(1)}" r="2.2" ` +
        `fill="${color}" fill-opacity="0.45"/>`,
    );
  }
  if (medians.length > 1) {
    const path = medians
      .map((m, i) => `${i === 0 ? "M" : "L"}${xs(m.delta).toFixed(1)},${ys(m.median).toFixed(1)}`)
      .join(" ");
    parts.push(`<path d="${path}" fill="none" stroke="#ff7f0e" stroke-width="2"/>`);
  }
  parts.push(
    `<text x="6" y="${height / 2}" font-size="10" transform="rotate(-90 10 ${height / 2})">${esc(metricLabel)}</text>`,
    `<text x="${width / 2}" y="${height - 6}" font-size="10">delta</text>`,
    "</svg>",
  );
  return parts.join("");
}
