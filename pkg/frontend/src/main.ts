/** DOM wiring for the workbench: graph inspector, trajectory viewer, sweep
 * scatter. All data comes from the HTTP API via BrdlabClient. */
import { ApiError, BrdlabClient, type GraphResponse } from "./api.js";
import { parseSweepCsv } from "./csv.js";
import { circularLayout, forceLayout, type Point } from "./layout.js";
import { graphSvg, residualSvg, scatterSvg } from "./render.js";
import { medianSeries, scatterPoints, type Metric } from "./scatter.js";

const client = new BrdlabClient("");

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function setStatus(id: string, text: string, isError = false): void {
  const node = el<HTMLElement>(id);
  node.textContent = text;
  node.style.color = isError ? "#b00" : "#555";
}

function describeError(err: unknown): string {
  if (err instanceof ApiError) return `HTTP ${err.status}: ${err.message}`;
  return err instanceof Error ? err.message : String(err);
}

let currentGraph: GraphResponse | null = null;
let currentLayout: Point[] = [];

async function loadGraph(): Promise<void> {
  const spec = el<HTMLInputElement>("graph-spec").value.trim();
  setStatus("graph-status", "loading…");
  try {
    currentGraph = await client.graph(spec);
    const g = currentGraph.graph;
    currentLayout = g.n <= 200 ? forceLayout(g) : circularLayout(g.n);
    el("graph-view").innerHTML = graphSvg(g, currentLayout);
    const lam = Math.min(...currentGraph.spectrum);
    const thr = lam < 0 ? (1 / -lam).toFixed(4) : "none (λ_min ≥ 0)";
    setStatus(
      "graph-status",
      `n=${g.n}, edges=${g.edges.length}, λ_min=${lam.toFixed(4)}, threshold=${thr}`,
    );
  } catch (err) {
    setStatus("graph-status", describeError(err), true);
  }
}

async function runSimulation(): Promise<void> {
  if (!currentGraph) {
    setStatus("sim-status", "load a graph first", true);
    return;
  }
  const delta = Number(el<HTMLInputElement>("sim-delta").value);
  const seed = Number(el<HTMLInputElement>("sim-seed").value);
  setStatus("sim-status", "running…");
  try {
    const traj = await client.simulate({
      graph: currentGraph.graph,
      delta,
      seed,
    });
    el("trajectory-view").innerHTML = residualSvg(traj);
    el("graph-view").innerHTML = graphSvg(
      currentGraph.graph,
      currentLayout,
      traj.terminal,
    );
    const active = traj.terminal.filter((v) => v > 0).length;
    setStatus(
      "sim-status",
      `${traj.converged ? "converged" : "did not converge"} in ` +
        `${traj.rounds.toFixed(1)} rounds; ${traj.reshuffles.length} reshuffles; ` +
        `${active}/${traj.terminal.length} active`,
    );
  } catch (err) {
    setStatus("sim-status", describeError(err), true);
  }
}

let sweepJobId: string | null = null;

async function runSweep(): Promise<void> {
  const spec = el<HTMLInputElement>("sweep-graph").value.trim();
  const start = Number(el<HTMLInputElement>("sweep-start").value);
  const end = Number(el<HTMLInputElement>("sweep-end").value);
  const step = Number(el<HTMLInputElement>("sweep-step").value);
  const trials = Number(el<HTMLInputElement>("sweep-trials").value);
  setStatus("sweep-status", "submitting…");
  try {
    const handle = await client.startSweep({
      graph: spec,
      delta_grid: { start, end, step },
      trials,
    });
    sweepJobId = handle.id;
    for (;;) {
      const status = await client.jobStatus(handle.id);
      if (status.status === "failed") {
        setStatus("sweep-status", status.reason ?? "job failed", true);
        return;
      }
      drawSweep(status.rows.map((r) => ({ ...r })));
      setStatus(
        "sweep-status",
        `${status.status}, ${(status.progress * 100).toFixed(0)}% ` +
          `(${status.rows.length} rows)`,
      );
      if (status.status === "done") break;
      await new Promise((r) => setTimeout(r, 400));
    }
    const csv = await client.jobResultCsv(sweepJobId);
    drawSweep(parseSweepCsv(csv));
    setStatus("sweep-status", `done (${csv.split("\n").length - 1} rows)`);
  } catch (err) {
    setStatus("sweep-status", describeError(err), true);
  }
}

function drawSweep(rows: Parameters<typeof scatterPoints>[0]): void {
  if (rows.length === 0) return;
  const metric = el<HTMLSelectElement>("sweep-metric").value as Metric;
  const thresholds: Array<[number, string]> =
    currentGraph?.threshold_lines ?? [];
  el("sweep-view").innerHTML = scatterSvg(
    scatterPoints(rows, metric),
    medianSeries(rows, metric),
    thresholds,
    metric,
  );
}

async function cancelSweep(): Promise<void> {
  if (!sweepJobId) return;
  try {
    await client.cancelJob(sweepJobId);
    setStatus("sweep-status", "cancel requested");
  } catch (err) {
    setStatus("sweep-status", describeError(err), true);
  }
}

export function init(): void {
  el("graph-load").addEventListener("click", () => void loadGraph());
  el("sim-run").addEventListener("click", () => void runSimulation());
  el("sweep-run").addEventListener("click", () => void runSweep());
  el("sweep-cancel").addEventListener("click", () => void cancelSweep());
}

if (typeof document !== "undefined" && document.getElementById("graph-load")) {
  init();
}
