import { afterEach, describe, expect, it, vi } from "vitest";
import {
  ApiError,
  BrdlabClient,
  GraphResponse,
  JobStatusResponse,
  TrajectoryJson,
} from "../src/api.js";

const TRAJ = {
  converged: true,
  rounds: 4.2,
  last_change_round: 3.1,
  reshuffles: [[17, 2]],
  active_changes: [[17, 2, "activated"]],
  terminal: [1, 0, 1],
  residuals: [[1, 0.5], [2, 0.01]],
};

function mockFetch(responses: Array<{ status?: number; body: unknown }>) {
  const calls: Array<{ url: string; init?: RequestInit }> = [];
  let i = 0;
  vi.stubGlobal("fetch", async (url: string, init?: RequestInit) => {
    calls.push({ url, init });
    const r = responses[Math.min(i++, responses.length - 1)];
    const status = r.status ?? 200;
    return {
      ok: status < 400,
      status,
      statusText: `status ${status}`,
      json: async () => r.body,
      text: async () => (typeof r.body === "string" ? r.body : JSON.stringify(r.body)),
    } as Response;
  });
  return calls;
}

afterEach(() => vi.unstubAllGlobals());

describe("schemas", () => {
  it("accepts a valid trajectory and rejects a truncated one", () => {
    expect(TrajectoryJson.parse(TRAJ).converged).toBe(true);
    expect(() => TrajectoryJson.parse({ converged: true })).toThrow();
  });

  it("validates a graph response", () => {
    const resp = GraphResponse.parse({
      graph: { n: 2, edges: [[0, 1]] },
      spectrum: [-1, 1],
      threshold_lines: [[1, "-"]],
    });
    expect(resp.graph.n).toBe(2);
  });

  it("validates a job status payload with rows", () => {
    const parsed = JobStatusResponse.parse({
      id: "j1",
      kind: "sweep",
      status: "running",
      progress: 0.5,
      reason: null,
      rows: [
        {
          delta: 0.5,
          trial: 0,
          seed: 1,
          rounds: 2,
          converged: true,
          last_change_round: 1,
          n_reshuffles: 0,
          terminal_stable: true,
          active_count: 1,
          largest_component: 1,
          isolated_active: 0,
          active_edges: 0,
        },
      ],
    });
    expect(parsed.rows).toHaveLength(1);
  });
});

describe("BrdlabClient", () => {
  it("returns a synchronous simulate result directly", async () => {
    const calls = mockFetch([{ body: TRAJ }]);
    const client = new BrdlabClient("http://x");
    const traj = await client.simulate({ graph: "path:3", delta: 0.5 });
    expect(traj.rounds).toBeCloseTo(4.2);
    expect(calls[0].url).toBe("http://x/api/simulate");
    expect(calls[0].init?.method).toBe("POST");
  });

  it("polls the job endpoints when simulate returns a job", async () => {
    const handle = { id: "j9", kind: "simulate", status: "queued", progress: 0, reason: null };
    const calls = mockFetch([
      { body: { job: handle } },
      { body: { ...handle, status: "done", progress: 1, rows: [] } },
      { body: TRAJ },
    ]);
    const client = new BrdlabClient("");
    const traj = await client.simulate({ graph: "path:3", delta: 0.5 });
    expect(traj.converged).toBe(true);
    expect(calls.map((c) => c.url)).toEqual([
      "/api/simulate",
      "/api/jobs/j9",
      "/api/jobs/j9/result?format=json",
    ]);
  });

  it("surfaces HTTP error details as ApiError", async () => {
    mockFetch([{ status: 413, body: { detail: "n=5000 over cap 2000" } }]);
    const client = new BrdlabClient("");
    await expect(client.graph("path:5000")).rejects.toThrowError(ApiError);
    await expect(client.graph("path:5000")).rejects.toThrow(/over cap/);
  });

  it("rejects a malformed server payload", async () => {
    mockFetch([{ body: { graph: { n: "two", edges: [] } } }]);
    const client = new BrdlabClient("");
    await expect(client.graph("path:2")).rejects.toThrow();
  });

  it("fails a job poll when the job failed", async () => {
    const handle = { id: "j1", kind: "sweep", status: "failed", progress: 0, reason: "cancelled", rows: [] };
    mockFetch([{ body: handle }]);
    const client = new BrdlabClient("");
    await expect(client.awaitJob("j1")).rejects.toThrow(/cancelled/);
  });
});
