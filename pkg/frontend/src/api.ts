/** Typed client for the brdlab HTTP API. All data reaching the UI passes
 * through these zod schemas, so malformed server responses fail loudly. */
import { z } from "zod";

export const GraphJson = z.object({
  n: z.number().int().nonnegative(),
  edges: z.array(z.tuple([z.number().int(), z.number().int()])),
});
export type GraphJson = z.infer<typeof GraphJson>;

export const GraphResponse = z.object({
  graph: GraphJson,
  spectrum: z.array(z.number()),
  threshold_lines: z.array(z.tuple([z.number(), z.string()])),
});
export type GraphResponse = z.infer<typeof GraphResponse>;

export const TrajectoryJson = z.object({
  converged: z.boolean(),
  rounds: z.number(),
  last_change_round: z.number().nullable(),
  reshuffles: z.array(z.tuple([z.number(), z.number()])),
  active_changes: z.array(z.tuple([z.number(), z.number(), z.string()])),
  terminal: z.array(z.number()),
  residuals: z.array(z.tuple([z.number(), z.number()])),
});
export type TrajectoryJson = z.infer<typeof TrajectoryJson>;

export const JobHandle = z.object({
  id: z.string(),
  kind: z.string(),
  status: z.enum(["queued", "running", "done", "failed"]),
  progress: z.number(),
  reason: z.string().nullable(),
});
export type JobHandle = z.infer<typeof JobHandle>;

export const SweepRowJson = z.object({
  delta: z.number(),
  trial: z.number().int(),
  seed: z.number().int(),
  rounds: z.number(),
  converged: z.boolean(),
  last_change_round: z.number().nullable(),
  n_reshuffles: z.number().int(),
  terminal_stable: z.boolean().nullable(),
  active_count: z.number().int(),
  largest_component: z.number().int(),
  isolated_active: z.number().int(),
  active_edges: z.number().int(),
});
export type SweepRowJson = z.infer<typeof SweepRowJson>;

export const JobStatusResponse = JobHandle.extend({
  rows: z.array(SweepRowJson),
});
export type JobStatusResponse = z.infer<typeof JobStatusResponse>;

export const ActiveSetReportJson = z
  .object({
    s: z.array(z.number().int()),
    stability: z.string(),
  })
  .passthrough();
export type ActiveSetReportJson = z.infer<typeof ActiveSetReportJson>;

export const EquilibriaResponse = z.object({
  method: z.string(),
  stable: z.array(ActiveSetReportJson),
});
export type EquilibriaResponse = z.infer<typeof EquilibriaResponse>;

export class ApiError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
  }
}

async function request(
  base: string,
  method: string,
  path: string,
  body?: unknown,
): Promise<unknown> {
  const res = await fetch(base + path, {
    method,
    headers: body === undefined ? {} : { "Content-Type": "application/json" },
    body: body === undefined ? undefined : JSON.stringify(body),
  });
  if (!res.ok) {
    let detail = res.statusText;
    try {
      const payload = (await res.json()) as { detail?: unknown };
      if (payload.detail !== undefined) detail = String(payload.detail);
    } catch {
      /* non-JSON error body */
    }
    throw new ApiError(res.status, detail);
  }
  return res.json();
}

export interface SimulateBody {
  graph: string | GraphJson;
  delta: number;
  seed?: number;
  graph_seed?: number;
  epsilon?: number;
  epsilon_reshuffle?: number | null;
  max_rounds?: number;
  initial?: string | number[];
}

export class BrdlabClient {
  constructor(readonly base: string = "") {}

  async graph(spec: string, seed = 0): Promise<GraphResponse> {
    const raw = await request(
      this.base,
      "GET",
      `/api/graph?spec=${encodeURIComponent(spec)}&seed=${seed}`,
    );
    return GraphResponse.parse(raw);
  }

  async simulate(body: SimulateBody): Promise<TrajectoryJson> {
    const raw = (await request(this.base, "POST", "/api/simulate", body)) as {
      job?: unknown;
    };
    if (raw.job !== undefined) {
      const handle = JobHandle.parse(raw.job);
      const result = await this.awaitJob(handle.id);
      return TrajectoryJson.parse(result);
    }
    return TrajectoryJson.parse(raw);
  }

  async startSweep(body: unknown): Promise<JobHandle> {
    const raw = await request(this.base, "POST", "/api/sweep", body);
    return JobHandle.parse(raw);
  }

  async jobStatus(id: string): Promise<JobStatusResponse> {
    const raw = await request(this.base, "GET", `/api/jobs/${id}`);
    return JobStatusResponse.parse(raw);
  }

  async jobResultCsv(id: string): Promise<string> {
    const res = await fetch(`${this.base}/api/jobs/${id}/result`);
    if (!res.ok) throw new ApiError(res.status, res.statusText);
    return res.text();
  }

  async cancelJob(id: string): Promise<JobHandle> {
    const raw = await request(this.base, "POST", `/api/jobs/${id}/cancel`);
    return JobHandle.parse(raw);
  }

  async equilibria(spec: string, delta: number): Promise<EquilibriaResponse> {
    const raw = await request(
      this.base,
      "GET",
      `/api/equilibria?spec=${encodeURIComponent(spec)}&delta=${delta}`,
    );
    return EquilibriaResponse.parse(raw);
  }

  /** Poll a job until done; resolves with the JSON result payload. */
  async awaitJob(id: string, pollMs = 250, timeoutMs = 120_000): Promise<unknown> {
    const deadline = Date.now() + timeoutMs;
    for (;;) {
      const status = await this.jobStatus(id);
      if (status.status === "done") {
        return request(this.base, "GET", `/api/jobs/${id}/result?format=json`);
      }
      if (status.status === "failed") {
        throw new ApiError(500, status.reason ?? "job failed");
      }
      if (Date.now() > deadline) throw new ApiError(504, "job timed out");
      await new Promise((r) => setTimeout(r, pollMs));
    }
  }
}
