/** Parser for the sweep CSV emitted by the service. */

export const CSV_HEADER =
  "delta,trial,seed,rounds,converged,last_change_round,n_reshuffles," +
  "terminal_stable,active_count,largest_component,isolated_active,active_edges";

export interface SweepRow {
  delta: number;
  trial: number;
  seed: number;
  rounds: number;
  converged: boolean;
  last_change_round: number | null;
  n_reshuffles: number;
  terminal_stable: boolean | null;
  active_count: number;
  largest_component: number;
  isolated_active: number;
  active_edges: number;
}

function parseBool(field: string): boolean | null {
  if (field === "true") return true;
  if (field === "false") return false;
  if (field === "") return null;
  throw new Error(`bad boolean field: ${JSON.stringify(field)}`);
}

function parseNum(field: string): number {
  const v = Number(field);
  if (field === "" || Number.isNaN(v)) {
    throw new Error(`bad numeric field: ${JSON.stringify(field)}`);
  }
  return v;
}

export function parseSweepCsv(text: string): SweepRow[] {
  const lines = text.split(/\r?\n/).filter((l) => l.length > 0);
  if (lines.length === 0) throw new Error("empty CSV");
  if (lines[0] !== CSV_HEADER) {
    throw new Error(`unexpected CSV header: ${lines[0]}`);
  }
  return lines.slice(1).map((line) => {
    const f = line.split(",");
    if (f.length !== 12) throw new Error(`expected 12 fields, got ${f.length}`);
    return {
      delta: parseNum(f[0]),
      trial: parseNum(f[1]),
      seed: parseNum(f[2]),
      rounds: parseNum(f[3]),
      converged: parseBool(f[4]) === true,
      last_change_round: f[5] === "" ? null : parseNum(f[5]),
      n_reshuffles: parseNum(f[6]),
      terminal_stable: parseBool(f[7]),
      active_count: parseNum(f[8]),
      largest_component: parseNum(f[9]),
      isolated_active: parseNum(f[10]),
      active_edges: parseNum(f[11]),
    };
  });
}
