import { describe, expect, it } from "vitest";
import { CSV_HEADER, parseSweepCsv } from "../src/csv.js";

const SAMPLE =
  CSV_HEADER +
  "\n0.5,0,12345,3.2,true,2.1,1,true,4,3,1,2\n" +
  "0.99,1,6789,100,false,99.5,0,,5,5,0,4\n";

describe("parseSweepCsv", () => {
  it("parses rows with all 12 fields", () => {
    const rows = parseSweepCsv(SAMPLE);
    expect(rows).toHaveLength(2);
    expect(rows[0]).toEqual({
      delta: 0.5,
      trial: 0,
      seed: 12345,
      rounds: 3.2,
      converged: true,
      last_change_round: 2.1,
      n_reshuffles: 1,
      terminal_stable: true,
      active_count: 4,
      largest_component: 3,
      isolated_active: 1,
      active_edges: 2,
    });
  });

  it("maps the empty terminal_stable cell to null", () => {
    const rows = parseSweepCsv(SAMPLE);
    expect(rows[1].terminal_stable).toBeNull();
    expect(rows[1].converged).toBe(false);
  });

  it("rejects a wrong header", () => {
    expect(() => parseSweepCsv("a,b,c\n1,2,3\n")).toThrow(/header/);
  });

  it("rejects short rows", () => {
    expect(() => parseSweepCsv(CSV_HEADER + "\n0.5,0,1\n")).toThrow(/12 fields/);
  });

  it("rejects malformed booleans and numbers", () => {
    const bad = CSV_HEADER + "\n0.5,0,1,2,yes,3,0,true,1,1,0,0\n";
    expect(() => parseSweepCsv(bad)).toThrow(/boolean/);
    const badNum = CSV_HEADER + "\nx,0,1,2,true,3,0,true,1,1,0,0\n";
    expect(() => parseSweepCsv(badNum)).toThrow(/numeric/);
  });
});
