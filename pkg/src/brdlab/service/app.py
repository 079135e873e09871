"""HTTP facade over simulate, sweep, spectrum, and equilibria.

Error conventions: 400 malformed body or bad query spec, 404 unknown job,
413 over the size cap, 422 infeasible generator parameters, 429 sweep
budget exceeded.
"""

from __future__ import annotations

import os

from fastapi import FastAPI, HTTPException, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, PlainTextResponse

from ..dynamics import DynamicsConfig, run
from ..equilibria import enumerate_path_configurations, solve_on_active_set
from ..graphs import GenerationError, Graph, InputError, build_graph, parse_graph_spec, path
from ..spectral import eigenvalues_sym
from ..sweeps import SweepSpec, preset, rows_to_csv, sweep, threshold_lines
from .jobs import JobTable
from .models import InlineGraph, JobHandle, SimulateRequest, SweepRequest

N_CAP = int(os.environ.get("BRDLAB_N_CAP", "2000"))
SWEEP_BUDGET = int(os.environ.get("BRDLAB_SWEEP_BUDGET", "100000"))
WORKERS = int(os.environ.get("BRDLAB_WORKERS", "2"))
SYNC_WORK_LIMIT = 2_000_000  # n * max_rounds under which simulate is synchronous

app = FastAPI(title="brdlab", version="0.1.0")
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_methods=["*"],
    allow_headers=["*"],
)
jobs = JobTable(workers=WORKERS)


@app.exception_handler(RequestValidationError)
async def _validation_handler(request: Request, exc: RequestValidationError):
    return JSONResponse(status_code=400, content={"detail": str(exc)})


def _resolve_graph(spec: str | InlineGraph, seed: int = 0) -> Graph:
    try:
        if isinstance(spec, InlineGraph):
            g = build_graph(spec.n, spec.edges)
        else:
            g = parse_graph_spec(spec, seed=seed)
    except (InputError, GenerationError) as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    if g.n > N_CAP:
        raise HTTPException(status_code=413, detail=f"n={g.n} over cap {N_CAP}")
    return g


@app.post("/api/simulate")
def api_simulate(req: SimulateRequest):
    g = _resolve_graph(req.graph, seed=req.graph_seed)
    initial = req.initial if isinstance(req.initial, str) else tuple(req.initial)
    try:
        cfg = DynamicsConfig(
            delta=req.delta,
            epsilon=req.epsilon,
            epsilon_reshuffle=req.epsilon_reshuffle,
            max_rounds=req.max_rounds,
            seed=req.seed,
            initial=initial,
        )
    except InputError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    if g.n * req.max_rounds <= SYNC_WORK_LIMIT:
        return run(g, cfg).to_json()
    job = jobs.create("simulate", total_cells=1)
    job.payload = None

    def work(j):
        rec = run(g, cfg)
        with j.lock:
            j.payload = rec.to_json()

    jobs.submit(job, work)
    return {"job": job.handle()}


def _sweep_specs(req: SweepRequest) -> list[SweepSpec]:
    if req.preset is not None:
        try:
            p = preset(req.preset)
        except InputError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        return p if isinstance(p, list) else [p]
    if isinstance(req.delta_grid, list):
        grid = req.delta_grid
    else:
        grid = (req.delta_grid.start, req.delta_grid.end, req.delta_grid.step)
    graph_spec = req.graph if isinstance(req.graph, str) else req.graph.model_dump()
    try:
        return [SweepSpec(
            graph_spec=graph_spec,
            delta_grid=grid,
            trials=req.trials,
            base_seed=req.base_seed,
            epsilon=req.epsilon,
            epsilon_reshuffle=req.epsilon_reshuffle,
            max_rounds=req.max_rounds,
            record_level=req.record_level,
        )]
    except InputError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


@app.post("/api/sweep")
def api_sweep(req: SweepRequest) -> JobHandle:
    specs = _sweep_specs(req)
    graphs = []
    total = 0
    for spec in specs:
        try:
            g = spec.resolve_graph()
        except (InputError, GenerationError) as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        if g.n > N_CAP:
            raise HTTPException(status_code=413, detail=f"n={g.n} over cap {N_CAP}")
        graphs.append(g)
        total += spec.cells()
    if total > SWEEP_BUDGET:
        raise HTTPException(
            status_code=429,
            detail=f"{total} cells over sweep budget {SWEEP_BUDGET}",
        )
    job = jobs.create("sweep", total_cells=total)

    def work(j):
        done = 0

        def on_row(row):
            nonlocal done
            done += 1
            with j.lock:
                j.rows.append(row)
                j.progress = done / max(1, j.total_cells)

        all_rows = []
        for spec in specs:
            all_rows.extend(
                sweep(spec, on_row=on_row,
                      should_cancel=lambda: j.cancel_requested)
            )
        with j.lock:
            j.result_csv = rows_to_csv(all_rows)

    jobs.submit(job, work)
    return JobHandle(**job.handle())


@app.get("/api/jobs/{job_id}")
def api_job_status(job_id: str):
    job = jobs.get(job_id)
    if job is None:
        raise HTTPException(status_code=404, detail="unknown job")
    out = job.handle()
    with job.lock:
        out["rows"] = [r.to_json() for r in job.rows]
    return out


@app.get("/api/jobs/{job_id}/result")
def api_job_result(job_id: str, format: str = "csv"):
    job = jobs.get(job_id)
    if job is None:
        raise HTTPException(status_code=404, detail="unknown job")
    with job.lock:
        status, reason = job.status, job.reason
        csv_text, rows, payload = job.result_csv, list(job.rows), job.payload
    if status == "failed":
        raise HTTPException(status_code=409, detail=reason or "failed")
    if status != "done":
        raise HTTPException(status_code=409, detail=f"job is {status}")
    if job.kind == "simulate":
        return payload
    if format == "json":
        return {"rows": [r.to_json() for r in rows]}
    return PlainTextResponse(csv_text or rows_to_csv(rows), media_type="text/csv")


@app.post("/api/jobs/{job_id}/cancel")
def api_job_cancel(job_id: str):
    job = jobs.get(job_id)
    if job is None:
        raise HTTPException(status_code=404, detail="unknown job")
    jobs.cancel(job)
    return job.handle()


@app.get("/api/graph")
def api_graph(spec: str, seed: int = 0):
    try:
        g = parse_graph_spec(spec, seed=seed)
    except (InputError, GenerationError) as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    if g.n > N_CAP:
        raise HTTPException(status_code=413, detail=f"n={g.n} over cap {N_CAP}")
    return {
        "graph": g.to_json(),
        "spectrum": list(eigenvalues_sym(g).eigenvalues),
        "threshold_lines": [[v, s] for v, s in threshold_lines(g)],
    }


BRUTE_FORCE_CAP = 20


@app.get("/api/equilibria")
def api_equilibria(spec: str, delta: float, seed: int = 0):
    try:
        g = parse_graph_spec(spec, seed=seed)
    except (InputError, GenerationError) as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    if not (0.0 <= delta <= 1.0):
        raise HTTPException(status_code=400, detail="delta must be in [0,1]")
    if g.n <= BRUTE_FORCE_CAP:
        from ..equilibria import enumerate_stable_active_sets

        reports = enumerate_stable_active_sets(g, delta, max_n=BRUTE_FORCE_CAP)
        return {"method": "brute-force", "stable": [r.to_json() for r in reports]}
    if spec.startswith("path:"):
        configs = enumerate_path_configurations(g.n, delta)
        reports = [solve_on_active_set(g, delta, c.active_set()) for c in configs]
        return {
            "method": "path-structural",
            "stable": [r.to_json() for r in reports
                       if r.stability == "stable"],
        }
    raise HTTPException(
        status_code=413,
        detail=(f"exact enumeration is capped at n={BRUTE_FORCE_CAP}; "
                "structural enumeration is only available for path graphs"),
    )
