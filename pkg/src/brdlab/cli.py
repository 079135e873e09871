"""Command-line front end.

Every data-producing command goes through the HTTP API (in-process by
default, or a remote server via --server), so CLI and API output are the
same bytes by construction.

Exit codes: 0 success, 2 input error, 3 guard violation (caps/budgets).
"""

from __future__ import annotations

import argparse
import json
import sys
import time

import httpx

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_GUARD = 3


class CliError(SystemExit):
    pass


def make_client(server: str | None) -> httpx.Client:
    if server:
        return httpx.Client(base_url=server, timeout=600.0)
    from fastapi.testclient import TestClient

    from .service.app import app

    return TestClient(app)


def _check(resp: httpx.Response) -> httpx.Response:
    if resp.status_code < 400:
        return resp
    try:
        detail = resp.json().get("detail")
    except ValueError:
        detail = resp.text
    print(f"error ({resp.status_code}): {detail}", file=sys.stderr)
    if resp.status_code in (413, 429):
        raise CliError(EXIT_GUARD)
    raise CliError(EXIT_INPUT)


def _graph_arg(spec: str):
    if spec.lstrip().startswith("{"):
        return json.loads(spec)
    return spec


def _wait_for_job(client: httpx.Client, job: dict, poll: float = 0.2) -> str:
    job_id = job["id"]
    while True:
        status = _check(client.get(f"/api/jobs/{job_id}")).json()
        if status["status"] == "done":
            return job_id
        if status["status"] == "failed":
            print(f"job failed: {status.get('reason')}", file=sys.stderr)
            raise CliError(EXIT_INPUT)
        time.sleep(poll)


def cmd_simulate(args, client: httpx.Client) -> int:
    body = {
        "graph": _graph_arg(args.graph),
        "delta": args.delta,
        "seed": args.seed,
        "epsilon": args.epsilon,
        "max_rounds": args.max_rounds,
        "graph_seed": args.graph_seed,
    }
    if args.epsilon_reshuffle is not None:
        body["epsilon_reshuffle"] = args.epsilon_reshuffle
    payload = _check(client.post("/api/simulate", json=body)).json()
    if "job" in payload:
        job_id = _wait_for_job(client, payload["job"])
        payload = _check(client.get(f"/api/jobs/{job_id}/result")).json()
    if args.traj:
        with open(args.traj, "w") as fh:
            json.dump(payload, fh, indent=2)
    print(
        f"converged={str(payload['converged']).lower()} "
        f"rounds={payload['rounds']:g} "
        f"last_change_round={payload['last_change_round']:g} "
        f"reshuffles={len(payload['reshuffles'])}"
    )
    return EXIT_OK


def cmd_sweep(args, client: httpx.Client) -> int:
    if args.preset:
        body = {"preset": args.preset}
    else:
        if args.delta_start is None or args.delta_end is None or args.delta_step is None:
            print("error: --delta-start/--delta-end/--delta-step are required "
                  "without --preset", file=sys.stderr)
            return EXIT_INPUT
        body = {
            "graph": _graph_arg(args.graph),
            "delta_grid": {
                "start": args.delta_start,
                "end": args.delta_end,
                "step": args.delta_step,
            },
            "trials": args.trials,
            "base_seed": args.seed,
            "epsilon": args.epsilon,
            "max_rounds": args.max_rounds,
        }
    job = _check(client.post("/api/sweep", json=body)).json()
    job_id = _wait_for_job(client, job)
    csv_text = _check(client.get(f"/api/jobs/{job_id}/result")).text
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(csv_text)
    else:
        sys.stdout.write(csv_text)
    return EXIT_OK


def cmd_spectrum(args, client: httpx.Client) -> int:
    payload = _check(
        client.get("/api/graph", params={"spec": args.graph, "seed": args.graph_seed})
    ).json()
    print(json.dumps(payload, indent=2))
    return EXIT_OK


def cmd_equilibria(args, client: httpx.Client) -> int:
    payload = _check(
        client.get(
            "/api/equilibria",
            params={"spec": args.graph, "delta": args.delta, "seed": args.graph_seed},
        )
    ).json()
    print(json.dumps(payload, indent=2))
    return EXIT_OK


def cmd_scenario(args, client: httpx.Client) -> int:
    from .graphs import InputError
    from .scenarios import DomainError, parse_scenario

    try:
        payload = parse_scenario(args.name)
    except (InputError, DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(json.dumps(payload, indent=2))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="brdlab",
                                description="best-response dynamics laboratory")
    p.add_argument("--server", default=None,
                   help="remote API base URL (default: in-process service)")
    sub = p.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="run one trajectory")
    sim.add_argument("--graph", required=True)
    sim.add_argument("--delta", type=float, required=True)
    sim.add_argument("--seed", type=int, default=0)
    sim.add_argument("--graph-seed", type=int, default=0)
    sim.add_argument("--epsilon", type=float, default=1e-4)
    sim.add_argument("--epsilon-reshuffle", type=float, default=None)
    sim.add_argument("--max-rounds", type=int, default=10_000)
    sim.add_argument("--traj", default=None, help="write trajectory JSON here")
    sim.set_defaults(fn=cmd_simulate)

    sw = sub.add_parser("sweep", help="run a delta sweep, emit CSV")
    sw.add_argument("--graph")
    sw.add_argument("--delta-start", type=float)
    sw.add_argument("--delta-end", type=float)
    sw.add_argument("--delta-step", type=float)
    sw.add_argument("--trials", type=int, default=10)
    sw.add_argument("--seed", type=int, default=0)
    sw.add_argument("--epsilon", type=float, default=1e-4)
    sw.add_argument("--max-rounds", type=int, default=10_000)
    sw.add_argument("--out", default=None)
    sw.add_argument("--preset", default=None)
    sw.set_defaults(fn=cmd_sweep)

    sp = sub.add_parser("spectrum", help="eigenvalues and threshold lines")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--graph-seed", type=int, default=0)
    sp.set_defaults(fn=cmd_spectrum)

    eq = sub.add_parser("equilibria", help="stable active sets at a delta")
    eq.add_argument("--graph", required=True)
    eq.add_argument("--delta", type=float, required=True)
    eq.add_argument("--graph-seed", type=int, default=0)
    eq.add_argument("--brute-force", action="store_true",
                    help="accepted for compatibility; brute force is the "
                         "default for small graphs")
    eq.set_defaults(fn=cmd_equilibria)

    sc = sub.add_parser("scenario", help="print a named scenario bundle")
    sc.add_argument("--name", required=True)
    sc.set_defaults(fn=cmd_scenario)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with make_client(args.server) as client:
            return args.fn(args, client)
    except CliError as exc:
        return exc.code
    except httpx.HTTPError as exc:
        print(f"transport error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
