"""Delta-sweep harness: deterministic per-cell seeding, terminal-state
statistics, CSV output, and the named figure presets.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass, field, replace

import numpy as np

from .dynamics import DynamicsConfig, TrajectoryRecord, run
from .equilibria import solve_on_active_set
from .graphs import Graph, InputError, build_graph, connected_components, parse_graph_spec
from .scenarios import cospectral_pair
from .spectral import eigenvalues_sym

CSV_HEADER = (
    "delta,trial,seed,rounds,converged,last_change_round,n_reshuffles,"
    "terminal_stable,active_count,largest_component,isolated_active,active_edges"
)

RECORD_LEVELS = ("summary", "events", "full")


@dataclass(frozen=True)
class SweepSpec:
    graph_spec: str | dict | Graph
    delta_grid: tuple[float, float, float] | list[float]
    trials: int
    base_seed: int = 0
    epsilon: float = 1e-4
    epsilon_reshuffle: float | None = None
    max_rounds: int = 10_000
    record_level: str = "summary"

    def __post_init__(self):
        if self.trials < 1:
            raise InputError("trials must be >= 1")
        if self.record_level not in RECORD_LEVELS:
            raise InputError(f"record_level must be one of {RECORD_LEVELS}")
        if isinstance(self.delta_grid, tuple):
            start, end, step = self.delta_grid
            if not (0.0 <= start <= end <= 1.0):
                raise InputError("delta grid must satisfy 0 <= start <= end <= 1")
            if step <= 0:
                raise InputError("delta step must be positive")
        else:
            for d in self.delta_grid:
                if not (0.0 <= d <= 1.0):
                    raise InputError("delta values must lie in [0,1]")

    def deltas(self) -> list[float]:
        if isinstance(self.delta_grid, tuple):
            start, end, step = self.delta_grid
            count = int(math.floor((end - start) / step + 1e-9)) + 1
            return [round(start + i * step, 12) for i in range(count)]
        return [float(d) for d in self.delta_grid]

    def resolve_graph(self) -> Graph:
        g = self.graph_spec
        if isinstance(g, Graph):
            return g
        if isinstance(g, dict):
            return build_graph(g["n"], g["edges"])
        return parse_graph_spec(g, seed=self.base_seed)

    def cells(self) -> int:
        return len(self.deltas()) * self.trials


@dataclass(frozen=True)
class SweepRow:
    delta: float
    trial: int
    seed: int
    rounds: float
    converged: bool
    last_change_round: float
    n_reshuffles: int
    terminal_stable: bool | None  # None when the run did not converge
    active_count: int
    largest_component: int
    isolated_active: int
    active_edges: int
    trajectory: dict | None = field(default=None, compare=False)

    def to_json(self) -> dict:
        out = {
            "delta": self.delta,
            "trial": self.trial,
            "seed": self.seed,
            "rounds": self.rounds,
            "converged": self.converged,
            "last_change_round": self.last_change_round,
            "n_reshuffles": self.n_reshuffles,
            "terminal_stable": self.terminal_stable,
            "active_count": self.active_count,
            "largest_component": self.largest_component,
            "isolated_active": self.isolated_active,
            "active_edges": self.active_edges,
        }
        if self.trajectory is not None:
            out["trajectory"] = self.trajectory
        return out


def cell_seed(base_seed: int, delta_index: int, trial: int) -> int:
    """Deterministic per-cell seed: first word of
    SeedSequence([base_seed, delta_index, trial]).  Independent of execution
    order, so sweeps can be resumed or parallelized cell by cell."""
    ss = np.random.SeedSequence([int(base_seed), int(delta_index), int(trial)])
    return int(ss.generate_state(1, np.uint64)[0])


def terminal_stats(g: Graph, terminal, delta: float, converged: bool) -> dict:
    active = [i for i in range(g.n) if terminal[i] > 0.0]
    aset = set(active)
    nbrs = g.neighbors()
    comps = connected_components(g, aset) if active else []
    largest = max((len(c) for c in comps), default=0)
    isolated = sum(1 for v in active if not any(u in aset for u in nbrs[v]))
    edges = sum(1 for (i, j) in g.edges if i in aset and j in aset)
    stable: bool | None = None
    if converged:
        if active:
            stable = solve_on_active_set(g, delta, active).stability == "stable"
        else:
            stable = False
    return {
        "active_count": len(active),
        "largest_component": largest,
        "isolated_active": isolated,
        "active_edges": edges,
        "terminal_stable": stable,
    }


def run_cell(g: Graph, spec: SweepSpec, delta: float, delta_index: int,
             trial: int) -> SweepRow:
    seed = cell_seed(spec.base_seed, delta_index, trial)
    cfg = DynamicsConfig(
        delta=delta,
        epsilon=spec.epsilon,
        epsilon_reshuffle=spec.epsilon_reshuffle,
        max_rounds=spec.max_rounds,
        seed=seed,
        record_steps=(spec.record_level == "full"),
    )
    rec = run(g, cfg)
    stats = terminal_stats(g, rec.terminal, delta, rec.converged)
    return SweepRow(
        delta=delta,
        trial=trial,
        seed=seed,
        rounds=rec.rounds,
        converged=rec.converged,
        last_change_round=rec.last_change_round,
        n_reshuffles=len(rec.reshuffle_events),
        trajectory=rec.to_json() if spec.record_level == "full" else None,
        **stats,
    )


def sweep(spec: SweepSpec, on_row=None, should_cancel=None) -> list[SweepRow]:
    """Run every (delta, trial) cell in deterministic index order.

    on_row, if given, receives each finished SweepRow (for streaming);
    should_cancel, if given, is polled between cells and aborts the sweep by
    raising RuntimeError when it returns true.
    """
    g = spec.resolve_graph()
    rows: list[SweepRow] = []
    for di, delta in enumerate(spec.deltas()):
        for trial in range(spec.trials):
            if should_cancel is not None and should_cancel():
                raise RuntimeError("cancelled")
            row = run_cell(g, spec, delta, di, trial)
            rows.append(row)
            if on_row is not None:
                on_row(row)
    return rows


def _fmt(v: float) -> str:
    return f"{v:.12g}"


def _fmt_bool(v: bool | None) -> str:
    return "" if v is None else ("true" if v else "false")


def rows_to_csv(rows) -> str:
    """The one CSV serializer; every producer (CLI, API) goes through it so
    identical specs give byte-identical files."""
    buf = io.StringIO()
    buf.write(CSV_HEADER + "\n")
    for r in rows:
        buf.write(
            f"{_fmt(r.delta)},{r.trial},{r.seed},{_fmt(r.rounds)},"
            f"{_fmt_bool(r.converged)},{_fmt(r.last_change_round)},"
            f"{r.n_reshuffles},{_fmt_bool(r.terminal_stable)},"
            f"{r.active_count},{r.largest_component},{r.isolated_active},"
            f"{r.active_edges}\n"
        )
    return buf.getvalue()


def threshold_lines(g: Graph, tol: float = 1e-12) -> list[tuple[float, str]]:
    """Reciprocals 1/|lambda_i| with the eigenvalue's sign, restricted to
    (0, 1]; these are the vertical guide lines of the sweep plots."""
    out = []
    for lam in eigenvalues_sym(g).eigenvalues:
        if abs(lam) <= tol:
            continue
        value = 1.0 / abs(lam)
        if 0.0 < value <= 1.0:
            out.append((value, "-" if lam < 0 else "+"))
    out.sort()
    return out


_GRID_FULL = (0.0, 1.0, 0.005)


def _spec(graph_spec, grid=_GRID_FULL, trials=10, base_seed=90210, **kw) -> SweepSpec:
    return SweepSpec(graph_spec=graph_spec, delta_grid=grid, trials=trials,
                     base_seed=base_seed, **kw)


def preset(name: str):
    """Named sweep bundles for the standard figures.  fig-cospectral returns
    a list of two specs (one per mate); every other name returns one spec."""
    if name == "fig-cospectral":
        g, h = cospectral_pair()
        return [_spec(g, base_seed=90211), _spec(h, base_seed=90212)]
    if name in {f"fig-p{k}" for k in range(2, 9)}:
        k = int(name.removeprefix("fig-p"))
        return _spec(f"path:{k}", base_seed=90200 + k)
    simple = {
        "fig-p100": _spec("path:100"),
        "fig-p100zoom": _spec("path:100", grid=(0.45, 0.62, 0.002), trials=20,
                              base_seed=90220),
        "fig-rr": _spec("rr:100:10", base_seed=90230),
        "fig-er": _spec("er:100:0.2", base_seed=90231),
        "fig-ba": _spec("ba:100:1", base_seed=90232),
        "fig-bipartite": _spec("kml:60:5", base_seed=90233),
        "appendix-lastchange": _spec("path:100", trials=1, base_seed=90240),
        "appendix-parity": _spec("path:101", grid=[0.3, 0.5, 0.7, 0.9, 0.99],
                                 trials=50, base_seed=90241),
    }
    if name in simple:
        return simple[name]
    raise InputError(f"unknown preset {name!r}")
