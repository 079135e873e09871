"""Named example constructions: cospectral mates, the slow P5 schedule,
the k-reshuffle chain, the single-component reshuffle, and slow unions.

Vertex indexing is 0-based throughout; narratives note the translation
from the 1-based labels used in write-ups.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .graphs import (
    Graph,
    GenerationError,
    InputError,
    build_graph,
    cycle,
    disjoint_union,
    path,
    star,
)

GOLDEN_INV = (math.sqrt(5.0) - 1.0) / 2.0


class DomainError(ValueError):
    """Parameter outside the construction's valid regime."""


@dataclass(frozen=True)
class ScenarioBundle:
    name: str
    graph: Graph
    initial: tuple[float, ...]
    schedule: tuple[int, ...] | None
    delta_hint: float
    narrative: str
    epsilon: float = 1e-4
    epsilon_reshuffle: float | None = None
    extras: dict = field(default_factory=dict)

    def __post_init__(self):
        if len(self.initial) != self.graph.n:
            raise InputError("initial profile length must equal graph size")
        if self.schedule is not None and any(
            not (0 <= v < self.graph.n) for v in self.schedule
        ):
            raise InputError("schedule vertex out of range")

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "graph": self.graph.to_json(),
            "initial": list(self.initial),
            "schedule": None if self.schedule is None else list(self.schedule),
            "delta_hint": self.delta_hint,
            "narrative": self.narrative,
            "epsilon": self.epsilon,
            "epsilon_reshuffle": self.epsilon_reshuffle,
            "extras": {k: v for k, v in self.extras.items() if _jsonable(v)},
        }


def _jsonable(v) -> bool:
    return isinstance(v, (int, float, str, bool, list, dict, type(None)))


def cospectral_pair() -> tuple[Graph, Graph]:
    """K_{1,4} and C4 plus an isolated vertex: same spectrum, different
    degree sequences."""
    return star(4), disjoint_union(cycle(4), path(1))


@dataclass(frozen=True)
class P5SlowSchedule:
    x0: tuple[float, ...]
    head: tuple[int, ...]
    cycle: tuple[int, ...]
    bound_rounds: float
    bound_steps: float

    def materialize(self, steps: int) -> tuple[int, ...]:
        out = list(self.head)
        i = 0
        while len(out) < steps:
            out.append(self.cycle[i % len(self.cycle)])
            i += 1
        return tuple(out[:steps])


def p5_slow_schedule(delta: float) -> P5SlowSchedule:
    """The adversarial order on P5 that keeps the middle vertex inactive for
    ~log(1-delta)/log(delta) rounds: activate 1 and 3 first, then hammer the
    side pairs."""
    if not (0.5 < delta < 1.0):
        raise DomainError("p5 slow schedule requires delta in (1/2, 1)")
    bound_rounds = (math.log(1.0 - delta) - math.log(2.0)) / (10.0 * math.log(delta))
    return P5SlowSchedule(
        x0=(0.0,) * 5,
        head=(1, 3),
        cycle=(0, 1, 4, 3),
        bound_rounds=bound_rounds,
        bound_steps=10.0 * bound_rounds,
    )


def chain_graph(k: int) -> Graph:
    """k copies of P5 joined by one bridge per junction: vertex 3 of copy c
    to vertex 0 of copy c+1 (0-based; copies' vertices are 5c..5c+4)."""
    if k < 1:
        raise InputError("chain needs at least one copy")
    edges = []
    for c in range(k):
        o = 5 * c
        edges.extend((o + i, o + i + 1) for i in range(4))
        if c + 1 < k:
            edges.append((o + 3, o + 5))
    return build_graph(5 * k, edges)


def chain_initial(k: int, delta: float) -> tuple[float, ...]:
    a = 1.0 / (1.0 + delta)
    x = [0.0, 1.0, 0.0, 1.0, 0.0]
    for _ in range(1, k):
        x.extend([0.0, 1.0, 0.0, a, a])
    return tuple(x)


def chain_epsilon_reshuffle(delta: float) -> float:
    """Quasi-convergence tolerance for the chain replay.

    While a copy's side pair drifts toward the two-agent equilibrium, the
    residual is max(decaying pair gap, growing middle-vertex gap); its dip
    minimum is L*(1-delta^2)/(delta+1-delta^2) with L = (1-delta)/(1+delta).
    A tolerance 1.3x that dip is reached during the drift (arming the
    reshuffle detector) but stays below the escape phase's gaps."""
    big = (1.0 - delta) / (1.0 + delta)
    return 1.3 * big * (1.0 - delta * delta) / (delta + 1.0 - delta * delta)


class _Shadow:
    """Minimal sequential best-response simulator used only to generate
    deterministic schedules; the official record comes from replay."""

    def __init__(self, g: Graph, delta: float, x0):
        self.nbrs = [list(s) for s in g.neighbors()]
        self.delta = delta
        self.x = list(x0)
        self.steps: list[int] = []

    def br(self, i: int) -> float:
        s = sum(self.x[j] for j in self.nbrs[i])
        v = 1.0 - self.delta * s
        return v if v > 0.0 else 0.0

    def gap(self, i: int) -> float:
        return abs(self.br(i) - self.x[i])

    def d(self) -> float:
        return max(self.gap(i) for i in range(len(self.x)))

    def update(self, i: int):
        self.steps.append(i)
        self.x[i] = self.br(i)


def chain_schedule(k: int, delta: float, max_steps: int = 2_000_000) -> tuple[int, ...]:
    """Deterministic order under which the chain started at chain_initial
    produces exactly one reshuffle per copy, in copy order.

    Per copy: (A) nurse the perturbed side pair(s) until the residual dips
    under chain_epsilon_reshuffle(delta) and the middle vertex's best
    response has grown past half its limiting value, then fire the middle
    vertex (the reshuffle); (B) round-robin the copy until it clamps into
    the exact alternating equilibrium, which hands a fresh 1-delta gap to
    the next copy's first vertex.
    """
    if k < 1:
        raise InputError("chain needs at least one copy")
    if not (GOLDEN_INV < delta < 1.0):
        raise DomainError("chain requires delta in (1/phi, 1)")
    g = chain_graph(k)
    eps_r = chain_epsilon_reshuffle(delta)
    theta = 0.8 * (1.0 - delta) / (1.0 + delta)
    sim = _Shadow(g, delta, chain_initial(k, delta))
    for c in range(k):
        o = 5 * c
        pair_cycle = [o, o + 1, o + 4, o + 3] if c == 0 else [o, o + 1]
        armed = False
        while True:
            if sim.d() < eps_r:
                armed = True
            mid_br = sim.br(o + 2)
            if armed and mid_br >= theta:
                break
            for v in pair_cycle:
                sim.update(v)
            if len(sim.steps) > max_steps:
                raise GenerationError("chain schedule: phase A did not settle")
        sim.update(o + 2)  # the reshuffle
        target = [1.0, 0.0, 1.0, 0.0, 1.0]
        while sim.x[o : o + 5] != target:
            for v in (o + 1, o + 3, o + 2, o, o + 4):
                if sim.d() < eps_r:
                    raise GenerationError("chain schedule: escape phase re-armed")
                sim.update(v)
            if len(sim.steps) > max_steps:
                raise GenerationError("chain schedule: escape phase did not clamp")
    if sim.d() != 0.0:
        raise GenerationError("chain schedule: terminal state is not exact")
    return tuple(sim.steps)


def reshuffle_chain(k: int, delta: float) -> ScenarioBundle:
    """Chain of k P5 copies whose deterministic replay reshuffles once per
    copy.  Copies after the first start at an exact best response, so all
    initial residual lives in copy 1.

    The replay schedule needs headroom between the drift-phase residual dip
    and the escape-phase gaps, which closes as delta approaches 1/phi; when
    generation detects that, the bundle ships without a schedule and is
    meant for random-order runs."""
    try:
        schedule = chain_schedule(k, delta)
    except GenerationError:
        schedule = None
    return ScenarioBundle(
        name=f"chain:{k}:{delta:g}",
        graph=chain_graph(k),
        initial=chain_initial(k, delta),
        schedule=schedule,
        delta_hint=delta,
        narrative=(
            "k P5 copies bridged at (5c+3, 5c+5); copy c occupies vertices "
            "5c..5c+4 (1-based v_i^j maps to 5(j-1)+i-1). Replay yields one "
            "reshuffle per copy, in copy order."
        ),
        epsilon=1e-9,
        epsilon_reshuffle=chain_epsilon_reshuffle(delta),
        extras={"copies": k, "expected_reshuffles": k},
    )


def single_component_reshuffle() -> ScenarioBundle:
    """P6 plus a hub tied to vertices 0, 2, 4; started on those vertices.
    At delta=0.55 the path slowly relaxes until the hub's neighbor sum drops
    under 1/delta, the hub activates, and the terminal path profile flips to
    1 - x(0)."""
    edges = [(i, i + 1) for i in range(5)] + [(6, 0), (6, 2), (6, 4)]
    g = build_graph(7, edges)
    x0 = (1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 0.0)
    return ScenarioBundle(
        name="singlecomp",
        graph=g,
        initial=x0,
        schedule=None,
        delta_hint=0.55,
        narrative=(
            "P6 (vertices 0-5) with hub 6 adjacent to 0, 2, 4; hub's initial "
            "neighbor sum is 3 > 1/0.55 so it starts content at zero. Run "
            "with random order; the hub activation is the reshuffle."
        ),
        epsilon=1e-5,
        epsilon_reshuffle=1e-3,
        extras={"hub": 6, "path_vertices": list(range(6))},
    )


def expected_slow_union(k: int, delta: float) -> ScenarioBundle:
    """Disjoint union of k chain graphs, all agents at zero, random order.
    More copies mean more chances that some copy draws a slow trajectory, so
    the maximum last-change round grows with k."""
    if k < 1:
        raise InputError("union needs at least one copy")
    if not (GOLDEN_INV < delta < 1.0):
        raise DomainError("union requires delta in (1/phi, 1)")
    base = chain_graph(1)
    g = base
    for _ in range(1, k):
        g = disjoint_union(g, base)
    return ScenarioBundle(
        name=f"union:{k}:{delta:g}",
        graph=g,
        initial=(0.0,) * g.n,
        schedule=None,
        delta_hint=delta,
        narrative=(
            "k disjoint chain copies from all-zero start under random order; "
            "the probability floor p = (5n)^(-2n) per copy is recorded as a "
            "crude documented bound, not asserted numerically."
        ),
        extras={"copies": k, "p_bound_formula": "(5n)^(-2n)"},
    )


def parse_scenario(spec: str):
    """Scenario spec strings: cospectral, p5slow:<delta>, chain:<k>:<delta>,
    singlecomp, union:<k>:<delta>.  Returns a JSON-serializable payload."""
    parts = spec.strip().split(":")
    name = parts[0]
    try:
        if name == "cospectral" and len(parts) == 1:
            g, h = cospectral_pair()
            return {"name": "cospectral", "graphs": [g.to_json(), h.to_json()]}
        if name == "p5slow" and len(parts) == 2:
            delta = float(parts[1])
            sched = p5_slow_schedule(delta)
            return {
                "name": spec,
                "graph": path(5).to_json(),
                "initial": list(sched.x0),
                "schedule_head": list(sched.head),
                "schedule_cycle": list(sched.cycle),
                "delta_hint": delta,
                "bound_rounds": sched.bound_rounds,
                "bound_steps": sched.bound_steps,
            }
        if name == "chain" and len(parts) == 3:
            return reshuffle_chain(int(parts[1]), float(parts[2])).to_json()
        if name == "singlecomp" and len(parts) == 1:
            return single_component_reshuffle().to_json()
        if name == "union" and len(parts) == 3:
            return expected_slow_union(int(parts[1]), float(parts[2])).to_json()
    except (ValueError, TypeError) as exc:
        if isinstance(exc, (InputError, DomainError)):
            raise
        raise InputError(f"bad scenario spec {spec!r}: {exc}") from exc
    raise InputError(f"unknown scenario spec {spec!r}")
