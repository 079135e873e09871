"""Random-order best-response dynamics: stepping, stopping, event forensics.

Activity status is always an exact sign test: a binding clamp stores exactly
0.0, so activations and deactivations are never tolerance judgements.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .graphs import Graph, InputError, induced_subgraph

RESIDUAL_POINTS_CAP = 5000


@dataclass(frozen=True)
class DynamicsConfig:
    delta: float
    epsilon: float = 1e-4
    epsilon_reshuffle: float | None = None  # None -> same as epsilon
    max_rounds: int = 100_000
    seed: int = 0
    initial: str | tuple[float, ...] = "uniform"  # uniform | zeros | ones | explicit
    record_steps: bool = True

    def __post_init__(self):
        if not (0.0 <= self.delta <= 1.0):
            raise InputError(f"delta must be in [0,1], got {self.delta}")
        if self.epsilon <= 0:
            raise InputError("epsilon must be positive")
        if self.max_rounds < 1:
            raise InputError("max_rounds must be >= 1")
        er = self.effective_epsilon_reshuffle
        if er < self.epsilon:
            raise InputError("epsilon_reshuffle must be >= epsilon")
        if isinstance(self.initial, str):
            if self.initial not in ("uniform", "zeros", "ones"):
                raise InputError(
                    f"initial must be uniform, zeros, ones, or an explicit "
                    f"profile, got {self.initial!r}"
                )
        else:
            if any(not (0.0 <= float(v) <= 1.0) for v in self.initial):
                raise InputError("explicit initial profile must lie in [0,1]")

    @property
    def effective_epsilon_reshuffle(self) -> float:
        return self.epsilon if self.epsilon_reshuffle is None else self.epsilon_reshuffle


@dataclass
class TrajectoryRecord:
    steps: list[tuple[int, int, float]]  # (t, agent, new_value); t from 1
    rounds: float
    converged: bool
    terminal: list[float]
    active_set_changes: list[tuple[int, int, str]]  # (t, agent, "+" | "-")
    last_change_round: float
    reshuffle_events: list[tuple[int, int]]
    residual_history: list[tuple[int, float]]  # downsampled when recorded
    residual_full: list[float] = field(default_factory=list, repr=False)

    def to_json(self) -> dict:
        return {
            "converged": self.converged,
            "rounds": self.rounds,
            "last_change_round": self.last_change_round,
            "reshuffles": [[t, a] for t, a in self.reshuffle_events],
            "active_changes": [[t, a, d] for t, a, d in self.active_set_changes],
            "terminal": list(self.terminal),
            "residuals": [[t, d] for t, d in self.residual_history],
        }


# ---------------------------------------------------------------------------
# pointwise quantities

def best_response(g: Graph, delta: float, x, i: int) -> float:
    """max(0, 1 - delta * sum of neighbor activities); exact 0.0 on clamp."""
    s = sum(x[j] for j in g.neighbors()[i])
    return max(0.0, 1.0 - delta * s)


def payoff(g: Graph, delta: float, x, i: int) -> float:
    s = sum(x[j] for j in g.neighbors()[i])
    return x[i] - x[i] ** 2 / 2.0 - delta * x[i] * s


def residual_d(g: Graph, delta: float, x) -> float:
    """Max-norm distance between x and its simultaneous best-response image."""
    xv = np.asarray(x, dtype=float)
    br = np.maximum(0.0, 1.0 - delta * (g.adjacency @ xv))
    return float(np.max(np.abs(xv - br)))


def potential(g: Graph, delta: float, x) -> float:
    """x.1 - (1/2) x'(I + delta G)x; non-decreasing along best responses."""
    xv = np.asarray(x, dtype=float)
    return float(xv.sum() - 0.5 * (xv @ xv + delta * xv @ (g.adjacency @ xv)))


def weighted_error_norm_sq(g: Graph, delta: float, s, f) -> float:
    """f'(I + delta * G_S)f for an error vector f aligned to sorted(s)."""
    sub, _ = induced_subgraph(g, s)
    fv = np.asarray(f, dtype=float)
    b = np.eye(sub.n) + delta * sub.adjacency
    return float(fv @ (b @ fv))


@dataclass(frozen=True)
class StepReport:
    agent: int
    old_value: float
    new_value: float
    transition: str | None  # "activated" | "deactivated" | None


def step(g: Graph, delta: float, x, i: int) -> tuple[list[float], StepReport]:
    """Best-response update of one agent; the input profile is not mutated."""
    new = best_response(g, delta, x, i)
    out = list(x)
    old = out[i]
    out[i] = new
    transition = None
    if old == 0.0 and new > 0.0:
        transition = "activated"
    elif old > 0.0 and new == 0.0:
        transition = "deactivated"
    return out, StepReport(agent=i, old_value=old, new_value=new, transition=transition)


# ---------------------------------------------------------------------------
# trajectory engine

class _Engine:
    """Sequential best-response process with incremental residual tracking.

    One agent update only moves the residual through its neighborhood; the
    full neighbor sums are recomputed every n steps to guard float drift.
    """

    def __init__(self, g: Graph, delta: float, x0, epsilon: float,
                 epsilon_reshuffle: float, record_steps: bool):
        self.g = g
        self.n = g.n
        self.delta = delta
        self.epsilon = epsilon
        self.epsilon_reshuffle = epsilon_reshuffle
        self.record_steps = record_steps
        self.nbrs = g.neighbors()
        self.x = [float(v) for v in x0]
        if len(self.x) != self.n:
            raise InputError("initial profile length mismatch")
        if any(v < 0.0 or v > 1.0 for v in self.x):
            raise InputError("initial activities must lie in [0,1]")
        self._recompute()
        self.t = 0
        self.steps: list[tuple[int, int, float]] = []
        self.active_set_changes: list[tuple[int, int, str]] = []
        self.reshuffles: list[tuple[int, int]] = []
        self.residual_full: list[float] = []
        self.quasi_converged = self.d < self.epsilon_reshuffle

    def _recompute(self):
        delta, x, nbrs = self.delta, self.x, self.nbrs
        self.s = [sum(x[j] for j in nb) for nb in nbrs]
        self.br = [max(0.0, 1.0 - delta * si) for si in self.s]
        self.d = max(abs(x[i] - self.br[i]) for i in range(self.n))

    def update(self, i: int):
        """One best-response step of agent i; returns the residual after it."""
        x, s, br, nbrs = self.x, self.s, self.br, self.nbrs
        self.t += 1
        new = br[i]
        old = x[i]
        if new != old:
            x[i] = new
            dx = new - old
            delta = self.delta
            for j in nbrs[i]:
                s[j] += dx
                br[j] = max(0.0, 1.0 - delta * s[j])
            if old == 0.0 and new > 0.0:
                self.active_set_changes.append((self.t, i, "+"))
                if self.quasi_converged:
                    self.reshuffles.append((self.t, i))
                self.quasi_converged = False
            elif old > 0.0 and new == 0.0:
                self.active_set_changes.append((self.t, i, "-"))
        if self.t % self.n == 0:
            self._recompute()
        else:
            self.d = max(abs(x[j] - br[j]) for j in range(self.n))
        if self.record_steps:
            self.steps.append((self.t, i, x[i]))
            self.residual_full.append(self.d)
        if self.d < self.epsilon_reshuffle:
            self.quasi_converged = True
        return self.d

    def converged(self) -> bool:
        """Exact convergence test; re-verifies against a full recomputation."""
        if self.d >= self.epsilon:
            return False
        self._recompute()
        return self.d < self.epsilon

    def finish(self, converged: bool) -> TrajectoryRecord:
        n = self.n
        last_change = self.active_set_changes[-1][0] / n if self.active_set_changes else 0.0
        history: list[tuple[int, float]] = []
        if self.record_steps and self.residual_full:
            total = len(self.residual_full)
            stride = max(1, -(-total // RESIDUAL_POINTS_CAP))
            history = [
                (t + 1, self.residual_full[t]) for t in range(0, total, stride)
            ]
            if (total - 1) % stride != 0:
                history.append((total, self.residual_full[-1]))
        return TrajectoryRecord(
            steps=self.steps,
            rounds=self.t / n,
            converged=converged,
            terminal=list(self.x),
            active_set_changes=self.active_set_changes,
            last_change_round=last_change,
            reshuffle_events=self.reshuffles,
            residual_history=history,
            residual_full=self.residual_full,
        )


def initial_profile(g: Graph, cfg: DynamicsConfig, rng: np.random.Generator) -> list[float]:
    if isinstance(cfg.initial, str):
        if cfg.initial == "uniform":
            return [float(v) for v in rng.random(g.n)]
        if cfg.initial == "zeros":
            return [0.0] * g.n
        if cfg.initial == "ones":
            return [1.0] * g.n
        raise InputError(f"unknown initial profile kind {cfg.initial!r}")
    return [float(v) for v in cfg.initial]


def run(g: Graph, cfg: DynamicsConfig) -> TrajectoryRecord:
    """Random-order dynamics: i.i.d. uniform agent draws from the seeded
    generator, stopped at the first d < epsilon or at max_rounds*n steps."""
    rng = np.random.default_rng(cfg.seed)
    x0 = initial_profile(g, cfg, rng)
    eng = _Engine(g, cfg.delta, x0, cfg.epsilon,
                  cfg.effective_epsilon_reshuffle, cfg.record_steps)
    max_steps = cfg.max_rounds * g.n
    chunk = 4096
    done = 0
    while done < max_steps:
        agents = rng.integers(0, g.n, size=min(chunk, max_steps - done))
        for i in agents:
            eng.update(int(i))
            done += 1
            if eng.d < cfg.epsilon and eng.converged():
                return eng.finish(converged=True)
    return eng.finish(converged=False)


def replay_schedule(g: Graph, delta: float, x0, schedule, epsilon: float,
                    epsilon_reshuffle: float | None = None,
                    record_steps: bool = True) -> TrajectoryRecord:
    """Deterministic replay: agents updated in the given order; stops at the
    schedule end or at the first residual below epsilon."""
    if not schedule:
        raise InputError("schedule must be nonempty")
    for i in schedule:
        if not (0 <= int(i) < g.n):
            raise InputError(f"schedule vertex {i} out of range")
    er = epsilon if epsilon_reshuffle is None else epsilon_reshuffle
    eng = _Engine(g, delta, x0, epsilon, er, record_steps)
    for i in schedule:
        eng.update(int(i))
        if eng.d < epsilon and eng.converged():
            return eng.finish(converged=True)
    return eng.finish(converged=eng.converged())


def classify_events(rec: TrajectoryRecord, cfg: DynamicsConfig) -> tuple[float, list[tuple[int, int]]]:
    """Recompute (last_change_round, reshuffles) from a fully recorded run.

    A reshuffle is an activation preceded by a step with residual below
    epsilon_reshuffle and no intervening activation.
    """
    if not rec.steps or not rec.residual_full:
        return rec.last_change_round, list(rec.reshuffle_events)
    n = max(1, round(rec.steps[-1][0] / rec.rounds)) if rec.rounds else 1
    er = cfg.effective_epsilon_reshuffle
    activations = {(t, a) for t, a, d in rec.active_set_changes if d == "+"}
    reshuffles = []
    quasi = False
    for t, agent, _value in rec.steps:
        if (t, agent) in activations:
            if quasi:
                reshuffles.append((t, agent))
            quasi = False
        if rec.residual_full[t - 1] < er:
            quasi = True
    last = rec.active_set_changes[-1][0] / n if rec.active_set_changes else 0.0
    return last, reshuffles
