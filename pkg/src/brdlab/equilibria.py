"""Equilibrium solving, stability classification, and enumeration.

Strictness conventions: positivity and inactivity margins must clear 1e-12;
a delta within 1e-12 of a spectral threshold yields the verdict "boundary".
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

from .graphs import Graph, InputError, induced_subgraph, is_disjoint_clique_union, path
from .spectral import lambda_min, path_lambda_min_closed_form, stability_threshold

STRICT_TOL = 1e-12
BOUNDARY_TOL = 1e-12
GOLDEN_INV = (math.sqrt(5.0) - 1.0) / 2.0  # 1/phi


class DomainError(ValueError):
    """Parameter outside the regime where the quantity is defined."""


@dataclass(frozen=True)
class ActiveSetReport:
    s: tuple[int, ...]
    profile: tuple[float, ...]  # full-length, zero off s
    solve_ok: bool
    positivity_ok: bool
    inactivity_margins: dict[int, float]  # inactive vertex -> sum_j g_ij x_j - 1/delta
    stability: str  # "stable" | "unstable" | "boundary"
    threshold: float  # 1/|lambda_min(G_S)|, +inf for independent sets

    def to_json(self) -> dict:
        return {
            "set": list(self.s),
            "levels": list(self.profile),
            "stable": self.stability,
            "threshold": "inf" if math.isinf(self.threshold) else self.threshold,
            "margins": {str(v): m for v, m in self.inactivity_margins.items()},
        }


@dataclass(frozen=True)
class PathConfiguration:
    blocks: tuple[int, ...]

    def __post_init__(self):
        if any(a < 1 for a in self.blocks):
            raise InputError("block sizes must be positive")

    def active_set(self) -> tuple[int, ...]:
        """Vertices of the active set this configuration describes on the
        path of length sum(blocks) + len(blocks) - 1."""
        out = []
        pos = 0
        for a in self.blocks:
            out.extend(range(pos, pos + a))
            pos += a + 1
        return tuple(out)

    def label(self) -> str:
        return "-".join(str(a) for a in self.blocks)


def solve_on_active_set(g: Graph, delta: float, s) -> ActiveSetReport:
    """Solve (I + delta*G_S)x = 1 on s and classify stability per the
    active-set criteria: positivity on s, strict inactivity off s, and
    delta below the spectral threshold of the induced subgraph."""
    members = tuple(sorted(set(int(v) for v in s)))
    if not members:
        raise InputError("active set must be nonempty")
    sub, labels = induced_subgraph(g, members)
    b = np.eye(sub.n) + delta * sub.adjacency
    threshold = stability_threshold(g, members)
    boundary = abs(delta - threshold) <= BOUNDARY_TOL
    try:
        sol = np.linalg.solve(b, np.ones(sub.n))
        solve_ok = bool(np.all(np.isfinite(sol)))
    except np.linalg.LinAlgError:
        sol = np.zeros(sub.n)
        solve_ok = False
    profile = [0.0] * g.n
    if solve_ok:
        for k, v in enumerate(labels):
            profile[v] = float(sol[k])
    positivity_ok = solve_ok and bool(np.all(sol > STRICT_TOL))
    nbrs = g.neighbors()
    member_set = set(members)
    margins = {}
    for v in range(g.n):
        if v in member_set:
            continue
        neigh_sum = sum(profile[u] for u in nbrs[v])
        margins[v] = neigh_sum - (1.0 / delta if delta > 0 else math.inf)
    if not solve_ok or boundary:
        stability = "boundary"
    elif (
        delta < threshold
        and positivity_ok
        and all(m > STRICT_TOL for m in margins.values())
    ):
        stability = "stable"
    else:
        stability = "unstable"
    return ActiveSetReport(
        s=members,
        profile=tuple(profile),
        solve_ok=solve_ok,
        positivity_ok=positivity_ok,
        inactivity_margins=margins,
        stability=stability,
        threshold=threshold,
    )


def verify_equilibrium(g: Graph, delta: float, x, tol: float) -> bool:
    from .dynamics import residual_d

    if tol < 0:
        raise InputError("tolerance must be >= 0")
    return residual_d(g, delta, x) <= tol


@lru_cache(maxsize=None)
def _block_solve(delta: float, k: int) -> tuple[float, ...]:
    b = np.eye(k) + delta * path(k).adjacency
    return tuple(float(v) for v in np.linalg.solve(b, np.ones(k)))


def b_endpoint(delta: float, k: int) -> float:
    """Endpoint activity of the all-active equilibrium on a k-path."""
    if k < 1:
        raise InputError("block length must be >= 1")
    lam = path_lambda_min_closed_form(k)
    if lam < 0 and delta >= 1.0 / abs(lam):
        raise DomainError(
            f"all-active equilibrium on a {k}-path does not exist at delta={delta}"
        )
    sol = _block_solve(delta, k)
    if any(v <= 0 for v in sol):
        raise DomainError(
            f"all-active solve on a {k}-path loses positivity at delta={delta}"
        )
    return sol[0]


def _block_valid(delta: float, k: int) -> bool:
    """Theorem conditions 1 and 2 for a single block: spectral stability
    (vacuous for k=1) and positivity of the all-active solve."""
    if k == 1:
        return True
    lam = path_lambda_min_closed_form(k)
    if delta >= 1.0 / abs(lam):
        return False
    return all(v > STRICT_TOL for v in _block_solve(delta, k))


def enumerate_path_configurations(n: int, delta: float) -> list[PathConfiguration]:
    """All block configurations supporting a stable equilibrium on the n-path:
    every block individually valid and every adjacent endpoint pair summing
    above 1/delta."""
    if n < 2:
        raise InputError("path length must be >= 2")
    if not (0.0 <= delta <= 1.0):
        raise InputError("delta must be in [0,1]")
    valid_cache: dict[int, bool] = {}
    b_cache: dict[int, float] = {}

    def valid(k: int) -> bool:
        if k not in valid_cache:
            valid_cache[k] = _block_valid(delta, k)
        return valid_cache[k]

    def b_val(k: int) -> float:
        if k not in b_cache:
            b_cache[k] = _block_solve(delta, k)[0]
        return b_cache[k]

    inv_delta = math.inf if delta == 0 else 1.0 / delta
    out: list[PathConfiguration] = []

    def extend(prefix: list[int], remaining: int):
        # remaining = vertices still to cover, after prefix and its separator
        for a in range(1, remaining + 1):
            if not valid(a):
                continue
            if prefix and not (b_val(prefix[-1]) + b_val(a) > inv_delta):
                continue
            if a == remaining:
                out.append(PathConfiguration(blocks=tuple(prefix + [a])))
            elif remaining - a - 1 >= 1:
                extend(prefix + [a], remaining - a - 1)

    extend([], n)
    return out


def allowed_block_pairs(delta: float, m: int) -> dict:
    """Adjacency rule for delta strictly between the stability thresholds of
    the 2m+2 and 2m paths: only (1,1), (1,2m), (2m,1) may neighbor."""
    if m < 1:
        raise InputError("m must be >= 1")
    lo = 1.0 / abs(path_lambda_min_closed_form(2 * m + 2))
    hi = 1.0 / abs(path_lambda_min_closed_form(2 * m))
    if not (lo < delta < hi):
        raise DomainError(
            f"delta={delta} outside the interval ({lo:.6f}, {hi:.6f}) for m={m}"
        )
    return {
        "pairs": {(1, 1), (1, 2 * m), (2 * m, 1)},
        "interval": (lo, hi),
        "m": m,
    }


def count_path_equilibria_golden(n: int) -> int:
    """Number of stable path equilibria for delta in (1/phi, 1):
    e_n = e_{n-2} + e_{n-5}, seeded 1,1,1,2,1."""
    if n < 1:
        raise InputError("n must be >= 1")
    e = [0, 1, 1, 1, 2, 1]
    for k in range(6, n + 1):
        e.append(e[k - 2] + e[k - 5])
    return e[n]


def enumerate_stable_active_sets(g: Graph, delta: float, max_n: int = 20) -> list[ActiveSetReport]:
    """Brute force over all nonempty vertex subsets, keeping the stable ones.
    The oracle for every structural classification; exponential, guarded."""
    if g.n > max_n:
        raise InputError(f"brute-force enumeration capped at n={max_n}")
    out = []
    vertices = list(range(g.n))
    for size in range(1, g.n + 1):
        for combo in combinations(vertices, size):
            report = solve_on_active_set(g, delta, combo)
            if report.stability == "stable":
                out.append(report)
    return out


def verify_large_delta_structure(g: Graph, delta: float, s) -> dict:
    """Golden-regime structure check: the active set must be a disjoint union
    of cliques and every outside vertex must satisfy the inactivity sum
    sum_k delta*n_k / (1 + (k-1)delta) >= 1."""
    if not (GOLDEN_INV < delta < 1.0):
        raise DomainError(f"delta={delta} outside (1/phi, 1)")
    members = set(int(v) for v in s)
    ok_cliques, sizes = is_disjoint_clique_union(g, members)
    if not ok_cliques:
        return {"passes": False, "reason": "active set is not a disjoint clique union"}
    from .graphs import connected_components

    comps = connected_components(g, members)
    comp_size = {}
    for comp in comps:
        for v in comp:
            comp_size[v] = len(comp)
    nbrs = g.neighbors()
    for v in range(g.n):
        if v in members:
            continue
        by_size: dict[int, int] = {}
        for u in nbrs[v]:
            if u in members:
                k = comp_size[u]
                by_size[k] = by_size.get(k, 0) + 1
        total = sum(
            delta * cnt / (1.0 + (k - 1) * delta) for k, cnt in by_size.items()
        )
        if total < 1.0:
            return {
                "passes": False,
                "reason": f"inactivity sum {total:.6f} < 1 at vertex {v}",
                "failing_vertex": v,
            }
    return {"passes": True, "clique_sizes": sizes}


def uniqueness_regime(g: Graph, delta: float) -> str:
    lam = lambda_min(g)
    if lam >= 0 or delta < 1.0 / abs(lam):
        return "unique"
    return "possibly-multiple"
