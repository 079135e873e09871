"""Undirected simple graphs: construction, generators, structural queries."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


class InputError(ValueError):
    """Invalid user-supplied parameters (bad vertex, infeasible sizes, ...)."""


class GenerationError(RuntimeError):
    """A random generator exhausted its retry budget."""


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph on vertices 0..n-1."""

    n: int
    edges: frozenset[tuple[int, int]]
    _adjacency: np.ndarray | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise InputError(f"graph needs at least one vertex, got n={self.n}")
        for i, j in self.edges:
            if i == j:
                raise InputError(f"self-loop at vertex {i}")
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise InputError(f"edge ({i},{j}) out of range for n={self.n}")

    @property
    def adjacency(self) -> np.ndarray:
        """Dense symmetric 0/1 adjacency matrix (built on demand, cached)."""
        if self._adjacency is None:
            a = np.zeros((self.n, self.n))
            for i, j in self.edges:
                a[i, j] = a[j, i] = 1.0
            object.__setattr__(self, "_adjacency", a)
        return self._adjacency

    def neighbors(self) -> list[list[int]]:
        """Adjacency lists, each sorted ascending."""
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for i, j in self.edges:
            nbrs[i].append(j)
            nbrs[j].append(i)
        for lst in nbrs:
            lst.sort()
        return nbrs

    def edge_count(self) -> int:
        return len(self.edges)

    def to_json(self) -> dict:
        return {"n": self.n, "edges": sorted([list(e) for e in self.edges])}


def build_graph(n: int, edges) -> Graph:
    """Build a graph from (possibly duplicated, unordered) vertex pairs."""
    canon = set()
    for i, j in edges:
        i, j = int(i), int(j)
        if i == j:
            raise InputError(f"self-loop at vertex {i}")
        if not (0 <= i < n and 0 <= j < n):
            raise InputError(f"edge ({i},{j}) out of range for n={n}")
        canon.add((min(i, j), max(i, j)))
    return Graph(n=n, edges=frozenset(canon))


def graph_from_json(obj: dict) -> Graph:
    try:
        return build_graph(int(obj["n"]), obj["edges"])
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed graph JSON: {exc}") from exc


# ---------------------------------------------------------------------------
# deterministic generators

def path(n: int) -> Graph:
    if n < 1:
        raise InputError("path size must be >= 1")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 1:
        raise InputError("cycle size must be >= 1")
    if n <= 2:
        return path(n)
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def clique(n: int) -> Graph:
    if n < 1:
        raise InputError("clique size must be >= 1")
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(m: int, l: int) -> Graph:
    """Parts {0..m-1} and {m..m+l-1}."""
    if m < 1 or l < 1:
        raise InputError("complete_bipartite part sizes must be >= 1")
    return build_graph(m + l, [(i, m + j) for i in range(m) for j in range(l)])


def star(m: int) -> Graph:
    """The star with m leaves, K_{1,m} (leaves first, hub last)."""
    return complete_bipartite(m, 1)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Union with h's vertices relabeled by offset g.n."""
    edges = [list(e) for e in g.edges]
    edges += [(i + g.n, j + g.n) for i, j in h.edges]
    return build_graph(g.n + h.n, edges)


# ---------------------------------------------------------------------------
# random generators
#
# All random generation draws from numpy's PCG64 seeded with a 64-bit value;
# identical (model, params, n, seed) reproduce the same graph within this
# implementation.

def erdos_renyi(n: int, p: float, seed: int) -> Graph:
    if not (0.0 <= p <= 1.0):
        raise InputError(f"edge probability must be in [0,1], got {p}")
    if n < 1:
        raise InputError("n must be >= 1")
    rng = np.random.default_rng(seed)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    draws = rng.random(len(pairs))
    return build_graph(n, [e for e, u in zip(pairs, draws) if u < p])


def barabasi_albert(n: int, m: int, seed: int) -> Graph:
    """Start from a clique of size m; attach each new node by m preferential
    edges, redrawing the target on duplicates.  When every existing degree is
    zero (m=1 seed), the target is drawn uniformly."""
    if not (1 <= m < n):
        raise InputError(f"barabasi_albert needs 1 <= m < n, got m={m}, n={n}")
    rng = np.random.default_rng(seed)
    edges: set[tuple[int, int]] = set()
    degree = [0] * n
    for i in range(m):
        for j in range(i + 1, m):
            edges.add((i, j))
            degree[i] += 1
            degree[j] += 1
    for v in range(m, n):
        chosen: set[int] = set()
        while len(chosen) < m:
            total = sum(degree[:v])
            if total == 0:
                target = int(rng.integers(0, v))
            else:
                r = rng.random() * total
                acc = 0.0
                target = v - 1
                for u in range(v):
                    acc += degree[u]
                    if r < acc:
                        target = u
                        break
            if target in chosen:
                continue
            chosen.add(target)
        for u in chosen:
            edges.add((min(u, v), max(u, v)))
            degree[u] += 1
            degree[v] += 1
    return build_graph(n, edges)


def random_regular(n: int, d: int, seed: int, max_tries: int = 1000) -> Graph:
    """Pairing/configuration model with rejection of loops and multi-edges."""
    if d < 0 or d >= n:
        raise InputError(f"regular degree must satisfy 0 <= d < n, got d={d}")
    if (n * d) % 2 != 0:
        raise InputError(f"n*d must be even, got n={n}, d={d}")
    if d == 0:
        return build_graph(n, [])
    rng = np.random.default_rng(seed)
    for _ in range(max_tries):
        # stub-matching: repeatedly pair two random free stubs, skipping
        # pairings that would create a loop or a repeated edge; restart the
        # whole attempt if no legal pairing remains
        stubs = [v for v in range(n) for _ in range(d)]
        rng.shuffle(stubs)
        edges: set[tuple[int, int]] = set()
        stuck = False
        while stubs and not stuck:
            for _attempt in range(200):
                if len(stubs) == 1:
                    stuck = True
                    break
                a, b = rng.integers(0, len(stubs), 2)
                i, j = stubs[int(a)], stubs[int(b)]
                if i == j:
                    continue
                e = (min(i, j), max(i, j))
                if e in edges:
                    continue
                edges.add(e)
                for k in sorted((int(a), int(b)), reverse=True):
                    stubs.pop(k)
                break
            else:
                stuck = True
        if not stuck:
            return build_graph(n, edges)
    raise GenerationError(
        f"stub matching failed after {max_tries} tries (n={n}, d={d})"
    )


# ---------------------------------------------------------------------------
# structural queries

def _canon(s) -> tuple[int, ...]:
    return tuple(sorted(set(int(v) for v in s)))


def induced_subgraph(g: Graph, s) -> tuple[Graph, list[int]]:
    """Induced subgraph with vertices relabeled in ascending original order.

    Returns (subgraph, relabeling) where relabeling[new_index] = old vertex.
    """
    members = _canon(s)
    if not members:
        raise InputError("induced subgraph of an empty vertex set")
    if any(v < 0 or v >= g.n for v in members):
        raise InputError(f"subset {members} not within [0,{g.n})")
    index = {v: k for k, v in enumerate(members)}
    edges = [
        (index[i], index[j]) for i, j in g.edges if i in index and j in index
    ]
    return build_graph(len(members), edges), list(members)


def connected_components(g: Graph, s) -> list[tuple[int, ...]]:
    """Maximal connected components of the subgraph induced by s, each a
    sorted tuple, listed by smallest member."""
    members = _canon(s)
    member_set = set(members)
    nbrs = g.neighbors()
    seen: set[int] = set()
    comps = []
    for start in members:
        if start in seen:
            continue
        stack = [start]
        comp = []
        seen.add(start)
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in nbrs[v]:
                if u in member_set and u not in seen:
                    seen.add(u)
                    stack.append(u)
        comps.append(tuple(sorted(comp)))
    comps.sort(key=lambda c: c[0])
    return comps


def is_disjoint_clique_union(g: Graph, s) -> tuple[bool, list[int]]:
    """True iff every component induced by s is complete; returns the clique
    sizes (sorted descending) when true, [] otherwise."""
    edge_set = g.edges
    sizes = []
    for comp in connected_components(g, s):
        k = len(comp)
        internal = sum(
            1
            for a in range(k)
            for b in range(a + 1, k)
            if (comp[a], comp[b]) in edge_set
        )
        if internal != k * (k - 1) // 2:
            return False, []
        sizes.append(k)
    sizes.sort(reverse=True)
    return True, sizes


def forbidden_subgraph_check(g: Graph, max_n: int = 64) -> dict:
    """First induced witness (or None) for each of P4, C4, K_{1,3}.

    Exhaustive search over 4-subsets; guarded to graphs of at most max_n
    vertices.
    """
    if g.n > max_n:
        raise InputError(f"forbidden subgraph scan capped at n={max_n}")
    from itertools import combinations

    adj = g.adjacency
    found: dict[str, tuple[int, int, int, int] | None] = {
        "P4": None,
        "C4": None,
        "K13": None,
    }
    for quad in combinations(range(g.n), 4):
        sub = adj[np.ix_(quad, quad)]
        m = int(sub.sum()) // 2
        degs = sorted(int(x) for x in sub.sum(axis=0))
        if m == 3 and degs == [1, 1, 2, 2] and found["P4"] is None:
            found["P4"] = quad
        elif m == 4 and degs == [2, 2, 2, 2] and found["C4"] is None:
            found["C4"] = quad
        elif m == 3 and degs == [1, 1, 1, 3] and found["K13"] is None:
            found["K13"] = quad
        if all(v is not None for v in found.values()):
            break
    return found


# ---------------------------------------------------------------------------
# spec strings

def parse_graph_spec(spec: str, seed: int = 0) -> Graph:
    """Generator spec strings: "path:100", "cycle:6", "clique:5", "star:4",
    "kml:60:5", "er:100:0.2", "ba:100:5", "rr:100:10"."""
    parts = spec.strip().split(":")
    kind = parts[0].lower()
    try:
        if kind == "path":
            return path(int(parts[1]))
        if kind == "cycle":
            return cycle(int(parts[1]))
        if kind == "clique":
            return clique(int(parts[1]))
        if kind == "star":
            return star(int(parts[1]))
        if kind == "kml":
            return complete_bipartite(int(parts[1]), int(parts[2]))
        if kind == "er":
            return erdos_renyi(int(parts[1]), float(parts[2]), seed)
        if kind == "ba":
            return barabasi_albert(int(parts[1]), int(parts[2]), seed)
        if kind == "rr":
            return random_regular(int(parts[1]), int(parts[2]), seed)
    except (IndexError, ValueError) as exc:
        raise InputError(f"malformed graph spec {spec!r}") from exc
    raise InputError(f"unknown graph spec {spec!r}")
