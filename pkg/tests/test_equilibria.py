import math

import pytest

from brdlab.equilibria import (
    DomainError,
    allowed_block_pairs,
    b_endpoint,
    count_path_equilibria_golden,
    enumerate_path_configurations,
    enumerate_stable_active_sets,
    solve_on_active_set,
    uniqueness_regime,
    verify_equilibrium,
    verify_large_delta_structure,
    PathConfiguration,
)
from brdlab.graphs import InputError, clique, complete_bipartite, disjoint_union, path


def test_solve_on_active_set_pair():
    rep = solve_on_active_set(path(2), 0.9, {0, 1})
    # (I + delta G)x = 1 on P2 gives x = 1/(1+delta) on both ends
    assert abs(rep.profile[0] - 1.0 / 1.9) < 1e-12
    assert abs(rep.profile[1] - 1.0 / 1.9) < 1e-12
    assert rep.stability == "stable"


def test_solve_alternating_p5():
    rep = solve_on_active_set(path(5), 0.7, {0, 2, 4})
    assert rep.profile == (1.0, 0.0, 1.0, 0.0, 1.0)
    assert rep.stability == "stable"
    assert rep.threshold == math.inf
    # inactive vertices see neighbor sum 2 > 1/0.7
    assert all(m > 0 for m in rep.inactivity_margins.values())


def test_unstable_when_margin_fails():
    # {0, 2} on P5 leaves vertex 4 with zero neighbor activity: it wants in
    rep = solve_on_active_set(path(5), 0.7, {0, 2})
    assert rep.stability == "unstable"


def test_boundary_verdict_at_threshold():
    rep = solve_on_active_set(path(2), 1.0, {0, 1})
    assert rep.stability == "boundary"


def test_all_active_p3_frozen_solve():
    # hand-solved: x1 = (1-2d)/(1-2d^2), x0 = x2 = 1 - d*x1 at d = 0.3
    rep = solve_on_active_set(path(3), 0.3, {0, 1, 2})
    x1 = 0.4 / 0.82
    assert abs(rep.profile[1] - x1) < 1e-12
    assert abs(rep.profile[0] - (1.0 - 0.3 * x1)) < 1e-12
    assert rep.stability == "stable"


def test_verify_equilibrium():
    g = path(5)
    assert verify_equilibrium(g, 0.7, [1, 0, 1, 0, 1], 1e-12)
    assert not verify_equilibrium(g, 0.7, [1, 0, 1, 0, 0], 1e-6)
    with pytest.raises(InputError):
        verify_equilibrium(g, 0.7, [1, 0, 1, 0, 1], -1.0)


def test_b_endpoint_values():
    assert b_endpoint(0.9, 1) == 1.0
    assert abs(b_endpoint(0.9, 2) - 1.0 / 1.9) < 1e-12
    # blocks longer than the spectral threshold allows have no equilibrium
    with pytest.raises(DomainError):
        b_endpoint(0.9, 3)


def test_path_configuration_active_set():
    cfg = PathConfiguration(blocks=(1, 2, 1))
    # 1 + sep + 2 + sep + 1 covers a path on 6 vertices
    assert cfg.active_set() == (0, 2, 3, 5)
    assert cfg.label() == "1-2-1"


def test_enumerate_path_configurations_against_brute_force():
    for n in (4, 6, 8):
        for delta in (0.45, 0.6, 0.9):
            brute = {r.s for r in enumerate_stable_active_sets(path(n), delta)}
            enum = {c.active_set() for c in enumerate_path_configurations(n, delta)}
            assert brute == enum, (n, delta)


def test_golden_recurrence():
    # e_n = e_{n-2} + e_{n-5}, seeded 1,1,1,2,1
    assert [count_path_equilibria_golden(n) for n in range(1, 11)] == [
        1, 1, 1, 2, 1, 3, 2, 4, 4, 5,
    ]
    # growth rate via consecutive ratio (the n-th root converges too slowly
    # because of the constant prefactor)
    growth = count_path_equilibria_golden(201) / count_path_equilibria_golden(200)
    assert abs(growth - 1.2365) < 1e-3


def test_allowed_block_pairs_m1():
    got = allowed_block_pairs(0.7, 1)
    assert got["pairs"] == {(1, 1), (1, 2), (2, 1)}
    lo, hi = got["interval"]
    assert abs(lo - 1.0 / abs(2 * math.cos(4 * math.pi / 5))) < 1e-12
    assert abs(hi - 1.0) < 1e-12
    with pytest.raises(DomainError):
        allowed_block_pairs(0.5, 1)


def test_enumeration_guard():
    with pytest.raises(InputError):
        enumerate_stable_active_sets(path(25), 0.5)


def test_large_delta_structure():
    g = disjoint_union(clique(3), clique(2))
    delta = 0.8
    for rep in enumerate_stable_active_sets(g, delta):
        assert verify_large_delta_structure(g, delta, rep.s)["passes"]
    with pytest.raises(DomainError):
        verify_large_delta_structure(g, 0.3, {0, 1, 2})


def test_bipartite_stable_sets_by_regime():
    g = complete_bipartite(5, 3)
    all_sets = lambda d: sorted(r.s for r in enumerate_stable_active_sets(g, d))
    assert all_sets(0.15) == [tuple(range(8))]
    assert all_sets(0.25) == [(0, 1, 2, 3, 4)]
    assert all_sets(0.5) == [(0, 1, 2, 3, 4), (5, 6, 7)]


def test_uniqueness_regime():
    assert uniqueness_regime(path(5), 0.3) == "unique"
    assert uniqueness_regime(path(5), 0.9) == "possibly-multiple"
