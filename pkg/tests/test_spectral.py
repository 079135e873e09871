import math

import pytest

from brdlab.graphs import clique, complete_bipartite, cycle, disjoint_union, path, star
from brdlab.spectral import (
    eigenvalues_sym,
    is_cospectral,
    lambda_min,
    path_lambda_min_closed_form,
    stability_threshold,
)


def test_path_eigenvalues_closed_form():
    for k in (1, 2, 3, 8, 25, 50):
        got = eigenvalues_sym(path(k)).eigenvalues
        want = sorted(2.0 * math.cos(j * math.pi / (k + 1)) for j in range(1, k + 1))
        assert max(abs(a - b) for a, b in zip(got, want)) < 1e-9


def test_path3_spectrum_exact():
    vals = eigenvalues_sym(path(3)).eigenvalues
    assert abs(vals[0] + math.sqrt(2)) < 1e-12
    assert abs(vals[1]) < 1e-12
    assert abs(vals[2] - math.sqrt(2)) < 1e-12


def test_bipartite_lambda_min():
    for m, l in [(1, 1), (4, 1), (5, 3), (20, 20)]:
        assert abs(lambda_min(complete_bipartite(m, l)) + math.sqrt(m * l)) < 1e-9


def test_clique_lambda_min():
    assert abs(lambda_min(clique(6)) + 1.0) < 1e-12


def test_path_lambda_min_closed_form_matches():
    assert path_lambda_min_closed_form(1) == 0.0
    for k in (2, 3, 10, 41):
        assert abs(path_lambda_min_closed_form(k) - lambda_min(path(k))) < 1e-9


def test_stability_threshold():
    # lambda_min(P2) = -1 so the pair threshold is 1
    assert abs(stability_threshold(path(2), {0, 1}) - 1.0) < 1e-12
    # independent sets have no negative eigenvalue: threshold inf
    assert stability_threshold(path(5), {0, 2, 4}) == math.inf
    # P5 threshold 1/sqrt(3)
    assert abs(stability_threshold(path(5), range(5)) - 1 / math.sqrt(3)) < 1e-12


def test_cospectral_mates():
    g = star(4)
    h = disjoint_union(cycle(4), path(1))
    assert is_cospectral(g, h, 1e-9)
    assert abs(lambda_min(g) + 2.0) < 1e-9
    assert abs(lambda_min(h) + 2.0) < 1e-9
    assert not is_cospectral(g, path(5), 1e-9)
    assert not is_cospectral(g, path(4), 1e-9)


def test_spectrum_source_n():
    s = eigenvalues_sym(path(4))
    assert s.source_n == 4
    assert len(s.eigenvalues) == 4
