"""Adjacency spectra and the stability thresholds derived from them."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graphs import Graph, InputError, induced_subgraph


@dataclass(frozen=True)
class Spectrum:
    """All adjacency eigenvalues of a graph, sorted ascending."""

    eigenvalues: tuple[float, ...]
    source_n: int

    def __post_init__(self):
        assert len(self.eigenvalues) == self.source_n


def eigenvalues_sym(g: Graph) -> Spectrum:
    """Full spectrum of the adjacency matrix via a dense symmetric solver
    (LAPACK tridiagonalization + implicit-shift iteration)."""
    vals = np.linalg.eigvalsh(g.adjacency)
    return Spectrum(eigenvalues=tuple(float(v) for v in vals), source_n=g.n)


def lambda_min(g: Graph) -> float:
    return eigenvalues_sym(g).eigenvalues[0]


def path_lambda_min_closed_form(k: int) -> float:
    """Smallest adjacency eigenvalue of the path on k vertices,
    2*cos(k*pi/(k+1)); equals 0 for k=1."""
    if k < 1:
        raise InputError("path length must be >= 1")
    if k == 1:
        return 0.0
    return 2.0 * math.cos(k * math.pi / (k + 1))


def stability_threshold(g: Graph, s) -> float:
    """1/|lambda_min| of the subgraph induced by s; +inf when lambda_min >= 0
    (the active set carries no destabilizing eigenvalue)."""
    sub, _ = induced_subgraph(g, s)
    lam = lambda_min(sub)
    if lam >= 0.0:
        return math.inf
    return 1.0 / abs(lam)


def is_cospectral(g: Graph, h: Graph, tol: float = 1e-9) -> bool:
    if tol <= 0:
        raise InputError("tolerance must be positive")
    if g.n != h.n:
        return False
    a = eigenvalues_sym(g).eigenvalues
    b = eigenvalues_sym(h).eigenvalues
    return all(abs(x - y) <= tol for x, y in zip(a, b))
