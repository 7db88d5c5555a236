"""Pick one existing edge whose weight to halve so the global K-efficiency grows.

``ekg1`` strengthens an edge leaving the vertex with the largest harmonic
K in-centrality, toward the neighbour with the largest weighted harmonic
K out-centrality. ``ekg2`` picks the edge carrying the largest entry of
the Wilkinson perturbation y x^T built from the Perron vectors of the
reciprocal K-path length matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from pathlength.graph import Graph, apply_perturbation
from pathlength.measures import round_sig, global_efficiency, reciprocal
from pathlength.spectral import ReducibleMatrixError, perron
from pathlength.tropical import kpath_matrix

METHODS = ("ekg1", "ekg2", "auto")


class EnhanceError(ValueError):
    """No proposal can be made for this graph."""


class PerronFailure(EnhanceError):
    """ekg2 cannot run: the reciprocal matrix is reducible or the iteration stalled."""


@dataclass
class Proposal:
    """A recommended edge scaling; vertex indices are 0-based."""

    h1: int
    h2: int
    method: str
    K: int
    e_before: float
    e_after: float
    symmetric: bool
    factor: float = 0.5
    alternatives: list[tuple[int, int]] = field(default_factory=list)

    def as_dict(self, one_based: bool = True) -> dict:
        off = 1 if one_based else 0
        return {
            "h1": self.h1 + off,
            "h2": self.h2 + off,
            "method": self.method,
            "K": self.K,
            "factor": self.factor,
            "symmetric": self.symmetric,
            "e_before": self.e_before,
            "e_after": self.e_after,
            "alternatives": [[a + off, b + off] for a, b in self.alternatives],
        }


def _check(g: Graph, K: int) -> None:
    if g.m == 0:
        raise EnhanceError("graph has no edges")
    if np.any(g.weights < 0):
        raise EnhanceError("edge enhancement requires nonnegative weights")
    if not 1 <= K <= g.n - 1:
        raise ValueError(f"K must lie in [1, {g.n - 1}], got {K}")


def _finish(g, K, method, h1, h2, e_before, factor, alternatives) -> tuple[Proposal, Graph]:
    symmetric = not g.directed
    g2 = apply_perturbation(g, h1, h2, factor, symmetric)
    e_after = global_efficiency(kpath_matrix(g2, K))
    prop = Proposal(h1, h2, method, K, e_before, e_after, symmetric, factor, alternatives)
    return prop, g2


def _ekg1(g: Graph, K: int, factor: float) -> tuple[Proposal, Graph]:
    _check(g, K)
    t = kpath_matrix(g, K)
    r = reciprocal(t).entries
    h_in = r.sum(axis=0)
    h_out = r.sum(axis=1)
    e_before = global_efficiency(t)
    tails = np.flatnonzero(round_sig(h_in) == round_sig(h_in).max())
    h1 = int(tails[0])
    if not np.any(g.weights[h1] > 0):
        raise EnhanceError(f"vertex {h1 + 1} has the largest in-centrality but no outgoing edge")
    picks = []
    for tail in tails:
        row = g.weights[tail]
        if not np.any(row > 0):
            continue
        # weighted by the edge weights, not merely masked; non-edges never qualify
        score = np.where(row > 0, round_sig(h_out * row), -np.inf)
        picks.extend((int(tail), int(j)) for j in np.flatnonzero(score == score.max()))
    h1, h2 = picks[0]
    alternatives = picks[1:]
    return _finish(g, K, "ekg1", h1, h2, e_before, factor, alternatives)


def _ekg2(g: Graph, K: int, factor: float, tol: float, max_iter: int) -> tuple[Proposal, Graph]:
    _check(g, K)
    t = kpath_matrix(g, K)
    r = reciprocal(t)
    try:
        pd = perron(r, tol=tol, max_iter=max_iter)
    except ReducibleMatrixError as exc:
        raise PerronFailure(f"reciprocal {K}-path length matrix is reducible; use ekg1") from exc
    if not pd.converged:
        raise PerronFailure(f"Perron iteration did not converge (residual {pd.residual:.3e}); use ekg1")
    e_before = global_efficiency(t)
    wilk = np.outer(pd.y, pd.x)
    mask = g.weights > 0
    scores = round_sig(np.where(mask, wilk, -np.inf))
    top = scores.max()
    cand = np.argwhere(scores == top)
    # ties: larger harmonic K in-centrality of the tail, then larger
    # harmonic K out-centrality of the head, then column-major order
    h_in = round_sig(r.entries.sum(axis=0))
    h_out = round_sig(r.entries.sum(axis=1))
    n = g.n
    ranked = sorted(
        (tuple(map(int, c)) for c in cand),
        key=lambda c: (-h_in[c[0]], -h_out[c[1]], c[1] * n + c[0]),
    )
    h1, h2 = ranked[0]
    return _finish(g, K, "ekg2", h1, h2, e_before, factor, ranked[1:])


def ekg1(g: Graph, K: int, factor: float = 0.5) -> Proposal:
    return _ekg1(g, K, factor)[0]


def ekg2(g: Graph, K: int, factor: float = 0.5, tol: float = 1e-12, max_iter: int = 10000) -> Proposal:
    return _ekg2(g, K, factor, tol, max_iter)[0]


def _one_step(g, K, method, factor, tol, max_iter):
    if method == "ekg1":
        return _ekg1(g, K, factor)
    if method == "ekg2":
        return _ekg2(g, K, factor, tol, max_iter)
    if method == "auto":
        try:
            return _ekg2(g, K, factor, tol, max_iter)
        except PerronFailure:
            return _ekg1(g, K, factor)
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


def improve(
    g: Graph,
    K: int,
    method: str = "auto",
    steps: int = 1,
    factor: float = 0.5,
    tol: float = 1e-12,
    max_iter: int = 10000,
) -> tuple[list[Proposal], Graph]:
    """Apply ``steps`` successive proposals, each on the previously perturbed graph."""
    if steps < 1:
        raise ValueError(f"steps must be at least 1, got {steps}")
    proposals = []
    for _ in range(steps):
        prop, g = _one_step(g, K, method, factor, tol, max_iter)
        proposals.append(prop)
    return proposals, g
