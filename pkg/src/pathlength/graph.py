"""Weighted simple digraphs stored as dense adjacency weights.

Vertex indices are 0-based everywhere in the library; the 1-based
convention only appears at the file/CLI boundary (see ``pathlength.io``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np


class GraphError(ValueError):
    """Raised for input that does not describe a valid simple graph."""


@dataclass(frozen=True)
class Graph:
    """Immutable weighted simple graph.

    Parameters
    ----------
    weights : array_like, shape (n, n)
        ``weights[i, j]`` is the weight of the edge i -> j; 0 means no edge.
    directed : bool, optional
        Declared directedness. ``None`` detects it from exact symmetry.
        Declaring ``False`` for an asymmetric matrix is an error.
    allow_negative : bool
        Permit negative edge weights.
    """

    weights: np.ndarray
    directed: Optional[bool] = None
    allow_negative: bool = False
    _m: int = field(init=False, repr=False, compare=False, default=0)

    def __post_init__(self):
        w = np.array(self.weights, dtype=float)
        if w.ndim != 2 or w.shape[0] != w.shape[1] or w.shape[0] < 1:
            raise GraphError(f"weights must be a non-empty square matrix, got shape {w.shape}")
        if not np.all(np.isfinite(w)):
            raise GraphError("weights must be finite")
        if np.any(np.diag(w) != 0):
            raise GraphError("diagonal must be zero (self-loops are not allowed)")
        if not self.allow_negative and np.any(w < 0):
            raise GraphError("negative weights require allow_negative=True")
        symmetric = bool(np.array_equal(w, w.T))
        if self.directed is None:
            directed = not symmetric
        else:
            directed = bool(self.directed)
            if not directed and not symmetric:
                raise GraphError("graph declared undirected but weights are not symmetric")
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "directed", directed)
        object.__setattr__(self, "_m", int(np.count_nonzero(w)))

    @property
    def n(self) -> int:
        return self.weights.shape[0]

    @property
    def m(self) -> int:
        """Number of nonzero weights (an undirected edge counts twice)."""
        return self._m

    @property
    def unweighted(self) -> bool:
        return bool(np.all((self.weights == 0) | (self.weights == 1)))

    def has_edge(self, i: int, j: int) -> bool:
        return i != j and self.weights[i, j] != 0

    def edges(self) -> list[tuple[int, int, float]]:
        """Edges as 0-based ``(i, j, w)``; undirected graphs list each pair once with i < j."""
        rows, cols = np.nonzero(self.weights)
        out = []
        for i, j in zip(rows.tolist(), cols.tolist()):
            if not self.directed and j < i:
                continue
            out.append((i, j, float(self.weights[i, j])))
        return out


def from_edge_list(
    edges: Iterable[Sequence],
    n: int,
    directed: bool,
    allow_negative: bool = False,
) -> Graph:
    """Build a graph from 1-based ``(i, j)`` or ``(i, j, w)`` tuples.

    Unweighted tuples get weight 1. For undirected graphs every edge installs
    both ``w_ij`` and ``w_ji``. Repeating an edge with the same weight is
    tolerated; a conflicting repeat is an error.
    """
    if n < 1:
        raise GraphError(f"n must be positive, got {n}")
    w = np.zeros((n, n))
    for edge in edges:
        if len(edge) == 2:
            i, j = edge
            weight = 1.0
        elif len(edge) == 3:
            i, j, weight = edge
            weight = float(weight)
        else:
            raise GraphError(f"edge must be (i, j) or (i, j, w), got {edge!r}")
        if int(i) != i or int(j) != j:
            raise GraphError(f"vertex indices must be integers, got {edge!r}")
        i, j = int(i), int(j)
        if not (1 <= i <= n and 1 <= j <= n):
            raise GraphError(f"edge ({i}, {j}) out of range 1..{n}")
        if i == j:
            raise GraphError(f"self-loop at vertex {i}")
        if weight == 0:
            raise GraphError(f"edge ({i}, {j}) has zero weight")
        if not np.isfinite(weight):
            raise GraphError(f"edge ({i}, {j}) has non-finite weight")
        if weight < 0 and not allow_negative:
            raise GraphError(f"edge ({i}, {j}) has negative weight {weight}")
        pairs = [(i - 1, j - 1)] if directed else [(i - 1, j - 1), (j - 1, i - 1)]
        for a, b in pairs:
            if w[a, b] != 0 and w[a, b] != weight:
                raise GraphError(
                    f"duplicate edge ({a + 1}, {b + 1}) with conflicting weights {w[a, b]} and {weight}"
                )
            w[a, b] = weight
    return Graph(w, directed=directed, allow_negative=allow_negative)


def is_symmetric(g: Graph) -> bool:
    return bool(np.array_equal(g.weights, g.weights.T))


def to_one_star(g: Graph) -> np.ndarray:
    """First tropical power: absent off-diagonal edges become +inf, diagonal 0."""
    t = np.where(g.weights != 0, g.weights, np.inf)
    np.fill_diagonal(t, 0.0)
    return t


def apply_perturbation(g: Graph, h1: int, h2: int, factor: float = 0.5, symmetric: Optional[bool] = None) -> Graph:
    """Scale the weight of the existing edge h1 -> h2 (0-based) by ``factor``.

    With ``symmetric`` (default: the graph is undirected) the reverse entry
    is scaled too, keeping an undirected graph undirected.
    """
    if not 0 < factor <= 1:
        raise GraphError(f"factor must lie in (0, 1], got {factor}")
    if not (0 <= h1 < g.n and 0 <= h2 < g.n) or not g.has_edge(h1, h2):
        raise GraphError(f"({h1 + 1}, {h2 + 1}) is not an existing edge")
    if g.weights[h1, h2] < 0:
        raise GraphError(f"edge ({h1 + 1}, {h2 + 1}) has negative weight")
    if symmetric is None:
        symmetric = not g.directed
    w = g.weights.copy()
    w[h1, h2] *= factor
    if symmetric:
        w[h2, h1] *= factor
    directed = g.directed or not np.array_equal(w, w.T)
    return Graph(w, directed=directed, allow_negative=g.allow_negative)
