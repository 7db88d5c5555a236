"""Min-plus matrix algebra and K-step path length matrices."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from pathlength.graph import Graph, GraphError, to_one_star

# cap on the temporary (rows x edges) block built by one min-plus step
_BLOCK_ELEMS = 1 << 22


class NegativeCycleError(ArithmeticError):
    """Shortest paths are undefined because a negative cycle was found."""


@dataclass(frozen=True)
class TropicalMatrix:
    """Entries of a min-plus power A^{k,*}: shortest lengths over paths of at most k edges.

    ``stable_at`` is the smallest level L with A^{L,*} = A^{L+1,*} when the
    computation detected it, else None. ``directed`` records the source graph.
    """

    entries: np.ndarray
    k: int
    stable_at: Optional[int] = None
    directed: bool = False

    def __post_init__(self):
        e = np.array(self.entries, dtype=float)
        if e.ndim != 2 or e.shape[0] != e.shape[1]:
            raise ValueError(f"entries must be square, got shape {e.shape}")
        e.setflags(write=False)
        object.__setattr__(self, "entries", e)

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    @property
    def connected(self) -> bool:
        """True when every off-diagonal entry is finite."""
        return bool(np.all(np.isfinite(self.entries)))

    def transpose(self) -> "TropicalMatrix":
        return TropicalMatrix(np.ascontiguousarray(self.entries.T), self.k, self.stable_at, self.directed)


MatrixLike = Union[TropicalMatrix, np.ndarray]


def _as_array(a: MatrixLike) -> np.ndarray:
    return a.entries if isinstance(a, TropicalMatrix) else np.asarray(a, dtype=float)


def minplus_multiply(a: MatrixLike, b: MatrixLike) -> np.ndarray:
    """Tropical product ``c[i, j] = min_h a[i, h] + b[h, j]``.

    +inf absorbs addition. Operands must be square and of equal order.
    """
    a = _as_array(a)
    b = _as_array(b)
    if a.ndim != 2 or b.ndim != 2 or a.shape[1] != b.shape[0]:
        raise ValueError(f"cannot min-plus multiply shapes {a.shape} and {b.shape}")
    c = np.full((a.shape[0], b.shape[1]), np.inf)
    for h in range(a.shape[1]):
        np.minimum(c, a[:, h, None] + b[None, h, :], out=c)
    return c


class _EdgeKernel:
    """One multiplication by A^{1,*}, touching only the m stored edges.

    Right-multiplying by A^{1,*} gives ``c[:, j] = min(t[:, j], min_{h->j} t[:, h] + w_hj)``,
    so each step costs O(n m) instead of O(n^3).
    """

    def __init__(self, g: Graph):
        src, dst = np.nonzero(g.weights)
        order = np.argsort(dst, kind="stable")
        self.src = src[order]
        dst = dst[order]
        self.w = g.weights[self.src, dst]
        self.targets, self.starts = np.unique(dst, return_index=True)
        self.n = g.n
        self.rows_per_block = max(1, _BLOCK_ELEMS // max(1, self.src.size))

    def step(self, t: np.ndarray) -> np.ndarray:
        c = t.copy()
        if self.src.size == 0:
            return c
        for r0 in range(0, self.n, self.rows_per_block):
            r1 = min(self.n, r0 + self.rows_per_block)
            vals = t[r0:r1, self.src] + self.w
            best = np.minimum.reduceat(vals, self.starts, axis=1)
            block = c[r0:r1, self.targets]
            c[r0:r1, self.targets] = np.minimum(block, best)
        return c


def _reset_diagonal(c: np.ndarray, level: int) -> None:
    d = np.diagonal(c)
    if np.any(d < 0):
        v = int(np.argmax(d < 0))
        raise NegativeCycleError(f"negative cycle through vertex {v + 1} detected at level {level}")
    np.fill_diagonal(c, 0.0)


def kpath_matrix(g: Graph, K: int) -> TropicalMatrix:
    """Shortest path lengths using at most ``K`` edges, +inf where none exists.

    Powers are formed one level at a time (A^{k,*} = A^{k-1,*} * A^{1,*}),
    resetting the diagonal to zero after each product and stopping as soon
    as two consecutive levels agree exactly.
    """
    n = g.n
    if n == 1:
        return TropicalMatrix(np.zeros((1, 1)), k=0, stable_at=0, directed=g.directed)
    if not 1 <= K <= n - 1:
        raise ValueError(f"K must lie in [1, {n - 1}], got {K}")
    t = to_one_star(g)
    stable_at = None
    kernel = _EdgeKernel(g)
    for level in range(2, K + 1):
        c = kernel.step(t)
        _reset_diagonal(c, level)
        if np.array_equal(c, t):
            stable_at = level - 1
            break
        t = c
    else:
        if K == n - 1 and g.allow_negative and np.any(g.weights < 0):
            # a negative cycle of length n only shows up one level later
            c = kernel.step(t)
            _reset_diagonal(c, n)
            if np.array_equal(c, t):
                stable_at = K
    return TropicalMatrix(t, k=K, stable_at=stable_at, directed=g.directed)


def path_length_matrix(g: Graph) -> TropicalMatrix:
    """Full path length matrix A^{n-1,*}."""
    return kpath_matrix(g, max(g.n - 1, 1))


def diameter(g: Graph) -> float:
    """Largest shortest-path length; +inf unless (strongly) connected."""
    n = g.n
    if n == 1:
        return 0.0
    if not g.unweighted:
        t = path_length_matrix(g).entries
        return float(t.max())
    # unweighted: the first level without an infinite entry is the diameter
    t = to_one_star(g)
    kernel = _EdgeKernel(g)
    for level in range(1, n):
        if np.all(np.isfinite(t)):
            return float(level)
        c = kernel.step(t)
        np.fill_diagonal(c, 0.0)
        if np.array_equal(c, t):
            break
        t = c
    return float(t.max())


def shortest_path_count(g: Graph, i: int, j: int) -> tuple[Optional[int], int]:
    """Length and number of shortest paths from ``i`` to ``j`` (0-based) via ordinary powers.

    Returns ``(k_hat, p)`` where ``k_hat`` is the first power with a nonzero
    ``(i, j)`` entry and ``p`` that entry, or ``(None, 0)`` when ``j`` is
    unreachable. Only meaningful for unweighted graphs.
    """
    if not g.unweighted:
        raise GraphError("shortest path counting requires an unweighted graph")
    if i == j:
        raise GraphError("source and target must differ")
    if not (0 <= i < g.n and 0 <= j < g.n):
        raise GraphError(f"vertex out of range 1..{g.n}")
    # exact integer arithmetic: walk counts overflow int64 on large graphs
    a = g.weights.astype(np.int64).astype(object)
    row = a[i].copy()
    for k in range(1, g.n):
        if row[j] > 0:
            return k, int(row[j])
        row = row.dot(a)
    return None, 0
