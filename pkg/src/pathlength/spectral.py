"""Perron root and vectors of nonnegative (reciprocal path length) matrices."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Union

import numpy as np

from pathlength.measures import ReciprocalMatrix


class ReducibleMatrixError(ValueError):
    """The matrix is reducible, so no unique positive Perron pair exists."""


@dataclass(frozen=True)
class PerronData:
    rho: float
    x: np.ndarray
    y: np.ndarray
    converged: bool
    iterations: int
    residual: float


Nonneg = Union[ReciprocalMatrix, np.ndarray]


def _as_array(m: Nonneg) -> np.ndarray:
    a = m.entries if isinstance(m, ReciprocalMatrix) else np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if np.any(a < 0):
        raise ValueError("matrix must be nonnegative")
    return a


def _reaches_all(pattern: np.ndarray) -> bool:
    n = pattern.shape[0]
    seen = np.zeros(n, dtype=bool)
    seen[0] = True
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in np.flatnonzero(pattern[v] & ~seen):
            seen[u] = True
            queue.append(int(u))
    return bool(seen.all())


def is_irreducible(m: Nonneg) -> bool:
    """True iff the positivity pattern is strongly connected.

    Vertex 0 must reach everything and be reached from everything, which
    takes one breadth-first sweep on the pattern and one on its transpose.
    """
    a = _as_array(m)
    if a.shape[0] == 1:
        return True
    pattern = a > 0
    return _reaches_all(pattern) and _reaches_all(pattern.T)


def perron_bounds(m: Nonneg) -> tuple[float, float]:
    """Smallest and largest row sum; the Perron root lies between them."""
    s = _as_array(m).sum(axis=1)
    return float(s.min()), float(s.max())


def _power(a: np.ndarray, shift: float, tol: float, max_iter: int):
    n = a.shape[0]
    v = np.full(n, 1.0 / np.sqrt(n))
    window_start = np.inf
    for it in range(1, max_iter + 1):
        av = a @ v
        rho = float(v @ av)
        residual = float(np.linalg.norm(av - rho * v))
        if residual <= tol:
            return v, rho, it, True
        # stagnation: a window of 500 iterations that gains essentially nothing
        if it % 500 == 0:
            if residual > window_start * (1 - 1e-6):
                return v, rho, it, False
            window_start = residual
        w = av + shift * v
        v = w / np.linalg.norm(w)
    return v, float(v @ (a @ v)), max_iter, False


def _positive(v: np.ndarray) -> np.ndarray:
    v = v if v[np.argmax(np.abs(v))] > 0 else -v
    if np.any(v <= 0):
        raise ArithmeticError("Perron vector is not entrywise positive")
    return v


def perron(m: Nonneg, tol: float = 1e-12, max_iter: int = 10000) -> PerronData:
    """Dominant eigenvalue and unit-norm right/left eigenvectors.

    Power iteration runs on ``M + sigma I`` (and its transpose) with sigma
    half the largest row sum; the shift keeps the eigenvectors but makes
    the iteration converge on periodic matrices too. ``tol`` bounds the
    residual relative to that row sum (absolute when it is below 1).
    Non-convergence is reported through ``converged``, not raised.
    """
    a = _as_array(m)
    if not is_irreducible(a):
        raise ReducibleMatrixError("matrix is reducible")
    n = a.shape[0]
    if n == 1:
        one = np.ones(1)
        return PerronData(0.0, one, one.copy(), True, 0, 0.0)
    upper = perron_bounds(a)[1]
    shift = 0.5 * upper
    abs_tol = tol * max(1.0, upper)
    # each side to a quarter of the tolerance so both still meet it against the shared rho
    x, rho, it_x, ok_x = _power(a, shift, abs_tol / 4, max_iter)
    if np.array_equal(a, a.T):
        y, it_y, ok_y = x, 0, ok_x
    else:
        y, _, it_y, ok_y = _power(a.T, shift, abs_tol / 4, max_iter)
    residual = max(
        float(np.linalg.norm(a @ x - rho * x)),
        float(np.linalg.norm(a.T @ y - rho * y)),
    )
    converged = ok_x and ok_y and residual <= abs_tol
    if converged:
        x = _positive(x)
        y = _positive(y)
    return PerronData(rho=rho, x=x, y=y, converged=converged, iterations=max(it_x, it_y), residual=residual)
