"""Distance-based centralities and global measures over a TropicalMatrix.

Every function reads only the entries of the matrix it is given, so the
same code yields the classical measure on the full path length matrix
and its K-variant on A^{K,*}. In-measures use the transpose.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from pathlength.tropical import TropicalMatrix

_SIG_DIGITS = 12


@dataclass(frozen=True)
class ReciprocalMatrix:
    """Off-diagonal reciprocals of a TropicalMatrix, with 1/inf = 0."""

    entries: np.ndarray
    k: int

    @property
    def n(self) -> int:
        return self.entries.shape[0]


def round_sig(v: np.ndarray) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    out = v.copy()
    finite = np.isfinite(v) & (v != 0)
    mag = np.floor(np.log10(np.abs(v[finite])))
    scale = 10.0 ** (_SIG_DIGITS - 1 - mag)
    out[finite] = np.round(v[finite] * scale) / scale
    return out


def argmax_set(v: np.ndarray) -> list[int]:
    """Indices attaining the maximum after rounding to 12 significant digits."""
    r = round_sig(v)
    return np.flatnonzero(r == r.max()).tolist()


def argmin_set(v: np.ndarray) -> list[int]:
    r = round_sig(v)
    return np.flatnonzero(r == r.min()).tolist()


def _off_diagonal(n: int) -> np.ndarray:
    return ~np.eye(n, dtype=bool)


def reciprocal(t: TropicalMatrix) -> ReciprocalMatrix:
    e = t.entries
    off = _off_diagonal(t.n)
    if np.any(e[off] == 0):
        raise ValueError("zero off-diagonal distance; the input matrix is corrupt")
    r = np.zeros_like(e)
    finite = off & np.isfinite(e)
    r[finite] = 1.0 / e[finite]
    return ReciprocalMatrix(r, t.k)


def _row_sums(t: TropicalMatrix) -> np.ndarray:
    e = np.where(_off_diagonal(t.n), t.entries, 0.0)
    return e.sum(axis=1)


def closeness(t: TropicalMatrix) -> np.ndarray:
    """Reciprocal row sums; a row with an infinite distance gives 0."""
    s = _row_sums(t)
    out = np.zeros(t.n)
    ok = np.isfinite(s) & (s != 0)
    out[ok] = 1.0 / s[ok]
    return out


def eccentricity(t: TropicalMatrix) -> np.ndarray:
    if t.n == 1:
        return np.zeros(1)
    e = np.where(_off_diagonal(t.n), t.entries, -np.inf)
    return e.max(axis=1)


def radius(t: TropicalMatrix) -> float:
    return float(eccentricity(t).min())


def center(t: TropicalMatrix) -> list[int]:
    return argmin_set(eccentricity(t))


def avg_shortest_path_length(t: TropicalMatrix) -> float:
    """Mean off-diagonal distance; +inf when some pair is unreachable."""
    n = t.n
    if n == 1:
        return 0.0
    return float(_row_sums(t).sum() / (n * (n - 1)))


def harmonic(t: TropicalMatrix) -> np.ndarray:
    return reciprocal(t).entries.sum(axis=1)


def h_center(t: TropicalMatrix) -> list[int]:
    return argmax_set(harmonic(t))


def global_efficiency(t: TropicalMatrix) -> float:
    n = t.n
    if n == 1:
        return 0.0
    return float(reciprocal(t).entries.sum() / (n * (n - 1)))


def harary_index(t: TropicalMatrix) -> float:
    """Sum of reciprocal distances over unordered vertex pairs (undirected only)."""
    if t.directed or not np.array_equal(t.entries, t.entries.T):
        raise ValueError("the Harary index is defined for undirected graphs only")
    return float(reciprocal(t).entries.sum() / 2)


@dataclass(frozen=True)
class InMeasures:
    closeness: np.ndarray
    eccentricity: np.ndarray
    harmonic: np.ndarray
    radius: float
    center: list[int]
    h_center: list[int]


def in_measures(t: TropicalMatrix) -> InMeasures:
    """Out-measures of the transposed matrix: paths ending at each vertex."""
    tt = t.transpose()
    return InMeasures(
        closeness=closeness(tt),
        eccentricity=eccentricity(tt),
        harmonic=harmonic(tt),
        radius=radius(tt),
        center=center(tt),
        h_center=h_center(tt),
    )


@dataclass
class MeasureReport:
    """All measures for one graph at the full level and at level K."""

    n: int
    directed: bool
    K: int
    connected: bool
    diameter: float
    radius: float
    avg_path_length: float
    global_efficiency: float
    global_k_efficiency: float
    harary: Optional[float]
    closeness: np.ndarray
    eccentricity: np.ndarray
    harmonic: np.ndarray
    harmonic_k: np.ndarray
    center: list[int]
    h_center: list[int]
    hk_center: list[int]
    inward: InMeasures
    inward_k: InMeasures = field(repr=False)

    @property
    def hk_in_center(self) -> list[int]:
        return self.inward_k.h_center


def analyze(full: TropicalMatrix, level: Optional[TropicalMatrix] = None) -> MeasureReport:
    """Compute every measure from the full path length matrix and, optionally, A^{K,*}."""
    level = full if level is None else level
    ecc = eccentricity(full)
    n = full.n
    return MeasureReport(
        n=n,
        directed=full.directed,
        K=level.k,
        connected=full.connected,
        diameter=float(ecc.max()),
        radius=float(ecc.min()),
        avg_path_length=avg_shortest_path_length(full),
        global_efficiency=global_efficiency(full),
        global_k_efficiency=global_efficiency(level),
        harary=None if full.directed else harary_index(full),
        closeness=closeness(full),
        eccentricity=ecc,
        harmonic=harmonic(full),
        harmonic_k=harmonic(level),
        center=argmin_set(ecc),
        h_center=h_center(full),
        hk_center=h_center(level),
        inward=in_measures(full),
        inward_k=in_measures(level),
    )
