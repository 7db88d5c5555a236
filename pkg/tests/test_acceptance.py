"""Exit criteria for the package, one test per criterion.

A summary line per criterion is printed at the end of the pytest run.
Criterion 7 needs the Air500 and Autobahn edge lists; point
``PATHLENGTH_DATA`` at a directory holding ``air500.edges`` and
``autobahn.edges`` (1-based, one edge per line) to run it.
"""

import os
import time
from pathlib import Path

import numpy as np
import pytest

from pathlength import (
    EnhanceError,
    Graph,
    analyze,
    apply_perturbation,
    diameter,
    ekg1,
    ekg2,
    from_edge_list,
    global_efficiency,
    harmonic,
    in_measures,
    is_irreducible,
    kpath_matrix,
    path_length_matrix,
    perron,
    perron_bounds,
    reciprocal,
    shortest_path_count,
)
from pathlength.io import read_graph

from oracles import floyd_warshall, random_weights

A1_EDGES = [(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]
A2_EDGES = [(1, 3), (2, 3)]
PLM_A1 = [[0, 2, 1, 1, 1], [2, 0, 1, 1, 1], [1, 1, 0, 2, 2], [1, 1, 2, 0, 2], [1, 1, 2, 2, 0]]
PLM_A2 = [[0, 2, 1], [2, 0, 1], [1, 1, 0]]


def r2(v):
    return np.round(np.asarray(v, dtype=float), 2).tolist()


@pytest.fixture(scope="module")
def A1():
    return from_edge_list(A1_EDGES, 5, directed=False)


@pytest.fixture(scope="module")
def A2():
    return from_edge_list(A2_EDGES, 3, directed=False)


def _best_time(fn, repeats=200):
    best = np.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


@pytest.mark.criterion(1, "path length matrices of G1 and G2 exact, each under 1 ms")
def test_criterion_1_path_length_matrices(A1, A2):
    assert np.array_equal(path_length_matrix(A1).entries, PLM_A1)
    assert np.array_equal(path_length_matrix(A2).entries, PLM_A2)
    assert _best_time(lambda: path_length_matrix(A1)) < 1e-3
    assert _best_time(lambda: path_length_matrix(A2)) < 1e-3


@pytest.mark.criterion(2, "diameter, radius, a_G, e_G of G1 and G2 at 2 decimals")
def test_criterion_2_global_table(A1, A2):
    expected = {"A1": (2, 2, 1.40, 0.80), "A2": (2, 1, 1.33, 0.83)}
    for name, g in (("A1", A1), ("A2", A2)):
        r = analyze(path_length_matrix(g))
        got = (diameter(g), r.radius, r.avg_path_length, r.global_efficiency)
        assert tuple(round(v, 2) for v in got) == expected[name]
        assert r.diameter == diameter(g)


@pytest.mark.criterion(3, "per-vertex e_i, h_i, c_i and centers of G1 and G2")
def test_criterion_3_vertex_table(A1, A2):
    r1 = analyze(path_length_matrix(A1))
    assert r2(r1.eccentricity) == [2, 2, 2, 2, 2]
    assert r2(r1.harmonic) == [3.50, 3.50, 3.00, 3.00, 3.00]
    assert r2(r1.closeness) == [0.20, 0.20, 0.17, 0.17, 0.17]
    r2_ = analyze(path_length_matrix(A2))
    assert r2(r2_.eccentricity) == [2, 2, 1]
    assert r2(r2_.harmonic) == [1.50, 1.50, 2.00]
    assert r2(r2_.closeness) == [0.33, 0.33, 0.50]
    assert r1.h_center == [0, 1] and r2_.h_center == [2]
    assert r1.center == [0, 1, 2, 3, 4] and r2_.center == [2]


@pytest.mark.criterion(4, "G2 with w23 = w32 halved: (d, r, a, e) and per-vertex values")
def test_criterion_4_perturbed_g2(A2):
    g = apply_perturbation(A2, 1, 2, 0.5, symmetric=True)
    r = analyze(path_length_matrix(g))
    assert tuple(round(v, 2) for v in (r.diameter, r.radius, r.avg_path_length, r.global_efficiency)) == (
        1.5, 1, 1, 1.22)
    assert r2(r.eccentricity) == [1.50, 1.50, 1.00]
    assert r2(r.harmonic) == [1.67, 2.67, 3.00]
    assert r2(r.closeness) == [0.40, 0.50, 0.67]


@pytest.mark.criterion(5, "ekg1/ekg2 on G1 and G2 at K=2, Perron vectors, harmonic 2-centralities")
def test_criterion_5_enhancement(A1, A2):
    for fn in (ekg1, ekg2):
        p = fn(A1, 2)
        assert (p.h1 + 1, p.h2 + 1) == (1, 3)
        assert round(p.e_after, 2) == 0.95
        p = fn(A2, 2)
        assert (p.h1 + 1, p.h2 + 1) == (3, 1)
        assert round(p.e_after, 2) == 1.22
    assert r2(perron(reciprocal(kpath_matrix(A1, 2))).x) == [0.47, 0.47, 0.43, 0.43, 0.43]
    assert r2(perron(reciprocal(kpath_matrix(A2, 2))).x) == [0.54, 0.54, 0.64]
    assert harmonic(kpath_matrix(A1, 2)).tolist() == [3.5, 3.5, 3, 3, 3]
    assert harmonic(kpath_matrix(A2, 2)).tolist() == [1.5, 1.5, 2]


@pytest.mark.criterion(6, "shortest path counts (G1,1,2)=(2,3) and (G2,1,2)=(2,1)")
def test_criterion_6_path_counts(A1, A2):
    assert shortest_path_count(A1, 0, 1) == (2, 3)
    assert shortest_path_count(A2, 0, 1) == (2, 1)


def _dataset(name):
    root = os.environ.get("PATHLENGTH_DATA")
    path = Path(root) / name if root else None
    if path is None or not path.exists():
        pytest.skip(f"{name} not available (set PATHLENGTH_DATA)")
    return path


def _sig(v, digits):
    return float(f"{v:.{digits - 1}e}")


AIR500_ROWS = {5: (0.4839, 0.4856), 4: (0.4839, 0.4855), 3: (0.4791, 0.4807), 2: (0.3604, 0.3606)}
AUTOBAHN_EKG1 = {
    62: ((219, 565), 6.7175e-2, 6.7559e-2),
    52: ((219, 565), 6.7166e-2, 6.7550e-2),
    42: ((219, 565), 6.6965e-2, 6.7349e-2),
    32: ((219, 565), 6.5105e-2, 6.5485e-2),
    22: ((219, 565), 5.5674e-2, 5.6024e-2),
    12: ((219, 565), 2.8426e-2, 2.8621e-2),
    5: ((219, 565), 7.9991e-3, 8.0304e-3),
    4: ((219, 565), 6.1823e-3, 6.2019e-3),
    3: ((219, 217), 4.6017e-3, 4.6112e-3),
    2: ((219, 217), 3.2082e-3, 3.2124e-3),
}
AUTOBAHN_EKG2 = {
    62: ((565, 219), 6.7175e-2, 6.7559e-2),
    52: ((565, 219), 6.7166e-2, 6.7550e-2),
    42: ((565, 219), 6.6965e-2, 6.7349e-2),
    32: ((565, 219), 6.5105e-2, 6.5485e-2),
    22: ((565, 219), 5.5674e-2, 5.6024e-2),
    12: ((565, 219), 2.8426e-2, 2.8621e-2),
    5: ((565, 219), 7.9991e-3, 8.0304e-3),
    4: ((565, 219), 6.1823e-3, 6.2019e-3),
    3: ((267, 219), 4.6017e-3, 4.6111e-3),
    2: ((693, 543), 3.2082e-3, 3.2136e-3),
}


@pytest.mark.dataset
@pytest.mark.criterion(7, "Air500 and Autobahn tables (data-dependent)")
def test_criterion_7_datasets():
    air = read_graph(_dataset("air500.edges"), directed=None)
    autobahn = read_graph(_dataset("autobahn.edges"), directed=False)

    t = path_length_matrix(air)
    r = analyze(t)
    assert (r.diameter, r.radius) == (5, 3)
    for K, (before, after) in AIR500_ROWS.items():
        for fn in (ekg1, ekg2):
            p = fn(air, K)
            assert (p.h1 + 1, p.h2 + 1) == (161, 224)
            assert (_sig(p.e_before, 4), _sig(p.e_after, 4)) == (before, after)

    t0 = time.perf_counter()
    t = path_length_matrix(autobahn)
    assert time.perf_counter() - t0 < 120
    r = analyze(t)
    assert (r.diameter, r.radius) == (62, 34)
    assert _sig(r.global_efficiency, 5) == 6.7175e-2
    for fn, table in ((ekg1, AUTOBAHN_EKG1), (ekg2, AUTOBAHN_EKG2)):
        for K, (edge, before, after) in table.items():
            p = fn(autobahn, K)
            assert (p.h1 + 1, p.h2 + 1) == edge
            assert (_sig(p.e_before, 5), _sig(p.e_after, 5)) == (before, after)


def _random_cases(count=240, seed=20240611):
    rng = np.random.default_rng(seed)
    kinds = [(d, w) for d in (False, True) for w in (False, True)]
    for c in range(count):
        directed, weighted = kinds[c % 4]
        n = int(rng.integers(2, 9))
        yield Graph(random_weights(rng, n, directed, weighted), directed=directed)


@pytest.mark.criterion(8, "property suite on 240 random graphs")
def test_criterion_8_property_suite():
    checked = {"fw": 0, "perron": 0, "proposals": 0, "in_out": 0}
    for g in _random_cases():
        n = g.n
        full = path_length_matrix(g)
        assert np.array_equal(full.entries, floyd_warshall(g.weights))
        checked["fw"] += 1
        e = full.entries
        assert np.all(e[:, None, :] <= e[:, :, None] + e[None, :, :])
        prev = None
        for K in range(1, n):
            t = kpath_matrix(g, K)
            if prev is not None:
                assert np.all(t.entries <= prev)
            prev = t.entries
            r = reciprocal(t)
            if is_irreducible(r):
                p = perron(r)
                assert p.converged
                lo, hi = perron_bounds(r)
                slack = 1e-12 * max(1.0, hi)
                assert lo - slack <= p.rho <= hi + slack
                checked["perron"] += 1
            if g.m == 0:
                continue
            for fn in (ekg1, ekg2):
                try:
                    prop = fn(g, K)
                except EnhanceError:
                    continue
                assert prop.e_after >= prop.e_before
                checked["proposals"] += 1
        if not g.directed:
            m = in_measures(full)
            r = analyze(full)
            assert np.array_equal(m.harmonic, r.harmonic)
            assert np.array_equal(m.closeness, r.closeness)
            assert np.array_equal(m.eccentricity, r.eccentricity)
            checked["in_out"] += 1
    assert checked["fw"] >= 200
    assert min(checked.values()) > 0
