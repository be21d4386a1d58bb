"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines as they
come out. Tolerances are pinned here and nowhere else.
"""
import functools
import random
import time
from fractions import Fraction

import numpy as np

from helpers import connected_corpus, random_links
from leadergame.containment import LeaderLinks, LeaderStates, convex_weights, steady_state
from leadergame.exactmat import spanning_tree_count
from leadergame.game import (
    HALF,
    Dominance,
    Ordering,
    compare_half,
    enumerate_strategies,
    grounded_adjugate_sum,
    m_ij,
    nash_equilibria,
    neighborhood_dominance,
    outcome_entry,
    outcome_matrix,
    se_set,
    security_sets,
)
from leadergame.graphs import generate
from leadergame.reconstruct import (
    BENCHMARK_MATRIX_4DP,
    BENCHMARK_TOL,
    reconstruct_benchmark,
)
from leadergame.simulate import (
    SimConfig,
    average_distances,
    check_property5,
    simulate,
    stability_limit,
    terminal_residual,
)

YSPM = LeaderStates(-1, 1)

# shared corpora; criteria 3, 4 and 6 must run over the same graphs
CORPUS_N6 = connected_corpus(seed=20260809, count=200, n_min=2, n_max=6)
CORPUS_N7 = connected_corpus(seed=715, count=25, n_min=2, n_max=7)


def criterion(label):
    def wrap(fn):
        @functools.wraps(fn)
        def run():
            try:
                fn()
            except BaseException:
                print(f"{label}: FAIL")
                raise
            print(f"{label}: PASS")

        return run

    return wrap


@functools.lru_cache(maxsize=None)
def single_link_matrix(g):
    return outcome_matrix(g, 1)


def fast_config(g, links):
    return SimConfig(dt=stability_limit(g, links), t_end=400.0)


@criterion("criterion-01 cycle-reproduction")
def test_cycle_reproduction():
    started = time.perf_counter()
    c6 = generate("cycle", 6)
    u = outcome_matrix(c6, 1)
    assert all(v == HALF for row in u.entries for v in row)
    report = nash_equilibria(u)
    assert len(report.nash_pairs) == 36
    assert report.nash_value == HALF
    elapsed = time.perf_counter() - started
    assert elapsed < 1.0, f"matrix + solve took {elapsed:.2f}s"
    for b, d in ([1], [2]), ([1], [3]), ([1], [1]):
        links = LeaderLinks.from_vertices(6, b, d)
        traj = simulate(c6, links, [0.0] * 6, YSPM)
        d0, d1 = average_distances(traj, YSPM)
        assert abs(d0[-1] - 1.0) < 1e-4
        assert abs(d1[-1] - 1.0) < 1e-4


@criterion("criterion-02 hub-benchmark-reconstruction")
def test_hub_benchmark_reconstruction():
    started = time.perf_counter()
    matches = reconstruct_benchmark()
    elapsed = time.perf_counter() - started
    assert elapsed < 10.0, f"brute force took {elapsed:.2f}s"
    assert len(matches) == 1
    g = matches[0]
    assert sorted(e for e in g.edges if 1 not in e) == [(3, 4), (4, 5), (5, 6)]
    u = outcome_matrix(g, 1)
    for i in range(6):
        for j in range(6):
            assert abs(float(u.entries[i][j]) - BENCHMARK_MATRIX_4DP[i][j]) <= BENCHMARK_TOL
    report = nash_equilibria(u)
    assert report.upper_value == report.lower_value
    assert 0 in report.security_set
    assert (0, 0) in report.nash_pairs


@criterion("criterion-03 half-comparison-equivalence")
def test_half_comparison_equivalence():
    started = time.perf_counter()
    assert len(CORPUS_N6) >= 200
    mismatches = 0
    for g in CORPUS_N6:
        u = single_link_matrix(g)
        for i in range(1, g.n + 1):
            for j in range(1, g.n + 1):
                if i == j:
                    continue
                entry = u.entries[i - 1][j - 1]
                expected = (
                    Ordering.LESS
                    if entry < HALF
                    else Ordering.EQUAL if entry == HALF else Ordering.GREATER
                )
                if compare_half(g, i, j) is not expected:
                    mismatches += 1
    assert mismatches == 0
    elapsed = time.perf_counter() - started
    assert elapsed < 30.0, f"sweep took {elapsed:.2f}s"


@criterion("criterion-04 dominance-soundness")
def test_dominance_soundness():
    violations = 0
    for g in CORPUS_N6:
        u = single_link_matrix(g)
        for i in range(1, g.n + 1):
            for j in range(1, g.n + 1):
                if i == j:
                    continue
                cls = neighborhood_dominance(g, i, j)
                entry = u.entries[i - 1][j - 1]
                if cls is Dominance.STRICT_SUPERSET and not entry < HALF:
                    violations += 1
                elif cls is Dominance.EQUAL and entry != HALF:
                    violations += 1
                elif cls is Dominance.STRICT_SUBSET and not entry > HALF:
                    violations += 1
    assert violations == 0


@criterion("criterion-05 adjugate-minor-identity")
def test_adjugate_minor_identity():
    violations = 0
    for g in CORPUS_N7:
        tau = spanning_tree_count(g)
        for i in range(1, g.n + 1):
            for j in range(1, g.n + 1):
                if i == j:
                    continue
                if grounded_adjugate_sum(g, i, j) != g.n * tau + m_ij(g, i, j):
                    violations += 1
    assert violations == 0


@criterion("criterion-06 structural-properties")
def test_structural_properties():
    for g in CORPUS_N6:
        for k in (1, 2):
            if k > g.n:
                continue
            u = single_link_matrix(g) if k == 1 else outcome_matrix(g, k)
            for i in range(u.size):
                assert u.entries[i][i] == HALF
                for j in range(u.size):
                    assert u.entries[i][j] + u.entries[j][i] == 1
            rows, cols = security_sets(u)
            assert set(rows) == set(cols)
            report = nash_equilibria(u)
            assert report.lower_value <= HALF <= report.upper_value
            if report.nash_pairs:
                assert report.nash_value == HALF
                assert report.upper_value == report.lower_value == HALF


@criterion("criterion-07 containment-limit")
def test_containment_limit():
    rng = random.Random(424243)
    corpus = connected_corpus(seed=52, count=10, n_min=2, n_max=10)
    for g in corpus:
        links = random_links(rng, g.n)
        w = convex_weights(g, links)
        assert all(a + b == 1 for a, b in zip(w.alpha, w.beta))
        assert all(0 < a < 1 for a in w.alpha)
        assert all(0 < b < 1 for b in w.beta)
        traj = simulate(g, links, [0.0] * g.n, YSPM)  # default policy, t_end 100
        assert terminal_residual(traj, g, links, YSPM) < 1e-6


@criterion("criterion-08 shared-pick-consensus")
def test_shared_pick_consensus():
    rng = random.Random(808)
    cases = [
        (generate("path", 3), [2]),
        (generate("star", 4), [1]),
        (generate("cycle", 6), [1, 4]),
    ]
    g = connected_corpus(seed=809, count=1, n_min=5, n_max=7)[0]
    cases.append((g, rng.sample(range(1, g.n + 1), 2)))
    for graph, shared in cases:
        links = LeaderLinks.from_vertices(graph.n, shared, shared)
        traj = simulate(graph, links, [0.0] * graph.n, YSPM, fast_config(graph, links))
        assert np.max(np.abs(traj.terminal_state - 0.0)) < 1e-6
        exact = steady_state(graph, links, YSPM)
        assert all(x == 0 for x in exact)
    star = generate("star", 4)
    report = nash_equilibria(outcome_matrix(star, 1))
    assert report.nash_pairs == ((0, 0),)
    center_links = LeaderLinks.from_vertices(4, [1], [1])
    assert steady_state(star, center_links, YSPM) == (0, 0, 0, 0)


@criterion("criterion-09 distance-symmetry")
def test_distance_symmetry():
    graphs = [
        generate("path", 3),
        generate("star", 4),
        generate("cycle", 6),
        *connected_corpus(seed=909, count=2, n_min=5, n_max=6),
    ]
    for g in graphs:
        for i in range(1, g.n + 1):
            for j in range(1, g.n + 1):
                links = LeaderLinks.from_vertices(g.n, [i], [j])
                res = check_property5(g, i, j, YSPM, fast_config(g, links))
                assert res.analytic == 0
                assert res.simulated < 1e-6


@criterion("criterion-10 desk-values")
def test_desk_values():
    p3 = generate("path", 3)
    s3 = enumerate_strategies(3, 1)
    assert outcome_entry(p3, s3[1], s3[0]) == Fraction(4, 9)
    assert se_set(p3) == (2,)
    report = nash_equilibria(outcome_matrix(p3, 1))
    assert report.nash_pairs == ((1, 1),)
    star = generate("star", 4)
    s4 = enumerate_strategies(4, 1)
    assert outcome_entry(star, s4[0], s4[1]) == Fraction(5, 12)
