"""Acceptance criteria, one test each.

Every test records a PASS/FAIL line; the lines are printed together in the
terminal summary (see conftest.py). Run standalone with
``python3 tests/test_acceptance.py``.
"""

import random
import time
from itertools import combinations

import networkx as nx
import pytest

from monophonic import generators as gen
from monophonic.engine import (
    convexity_number,
    is_monophonic_set,
    is_strongly_2_monophonic,
    monophonic_interval,
    monophonic_number,
)
from monophonic.graph import Graph, bfs_distances, is_connected
from monophonic.paths import kneser_witness_path
from monophonic.structure import clique_number, induced_cycle_through, necessary_conditions_report
from monophonic.sweeps import (
    johnson_sweep,
    kneser_sweep,
    labelled_graphs,
    distance_paths,
    lift_chain,
    naive_interval_members,
    oracle_equivalence,
    product_sweep,
)

from conftest import to_nx

RESULTS: dict[int, str] = {}


def record(criterion: int, ok: bool, detail: str, elapsed: float, limit: float) -> None:
    within = elapsed <= limit
    status = "PASS" if ok and within else "FAIL"
    line = f"criterion {criterion:2d}: {status}  {detail}  ({elapsed:.1f}s, limit {limit:g}s)"
    RESULTS[criterion] = line
    print(line)
    assert ok, line
    assert within, line


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


def kneser_path_ok(path, x, y, u) -> bool:
    """Label-level check: consecutive sets disjoint, all other pairs meet."""
    if path[0] != x or path[-1] != y or u not in path or len(set(path)) != len(path):
        return False
    for i, j in combinations(range(len(path)), 2):
        if (not set(path[i]) & set(path[j])) != (j == i + 1):
            return False
    return True


def petersen_like():
    return {"K(5,2)": gen.kneser(5, 2), "K(6,2)": gen.kneser(6, 2)}


def test_criterion_01_kneser_r2_number():
    found, slowest = {}, 0.0
    for name, G in petersen_like().items():
        with Timer() as t:
            found[name] = monophonic_number(G)[0]
        slowest = max(slowest, t.elapsed)
    record(1, found == {"K(5,2)": 3, "K(6,2)": 3}, f"m = {found}", slowest, 5)


def test_criterion_02_kneser_2r_r():
    with Timer() as t:
        k, S = monophonic_number(gen.kneser(4, 2))
    record(2, k == 6 and len(S) == 6, f"m(K(4,2)) = {k}", t.elapsed, 1)


def test_criterion_03_odd_graph_k73():
    with Timer() as t:
        G = gen.kneser(7, 3)
        holds, triple = is_strongly_2_monophonic(G)
        pairs = sum(1 for a, b in combinations(range(G.n), 2) if not G.adjacent(a, b))
        sweep = kneser_sweep(3)
    ok = holds and pairs == 525 and sweep.ok and sweep.checked == 525 * 33
    record(3, ok, f"engine {holds} on {pairs} pairs; builder {sweep.checked} triples, {sweep.fallbacks} fallbacks", t.elapsed, 600)


def test_criterion_04_distance_law():
    with Timer() as t:
        bad = 0
        checked = 0
        for n, r in [(7, 3), (9, 4)]:
            G = gen.kneser(n, r)
            lengths = dict(nx.all_pairs_shortest_path_length(to_nx(G)))
            for a in range(G.n):
                dist = bfs_distances(G, a)
                for b in range(a + 1, G.n):
                    tt = len(set(G.labels[a]) & set(G.labels[b]))
                    law = min(2 * (r - tt), 2 * tt + 1)
                    checked += 1
                    bad += dist[b] != law or lengths[a][b] != law
    record(4, bad == 0, f"{checked} pairs, {bad} violations", t.elapsed, 60)


def test_criterion_05_distance_builders():
    with Timer() as t:
        sweep = distance_paths(3)
    record(5, sweep.ok and sweep.checked == 595 + 595 - 70, f"{sweep.checked} paths checked", t.elapsed, 30)


def test_criterion_06_k94_random_triples():
    rng = random.Random(20240601)
    G = gen.kneser(9, 4)
    with Timer() as t:
        done = fallbacks = bad = 0
        while done < 10_000:
            x, y, u = rng.sample(G.labels, 3)
            if not set(x) & set(y):
                continue
            built = kneser_witness_path(x, y, u, 4)
            done += 1
            fallbacks += built.fallback
            bad += not kneser_path_ok(built.path, x, y, u)
    record(6, fallbacks == 0 and bad == 0, f"{done} triples, {fallbacks} fallbacks, {bad} invalid", t.elapsed, 300)


def test_criterion_07_lifting():
    S = [(1, 2), (1, 3), (2, 3)]
    with Timer() as t:
        sweep = lift_chain(S, 5, 2, 7)
        engine_ok = all(
            is_monophonic_set(G, [G.vertex(s) for s in S]).holds for G in (gen.kneser(n, 2) for n in (5, 6, 7))
        )
    record(7, sweep.ok and engine_ok, f"{sweep.checked} lifted witnesses, engine agrees {engine_ok}", t.elapsed, 30)


def test_criterion_08_johnson():
    with Timer() as t:
        sweeps = {(n, r): johnson_sweep(n, r) for n, r in [(5, 2), (6, 2), (6, 3), (7, 3)]}
        J52 = gen.johnson(5, 2)
        engine = is_strongly_2_monophonic(J52)[0]
        brute = all(
            naive_interval_members(J52, x, y) == set(range(J52.n))
            for x, y in combinations(range(J52.n), 2)
            if not J52.adjacent(x, y)
        )
    ok = all(s.ok for s in sweeps.values()) and engine and brute
    detail = ", ".join(f"J{k}: {s.checked}" for k, s in sweeps.items())
    record(8, ok, f"{detail}; J(5,2) engine {engine}, brute force {brute}", t.elapsed, 300)


def product_corpus():
    K2, K3 = gen.basic_graph("complete", 2), gen.basic_graph("complete", 3)
    P3, C5 = gen.basic_graph("path", 3), gen.basic_graph("cycle", 5)
    positive = {
        "Q2": gen.hypercube(2),
        "Q3": gen.hypercube(3),
        "Q4": gen.hypercube(4),
        "K3□K2": gen.cartesian_product(K3, K2),
        "K3□K3": gen.cartesian_product(K3, K3),
        "C5□K2": gen.cartesian_product(C5, K2),
    }
    negative = {"P3□K2": gen.cartesian_product(P3, K2), "P3□P3": gen.cartesian_product(P3, P3)}
    return positive, negative


def test_criterion_09_products():
    positive, negative = product_corpus()
    with Timer() as t:
        pos_ok = all(is_strongly_2_monophonic(G)[0] for G in positive.values())
        neg_ok = True
        for G in negative.values():
            holds, (x, y, u) = is_strongly_2_monophonic(G)
            neg_ok &= not holds and u not in naive_interval_members(G, x, y)
        C4, K2, K3 = gen.basic_graph("cycle", 4), gen.basic_graph("complete", 2), gen.basic_graph("complete", 3)
        built = [product_sweep(C4, K2), product_sweep(K3, K2)]
    ok = pos_ok and neg_ok and all(s.ok and s.checked for s in built)
    record(9, ok, f"s2m {pos_ok}, counterexamples {neg_ok}, builder {[s.checked for s in built]} triples", t.elapsed, 300)


def test_criterion_10_triple_off_induced_cycles():
    G = gen.hamming([3, 2])
    triple = (0, 3, 5)  # (0,0), (1,1), (2,1)
    with Timer() as t:
        d = bfs_distances(G, 0)
        cycle = induced_cycle_through(G, *triple)
        s2m = is_strongly_2_monophonic(G)[0]
    ok = d[3] == d[5] == 2 and cycle is None and s2m
    record(10, ok, f"no induced cycle {cycle is None}, s2m {s2m}", t.elapsed, 1)


def chordal_five():
    return [G for G in labelled_graphs(5) if nx.is_connected(to_nx(G)) and nx.is_chordal(to_nx(G))]


def test_criterion_11_chordal_classification():
    with Timer() as t:
        graphs = chordal_five()
        mismatches = 0
        for G in graphs:
            minus_edge = G.edge_count == 9
            mismatches += is_strongly_2_monophonic(G)[0] != minus_edge
    record(11, mismatches == 0 and len(graphs) == 541, f"{len(graphs)} graphs, {mismatches} mismatches", t.elapsed, 600)


def test_criterion_12_necessary_soundness():
    positive, negative = product_corpus()
    with Timer() as t:
        corpus = list(positive.values()) + list(negative.values()) + chordal_five()
        violations = failures = 0
        for G in corpus:
            if not necessary_conditions_report(G).all_passed:
                failures += 1
                violations += is_strongly_2_monophonic(G)[0]
    record(12, violations == 0, f"{len(corpus)} graphs, {failures} condition failures, {violations} violations", t.elapsed, 600)


def test_criterion_13_convexity_number():
    positive, _ = product_corpus()
    corpus = list(positive.values()) + [gen.johnson(5, 2), gen.johnson(6, 2)]
    corpus += [gen.basic_graph("complete_minus_matching", n, m) for n in range(3, 9) for m in range(1, n // 2 + 1)]
    corpus += list(labelled_graphs(5))
    with Timer() as t:
        checked = bad = 0
        for G in corpus:
            if G.n > 20 or not is_strongly_2_monophonic(G)[0]:
                continue
            checked += 1
            bad += convexity_number(G)[0] != clique_number(G)
    record(13, bad == 0 and checked > 0, f"{checked} s2m graphs, {bad} with c_m != omega", t.elapsed, 300)


def test_criterion_14_generalized_johnson():
    with Timer() as t:
        G = gen.generalized_johnson(6, 4, 2)
        m = monophonic_number(G)[0]
        res = monophonic_interval(G, G.vertex((1, 2, 3, 4)), G.vertex((1, 2, 3, 5)))
        excluded = G.vertex((1, 2, 3, 6)) not in res.members
        s2m = is_strongly_2_monophonic(gen.generalized_johnson(7, 4, 2))[0]
    record(14, m == 3 and excluded and s2m, f"m(J(6,4,2)) = {m}, excluded {excluded}, J(7,4,2) s2m {s2m}", t.elapsed, 600)


def test_criterion_15_oracle_equivalence():
    with Timer() as t:
        sweep = oracle_equivalence(order=5, random_count=200, seed=11)
    record(15, sweep.ok, f"{sweep.checked} (x, y, u) triples", t.elapsed, 600)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
