import random
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from monophonic import generators as gen
from monophonic.engine import is_monophonic_set
from monophonic.graph import GraphInputError, distance, is_induced_path
from monophonic.paths import (
    PreconditionError,
    disjoint_path_pair,
    even_path,
    first,
    johnson_witness_path,
    kneser_witness_path,
    last,
    lift_witness,
    odd_path,
    product_witness_path,
    venn_partition,
)
from monophonic.sweeps import johnson_sweep, kneser_sweep, distance_paths, lift_chain, product_sweep

K73 = gen.kneser(7, 3)
subsets73 = st.sampled_from(K73.labels)


def ids(G, path):
    return [G.vertex(v) for v in path]


def test_ordered_block_selectors():
    block = [2, 5, 7, 9]
    assert first(block, 0) == [] and last(block, 0) == []
    assert first(block, 2) == [2, 5] and last(block, 2) == [7, 9]
    assert last(block, 4) == block


def test_venn_partition_example():
    p = venn_partition({1, 2, 3}, {1, 4, 5}, {2, 4, 6}, 7)
    assert (p.X, p.Y, p.U, p.A, p.B, p.C, p.D, p.Z) == ({3}, {5}, {6}, {1}, {4}, {2}, set(), {7})
    assert (p.t, p.s) == (1, 1)
    q = venn_partition({1, 2, 3}, {4, 5, 6}, {7, 8, 9}, 9)
    assert not (q.A | q.B | q.C | q.D | q.Z)


def test_venn_partition_rejects_bad_input():
    with pytest.raises(GraphInputError):
        venn_partition({1, 2}, {1, 2}, {3, 4}, 5)
    with pytest.raises(GraphInputError):
        venn_partition({1, 2}, {1, 9}, {3, 4}, 5)


@given(subsets73, subsets73, subsets73)
def test_venn_cardinalities_in_odd_graph(x, y, u):
    if len({x, y, u}) < 3:
        return
    p = venn_partition(x, y, u, 7)
    blocks = [p.X, p.Y, p.U, p.A, p.B, p.C, p.D, p.Z]
    assert sum(map(len, blocks)) == 7 and set().union(*blocks) == set(range(1, 8))
    assert p.X | p.A | p.C | p.D == set(x) and p.U | p.B | p.C | p.D == set(u)
    assert len(p.Z) == 1 + len(p.A) + len(p.D) - len(p.U)
    assert len(p.Z) == 1 + p.t - len(p.Y) == 1 + p.s - len(p.X)


def test_even_path_examples():
    assert even_path({1, 2, 3}, {1, 4, 5}, 7) == [(1, 2, 3), (5, 6, 7), (1, 3, 4), (2, 6, 7), (1, 4, 5)]
    assert even_path({1, 2, 3}, {1, 2, 4}, 7) == [(1, 2, 3), (5, 6, 7), (1, 2, 4)]
    with pytest.raises(PreconditionError):
        even_path({1, 2, 3}, {4, 5, 6}, 7)
    with pytest.raises(GraphInputError):
        even_path({1, 2, 3}, {1, 4, 5}, 8)


def test_odd_path_examples():
    assert odd_path({1, 2, 3}, {1, 2, 4}, 7, {5, 6}) == [
        (1, 2, 3), (4, 5, 6), (2, 3, 7), (1, 4, 6), (3, 5, 7), (1, 2, 4)
    ]
    assert odd_path({1, 2, 3}, {1, 2, 4}, 7) == odd_path({1, 2, 3}, {1, 2, 4}, 7, {5, 6})
    assert odd_path({1, 2, 3}, {4, 5, 6}, 7) == [(1, 2, 3), (4, 5, 6)]
    with pytest.raises(GraphInputError):
        odd_path({1, 2, 3}, {1, 2, 4}, 7, {5, 7, 6})
    with pytest.raises(GraphInputError):
        odd_path({1, 2, 3}, {1, 2, 4}, 7, {3, 5})


def test_distance_builders_on_every_pair_of_k73():
    assert distance_paths(3).ok


@pytest.mark.parametrize("r", [3, 4])
def test_builder_lengths_realise_distance(r):
    n = 2 * r + 1
    G = gen.kneser(n, r)
    for a, b in combinations(G.labels, 2):
        t = len(set(a) & set(b))
        lengths = [len(odd_path(a, b, n)) - 1] + ([len(even_path(a, b, n)) - 1] if t else [])
        assert min(lengths) == distance(G, G.vertex(a), G.vertex(b))


def test_kneser_trivial_branch():
    built = kneser_witness_path((1, 2, 3), (1, 2, 4), (5, 6, 7), 3)
    assert built.path == [(1, 2, 3), (5, 6, 7), (1, 2, 4)] and built.case == "0"


def test_kneser_dispatch_example():
    built = kneser_witness_path((1, 2, 3), (1, 4, 5), (4, 6, 7), 3)
    assert built.path[0] == (1, 2, 3) and built.path[-1] == (1, 4, 5) and (4, 6, 7) in built.path
    assert is_induced_path(K73, ids(K73, built.path)) and not built.fallback


def test_kneser_errors():
    with pytest.raises(GraphInputError):
        kneser_witness_path((1, 2, 3), (4, 5, 6), (1, 4, 7), 3)
    with pytest.raises(GraphInputError):
        kneser_witness_path((1, 2), (1, 3), (2, 3), 2)
    with pytest.raises(GraphInputError):
        kneser_witness_path((1, 2, 3), (1, 2, 4), (1, 2, 3), 3)


def test_kneser_every_triple_of_k73_without_fallback():
    sweep = kneser_sweep(3)
    assert sweep.ok and sweep.checked == 17325
    assert set(sweep.cases) == {"0", "1", "3", "4", "5"}


def test_kneser_case_two_reached_in_k94():
    sweep = kneser_sweep(4, samples=2000, seed=3)
    assert sweep.ok and sweep.cases["2"] > 0


@given(st.integers(0, 2**32 - 1))
def test_kneser_larger_ground_sets(seed):
    rng = random.Random(seed)
    n = rng.choice([8, 9, 10])
    G = gen.kneser(n, 3)
    x, y, u = rng.sample(G.labels, 3)
    if not set(x) & set(y):
        return
    built = kneser_witness_path(x, y, u, 3, n=n)
    assert not built.fallback
    assert built.path[0] == x and built.path[-1] == y and u in built.path
    assert is_induced_path(G, ids(G, built.path))


def test_lift_from_k52():
    S = [(1, 2), (1, 3), (2, 3)]
    built = lift_witness(5, 2, S, (4, 6))
    G = gen.kneser(6, 2)
    assert built.path[0] in S and built.path[-1] in S and (4, 6) in built.path
    assert is_induced_path(G, ids(G, built.path)) and not built.fallback


def test_lift_n_equals_2r():
    S = gen.kneser(4, 2).labels
    built = lift_witness(4, 2, S, (1, 5))
    assert built.path == [(2, 3), (1, 5), (3, 4)] and built.case == "n=2r"


def test_lift_explicit_branch():
    S = gen.kneser(5, 2).labels
    built = lift_witness(5, 2, S, (3, 6))
    G = gen.kneser(6, 2)
    assert built.case == "explicit" and len(built.path) == 5
    assert is_induced_path(G, ids(G, built.path))


def test_lift_rejects_non_monophonic_set():
    with pytest.raises(PreconditionError):
        lift_witness(5, 2, [(1, 2), (1, 3)], (4, 6))
    with pytest.raises(GraphInputError):
        lift_witness(5, 2, [(1, 2), (1, 3), (2, 3)], (4, 5))


def test_lift_chain_to_k72():
    assert lift_chain([(1, 2), (1, 3), (2, 3)], 5, 2, 7).ok
    G = gen.kneser(7, 2)
    assert is_monophonic_set(G, [G.vertex(s) for s in [(1, 2), (1, 3), (2, 3)]]).holds


def test_johnson_examples():
    built = johnson_witness_path((1, 2), (3, 4), (1, 3), 4, 2)
    assert built.path == [(1, 2), (1, 3), (3, 4)]
    built = johnson_witness_path((1, 2, 3), (1, 4, 5), (2, 4, 6), 6, 3)
    J63 = gen.johnson(6, 3)
    assert len(built.path) - 1 == 4 and (2, 4, 6) in built.path
    assert is_induced_path(J63, ids(J63, built.path))
    with pytest.raises(GraphInputError):
        johnson_witness_path((1, 2, 3), (1, 2, 4), (2, 4, 6), 6, 3)


@pytest.mark.parametrize("n,r", [(5, 2), (6, 2), (6, 3), (7, 3), (8, 3)])
def test_johnson_sweeps(n, r):
    assert johnson_sweep(n, r).ok


def test_johnson_complement_regime():
    sweep = johnson_sweep(6, 4)
    assert sweep.ok and set(sweep.cases) == {"complement"}


def test_johnson_halves_are_shortest():
    J = gen.johnson(7, 3)
    rng = random.Random(7)
    for _ in range(300):
        x, y, u = rng.sample(J.labels, 3)
        if len(set(x) & set(y)) > 1:
            continue
        path = johnson_witness_path(x, y, u, 7, 3).path
        k = path.index(u)
        assert k == distance(J, J.vertex(x), J.vertex(u))
        assert len(path) - 1 - k == distance(J, J.vertex(u), J.vertex(y))


def test_disjoint_pair_examples():
    C5 = gen.basic_graph("cycle", 5)
    assert disjoint_path_pair(C5, 0, 2, 4) == ([0, 1, 2], [2, 3, 4])
    K4e = gen.basic_graph("complete_minus_matching", 4, 1)
    assert disjoint_path_pair(K4e, 0, 2, 1) == ([0, 2], [2, 1])


def check_pair(G, x, y, z, P, Q):
    assert P[0] == x and P[-1] == y and Q[0] == y and Q[-1] == z
    assert set(P) & set(Q) == {y}
    assert is_induced_path(G, P) and is_induced_path(G, Q)


@pytest.mark.parametrize(
    "G",
    [gen.hypercube(3), gen.hypercube(4), gen.basic_graph("cycle", 6), gen.johnson(5, 2), gen.basic_graph("complete", 4), gen.hamming([3, 3])],
    ids=lambda G: G.name,
)
def test_disjoint_pair_all_triples(G):
    for x in range(G.n):
        for y in range(G.n):
            for z in range(G.n):
                if len({x, y, z}) == 3:
                    P, Q = disjoint_path_pair(G, x, y, z)
                    check_pair(G, x, y, z, P, Q)


def test_disjoint_pair_preconditions():
    with pytest.raises(PreconditionError, match="P_3"):
        disjoint_path_pair(gen.basic_graph("path", 3), 0, 1, 2)
    with pytest.raises(PreconditionError):
        disjoint_path_pair(gen.basic_graph("path", 4), 0, 1, 2)
    with pytest.raises(GraphInputError):
        disjoint_path_pair(gen.hypercube(3), 0, 0, 1)


def test_product_examples():
    C4, K2 = gen.basic_graph("cycle", 4), gen.basic_graph("complete", 2)
    Q3 = gen.cartesian_product(C4, K2)
    built = product_witness_path(C4, K2, (0, 0), (2, 1), (1, 1))
    assert built.path[0] == 0 and built.path[-1] == 5 and 3 in built.path
    assert is_induced_path(Q3, built.path)
    layer = product_witness_path(C4, K2, (0, 0), (2, 0), (3, 0))
    assert layer.case == "layer" and layer.path == [0, 6, 4]
    corner = product_witness_path(C4, K2, (0, 0), (2, 1), (0, 1))
    assert corner.case == "corner" and corner.path == [0, 1, 3, 5]


@pytest.mark.parametrize(
    "G,H",
    [
        (gen.basic_graph("cycle", 4), gen.basic_graph("complete", 2)),
        (gen.basic_graph("complete", 3), gen.basic_graph("complete", 2)),
        (gen.hypercube(3), gen.basic_graph("complete", 2)),
        (gen.basic_graph("complete", 3), gen.basic_graph("complete", 3)),
        (gen.basic_graph("cycle", 5), gen.basic_graph("cycle", 4)),
    ],
    ids=lambda G: G.name,
)
def test_product_sweeps(G, H):
    sweep = product_sweep(G, H)
    assert sweep.ok and sweep.checked > 0


def test_product_preconditions():
    P3, K2 = gen.basic_graph("path", 3), gen.basic_graph("complete", 2)
    with pytest.raises(PreconditionError, match="P_3"):
        product_witness_path(P3, K2, (0, 0), (2, 1), (1, 0))
    P4 = gen.basic_graph("path", 4)
    with pytest.raises(PreconditionError, match="strongly 2-monophonic"):
        product_witness_path(P4, K2, (0, 0), (2, 1), (1, 0))
    C4 = gen.basic_graph("cycle", 4)
    with pytest.raises(GraphInputError, match="non-adjacent"):
        product_witness_path(C4, K2, (0, 0), (1, 0), (2, 0))
