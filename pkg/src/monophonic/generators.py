"""Constructors for the graph families used throughout the package."""

from __future__ import annotations

from functools import reduce
from itertools import combinations
from typing import Sequence

from .graph import Graph, GraphInputError


def subsets_colex(n: int, r: int) -> list[tuple[int, ...]]:
    """All r-subsets of ``{1..n}`` in colexicographic order."""
    return sorted(combinations(range(1, n + 1), r), key=lambda c: c[::-1])


def generalized_johnson(n: int, r: int, i: int) -> Graph:
    """J(n, r, i): r-subsets of [n], adjacent iff they share exactly i elements."""
    if not 0 <= i <= r <= n:
        raise GraphInputError(f"need 0 <= i <= r <= n, got n={n}, r={r}, i={i}")
    labels = subsets_colex(n, r)
    masks = [sum(1 << e for e in lab) for lab in labels]
    adj = [0] * len(labels)
    for a in range(len(labels)):
        for b in range(a + 1, len(labels)):
            if (masks[a] & masks[b]).bit_count() == i:
                adj[a] |= 1 << b
                adj[b] |= 1 << a
    return Graph(len(labels), adj, labels=labels, ground_n=n, name=f"J({n},{r},{i})")


def kneser(n: int, r: int) -> Graph:
    G = generalized_johnson(n, r, 0)
    G.name = f"K({n},{r})"
    return G


def johnson(n: int, r: int) -> Graph:
    if r < 1:
        raise GraphInputError("Johnson graphs need r >= 1")
    G = generalized_johnson(n, r, r - 1)
    G.name = f"J({n},{r})"
    return G


def cartesian_product(G: Graph, H: Graph) -> Graph:
    """G □ H with vertex ``(g, h)`` numbered ``g * n(H) + h``."""
    if G.n == 0 or H.n == 0:
        raise GraphInputError("product factors must be nonempty")
    nh = H.n
    adj = []
    pairs = []
    for g in range(G.n):
        for h in range(nh):
            row = 0
            for h2 in range(nh):
                if H.adj[h] >> h2 & 1:
                    row |= 1 << (g * nh + h2)
            for g2 in range(G.n):
                if G.adj[g] >> g2 & 1:
                    row |= 1 << (g2 * nh + h)
            adj.append(row)
            pairs.append((g, h))
    name = f"{G.name or 'G'}□{H.name or 'H'}"
    return Graph(G.n * nh, adj, pair_labels=pairs, name=name)


def basic_graph(kind: str, n: int, m: int = 0) -> Graph:
    """complete, path, cycle, or complete_minus_matching (drops {0,1},{2,3},...)."""
    if n < 1:
        raise GraphInputError("n must be at least 1")
    if kind == "complete":
        edges = list(combinations(range(n), 2))
        name = f"K{n}"
    elif kind == "path":
        edges = [(v, v + 1) for v in range(n - 1)]
        name = f"P{n}"
    elif kind == "cycle":
        if n < 3:
            raise GraphInputError("cycles need n >= 3")
        edges = [(v, (v + 1) % n) for v in range(n)]
        name = f"C{n}"
    elif kind == "complete_minus_matching":
        if m > n // 2 or m < 0:
            raise GraphInputError(f"cannot remove a matching of size {m} from K{n}")
        removed = {(2 * k, 2 * k + 1) for k in range(m)}
        edges = [e for e in combinations(range(n), 2) if e not in removed]
        name = f"K{n}-{m}e" if m != 1 else f"K{n}-e"
    else:
        raise GraphInputError(f"unknown graph kind {kind!r}")
    return Graph.from_edges(n, edges, name=name)


def hamming(dims: Sequence[int]) -> Graph:
    """H_{m1,...,mk} = K_{m1} □ ... □ K_{mk}; ``hamming([2]*k)`` is Q_k."""
    if not dims:
        raise GraphInputError("hamming needs at least one dimension")
    if any(d < 1 for d in dims):
        raise GraphInputError("hamming dimensions must be positive")
    G = reduce(cartesian_product, (basic_graph("complete", d) for d in dims))
    G.name = "H(" + ",".join(map(str, dims)) + ")"
    return G


def hypercube(k: int) -> Graph:
    G = hamming([2] * k)
    G.name = f"Q{k}"
    return G
