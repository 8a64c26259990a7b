"""Whole-family verification sweeps.

Each sweep returns a :class:`Sweep` with the number of instances checked and
the first failing instance (``None`` when everything held). They back the
claim manifest and the acceptance suite.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator

from . import generators
from .engine import is_monophonic_set, is_strongly_2_monophonic
from .graph import Graph, bfs_distances, is_connected, is_induced_path
from .paths import (
    _kneser,
    even_path,
    johnson_witness_path,
    kneser_witness_path,
    lift_witness,
    odd_path,
    product_witness_path,
)
from .structure import is_chordal, necessary_conditions_report


@dataclass
class Sweep:
    checked: int = 0
    failure: object = None
    fallbacks: int = 0
    cases: Counter = field(default_factory=Counter)

    @property
    def ok(self) -> bool:
        return self.failure is None and self.fallbacks == 0

    def fail(self, witness: object) -> None:
        if self.failure is None:
            self.failure = witness


def _set_triples(G: Graph, r: int, nonadjacent) -> Iterator[tuple]:
    for x, y in combinations(G.labels, 2):
        if nonadjacent(x, y):
            for u in G.labels:
                if u != x and u != y:
                    yield x, y, u


def kneser_sweep(r: int, n: int | None = None, samples: int | None = None, seed: int = 0) -> Sweep:
    """Run the Kneser witness builder on every valid triple, or on
    ``samples`` uniformly random ones."""
    n = 2 * r + 1 if n is None else n
    G = _kneser(n, r)
    out = Sweep()
    if samples is None:
        triples: Iterable = _set_triples(G, r, lambda a, b: set(a) & set(b))
    else:
        rng = random.Random(seed)

        def draw():
            got = 0
            while got < samples:
                x, y, u = rng.sample(G.labels, 3)
                if set(x) & set(y):
                    got += 1
                    yield x, y, u

        triples = draw()
    for x, y, u in triples:
        built = kneser_witness_path(x, y, u, r, n=n)
        out.checked += 1
        out.cases[built.case] += 1
        if built.fallback:
            out.fallbacks += 1
            out.fail({"x": x, "y": y, "via": u, "case": built.case})
    return out


def distance_law(n: int, r: int) -> Sweep:
    """BFS distance against min(2(r-t), 2t+1) on every pair of K(n, r)."""
    G = _kneser(n, r)
    out = Sweep()
    for a in range(G.n):
        dist = bfs_distances(G, a)
        for b in range(a + 1, G.n):
            t = len(set(G.labels[a]) & set(G.labels[b]))
            out.checked += 1
            if dist[b] != min(2 * (r - t), 2 * t + 1):
                out.fail({"a": G.labels[a], "b": G.labels[b], "bfs": dist[b]})
    return out


def distance_paths(r: int) -> Sweep:
    """Both distance-realising builders on every pair of K(2r+1, r)."""
    n = 2 * r + 1
    G = _kneser(n, r)
    out = Sweep()
    for a, b in combinations(G.labels, 2):
        t = len(set(a) & set(b))
        found = [(odd_path(a, b, n), 2 * t + 1)]
        if t:
            found.append((even_path(a, b, n), 2 * (r - t)))
        for path, length in found:
            out.checked += 1
            ids = [G.vertex(v) for v in path]
            if path[0] != a or path[-1] != b or len(path) - 1 != length or not is_induced_path(G, ids):
                out.fail({"a": a, "b": b, "path": path})
    return out


def lift_chain(S: list[tuple[int, ...]], n: int, r: int, upto: int) -> Sweep:
    """Check ``S`` in K(n, r), then lift it to K(n+1, r), ..., K(upto, r),
    cross-checking every level with the engine."""
    out = Sweep()
    G = _kneser(n, r)
    if not is_monophonic_set(G, [G.vertex(s) for s in S]).holds:
        out.fail({"level": n, "reason": "not monophonic"})
        return out
    for m in range(n, upto):
        host = _kneser(m + 1, r)
        for u in host.labels:
            if m + 1 not in u or u in S:
                continue
            built = lift_witness(m, r, S, u, check=False)
            out.checked += 1
            out.cases[built.case] += 1
            if built.fallback:
                out.fallbacks += 1
                out.fail({"level": m + 1, "via": u})
        if not is_monophonic_set(host, [host.vertex(s) for s in S]).holds:
            out.fail({"level": m + 1, "reason": "engine disagrees"})
    return out


def johnson_sweep(n: int, r: int) -> Sweep:
    G = generators.johnson(n, r)
    out = Sweep()
    for x, y, u in _set_triples(G, r, lambda a, b: len(set(a) & set(b)) <= r - 2):
        built = johnson_witness_path(x, y, u, n, r)
        out.checked += 1
        out.cases[built.case] += 1
        t, s = len(set(u) & set(x)), len(set(u) & set(y))
        if built.fallback or len(built.path) - 1 != 2 * r - t - s:
            out.fallbacks += built.fallback
            out.fail({"x": x, "y": y, "via": u, "path": built.path})
    return out


def product_sweep(G: Graph, H: Graph) -> Sweep:
    GH = generators.cartesian_product(G, H)
    coords = GH.pair_labels
    out = Sweep()
    for s, d in combinations(range(GH.n), 2):
        if GH.adjacent(s, d):
            continue
        for m in range(GH.n):
            if m == s or m == d:
                continue
            built = product_witness_path(G, H, coords[s], coords[d], coords[m], product=GH)
            out.checked += 1
            out.cases[built.case] += 1
            if built.fallback:
                out.fallbacks += 1
                out.fail({"src": coords[s], "dst": coords[d], "via": coords[m], "case": built.case})
    return out


def labelled_graphs(n: int) -> Iterator[Graph]:
    """All 2^C(n,2) labelled graphs on ``n`` vertices."""
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        yield Graph.from_edges(n, [p for k, p in enumerate(pairs) if code >> k & 1])


def is_complete_minus_edge(G: Graph) -> bool:
    return G.n >= 3 and G.edge_count == G.n * (G.n - 1) // 2 - 1


def chordal_classification(n: int = 5) -> Sweep:
    """Connected chordal graphs of order n: s2m iff complete minus one edge."""
    out = Sweep()
    for G in labelled_graphs(n):
        if not is_connected(G) or not is_chordal(G):
            continue
        out.checked += 1
        s2m = is_strongly_2_monophonic(G)[0]
        if s2m != is_complete_minus_edge(G):
            out.fail({"edges": G.edges(), "s2m": s2m})
    return out


def necessary_soundness(graphs: Iterable[Graph]) -> Sweep:
    """Any failed necessary condition must come with an engine verdict false."""
    out = Sweep()
    for G in graphs:
        report = necessary_conditions_report(G)
        out.checked += 1
        if not report.all_passed and is_strongly_2_monophonic(G)[0]:
            out.fail({"graph": G.name or G.edges(), "condition": report.first_failure().name})
    return out


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def naive_interval_members(G: Graph, x: int, y: int) -> set[int]:
    """Interval by listing every simple x,y-path with networkx and keeping
    the induced ones."""
    import networkx as nx

    nxg = nx.Graph()
    nxg.add_nodes_from(range(G.n))
    nxg.add_edges_from(G.edges())
    members = {x, y}
    for p in nx.all_simple_paths(nxg, x, y):
        if is_induced_path(G, p):
            members.update(p)
    return members


def oracle_equivalence(order: int = 5, random_count: int = 200, seed: int = 0) -> Sweep:
    """Pruned search against naive enumeration for every (x, y, u) triple."""
    from .engine import induced_path_through

    rng = random.Random(seed)
    graphs: list[Graph] = list(labelled_graphs(order))
    graphs += [random_graph(rng, rng.randint(6, 8), rng.uniform(0.25, 0.75)) for _ in range(random_count)]
    out = Sweep()
    for G in graphs:
        for x, y in combinations(range(G.n), 2):
            naive = naive_interval_members(G, x, y)
            for u in range(G.n):
                if u in (x, y):
                    continue
                out.checked += 1
                path = induced_path_through(G, x, y, u)
                fast = path is not None
                if path is not None and not (path[0] == x and path[-1] == y and u in path and is_induced_path(G, path)):
                    out.fail({"edges": G.edges(), "triple": (x, y, u), "path": path})
                if fast != (u in naive and not G.adjacent(x, y)):
                    out.fail({"edges": G.edges(), "triple": (x, y, u), "fast": fast})
    return out
