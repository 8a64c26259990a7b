"""Exact monophonic quantities computed by search.

Everything here is ground truth for the constructive builders: intervals,
monophonic sets and numbers, strong 2-monophonicity, m-convexity.

Intervals always contain their endpoints. For a disconnected graph an
interval between vertices of different components is just the pair; this is
the per-component convention under which ``2K_1`` is strongly 2-monophonic.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .graph import Graph, GraphInputError, bits, is_connected, mask_of
from .search import DEFAULT_BUDGET, BudgetExceeded, find_induced_path
from .structure import clique_number, simplicial_vertices

log = logging.getLogger(__name__)

__all__ = [
    "BudgetExceeded",
    "IntervalResult",
    "MonophonicVerdict",
    "induced_path_through",
    "monophonic_interval",
    "interval_mask",
    "is_monophonic_set",
    "monophonic_number",
    "is_strongly_2_monophonic",
    "is_m_convex",
    "m_convex_hull",
    "convexity_number",
]


@dataclass(frozen=True)
class IntervalResult:
    pair: tuple[int, int]
    members: frozenset[int]
    witness: dict[int, tuple[int, ...]] = field(compare=False)


@dataclass(frozen=True)
class MonophonicVerdict:
    set: frozenset[int]
    holds: bool
    uncovered: int | None = None


def induced_path_through(
    G: Graph, x: int, y: int, u: int, budget: int = DEFAULT_BUDGET
) -> list[int] | None:
    """An induced ``x,y``-path containing ``u``, or ``None`` if none exists."""
    for v in (x, y, u):
        G.check(v)
    if len({x, y, u}) != 3:
        raise GraphInputError("induced_path_through needs three distinct vertices")
    return find_induced_path(G, x, y, required=1 << u, budget=budget)


def _interval(G: Graph, x: int, y: int, budget: int) -> tuple[int, dict[int, tuple[int, ...]]]:
    """Memoised interval of the ordered pair ``x < y`` as (mask, witnesses)."""
    memo = G._memo.setdefault("interval", {})
    hit = memo.get((x, y))
    if hit is not None:
        return hit
    witness: dict[int, tuple[int, ...]] = {}
    if G.adjacent(x, y):
        witness[x] = witness[y] = (x, y)
        members = (1 << x) | (1 << y)
    else:
        members = (1 << x) | (1 << y)
        for u in range(G.n):
            if members >> u & 1:
                continue
            path = find_induced_path(G, x, y, required=1 << u, budget=budget)
            if path is None:
                continue
            for w in path:
                if not members >> w & 1:
                    members |= 1 << w
                    witness[w] = tuple(path)
        if witness:
            witness[x] = witness[y] = next(iter(witness.values()))
        else:
            # non-adjacent and no interior vertex: different components
            witness[x], witness[y] = (x,), (y,)
    memo[(x, y)] = (members, witness)
    return members, witness


def monophonic_interval(G: Graph, x: int, y: int, budget: int = DEFAULT_BUDGET) -> IntervalResult:
    """J_G(x, y) with one witness path per member.

    Witness paths run from ``x`` to ``y``; for members whose witness is the
    trivial one-vertex sequence, ``x`` and ``y`` lie in different components.
    """
    G.check(x)
    G.check(y)
    if x == y:
        raise GraphInputError("interval endpoints must differ")
    a, b = min(x, y), max(x, y)
    members, witness = _interval(G, a, b, budget)
    if (a, b) != (x, y):
        witness = {v: (p[::-1] if len(p) > 1 else p) for v, p in witness.items()}
    return IntervalResult((x, y), frozenset(bits(members)), dict(witness))


def interval_mask(G: Graph, x: int, y: int, budget: int = DEFAULT_BUDGET) -> int:
    if x == y:
        return 1 << x
    return _interval(G, min(x, y), max(x, y), budget)[0]


def _cover(G: Graph, S: list[int], budget: int) -> int:
    covered = mask_of(S)
    full = G.full_mask
    for a, b in combinations(sorted(S), 2):
        if covered == full:
            break
        covered |= _interval(G, a, b, budget)[0]
    return covered


def is_monophonic_set(G: Graph, S: Iterable[int], budget: int = DEFAULT_BUDGET) -> MonophonicVerdict:
    S = sorted(set(S))
    if not S:
        raise GraphInputError("a monophonic set must be nonempty")
    for v in S:
        G.check(v)
    covered = _cover(G, S, budget)
    missing = G.full_mask & ~covered
    if missing:
        return MonophonicVerdict(frozenset(S), False, (missing & -missing).bit_length() - 1)
    return MonophonicVerdict(frozenset(S), True)


def monophonic_number(
    G: Graph, max_k: int | None = None, budget: int = DEFAULT_BUDGET
) -> tuple[int, frozenset[int]] | None:
    """Smallest monophonic set, searched by ascending size.

    Simplicial vertices lie in every monophonic set, so they are forced into
    each candidate. Returns ``None`` when no set of size ``<= max_k`` exists.
    """
    if G.n == 0:
        raise GraphInputError("monophonic number of the empty graph is undefined")
    if max_k is None:
        max_k = G.n
    if max_k < 1:
        raise GraphInputError("max_k must be at least 1")
    forced = sorted(simplicial_vertices(G))
    free = [v for v in range(G.n) if v not in set(forced)]
    full = G.full_mask
    for k in range(max(1, len(forced)), min(max_k, G.n) + 1):
        for extra in combinations(free, k - len(forced)):
            S = forced + list(extra)
            if _cover(G, S, budget) == full:
                return k, frozenset(S)
    return None


def _pair_counterexample(G: Graph, x: int, y: int, budget: int) -> int | None:
    members = _interval(G, x, y, budget)[0]
    missing = G.full_mask & ~members
    return (missing & -missing).bit_length() - 1 if missing else None


def _check_pairs(args: tuple[Graph, list[tuple[int, int]], int]) -> list[tuple[int, int, int]]:
    G, pairs, budget = args
    out = []
    for x, y in pairs:
        u = _pair_counterexample(G, x, y, budget)
        if u is not None:
            out.append((x, y, u))
    return out


def nonadjacent_pairs(G: Graph) -> list[tuple[int, int]]:
    return [(x, y) for x in range(G.n) for y in bits(G.full_mask & ~G.closed(x) >> (x + 1) << (x + 1))]


def is_strongly_2_monophonic(
    G: Graph, jobs: int = 1, budget: int = DEFAULT_BUDGET
) -> tuple[bool, tuple[int, int, int] | None]:
    """Whether every non-adjacent pair is a monophonic set (and m(G) = 2).

    On failure the lexicographically smallest ``(x, y, u)`` with ``u`` outside
    ``J(x, y)`` is returned; complete graphs fail without a triple except K_2.
    """
    if G.n < 2:
        return False, None
    pairs = nonadjacent_pairs(G)
    if not pairs:
        return G.n == 2, None
    if G.n > 2 and not is_connected(G):
        log.info("%r is disconnected; intervals follow the per-component convention", G)
    if jobs <= 1:
        for x, y in pairs:
            u = _pair_counterexample(G, x, y, budget)
            if u is not None:
                return False, (x, y, u)
        return True, None
    chunks = [pairs[i::jobs * 4] for i in range(jobs * 4)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        found = [t for part in pool.map(_check_pairs, [(G, c, budget) for c in chunks]) for t in part]
    if found:
        return False, min(found)
    return True, None


def is_m_convex(G: Graph, S: Iterable[int], budget: int = DEFAULT_BUDGET) -> bool:
    S = sorted(set(S))
    mask = mask_of(S)
    for a, b in combinations(S, 2):
        if interval_mask(G, a, b, budget) & ~mask:
            return False
    return True


def m_convex_hull(G: Graph, S: Iterable[int] | int, budget: int = DEFAULT_BUDGET) -> int:
    """Smallest m-convex superset of ``S`` (a vertex iterable or a bitmask)."""
    mask = S if isinstance(S, int) else mask_of(S)
    done = set()
    grown = True
    while grown:
        grown = False
        verts = list(bits(mask))
        for a, b in combinations(verts, 2):
            if (a, b) in done:
                continue
            done.add((a, b))
            new = mask | interval_mask(G, a, b, budget)
            if new != mask:
                mask = new
                grown = True
    return mask


def convexity_number(G: Graph, budget: int = DEFAULT_BUDGET) -> tuple[int, frozenset[int]]:
    """Size of a maximum proper m-convex set, with one such set.

    Branch and bound over include/exclude decisions with hull closure,
    partitioned by the smallest vertex missing from the set and seeded with
    a maximum clique (cliques are always m-convex).
    """
    if G.n < 2:
        raise GraphInputError("convexity number needs at least two vertices")
    n = G.n
    full = G.full_mask
    omega, clique = clique_number(G, with_witness=True)
    if omega < n:
        best = [omega, mask_of(clique)]
    else:
        best = [n - 1, full & ~(1 << (n - 1))]

    def grow(inside: int, outside: int) -> None:
        if n - outside.bit_count() <= best[0]:
            return
        free = full & ~inside & ~outside
        if not free:
            best[0], best[1] = inside.bit_count(), inside
            return
        w = (free & -free).bit_length() - 1
        closed = m_convex_hull(G, inside | 1 << w, budget)
        if not closed & outside:
            grow(closed, outside)
        grow(inside, outside | 1 << w)

    for v in range(n):
        prefix = (1 << v) - 1
        base = m_convex_hull(G, prefix, budget)
        if base >> v & 1:
            continue
        grow(base, 1 << v)
    return best[0], frozenset(bits(best[1]))
