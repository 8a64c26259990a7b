"""Structural predicates around strong 2-monophonicity.

Simplicial vertices, chordality, cliques, cut structure, domination,
dismantlability, the necessary/sufficient condition checkers and the
universal-vertex / open-twin reduction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .graph import Graph, GraphInputError, bits, components, is_connected
from .search import DEFAULT_BUDGET, find_induced_path


def _is_clique_mask(G: Graph, mask: int) -> bool:
    return all(mask & ~G.closed(v) == 0 for v in bits(mask))


def simplicial_vertices(G: Graph) -> set[int]:
    """Vertices whose closed neighbourhood induces a complete graph."""
    return {v for v in range(G.n) if _is_clique_mask(G, G.closed(v))}


def perfect_elimination_order(G: Graph) -> list[int] | None:
    left = G.full_mask
    order = []
    while left:
        for v in bits(left):
            if _is_clique_mask(G, G.closed(v) & left):
                order.append(v)
                left &= ~(1 << v)
                break
        else:
            return None
    return order


def is_chordal(G: Graph) -> bool:
    return perfect_elimination_order(G) is not None


def clique_number(G: Graph, with_witness: bool = False):
    """Exact clique number by branch and bound on bitsets.

    With ``with_witness`` returns ``(omega, clique_vertices)``.
    """
    if G.n == 0:
        raise GraphInputError("clique number of the empty graph is undefined")
    adj = G.adj
    best = [0, 0]

    def expand(chosen: int, size: int, cand: int) -> None:
        while cand:
            if size + cand.bit_count() <= best[0]:
                return
            v = cand.bit_length() - 1
            vb = 1 << v
            nxt = cand & adj[v]
            if nxt:
                expand(chosen | vb, size + 1, nxt)
            elif size + 1 > best[0]:
                best[0], best[1] = size + 1, chosen | vb
            cand &= ~vb

    expand(0, 0, G.full_mask)
    if with_witness:
        return best[0], sorted(bits(best[1]))
    return best[0]


@dataclass
class CutAnalysis:
    cut_vertices: set[int]
    closed_neighborhood_cuts: set[int]


def cut_analysis(G: Graph) -> CutAnalysis:
    """Cut vertices, and vertices ``x`` for which ``G - N[x]`` is disconnected."""
    if G.n == 0 or not is_connected(G):
        raise GraphInputError("cut analysis needs a connected graph")
    full = G.full_mask
    cuts = {v for v in range(G.n) if len(components(G, full & ~(1 << v))) > 1}
    nbhd = {x for x in range(G.n) if len(components(G, full & ~G.closed(x))) > 1}
    return CutAnalysis(cuts, nbhd)


@dataclass
class DominationReport:
    universal: set[int]
    closed_dominated_pairs: set[tuple[int, int]]
    open_dominated_pairs: set[tuple[int, int]]
    open_twins: set[tuple[int, int]]


def domination_report(G: Graph) -> DominationReport:
    """Pairs ``(y, x)`` with ``N[y] ⊆ N[x]`` resp. ``N(y) ⊆ N(x)``, plus
    universal vertices and open twins ``(u, v)``, ``u < v``."""
    full = G.full_mask
    closed_dom, open_dom, twins = set(), set(), set()
    for y in range(G.n):
        for x in range(G.n):
            if x == y:
                continue
            if G.closed(y) & ~G.closed(x) == 0:
                closed_dom.add((y, x))
            if G.adj[y] & ~G.adj[x] == 0:
                open_dom.add((y, x))
                if y < x and G.adj[y] == G.adj[x]:
                    twins.add((y, x))
    universal = {v for v in range(G.n) if G.closed(v) == full}
    return DominationReport(universal, closed_dom, open_dom, twins)


def is_dismantlable(G: Graph) -> tuple[bool, list[int]]:
    """Greedy removal of dominated vertices; returns the elimination order."""
    if G.n == 0:
        raise GraphInputError("dismantlability of the empty graph is undefined")
    left = G.full_mask
    order = []
    while left.bit_count() > 1:
        for y in bits(left):
            ny = G.closed(y) & left
            if any(ny & ~(G.closed(x) & left) == 0 for x in bits(left & ~(1 << y))):
                order.append(y)
                left &= ~(1 << y)
                break
        else:
            return False, order
    return True, order


def is_p3(G: Graph) -> bool:
    return G.n == 3 and G.edge_count == 2


@dataclass
class ConditionCheck:
    name: str
    passed: bool
    witness: object = None


@dataclass
class NecessaryConditions:
    checks: list[ConditionCheck] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def first_failure(self) -> ConditionCheck | None:
        return next((c for c in self.checks if not c.passed), None)


def necessary_conditions_report(G: Graph) -> NecessaryConditions:
    """Four conditions every strongly 2-monophonic graph satisfies.

    (i) no cut vertex unless G = P_3 (graphs of order > 2 must be connected);
    (ii) no closed neighbourhood N[x] is a cut set;
    (iii) N(y) ⊆ N(x) forces N[x] = V - {y};
    (iv) N[y] ⊆ N[x] forces x universal.
    A failed check certifies that G is not strongly 2-monophonic.
    """
    report = NecessaryConditions()
    full = G.full_mask
    if G.n > 2 and not is_connected(G):
        report.checks.append(ConditionCheck("no-cut-vertex", False, "disconnected"))
    elif G.n > 2 and not is_p3(G):
        cuts = sorted(v for v in range(G.n) if len(components(G, full & ~(1 << v))) > 1)
        report.checks.append(ConditionCheck("no-cut-vertex", not cuts, cuts[0] if cuts else None))
    else:
        report.checks.append(ConditionCheck("no-cut-vertex", True))

    sep = next((x for x in range(G.n) if len(components(G, full & ~G.closed(x))) > 1), None)
    report.checks.append(ConditionCheck("closed-neighborhood-not-cut", sep is None, sep))

    dom = domination_report(G)
    bad_open = min(
        ((y, x) for y, x in dom.open_dominated_pairs if G.closed(x) != full & ~(1 << y)),
        default=None,
    )
    report.checks.append(ConditionCheck("open-domination", bad_open is None, bad_open))
    bad_closed = min(
        ((y, x) for y, x in dom.closed_dominated_pairs if x not in dom.universal),
        default=None,
    )
    report.checks.append(ConditionCheck("closed-domination", bad_closed is None, bad_closed))
    return report


def induced_cycle_through(
    G: Graph, a: int, b: int, c: int, budget: int = DEFAULT_BUDGET
) -> list[int] | None:
    """An induced cycle containing ``a``, ``b`` and ``c``, or ``None``.

    Cycles of length >= 4 through ``a`` are ``a`` plus an induced path between
    two non-adjacent neighbours ``p, q`` of ``a`` whose interior avoids N[a].
    """
    for v in (a, b, c):
        G.check(v)
    if len({a, b, c}) != 3:
        raise GraphInputError("induced_cycle_through needs three distinct vertices")
    if G.adjacent(a, b) and G.adjacent(b, c) and G.adjacent(a, c):
        return [a, b, c]
    others = [w for w in (b, c)]
    on_rim = [w for w in others if G.adjacent(a, w)]
    if len(on_rim) > 2:
        return None
    nbrs = G.neighbors(a)
    interior = G.full_mask & ~G.closed(a)
    for p, q in combinations(nbrs, 2):
        if G.adjacent(p, q) or any(w not in (p, q) for w in on_rim):
            continue
        allowed = interior | (1 << p) | (1 << q)
        required = sum(1 << w for w in others if w not in (p, q))
        path = find_induced_path(G, p, q, required=required, allowed=allowed, budget=budget)
        if path is not None:
            return [a] + path
    return None


def sufficient_condition_failure(G: Graph) -> tuple[int, int, int] | None:
    """First triple ``(x, y, u)`` with ``x`` adjacent to neither ``y`` nor ``u``
    that lies on no induced cycle; ``None`` means every such triple does."""
    for x in range(G.n):
        far = [v for v in range(G.n) if v != x and not G.adjacent(x, v)]
        for y, u in combinations(far, 2):
            if induced_cycle_through(G, x, y, u) is None:
                return (x, y, u)
    return None


@dataclass
class Reduction:
    core: Graph
    kept: list[int]
    log: list[tuple] = field(default_factory=list)


def reduce_by_universals_and_twins(G: Graph) -> Reduction:
    """Strip universal vertices and open-twin pairs ``{u, v}`` with ``u``
    universal in ``G - v``.

    A step is taken only when the remaining graph has at least two vertices
    and is not complete, so ``2K_1`` is a fixed point and complete graphs are
    left alone. ``log`` lists ``("universal", v)`` and ``("twins", u, v)``
    entries in original vertex ids, in the order applied.
    """
    kept = list(range(G.n))
    current = G
    log: list[tuple] = []

    def acceptable(drop: set[int]) -> bool:
        rest = current.full_mask & ~sum(1 << v for v in drop)
        if rest.bit_count() < 2:
            return False
        return not all(rest & ~current.closed(v) == 0 for v in bits(rest))

    changed = True
    while changed:
        changed = False
        if current.is_complete():
            break
        full = current.full_mask
        for v in range(current.n):
            if current.closed(v) == full and acceptable({v}):
                log.append(("universal", kept[v]))
                current, idx = current.remove([v])
                kept = [kept[i] for i in idx]
                changed = True
                break
        if changed:
            continue
        for u, v in combinations(range(current.n), 2):
            if current.adj[u] == current.adj[v] and current.adj[u] == full & ~(1 << u) & ~(1 << v):
                if acceptable({u, v}):
                    log.append(("twins", kept[u], kept[v]))
                    current, idx = current.remove([u, v])
                    kept = [kept[i] for i in idx]
                    changed = True
                    break
    return Reduction(current, kept, log)
