"""Pruned backtracking for induced paths with prescribed interior vertices.

The search extends a path from ``source`` one vertex at a time while keeping
it induced: a new vertex must be adjacent to the tip and to no earlier path
vertex. ``blocked`` is the union of closed neighbourhoods of every path vertex
except the tip, so the admissible next vertices are ``N(tip) & ~blocked``.

A branch is cut as soon as the target or a still-required vertex is blocked,
is disconnected from the tip in the unblocked region, or (for required
vertices) has fewer than two usable neighbours left.
"""

from __future__ import annotations

from collections import deque

from .graph import Graph, bits

DEFAULT_BUDGET = 10**8


class BudgetExceeded(RuntimeError):
    """The step budget of a search ran out before it was decided."""

    def __init__(self, steps: int) -> None:
        super().__init__(f"search budget of {steps} extension steps exhausted")
        self.steps = steps


def _static_distances(G: Graph, src: int, allowed: int) -> list[int]:
    far = G.n + 1
    dist = [far] * G.n
    dist[src] = 0
    queue = deque([src])
    while queue:
        v = queue.popleft()
        for w in bits(G.adj[v] & allowed):
            if dist[w] == far:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def find_induced_path(
    G: Graph,
    source: int,
    target: int,
    required: int = 0,
    allowed: int | None = None,
    budget: int = DEFAULT_BUDGET,
) -> list[int] | None:
    """Return an induced ``source,target``-path through every vertex in the
    bitmask ``required`` that uses only vertices of ``allowed``, or ``None``
    when no such path exists.

    Raises ``BudgetExceeded`` after ``budget`` extension steps.
    """
    adj = G.adj
    if allowed is None:
        allowed = G.full_mask
    tbit = 1 << target
    if not (allowed >> source & 1 and allowed & tbit):
        return None
    required &= ~(1 << source) & ~tbit
    if source == target:
        return [source] if not required else None
    if required & ~allowed:
        return None

    order_y = _static_distances(G, target, allowed)
    order_req = {w: _static_distances(G, w, allowed) for w in bits(required)}

    def dead(tip: int, blocked: int, need: int) -> bool:
        if blocked & tbit or need & blocked:
            return True
        region = allowed & ~blocked
        tip_adj = adj[tip]
        if need and tip_adj & tbit:
            return True
        # reachability inside the unblocked region
        seen = 1 << tip
        frontier = seen
        while frontier:
            grow = 0
            for w in bits(frontier):
                grow |= adj[w]
            frontier = grow & region & ~seen
            seen |= frontier
        if not seen & tbit or need & ~seen:
            return True
        usable = region | (1 << tip)
        for w in bits(need):
            if tip_adj >> w & 1:
                continue
            if (adj[w] & usable).bit_count() < 2:
                return True
        return False

    def candidates(tip: int, blocked: int, need: int) -> list[int]:
        nxt = adj[tip] & allowed & ~blocked
        if nxt & tbit:
            return [target] if not need else []
        forced = nxt & need
        if forced:
            return [forced.bit_length() - 1] if forced & (forced - 1) == 0 else []
        cand = list(bits(nxt))
        if need:
            goal = order_req[(need & -need).bit_length() - 1]
            cand.sort(key=lambda v: (goal[v], -order_y[v]))
        else:
            cand.sort(key=lambda v: order_y[v])
        return cand

    steps = 0
    path = [source]
    need0 = required
    if dead(source, 0, need0):
        return None
    # each frame: (candidate list, next index, blocked mask of the tip, need at tip)
    stack = [(candidates(source, 0, need0), 0, 0, need0)]
    while stack:
        cand, idx, blocked, need = stack[-1]
        if idx >= len(cand):
            stack.pop()
            path.pop()
            continue
        stack[-1] = (cand, idx + 1, blocked, need)
        v = cand[idx]
        steps += 1
        if steps > budget:
            raise BudgetExceeded(budget)
        tip = path[-1]
        nblocked = blocked | adj[tip] | (1 << tip)
        nneed = need & ~(1 << v)
        if v == target:
            if not nneed:
                return path + [v]
            continue
        if dead(v, nblocked, nneed):
            continue
        path.append(v)
        stack.append((candidates(v, nblocked, nneed), 0, nblocked, nneed))
    return None
