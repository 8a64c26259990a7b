"""Explicit induced-path constructions.

Subset vertices are handled as Python sets of ground elements; builders
return paths as lists of sorted tuples so they can be looked up directly in
the labelled graphs from :mod:`monophonic.generators`.

Every witness builder re-checks its output with :func:`is_induced_path` in
the host graph. A failed check is logged and answered by engine search, and
the returned :class:`BuiltPath` is flagged ``fallback=True``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable, Sequence

from . import generators
from .engine import induced_path_through, is_monophonic_set, is_strongly_2_monophonic, monophonic_interval
from .graph import Graph, GraphInputError, is_connected, is_induced_path, shortest_path
from .structure import is_p3

log = logging.getLogger(__name__)

Subset = tuple[int, ...]


class PreconditionError(GraphInputError):
    """A builder hypothesis (named in the message) does not hold."""


@dataclass
class BuiltPath:
    path: list
    case: str
    fallback: bool = False

    def __len__(self) -> int:
        return len(self.path)


@dataclass(frozen=True)
class VennPartition:
    X: frozenset[int]
    Y: frozenset[int]
    U: frozenset[int]
    A: frozenset[int]
    B: frozenset[int]
    C: frozenset[int]
    D: frozenset[int]
    Z: frozenset[int]

    @property
    def t(self) -> int:
        return len(self.C) + len(self.D)

    @property
    def s(self) -> int:
        return len(self.B) + len(self.D)


def first(seq: Sequence[int], k: int) -> list[int]:
    """The ``k`` smallest-indexed elements of an ordered block (X_{<=k})."""
    return list(seq[:k]) if k > 0 else []


def last(seq: Sequence[int], k: int) -> list[int]:
    """The ``k`` largest-indexed elements of an ordered block (X_{>=k})."""
    return list(seq[len(seq) - k:]) if k > 0 else []


def _tup(*parts: Iterable[int]) -> Subset:
    out: set[int] = set()
    for p in parts:
        out.update(p)
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def _kneser(n: int, r: int) -> Graph:
    return generators.kneser(n, r)


@lru_cache(maxsize=None)
def _johnson(n: int, r: int) -> Graph:
    return generators.johnson(n, r)


def _as_set(v: Iterable[int], n: int, what: str) -> frozenset[int]:
    s = frozenset(v)
    if not s or min(s) < 1 or max(s) > n:
        raise GraphInputError(f"{what}={sorted(s)} is not a subset of [1..{n}]")
    return s


def venn_partition(x: Iterable[int], y: Iterable[int], u: Iterable[int], n: int) -> VennPartition:
    """The eight regions cut out of ``[n]`` by the sets x, y and u."""
    x, y, u = (_as_set(v, n, name) for v, name in ((x, "x"), (y, "y"), (u, "u")))
    if not len(x) == len(y) == len(u):
        raise GraphInputError("x, y and u must have the same size")
    if len({x, y, u}) != 3:
        raise GraphInputError("x, y and u must be pairwise distinct")
    ground = frozenset(range(1, n + 1))
    return VennPartition(
        X=x - y - u,
        Y=y - x - u,
        U=u - x - y,
        A=(x & y) - u,
        B=(y & u) - x,
        C=(x & u) - y,
        D=x & y & u,
        Z=ground - (x | y | u),
    )


# Distance-realising chains in the odd graph


def _even_chain(A: Sequence[int], B: Sequence[int], C: Iterable[int], D: Iterable[int]) -> list[Subset]:
    """a = A ∪ C to b = B ∪ C in 2k steps (k = |A| = |B|), odd steps through D."""
    k = len(A)
    C, D = list(C), list(D)
    chain = [_tup(first(B, 0), last(A, k), C)]
    for i in range(1, k + 1):
        chain.append(_tup(first(A, i - 1), last(B, k - i), D))
        chain.append(_tup(first(B, i), last(A, k - i), C))
    return chain


def _odd_chain(
    A: Iterable[int], B: Iterable[int], C: Sequence[int], Dp: Sequence[int], rest: Iterable[int]
) -> list[Subset]:
    """x_0, ..., x_{2t} leading from a neighbour of A ∪ C to B ∪ C (t = |C|)."""
    t = len(C)
    A, B, rest = list(A), list(B), list(rest)
    chain = [_tup(first(C, 0), last(Dp, t), B)]
    for i in range(1, t + 1):
        chain.append(_tup(first(Dp, i - 1), last(C, t - i), A, rest))
        chain.append(_tup(first(C, i), last(Dp, t - i), B))
    return chain


def _odd_graph_blocks(a: Iterable[int], b: Iterable[int], n: int):
    a, b = _as_set(a, n, "a"), _as_set(b, n, "b")
    r = len(a)
    if len(b) != r:
        raise GraphInputError("a and b must have the same size")
    if n != 2 * r + 1:
        raise GraphInputError(f"expected ground set of size 2r+1={2 * r + 1}, got n={n}")
    if a == b:
        raise GraphInputError("a and b must differ")
    ground = frozenset(range(1, n + 1))
    return a, b, sorted(a - b), sorted(b - a), sorted(a & b), sorted(ground - a - b)


def even_path(a: Iterable[int], b: Iterable[int], n: int) -> list[Subset]:
    """Induced a,b-path of length 2(r - |a∩b|) in K(2r+1, r)."""
    a, b, A, B, C, D = _odd_graph_blocks(a, b, n)
    if not C:
        raise PreconditionError("even_path needs |a∩b| >= 1; disjoint vertices are adjacent")
    return _even_chain(A, B, C, D)


def odd_path(a: Iterable[int], b: Iterable[int], n: int, dprime: Iterable[int] | None = None) -> list[Subset]:
    """Induced a,b-path of length 2|a∩b| + 1 in K(2r+1, r).

    ``dprime`` is a ``|a∩b|``-subset of the complement of ``a ∪ b``; by
    default its smallest elements.
    """
    a, b, A, B, C, D = _odd_graph_blocks(a, b, n)
    t = len(C)
    if dprime is None:
        Dp = D[:t]
    else:
        Dp = sorted(set(dprime))
        if len(Dp) != t or not set(Dp) <= set(D):
            raise GraphInputError(f"dprime must be a {t}-subset of {D}")
    return [tuple(sorted(a))] + _odd_chain(A, B, C, Dp, sorted(set(D) - set(Dp)))


# Odd-graph witness paths


def _validated(G: Graph, labels: list[Subset], start: Subset, end: Subset, via: Subset) -> bool:
    if labels[0] != start or labels[-1] != end or via not in labels:
        return False
    try:
        ids = [G.vertex(v) for v in labels]
    except GraphInputError:
        return False
    return is_induced_path(G, ids)


def _fallback(G: Graph, start: Subset, end: Subset, via: Subset, case: str) -> BuiltPath:
    log.warning("construction %s failed validation for %s,%s via %s; using search", case, start, end, via)
    ids = induced_path_through(G, G.vertex(start), G.vertex(end), G.vertex(via))
    if ids is None:
        raise PreconditionError(f"{via} lies on no induced {start},{end}-path")
    return BuiltPath([G.labels[v] for v in ids], case, fallback=True)


def _odd_graph_witness(x: frozenset, y: frozenset, u: frozenset, r: int) -> tuple[list[Subset], str]:
    n = 2 * r + 1
    tx, ty, tu = (tuple(sorted(v)) for v in (x, y, u))
    if not u & (x | y):
        return [tx, tu, ty], "0"
    if not u & x:
        path, case = _odd_graph_witness(y, x, u, r)
        return path[::-1], case
    p = venn_partition(x, y, u, n)
    X, Y, U, A, B, C, D, Z = (sorted(s) for s in (p.X, p.Y, p.U, p.A, p.B, p.C, p.D, p.Z))
    if not u & y:
        w = _even_chain(X + A, U, C, Y + Z)
        return w + [ty], "1"
    if not D and not Z:
        w = _odd_chain(X + A, U + B, C, Y[1:], Y[:1])
        v = _odd_chain(Y + A, U + C, B, X[1:], X[:1])
        return [tx] + w + v[-2::-1] + [ty], "2"
    if not D and len(Z) == 1:
        w = _odd_chain(X + A, U + B, C, Y, Z)
        v = _odd_chain(Y + A, U + C, B, X, Z)
        return [tx] + w + v[-2::-1] + [ty], "3"
    if not X and not Y:
        t = p.t
        Cp, Bp = C + D, B + D
        zt, zt1 = Z[t - 1], Z[t]
        w = _odd_chain(A, B + U, Cp, [z for z in Z if z != zt], [zt])
        v = _odd_chain(A, C + U, Bp, [z for z in Z if z != zt1], [zt1])
        return [tx] + w + v[-2::-1] + [ty], "4"
    w = _even_chain(A + X, U + B, C + D, Y + Z)
    v = _even_chain(A + Y, U + C, B + D, X + Z)
    return w + v[-2::-1], "5"


def _lift_splice(path: list[Subset], old: Subset, new: frozenset) -> list[Subset]:
    """Replace interior vertex ``old`` by ``new`` and shortcut to the extreme
    neighbours of ``new`` on either side."""
    ell = path.index(old)
    disjoint = [not new & set(v) for v in path]
    i = next(k for k in range(ell) if disjoint[k])
    j = next(k for k in range(len(path) - 1, ell, -1) if disjoint[k])
    return path[: i + 1] + [tuple(sorted(new))] + path[j:]


def _general_kneser_witness(x: frozenset, y: frozenset, u: frozenset, r: int, n: int) -> tuple[list[Subset], str]:
    if n == 2 * r + 1:
        return _odd_graph_witness(x, y, u, r)
    # relabel so that x ∪ y occupies the smallest ground elements
    core = sorted(x | y)
    order = core + [e for e in range(1, n + 1) if e not in x | y]
    fwd = {e: k + 1 for k, e in enumerate(order)}
    back = {k: e for e, k in fwd.items()}
    fx, fy, fu = (frozenset(fwd[e] for e in s) for s in (x, y, u))
    path, case = _lifted(fx, fy, fu, r, n)
    return [tuple(sorted(back[e] for e in v)) for v in path], case


def _lifted(x: frozenset, y: frozenset, u: frozenset, r: int, n: int) -> tuple[list[Subset], str]:
    if n == 2 * r + 1:
        return _odd_graph_witness(x, y, u, r)
    if n not in u:
        return _lifted(x, y, u, r, n - 1)
    base = u - {n}
    for e in sorted(set(range(1, n)) - u):
        u2 = base | {e}
        if u2 not in (x, y):
            break
    path, case = _lifted(x, y, u2, r, n - 1)
    return _lift_splice(path, tuple(sorted(u2)), u), case + "+lift"


def kneser_witness_path(
    x: Iterable[int], y: Iterable[int], u: Iterable[int], r: int, n: int | None = None
) -> BuiltPath:
    """Induced x,y-path through u in K(n, r) for non-adjacent x, y.

    For the odd graph (n = 2r+1, the default) the path follows a five-way
    case split on the Venn regions of x, y, u (``case`` "0" is the direct
    x,u,y path). Larger n relabels x ∪ y into the bottom of the ground set
    and lifts the odd-graph path one ground element at a time.
    """
    if r < 3:
        raise GraphInputError("the construction needs r >= 3")
    n = 2 * r + 1 if n is None else n
    if n < 2 * r + 1:
        raise GraphInputError(f"need n >= 2r+1, got n={n}")
    x, y, u = (_as_set(v, n, name) for v, name in ((x, "x"), (y, "y"), (u, "u")))
    if not len(x) == len(y) == len(u) == r:
        raise GraphInputError(f"x, y and u must be {r}-subsets")
    if not x & y:
        raise GraphInputError("x and y are adjacent (disjoint)")
    if u in (x, y):
        raise GraphInputError("u must differ from x and y")
    path, case = _general_kneser_witness(x, y, u, r, n)
    G = _kneser(n, r)
    tx, ty, tu = (tuple(sorted(v)) for v in (x, y, u))
    if not _validated(G, path, tx, ty, tu):
        return _fallback(G, tx, ty, tu, case)
    return BuiltPath(path, case)


# Monotonicity lifting


def lift_witness(
    n: int,
    r: int,
    S: Iterable[Iterable[int]],
    u: Iterable[int],
    witness: Callable[[Subset], list[Subset] | None] | None = None,
    check: bool = True,
) -> BuiltPath:
    """Induced path of K(n+1, r) between two members of ``S`` through ``u``,
    where ``S`` is monophonic in K(n, r) and ``u`` contains ``n+1``.

    ``witness(v)`` may supply an induced path of K(n, r) between two members
    of ``S`` through ``v``; by default it is found with the engine.
    """
    if n < 2 * r:
        raise GraphInputError("need n >= 2r")
    S = {tuple(sorted(s)) for s in S}
    uset = _as_set(u, n + 1, "u")
    if len(uset) != r or n + 1 not in uset:
        raise GraphInputError(f"u must be an {r}-subset containing {n + 1}")
    Gn = _kneser(n, r)
    if check and not is_monophonic_set(Gn, [Gn.vertex(s) for s in S]).holds:
        raise PreconditionError(f"S is not a monophonic set of K({n},{r})")
    tu = tuple(sorted(uset))
    host = _kneser(n + 1, r)
    rest = sorted(set(range(1, n + 1)) - uset)
    base = uset - {n + 1}
    if n == 2 * r:
        x, y = tuple(rest[:r]), tuple(rest[1:])
        if x not in S or y not in S:
            raise PreconditionError("with n = 2r the set S must contain every vertex")
        built = BuiltPath([x, tu, y], "n=2r")
        ends = (x, y)
    else:
        missing = [tuple(sorted(base | {e})) for e in rest if tuple(sorted(base | {e})) not in S]
        if missing:
            u2 = missing[0]
            path = witness(u2) if witness is not None else _engine_witness(Gn, S, u2)
            if path is None:
                raise PreconditionError(f"{u2} is not covered by S in K({n},{r})")
            built = BuiltPath(_lift_splice(path, u2, uset), "splice")
        else:
            i, j = rest[0], rest[1]
            fill = sorted(set(range(1, n + 1)) - uset - {i, j})[: r - 1]
            a, b = tuple(sorted(base | {i})), tuple(sorted(base | {j}))
            built = BuiltPath([a, _tup(fill, [j]), tu, _tup(fill, [i]), b], "explicit")
        ends = (built.path[0], built.path[-1])
    if ends[0] not in S or ends[1] not in S or not _validated(host, built.path, ends[0], ends[1], tu):
        log.warning("lift for %s failed validation", tu)
        for a, b in combinations(sorted(S), 2):
            ids = induced_path_through(host, host.vertex(a), host.vertex(b), host.vertex(tu))
            if ids is not None:
                return BuiltPath([host.labels[v] for v in ids], built.case, fallback=True)
        raise PreconditionError(f"{tu} is not covered by S in K({n + 1},{r})")
    return built


def _engine_witness(G: Graph, S: set[Subset], v: Subset) -> list[Subset] | None:
    target = G.vertex(v)
    for a, b in combinations(sorted(S), 2):
        res = monophonic_interval(G, G.vertex(a), G.vertex(b))
        if target in res.members:
            return [G.labels[w] for w in res.witness[target]]
    return None


# Johnson graphs


def johnson_witness_path(x: Iterable[int], y: Iterable[int], u: Iterable[int], n: int, r: int) -> BuiltPath:
    """Induced x,y-path through u in J(n, r): two shortest paths glued at u."""
    x, y, u = (_as_set(v, n, name) for v, name in ((x, "x"), (y, "y"), (u, "u")))
    if not len(x) == len(y) == len(u) == r:
        raise GraphInputError(f"x, y and u must be {r}-subsets")
    if r < 2:
        raise GraphInputError("need r >= 2")
    if len(x & y) > r - 2:
        raise GraphInputError("x and y must be non-adjacent (|x∩y| <= r-2)")
    if u in (x, y):
        raise GraphInputError("u must differ from x and y")
    if 2 * r > n:
        # J(n, r) is isomorphic to J(n, n-r) under complementation
        ground = frozenset(range(1, n + 1))
        inner = johnson_witness_path(ground - x, ground - y, ground - u, n, n - r)
        path = [tuple(sorted(ground - set(v))) for v in inner.path]
        built = BuiltPath(path, "complement", inner.fallback)
    else:
        built = BuiltPath(_johnson_chain(x, y, u, r), "shortest-pair")
    G = _johnson(n, r)
    tx, ty, tu = (tuple(sorted(v)) for v in (x, y, u))
    if not _validated(G, built.path, tx, ty, tu):
        return _fallback(G, tx, ty, tu, built.case)
    return built


def _johnson_chain(x: frozenset, y: frozenset, u: frozenset, r: int) -> list[Subset]:
    t, s = len(u & x), len(u & y)
    X, Y, U = sorted(x - y - u), sorted(y - x - u), sorted(u - x - y)
    A, B, C = sorted((x & y) - u), sorted((y & u) - x), sorted((x & u) - y)
    D = sorted(x & y & u)
    Xp, Yp = A + X, Y + A
    Bp, Cp = U + B, C + U
    w = [_tup(first(Bp, i), last(Xp, r - t - i), C, D) for i in range(r - t + 1)]
    v = [_tup(last(Cp, j), first(Yp, r - s - j), B, D) for j in range(r - s + 1)]
    return w + v[-2::-1]


# Cartesian products


def _factor_ok(G: Graph, name: str) -> None:
    if G.n < 1 or not is_connected(G):
        raise PreconditionError(f"factor {name} must be connected")
    if is_p3(G):
        raise PreconditionError(f"factor {name} must not be P_3")
    if G.is_complete():
        return
    verdict = G._memo.get("s2m")
    if verdict is None:
        verdict = G._memo["s2m"] = is_strongly_2_monophonic(G)[0]
    if not verdict:
        raise PreconditionError(f"factor {name} is neither complete nor strongly 2-monophonic")


def disjoint_path_pair(G: Graph, x: int, y: int, z: int, check: bool = True) -> tuple[list[int], list[int]]:
    """Induced x,y-path P and y,z-path Q meeting only in y.

    Requires G strongly 2-monophonic (or complete) and not P_3.
    """
    for v in (x, y, z):
        G.check(v)
    if len({x, y, z}) != 3:
        raise GraphInputError("x, y and z must be distinct")
    if check:
        _factor_ok(G, "G")
    if not G.adjacent(x, z):
        R = induced_path_through(G, x, z, y)
        if R is None:
            raise PreconditionError(f"{y} lies on no induced {x},{z}-path; G is not strongly 2-monophonic")
        k = R.index(y)
        return R[: k + 1], R[k:]
    if G.adjacent(x, y) and G.adjacent(y, z):
        return [x, y], [y, z]
    if G.adjacent(y, z):
        P, Q = disjoint_path_pair(G, z, y, x, check=False)
        return Q[::-1], P[::-1]
    # here xz is an edge and yz is not
    pivots = [w for w in G.neighbors(x) if w != z and not G.adjacent(w, z)]
    if not pivots:
        raise PreconditionError(f"N({x}) ⊆ N[{z}] although {z} is not universal")
    xp = y if y in pivots else pivots[0]
    if xp == y:
        Q = shortest_path(G, y, z, avoid=1 << x)
        if Q is None:
            raise PreconditionError(f"{x} is a cut vertex")
        return [x, y], Q
    R = induced_path_through(G, xp, z, y)
    if R is None:
        raise PreconditionError(f"{y} lies on no induced {xp},{z}-path")
    j = R.index(y)
    t = max(i for i in range(j + 1) if G.adjacent(R[i], x))
    return [x] + R[t : j + 1], R[j:]


def _product_coords(G: Graph, H: Graph, src, dst, via) -> tuple[list[tuple[int, int]], str]:
    (x, a), (y, b), (z, c) = src, dst, via
    if a == b:
        gpath = shortest_path(G, x, y) if z in (x, y) else induced_path_through(G, x, y, z)
        if gpath is None:
            raise PreconditionError(f"{z} lies on no induced {x},{y}-path of G")
        hleg = shortest_path(H, a, c)
        coords = [(x, h) for h in hleg] + [(g, c) for g in gpath[1:]] + [(y, h) for h in hleg[-2::-1]]
        return coords, "layer"
    if x == y:
        coords, case = _product_coords(H, G, (a, x), (b, y), (c, z))
        return [(g, h) for h, g in coords], case
    if z in (x, y) and c in (a, b):
        gpath, hpath = shortest_path(G, x, y), shortest_path(H, a, b)
        if (z, c) == (x, b):
            return [(x, h) for h in hpath] + [(g, b) for g in gpath[1:]], "corner"
        return [(g, a) for g in gpath] + [(y, h) for h in hpath[1:]], "corner"
    if c in (a, b):
        if c == b:
            coords, case = _product_coords(G, H, dst, src, via)
            return coords[::-1], case
        P1, P2 = disjoint_path_pair(G, x, z, y, check=False)
        Q = shortest_path(H, a, b)
        return [(g, a) for g in P1] + [(z, h) for h in Q[1:]] + [(g, b) for g in P2[1:]], "case1"
    if z in (x, y):
        coords, case = _product_coords(H, G, (a, x), (b, y), (c, z))
        return [(g, h) for h, g in coords], case
    P1, P2 = disjoint_path_pair(G, x, z, y, check=False)
    Q1, Q2 = disjoint_path_pair(H, a, c, b, check=False)
    coords = (
        [(g, a) for g in P1]
        + [(z, h) for h in Q1[1:]]
        + [(g, c) for g in P2[1:]]
        + [(y, h) for h in Q2[1:]]
    )
    return coords, "case2"


def product_witness_path(
    G: Graph,
    H: Graph,
    src: tuple[int, int],
    dst: tuple[int, int],
    via: tuple[int, int],
    product: Graph | None = None,
) -> BuiltPath:
    """Induced src,dst-path through via in G □ H, as product vertex ids.

    Each factor must be connected, not P_3, and either complete or strongly
    2-monophonic.
    """
    _factor_ok(G, "G")
    _factor_ok(H, "H")
    for g, h in (src, dst, via):
        G.check(g)
        H.check(h)
    GH = product if product is not None else generators.cartesian_product(G, H)
    vid = lambda p: p[0] * H.n + p[1]  # noqa: E731
    s, d, m = vid(src), vid(dst), vid(via)
    if len({s, d, m}) != 3:
        raise GraphInputError("src, dst and via must be distinct")
    if GH.adjacent(s, d):
        raise GraphInputError("src and dst must be non-adjacent")
    coords, case = _product_coords(G, H, tuple(src), tuple(dst), tuple(via))
    ids = [vid(p) for p in coords]
    if ids[0] == s and ids[-1] == d and m in ids and is_induced_path(GH, ids):
        return BuiltPath(ids, case)
    log.warning("product construction %s failed validation; using search", case)
    found = induced_path_through(GH, s, d, m)
    if found is None:
        raise PreconditionError("via lies on no induced src,dst-path")
    return BuiltPath(found, case, fallback=True)
