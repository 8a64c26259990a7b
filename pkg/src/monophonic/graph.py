"""Immutable simple graphs backed by bit-row adjacency.

Vertices are dense integer ids ``0..n-1``. Row ``adj[v]`` is a Python int whose
bit ``w`` is set iff ``vw`` is an edge, so neighbourhood unions and
intersections are single integer operations.
"""

from __future__ import annotations

import hashlib
from collections import deque
from typing import Iterable, Iterator, Sequence

SubsetLabel = tuple[int, ...]


class GraphInputError(ValueError):
    """Raised for invalid vertex ids, malformed graphs or bad arguments."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Finite simple undirected graph.

    ``labels`` optionally maps each vertex to a sorted subset of ``[ground_n]``
    (Kneser/Johnson families). ``pair_labels`` optionally maps each vertex to
    its factor coordinates ``(g, h)`` in a Cartesian product.
    """

    __slots__ = ("n", "adj", "labels", "ground_n", "pair_labels", "name", "_index", "_memo")

    def __init__(
        self,
        n: int,
        adj: Sequence[int],
        labels: Sequence[SubsetLabel] | None = None,
        ground_n: int | None = None,
        pair_labels: Sequence[tuple[int, int]] | None = None,
        name: str = "",
    ) -> None:
        if n < 0 or len(adj) != n:
            raise GraphInputError("adjacency rows do not match vertex count")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise GraphInputError(f"row {v} references a vertex outside 0..{n - 1}")
            if row >> v & 1:
                raise GraphInputError(f"self-loop at vertex {v}")
            for w in bits(row):
                if not adj[w] >> v & 1:
                    raise GraphInputError(f"asymmetric adjacency between {v} and {w}")
        self.n = n
        self.adj = tuple(adj)
        self.labels: tuple[SubsetLabel, ...] | None = None
        self.ground_n = ground_n
        self._index: dict[SubsetLabel, int] | None = None
        if labels is not None:
            if len(labels) != n:
                raise GraphInputError("label count does not match vertex count")
            self.labels = tuple(tuple(lab) for lab in labels)
            self._index = {lab: v for v, lab in enumerate(self.labels)}
            if len(self._index) != n:
                raise GraphInputError("subset labels are not injective")
        self.pair_labels = tuple(pair_labels) if pair_labels is not None else None
        self.name = name
        # per-graph memo tables used by the search engine
        self._memo: dict = {}

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], **kwargs) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphInputError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj, **kwargs)

    # basic queries

    def check(self, v: int) -> int:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise GraphInputError(f"invalid vertex id {v!r} for graph with {self.n} vertices")
        return v

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def closed(self, v: int) -> int:
        """Closed neighbourhood of ``v`` as a bitmask."""
        return self.adj[v] | 1 << v

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def is_complete(self) -> bool:
        return all(self.closed(v) == self.full_mask for v in range(self.n))

    def vertex(self, label: Iterable[int]) -> int:
        """Vertex id of a subset label."""
        if self._index is None:
            raise GraphInputError("graph carries no subset labels")
        key = tuple(sorted(label))
        try:
            return self._index[key]
        except KeyError:
            raise GraphInputError(f"no vertex labelled {set(key)}") from None

    def label(self, v: int) -> SubsetLabel:
        if self.labels is None:
            raise GraphInputError("graph carries no subset labels")
        return self.labels[v]

    def describe(self, v: int) -> str:
        """Human readable name for a vertex."""
        if self.labels is not None:
            return "{" + ",".join(map(str, self.labels[v])) + "}"
        if self.pair_labels is not None:
            g, h = self.pair_labels[v]
            return f"({g},{h})"
        return str(v)

    def induced_subgraph(self, keep: Sequence[int]) -> "Graph":
        """Subgraph induced by ``keep``; vertex ``keep[i]`` becomes ``i``."""
        pos = {v: i for i, v in enumerate(keep)}
        adj = [mask_of(pos[w] for w in bits(self.adj[v]) if w in pos) for v in keep]
        labels = [self.labels[v] for v in keep] if self.labels is not None else None
        return Graph(len(keep), adj, labels=labels, ground_n=self.ground_n)

    def remove(self, drop: Iterable[int]) -> tuple["Graph", list[int]]:
        """Delete vertices; returns the new graph and the kept original ids."""
        dropped = set(drop)
        keep = [v for v in range(self.n) if v not in dropped]
        return self.induced_subgraph(keep), keep

    # identity

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        tag = f" {self.name}" if self.name else ""
        return f"<Graph{tag} n={self.n} m={self.edge_count}>"

    def __getstate__(self):
        return (self.n, self.adj, self.labels, self.ground_n, self.pair_labels, self.name)

    def __setstate__(self, state) -> None:
        n, adj, labels, ground_n, pair_labels, name = state
        self.__init__(n, adj, labels=labels, ground_n=ground_n, pair_labels=pair_labels, name=name)

    def digest(self) -> str:
        """Stable content hash (adjacency and labels) used as a cache key."""
        return hashlib.sha256(to_text(self).encode()).hexdigest()[:16]


def is_induced_path(G: Graph, seq: Sequence[int]) -> bool:
    """True iff ``seq`` lists distinct vertices forming a chordless path."""
    for v in seq:
        G.check(v)
    if not seq or len(set(seq)) != len(seq):
        return False
    for i, v in enumerate(seq):
        for j in range(i + 1, len(seq)):
            if G.adjacent(v, seq[j]) != (j == i + 1):
                return False
    return True


def bfs_distances(G: Graph, source: int) -> list[int | None]:
    G.check(source)
    dist: list[int | None] = [None] * G.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in bits(G.adj[v]):
            if dist[w] is None:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def distance(G: Graph, u: int, v: int) -> int | None:
    """Shortest-path length, or ``None`` when ``u`` and ``v`` are in different components."""
    G.check(v)
    return bfs_distances(G, u)[v]


def shortest_path(G: Graph, u: int, v: int, avoid: int = 0) -> list[int] | None:
    """A shortest ``u,v``-path in ``G`` minus the vertices in mask ``avoid``."""
    G.check(u)
    G.check(v)
    parent = {u: -1}
    queue = deque([u])
    while queue:
        a = queue.popleft()
        if a == v:
            path = [a]
            while parent[path[-1]] != -1:
                path.append(parent[path[-1]])
            return path[::-1]
        for w in bits(G.adj[a] & ~avoid):
            if w not in parent:
                parent[w] = a
                queue.append(w)
    return None


def component_mask(G: Graph, v: int, within: int | None = None) -> int:
    """Bitmask of the component of ``v`` inside the vertex mask ``within``."""
    allowed = G.full_mask if within is None else within
    seen = 1 << v
    frontier = seen
    while frontier:
        grow = 0
        for w in bits(frontier):
            grow |= G.adj[w]
        frontier = grow & allowed & ~seen
        seen |= frontier
    return seen


def components(G: Graph, within: int | None = None) -> list[int]:
    left = G.full_mask if within is None else within
    out = []
    while left:
        v = (left & -left).bit_length() - 1
        comp = component_mask(G, v, left)
        out.append(comp)
        left &= ~comp
    return out


def is_connected(G: Graph) -> bool:
    if G.n == 0:
        raise GraphInputError("connectivity of the empty graph is undefined")
    return component_mask(G, 0) == G.full_mask


# text format: "n m", m lines "u v", optional "# v : e1,e2,...,er" label lines


def to_text(G: Graph) -> str:
    edges = G.edges()
    lines = [f"{G.n} {len(edges)}"]
    lines += [f"{u} {v}" for u, v in edges]
    if G.labels is not None:
        lines += [f"# {v} : {','.join(map(str, lab))}" for v, lab in enumerate(G.labels)]
    return "\n".join(lines) + "\n"


class GraphParseError(GraphInputError):
    def __init__(self, lineno: int, message: str) -> None:
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def parse_graph(text: str) -> Graph:
    """Parse the edge-list text format. Duplicate edges are merged."""
    lines = text.splitlines()
    if not lines:
        raise GraphParseError(1, "missing header")
    head = lines[0].split()
    if len(head) != 2 or not all(tok.isdigit() for tok in head):
        raise GraphParseError(1, f"expected 'n m', got {lines[0]!r}")
    n, m = map(int, head)
    if len(lines) < 1 + m:
        raise GraphParseError(len(lines) + 1, f"expected {m} edge lines")
    adj = [0] * n
    for k in range(1, 1 + m):
        toks = lines[k].split()
        if len(toks) != 2 or not all(tok.isdigit() for tok in toks):
            raise GraphParseError(k + 1, f"malformed edge line {lines[k]!r}")
        u, v = map(int, toks)
        if u >= n or v >= n:
            raise GraphParseError(k + 1, f"vertex id out of range 0..{n - 1}")
        if u == v:
            raise GraphParseError(k + 1, f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    labels: dict[int, SubsetLabel] = {}
    for k in range(1 + m, len(lines)):
        line = lines[k].strip()
        if not line:
            continue
        if not line.startswith("#") or ":" not in line:
            raise GraphParseError(k + 1, f"unexpected content {lines[k]!r}")
        left, right = line[1:].split(":", 1)
        try:
            v = int(left)
            lab = tuple(int(e) for e in right.split(","))
        except ValueError:
            raise GraphParseError(k + 1, f"malformed label line {lines[k]!r}") from None
        if not 0 <= v < n or v in labels:
            raise GraphParseError(k + 1, f"bad or repeated label vertex {v}")
        if list(lab) != sorted(set(lab)):
            raise GraphParseError(k + 1, "label elements must be strictly ascending")
        labels[v] = lab
    if labels and len(labels) != n:
        raise GraphParseError(len(lines), "labels must be given for every vertex or none")
    ground = max((max(lab) for lab in labels.values() if lab), default=None)
    return Graph(n, adj, labels=[labels[v] for v in range(n)] if labels else None, ground_n=ground)
