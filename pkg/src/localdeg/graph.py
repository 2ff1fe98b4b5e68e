"""Simple undirected graphs on vertices ``0..n-1`` backed by bitset rows.

Row ``v`` is a Python int whose bit ``u`` is set iff ``u`` and ``v`` are
adjacent.  Graphs are immutable once built, so they hash, compare and
pickle cheaply and can be shared between worker processes.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator

INF = math.inf


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
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
    """An immutable simple undirected graph.

    Use :func:`from_edge_list` or one of the constructors below rather than
    building rows by hand; the constructor validates symmetry and
    irreflexivity.
    """

    __slots__ = ("n", "rows", "_degrees")

    def __init__(self, n: int, rows: Iterable[int]):
        rows = tuple(rows)
        if n < 0 or len(rows) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for v, r in enumerate(rows):
            if r & ~full:
                raise ValueError(f"row {v} references a vertex >= {n}")
            if r >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in bits(r):
                if not rows[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_degrees", tuple(r.bit_count() for r in rows))

    @classmethod
    def _from_rows(cls, n: int, rows) -> Graph:
        # Skips validation; callers guarantee symmetric irreflexive rows.
        g = object.__new__(cls)
        rows = tuple(rows)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", rows)
        object.__setattr__(g, "_degrees", tuple(r.bit_count() for r in rows))
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return (Graph, (self.n, self.rows))

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count})"

    def __len__(self):
        return self.n

    # -- queries --------------------------------------------------------

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def degrees(self) -> tuple[int, ...]:
        return self._degrees

    def degree(self, v: int) -> int:
        self._check(v)
        return self._degrees[v]

    def adjacent(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool(self.rows[u] >> v & 1)

    def neighbours(self, v: int) -> list[int]:
        self._check(v)
        return list(bits(self.rows[v]))

    @property
    def edge_count(self) -> int:
        return sum(self._degrees) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in bits(self.rows[u] >> (u + 1) << (u + 1))]

    @property
    def min_degree(self) -> int:
        return min(self._degrees) if self.n else 0

    @property
    def max_degree(self) -> int:
        return max(self._degrees) if self.n else 0

    def is_complete(self) -> bool:
        return all(d == self.n - 1 for d in self._degrees)

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range for graph of order {self.n}")

    # -- derived graphs -------------------------------------------------

    def remove_edge(self, u: int, v: int) -> Graph:
        if not self.adjacent(u, v):
            raise ValueError(f"({u}, {v}) is not an edge")
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph._from_rows(self.n, rows)

    def add_edge(self, u: int, v: int) -> Graph:
        if u == v:
            raise ValueError(f"self-loop ({u}, {v})")
        self._check(u)
        self._check(v)
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph._from_rows(self.n, rows)

    def relabel(self, perm: list[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        rows = [0] * self.n
        for v in range(self.n):
            rows[perm[v]] = mask_of(perm[u] for u in bits(self.rows[v]))
        return Graph._from_rows(self.n, rows)

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph of order ``n`` from unordered pairs; duplicates collapse."""
    rows = [0] * n
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge {pair!r} has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"edge {pair!r} is a self-loop")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def from_networkx(g) -> Graph:
    nodes = sorted(g.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return from_edge_list(len(nodes), ((index[u], index[v]) for u, v in g.edges()))


# -- neighbourhoods and induced subgraphs --------------------------------


def open_neighbourhood(G: Graph, v: int) -> frozenset[int]:
    G._check(v)
    return frozenset(bits(G.rows[v]))


def closed_neighbourhood(G: Graph, v: int) -> frozenset[int]:
    G._check(v)
    return frozenset(bits(G.rows[v] | 1 << v))


def induced_subgraph(G: Graph, X: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Return ``<X>`` relabelled ``0..|X|-1`` in increasing order of ``X``, and the old-to-new map."""
    members = sorted(set(X))
    for v in members:
        G._check(v)
    index = {v: i for i, v in enumerate(members)}
    xmask = mask_of(members)
    rows = [mask_of(index[u] for u in bits(G.rows[v] & xmask)) for v in members]
    return Graph(len(members), rows), index


def induced_mask_degree(G: Graph, u: int, mask: int) -> int:
    """Degree of ``u`` inside the subgraph induced by the vertex bitmask ``mask``."""
    return (G.rows[u] & mask).bit_count()


# -- products ---------------------------------------------------------------


def strong_product(G: Graph, H: Graph) -> Graph:
    """``G ⊠ H`` with ``(u, v)`` encoded as ``u * n(H) + v``."""
    nh = H.n
    edges = []
    for u in range(G.n):
        for x in range(G.n):
            for v in range(nh):
                for y in range(nh):
                    a, b = u * nh + v, x * nh + y
                    if a >= b:
                        continue
                    same_g, adj_g = u == x, bool(G.rows[u] >> x & 1)
                    same_h, adj_h = v == y, bool(H.rows[v] >> y & 1)
                    if (same_g and adj_h) or (same_h and adj_g) or (adj_g and adj_h):
                        edges.append((a, b))
    return from_edge_list(G.n * nh, edges)


def join(G: Graph, H: Graph) -> Graph:
    """``G + H``: vertices of ``G`` keep their labels, ``H``'s are shifted by ``n(G)``."""
    ng = G.n
    hmask = ((1 << H.n) - 1) << ng
    gmask = (1 << ng) - 1
    rows = [r | hmask for r in G.rows] + [(r << ng) | gmask for r in H.rows]
    return Graph(ng + H.n, rows)


def disjoint_union(G: Graph, H: Graph) -> Graph:
    ng = G.n
    return Graph(ng + H.n, list(G.rows) + [r << ng for r in H.rows])


# -- distances --------------------------------------------------------------


def bfs_distances(G: Graph, v: int) -> list[float | int]:
    """Shortest-path distances from ``v``; unreachable vertices get :data:`INF`."""
    G._check(v)
    dist: list[float | int] = [INF] * G.n
    dist[v] = 0
    seen = 1 << v
    frontier = 1 << v
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for u in bits(frontier):
            nxt |= G.rows[u]
        nxt &= ~seen
        seen |= nxt
        for u in bits(nxt):
            dist[u] = d
        frontier = nxt
    return dist


def bfs_distances_within(G: Graph, v: int, mask: int) -> dict[int, int]:
    """Distances from ``v`` inside the subgraph induced by ``mask`` (reachable vertices only)."""
    dist = {v: 0}
    seen = 1 << v
    frontier = 1 << v
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for u in bits(frontier):
            nxt |= G.rows[u]
        nxt &= mask & ~seen
        seen |= nxt
        for u in bits(nxt):
            dist[u] = d
        frontier = nxt
    return dist


def component_mask(G: Graph, v: int, allowed: int | None = None) -> int:
    """Bitmask of the component containing ``v`` in the subgraph induced by ``allowed``."""
    allowed = G.vertex_mask if allowed is None else allowed
    seen = 1 << v
    frontier = seen
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= G.rows[u]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def is_connected(G: Graph, allowed: int | None = None) -> bool:
    """Connectivity of ``G`` (or of the subgraph induced by ``allowed``); the null graph counts as connected."""
    allowed = G.vertex_mask if allowed is None else allowed
    if not allowed:
        return True
    start = (allowed & -allowed).bit_length() - 1
    return component_mask(G, start, allowed) == allowed


def components(G: Graph) -> list[list[int]]:
    left = G.vertex_mask
    out = []
    while left:
        start = (left & -left).bit_length() - 1
        comp = component_mask(G, start, left)
        out.append(list(bits(comp)))
        left &= ~comp
    return out


def graph_power(G: Graph, k: int) -> Graph:
    """``G^k``: ``u ~ v`` iff ``1 <= dist_G(u, v) <= k``."""
    if k < 1:
        raise ValueError("power must be a positive integer")
    rows = []
    for v in range(G.n):
        reach = 1 << v
        frontier = reach
        for _ in range(k):
            nxt = 0
            for u in bits(frontier):
                nxt |= G.rows[u]
            frontier = nxt & ~reach
            reach |= nxt
            if not frontier:
                break
        rows.append(reach & ~(1 << v))
    return Graph(G.n, rows)


# -- small named graphs -----------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(leaves: int) -> Graph:
    return complete_bipartite(1, leaves)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner)
