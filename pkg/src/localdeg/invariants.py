"""Connectivity, edge-connectivity, distances, girth and planarity.

Each invariant has a fast path and a brute-force mode for cross-checking
on small graphs:

=====================  ==================================  ======================================
invariant              default                             brute force
=====================  ==================================  ======================================
vertex connectivity    unit-capacity max-flow, split nodes  smallest disconnecting vertex subset
edge connectivity      unit-capacity max-flow               minimum over all vertex bipartitions
planarity              networkx left-right test             Kuratowski-subdivision search
=====================  ==================================  ======================================
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .graph import INF, Graph, bfs_distances, bits, component_mask, is_connected


@dataclass(frozen=True)
class ConnectivityCertificate:
    """``value`` plus a separator of that size; ``separator`` is ``None`` only for complete graphs."""

    value: int
    separator: frozenset | None

    def __int__(self):
        return self.value


# -- max-flow ------------------------------------------------------------------


class _FlowNetwork:
    """Residual network with arcs stored in pairs: arc ``e ^ 1`` reverses arc ``e``."""

    def __init__(self, size: int):
        self.out: list[list[int]] = [[] for _ in range(size)]
        self.head: list[int] = []
        self.base: list[int] = []

    def add(self, u: int, v: int, c: int, back: int = 0) -> None:
        self.out[u].append(len(self.head))
        self.head.append(v)
        self.base.append(c)
        self.out[v].append(len(self.head))
        self.head.append(u)
        self.base.append(back)

    def max_flow(self, s: int, t: int, limit: int) -> tuple[int, list[int]]:
        """Augment along shortest paths until ``limit`` units or no path remains.

        Returns the flow value and the final residual capacities.
        """
        cap = self.base.copy()
        head, out = self.head, self.out
        flow = 0
        while flow < limit:
            via = {s: -1}
            queue = deque([s])
            while queue and t not in via:
                u = queue.popleft()
                for e in out[u]:
                    w = head[e]
                    if cap[e] > 0 and w not in via:
                        via[w] = e
                        queue.append(w)
            if t not in via:
                break
            push = limit - flow
            w = t
            while w != s:
                e = via[w]
                push = min(push, cap[e])
                w = head[e ^ 1]
            w = t
            while w != s:
                e = via[w]
                cap[e] -= push
                cap[e ^ 1] += push
                w = head[e ^ 1]
            flow += push
        return flow, cap

    def residual_reach(self, s: int, cap: list[int]) -> set[int]:
        seen = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for e in self.out[u]:
                w = self.head[e]
                if cap[e] > 0 and w not in seen:
                    seen.add(w)
                    queue.append(w)
        return seen


def _split_network(G: Graph) -> _FlowNetwork:
    # vertex v becomes arc 2v -> 2v+1 of capacity 1; a flow from 2s+1 to 2t
    # never uses the arcs of s or t, so they need no special capacity
    net = _FlowNetwork(2 * G.n)
    for v in range(G.n):
        net.add(2 * v, 2 * v + 1, 1)
    for u, v in G.edges():
        net.add(2 * u + 1, 2 * v, G.n)
        net.add(2 * v + 1, 2 * u, G.n)
    return net


def _local_vertex_connectivity(G: Graph, net: _FlowNetwork, s: int, t: int, limit: int) -> tuple[int, frozenset]:
    value, cap = net.max_flow(2 * s + 1, 2 * t, limit)
    if value >= limit:
        return value, frozenset()
    reach = net.residual_reach(2 * s + 1, cap)
    cut = frozenset(v for v in range(G.n) if 2 * v in reach and 2 * v + 1 not in reach)
    return value, cut


def vertex_connectivity(G: Graph) -> ConnectivityCertificate:
    """``kappa(G)``; complete graphs get ``n - 1`` and no separator."""
    n = G.n
    if n == 0:
        raise ValueError("vertex connectivity needs at least one vertex")
    if G.is_complete():
        return ConnectivityCertificate(n - 1, None)
    if not is_connected(G):
        return ConnectivityCertificate(0, frozenset())
    vmin = min(range(n), key=lambda v: (G.degrees[v], v))
    best, sep = G.degrees[vmin], frozenset(bits(G.rows[vmin]))
    net = _split_network(G)
    i = 0
    # some vertex among the first best+1 lies outside any minimum separator
    while i <= best and i < n:
        for j in bits(G.vertex_mask & ~G.rows[i] & ~(1 << i)):
            value, cut = _local_vertex_connectivity(G, net, i, j, best)
            if value < best:
                best, sep = value, cut
        i += 1
    return ConnectivityCertificate(best, sep)


def edge_connectivity(G: Graph) -> ConnectivityCertificate:
    """``lambda(G)`` with a minimum edge cut as ``frozenset`` of ``(u, v)``, ``u < v``."""
    n = G.n
    if n == 0:
        raise ValueError("edge connectivity needs at least one vertex")
    if n == 1:
        return ConnectivityCertificate(0, frozenset())
    if not is_connected(G):
        return ConnectivityCertificate(0, frozenset())
    best = G.min_degree
    vmin = min(range(n), key=lambda v: (G.degrees[v], v))
    cut = frozenset((min(vmin, u), max(vmin, u)) for u in bits(G.rows[vmin]))
    net = _FlowNetwork(n)
    for u, v in G.edges():
        net.add(u, v, 1, 1)
    for t in range(1, n):
        value, cap = net.max_flow(0, t, best)
        if value < best:
            side = net.residual_reach(0, cap)
            best = value
            cut = frozenset((min(u, v), max(u, v)) for u in side for v in bits(G.rows[u]) if v not in side)
    return ConnectivityCertificate(best, cut)


def separates(G: Graph, vertices=(), edges=()) -> bool:
    """Whether deleting the given vertices and edges leaves a disconnected or trivial graph."""
    keep = G.vertex_mask
    for v in vertices:
        keep &= ~(1 << v)
    if keep.bit_count() <= 1:
        return True
    if not edges:
        return not is_connected(G, keep)
    H = G
    for u, v in edges:
        H = H.remove_edge(u, v)
    return not is_connected(H, keep)


def vertex_connectivity_bruteforce(G: Graph) -> int:
    """Smallest number of vertices whose deletion disconnects ``G`` or leaves at most one vertex."""
    n = G.n
    for k in range(n):
        for S in combinations(range(n), k):
            if separates(G, vertices=S):
                return k
    return max(n - 1, 0)


def edge_connectivity_bruteforce(G: Graph) -> int:
    """Minimum number of edges crossing a non-trivial vertex bipartition, by full enumeration."""
    n = G.n
    if n <= 1:
        return 0
    best = None
    # fix vertex n-1 on the outside to visit each bipartition once
    for X in range(1, 1 << (n - 1)):
        crossing = sum((G.rows[v] & ~X).bit_count() for v in bits(X))
        if best is None or crossing < best:
            best = crossing
    return best


# -- distances -------------------------------------------------------------------


def eccentricity(G: Graph, v: int):
    return max(bfs_distances(G, v))


def diameter(G: Graph):
    """Largest distance between two vertices; :data:`INF` if disconnected, 0 for ``n <= 1``."""
    if G.n <= 1:
        return 0
    if not is_connected(G):
        return INF
    return max(eccentricity(G, v) for v in range(G.n))


def girth(G: Graph):
    """Length of a shortest cycle, :data:`INF` for forests."""
    best = INF
    for root in range(G.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in bits(G.rows[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


# -- planarity ---------------------------------------------------------------------


@dataclass(frozen=True)
class PlanarityResult:
    """Planarity verdict; non-planar results carry a Kuratowski subgraph.

    ``kuratowski_edges`` is the edge set of a subdivision of ``K5`` or
    ``K3,3`` (``kind`` says which); planar results carry a rotation system
    in ``embedding`` (vertex -> clockwise neighbour list).
    """

    planar: bool
    kind: str | None = None
    kuratowski_edges: tuple[tuple[int, int], ...] | None = None
    embedding: dict | None = None

    def __bool__(self):
        return self.planar


def is_planar(G: Graph, certificate: bool = True) -> PlanarityResult:
    """Planarity verdict; with ``certificate=False`` only ``planar`` is filled in."""
    import networkx as nx

    if not certificate:
        if G.n >= 3 and G.edge_count > 3 * G.n - 6:
            return PlanarityResult(False)
        return PlanarityResult(nx.check_planarity(G.to_networkx())[0])
    planar, cert = nx.check_planarity(G.to_networkx(), counterexample=True)
    if planar:
        return PlanarityResult(True, embedding={v: list(cert.neighbors_cw_order(v)) for v in cert.nodes})
    edges = tuple(sorted((min(u, v), max(u, v)) for u, v in cert.edges()))
    return PlanarityResult(False, subdivision_kind(G, edges), edges)


def subdivision_kind(G: Graph, edges) -> str | None:
    """``"K5"`` or ``"K3,3"`` if ``edges`` (a subgraph of ``G``) is a subdivision of it, else ``None``."""
    nbrs: dict[int, set[int]] = {}
    for u, v in edges:
        if not G.rows[u] >> v & 1:
            return None
        nbrs.setdefault(u, set()).add(v)
        nbrs.setdefault(v, set()).add(u)
    changed = True
    while changed:
        changed = False
        for v in list(nbrs):
            if len(nbrs[v]) == 2:
                a, b = nbrs[v]
                if b in nbrs[a]:
                    return None
                nbrs[a].discard(v)
                nbrs[b].discard(v)
                nbrs[a].add(b)
                nbrs[b].add(a)
                del nbrs[v]
                changed = True
    verts = list(nbrs)
    if any(len(nbrs[v]) < 3 for v in verts):
        return None
    if len(verts) == 5 and all(len(nbrs[v]) == 4 for v in verts):
        return "K5"
    if len(verts) == 6 and all(len(nbrs[v]) == 3 for v in verts):
        side = {verts[0]} | {w for u in nbrs[verts[0]] for w in nbrs[u]}
        if len(side) == 3 and all(nbrs[u].isdisjoint(side) for u in side):
            return "K3,3"
    return None


def _disjoint_paths(G: Graph, pairs, forbidden: int, free: int):
    """Internally disjoint paths for all ``pairs`` with internal vertices drawn from ``free``."""
    rows = G.rows
    chosen: list[list[int]] = []

    def paths(a: int, b: int, avail: int):
        stack = [(a, [a], 0)]
        while stack:
            end, path, used = stack.pop()
            for w in bits(rows[end]):
                if w == b and len(path) > 1:
                    yield path + [b], used
                elif avail >> w & 1 and not used >> w & 1:
                    stack.append((w, path + [w], used | 1 << w))

    def place(k: int, avail: int) -> bool:
        if k == len(pairs):
            return True
        a, b = pairs[k]
        if rows[a] >> b & 1:
            # a direct edge never blocks another path
            chosen.append([a, b])
            if place(k + 1, avail):
                return True
            chosen.pop()
            return False
        for path, used in paths(a, b, avail):
            chosen.append(path)
            if place(k + 1, avail & ~used):
                return True
            chosen.pop()
        return False

    if place(0, free & ~forbidden):
        return chosen
    return None


def find_kuratowski_subdivision(G: Graph):
    """Brute-force search for a ``K5`` or ``K3,3`` subdivision.

    Returns ``(kind, edges)`` or ``None``.  Exponential; intended for
    cross-checking on graphs of order at most about 12.
    """
    full = G.vertex_mask
    deg = G.degrees
    big4 = [v for v in range(G.n) if deg[v] >= 4]
    for B in combinations(big4, 5):
        bmask = sum(1 << v for v in B)
        found = _disjoint_paths(G, list(combinations(B, 2)), bmask, full)
        if found is not None:
            return "K5", _path_edges(found)
    big3 = [v for v in range(G.n) if deg[v] >= 3]
    for six in combinations(big3, 6):
        bmask = sum(1 << v for v in six)
        first, rest = six[0], six[1:]
        for mates in combinations(rest, 2):
            left = (first,) + mates
            right = tuple(v for v in rest if v not in mates)
            pairs = [(a, b) for a in left for b in right]
            found = _disjoint_paths(G, pairs, bmask, full)
            if found is not None:
                return "K3,3", _path_edges(found)
    return None


def _path_edges(paths) -> tuple[tuple[int, int], ...]:
    return tuple(sorted({(min(p[i], p[i + 1]), max(p[i], p[i + 1])) for p in paths for i in range(len(p) - 1)}))


def is_planar_bruteforce(G: Graph) -> bool:
    return find_kuratowski_subdivision(G) is None


__all__ = [
    "ConnectivityCertificate",
    "PlanarityResult",
    "component_mask",
    "diameter",
    "eccentricity",
    "edge_connectivity",
    "edge_connectivity_bruteforce",
    "find_kuratowski_subdivision",
    "girth",
    "is_planar",
    "is_planar_bruteforce",
    "separates",
    "subdivision_kind",
    "vertex_connectivity",
    "vertex_connectivity_bruteforce",
]
