"""Canonical labelling and enumeration of small graphs up to isomorphism.

The canonical form is found by individualisation-refinement: refine an
ordered vertex partition to an equitable one, branch on each vertex of the
first non-singleton cell, and keep the labelling whose adjacency rows are
lexicographically largest.  Branching skips vertices that are twins of a
vertex already tried (swapping twins is an automorphism fixing the partition).
"""

from __future__ import annotations

from collections.abc import Iterator

from .graph import Graph, bits

CanonicalKey = tuple[int, tuple[int, ...]]


def _refine(rows, cells: list[int]) -> list[int]:
    while True:
        out = []
        for cell in cells:
            if not cell & (cell - 1):
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], int] = {}
            for v in bits(cell):
                sig = tuple((rows[v] & c).bit_count() for c in cells)
                groups[sig] = groups.get(sig, 0) | 1 << v
            out.extend(groups[sig] for sig in sorted(groups))
        if len(out) == len(cells):
            return out
        cells = out


def _twin_representatives(rows, cell: int) -> list[int]:
    reps: list[int] = []
    for v in bits(cell):
        if not any(rows[v] & ~(1 << u) == rows[u] & ~(1 << v) for u in reps):
            reps.append(v)
    return reps


def canonical_labelling(G: Graph) -> tuple[CanonicalKey, list[int]]:
    """Return ``(key, order)``: ``order[i]`` is the vertex given canonical label ``i``.

    Two graphs are isomorphic iff their keys are equal.
    """
    n, rows = G.n, G.rows
    if n == 0:
        return (0, ()), []
    best: list = [None, None]

    def certificate(order: list[int]) -> tuple[int, ...]:
        pos = [0] * n
        for i, v in enumerate(order):
            pos[v] = i
        return tuple(sum(1 << pos[u] for u in bits(rows[v])) for v in order)

    def search(cells: list[int]) -> None:
        cells = _refine(rows, cells)
        for idx, cell in enumerate(cells):
            if cell & (cell - 1):
                break
        else:
            order = [(c & -c).bit_length() - 1 for c in cells]
            cert = certificate(order)
            if best[0] is None or cert > best[0]:
                best[0], best[1] = cert, order
            return
        for v in _twin_representatives(rows, cell):
            search(cells[:idx] + [1 << v, cell & ~(1 << v)] + cells[idx + 1 :])

    search([G.vertex_mask])
    return (n, best[0]), best[1]


def canonical_key(G: Graph) -> CanonicalKey:
    return canonical_labelling(G)[0]


def canonical_graph(G: Graph) -> Graph:
    """The canonical representative of ``G``'s isomorphism class."""
    _, order = canonical_labelling(G)
    perm = [0] * G.n
    for i, v in enumerate(order):
        perm[v] = i
    return G.relabel(perm)


def are_isomorphic(G: Graph, H: Graph) -> bool:
    if G.n != H.n or G.edge_count != H.edge_count or sorted(G.degrees) != sorted(H.degrees):
        return False
    return canonical_key(G) == canonical_key(H)


def _add_vertex(G: Graph, nbrs: int) -> Graph:
    n = G.n
    rows = [r | (nbrs >> v & 1) << n for v, r in enumerate(G.rows)]
    rows.append(nbrs)
    return Graph._from_rows(n + 1, rows)


def iso_classes_by_order(n_max: int) -> Iterator[tuple[int, list[Graph]]]:
    """Yield ``(n, representatives)`` for ``n = 0..n_max``.

    Order ``n`` classes come from adding a vertex, with every possible
    neighbourhood, to each class of order ``n - 1``; every graph arises this
    way because deleting any vertex leaves a graph of order ``n - 1``.
    Representatives are canonical graphs listed in increasing key order.
    """
    level = [Graph(0, [])]
    yield 0, level
    for n in range(1, n_max + 1):
        seen: dict[CanonicalKey, Graph] = {}
        for G in level:
            for nbrs in range(1 << G.n):
                H = _add_vertex(G, nbrs)
                key, order = canonical_labelling(H)
                if key not in seen:
                    perm = [0] * n
                    for i, v in enumerate(order):
                        perm[v] = i
                    seen[key] = H.relabel(perm)
        level = [seen[k] for k in sorted(seen)]
        yield n, level


def iso_classes(n: int) -> list[Graph]:
    for order, reps in iso_classes_by_order(n):
        if order == n:
            return reps
    return []


def labelled_graphs(n: int) -> Iterator[Graph]:
    """All ``2^(n choose 2)`` labelled graphs on ``0..n-1``."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for code in range(1 << len(pairs)):
        rows = [0] * n
        for b in bits(code):
            u, v = pairs[b]
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        yield Graph._from_rows(n, rows)


def iso_classes_labelled(n: int) -> list[Graph]:
    """Isomorphism classes by brute force over every labelled graph; slow beyond ``n = 6``."""
    seen: dict[tuple, dict[CanonicalKey, Graph]] = {}
    for G in labelled_graphs(n):
        bucket = seen.setdefault((G.edge_count, tuple(sorted(G.degrees))), {})
        key = canonical_key(G)
        if key not in bucket:
            bucket[key] = canonical_graph(G)
    reps = [g for bucket in seen.values() for g in bucket.values()]
    return sorted(reps, key=canonical_key)
