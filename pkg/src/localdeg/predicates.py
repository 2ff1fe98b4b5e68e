"""Dirac and Ore conditions with their open and closed local versions.

Nearby local classes (locally connected, claw-free, locally isometric,
locally hamiltonian) and clustering coefficients live here too.

Every half-degree comparison is done as ``2 * deg >= d`` so nothing here
touches floating point.  A vertex of degree 0 satisfies every local
condition; a vertex of degree 1 fails the locally Dirac test because its
single neighbour has local degree ``0 < 1/2``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .graph import Graph, bits, is_connected


@dataclass(frozen=True)
class LocalWitness:
    """First violation found, scanning ``v`` then ``u`` (then ``w``) in increasing order.

    ``local_degrees`` maps each reported neighbour to its degree inside the
    (open or closed) neighbourhood of ``vertex``.
    """

    vertex: int
    neighbours: tuple[int, ...]
    local_degrees: dict[int, int] = field(default_factory=dict)
    closed: bool = False

    def to_dict(self) -> dict:
        return {
            "vertex": self.vertex,
            "neighbours": list(self.neighbours),
            "local_degrees": {str(k): v for k, v in sorted(self.local_degrees.items())},
            "closed": self.closed,
        }


def local_degree(G: Graph, v: int, u: int) -> int:
    """Degree of ``u`` inside ``<N(v)>``."""
    return (G.rows[u] & G.rows[v]).bit_count()


# -- global conditions --------------------------------------------------------


def satisfies_dirac(G: Graph) -> bool:
    return G.n >= 3 and 2 * G.min_degree >= G.n


def satisfies_ore(G: Graph) -> bool:
    if G.n < 3:
        return False
    deg = G.degrees
    for u in range(G.n):
        for w in bits(G.vertex_mask & ~G.rows[u] & ~((1 << (u + 1)) - 1)):
            if deg[u] + deg[w] < G.n:
                return False
    return True


# -- local degree conditions -----------------------------------------------------


def locally_dirac_violation(G: Graph, require_order3: bool = False) -> LocalWitness | None:
    """First ``(v, u)`` with ``u in N(v)`` and ``2 * deg_<N(v)>(u) < deg(v)``.

    With ``require_order3`` a vertex of degree 1 or 2 is also a violation,
    since Dirac's condition is only stated for graphs of order at least 3.
    """
    for v in range(G.n):
        d = G.degrees[v]
        if d == 0:
            continue
        if require_order3 and d < 3:
            return LocalWitness(v, (), {})
        nv = G.rows[v]
        for u in bits(nv):
            ld = (G.rows[u] & nv).bit_count()
            if 2 * ld < d:
                return LocalWitness(v, (u,), {u: ld})
    return None


def is_locally_dirac(G: Graph, require_order3: bool = False) -> bool:
    return locally_dirac_violation(G, require_order3) is None


def locally_ore_violation(G: Graph) -> LocalWitness | None:
    """First ``(v, u, w)`` with ``u, w`` non-adjacent in ``N(v)`` and local degree sum below ``deg(v)``."""
    for v in range(G.n):
        d = G.degrees[v]
        nv = G.rows[v]
        ld = {u: (G.rows[u] & nv).bit_count() for u in bits(nv)}
        for u in bits(nv):
            for w in bits(nv & ~G.rows[u] & ~((1 << (u + 1)) - 1)):
                if ld[u] + ld[w] < d:
                    return LocalWitness(v, (u, w), {u: ld[u], w: ld[w]})
    return None


def is_locally_ore(G: Graph) -> bool:
    return locally_ore_violation(G) is None


def closed_locally_ore_violation(G: Graph) -> LocalWitness | None:
    """Ore's condition inside every ``<N[v]>``, reported with closed-neighbourhood degrees."""
    for v in range(G.n):
        closed = G.rows[v] | 1 << v
        size = closed.bit_count()
        cd = {u: (G.rows[u] & closed).bit_count() for u in bits(closed)}
        for u in bits(closed):
            for w in bits(closed & ~G.rows[u] & ~((1 << (u + 1)) - 1)):
                if cd[u] + cd[w] < size:
                    return LocalWitness(v, (u, w), {u: cd[u], w: cd[w]}, closed=True)
    return None


def is_closed_locally_ore(G: Graph) -> bool:
    return closed_locally_ore_violation(G) is None


def is_closed_locally_dirac(G: Graph) -> bool:
    """Every ``<N[v]>`` satisfies Dirac's condition (order >= 3 and ``2 * delta >= order``)."""
    for v in range(G.n):
        closed = G.rows[v] | 1 << v
        size = closed.bit_count()
        if size < 3:
            return False
        for u in bits(closed):
            if 2 * (G.rows[u] & closed).bit_count() < size:
                return False
    return True


# -- other local classes ---------------------------------------------------------


def is_locally_connected(G: Graph) -> bool:
    return all(is_connected(G, G.rows[v]) for v in range(G.n) if G.rows[v])


def is_claw_free(G: Graph) -> bool:
    for v in range(G.n):
        nv = G.rows[v]
        for a in bits(nv):
            rest = nv & ~G.rows[a] & ~((1 << (a + 1)) - 1)
            for b in bits(rest):
                if rest & ~G.rows[b] & ~((1 << (b + 1)) - 1):
                    return False
    return True


def is_locally_isometric(G: Graph) -> bool:
    # Two neighbours of v are at G-distance 1 or 2, so <N(v)> is isometric
    # exactly when every non-adjacent pair in N(v) has a common neighbour in N(v).
    for v in range(G.n):
        nv = G.rows[v]
        for u in bits(nv):
            for w in bits(nv & ~G.rows[u] & ~((1 << (u + 1)) - 1)):
                if not G.rows[u] & G.rows[w] & nv:
                    return False
    return True


def is_locally_hamiltonian(G: Graph, budget: int | None = None) -> bool:
    from .cycles import hamilton_cycle_in_mask

    return all(
        hamilton_cycle_in_mask(G, G.rows[v], budget=budget) is not None for v in range(G.n) if G.rows[v]
    )


def clustering_coefficient(G: Graph, v: int) -> Fraction:
    """Fraction of neighbour pairs of ``v`` that are adjacent; needs ``deg(v) >= 2``."""
    d = G.degree(v)
    if d < 2:
        raise ValueError(f"clustering coefficient undefined at vertex {v} of degree {d}")
    nv = G.rows[v]
    inside = sum((G.rows[u] & nv).bit_count() for u in bits(nv)) // 2
    return Fraction(inside, d * (d - 1) // 2)


def min_clustering_coefficient(G: Graph) -> Fraction:
    if G.n == 0 or G.min_degree < 2:
        raise ValueError("minimum clustering coefficient needs minimum degree at least 2")
    return min(clustering_coefficient(G, v) for v in range(G.n))
