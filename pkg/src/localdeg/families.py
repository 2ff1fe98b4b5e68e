"""Parametric graph families with fixed vertex labellings.

Labelling conventions:

* ``P_m x K_3`` and ``C_m x K_3``: layer ``i``, position ``a`` is ``3i + a``.
* ``P_m x K_2``: ``(i, a)`` is ``2i + a``.
* ``G + K_n``: ``G`` keeps ``0..n-1``; the clique is ``n..2n-1``.
* ``G_k``: the first ``K_{k^2+2}`` is ``0..k^2+1`` with bridge ends ``0..k-1``;
  the second starts at ``k^2+2`` with bridge ends ``k^2+2 .. k^2+k+1``.
* Pendant additions (single vertices, ``K_2``'s) are appended after the base
  product in the order they are described in each docstring.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations

from .graph import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    from_edge_list,
    graph_power,
    is_connected,
    join,
    path_graph,
    strong_product,
)


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def path_strong_k3(m: int) -> Graph:
    _need(m >= 2, f"path_strong_k3 needs m >= 2, got {m}")
    return strong_product(path_graph(m), complete_graph(3))


def cycle_strong_k3(m: int) -> Graph:
    _need(m >= 3, f"cycle_strong_k3 needs m >= 3, got {m}")
    return strong_product(cycle_graph(m), complete_graph(3))


def path_strong_k2(m: int) -> Graph:
    _need(m >= 3, f"path_strong_k2 needs m >= 3, got {m}")
    return strong_product(path_graph(m), complete_graph(2))


def join_with_clique(G: Graph) -> Graph:
    """``G + K_n`` for a connected ``G`` of order ``n >= 3``."""
    _need(G.n >= 3, f"join_with_clique needs order >= 3, got {G.n}")
    _need(is_connected(G), "join_with_clique needs a connected graph")
    return join(G, complete_graph(G.n))


def lambda_gap_family(k: int) -> Graph:
    """Two copies of ``K_{k^2+2}`` with a complete bipartite join between ``k`` vertices of each."""
    _need(k >= 3, f"lambda_gap_family needs k >= 3, got {k}")
    size = k * k + 2
    edges = [(u, v) for u, v in combinations(range(size), 2)]
    edges += [(size + u, size + v) for u, v in combinations(range(size), 2)]
    edges += [(a, size + b) for a in range(k) for b in range(k)]
    return from_edge_list(2 * size, edges)


def _attach(G: Graph, groups: list[tuple[int, list[int]]]) -> Graph:
    """Append cliques of the given sizes, each joined to the listed base vertices."""
    n = G.n
    edges = list(G.edges())
    for size, targets in groups:
        new = list(range(n, n + size))
        edges += [(a, b) for a, b in combinations(new, 2)]
        edges += [(t, a) for a in new for t in targets]
        n += size
    return from_edge_list(n, edges)


def ore_min_degree3(m: int) -> Graph:
    """``P_m x K_3`` plus vertex ``3m`` joined to the first layer ``{0, 1, 2}``."""
    _need(m >= 3, f"ore_min_degree3 needs m >= 3, got {m}")
    return _attach(path_strong_k3(m), [(1, [0, 1, 2])])


def ore_diameter_extremal(n: int) -> Graph:
    """Locally Ore graph of order ``n`` and diameter ``floor((n + 1) / 3)``.

    With ``k = n // 3`` and ``S1``, ``S2`` the first and last layers of the base:

    * ``n = 3k``: ``P_{k-1} x K_3``, one vertex on ``S1``, a ``K_2`` on ``S2``;
    * ``n = 3k + 1``: ``P_{k-1} x K_3``, a ``K_2`` on each of ``S1`` and ``S2``;
    * ``n = 3k + 2``: ``P_k x K_3``, one vertex on each of ``S1`` and ``S2``.
    """
    _need(n >= 9, f"ore_diameter_extremal needs n >= 9, got {n}")
    k, r = divmod(n, 3)
    layers = k if r == 2 else k - 1
    base = path_strong_k3(layers)
    s1, s2 = [0, 1, 2], [base.n - 3, base.n - 2, base.n - 1]
    sizes = {0: (1, 2), 1: (2, 2), 2: (1, 1)}[r]
    return _attach(base, [(sizes[0], s1), (sizes[1], s2)])


def balanced_complete_bipartite(half: int) -> Graph:
    _need(half >= 2, f"balanced_complete_bipartite needs half >= 2, got {half}")
    return complete_bipartite(half, half)


def complete_multipartite(k: int, p: int) -> Graph:
    """``k`` parts of size ``p``; part ``i`` is ``i*p .. i*p + p - 1``."""
    _need(k >= 3, f"complete_multipartite needs k >= 3 parts, got {k}")
    _need(p >= 1, f"complete_multipartite needs part size >= 1, got {p}")
    n = k * p
    return from_edge_list(n, [(u, v) for u, v in combinations(range(n), 2) if u // p != v // p])


def cycle_power_3k(k: int) -> Graph:
    """``C_{3k}`` raised to the ``k``-th power."""
    _need(k >= 1, f"cycle_power_3k needs k >= 1, got {k}")
    return graph_power(cycle_graph(3 * k), k)


# -- FamilySpec ------------------------------------------------------------------


def _join_clique_builder(path: int | None = None, cycle: int | None = None) -> Graph:
    if (path is None) == (cycle is None):
        raise ValueError("join-with-clique takes exactly one of path=<n> or cycle=<n>")
    base = path_graph(path) if path is not None else cycle_graph(cycle)
    return join_with_clique(base)


# id -> (builder, parameter names in canonical order)
FAMILIES: dict[str, tuple] = {
    "path-strong-k3": (path_strong_k3, ("m",)),
    "cycle-strong-k3": (cycle_strong_k3, ("m",)),
    "path-strong-k2": (path_strong_k2, ("m",)),
    "join-with-clique": (_join_clique_builder, ("path", "cycle")),
    "lambda-gap": (lambda_gap_family, ("k",)),
    "ore-min-degree3": (ore_min_degree3, ("m",)),
    "ore-diameter-extremal": (ore_diameter_extremal, ("n",)),
    "complete-bipartite": (balanced_complete_bipartite, ("half",)),
    "complete-multipartite": (complete_multipartite, ("k", "p")),
    "cycle-power": (cycle_power_3k, ("k",)),
}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; known: {', '.join(FAMILIES)}")
        allowed = FAMILIES[self.family][1]
        for key in self.params:
            if key not in allowed:
                raise ValueError(f"family {self.family} has no parameter {key!r}; expected {allowed}")

    def __hash__(self):
        return hash((self.family, tuple(sorted(self.params.items()))))

    def __str__(self):
        order = FAMILIES[self.family][1]
        keys = sorted(self.params, key=order.index)
        return " ".join([self.family] + [f"{k}={self.params[k]}" for k in keys])

    def build(self) -> Graph:
        return FAMILIES[self.family][0](**self.params)


_PARAM = re.compile(r"([a-z]+)=(-?[0-9]+)\Z")


def parse_family_spec(text: str) -> FamilySpec:
    """Parse ``"<family-id> key=value [key=value ...]"``."""
    parts = text.split()
    if not parts:
        raise ValueError("empty family spec")
    params: dict[str, int] = {}
    for token in parts[1:]:
        match = _PARAM.match(token)
        if not match:
            raise ValueError(f"bad parameter {token!r}; expected key=integer")
        key, value = match.group(1), int(match.group(2))
        if key in params:
            raise ValueError(f"parameter {key!r} given twice")
        params[key] = value
    return FamilySpec(parts[0], params)


def default_catalog() -> list[FamilySpec]:
    """The default parameter grids, in a fixed order."""
    specs: list[FamilySpec] = []
    specs += [FamilySpec("path-strong-k3", {"m": m}) for m in range(3, 11)]
    specs += [FamilySpec("cycle-strong-k3", {"m": m}) for m in range(3, 11)]
    specs += [FamilySpec("path-strong-k2", {"m": m}) for m in range(3, 11)]
    specs += [FamilySpec("join-with-clique", {"path": n}) for n in range(3, 7)]
    specs += [FamilySpec("join-with-clique", {"cycle": n}) for n in range(3, 7)]
    specs += [FamilySpec("lambda-gap", {"k": k}) for k in (3, 4)]
    specs += [FamilySpec("ore-min-degree3", {"m": m}) for m in range(3, 11)]
    specs += [FamilySpec("ore-diameter-extremal", {"n": n}) for n in range(9, 25)]
    specs += [FamilySpec("complete-bipartite", {"half": h}) for h in range(2, 6)]
    specs += [FamilySpec("complete-multipartite", {"k": k, "p": p}) for k in (3, 4) for p in (1, 2, 3)]
    specs += [FamilySpec("cycle-power", {"k": k}) for k in range(1, 5)]
    return specs
