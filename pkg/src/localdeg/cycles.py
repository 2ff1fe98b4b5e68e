"""Cycles, Hamiltonicity, cycle spectra and cycle extendability.

Two exhaustive engines live here:

* pruned backtracking (:func:`hamilton_cycle_in_mask`) for single
  Hamiltonicity questions on an induced subgraph, and
* a subset dynamic programme (:func:`hamiltonian_subsets`) that decides,
  for every vertex subset ``S`` at once, whether ``<S>`` is Hamiltonian.

Whether a cycle ``C`` extends depends only on ``V(C)``: it extends iff
``<V(C) + x>`` is Hamiltonian for some off-cycle ``x``.  The subset table
therefore settles extendability of every cycle of a graph without listing
the cycles one by one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, bits, is_connected, mask_of

DEFAULT_SEARCH_BUDGET = 5_000_000
DEFAULT_MAX_CYCLES = 10_000_000
SUBSET_DP_MAX_ORDER = 20
# above this order the spectrum uses per-length search, which wins on dense graphs
SPECTRUM_DP_MAX_ORDER = 14


class BudgetExceeded(RuntimeError):
    """A search hit its node or cycle cap before reaching a verdict."""

    def __init__(self, message: str, progress: int | None = None):
        super().__init__(message)
        self.progress = progress


class HamiltonianCycleError(ValueError):
    """Raised when an extension is requested for a cycle that already spans the graph."""


def canonical_sequence(seq) -> tuple[int, ...]:
    """Rotation and reflection of ``seq`` that is lexicographically smallest."""
    t = len(seq)
    i = min(range(t), key=seq.__getitem__)
    fwd = tuple(seq[(i + k) % t] for k in range(t))
    bwd = tuple(seq[(i - k) % t] for k in range(t))
    return min(fwd, bwd)


@dataclass(frozen=True)
class Cycle:
    """A cycle ``v_0 v_1 ... v_{t-1} v_0`` stored in canonical orientation."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def mask(self) -> int:
        return mask_of(self.vertices)

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __getitem__(self, i):
        return self.vertices[i % len(self.vertices)]


def validate_cycle(G: Graph, seq) -> Cycle:
    """Check ``seq`` is a cycle of ``G`` and return it canonicalised."""
    seq = list(seq)
    t = len(seq)
    if t < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {t}")
    if len(set(seq)) != t:
        raise ValueError(f"repeated vertex in {seq}")
    for v in seq:
        G._check(v)
    for k in range(t):
        a, b = seq[k], seq[(k + 1) % t]
        if not G.rows[a] >> b & 1:
            raise ValueError(f"consecutive vertices {a} and {b} are not adjacent")
    return Cycle(canonical_sequence(seq))


def is_cycle_of(G: Graph, seq) -> bool:
    try:
        validate_cycle(G, seq)
    except (ValueError, IndexError):
        return False
    return True


# -- Hamiltonicity by backtracking ------------------------------------------------


def hamilton_cycle_in_mask(G: Graph, mask: int, budget: int | None = None) -> list[int] | None:
    """A Hamilton cycle of the subgraph induced by ``mask``, or ``None``.

    Depth-first path growth from a minimum-degree vertex, extending first to
    the neighbour with the fewest onward options.  Branches are cut when an
    unvisited vertex has fewer than two usable neighbours, when the start
    vertex loses all unvisited neighbours, or when the unvisited part plus the
    path end is disconnected.
    """
    rows = G.rows
    if mask.bit_count() < 3:
        return None
    for v in bits(mask):
        if (rows[v] & mask).bit_count() < 2:
            return None
    if not is_connected(G, mask):
        return None
    limit = DEFAULT_SEARCH_BUDGET if budget is None else budget
    start = min(bits(mask), key=lambda v: ((rows[v] & mask).bit_count(), v))
    sbit = 1 << start
    path = [start]
    nodes = 0

    def grow(end: int, visited: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > limit:
            raise BudgetExceeded(f"Hamilton search exceeded {limit} nodes", nodes)
        remaining = mask & ~visited
        if not remaining:
            return bool(rows[end] & sbit)
        if not rows[start] & remaining:
            return False
        usable = remaining | 1 << end | sbit
        for w in bits(remaining):
            if (rows[w] & usable).bit_count() < 2:
                return False
        if not is_connected(G, remaining | 1 << end):
            return False
        options = sorted(bits(rows[end] & remaining), key=lambda w: ((rows[w] & remaining).bit_count(), w))
        for w in options:
            path.append(w)
            if grow(w, visited | 1 << w):
                return True
            path.pop()
        return False

    if grow(start, sbit):
        return path
    return None


def hamilton_cycle(G: Graph, budget: int | None = None) -> Cycle | None:
    seq = hamilton_cycle_in_mask(G, G.vertex_mask, budget)
    return None if seq is None else Cycle(canonical_sequence(seq))


def is_hamiltonian(G: Graph, budget: int | None = None) -> bool:
    return hamilton_cycle_in_mask(G, G.vertex_mask, budget) is not None


# -- subset dynamic programme ------------------------------------------------------


class HamiltonianSubsets:
    """For every vertex subset ``S``, whether ``<S>`` has a Hamilton cycle.

    ``reach[S]`` is the bitmask of vertices ``v`` such that ``<S>`` has a
    Hamilton path from ``min(S)`` to ``v``.  Built once in ``O(2^n * n)``.
    """

    def __init__(self, G: Graph, max_order: int = SUBSET_DP_MAX_ORDER):
        if G.n > max_order:
            raise BudgetExceeded(f"subset table limited to order {max_order}, graph has {G.n}")
        self.G = G
        n, rows = G.n, G.rows
        full = (1 << n) - 1
        reach = [0] * (1 << n)
        for v in range(n):
            reach[1 << v] = 1 << v
        for S in range(1, 1 << n):
            r = reach[S]
            if not r:
                continue
            low = S & -S
            nb = 0
            for u in bits(r):
                nb |= rows[u]
            for v in bits(nb & full & ~S & ~(2 * low - 1)):
                reach[S | 1 << v] |= 1 << v
        self.reach = reach

    def is_hamiltonian(self, S: int) -> bool:
        if S.bit_count() < 3:
            return False
        low = (S & -S).bit_length() - 1
        return bool(self.reach[S] & self.G.rows[low])

    def hamiltonian_masks(self):
        for S in range(1 << self.G.n):
            if self.reach[S] and self.is_hamiltonian(S):
                yield S

    def cycle(self, S: int) -> Cycle:
        """Reconstruct one Hamilton cycle of ``<S>``."""
        if not self.is_hamiltonian(S):
            raise ValueError("subset does not span a cycle")
        rows = self.G.rows
        m = (S & -S).bit_length() - 1
        cur = (self.reach[S] & rows[m] & -(self.reach[S] & rows[m])).bit_length() - 1
        seq = [cur]
        T = S
        while T != 1 << m:
            T &= ~(1 << cur)
            prev_options = self.reach[T] & rows[cur]
            cur = (prev_options & -prev_options).bit_length() - 1
            seq.append(cur)
        return Cycle(canonical_sequence(seq[::-1]))


def hamiltonian_subsets(G: Graph, max_order: int = SUBSET_DP_MAX_ORDER) -> HamiltonianSubsets:
    return HamiltonianSubsets(G, max_order)


# -- enumeration ------------------------------------------------------------------


def enumerate_cycles(G: Graph, max_cycles: int = DEFAULT_MAX_CYCLES):
    """Yield every cycle exactly once, as canonical vertex tuples.

    Each cycle is grown from its smallest vertex ``r`` through larger vertices
    only, and kept in the orientation whose second vertex is smaller than its
    last.  Raises :class:`BudgetExceeded` after ``max_cycles`` cycles.
    """
    rows = G.rows
    count = 0
    for r in range(G.n):
        allowed = G.vertex_mask & ~((1 << (r + 1)) - 1)
        rbit_nbrs = rows[r]
        path = [r]

        def walk(end, visited):
            nonlocal count
            for w in bits(rows[end] & allowed & ~visited):
                path.append(w)
                if len(path) >= 3 and rbit_nbrs >> w & 1 and path[1] < w:
                    count += 1
                    if count > max_cycles:
                        raise BudgetExceeded(f"more than {max_cycles} cycles", count)
                    yield tuple(path)
                yield from walk(w, visited | 1 << w)
                path.pop()

        yield from walk(r, 1 << r)


def count_cycles(G: Graph, max_cycles: int = DEFAULT_MAX_CYCLES) -> int:
    return sum(1 for _ in enumerate_cycles(G, max_cycles))


def _has_cycle_of_length(G: Graph, length: int, budget: int) -> bool:
    rows = G.rows
    nodes = 0
    for r in range(G.n):
        allowed = G.vertex_mask & ~((1 << (r + 1)) - 1)
        stack = [(r, 1 << r, 1)]
        while stack:
            end, visited, size = stack.pop()
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(f"cycle search for length {length} exceeded {budget} nodes", nodes)
            if size == length:
                if rows[end] >> r & 1:
                    return True
                continue
            for w in bits(rows[end] & allowed & ~visited):
                stack.append((w, visited | 1 << w, size + 1))
    return False


def _is_bipartite(G: Graph) -> bool:
    colour = [-1] * G.n
    for s in range(G.n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in bits(G.rows[u]):
                if colour[w] < 0:
                    colour[w] = 1 - colour[u]
                    stack.append(w)
                elif colour[w] == colour[u]:
                    return False
    return True


def cycle_length_spectrum(G: Graph, budget: int | None = None) -> set[int]:
    """The set of lengths of cycles of ``G``."""
    if G.n <= SPECTRUM_DP_MAX_ORDER:
        table = hamiltonian_subsets(G)
        return {S.bit_count() for S in table.hamiltonian_masks()}
    limit = DEFAULT_SEARCH_BUDGET if budget is None else budget
    bipartite = _is_bipartite(G)
    out = set()
    for length in range(3, G.n + 1):
        if bipartite and length % 2:
            continue
        if length == G.n:
            found = is_hamiltonian(G, limit)
        else:
            found = _has_cycle_of_length(G, length, limit)
        if found:
            out.add(length)
    return out


def circumference(G: Graph) -> int:
    spectrum = cycle_length_spectrum(G)
    return max(spectrum) if spectrum else 0


def is_pancyclic(G: Graph) -> bool:
    return G.n >= 3 and cycle_length_spectrum(G) == set(range(3, G.n + 1))


def is_weakly_pancyclic(G: Graph) -> bool:
    """Cycles of every length from the girth to the circumference; acyclic graphs qualify."""
    spectrum = cycle_length_spectrum(G)
    if not spectrum:
        return True
    return spectrum == set(range(min(spectrum), max(spectrum) + 1))


# -- extension -----------------------------------------------------------------------


def _require_short(G: Graph, C: Cycle) -> None:
    if C.length >= G.n:
        raise HamiltonianCycleError("cycle is Hamiltonian; extension is undefined")


def find_extension_exhaustive(G: Graph, C: Cycle, budget: int | None = None) -> Cycle | None:
    """A cycle on ``V(C) + x`` for the first off-cycle ``x`` admitting one."""
    _require_short(G, C)
    cmask = C.mask
    for x in bits(G.vertex_mask & ~cmask):
        if (G.rows[x] & cmask).bit_count() < 2:
            continue
        seq = hamilton_cycle_in_mask(G, cmask | 1 << x, budget)
        if seq is not None:
            return Cycle(canonical_sequence(seq))
    return None


def find_12_extension(G: Graph, C: Cycle, budget: int | None = None) -> Cycle | None:
    """A cycle through ``V(C)`` plus exactly one, else exactly two, new vertices."""
    _require_short(G, C)
    found = find_extension_exhaustive(G, C, budget)
    if found is not None:
        return found
    cmask = C.mask
    off = list(bits(G.vertex_mask & ~cmask))
    for a, x in enumerate(off):
        for y in off[a + 1 :]:
            target = cmask | 1 << x | 1 << y
            # each new vertex needs two neighbours inside the target set
            if (G.rows[x] & target).bit_count() < 2 or (G.rows[y] & target).bit_count() < 2:
                continue
            seq = hamilton_cycle_in_mask(G, target, budget)
            if seq is not None:
                return Cycle(canonical_sequence(seq))
    return None


def non_extendable_cycle(
    G: Graph,
    method: str = "subsets",
    max_cycles: int = DEFAULT_MAX_CYCLES,
    budget: int | None = None,
) -> Cycle | None:
    """A non-Hamiltonian cycle that does not extend, or ``None`` if every one does.

    ``method="subsets"`` decides all cycles through the subset table;
    ``method="enumerate"`` lists cycles explicitly and runs the exhaustive
    extension search on each.
    """
    full = G.vertex_mask
    if method == "subsets":
        table = hamiltonian_subsets(G)
        for S in table.hamiltonian_masks():
            if S == full:
                continue
            if not any(table.is_hamiltonian(S | 1 << x) for x in bits(full & ~S)):
                return table.cycle(S)
        return None
    if method == "enumerate":
        for seq in enumerate_cycles(G, max_cycles):
            if len(seq) == G.n:
                continue
            C = Cycle(canonical_sequence(seq))
            if find_extension_exhaustive(G, C, budget) is None:
                return C
        return None
    raise ValueError(f"unknown method {method!r}")


def is_cycle_extendable_graph(G: Graph, method: str = "subsets", max_cycles: int = DEFAULT_MAX_CYCLES) -> bool:
    return non_extendable_cycle(G, method, max_cycles) is None


def every_vertex_on_triangle(G: Graph) -> bool:
    return all(any(G.rows[u] & G.rows[v] for u in bits(G.rows[v])) for v in range(G.n))


def is_fully_cycle_extendable(G: Graph, method: str = "subsets", max_cycles: int = DEFAULT_MAX_CYCLES) -> bool:
    return every_vertex_on_triangle(G) and is_cycle_extendable_graph(G, method, max_cycles)


def non_12_extendable_cycle(G: Graph) -> Cycle | None:
    """A non-Hamiltonian cycle with no cycle 1 or 2 longer through its vertices."""
    table = hamiltonian_subsets(G)
    full = G.vertex_mask
    for S in table.hamiltonian_masks():
        if S == full:
            continue
        off = list(bits(full & ~S))
        if any(table.is_hamiltonian(S | 1 << x) for x in off):
            continue
        if any(
            table.is_hamiltonian(S | 1 << x | 1 << y) for a, x in enumerate(off) for y in off[a + 1 :]
        ):
            continue
        return table.cycle(S)
    return None


def is_12_extendable_graph(G: Graph) -> bool:
    return non_12_extendable_cycle(G) is None
