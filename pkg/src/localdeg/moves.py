"""Constructive cycle-extension moves and the audits built on them.

Every move is a fixed rerouting template: given a cycle
``C = v_0 ... v_{t-1}``, an off-cycle vertex ``x`` and a few chords, it
writes down a closed walk through ``V(C) + x``.  The walk is always
re-validated before being returned, so a degenerate choice of indices
simply fails to produce a move instead of producing a bad cycle.

Index arithmetic is modulo ``t``.  ``fwd(a, b)`` is the arc
``v_a v_{a+1} ... v_b`` and ``bwd(a, b)`` the arc ``v_a v_{a-1} ... v_b``.
"""

from __future__ import annotations

import json
from collections.abc import Callable, Iterator
from dataclasses import dataclass, field

from .cycles import (
    Cycle,
    HamiltonianCycleError,
    canonical_sequence,
    find_12_extension,
    find_extension_exhaustive,
    hamiltonian_subsets,
    enumerate_cycles,
    DEFAULT_MAX_CYCLES,
)
from .graph import Graph, bits, is_connected
from .predicates import is_locally_dirac

MOVE_KINDS = (
    "Insert",
    "ChordSwapForward",
    "TriangleBypass",
    "NeighbourPairHop",
    "L32-4a",
    "L32-4b",
    "L32-5i",
    "L32-5ii",
    "L32-6i",
    "L32-6ii",
    "L32-6iii",
    "L32-6iv",
    "Exhaustive",
    "Exhaustive2",
)


@dataclass(frozen=True)
class ExtensionMove:
    kind: str
    x: int | None
    indices: tuple[int, ...] = ()
    mirrored: bool = False
    extra: tuple[int, ...] = ()

    def to_record(self, cycle_after: Cycle) -> dict:
        return {
            "move": self.kind,
            "x": self.x,
            "indices": list(self.indices),
            "cycle_after": list(cycle_after.vertices),
        }


def trace_to_jsonl(trace: list[tuple[ExtensionMove, Cycle]]) -> str:
    return "".join(json.dumps(m.to_record(c), separators=(",", ":")) + "\n" for m, c in trace)


class _Arcs:
    """Cycle positions with modular arcs and adjacency lookups."""

    def __init__(self, G: Graph, seq):
        self.rows = G.rows
        self.seq = list(seq)
        self.t = len(self.seq)

    def v(self, i: int) -> int:
        return self.seq[i % self.t]

    def adj(self, i: int, j: int) -> bool:
        return bool(self.rows[self.v(i)] >> self.v(j) & 1)

    def fwd(self, a: int, b: int) -> list[int]:
        t = self.t
        return [self.seq[(a + k) % t] for k in range((b - a) % t + 1)]

    def bwd(self, a: int, b: int) -> list[int]:
        t = self.t
        return [self.seq[(a - k) % t] for k in range((a - b) % t + 1)]


# Each template takes (arcs, x, A) where A is the sorted list of positions
# adjacent to x, and yields (indices, closed walk) candidates in
# lexicographic order of the indices.
Template = Callable[[_Arcs, int, list], Iterator[tuple[tuple[int, ...], list[int]]]]


def _insert(c: _Arcs, x: int, A: list):
    aset = set(A)
    for i in A:
        if (i + 1) % c.t in aset:
            yield (i,), [c.v(i), x] + c.fwd(i + 1, i)


def _chord_swap(c: _Arcs, x: int, A: list):
    for i in A:
        for j in A:
            if i != j and c.adj(i + 1, j + 1):
                yield (i, j), [c.v(i + 1)] + c.fwd(j + 1, i) + [x] + c.bwd(j, i + 1)


def _triangle_bypass(c: _Arcs, x: int, A: list):
    for i in A:
        if not c.adj(i - 1, i + 1):
            continue
        for j in A:
            if i != j and c.adj(j - 1, i):
                yield (i, j), [c.v(j - 1), c.v(i), x] + c.fwd(j, i - 1) + c.fwd(i + 1, j - 1)


def _neighbour_pair_hop(c: _Arcs, x: int, A: list):
    aset = set(A)
    t = c.t
    for i in A:
        if (i + 2) % t not in aset:
            continue
        # k and k+1 both on the arc v_{i+2} ... v_i
        for off in range(2, t):
            k = (i + off) % t
            if c.adj(i + 1, k) and c.adj(i + 1, k + 1):
                yield (i, k), [c.v(k), c.v(i + 1)] + c.fwd(k + 1, i) + [x] + c.fwd(i + 2, k)


def _l32_4(c: _Arcs, x: int, A: list):
    aset = set(A)
    t = c.t
    for i in A:
        if (i + 2) % t not in aset:
            continue
        # v_j on the arc v_{i+3} ... v_{i-2}
        for off in range(3, t - 1):
            j = (i + off) % t
            if c.adj(j, i + 1) and c.adj(j, i - 1) and c.adj(j - 1, j + 1):
                yield (i, j), (
                    [c.v(j - 1)] + c.fwd(j + 1, i - 1) + [c.v(j), c.v(i + 1), c.v(i), x] + c.fwd(i + 2, j - 1)
                )


def _l32_5(c: _Arcs, x: int, A: list, forward_pair: bool):
    t = c.t
    for i in A:
        for j in A:
            if i == j or (i < j) != forward_pair:
                continue
            # consecutive v_{l-1}, v_l on the arc v_j ... v_i
            for off in range(1, (i - j) % t + 1):
                l = (j + off) % t
                if c.adj(i + 1, l) and c.adj(j - 1, l - 1):
                    yield (i, j, l, 0), [c.v(i), x] + c.fwd(j, l - 1) + c.bwd(j - 1, i + 1) + c.fwd(l, i)
                if c.adj(i + 1, l - 1) and c.adj(j - 1, l):
                    yield (i, j, l, 1), [c.v(i), x] + c.fwd(j, l - 1) + c.fwd(i + 1, j - 1) + c.fwd(l, i)


def _triples(c: _Arcs):
    t = c.t
    for i in range(t):
        for a in range(1, t):
            for b in range(a + 1, t):
                yield i, (i + a) % t, (i + b) % t


def _l32_6(c: _Arcs, x: int, A: list, variant: str):
    aset = set(A)
    for i, j, k in _triples(c):
        if variant == "i":
            if i in aset and j in aset and c.adj(k - 1, i + 1) and c.adj(j + 1, i - 1) and c.adj(i, k):
                yield (i, j, k), [c.v(i), x] + c.bwd(j, i + 1) + c.bwd(k - 1, j + 1) + c.bwd(i - 1, k) + [c.v(i)]
        elif variant == "ii":
            if i in aset and k in aset and c.adj(k - 1, i + 1) and c.adj(j + 1, i - 1) and c.adj(i, j):
                yield (i, j, k), [c.v(i), x] + c.fwd(k, i - 1) + c.fwd(j + 1, k - 1) + c.fwd(i + 1, j) + [c.v(i)]
        elif variant == "iii":
            if i in aset and j in aset and c.adj(k + 1, j - 1) and c.adj(j + 1, i - 1) and c.adj(j, k):
                yield (i, j, k), [c.v(j), x] + c.fwd(i, j - 1) + c.fwd(k + 1, i - 1) + c.fwd(j + 1, k) + [c.v(j)]
        else:
            if i in aset and k in aset and c.adj(i + 1, k - 1) and c.adj(j - 1, k + 1) and c.adj(j, k):
                yield (i, j, k), [c.v(k), x] + c.bwd(i, k + 1) + c.bwd(j - 1, i + 1) + c.bwd(k - 1, j) + [c.v(k)]


# (kind, template, orientations scanned: False = as given, True = reversed)
CATALOG: list[tuple[str, Template, tuple[bool, ...]]] = [
    ("Insert", _insert, (False,)),
    ("ChordSwapForward", _chord_swap, (False, True)),
    ("TriangleBypass", _triangle_bypass, (False, True)),
    ("NeighbourPairHop", _neighbour_pair_hop, (False,)),
    ("L32-4a", _l32_4, (False,)),
    ("L32-4b", _l32_4, (True,)),
    ("L32-5i", lambda c, x, A: _l32_5(c, x, A, True), (False,)),
    ("L32-5ii", lambda c, x, A: _l32_5(c, x, A, False), (False,)),
    ("L32-6i", lambda c, x, A: _l32_6(c, x, A, "i"), (False,)),
    ("L32-6ii", lambda c, x, A: _l32_6(c, x, A, "ii"), (False,)),
    ("L32-6iii", lambda c, x, A: _l32_6(c, x, A, "iii"), (False,)),
    ("L32-6iv", lambda c, x, A: _l32_6(c, x, A, "iv"), (False,)),
]
_TEMPLATES = {kind: (tpl, orient) for kind, tpl, orient in CATALOG}


def close_walk(walk: list[int]) -> list[int]:
    if len(walk) > 1 and walk[0] == walk[-1]:
        return walk[:-1]
    return walk


def _accept(G: Graph, walk: list[int], target: int, size: int) -> Cycle | None:
    seq = close_walk(walk)
    if len(seq) != size or len(set(seq)) != size:
        return None
    if sum(1 << v for v in seq) != target:
        return None
    rows = G.rows
    for k in range(size):
        if not rows[seq[k]] >> seq[(k + 1) % size] & 1:
            return None
    return Cycle(canonical_sequence(seq))


def iter_template(G: Graph, seq, kind: str, x: int) -> Iterator[tuple[ExtensionMove, Cycle]]:
    """Every sound application of one template kind with off-cycle vertex ``x``."""
    if kind not in _TEMPLATES:
        raise ValueError(f"unknown move kind {kind!r}")
    template, orientations = _TEMPLATES[kind]
    seq = list(seq)
    t = len(seq)
    target = sum(1 << v for v in seq) | 1 << x
    for mirrored in orientations:
        oriented = seq[::-1] if mirrored else seq
        arcs = _Arcs(G, oriented)
        A = [i for i in range(t) if G.rows[x] >> oriented[i] & 1]
        if len(A) < 2:
            continue
        for indices, walk in template(arcs, x, A):
            cycle = _accept(G, walk, target, t + 1)
            if cycle is None:
                continue
            if mirrored:
                idx = tuple(t - 1 - i for i in indices[:3]) + indices[3:]
            else:
                idx = indices
            yield ExtensionMove(kind, x, idx, mirrored), cycle


def find_extension_by_moves(G: Graph, C: Cycle | list) -> tuple[ExtensionMove, Cycle] | None:
    """First applicable catalog move, scanning kinds in order then ``x`` then indices."""
    seq = list(C.vertices if isinstance(C, Cycle) else C)
    if len(seq) >= G.n:
        raise HamiltonianCycleError("cycle is Hamiltonian; extension is undefined")
    cmask = sum(1 << v for v in seq)
    offs = [x for x in bits(G.vertex_mask & ~cmask) if (G.rows[x] & cmask).bit_count() >= 2]
    for kind, _, _ in CATALOG:
        for x in offs:
            for found in iter_template(G, seq, kind, x):
                return found
    return None


@dataclass
class HamiltonTrace:
    cycle: Cycle
    steps: list[tuple[ExtensionMove, Cycle]]
    seed: tuple[int, int, int]

    @property
    def moves(self) -> list[ExtensionMove]:
        return [m for m, _ in self.steps]

    def to_jsonl(self) -> str:
        return trace_to_jsonl(self.steps)


def triangles(G: Graph) -> Iterator[tuple[int, int, int]]:
    for a in range(G.n):
        for b in bits(G.rows[a] >> (a + 1) << (a + 1)):
            for c in bits(G.rows[a] & G.rows[b] >> (b + 1) << (b + 1)):
                yield a, b, c


def hamilton_by_extension(
    G: Graph,
    budget: int | None = None,
    max_seeds: int = 10,
    allow_two_step: bool = True,
) -> HamiltonTrace | None:
    """Grow a Hamilton cycle from a triangle one extension at a time.

    Each step tries the move catalog, then the exhaustive one-vertex
    extension, then (if ``allow_two_step``) a two-vertex extension.  When a
    seed stalls, the next triangle in lexicographic order is tried, up to
    ``max_seeds`` seeds.
    """
    seeds = list(_first(triangles(G), max_seeds))
    if not seeds:
        raise ValueError("graph has no triangle to start from")
    for seed in seeds:
        C = Cycle(canonical_sequence(seed))
        steps: list[tuple[ExtensionMove, Cycle]] = []
        while C.length < G.n:
            found = find_extension_by_moves(G, C)
            if found is None:
                nxt = find_extension_exhaustive(G, C, budget)
                if nxt is not None:
                    found = (ExtensionMove("Exhaustive", _new_vertex(C, nxt)), nxt)
            if found is None and allow_two_step:
                nxt = find_12_extension(G, C, budget)
                if nxt is not None:
                    found = (ExtensionMove("Exhaustive2", None, extra=tuple(sorted(set(nxt) - set(C)))), nxt)
            if found is None:
                break
            steps.append(found)
            C = found[1]
        if C.length == G.n:
            return HamiltonTrace(C, steps, seed)
    return None


def _first(it, k):
    for i, item in enumerate(it):
        if i >= k:
            return
        yield item


def _new_vertex(old: Cycle, new: Cycle) -> int:
    (x,) = set(new) - set(old)
    return x


def verify_trace(G: Graph, trace: HamiltonTrace) -> bool:
    """Replay a trace: each step is a cycle of ``G`` containing the previous one plus new vertices."""
    from .cycles import is_cycle_of

    if not is_cycle_of(G, trace.seed):
        return False
    prev = set(trace.seed)
    for move, cyc in trace.steps:
        if not is_cycle_of(G, cyc.vertices):
            return False
        grown = set(cyc) - prev
        if not set(cyc) >= prev or len(grown) != (2 if move.kind == "Exhaustive2" else 1):
            return False
        prev = set(cyc)
    return len(prev) == G.n and set(trace.cycle) == prev


# -- bookkeeping around a maximum-degree attachment vertex ------------------------------


@dataclass(frozen=True)
class ExtensionContext:
    """Data attached to attachment vertex ``v_0`` of a cycle, with ``x`` an off-cycle neighbour.

    ``cycle`` is rotated so that ``v_0`` sits at position 0.
    """

    cycle: tuple[int, ...]
    x: int
    v0: int
    d: int
    s: int
    S: frozenset[int]
    T: frozenset[int]


def extension_context(G: Graph, seq, v0_pos: int, x: int) -> ExtensionContext:
    seq = list(seq)
    t = len(seq)
    rot = tuple(seq[(v0_pos + k) % t] for k in range(t))
    v0 = rot[0]
    if not G.rows[v0] >> x & 1 or x in rot:
        raise ValueError("x must be an off-cycle neighbour of v_0")
    cmask = sum(1 << v for v in rot)
    nbrs = G.rows[v0]
    s = (nbrs & ~cmask).bit_count()
    S = frozenset(bits(nbrs & cmask)) - {rot[1], rot[-1]}
    return ExtensionContext(rot, x, v0, G.degrees[v0], s, S, frozenset({x, rot[1], rot[-1]}))


# -- audits on non-extendable cycles ----------------------------------------------------


@dataclass(frozen=True)
class AuditFinding:
    lemma: str
    item: str
    cycle: tuple[int, ...]
    detail: dict = field(default_factory=dict)


def lemma31_findings(G: Graph, seq) -> list[AuditFinding]:
    """Conclusions (1)-(4) about two attachment vertices sharing an off-cycle neighbour.

    Meant for non-extendable cycles; each returned finding is a conclusion
    that fails on ``seq``.
    """
    c = _Arcs(G, seq)
    t = c.t
    cmask = sum(1 << v for v in seq)
    out = []
    tup = tuple(seq)
    for x in bits(G.vertex_mask & ~cmask):
        A = [i for i in range(t) if G.rows[x] >> seq[i] & 1]
        for i in A:
            for j in A:
                if i == j:
                    continue
                info = {"x": x, "i": i, "j": j}
                if j == (i + 1) % t:
                    out.append(AuditFinding("L3.1", "1", tup, info))
                if c.adj(i + 1, j + 1) or c.adj(i - 1, j - 1):
                    out.append(AuditFinding("L3.1", "2", tup, info))
                if c.adj(i - 1, i + 1) and (c.adj(j - 1, i) or c.adj(j + 1, i)):
                    out.append(AuditFinding("L3.1", "3", tup, info))
                if j == (i + 2) % t:
                    for off in range(2, t):
                        k = (i + off) % t
                        if c.adj(i + 1, k) and c.adj(i + 1, k + 1):
                            out.append(AuditFinding("L3.1", "4", tup, dict(info, k=k)))
    return out


def lemma32_item1_findings(G: Graph, seq) -> list[AuditFinding]:
    """Degree bounds at a maximum-degree attachment vertex of a non-extendable cycle.

    ``d >= 6``, and ``2s <= d - 4`` when ``v_1, v_{t-1}`` are non-adjacent,
    ``2s <= d - 2`` when they are adjacent.  Checked at every attachment
    vertex of maximum degree.
    """
    seq = list(seq)
    t = len(seq)
    cmask = sum(1 << v for v in seq)
    attach = [i for i in range(t) if G.rows[seq[i]] & ~cmask]
    if not attach:
        return []
    dmax = max(G.degrees[seq[i]] for i in attach)
    out = []
    for pos in attach:
        if G.degrees[seq[pos]] != dmax:
            continue
        x = next(bits(G.rows[seq[pos]] & ~cmask))
        ctx = extension_context(G, seq, pos, x)
        d, s = ctx.d, ctx.s
        ends_adjacent = bool(G.rows[ctx.cycle[1]] >> ctx.cycle[-1] & 1)
        bound = d - 2 if ends_adjacent else d - 4
        if d < 6 or 2 * s > bound:
            out.append(
                AuditFinding("L3.2", "1", tuple(seq), {"v0": ctx.v0, "d": d, "s": s, "ends_adjacent": ends_adjacent})
            )
    return out


@dataclass
class AuditSummary:
    cycles: int = 0
    non_extendable: int = 0
    lemma31_violations: list[AuditFinding] = field(default_factory=list)
    lemma32_audited: int = 0
    lemma32_violations: list[AuditFinding] = field(default_factory=list)
    lemma32_relaxed_audited: int = 0
    lemma32_relaxed_violations: int = 0
    moves_fired_on_non_extendable: int = 0

    def merge(self, other: AuditSummary) -> None:
        self.cycles += other.cycles
        self.non_extendable += other.non_extendable
        self.lemma31_violations += other.lemma31_violations
        self.lemma32_audited += other.lemma32_audited
        self.lemma32_violations += other.lemma32_violations
        self.lemma32_relaxed_audited += other.lemma32_relaxed_audited
        self.lemma32_relaxed_violations += other.lemma32_relaxed_violations
        self.moves_fired_on_non_extendable += other.moves_fired_on_non_extendable


def audit_graph(G: Graph, max_cycles: int = DEFAULT_MAX_CYCLES, check_moves: bool = True) -> AuditSummary:
    """Run the lemma audits over every non-extendable cycle of ``G``.

    The degree-bound audit counts as hypothesis-satisfying only when ``G`` is
    connected and locally Dirac; on other graphs it is tallied separately
    (``lemma32_relaxed_*``) for information.
    """
    summary = AuditSummary()
    if G.n < 4:
        summary.cycles = sum(1 for _ in enumerate_cycles(G, max_cycles))
        return summary
    table = hamiltonian_subsets(G)
    full = G.vertex_mask
    hypotheses = is_connected(G) and is_locally_dirac(G)
    for seq in enumerate_cycles(G, max_cycles):
        summary.cycles += 1
        S = sum(1 << v for v in seq)
        if S == full or any(table.is_hamiltonian(S | 1 << x) for x in bits(full & ~S)):
            continue
        summary.non_extendable += 1
        summary.lemma31_violations += lemma31_findings(G, seq)
        found = lemma32_item1_findings(G, seq)
        if hypotheses:
            summary.lemma32_audited += 1
            summary.lemma32_violations += found
        else:
            summary.lemma32_relaxed_audited += 1
            summary.lemma32_relaxed_violations += len(found)
        if check_moves and find_extension_by_moves(G, list(seq)) is not None:
            summary.moves_fired_on_non_extendable += 1
    return summary


def all_moves(G: Graph, C: Cycle | list) -> Iterator[tuple[ExtensionMove, Cycle]]:
    """Every sound catalog application on ``C`` (used for soundness sweeps)."""
    seq = list(C.vertices if isinstance(C, Cycle) else C)
    cmask = sum(1 << v for v in seq)
    for kind, _, _ in CATALOG:
        for x in bits(G.vertex_mask & ~cmask):
            yield from iter_template(G, seq, kind, x)


__all__ = [
    "AuditFinding",
    "AuditSummary",
    "ExtensionContext",
    "ExtensionMove",
    "HamiltonTrace",
    "MOVE_KINDS",
    "all_moves",
    "audit_graph",
    "extension_context",
    "find_extension_by_moves",
    "hamilton_by_extension",
    "iter_template",
    "lemma31_findings",
    "lemma32_item1_findings",
    "trace_to_jsonl",
    "triangles",
    "verify_trace",
]
