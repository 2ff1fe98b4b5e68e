from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from strategies import graphs

from localdeg.cycles import (
    BudgetExceeded,
    Cycle,
    HamiltonianCycleError,
    circumference,
    count_cycles,
    cycle_length_spectrum,
    enumerate_cycles,
    find_12_extension,
    find_extension_exhaustive,
    hamilton_cycle,
    hamiltonian_subsets,
    is_cycle_extendable_graph,
    is_fully_cycle_extendable,
    is_hamiltonian,
    is_pancyclic,
    is_weakly_pancyclic,
    non_12_extendable_cycle,
    non_extendable_cycle,
    validate_cycle,
)
from localdeg.families import cycle_strong_k3, path_strong_k2, path_strong_k3
from localdeg.graph import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph,
    petersen_graph,
    star,
)
from localdeg.invariants import girth
from localdeg.predicates import is_closed_locally_ore, satisfies_dirac

# Frozen oracle output: every 5-cycle of the Petersen graph, none of which
# extends to a cycle on its vertices plus one more.
PETERSEN_5_CYCLES = 12


def brute_cycles(G):
    """All cycles as canonical tuples, by trying every vertex sequence."""
    out = set()
    for t in range(3, G.n + 1):
        for p in permutations(range(G.n), t):
            if p[0] == min(p) and p[1] < p[-1] and all(G.adjacent(p[i], p[(i + 1) % t]) for i in range(t)):
                out.add(p)
    return out


def spans_cycle(G, vertices):
    vs = list(vertices)
    return any(
        all(G.adjacent(a, b) for a, b in zip((vs[0],) + q, q + (vs[0],))) for q in permutations(vs[1:])
    )


def test_validate_cycle_examples():
    K4 = complete_graph(4)
    assert validate_cycle(K4, [0, 1, 2]).vertices == (0, 1, 2)
    assert validate_cycle(K4, [2, 1, 0]) == validate_cycle(K4, [0, 1, 2])
    assert validate_cycle(K4, [3, 1, 0, 2]).vertices == (0, 1, 3, 2)
    with pytest.raises(ValueError, match="not adjacent"):
        validate_cycle(cycle_graph(5), [0, 1, 3])
    with pytest.raises(ValueError):
        validate_cycle(K4, [0, 1])
    with pytest.raises(ValueError):
        validate_cycle(K4, [0, 1, 0])


def test_hamiltonicity_examples():
    assert not is_hamiltonian(petersen_graph())
    assert is_hamiltonian(complete_bipartite(3, 3))
    assert not is_hamiltonian(star(3))
    C = hamilton_cycle(path_strong_k3(4))
    assert C is not None and len(C) == 12
    validate_cycle(path_strong_k3(4), C.vertices)


def test_budget_is_signalled():
    with pytest.raises(BudgetExceeded):
        is_hamiltonian(petersen_graph(), budget=5)
    with pytest.raises(BudgetExceeded):
        list(enumerate_cycles(complete_graph(7), max_cycles=10))


def test_spectrum_examples():
    assert cycle_length_spectrum(complete_graph(5)) == {3, 4, 5}
    assert cycle_length_spectrum(cycle_graph(7)) == {7}
    assert cycle_length_spectrum(complete_bipartite(3, 3)) == {4, 6}
    assert cycle_length_spectrum(petersen_graph()) == {5, 6, 8, 9}
    assert cycle_length_spectrum(path_graph(4)) == set()


def test_spectrum_paths_agree_above_dp_threshold():
    G = path_strong_k3(6)  # n = 18, uses the per-length search
    assert cycle_length_spectrum(G) == set(range(3, 19))
    assert cycle_length_spectrum(cycle_graph(16)) == {16}


def test_pancyclicity_examples():
    # bipartite graphs skip every odd length, so only K_{2,2} is weakly pancyclic
    assert is_weakly_pancyclic(complete_bipartite(2, 2))
    for half in (2, 3, 4):
        assert not is_pancyclic(complete_bipartite(half, half))
    for half in (3, 4):
        assert not is_weakly_pancyclic(complete_bipartite(half, half))
    assert is_weakly_pancyclic(cycle_graph(9)) and not is_pancyclic(cycle_graph(9))
    assert is_pancyclic(complete_graph(6))
    assert is_weakly_pancyclic(path_graph(3))
    assert circumference(petersen_graph()) == 9


def test_dirac_non_bipartite_catalog_graphs_are_pancyclic(catalog):
    for name, G in catalog:
        if satisfies_dirac(G) and 3 in cycle_length_spectrum(G):
            assert is_pancyclic(G), name


def test_extension_examples():
    K5 = complete_graph(5)
    C = validate_cycle(K5, [0, 1, 2, 3])
    assert find_extension_exhaustive(K5, C).vertices == (0, 1, 2, 3, 4)
    K33 = complete_bipartite(3, 3)
    C4 = validate_cycle(K33, [0, 3, 1, 4])
    assert find_extension_exhaustive(K33, C4) is None
    longer = find_12_extension(K33, C4)
    assert len(longer) == 6 and set(C4) <= set(longer)
    with pytest.raises(HamiltonianCycleError):
        find_12_extension(cycle_graph(6), validate_cycle(cycle_graph(6), range(6)))


def test_petersen_five_cycles_do_not_extend():
    P = petersen_graph()
    fives = [c for c in enumerate_cycles(P) if len(c) == 5]
    assert len(fives) == PETERSEN_5_CYCLES
    for seq in fives:
        assert find_extension_exhaustive(P, Cycle(seq)) is None
    assert non_extendable_cycle(P) is not None


def test_graph_extendability_examples():
    assert is_cycle_extendable_graph(complete_graph(5))
    assert is_cycle_extendable_graph(cycle_graph(6))
    assert is_cycle_extendable_graph(path_strong_k3(3))
    assert is_fully_cycle_extendable(path_strong_k3(3))
    assert not is_fully_cycle_extendable(cycle_graph(6))
    assert is_fully_cycle_extendable(complete_graph(4))
    assert non_12_extendable_cycle(complete_bipartite(3, 3)) is None
    assert non_extendable_cycle(complete_bipartite(3, 3)) is not None


def test_subset_table_and_enumeration_agree_on_catalog(catalog):
    for name, G in catalog:
        if G.n <= 9:
            by_table = non_extendable_cycle(G, "subsets") is None
            assert by_table == (non_extendable_cycle(G, "enumerate") is None), name


def test_closed_locally_ore_catalog_graphs_are_12_extendable(catalog):
    for name, G in catalog:
        if G.n <= 12 and is_closed_locally_ore(G):
            assert non_12_extendable_cycle(G) is None, name
            assert is_hamiltonian(G), name


def test_closed_locally_ore_small_graphs_are_hamiltonian(small_graphs):
    for G in small_graphs:
        if G.n >= 3 and is_closed_locally_ore(G) and G.min_degree >= 1:
            from localdeg.graph import is_connected

            if is_connected(G):
                assert is_hamiltonian(G), G


def test_unknown_method_rejected():
    with pytest.raises(ValueError):
        non_extendable_cycle(complete_graph(4), method="guess")


# -- oracles -----------------------------------------------------------------------


@given(graphs(max_n=6))
@settings(max_examples=80, deadline=None)
def test_enumeration_matches_brute_force(G):
    found = list(enumerate_cycles(G))
    assert len(found) == len(set(found))
    assert set(found) == brute_cycles(G)
    assert count_cycles(G) == len(found)


@given(graphs(max_n=7))
@settings(max_examples=80, deadline=None)
def test_subset_table_matches_brute_force(G):
    table = hamiltonian_subsets(G)
    for k in range(3, G.n + 1):
        for S in combinations(range(G.n), k):
            mask = sum(1 << v for v in S)
            assert table.is_hamiltonian(mask) == spans_cycle(G, S)
            if table.is_hamiltonian(mask):
                assert set(table.cycle(mask)) == set(S)
                validate_cycle(G, table.cycle(mask).vertices)


@given(graphs(max_n=9))
@settings(max_examples=80, deadline=None)
def test_spectrum_hamiltonicity_and_girth_agree(G):
    spectrum = cycle_length_spectrum(G)
    assert is_hamiltonian(G) == (G.n >= 3 and G.n in spectrum)
    assert min(spectrum, default=float("inf")) == girth(G)


@given(graphs(max_n=8))
@settings(max_examples=60, deadline=None)
def test_exhaustive_extension_is_sound_and_complete(G):
    for seq in enumerate_cycles(G):
        if len(seq) == G.n:
            continue
        C = Cycle(seq)
        nxt = find_extension_exhaustive(G, C)
        possible = any(spans_cycle(G, seq + (x,)) for x in range(G.n) if x not in seq) if len(seq) < 6 else None
        if nxt is not None:
            validate_cycle(G, nxt.vertices)
            assert len(nxt) == len(C) + 1 and set(C) < set(nxt)
        if possible is not None:
            assert (nxt is not None) == possible
        longer = find_12_extension(G, C)
        if longer is not None:
            validate_cycle(G, longer.vertices)
            assert len(longer) in (len(C) + 1, len(C) + 2) and set(C) < set(longer)


def test_path_strong_k2_is_hamiltonian():
    assert is_hamiltonian(path_strong_k2(5))


def test_cycle_strong_k3_small_cases():
    assert cycle_strong_k3(3) == complete_graph(9)
    assert empty_graph(0).n == 0
