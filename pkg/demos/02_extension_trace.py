"""
Growing a Hamilton cycle one vertex at a time
=============================================

Starts from a triangle of P_4 x K_3 and applies extension moves until the
cycle spans the graph, then replays the trace.
"""

# %%
from collections import Counter

from localdeg.cycles import hamiltonian_subsets, non_extendable_cycle
from localdeg.families import path_strong_k3
from localdeg.graph import complete_bipartite, petersen_graph
from localdeg.moves import audit_graph, hamilton_by_extension, verify_trace

G = path_strong_k3(4)
trace = hamilton_by_extension(G)
for move, cycle in trace.steps:
    print(f"{move.kind:18s} x={move.x!s:>4}  length {len(cycle)}")
print("verified:", verify_trace(G, trace))
print(Counter(m.kind for m in trace.moves))

# %%
# The same trace as JSON lines, the format `localdeg extend` prints.
print(trace.to_jsonl().splitlines()[0])

# %%
# Every cycle of the product extends; the subset table decides this for all
# vertex sets at once.
table = hamiltonian_subsets(G)
print("cycle vertex sets:", sum(1 for _ in table.hamiltonian_masks()))
print("non-extendable cycle:", non_extendable_cycle(G))

# %%
# Graphs outside the hypotheses do have stuck cycles, and no move fires on them.
for name, H in (("K3,3", complete_bipartite(3, 3)), ("Petersen", petersen_graph())):
    summary = audit_graph(H) if H.n <= 9 else None
    stuck = non_extendable_cycle(H)
    print(name, "stuck cycle:", stuck.vertices if stuck else None)
    if summary:
        print("  non-extendable:", summary.non_extendable, " moves fired:", summary.moves_fired_on_non_extendable)
