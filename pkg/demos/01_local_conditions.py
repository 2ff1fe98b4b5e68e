"""
Local degree conditions on the product families
===============================================

Builds the strong products P_m x K_3 and C_m x K_3, evaluates the local
predicates, and shows the connectivity and diameter values that the
structure checks rely on.
"""

# %%
from localdeg.families import cycle_strong_k3, lambda_gap_family, path_strong_k3
from localdeg.invariants import diameter, edge_connectivity, is_planar, vertex_connectivity
from localdeg.predicates import is_locally_dirac, is_locally_ore, locally_ore_violation, min_clustering_coefficient

# %%
# The path product stays locally Dirac while its diameter grows linearly.
for m in range(3, 9):
    G = path_strong_k3(m)
    print(
        f"P{m}xK3  n={G.n:2d}  locally Dirac={is_locally_dirac(G)}  diam={diameter(G)}  "
        f"kappa={vertex_connectivity(G).value}  lambda={edge_connectivity(G).value}  delta={G.min_degree}"
    )

# %%
# Closing the path into a cycle halves the diameter.
for m in (5, 8, 10):
    print(f"C{m}xK3  diam={diameter(cycle_strong_k3(m))}")

# %%
# The product is never planar; the certificate is a Kuratowski subgraph.
res = is_planar(path_strong_k3(3))
print(res.planar, res.kind, len(res.kuratowski_edges), "edges in the subdivision")

# %%
# Edge connectivity can drop below the minimum degree once the local
# condition is weakened to the Ore form.
G = lambda_gap_family(3)
print("G_3:", "locally Ore" if is_locally_ore(G) else locally_ore_violation(G))
print("delta =", G.min_degree, " lambda =", edge_connectivity(G).value)

# %%
print("smallest clustering coefficient of P5xK3:", min_clustering_coefficient(path_strong_k3(5)))
