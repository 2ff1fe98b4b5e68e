"""
Exhaustive and seeded counterexample searches
=============================================

Scans every small graph for a locally connected graph that is not weakly
pancyclic, then samples random and perturbed graphs against the
connectivity bound for locally Ore graphs.
"""

# %%
from localdeg.harness import SearchConfig, exhaustive_search, random_search

scan = exhaustive_search(
    SearchConfig(filter="connected+locally-connected", property="weakly-pancyclic", exhaustive_n=7)
)
print("counterexample:", scan.counterexample)
print("classes visited per order:", scan.visited_by_order)
print("classes tested per order: ", scan.tested_by_order)

# %%
# A false property is found quickly, which shows the search is not vacuous.
bad = exhaustive_search(SearchConfig(filter="connected+n>=3", property="hamiltonian", exhaustive_n=5))
print("non-Hamiltonian connected graph:", bad.counterexample, bad.counterexample.edges() if bad.counterexample else None)

# %%
res = random_search(SearchConfig(filter="connected+locally-ore+n>=4", property="kappa>=3", samples=2000, seed=42))
print(f"generated {res.generated}, tested {res.tested}, counterexample {res.counterexample}")
print("survivors per order:", dict(sorted(res.tested_by_order.items())))
