"""Local degree conditions on graphs.

The modules are ``graph`` (bitset graphs), ``predicates``, ``invariants``,
``cycles`` and ``moves`` (cycle extension), ``families``, ``canon`` and
``harness``, with ``cli`` on top.
"""

__version__ = "0.1.0"

from .cycles import (
    BudgetExceeded,
    Cycle,
    HamiltonianCycleError,
    cycle_length_spectrum,
    find_12_extension,
    find_extension_exhaustive,
    hamilton_cycle,
    is_12_extendable_graph,
    is_cycle_extendable_graph,
    is_fully_cycle_extendable,
    is_hamiltonian,
    is_pancyclic,
    is_weakly_pancyclic,
    validate_cycle,
)
from .families import FamilySpec, default_catalog, parse_family_spec
from .graph import (
    INF,
    Graph,
    bfs_distances,
    closed_neighbourhood,
    from_edge_list,
    graph_power,
    induced_subgraph,
    join,
    open_neighbourhood,
    strong_product,
)
from .invariants import diameter, edge_connectivity, girth, is_planar, vertex_connectivity
from .io import GraphFormatError, parse_graph_file, write_graph_file, write_report
from .moves import ExtensionContext, ExtensionMove, find_extension_by_moves, hamilton_by_extension
from .predicates import (
    clustering_coefficient,
    is_claw_free,
    is_closed_locally_ore,
    is_locally_connected,
    is_locally_dirac,
    is_locally_hamiltonian,
    is_locally_isometric,
    is_locally_ore,
    min_clustering_coefficient,
    satisfies_dirac,
    satisfies_ore,
)
