"""Theorem checks over graph catalogues, plus counterexample searches.

Every check re-evaluates the theorem's hypotheses on the graph it is given
(family labels are never trusted) and reports one of ``pass``, ``fail`` or
``skipped``.  A skipped report says why in ``detail["reason"]``:
``hypothesis``, ``size-cap`` or ``budget``.
"""

from __future__ import annotations

import hashlib
import math
import re
import time
from collections.abc import Callable, Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .canon import are_isomorphic, iso_classes_by_order
from .cycles import (
    DEFAULT_MAX_CYCLES,
    DEFAULT_SEARCH_BUDGET,
    BudgetExceeded,
    cycle_length_spectrum,
    every_vertex_on_triangle,
    hamilton_cycle,
    non_12_extendable_cycle,
    non_extendable_cycle,
)
from .families import FamilySpec, default_catalog, join_with_clique, lambda_gap_family
from .graph import Graph, complete_bipartite, from_edge_list, induced_subgraph, is_connected
from .invariants import diameter, edge_connectivity, is_planar, vertex_connectivity
from .io import graph_to_text
from .moves import audit_graph
from .predicates import (
    closed_locally_ore_violation,
    is_claw_free,
    is_closed_locally_ore,
    is_locally_connected,
    is_locally_dirac,
    is_locally_ore,
    locally_dirac_violation,
    locally_ore_violation,
    satisfies_dirac,
    satisfies_ore,
)

THEOREMS = (
    "T1.1",
    "T1.2",
    "T1.3",
    "T1.5",
    "C1.6",
    "C1.7",
    "P2.1",
    "T2.2",
    "T2.3",
    "T2.4",
    "T2.5",
    "R2.5",
    "T2.6",
    "P2.7",
    "T3.3",
    "L3.1-audit",
    "L3.2-audit",
    "CONJ-ryjacek",
)

EXHAUSTIVE_HARD_CAP = 8


@dataclass(frozen=True)
class Limits:
    """Resource caps shared by the checks."""

    budget: int = DEFAULT_SEARCH_BUDGET
    max_cycles: int = DEFAULT_MAX_CYCLES
    # orders above these skip the cycle-set checks with reason "size-cap"
    extendability_order_cap: int = 12
    audit_order_cap: int = 9


@dataclass
class CheckReport:
    theorem: str
    instance: str
    status: str
    witness: dict | None = None
    millis: int = 0
    seed: int | None = None
    detail: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "instance": self.instance,
            "status": self.status,
            "witness": self.witness,
            "millis": self.millis,
            "seed": self.seed,
            "detail": self.detail,
        }

    @property
    def skip_reason(self) -> str | None:
        return self.detail.get("reason") if self.status == "skipped" else None


def graph_record(G: Graph) -> dict:
    return {"n": G.n, "edges": [list(e) for e in G.edges()]}


def graph_from_record(record: dict) -> Graph:
    return from_edge_list(record["n"], [tuple(e) for e in record["edges"]])


def graph_hash(G: Graph) -> str:
    return "graph:" + hashlib.sha256(graph_to_text(G).encode()).hexdigest()[:16]


def json_number(x):
    """Distances and girths may be infinite; JSON gets the string ``"inf"``."""
    return "inf" if x == math.inf else x


# -- individual checks ------------------------------------------------------------------


class _Skip(Exception):
    def __init__(self, reason: str, why: str, witness: dict | None = None):
        super().__init__(why)
        self.reason = reason
        self.why = why
        self.witness = witness


def _require(cond: bool, why: str, witness=None) -> None:
    """Skip unless ``cond``; a local violation is kept as the skip's witness."""
    if not cond:
        raise _Skip("hypothesis", why, witness.to_dict() if witness is not None else None)


def _require_connected(G: Graph, min_order: int) -> None:
    _require(G.n >= min_order, f"order {G.n} < {min_order}")
    _require(is_connected(G), "graph is disconnected")


def _require_locally_dirac(G: Graph) -> None:
    bad = locally_dirac_violation(G)
    _require(bad is None, f"not locally Dirac at vertex {bad.vertex}" if bad else "", bad)


def _require_locally_ore(G: Graph) -> None:
    bad = locally_ore_violation(G)
    _require(bad is None, f"not locally Ore at vertex {bad.vertex}" if bad else "", bad)


def _hamiltonian(G: Graph, lim: Limits):
    C = hamilton_cycle(G, lim.budget)
    if C is None:
        return False, {"hamiltonian": False}, {}
    return True, None, {"hamilton_cycle": list(C.vertices)}


def _check_t11(G, lim, sharp):
    _require(satisfies_dirac(G), "Dirac condition fails")
    return _hamiltonian(G, lim)


def _is_balanced_complete_bipartite(G: Graph) -> bool:
    return G.n % 2 == 0 and G.n >= 2 and are_isomorphic(G, complete_bipartite(G.n // 2, G.n // 2))


def _check_t12(G, lim, sharp):
    _require(G.n >= 3 and 2 * G.min_degree >= G.n, "minimum degree below n/2")
    spectrum = sorted(cycle_length_spectrum(G, lim.budget))
    pancyclic = spectrum == list(range(3, G.n + 1))
    bipartite = not pancyclic and _is_balanced_complete_bipartite(G)
    detail = {"spectrum": spectrum, "balanced_complete_bipartite": bipartite}
    if pancyclic or bipartite:
        return True, None, detail
    return False, {"spectrum": spectrum}, detail


def _check_t13(G, lim, sharp):
    _require(satisfies_ore(G), "Ore condition fails")
    return _hamiltonian(G, lim)


def _check_t15(G, lim, sharp):
    _require_connected(G, 3)
    bad = closed_locally_ore_violation(G)
    _require(bad is None, f"closed neighbourhood of {bad.vertex} fails Ore" if bad else "", bad)
    return _hamiltonian(G, lim)


def _hamiltonian_and_12(G: Graph, lim: Limits):
    ok, witness, detail = _hamiltonian(G, lim)
    if not ok:
        return ok, witness, detail
    if G.n > lim.extendability_order_cap:
        detail["12_extendable"] = f"not checked above order {lim.extendability_order_cap}"
        return True, None, detail
    C = non_12_extendable_cycle(G)
    if C is not None:
        return False, {"non_12_extendable_cycle": list(C.vertices)}, detail
    detail["12_extendable"] = True
    return True, None, detail


def _check_c16(G, lim, sharp):
    _require_connected(G, 3)
    _require_locally_ore(G)
    return _hamiltonian_and_12(G, lim)


def _check_c17(G, lim, sharp):
    _require_connected(G, 3)
    _require_locally_dirac(G)
    return _hamiltonian_and_12(G, lim)


def _check_p21(G, lim, sharp):
    _require_connected(G, 3)
    H = join_with_clique(G)
    sub, _ = induced_subgraph(H, range(G.n))
    bad = locally_dirac_violation(H)
    detail = {"join_order": H.n}
    if bad is not None:
        return False, {"join_violation": bad.to_dict()}, detail
    if sub != G:
        return False, {"induced_copy_differs": True}, detail
    return True, None, detail


def _check_t22(G, lim, sharp):
    _require_connected(G, 4)
    _require_locally_ore(G)
    cert = vertex_connectivity(G)
    detail = {"kappa": cert.value}
    if cert.value >= 3:
        return True, None, detail
    return False, {"separator": sorted(cert.separator)}, detail


def _check_t23(G, lim, sharp):
    _require_connected(G, 8)
    _require_locally_dirac(G)
    detail = {"delta": G.min_degree}
    if G.min_degree >= 5:
        return True, None, detail
    v = G.degrees.index(G.min_degree)
    return False, {"vertex": v, "degree": G.min_degree}, detail


def _check_t24(G, lim, sharp):
    _require_connected(G, 8)
    _require_locally_dirac(G)
    result = is_planar(G)
    if not result.planar:
        return True, None, {"kuratowski": result.kind}
    embedding = {str(v): nbrs for v, nbrs in sorted(result.embedding.items())}
    return False, {"embedding": embedding}, {}


def _check_t25(G, lim, sharp):
    _require_connected(G, 9)
    _require_locally_dirac(G)
    diam, bound = diameter(G), G.n // 3 - 1
    detail = {"diameter": diam, "bound": bound}
    ok = diam == bound if sharp else diam <= bound
    return ok, None if ok else {"diameter": diam}, detail


def _check_r25(G, lim, sharp):
    _require_connected(G, 3)
    _require_locally_ore(G)
    diam, bound = diameter(G), (G.n + 1) // 3
    detail = {"diameter": diam, "bound": bound}
    ok = diam == bound if sharp else diam <= bound
    return ok, None if ok else {"diameter": diam}, detail


def _check_t26(G, lim, sharp):
    _require_connected(G, 3)
    _require_locally_dirac(G)
    cert = edge_connectivity(G)
    detail = {"lambda": cert.value, "delta": G.min_degree}
    if cert.value == G.min_degree:
        return True, None, detail
    return False, {"edge_cut": sorted(list(e) for e in cert.separator)}, detail


def _gap_parameter(n: int) -> int | None:
    k = math.isqrt(max(n // 2 - 2, 0))
    return k if k >= 3 and 2 * (k * k + 2) == n else None


def _check_p27(G, lim, sharp):
    k = _gap_parameter(G.n)
    _require(k is not None, f"order {G.n} is not 2(k^2+2) with k >= 3")
    _require(are_isomorphic(G, lambda_gap_family(k)), f"graph is not isomorphic to G_{k}")
    lam = edge_connectivity(G).value
    detail = {"k": k, "locally_ore": is_locally_ore(G), "delta": G.min_degree, "lambda": lam}
    ok = detail["locally_ore"] and G.min_degree == k * k + 1 and lam == k * k
    return ok, None if ok else dict(detail), detail


def _check_t33(G, lim, sharp):
    _require_connected(G, 3)
    _require_locally_dirac(G)
    _require(G.max_degree <= 11, f"maximum degree {G.max_degree} > 11")
    if G.n > lim.extendability_order_cap:
        raise _Skip("size-cap", f"order {G.n} above extendability cap {lim.extendability_order_cap}")
    if not every_vertex_on_triangle(G):
        v = next(v for v in range(G.n) if not any(G.rows[u] & G.rows[v] for u in range(G.n) if G.rows[v] >> u & 1))
        return False, {"vertex_off_triangles": v}, {}
    C = non_extendable_cycle(G, method="subsets")
    if C is not None:
        return False, {"non_extendable_cycle": list(C.vertices)}, {}
    return True, None, {"fully_cycle_extendable": True}


def _audit(G: Graph, lim: Limits):
    if G.n > lim.audit_order_cap:
        raise _Skip("size-cap", f"order {G.n} above audit cap {lim.audit_order_cap}")
    return audit_graph(G, lim.max_cycles)


def _check_l31(G, lim, sharp):
    summary = _audit(G, lim)
    detail = {
        "cycles": summary.cycles,
        "non_extendable": summary.non_extendable,
        "moves_fired_on_non_extendable": summary.moves_fired_on_non_extendable,
    }
    if summary.lemma31_violations:
        f = summary.lemma31_violations[0]
        return False, {"item": f.item, "cycle": list(f.cycle), "detail": f.detail}, detail
    if summary.moves_fired_on_non_extendable:
        return False, {"moves_fired_on_non_extendable": summary.moves_fired_on_non_extendable}, detail
    return True, None, detail


def _check_l32(G, lim, sharp):
    _require_connected(G, 3)
    _require_locally_dirac(G)
    summary = _audit(G, lim)
    detail = {"non_extendable": summary.non_extendable, "audited": summary.lemma32_audited}
    if summary.lemma32_violations:
        f = summary.lemma32_violations[0]
        return False, {"item": f.item, "cycle": list(f.cycle), "detail": f.detail}, detail
    return True, None, detail


def _check_ryjacek(G, lim, sharp):
    _require_connected(G, 1)
    _require(is_locally_connected(G), "not locally connected")
    spectrum = sorted(cycle_length_spectrum(G, lim.budget))
    detail = {"spectrum": spectrum}
    if not spectrum or spectrum == list(range(spectrum[0], spectrum[-1] + 1)):
        return True, None, detail
    return False, {"spectrum": spectrum}, detail


_CHECKS: dict[str, Callable] = {
    "T1.1": _check_t11,
    "T1.2": _check_t12,
    "T1.3": _check_t13,
    "T1.5": _check_t15,
    "C1.6": _check_c16,
    "C1.7": _check_c17,
    "P2.1": _check_p21,
    "T2.2": _check_t22,
    "T2.3": _check_t23,
    "T2.4": _check_t24,
    "T2.5": _check_t25,
    "R2.5": _check_r25,
    "T2.6": _check_t26,
    "P2.7": _check_p27,
    "T3.3": _check_t33,
    "L3.1-audit": _check_l31,
    "L3.2-audit": _check_l32,
    "CONJ-ryjacek": _check_ryjacek,
}


def verify_theorem(
    theorem: str,
    G: Graph,
    *,
    instance: str | None = None,
    seed: int | None = None,
    limits: Limits = Limits(),
    sharp: bool = False,
    timing: bool = False,
) -> CheckReport:
    """Check one theorem on one graph.

    ``sharp`` asks the diameter checks (T2.5, R2.5) for equality with the
    bound rather than the inequality.  ``millis`` stays 0 unless ``timing``.
    """
    if theorem not in _CHECKS:
        raise ValueError(f"unknown theorem id {theorem!r}")
    instance = instance if instance is not None else graph_hash(G)
    start = time.perf_counter()
    try:
        ok, witness, detail = _CHECKS[theorem](G, limits, sharp)
        status = "pass" if ok else "fail"
        if not ok:
            witness = {"graph": graph_record(G), **(witness or {})}
            if sharp:
                detail["sharp"] = True
    except _Skip as skip:
        status, witness, detail = "skipped", skip.witness, {"reason": skip.reason, "why": skip.why}
    except BudgetExceeded as exc:
        status, witness, detail = "skipped", None, {"reason": "budget", "why": str(exc)}
    millis = round((time.perf_counter() - start) * 1000) if timing else 0
    return CheckReport(theorem, instance, status, witness, millis, seed, detail)


# -- suites -------------------------------------------------------------------------

# (family, theorem) pairs whose bound is attained exactly on every member
SHARP_FAMILIES = {("path-strong-k3", "T2.5"), ("ore-diameter-extremal", "R2.5")}


@dataclass
class SuiteConfig:
    suite: str = "catalog"
    seed: int = 0
    theorems: tuple[str, ...] = THEOREMS
    catalog: list[FamilySpec] | None = None
    graphs: list[tuple[str, Graph]] = field(default_factory=list)
    samples: int = 100
    n_min: int = 4
    n_max: int = 10
    exhaustive_n: int = 6
    limits: Limits = Limits()
    timing: bool = False
    workers: int = 1


def random_generator(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))


def random_gnp(rng: np.random.Generator, n: int, p: float) -> Graph:
    """Binomial random graph; pairs are drawn in ``(0,1), (0,2), ..., (n-2,n-1)`` order."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = rng.random(len(pairs)) < p
    return from_edge_list(n, [e for e, k in zip(pairs, keep) if k])


def random_graphs(seed: int, count: int, n_min: int, n_max: int) -> Iterator[Graph]:
    rng = random_generator(seed)
    for _ in range(count):
        n = int(rng.integers(n_min, n_max + 1))
        yield random_gnp(rng, n, float(rng.uniform(0.3, 0.9)))


def _suite_instances(config: SuiteConfig) -> list[tuple[str, Graph, str | None]]:
    out: list[tuple[str, Graph, str | None]] = []
    if config.suite not in ("catalog", "random", "exhaustive", "all"):
        raise ValueError(f"unknown suite {config.suite!r}")
    if config.suite in ("catalog", "all"):
        catalog = default_catalog() if config.catalog is None else config.catalog
        out += [(str(spec), spec.build(), spec.family) for spec in catalog]
    if config.suite in ("random", "all"):
        for i, G in enumerate(random_graphs(config.seed, config.samples, config.n_min, config.n_max)):
            out.append((f"random #{i} {graph_hash(G)}", G, None))
    if config.suite in ("exhaustive", "all"):
        for n, reps in iso_classes_by_order(config.exhaustive_n):
            if n:
                out += [(f"iso n={n} #{i}", G, None) for i, G in enumerate(reps)]
    out += [(name, G, None) for name, G in config.graphs]
    return out


def _run_instance(args) -> list[CheckReport]:
    name, G, family, config = args
    return [
        verify_theorem(
            t,
            G,
            instance=name,
            seed=config.seed,
            limits=config.limits,
            sharp=(family, t) in SHARP_FAMILIES,
            timing=config.timing,
        )
        for t in config.theorems
    ]


def run_suite(config: SuiteConfig) -> list[CheckReport]:
    """All theorem checks over the suite's instances, in instance order then theorem order."""
    jobs = [(name, G, fam, config) for name, G, fam in _suite_instances(config)]
    if config.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(config.workers) as pool:
            batches = list(pool.map(_run_instance, jobs, chunksize=4))
    else:
        batches = [_run_instance(job) for job in jobs]
    return [r for batch in batches for r in batch]


def suite_exit_code(reports: Iterable[CheckReport]) -> int:
    """0 all pass, 1 any fail, 3 nothing failed but some check ran out of budget."""
    reports = list(reports)
    if any(r.status == "fail" for r in reports):
        return 1
    if any(r.skip_reason == "budget" for r in reports):
        return 3
    return 0


# -- filters and properties for searches ---------------------------------------------

_FILTER_ATOMS: dict[str, Callable[[Graph], bool]] = {
    "always": lambda G: True,
    "connected": is_connected,
    "locally-connected": is_locally_connected,
    "locally-dirac": is_locally_dirac,
    "locally-dirac-strict": lambda G: is_locally_dirac(G, require_order3=True),
    "locally-ore": is_locally_ore,
    "closed-locally-ore": is_closed_locally_ore,
    "claw-free": is_claw_free,
    "dirac": satisfies_dirac,
    "ore": satisfies_ore,
}

_BOUND_ATOM = re.compile(r"(n|maxdeg|mindeg)(>=|<=)([0-9]+)\Z")


def _bound_atom(text: str) -> Callable[[Graph], bool] | None:
    match = _BOUND_ATOM.match(text)
    if not match:
        return None
    key, op, value = match.group(1), match.group(2), int(match.group(3))
    measure = {"n": lambda G: G.n, "maxdeg": lambda G: G.max_degree, "mindeg": lambda G: G.min_degree}[key]
    if op == ">=":
        return lambda G: measure(G) >= value
    return lambda G: measure(G) <= value


def make_filter(spec: str) -> Callable[[Graph], bool]:
    """``"connected+locally-dirac+n>=8"``: the conjunction of ``+``-separated atoms."""
    atoms = []
    for token in spec.split("+"):
        atom = _FILTER_ATOMS.get(token) or _bound_atom(token)
        if atom is None:
            raise ValueError(f"unknown filter {token!r}; atoms: {', '.join(_FILTER_ATOMS)}, n>=K, maxdeg<=K, ...")
        atoms.append(atom)
    return lambda G: all(a(G) for a in atoms)


def _prop_weakly_pancyclic(G, lim):
    spectrum = sorted(cycle_length_spectrum(G, lim.budget))
    ok = not spectrum or spectrum == list(range(spectrum[0], spectrum[-1] + 1))
    return ok, {"spectrum": spectrum}


def _prop_hamiltonian(G, lim):
    return hamilton_cycle(G, lim.budget) is not None, {}


def _prop_kappa3(G, lim):
    cert = vertex_connectivity(G)
    return cert.value >= 3, {"kappa": cert.value, "separator": sorted(cert.separator or ())}


def _prop_lambda_delta(G, lim):
    cert = edge_connectivity(G)
    return cert.value == G.min_degree, {"lambda": cert.value, "delta": G.min_degree}


def _prop_delta5(G, lim):
    return G.min_degree >= 5, {"delta": G.min_degree}


def _prop_non_planar(G, lim):
    return not is_planar(G, certificate=False).planar, {}


def _prop_diam_dirac(G, lim):
    d = diameter(G)
    return d <= G.n // 3 - 1, {"diameter": json_number(d)}


def _prop_diam_ore(G, lim):
    d = diameter(G)
    return d <= (G.n + 1) // 3, {"diameter": json_number(d)}


def _prop_12(G, lim):
    C = non_12_extendable_cycle(G)
    return C is None, {"cycle": list(C.vertices) if C else None}


def _prop_fce(G, lim):
    if not every_vertex_on_triangle(G):
        return False, {"triangles": False}
    C = non_extendable_cycle(G)
    return C is None, {"cycle": list(C.vertices) if C else None}


PROPERTIES: dict[str, Callable] = {
    "always": lambda G, lim: (True, {}),
    "weakly-pancyclic": _prop_weakly_pancyclic,
    "hamiltonian": _prop_hamiltonian,
    "kappa>=3": _prop_kappa3,
    "lambda=delta": _prop_lambda_delta,
    "delta>=5": _prop_delta5,
    "non-planar": _prop_non_planar,
    "diameter<=n/3-1": _prop_diam_dirac,
    "diameter<=(n+1)/3": _prop_diam_ore,
    "12-extendable": _prop_12,
    "fully-cycle-extendable": _prop_fce,
}


def make_property(spec: str) -> Callable[[Graph, Limits], tuple[bool, dict]]:
    """A property id, or a theorem id (the property holds unless the check fails)."""
    if spec in PROPERTIES:
        return PROPERTIES[spec]
    if spec in _CHECKS:

        def by_theorem(G, lim):
            report = verify_theorem(spec, G, limits=lim)
            return report.status != "fail", {"status": report.status, **report.detail}

        return by_theorem
    raise ValueError(f"unknown property {spec!r}; known: {', '.join(PROPERTIES)} or a theorem id")


@dataclass
class SearchConfig:
    filter: str = "always"
    property: str = "always"
    exhaustive_n: int = 7
    samples: int = 1000
    seed: int = 0
    n_min: int = 4
    n_max: int = 10
    perturb_max_order: int = 24
    limits: Limits = Limits()


@dataclass
class SearchResult:
    counterexample: Graph | None
    witness: dict | None
    generated: int
    tested: int
    visited_by_order: dict[int, int] = field(default_factory=dict)
    tested_by_order: dict[int, int] = field(default_factory=dict)
    skipped_budget: int = 0
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "counterexample": graph_record(self.counterexample) if self.counterexample else None,
            "witness": self.witness,
            "generated": self.generated,
            "tested": self.tested,
            "visited_by_order": {str(k): v for k, v in sorted(self.visited_by_order.items())},
            "tested_by_order": {str(k): v for k, v in sorted(self.tested_by_order.items())},
            "skipped_budget": self.skipped_budget,
            "extra": self.extra,
        }


def exhaustive_search(config: SearchConfig) -> SearchResult:
    """Test the property on every isomorphism class of order ``1..exhaustive_n`` passing the filter.

    Stops at the first counterexample.  When the filter mentions
    ``locally-dirac``, ``extra`` also counts survivors under the reading that
    demands neighbourhoods of order at least 3.
    """
    if config.exhaustive_n > EXHAUSTIVE_HARD_CAP:
        raise ValueError(f"exhaustive_n={config.exhaustive_n} exceeds the hard cap {EXHAUSTIVE_HARD_CAP}")
    keep = make_filter(config.filter)
    prop = make_property(config.property)
    strict = None
    if "locally-dirac" in config.filter.split("+"):
        strict = make_filter(config.filter.replace("locally-dirac", "locally-dirac-strict"))
    result = SearchResult(None, None, 0, 0)
    strict_count = 0
    for n, reps in iso_classes_by_order(config.exhaustive_n):
        if n == 0:
            continue
        result.visited_by_order[n] = len(reps)
        result.tested_by_order[n] = 0
        for G in reps:
            result.generated += 1
            if strict is not None and strict(G):
                strict_count += 1
            if not keep(G):
                continue
            result.tested += 1
            result.tested_by_order[n] += 1
            try:
                ok, info = prop(G, config.limits)
            except BudgetExceeded:
                result.skipped_budget += 1
                continue
            if not ok:
                result.counterexample, result.witness = G, info
                return result
    if strict is not None:
        result.extra["tested_with_order3_neighbourhoods"] = strict_count
    return result


def _perturbation_bases(keep, max_order: int) -> list[Graph]:
    return [G for G in (spec.build() for spec in default_catalog()) if G.n <= max_order and keep(G)]


def random_search(config: SearchConfig) -> SearchResult:
    """Seeded search over perturbed catalog graphs and binomial random graphs.

    Even samples add one to three random edges to a catalog graph passing
    the filter, keeping each addition only if the filter still holds; odd
    samples draw ``G(n, p)`` with ``p`` uniform in ``[0.3, 0.9]``.  The run
    is a pure function of ``config``.
    """
    keep = make_filter(config.filter)
    prop = make_property(config.property)
    rng = random_generator(config.seed)
    bases = _perturbation_bases(keep, config.perturb_max_order)
    result = SearchResult(None, None, 0, 0)
    for i in range(config.samples):
        if i % 2 == 0 and bases:
            G = bases[int(rng.integers(len(bases)))]
            for _ in range(int(rng.integers(1, 4))):
                missing = [(u, v) for u in range(G.n) for v in range(u + 1, G.n) if not G.rows[u] >> v & 1]
                if not missing:
                    break
                u, v = missing[int(rng.integers(len(missing)))]
                H = G.add_edge(u, v)
                if keep(H):
                    G = H
        else:
            n = int(rng.integers(config.n_min, config.n_max + 1))
            G = random_gnp(rng, n, float(rng.uniform(0.3, 0.9)))
        result.generated += 1
        if not keep(G):
            continue
        result.tested += 1
        result.tested_by_order[G.n] = result.tested_by_order.get(G.n, 0) + 1
        try:
            ok, info = prop(G, config.limits)
        except BudgetExceeded:
            result.skipped_budget += 1
            continue
        if not ok:
            result.counterexample, result.witness = G, info
            return result
    return result


__all__ = [
    "CheckReport",
    "Limits",
    "PROPERTIES",
    "SearchConfig",
    "SearchResult",
    "SuiteConfig",
    "THEOREMS",
    "exhaustive_search",
    "graph_from_record",
    "graph_hash",
    "graph_record",
    "make_filter",
    "make_property",
    "random_generator",
    "random_gnp",
    "random_graphs",
    "random_search",
    "run_suite",
    "suite_exit_code",
    "verify_theorem",
]
