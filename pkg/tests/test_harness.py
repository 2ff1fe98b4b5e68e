import json

import pytest

from localdeg.families import FamilySpec, cycle_strong_k3, lambda_gap_family, path_strong_k3
from localdeg.graph import complete_bipartite, complete_graph, cycle_graph, disjoint_union, from_edge_list
from localdeg.harness import (
    EXHAUSTIVE_HARD_CAP,
    PROPERTIES,
    THEOREMS,
    CheckReport,
    Limits,
    SearchConfig,
    SuiteConfig,
    exhaustive_search,
    graph_from_record,
    graph_hash,
    graph_record,
    make_filter,
    make_property,
    random_graphs,
    random_search,
    run_suite,
    suite_exit_code,
    verify_theorem,
)
from localdeg.io import report_line
from localdeg.predicates import locally_dirac_violation


def test_theorem_ids():
    assert len(THEOREMS) == 18 and "CONJ-ryjacek" in THEOREMS
    with pytest.raises(ValueError):
        verify_theorem("T9.9", complete_graph(4))


def test_t25_sharp_on_product():
    r = verify_theorem("T2.5", path_strong_k3(6), sharp=True)
    assert r.status == "pass"
    assert r.detail["diameter"] == 5 == 18 // 3 - 1


def test_p27_on_gap_family():
    r = verify_theorem("P2.7", lambda_gap_family(3))
    assert r.status == "pass"
    assert (r.detail["lambda"], r.detail["delta"]) == (9, 10)


def test_t22_on_hexagon_is_skipped_with_witness():
    r = verify_theorem("T2.2", cycle_graph(6))
    assert r.status == "skipped" and r.skip_reason == "hypothesis"
    assert r.witness["vertex"] == 0 and r.witness["neighbours"] == [1, 5]


def test_report_schema():
    r = verify_theorem("T2.6", path_strong_k3(3), instance="path-strong-k3 m=3", seed=4)
    d = r.to_dict()
    assert list(d) == ["theorem", "instance", "status", "witness", "millis", "seed", "detail"]
    assert d["millis"] == 0 and d["seed"] == 4
    assert json.loads(report_line(d)) == d


def test_timing_fills_millis():
    r = verify_theorem("T2.2", path_strong_k3(10), timing=True)
    assert isinstance(r.millis, int) and r.millis >= 0


def test_disconnected_graphs_skip_connected_theorems():
    two_k4 = disjoint_union(complete_graph(4), complete_graph(4))
    for t in ("T2.2", "T2.4", "T2.6", "T1.5"):
        assert verify_theorem(t, two_k4).status == "skipped", t


def test_budget_becomes_skip():
    r = verify_theorem("T1.5", path_strong_k3(8), limits=Limits(budget=3))
    assert r.status == "skipped" and r.skip_reason == "budget"
    assert suite_exit_code([r]) == 3


def test_size_caps():
    assert verify_theorem("T3.3", path_strong_k3(5)).skip_reason == "size-cap"
    assert verify_theorem("L3.1-audit", path_strong_k3(4)).skip_reason == "size-cap"
    assert verify_theorem("T3.3", path_strong_k3(4)).status == "pass"


def test_graph_record_round_trip():
    G = cycle_strong_k3(4)
    assert graph_from_record(json.loads(json.dumps(graph_record(G)))) == G
    assert graph_hash(G) == graph_hash(graph_from_record(graph_record(G)))
    assert graph_hash(G).startswith("graph:") and len(graph_hash(G)) == 22


# -- failures and their witnesses -----------------------------------------------------


def test_fail_witness_reverifies():
    # the exact-diameter check is only promised on the path product; on the
    # cyclic product it must fail, and the witness graph must fail again
    r = verify_theorem("T2.5", cycle_strong_k3(10), sharp=True)
    assert r.status == "fail"
    G = graph_from_record(r.witness["graph"])
    assert G == cycle_strong_k3(10)
    again = verify_theorem("T2.5", G, sharp=True)
    assert again.status == "fail" and again.witness == r.witness
    assert suite_exit_code([r]) == 1


def test_corrupted_product_is_caught():
    G = path_strong_k3(4).remove_edge(0, 1)
    reports = run_suite(SuiteConfig(catalog=[], graphs=[("corrupted P4xK3", G)]))
    assert len(reports) == len(THEOREMS)
    caught = [r for r in reports if r.status == "fail" or (r.status == "skipped" and r.witness)]
    assert caught
    for r in caught:
        if r.status == "skipped" and "Dirac" in r.detail["why"]:
            w = locally_dirac_violation(G)
            assert r.witness == w.to_dict()


# -- suites -------------------------------------------------------------------------


def test_empty_catalog_gives_empty_report():
    reports = run_suite(SuiteConfig(catalog=[]))
    assert reports == [] and suite_exit_code(reports) == 0


def test_small_catalog_passes():
    specs = [FamilySpec("path-strong-k3", {"m": m}) for m in (3, 6)] + [FamilySpec("lambda-gap", {"k": 3})]
    reports = run_suite(SuiteConfig(catalog=specs))
    assert len(reports) == 3 * len(THEOREMS)
    assert [r.instance for r in reports[:: len(THEOREMS)]] == [str(s) for s in specs]
    assert all(r.status != "fail" for r in reports)
    assert suite_exit_code(reports) == 0


def test_default_catalog_has_no_failures():
    reports = run_suite(SuiteConfig(workers=4))
    assert not [r.to_dict() for r in reports if r.status == "fail"]
    assert not [r for r in reports if r.skip_reason == "budget"]
    sharp = [r for r in reports if r.theorem in ("T2.5", "R2.5") and r.detail.get("diameter") == r.detail.get("bound")]
    assert sharp


def test_suite_order_is_deterministic_and_worker_independent():
    config = dict(suite="all", seed=5, samples=10, exhaustive_n=4, catalog=[FamilySpec("path-strong-k3", {"m": 3})])
    a = [report_line(r.to_dict()) for r in run_suite(SuiteConfig(**config))]
    b = [report_line(r.to_dict()) for r in run_suite(SuiteConfig(**config, workers=3))]
    assert a == b
    assert a[0].startswith('{"theorem":"T1.1","instance":"path-strong-k3 m=3"')


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite(SuiteConfig(suite="everything"))


def test_random_graphs_are_seeded():
    a = list(random_graphs(3, 20, 4, 9))
    assert a == list(random_graphs(3, 20, 4, 9))
    assert a != list(random_graphs(4, 20, 4, 9))
    assert all(4 <= G.n <= 9 for G in a)


def test_check_report_skip_reason():
    assert CheckReport("T2.2", "x", "pass").skip_reason is None


# -- filters, properties and searches ---------------------------------------------------


def test_filters():
    f = make_filter("connected+locally-dirac+n>=6")
    assert f(path_strong_k3(3)) and not f(complete_graph(5)) and not f(cycle_graph(6))
    assert make_filter("maxdeg<=3")(cycle_graph(5))
    assert not make_filter("mindeg>=3")(cycle_graph(5))
    with pytest.raises(ValueError):
        make_filter("connected+shiny")


def test_properties():
    for name in PROPERTIES:
        ok, info = make_property(name)(path_strong_k3(3), Limits())
        assert ok, (name, info)
    ok, info = make_property("T2.5")(path_strong_k3(4), Limits())
    assert ok
    assert not make_property("hamiltonian")(complete_bipartite(2, 3), Limits())[0]
    with pytest.raises(ValueError):
        make_property("pretty")


def test_exhaustive_search_counts_classes():
    res = exhaustive_search(SearchConfig(exhaustive_n=5))
    assert res.counterexample is None
    assert res.visited_by_order == {1: 1, 2: 2, 3: 4, 4: 11, 5: 34}
    assert res.tested == res.generated == 52


def test_exhaustive_search_finds_counterexample():
    res = exhaustive_search(SearchConfig(filter="connected", property="hamiltonian", exhaustive_n=4))
    assert res.counterexample is not None
    assert not make_property("hamiltonian")(res.counterexample, Limits())[0]


def test_exhaustive_search_cap():
    with pytest.raises(ValueError):
        exhaustive_search(SearchConfig(exhaustive_n=EXHAUSTIVE_HARD_CAP + 1))


def test_exhaustive_search_reports_strict_dirac_count():
    res = exhaustive_search(SearchConfig(filter="connected+locally-dirac", property="lambda=delta", exhaustive_n=6))
    assert res.counterexample is None
    assert 0 < res.extra["tested_with_order3_neighbourhoods"] <= res.tested


def test_random_search_is_pure():
    config = SearchConfig(filter="connected+locally-ore+n>=4", property="kappa>=3", samples=300, seed=42)
    a, b = random_search(config), random_search(config)
    assert a.counterexample is None
    assert report_line(a.to_dict()) == report_line(b.to_dict())
    assert a.tested > 0
    other = random_search(SearchConfig(filter=config.filter, property=config.property, samples=300, seed=43))
    assert other.to_dict() != a.to_dict()


def test_random_search_on_dirac_degree_bound():
    res = random_search(SearchConfig(filter="connected+locally-dirac+n>=8", property="delta>=5", samples=500, seed=1))
    assert res.counterexample is None and res.tested > 0
    assert min(res.tested_by_order) >= 8


def test_random_search_detects_false_property():
    res = random_search(SearchConfig(filter="connected", property="hamiltonian", samples=200, seed=0))
    assert res.counterexample is not None


def test_small_graph_without_triangle_is_handled():
    G = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    for t in THEOREMS:
        assert verify_theorem(t, G).status in ("pass", "skipped")
