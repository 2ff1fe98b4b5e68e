import pickle

import pytest
from hypothesis import given, settings
from strategies import graphs

from localdeg.graph import (
    INF,
    Graph,
    bfs_distances,
    closed_neighbourhood,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    from_edge_list,
    from_networkx,
    graph_power,
    induced_subgraph,
    is_connected,
    join,
    open_neighbourhood,
    path_graph,
    strong_product,
)


def test_from_edge_list_triangle():
    G = from_edge_list(3, [(0, 1), (1, 2), (0, 2)])
    assert G == complete_graph(3)


def test_from_edge_list_edgeless_and_cycle():
    assert from_edge_list(4, []).degrees == (0, 0, 0, 0)
    C5 = from_edge_list(5, [(i, (i + 1) % 5) for i in range(5)])
    assert C5.degrees == (2,) * 5
    assert C5.edge_count == 5


def test_from_edge_list_collapses_duplicates():
    assert from_edge_list(2, [(0, 1), (1, 0), (0, 1)]).edge_count == 1


@pytest.mark.parametrize("edges", [[(0, 3)], [(-1, 0)], [(2, 2)]])
def test_from_edge_list_rejects_bad_pairs(edges):
    with pytest.raises(ValueError, match=str(edges[0])):
        from_edge_list(3, edges)


def test_constructor_validates_rows():
    with pytest.raises(ValueError):
        Graph(2, [0b10, 0])  # asymmetric
    with pytest.raises(ValueError):
        Graph(1, [0b1])  # loop
    with pytest.raises(ValueError):
        Graph(2, [0b100, 0])


def test_graph_is_immutable_and_hashable():
    G = cycle_graph(4)
    with pytest.raises(AttributeError):
        G.n = 5
    assert hash(G) == hash(cycle_graph(4))
    assert pickle.loads(pickle.dumps(G)) == G


def test_neighbourhoods():
    K4, C5 = complete_graph(4), cycle_graph(5)
    assert open_neighbourhood(K4, 0) == {1, 2, 3}
    assert open_neighbourhood(C5, 0) == {1, 4}
    assert open_neighbourhood(empty_graph(3), 0) == frozenset()
    assert closed_neighbourhood(K4, 0) == {0, 1, 2, 3}
    assert closed_neighbourhood(C5, 0) == {0, 1, 4}
    assert closed_neighbourhood(empty_graph(2), 1) == {1}
    with pytest.raises(IndexError):
        open_neighbourhood(C5, 5)
    with pytest.raises(IndexError):
        closed_neighbourhood(C5, -1)


def test_induced_subgraph_examples():
    sub, index = induced_subgraph(complete_graph(5), [4, 0, 2])
    assert sub == complete_graph(3)
    assert index == {0: 0, 2: 1, 4: 2}
    assert induced_subgraph(cycle_graph(5), [0, 1, 2])[0] == path_graph(3)
    assert induced_subgraph(cycle_graph(5), [])[0].n == 0
    with pytest.raises(IndexError):
        induced_subgraph(cycle_graph(5), [7])


def test_strong_product_examples():
    K2, K3 = complete_graph(2), complete_graph(3)
    assert strong_product(K2, K2) == complete_graph(4)
    G = strong_product(path_graph(3), K3)
    assert G.n == 9
    assert G.degrees == (5, 5, 5, 8, 8, 8, 5, 5, 5)
    for m in range(2, 8):
        assert strong_product(path_graph(m), K3).n == 3 * m


def test_strong_product_labelling():
    G = strong_product(path_graph(3), complete_graph(3))
    # (i, a) -> 3i + a; layers 0 and 2 are not adjacent
    assert G.adjacent(0, 4) and not G.adjacent(0, 6)


def test_products_with_null_graph():
    assert strong_product(empty_graph(0), cycle_graph(4)).n == 0
    assert join(empty_graph(0), cycle_graph(4)) == cycle_graph(4)
    assert join(cycle_graph(4), empty_graph(0)) == cycle_graph(4)


def test_join_examples():
    wheel = join(complete_graph(1), cycle_graph(4))
    assert wheel.n == 5 and wheel.edge_count == 8
    assert join(complete_graph(1), complete_graph(1)) == complete_graph(2)


def test_graph_power_examples():
    assert graph_power(cycle_graph(5), 2) == complete_graph(5)
    P = path_graph(6)
    assert graph_power(P, 1) == P
    C9 = graph_power(cycle_graph(9), 3)
    assert C9.degrees == (6,) * 9
    with pytest.raises(ValueError):
        graph_power(P, 0)


def test_bfs_distances_examples():
    assert bfs_distances(cycle_graph(6), 0) == [0, 1, 2, 3, 2, 1]
    assert bfs_distances(complete_graph(4), 2) == [1, 1, 0, 1]
    assert bfs_distances(empty_graph(2), 0) == [0, INF]
    with pytest.raises(IndexError):
        bfs_distances(cycle_graph(3), 3)


def test_null_graph_is_connected():
    assert is_connected(empty_graph(0))
    assert not is_connected(disjoint_union(complete_graph(2), complete_graph(1)))


def test_networkx_round_trip():
    G = strong_product(cycle_graph(4), complete_graph(2))
    assert from_networkx(G.to_networkx()) == G


@given(graphs(max_n=6), graphs(max_n=6))
@settings(max_examples=60)
def test_strong_product_degree_formula(G, H):
    P = strong_product(G, H)
    for u in range(G.n):
        for v in range(H.n):
            assert P.degree(u * H.n + v) == (G.degree(u) + 1) * (H.degree(v) + 1) - 1


@given(graphs(max_n=7), graphs(max_n=7))
def test_join_edge_count(G, H):
    J = join(G, H)
    assert J.edge_count == G.edge_count + H.edge_count + G.n * H.n
    assert induced_subgraph(J, range(G.n))[0] == G


@given(graphs())
def test_graph_invariants(G):
    assert sum(G.degrees) == 2 * G.edge_count
    for u in range(G.n):
        assert not G.adjacent(u, u)
        for v in range(G.n):
            assert G.adjacent(u, v) == G.adjacent(v, u)
    sub, index = induced_subgraph(G, range(G.n))
    assert sub == G and all(index[v] == v for v in range(G.n))


def _floyd(G):
    n = G.n
    d = [[0 if u == v else (1 if G.adjacent(u, v) else INF) for v in range(n)] for u in range(n)]
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


@given(graphs())
def test_bfs_matches_floyd_oracle(G):
    table = _floyd(G)
    rows = [bfs_distances(G, v) for v in range(G.n)]
    assert rows == table
    for u in range(G.n):
        for v in range(G.n):
            assert (rows[u][v] == 1) == G.adjacent(u, v)
            for w in range(G.n):
                assert rows[u][w] <= rows[u][v] + rows[v][w]


@given(graphs(min_n=1, max_n=7))
def test_graph_power_matches_distances(G):
    for k in (1, 2, 3):
        P = graph_power(G, k)
        for u in range(G.n):
            dist = bfs_distances(G, u)
            for v in range(G.n):
                assert P.adjacent(u, v) == (1 <= dist[v] <= k)
