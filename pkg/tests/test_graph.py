import itertools

import networkx as nx
import pytest
from hypothesis import given, settings

from twwcol import INFINITE, Graph, LinearOrder, bomega, degeneracy, distance_paths, girth
from twwcol.errors import ResourceLimitError

from conftest import atlas, bomega_oracle, graphs


def test_graph_basics():
    g = Graph(4, [(1, 0), (2, 1), (0, 1)])
    assert g.m == 2
    assert g.edges() == ((0, 1), (1, 2))
    assert g.degree(1) == 2 and g.max_degree() == 2
    assert g.components() == [(0, 1, 2), (3,)]
    assert not g.is_connected()
    with pytest.raises(ValueError):
        Graph(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 2)])


def test_induced_subgraph_and_complement():
    g = Graph.cycle(5)
    h, labels = g.induced_subgraph([4, 0, 1])
    assert labels == (0, 1, 4)
    assert h.edges() == ((0, 1), (0, 2))
    assert g.complement().complement() == g
    assert g.complement().m == 10 - 5


def test_networkx_round_trip():
    g = Graph.petersen()
    assert Graph.from_networkx(g.to_networkx()) == g
    assert nx.is_isomorphic(g.to_networkx(), nx.petersen_graph())


@pytest.mark.parametrize("g, expected", [
    (Graph.complete(4), 3),
    (Graph.cycle(7), 7),
    (Graph.path(5), INFINITE),
    (Graph.petersen(), 5),
])
def test_girth_examples(g, expected):
    assert girth(g) == expected


def test_infinite_girth_compares_above_integers():
    assert INFINITE > 10**9 and INFINITE >= 6 and not INFINITE < 3
    assert str(INFINITE) == "inf"


def test_girth_matches_networkx_on_atlas():
    for g in atlas(7, connected=False, min_n=1):
        expected = nx.girth(g.to_networkx())
        got = girth(g)
        assert (got is INFINITE) if expected == float("inf") else got == expected


@pytest.mark.parametrize("g, expected", [
    (Graph.empty(5), 0),
    (Graph.complete_bipartite(3, 3), 3),
    (Graph.cycle(5), 1),
    (Graph.complete(5), 2),
    (Graph.cycle(4), 2),
])
def test_bomega_examples(g, expected):
    assert bomega(g) == expected


def test_bomega_c5_has_no_c4():
    # the K_{2,2} check done by hand: no 4-subset of C_5 spans a 4-cycle
    c5 = Graph.cycle(5)
    for quad in itertools.combinations(range(5), 4):
        h, _ = c5.induced_subgraph(quad)
        assert h.m < 4
    assert bomega_oracle(c5) == 1


def test_bomega_against_subset_enumeration():
    for g in atlas(7, connected=False):
        assert bomega(g) == bomega_oracle(g)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=9))
def test_bomega_monotone_under_edge_deletion(g):
    s = bomega(g)
    assert s <= g.n // 2
    for e in g.edges()[:4]:
        h = Graph(g.n, [f for f in g.edges() if f != e])
        assert bomega(h) <= s


def test_bomega_budget_reports_best_known():
    with pytest.raises(ResourceLimitError) as err:
        bomega(Graph.complete(12), budget=5)
    assert err.value.best_known is not None


@pytest.mark.parametrize("g, expected", [
    (Graph.complete(5), 4),
    (Graph.path(6), 1),
    (Graph.star(4), 1),
    (Graph.cycle(4), 2),
    (Graph.empty(3), 0),
])
def test_degeneracy_examples(g, expected):
    assert degeneracy(g)[0] == expected


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=10))
def test_degeneracy_order_certifies_value(g):
    k, order = degeneracy(g)
    cores = nx.core_number(g.to_networkx())
    assert k == max(cores.values(), default=0)
    for v in range(g.n):
        assert sum(order.before(u, v) for u in g.adj[v]) <= k


def test_distance_paths_examples():
    p3 = Graph.path(3)
    assert distance_paths(p3, 0, 2, 1) == []
    assert distance_paths(p3, 0, 2, 2) == [(0, 1, 2)]
    assert sorted(distance_paths(Graph.cycle(4), 0, 2, 2)) == [(0, 1, 2), (0, 3, 2)]


def test_distance_paths_matches_networkx():
    g = Graph.petersen()
    for v in range(1, 10):
        want = sorted(tuple(p) for p in nx.all_simple_paths(g.to_networkx(), 0, v, cutoff=4))
        assert sorted(distance_paths(g, 0, v, 4)) == want
    with pytest.raises(ResourceLimitError):
        distance_paths(Graph.complete(9), 0, 1, 8, cap=50)


def test_linear_order():
    order = LinearOrder([2, 0, 1])
    assert order.rank == (1, 2, 0)
    assert order.before(2, 1)
    assert LinearOrder.from_ranks(order.rank) == order
    with pytest.raises(ValueError):
        LinearOrder([0, 0, 1])
