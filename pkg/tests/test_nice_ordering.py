import random

import pytest
from hypothesis import given, settings, strategies as st

from twwcol import (
    ContractionSequence,
    Graph,
    LinearOrder,
    annotate_nice,
    bomega,
    cograph_order,
    exact_tww,
    nice_order,
    nice_order_incremental,
    nice_order_per_component,
    profile,
    width,
)
from twwcol.bounds import eval_scol_upper
from twwcol.errors import DisconnectedGraphError, NotACographError
from twwcol.generators import random_cograph
from twwcol.nice_ordering import non_nice_violations, prefix_discrepancies

from conftest import random_connected_graph, random_sequence

P3_SEQ = ContractionSequence(Graph.path(3), ((0, 2), (3, 1)))


def test_annotate_p3():
    ann = annotate_nice(P3_SEQ, 1)
    assert ann.rho[1] == 2
    assert ann.rho[0] == ann.rho[2] == 3
    assert ann.rho[3] is None and ann.rho[4] is None
    assert ann.maximal == (1, 0, 2)


def test_nice_order_p3():
    assert nice_order(P3_SEQ).sequence == (1, 0, 2)
    assert nice_order_incremental(P3_SEQ).sequence == (1, 0, 2)


def test_tiny_graphs_get_identity_order():
    assert nice_order(ContractionSequence(Graph(1), ())).sequence == (0,)
    k2 = ContractionSequence(Graph.complete(2), ((0, 1),))
    assert nice_order(k2).sequence == (0, 1)
    assert nice_order_incremental(k2).sequence == (0, 1)


def test_disconnected_input_is_rejected():
    g = Graph(4, [(0, 1), (2, 3)])
    seq = ContractionSequence(g, ((0, 1), (2, 3), (4, 5)))
    with pytest.raises(DisconnectedGraphError):
        nice_order(seq)
    order = nice_order_per_component(seq)
    assert sorted(order) == [0, 1, 2, 3]
    assert profile(g, order, 3).scol == 2


def _connected_seq(rnd, max_n=10):
    g = random_connected_graph(rnd, rnd.randint(2, max_n))
    return g, random_sequence(g, rnd)


@settings(max_examples=120, deadline=None)
@given(st.integers(0, 2**32))
def test_two_procedures_agree(seed):
    rnd = random.Random(seed)
    g, seq = _connected_seq(rnd)
    assert nice_order(seq) == nice_order_incremental(seq)
    s = bomega(g) + rnd.randint(0, 2)
    assert nice_order(seq, s) == nice_order_incremental(seq, s)


def test_two_procedures_agree_on_cographs():
    for seed in range(40):
        g = random_cograph(12, seed)
        if not g.is_connected():
            continue
        d, seq = exact_tww(g, limit=12)
        assert d == 0
        assert nice_order(seq) == nice_order_incremental(seq)


@settings(max_examples=120, deadline=None)
@given(st.integers(0, 2**32))
def test_order_bound_for_any_sequence(seed):
    rnd = random.Random(seed)
    # the bound holds for the width of whatever sequence is used
    g, seq = _connected_seq(rnd)
    s = bomega(g)
    d = width(seq)
    order = nice_order(seq, s)
    for r in (1, 2, 3):
        assert profile(g, order, r, with_backconn=False).scol <= eval_scol_upper(d, s, r)[0]


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2**32))
def test_non_nice_structure_along_any_sequence(seed):
    rnd = random.Random(seed)
    _, seq = _connected_seq(rnd)
    assert non_nice_violations(seq) == []


def test_annotation_partitions_and_is_hereditary():
    rnd = random.Random(7)
    for _ in range(50):
        _, seq = _connected_seq(rnd, 12)
        ann = annotate_nice(seq)
        u = ann.universe
        covered = sorted(v for x in ann.maximal for v in u.vertices[x])
        if seq.n > ann.s:
            assert covered == list(range(seq.n))
        for x, kids in u.children.items():
            if ann.is_nice(x):
                assert all(ann.is_nice(c) for c in kids)


def test_prefix_cross_check_returns_records():
    # the cross-check reports mismatches instead of asserting; on P_3 it is clean
    assert prefix_discrepancies(P3_SEQ) == []
    rnd = random.Random(3)
    for _ in range(30):
        _, seq = _connected_seq(rnd)
        for rec in prefix_discrepancies(seq):
            assert set(rec) == {"set", "t", "earlier_nodes", "nice_nodes"}


def test_cograph_order_examples():
    k4 = Graph.complete(4)
    order = cograph_order(k4)
    assert profile(k4, order, 2).scol == 4 == 2 * bomega(k4)
    two_k2 = Graph(4, [(0, 1), (2, 3)])
    assert profile(two_k2, cograph_order(two_k2), 3).scol == 2
    with pytest.raises(NotACographError):
        cograph_order(Graph.path(4))
    assert cograph_order(Graph(0)) == LinearOrder(())
