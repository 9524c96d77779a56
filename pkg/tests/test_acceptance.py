"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -s`` to see the lines as they happen;
a plain ``pytest`` run lists them in an "acceptance criteria" section at the
end.  ``python tests/test_acceptance.py`` runs the gate without pytest.
"""

import itertools
import random
import sys
from fractions import Fraction

import networkx as nx
import numpy as np

from twwcol import (
    Graph,
    LinearOrder,
    bomega,
    cograph_order,
    degeneracy,
    exact_param,
    exact_tww,
    girth,
    nice_order,
    profile,
    width,
)
from twwcol.bounds import eval_scol_cases, eval_scol_lower_girth, eval_scol_upper, eval_wcol_from_scols
from twwcol.cotree import is_cograph
from twwcol.generators import random_cograph, random_tower, subdivided_clique, theta_lift, undo_lift_witness
from twwcol.reachability import backconn, exact_param_bruteforce
from twwcol.trigraph import contract, initial_trigraph

from conftest import atlas, has_induced_p4, random_graph, random_sequence

RESULTS = {}


def record(key, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] {key} {detail}"
    RESULTS[key] = line
    print(line)
    return ok


def test_ac1_nice_order_bound_on_all_small_connected_graphs():
    # s = 0 only for K_1, where every s-scaled bound is 0 while scol is 1
    graphs = atlas(7, min_n=2)
    failures = []
    for g in graphs:
        d, seq = exact_tww(g)
        s = bomega(g)
        order = nice_order(seq, s)
        for r in range(1, 5):
            scol = profile(g, order, r, with_backconn=False).scol
            bound = eval_scol_upper(d, s, r)[0]
            if scol > bound:
                failures.append((g.edges(), r, scol, bound))
    ok = record("AC1", not failures,
                f"nice-order scol bound on {len(graphs)} connected graphs, 2 <= n <= 7, r = 1..4: "
                f"{len(failures)} violations")
    assert ok, failures[:5]


def test_ac2_wcol_from_scols_on_all_graphs_up_to_six_vertices():
    graphs = atlas(6, connected=False)
    failures = []
    checked = 0
    for g in graphs:
        wcols = [exact_param(g, "wcol", r)[0] for r in range(1, 5)]
        scols = [exact_param(g, "scol", r)[0] for r in range(1, 5)]
        for r in range(1, 5):
            checked += 1
            bound = eval_wcol_from_scols(scols[:r], r).ceiling
            if wcols[r - 1] > bound:
                failures.append((g.edges(), r, wcols[r - 1], bound))
    ok = record("AC2", not failures,
                f"wcol <= 2^(r-1) max scol_k^(r/k), both exact, on {len(graphs)} graphs n <= 6 ({checked} cases): "
                f"{len(failures)} violations")
    assert ok, failures[:5]


def test_ac3_chain_invariants():
    rnd = random.Random(3)
    chain_fail = []
    for _ in range(1000):
        n = rnd.randint(1, 12)
        g = random_graph(rnd, n)
        order = LinearOrder(rnd.sample(range(n), n))
        r = rnd.randint(1, 4)
        p = profile(g, order, r)
        if not p.adm + 1 <= p.scol <= p.wcol:
            chain_fail.append((g.edges(), order.sequence, r))
    graphs = atlas(7, connected=False)
    rng8 = random.Random(8)
    graphs += [random_graph(rng8, 8) for _ in range(40)]
    first_fail = []
    for g in graphs:
        k = degeneracy(g)[0]
        w1 = exact_param(g, "wcol", 1)[0]
        s1 = exact_param(g, "scol", 1)[0]
        if not w1 == s1 == k + 1:
            first_fail.append((g.edges(), w1, s1, k))
    ok = record("AC3", not chain_fail and not first_fail,
                f"adm+1 <= scol <= wcol on 1000 random (g, L, r), n <= 12: {len(chain_fail)} failures; "
                f"wcol_1 = scol_1 = degeneracy+1 on {len(graphs)} graphs n <= 8: {len(first_fail)} failures")
    assert ok, (chain_fail[:3], first_fail[:3])


def test_ac4_theta_lift_girth():
    c3 = girth(theta_lift(Graph.cycle(3)))
    k4 = girth(theta_lift(Graph.complete(4)))
    ok = record("AC4", c3 >= 6 and k4 >= 6,
                f"girth(theta(C_3)) = {c3}, girth(theta(K_4)) = {k4}, both required >= 6")
    assert ok


def test_ac5_undo_lift_width():
    widths = []
    for seed in range(50):
        levels = 1 + seed % 5
        tower = random_tower(Graph.complete(4), levels, seed=seed)
        assert tower.top.n == 4 * 2**levels <= 128
        widths.append(width(undo_lift_witness(tower)))
    ok = record("AC5", max(widths) <= 6,
                f"50 seeded towers over K_4 with 1..5 levels: max width {max(widths)} <= 6")
    assert ok


def test_ac6_subdivided_clique_backconnectivity():
    g = subdivided_clique(6, 3)
    rng = np.random.default_rng(6)
    orders = [LinearOrder(rng.permutation(g.n)) for _ in range(200)]
    orders.append(degeneracy(g)[1])
    worst = None
    for order in orders:
        last = max(range(6), key=lambda v: order.rank[v])
        b = backconn(g, order, 4, last)
        worst = b if worst is None else min(worst, b)
    s = bomega(g)
    ok = record("AC6", worst >= 5 and s == 1,
                f"subdivided K_6 (3 per edge), 201 orders: min b_4 at the latest branch vertex "
                f"= {worst} >= 5; bomega = {s}")
    assert ok


def test_ac7_cograph_row():
    # brute-force evidence first: odd cliques exceed 2 * bomega under every order
    k3 = exact_param_bruteforce(Graph.complete(3), "scol", 1)[0]
    k5 = exact_param_bruteforce(Graph.complete(5), "scol", 1)[0]
    evidence = (k3, bomega(Graph.complete(3)), k5, bomega(Graph.complete(5)))
    assert evidence == (3, 1, 5, 2)

    exceed, unexplained, fallback_fail, cases = [], [], [], 0
    for i in range(200):
        g = random_cograph(1 + i % 40, seed=i)
        s = bomega(g)
        order = cograph_order(g)
        clique = max((len(c) for c in nx.find_cliques(g.to_networkx())), default=0)
        for r in range(1, 6):
            cases += 1
            scol = profile(g, order, r, with_backconn=False).scol
            if s == 0:
                if scol != 1:
                    fallback_fail.append((i, r, scol, s))
                continue
            if scol > 2 * s:
                exceed.append((i, r, scol, s))
                # a clique on more than 2s vertices forces this under any order
                if clique < scol:
                    unexplained.append((i, r, scol, s, clique))
            if scol > eval_scol_upper(0, s, r)[0]:
                fallback_fail.append((i, r, scol, s))
    ok = not fallback_fail and not unexplained
    record("AC7", ok,
           f"2*bomega row exceeded in {len(exceed)}/{cases} (cograph, r) cases, every one forced by a "
           f"clique on more than 2*bomega vertices (brute force: scol(K_3) = {k3} > 2, "
           f"scol(K_5) = {k5} > 4); fallback 3*bomega holds in all cases: {not fallback_fail}")
    assert ok, (fallback_fail[:3], unexplained[:3])


def _table_row(d, s, r):
    # transcribed case table: 2s, 3s, 5s, then 3 (d-1)^r s
    return {0: 2 * s, 1: 3 * s, 2: 5 * s}.get(d, 3 * (d - 1) ** r * s)


def test_ac8_formula_reproduction():
    rnd = random.Random(8)
    tuples = [(0, 4, 7), (1, 1, 1), (2, 2, 9), (3, 1, 2)]
    tuples += [(rnd.randint(0, 9), rnd.randint(1, 6), rnd.randint(1, 6)) for _ in range(16)]
    table_ok = all(eval_scol_cases(*t) == _table_row(*t) for t in tuples)
    thm = eval_scol_upper(2, 1, 3) == (9, 11)
    girth_lb = eval_scol_lower_girth(7, 1) == Fraction(7, 2)
    ok = record("AC8", table_ok and thm and girth_lb and len(tuples) == 20,
                f"eval_scol_upper(2,1,3) = {eval_scol_upper(2, 1, 3)}; case table on 20 tuples: "
                f"{table_ok}; eval_scol_lower_girth(7,1) = {eval_scol_lower_girth(7, 1)}")
    assert ok


def _direct_quotient(g, parts):
    """Black and red pairs of a partition, straight from adjacency."""
    black, red = set(), set()
    keys = sorted(parts)
    for a, b in itertools.combinations(keys, 2):
        links = sum(g.has_edge(x, y) for x in parts[a] for y in parts[b])
        if links == len(parts[a]) * len(parts[b]):
            black.add((a, b))
        elif links:
            red.add((a, b))
    return black, red


def test_ac9_quotient_equivalence():
    rnd = random.Random(9)
    steps = mismatches = 0
    for _ in range(500):
        g = random_graph(rnd, rnd.randint(2, 10))
        seq = random_sequence(g, rnd)
        t = initial_trigraph(g)
        for a, b in seq.merges:
            t = contract(t, a, b)
            steps += 1
            black, red = _direct_quotient(g, dict(t.nodes))
            if black != t.black_edges() or red != t.red_edges():
                mismatches += 1
    ok = record("AC9", mismatches == 0,
                f"500 random sequences, {steps} contractions: {mismatches} differ from the direct quotient")
    assert ok


def test_ac10_exact_twin_width():
    rnd = random.Random(10)
    graphs = atlas(7, connected=False) + [random_graph(rnd, 8) for _ in range(60)]
    graphs += [random_cograph(8, seed) for seed in range(20)]
    iff_fail, width_fail = [], []
    for g in graphs:
        d, seq = exact_tww(g)
        if width(seq) != d:
            width_fail.append(g.edges())
        if (d == 0) != (not has_induced_p4(g)) or (d == 0) != is_cograph(g):
            iff_fail.append(g.edges())
    p4 = exact_tww(Graph.path(4))[0]
    ok = record("AC10", not iff_fail and not width_fail and p4 == 1,
                f"tww = 0 iff P_4-free on {len(graphs)} graphs n <= 8: {len(iff_fail)} failures; "
                f"tww(P_4) = {p4}; width(witness) = d: {len(width_fail)} failures")
    assert ok


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_ac"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
