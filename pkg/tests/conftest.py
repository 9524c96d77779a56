"""Shared fixtures and brute-force oracles written independently of the package."""

import itertools
import sys
import random

import networkx as nx
import pytest
from hypothesis import strategies as st

from twwcol import Graph


def atlas(max_n, connected=True, min_n=1):
    """Every graph of the networkx atlas with ``min_n <= n <= max_n``."""
    out = []
    for h in nx.graph_atlas_g():
        k = h.number_of_nodes()
        if min_n <= k <= max_n and (not connected or nx.is_connected(h)):
            out.append(Graph.from_networkx(h))
    return out


def random_graph(rng, n, p=None):
    p = rng.random() if p is None else p
    return Graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def random_connected_graph(rng, n, p=None):
    while True:
        g = random_graph(rng, n, p)
        if g.is_connected():
            return g


@st.composite
def graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, mask) if keep])


# -- oracles -------------------------------------------------------------------


def simple_paths(g, v, r):
    """All simple paths from ``v`` with 1..r edges, as vertex tuples."""
    out = []

    def walk(path):
        if len(path) > 1:
            out.append(tuple(path))
        if len(path) == r + 1:
            return
        for y in g.adj[path[-1]]:
            if y not in path:
                path.append(y)
                walk(path)
                path.pop()

    walk([v])
    return out


def wreach_oracle(g, order, r, v):
    rank = order.rank
    found = {v}
    for p in simple_paths(g, v, r):
        u = min(p, key=lambda x: rank[x])
        if u == p[-1]:
            found.add(u)
    return found


def sreach_oracle(g, order, r, v):
    rank = order.rank
    found = {v}
    for p in simple_paths(g, v, r):
        end = p[-1]
        if rank[end] < rank[v] and all(rank[x] > rank[v] for x in p[1:-1]):
            found.add(end)
    return found


def backconn_oracle(g, order, r, v):
    """Largest family of paths from ``v`` ending before ``v`` that share only ``v``.

    Inner vertices are unrestricted here, exactly as in the definition.
    """
    rank = order.rank
    paths = [frozenset(p[1:]) for p in simple_paths(g, v, r) if rank[p[-1]] < rank[v]]
    paths = sorted(set(paths), key=len)
    best = 0

    def pack(i, used, k):
        nonlocal best
        best = max(best, k)
        if k + len(paths) - i <= best:
            return
        for j in range(i, len(paths)):
            if not paths[j] & used:
                pack(j + 1, used | paths[j], k + 1)

    pack(0, frozenset(), 0)
    return best


def bomega_oracle(g):
    """Largest ``s`` with ``K_{s,s}`` a subgraph, by subset enumeration."""
    best = 0
    n = g.n
    for s in range(1, n // 2 + 1):
        found = False
        for a in itertools.combinations(range(n), s):
            common = set(range(n)) - set(a)
            for x in a:
                common &= g.adj[x]
            if len(common) >= s:
                found = True
                break
        if not found:
            break
        best = s
    return best


def has_induced_p4(g):
    for quad in itertools.combinations(range(g.n), 4):
        h = g.to_networkx().subgraph(quad)
        if h.number_of_edges() == 3 and sorted(d for _, d in h.degree()) == [1, 1, 2, 2]:
            return True
    return False


def tww_oracle(g):
    """Twin-width by plain recursion over all merge orders (no memo, n <= 6)."""

    def red_degrees(parts):
        out = []
        for i, x in enumerate(parts):
            red = 0
            for j, y in enumerate(parts):
                if i == j:
                    continue
                links = {(a, b) for a in x for b in y if g.has_edge(a, b)}
                if links and len(links) != len(x) * len(y):
                    red += 1
            out.append(red)
        return max(out, default=0)

    def best(parts):
        if len(parts) == 1:
            return 0
        result = None
        for i, j in itertools.combinations(range(len(parts)), 2):
            nxt = [p for k, p in enumerate(parts) if k not in (i, j)] + [parts[i] | parts[j]]
            here = red_degrees(nxt)
            if result is not None and here >= result:
                continue
            val = max(here, best(nxt))
            if result is None or val < result:
                result = val
        return result

    if g.n <= 1:
        return 0
    return best([frozenset([v]) for v in range(g.n)])


@pytest.fixture
def rng():
    return random.Random(20240611)


def random_sequence(g, rng):
    """A uniformly chosen merge at every step."""
    from twwcol import ContractionSequence

    live = list(range(g.n))
    merges = []
    for k in range(g.n - 1):
        a, b = rng.sample(live, 2)
        live.remove(a)
        live.remove(b)
        live.append(g.n + k)
        merges.append((a, b))
    return ContractionSequence(g, tuple(merges))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for key in sorted(results, key=lambda k: int(k[2:])):
            terminalreporter.write_line(results[key])
