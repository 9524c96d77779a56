"""Graph families: lifts, subdivided cliques, lexicographic products, cographs.

Every constructor returns a graph on dense ids ``0..n-1``; where the natural
vertex names are tuples, the naming rule is documented on the function and
``*_labels`` helpers give the tuple for each id.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import SigningError, SizeGuardError
from .graph import Graph
from .trigraph import ContractionSequence

__all__ = [
    "PARALLEL",
    "CROSSING",
    "LiftTower",
    "two_lift",
    "theta_lift",
    "theta_lift_labels",
    "theta_lift_signings",
    "random_signing",
    "random_tower",
    "build_tower",
    "undo_lift_witness",
    "subdivided_clique",
    "lex_product_clique",
    "random_cograph",
    "DEFAULT_SIZE_GUARD",
]

PARALLEL = False
CROSSING = True
DEFAULT_SIZE_GUARD = 10**6


def two_lift(g: Graph, signing) -> Graph:
    """2-lift of ``g``: vertex ``v`` becomes ``2v`` and ``2v + 1``.

    ``signing`` maps each edge ``(u, v)`` with ``u < v`` (or gives a sequence
    aligned with ``g.edges()``) to ``CROSSING`` or ``PARALLEL``.  A parallel
    edge joins ``2u+i`` to ``2v+i``; a crossing edge joins ``2u+i`` to
    ``2v+1-i``.
    """
    flags = _signing_flags(g, signing)
    edges = []
    for (u, v), cross in zip(g.edges(), flags):
        for i in (0, 1):
            j = 1 - i if cross else i
            edges.append((2 * u + i, 2 * v + j))
    return Graph(2 * g.n, edges)


def _signing_flags(g, signing):
    edges = g.edges()
    if isinstance(signing, dict):
        keys = {tuple(sorted(e)) for e in signing}
        if keys != set(edges):
            raise SigningError("signing does not cover exactly the edges of the graph")
        norm = {tuple(sorted(e)): bool(f) for e, f in signing.items()}
        return [norm[e] for e in edges]
    flags = [bool(f) for f in signing]
    if len(flags) != len(edges):
        raise SigningError(f"signing has {len(flags)} entries for {len(edges)} edges")
    return flags


def theta_lift(g: Graph, guard: int = DEFAULT_SIZE_GUARD) -> Graph:
    """The all-coordinates lift on ``V(g) x {0,1}^m``.

    Edges are indexed ``0..m-1`` in sorted order; edge ``i = uv`` joins
    ``(u, x)`` to ``(v, x XOR 2^i)`` for every bit vector ``x``.  Vertex
    ``(u, x)`` gets id ``u * 2^m + x``.

    Raises
    ------
    SizeGuardError
        If ``n * 2^m`` exceeds ``guard``.
    """
    m = g.m
    size = g.n << m
    if size > guard:
        raise SizeGuardError(
            f"theta lift would have {g.n}*2^{m} = {size} vertices (guard {guard})",
            required=size,
        )
    width = 1 << m
    edges = []
    for i, (u, v) in enumerate(g.edges()):
        flip = 1 << i
        for x in range(width):
            edges.append((u * width + x, v * width + (x ^ flip)))
    return Graph(size, edges)


def theta_lift_labels(g: Graph):
    """``labels[id] = (base_vertex, bit_tuple)`` for :func:`theta_lift`."""
    m = g.m
    width = 1 << m
    return [
        (u, tuple((x >> i) & 1 for i in range(m)))
        for u in range(g.n)
        for x in range(width)
    ]


def theta_lift_signings(g: Graph):
    """Signings of ``m`` successive 2-lifts whose top graph is the theta lift.

    Level ``j`` adds bit ``j``; an edge of the current graph crosses exactly
    when its base edge has index ``j``.  Returns ``(signings, top)`` where
    ``top`` is named by :func:`two_lift` ids.
    """
    base_edge_index = {e: i for i, e in enumerate(g.edges())}
    current = g
    # project each vertex of the current level to its base vertex
    project = list(range(g.n))
    signings = []
    for j in range(g.m):
        flags = [
            base_edge_index[tuple(sorted((project[a], project[b])))] == j
            for a, b in current.edges()
        ]
        signings.append(flags)
        current = two_lift(current, flags)
        project = [project[x // 2] for x in range(current.n)]
    return signings, current


@dataclass(frozen=True)
class LiftTower:
    """``levels[k]`` is the graph after ``k`` lifts; ``levels[0]`` is the base."""

    base: Graph
    signings: tuple
    levels: tuple

    @property
    def top(self) -> Graph:
        return self.levels[-1]


def build_tower(base: Graph, signings) -> LiftTower:
    levels = [base]
    for sign in signings:
        levels.append(two_lift(levels[-1], sign))
    return LiftTower(base, tuple(tuple(_signing_flags(lv, s)) for lv, s in zip(levels, signings)), tuple(levels))


def random_signing(g: Graph, rng: np.random.Generator):
    return [bool(b) for b in rng.integers(0, 2, size=g.m)]


def random_tower(base: Graph, levels: int, seed: int = 0) -> LiftTower:
    """Tower of ``levels`` 2-lifts with independent uniform signings."""
    rngs = [np.random.default_rng(s) for s in np.random.SeedSequence(seed).spawn(levels)]
    signings = []
    current = base
    for rng in rngs:
        sign = random_signing(current, rng)
        signings.append(sign)
        current = two_lift(current, sign)
    return build_tower(base, signings)


def undo_lift_witness(tower: LiftTower) -> ContractionSequence:
    """Contraction sequence for ``tower.top`` that undoes the lifts.

    Level by level from the top, the two copies ``2v`` and ``2v + 1`` of each
    vertex are merged, in increasing ``v``; the base is then contracted one
    vertex at a time into a growing node.
    """
    top = tower.top
    n = top.n
    merges = []
    next_id = n
    # node id currently standing for each vertex of the level being undone
    current = list(range(n))
    for level in range(len(tower.levels) - 1, 0, -1):
        below = tower.levels[level - 1].n
        nxt = []
        for v in range(below):
            merges.append((current[2 * v], current[2 * v + 1]))
            nxt.append(next_id)
            next_id += 1
        current = nxt
    if current:
        acc = current[0]
        for node in current[1:]:
            merges.append((acc, node))
            acc = next_id
            next_id += 1
    return ContractionSequence(top, tuple(merges))


def subdivided_clique(n: int, k: int) -> Graph:
    """``K_n`` with every edge subdivided ``k`` times.

    Branch vertices are ``0..n-1``; the ``k`` subdivision vertices of edge
    ``ij`` (pairs in lexicographic order) follow, listed from ``i`` to ``j``.
    """
    if n < 2:
        raise ValueError("need at least two branch vertices")
    if k < 0:
        raise ValueError("number of subdivisions must be non-negative")
    edges = []
    nxt = n
    for i, j in itertools.combinations(range(n), 2):
        chain = [i] + list(range(nxt, nxt + k)) + [j]
        nxt += k
        edges.extend(zip(chain, chain[1:]))
    return Graph(nxt, edges)


def lex_product_clique(g: Graph, s: int) -> Graph:
    """Lexicographic product ``g[K_s]``: ``(u, i)`` has id ``u * s + i``."""
    if s < 1:
        raise ValueError("s must be positive")
    edges = []
    for u in range(g.n):
        for i, j in itertools.combinations(range(s), 2):
            edges.append((u * s + i, u * s + j))
    for u, v in g.edges():
        for i in range(s):
            for j in range(s):
                edges.append((u * s + i, v * s + j))
    return Graph(g.n * s, edges)


def random_cograph(n: int, seed: int = 0) -> Graph:
    """Cograph from a uniform random full binary cotree with ``n`` leaves.

    The tree shape comes from Remy's insertion procedure; each internal node
    is a union or a join with probability 1/2.
    """
    if n < 1:
        raise ValueError("n must be positive")
    rng = np.random.default_rng(seed)
    # nodes: leaves 0..n-1, internal nodes appended; children[i] = (a, b)
    children: dict[int, tuple[int, int]] = {}
    parent = {0: None}
    root = 0
    next_internal = n
    for leaf in range(1, n):
        existing = list(parent)
        target = existing[int(rng.integers(len(existing)))]
        node = next_internal
        next_internal += 1
        pair = (leaf, target) if rng.integers(2) else (target, leaf)
        p = parent[target]
        children[node] = pair
        parent[node] = p
        parent[target] = node
        parent[leaf] = node
        if p is None:
            root = node
        else:
            a, b = children[p]
            children[p] = (node, b) if a == target else (a, node)
    kind = {node: bool(rng.integers(2)) for node in sorted(children)}

    leaves_of: dict[int, list[int]] = {}

    def collect(node):
        if node < n:
            return [node]
        a, b = children[node]
        out = collect(a) + collect(b)
        leaves_of[node] = out
        return out

    collect(root)
    edges = []
    for node, is_join in kind.items():
        if is_join:
            a, b = children[node]
            left = leaves_of.get(a, [a])
            right = leaves_of.get(b, [b])
            edges.extend((x, y) for x in left for y in right)
    return Graph(n, edges)
