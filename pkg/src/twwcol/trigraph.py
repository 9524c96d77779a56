"""Trigraphs, contraction sequences and exact twin-width for tiny graphs.

Node ids follow a fixed scheme: the singleton of vertex ``v`` is node ``v``
and the ``k``-th merge (0-based) creates node ``n + k``.  Files shift every id
by one.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from .config import Budget
from .errors import InvalidSequenceError, ResourceLimitError
from .graph import Graph

__all__ = [
    "Trigraph",
    "ContractionSequence",
    "UniverseIndex",
    "initial_trigraph",
    "contract",
    "quotient_trigraph",
    "width",
    "universe",
    "exact_tww",
    "restrict_sequence",
    "DEFAULT_TWW_LIMIT",
]

DEFAULT_TWW_LIMIT = 9


def _relation(g: Graph, x: frozenset, y: frozenset) -> str | None:
    """'black', 'red' or None for two disjoint vertex sets of ``g``."""
    total = len(x) * len(y)
    count = sum(len(g.adj[u] & y) for u in x)
    if count == 0:
        return None
    return "black" if count == total else "red"


@dataclass(frozen=True)
class Trigraph:
    """Trigraph on a base graph.

    ``nodes`` maps live node ids to their vertex sets; ``black`` and ``red``
    map every live node id to the ids adjacent to it in that colour.
    """

    graph: Graph
    nodes: Mapping[int, frozenset]
    black: Mapping[int, frozenset]
    red: Mapping[int, frozenset]
    next_id: int

    def red_degree(self, x: int) -> int:
        return len(self.red[x])

    def max_red_degree(self) -> int:
        return max((len(r) for r in self.red.values()), default=0)

    def neighbours(self, x: int) -> frozenset:
        return self.black[x] | self.red[x]

    def black_edges(self) -> set[tuple[int, int]]:
        return {(x, y) for x, ys in self.black.items() for y in ys if x < y}

    def red_edges(self) -> set[tuple[int, int]]:
        return {(x, y) for x, ys in self.red.items() for y in ys if x < y}

    def node_of(self, v: int) -> int:
        for x, vs in self.nodes.items():
            if v in vs:
                return x
        raise KeyError(v)

    def check(self) -> None:
        """Raise ``AssertionError`` if the structural invariants fail."""
        seen = set()
        for x, vs in self.nodes.items():
            assert vs, f"empty node {x}"
            assert not (seen & vs), f"node {x} overlaps another node"
            seen |= vs
        for x in self.nodes:
            assert not (self.black[x] & self.red[x]), f"node {x} black and red"
            assert x not in self.black[x] and x not in self.red[x]
            for y in self.black[x]:
                assert x in self.black[y]
            for y in self.red[x]:
                assert x in self.red[y]

    def same_structure(self, other: Trigraph) -> bool:
        return (
            dict(self.nodes) == dict(other.nodes)
            and self.black_edges() == other.black_edges()
            and self.red_edges() == other.red_edges()
        )


def initial_trigraph(g: Graph) -> Trigraph:
    nodes = {v: frozenset((v,)) for v in range(g.n)}
    black = {v: frozenset(g.adj[v]) for v in range(g.n)}
    red = {v: frozenset() for v in range(g.n)}
    return Trigraph(g, nodes, black, red, g.n)


def contract(t: Trigraph, x: int, y: int) -> Trigraph:
    """Merge nodes ``x`` and ``y`` into the fresh node ``t.next_id``.

    The merged node keeps as black neighbours the common black neighbours of
    ``x`` and ``y``; every other neighbour of either becomes red.
    """
    if x == y:
        raise InvalidSequenceError(f"cannot contract node {x} with itself")
    for z in (x, y):
        if z not in t.nodes:
            raise InvalidSequenceError(f"unknown or dead node id {z}")
    z = t.next_id
    gone = {x, y}
    nbrs = (t.black[x] | t.red[x] | t.black[y] | t.red[y]) - gone
    blk = (t.black[x] & t.black[y]) - gone
    rd = nbrs - blk

    nodes = {k: v for k, v in t.nodes.items() if k not in gone}
    nodes[z] = t.nodes[x] | t.nodes[y]
    black, red = {}, {}
    for k in nodes:
        if k == z:
            continue
        b, r = t.black[k] - gone, t.red[k] - gone
        if k in blk:
            b = b | {z}
        elif k in rd:
            r = r | {z}
        black[k], red[k] = b, r
    black[z], red[z] = frozenset(blk), frozenset(rd)
    return Trigraph(t.graph, nodes, black, red, z + 1)


def quotient_trigraph(g: Graph, nodes: Mapping[int, Iterable[int]], next_id=None) -> Trigraph:
    """Trigraph computed directly from ``g`` and a family of disjoint vertex sets."""
    nodes = {k: frozenset(v) for k, v in nodes.items()}
    black = {k: set() for k in nodes}
    red = {k: set() for k in nodes}
    for a, b in itertools.combinations(nodes, 2):
        rel = _relation(g, nodes[a], nodes[b])
        if rel == "black":
            black[a].add(b)
            black[b].add(a)
        elif rel == "red":
            red[a].add(b)
            red[b].add(a)
    if next_id is None:
        next_id = max(nodes, default=-1) + 1
    return Trigraph(
        g,
        nodes,
        {k: frozenset(v) for k, v in black.items()},
        {k: frozenset(v) for k, v in red.items()},
        next_id,
    )


@dataclass(frozen=True)
class ContractionSequence:
    """A full contraction sequence of ``graph``: ``n - 1`` merges of node ids."""

    graph: Graph
    merges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        merges = tuple((int(a), int(b)) for a, b in self.merges)
        object.__setattr__(self, "merges", merges)
        n = self.graph.n
        if len(merges) != max(n - 1, 0):
            raise InvalidSequenceError(
                f"expected {max(n - 1, 0)} merges for n={n}, got {len(merges)}"
            )
        live = set(range(n))
        for k, (a, b) in enumerate(merges):
            if a == b:
                raise InvalidSequenceError(f"merge of node {a} with itself", step=k + 1)
            for z in (a, b):
                if z not in live:
                    raise InvalidSequenceError(f"node {z} is not live", step=k + 1)
            live -= {a, b}
            live.add(n + k)

    @property
    def n(self) -> int:
        return self.graph.n

    def trigraphs(self):
        """Yield the trigraphs ``G_n, G_{n-1}, ..., G_1`` in contraction order."""
        t = initial_trigraph(self.graph)
        yield t
        for a, b in self.merges:
            t = contract(t, a, b)
            yield t


def width(seq: ContractionSequence) -> int:
    """Maximum red degree over all trigraphs of the sequence."""
    return max(t.max_red_degree() for t in seq.trigraphs())


@dataclass(frozen=True)
class UniverseIndex:
    """Every node ever created by a sequence, with its laminar bookkeeping.

    Trigraph indices count nodes: ``G_i`` has ``i`` nodes, ``G_n`` is all
    singletons and ``G_1`` is the single node ``V``.  ``birth`` and ``split``
    are the least and greatest ``i`` with the node alive in ``G_i``.
    """

    n: int
    vertices: Mapping[int, frozenset]
    birth: Mapping[int, int]
    split: Mapping[int, int]
    parent: Mapping[int, int | None]
    children: Mapping[int, tuple[int, int] | tuple[()]]

    @property
    def root(self) -> int:
        return 2 * self.n - 2 if self.n > 0 else -1

    def alive(self, x: int, i: int) -> bool:
        return self.birth[x] <= i <= self.split[x]

    def nodes_at(self, i: int) -> list[int]:
        return [x for x in self.vertices if self.alive(x, i)]

    def created_at_split(self, i: int) -> int:
        """The unique node whose split time is ``i`` (for ``1 <= i < n``)."""
        return self.n + (self.n - i - 1)


def universe(seq: ContractionSequence) -> UniverseIndex:
    n = seq.n
    vertices = {v: frozenset((v,)) for v in range(n)}
    split = {v: n for v in range(n)}
    parent: dict[int, int | None] = {}
    children: dict[int, tuple] = {v: () for v in range(n)}
    for k, (a, b) in enumerate(seq.merges):
        z = n + k
        vertices[z] = vertices[a] | vertices[b]
        split[z] = n - k - 1
        parent[a] = parent[b] = z
        children[z] = (a, b)
    birth = {}
    for x in vertices:
        p = parent.get(x)
        birth[x] = 1 if p is None else split[p] + 1
        parent.setdefault(x, None)
    return UniverseIndex(n, vertices, birth, split, parent, children)


def restrict_sequence(seq: ContractionSequence, keep: Iterable[int]):
    """Restrict a sequence to the subgraph induced by ``keep``.

    Returns ``(sub_sequence, labels)``; merges where one side misses ``keep``
    entirely are dropped.  The width never increases.
    """
    sub, labels = seq.graph.induced_subgraph(keep)
    index = {v: i for i, v in enumerate(labels)}
    # node id in seq -> node id in the restricted sequence (None if empty)
    image = {v: index.get(v) for v in range(seq.n)}
    merges = []
    for k, (a, b) in enumerate(seq.merges):
        ia, ib = image[a], image[b]
        if ia is None or ib is None:
            image[seq.n + k] = ib if ia is None else ia
        else:
            image[seq.n + k] = sub.n + len(merges)
            merges.append((ia, ib))
    return ContractionSequence(sub, tuple(merges)), labels


# -- exact twin-width --------------------------------------------------------


def _red_matrix(blocks, masks):
    """Red adjacency between blocks (bitmasks) and the red degree of each."""
    k = len(blocks)
    nbr = []
    for blk in blocks:
        acc = 0
        b = blk
        while b:
            low = b & -b
            acc |= masks[low.bit_length() - 1]
            b ^= low
        nbr.append(acc)
    red = [[False] * k for _ in range(k)]
    for i in range(k):
        bi = blocks[i]
        for j in range(i + 1, k):
            bj = blocks[j]
            if nbr[i] & bj and not _full(bi, bj, masks):
                red[i][j] = red[j][i] = True
    return red, nbr


def _full(x, y, masks):
    b = x
    while b:
        low = b & -b
        if masks[low.bit_length() - 1] & y != y:
            return False
        b ^= low
    return True


def _merge_candidates(blocks, masks):
    """Yield ``(max_red_after, i, j)`` for every pair of blocks."""
    k = len(blocks)
    red, nbr = _red_matrix(blocks, masks)
    deg = [sum(row) for row in red]
    out = []
    for i in range(k):
        for j in range(i + 1, k):
            z = blocks[i] | blocks[j]
            nz = (nbr[i] | nbr[j]) & ~z
            zdeg = 0
            worst = 0
            for w in range(k):
                if w == i or w == j:
                    continue
                bw = blocks[w]
                d = deg[w] - red[w][i] - red[w][j]
                if nz & bw:
                    if not (_full(z, bw, masks)):
                        d += 1
                        zdeg += 1
                if d > worst:
                    worst = d
            out.append((max(worst, zdeg), i, j))
    out.sort()
    return out


def exact_tww(g: Graph, budget: int | None = None, limit: int = DEFAULT_TWW_LIMIT):
    """Twin-width of ``g`` with a witness sequence attaining it.

    Depth-first search over vertex partitions, deciding ``d = 0, 1, ...`` in
    turn and memoising partitions already shown to be dead ends.  Partitions
    are canonical (sorted block bitmasks), so different merge orders reaching
    the same partition are explored once.

    Returns
    -------
    (int, ContractionSequence)

    Raises
    ------
    ResourceLimitError
        When ``g`` has more than ``limit`` vertices, or the search visits more
        than ``budget`` partitions.  ``best_known`` holds the greedy upper
        bound when one was computed.
    """
    n = g.n
    if n > limit:
        raise ResourceLimitError(f"exact twin-width limited to n <= {limit}, got n={n}")
    if n <= 1:
        return 0, ContractionSequence(g, ())
    masks = g.masks
    counter = Budget(budget, what="exact_tww")
    start = tuple(sorted(1 << v for v in range(n)))

    # greedy upper bound
    blocks = list(start)
    path = []
    upper = 0
    while len(blocks) > 1:
        cost, i, j = _merge_candidates(blocks, masks)[0]
        upper = max(upper, cost)
        path.append((blocks[i], blocks[j]))
        blocks = sorted([b for t, b in enumerate(blocks) if t not in (i, j)] + [blocks[i] | blocks[j]])
    best_path = path

    for d in range(upper):
        dead = set()
        trail = []

        def search(blocks):
            if len(blocks) == 1:
                return True
            if blocks in dead:
                return False
            counter.tick(best_known=upper)
            for cost, i, j in _merge_candidates(blocks, masks):
                if cost > d:
                    break
                merged = blocks[i] | blocks[j]
                nxt = tuple(sorted(
                    [b for t, b in enumerate(blocks) if t != i and t != j] + [merged]
                ))
                trail.append((blocks[i], blocks[j]))
                if search(nxt):
                    return True
                trail.pop()
            dead.add(blocks)
            return False

        if search(start):
            best_path = trail
            upper = d
            break

    return upper, _sequence_from_block_merges(g, best_path)


def _sequence_from_block_merges(g, block_merges):
    ids = {1 << v: v for v in range(g.n)}
    merges = []
    for k, (a, b) in enumerate(block_merges):
        merges.append((ids.pop(a), ids.pop(b)))
        ids[a | b] = g.n + k
    return ContractionSequence(g, tuple(merges))
