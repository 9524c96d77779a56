"""Simple undirected graphs on dense vertex ids and their basic parameters."""

from __future__ import annotations

import enum
import itertools
from collections import deque
from collections.abc import Iterable

from .config import DEFAULT_PATH_CAP, Budget
from .errors import ResourceLimitError
from .order import LinearOrder

__all__ = [
    "Graph",
    "INFINITE",
    "girth",
    "bomega",
    "has_biclique",
    "degeneracy",
    "distance_paths",
]


class Girth(enum.Enum):
    """Girth of a forest.  Compares greater than every integer."""

    INFINITE = "inf"

    def __str__(self):
        return "inf"

    def __gt__(self, other):
        return isinstance(other, int)

    def __ge__(self, other):
        return isinstance(other, int) or other is self

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self


INFINITE = Girth.INFINITE


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    Parameters
    ----------
    n : int
        Number of vertices.
    edges : iterable of pairs
        Each pair ``(u, v)`` with ``u != v``; duplicates and orientation are
        ignored.

    Examples
    --------
    >>> g = Graph(3, [(0, 1), (1, 2)])
    >>> g.m, sorted(g.adj[1])
    (2, [0, 2])
    """

    __slots__ = ("n", "adj", "masks", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [set() for _ in range(n)]
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.adj = tuple(frozenset(a) for a in adj)
        self.masks = tuple(sum(1 << w for w in a) for a in adj)
        self._edges = tuple(
            sorted((u, v) for u in range(n) for v in adj[u] if u < v)
        )

    @property
    def m(self) -> int:
        return len(self._edges)

    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as ``(u, v)`` pairs with ``u < v``, sorted lexicographically."""
        return self._edges

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def is_regular(self) -> bool:
        return len({len(a) for a in self.adj}) <= 1

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._edges == other._edges
        )

    def __hash__(self):
        return hash((self.n, self._edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    # -- derived graphs -----------------------------------------------------

    def complement(self) -> Graph:
        return Graph(
            self.n,
            (
                (u, v)
                for u, v in itertools.combinations(range(self.n), 2)
                if v not in self.adj[u]
            ),
        )

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
        """Return ``(H, labels)`` where vertex ``i`` of ``H`` is ``labels[i]`` here."""
        labels = tuple(sorted(set(vertices)))
        index = {v: i for i, v in enumerate(labels)}
        edges = [
            (index[u], index[v])
            for u, v in self._edges
            if u in index and v in index
        ]
        return Graph(len(labels), edges), labels

    def components(self) -> list[tuple[int, ...]]:
        """Connected components, each sorted, listed by smallest vertex."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], [s]
            while stack:
                x = stack.pop()
                for y in self.adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
                        comp.append(y)
            comps.append(tuple(sorted(comp)))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    # -- interop and named families ----------------------------------------

    def to_networkx(self):
        import networkx as nx

        h = nx.Graph()
        h.add_nodes_from(range(self.n))
        h.add_edges_from(self._edges)
        return h

    @classmethod
    def from_networkx(cls, h) -> Graph:
        nodes = sorted(h.nodes())
        index = {v: i for i, v in enumerate(nodes)}
        return cls(len(nodes), ((index[u], index[v]) for u, v in h.edges()))

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n, itertools.combinations(range(n), 2))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n)

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return cls(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def star(cls, leaves: int) -> Graph:
        return cls(leaves + 1, ((0, i) for i in range(1, leaves + 1)))

    @classmethod
    def complete_bipartite(cls, a: int, b: int) -> Graph:
        return cls(a + b, ((i, a + j) for i in range(a) for j in range(b)))

    @classmethod
    def petersen(cls) -> Graph:
        outer = [(i, (i + 1) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return cls(10, outer + spokes + inner)


def girth(g: Graph):
    """Length of a shortest cycle, or ``INFINITE`` for a forest.

    Runs a BFS from every vertex; the first non-tree edge ``xy`` met from a
    root closes a closed walk of length ``dist[x] + dist[y] + 1``, and the
    minimum over all roots is attained by a shortest cycle.
    """
    best = None
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if best is not None and 2 * dist[x] + 1 >= best:
                break
            for y in g.adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    length = dist[x] + dist[y] + 1
                    if best is None or length < best:
                        best = length
    return INFINITE if best is None else best


def has_biclique(g: Graph, s: int, budget: Budget | None = None) -> bool:
    """Whether ``K_{s,s}`` is a (not necessarily induced) subgraph of ``g``."""
    if s <= 0:
        return True
    if budget is None:
        budget = Budget(what="bomega")
    masks = g.masks
    cand = [v for v in range(g.n) if len(g.adj[v]) >= s]
    if len(cand) < 2 * s:
        return False
    # suffix_mask[i]: candidates from index i on
    suffix_mask = [0] * (len(cand) + 1)
    for i in range(len(cand) - 1, -1, -1):
        suffix_mask[i] = suffix_mask[i + 1] | (1 << cand[i])

    def extend(size, start, common):
        if size == s:
            return True
        need = s - size
        for idx in range(start, len(cand) - need + 1):
            v = cand[idx]
            new_common = common & masks[v]
            if new_common.bit_count() < s:
                continue
            # the rest of A comes from cand[idx+1:], all of B from new_common
            pool = (suffix_mask[idx + 1] | new_common).bit_count()
            if size + 1 + pool < 2 * s:
                continue
            budget.tick()
            if extend(size + 1, idx + 1, new_common):
                return True
        return False

    for idx, a0 in enumerate(cand):
        # a0 is the smallest vertex of the whole biclique, and it lies in A
        above = ~((1 << (a0 + 1)) - 1)
        common = masks[a0] & above
        if common.bit_count() < s:
            continue
        budget.tick()
        if extend(1, idx + 1, common):
            return True
    return False


def bomega(g: Graph, budget: int | None = None) -> int:
    """Largest ``s`` with ``K_{s,s}`` as a subgraph of ``g`` (0 if edgeless).

    Raises
    ------
    ResourceLimitError
        When the branch search visits more than ``budget`` nodes.
    """
    counter = Budget(budget, what="bomega")
    s = 0
    while True:
        try:
            found = has_biclique(g, s + 1, counter)
        except ResourceLimitError as exc:
            exc.best_known = s
            raise
        if not found:
            return s
        s += 1


def degeneracy(g: Graph) -> tuple[int, LinearOrder]:
    """Degeneracy and a matching order.

    Vertices are removed by minimum remaining degree (ties to the lowest id);
    the returned order is the removal order reversed, so every vertex has at
    most ``k`` neighbours before it.
    """
    deg = [len(a) for a in g.adj]
    removed = [False] * g.n
    elimination = []
    k = 0
    for _ in range(g.n):
        v = min((u for u in range(g.n) if not removed[u]), key=lambda u: (deg[u], u))
        k = max(k, deg[v])
        removed[v] = True
        elimination.append(v)
        for w in g.adj[v]:
            if not removed[w]:
                deg[w] -= 1
    return k, LinearOrder(reversed(elimination))


def distance_paths(g: Graph, u: int, v: int, r: int, cap: int = DEFAULT_PATH_CAP):
    """All simple paths from ``u`` to ``v`` with at most ``r`` edges.

    Paths are vertex tuples starting at ``u``.  Enumeration stops with a
    ``ResourceLimitError`` once more than ``cap`` partial paths were expanded.
    """
    if u == v:
        return [(u,)]
    found = []
    path = [u]
    on_path = {u}
    expanded = 0

    def walk(x):
        nonlocal expanded
        expanded += 1
        if expanded > cap:
            raise ResourceLimitError(f"path enumeration exceeded cap {cap}")
        if len(path) - 1 >= r:
            return
        for y in sorted(g.adj[x]):
            if y in on_path:
                continue
            if y == v:
                found.append(tuple(path) + (v,))
                continue
            path.append(y)
            on_path.add(y)
            walk(y)
            path.pop()
            on_path.discard(y)

    walk(u)
    return found
