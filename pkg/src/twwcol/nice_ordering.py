"""Vertex orders with bounded strong colouring number from contraction sequences.

Read backwards, a contraction sequence splits the vertex set step by step.
A node is *small* when it holds at most ``s`` vertices (``s`` at least the
biclique number) and *nice* at a step when it is small and carries a black
edge.  The maximal nice nodes partition ``V``; ordering them by the step at
which they first turn nice, later-born first on ties, gives an order whose
strong ``r``-reachability sets stay within ``(3 + d * sum_{i<r} (d-1)^i) * s``
for a width-``d`` sequence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .cotree import cotree
from .errors import DisconnectedGraphError
from .graph import Graph, bomega
from .order import LinearOrder
from .trigraph import ContractionSequence, UniverseIndex, restrict_sequence, universe

__all__ = [
    "NiceAnnotation",
    "annotate_nice",
    "nice_order",
    "nice_order_incremental",
    "nice_order_per_component",
    "cograph_order",
    "non_nice_violations",
    "prefix_discrepancies",
]


@dataclass(frozen=True)
class NiceAnnotation:
    """Niceness of every universe node for a fixed smallness threshold ``s``.

    ``rho[x]`` is the least trigraph index at which ``x`` is nice, or ``None``
    when ``x`` never is.  ``maximal`` lists the maximal nice nodes in the
    order they take in the final vertex order.
    """

    s: int
    universe: UniverseIndex
    rho: Mapping[int, int | None]
    maximal: tuple[int, ...]

    def is_nice(self, x: int) -> bool:
        return self.rho[x] is not None

    def nice_at(self, x: int, i: int) -> bool:
        u = self.universe
        return self.rho[x] is not None and self.rho[x] <= i <= u.split[x]


def _require_connected(g: Graph):
    if not g.is_connected():
        raise DisconnectedGraphError(
            "the graph is disconnected; order its components separately"
        )


def _resolve_s(seq, s):
    if s is None:
        return bomega(seq.graph)
    if s < 1 and seq.n > 1:
        raise ValueError(f"s must be positive, got {s}")
    return s


def _black_incident_steps(seq: ContractionSequence):
    """For every node id, the trigraph indices at which it has a black edge."""
    n = seq.n
    steps: dict[int, list[int]] = {}
    for k, t in enumerate(seq.trigraphs()):
        i = n - k
        for x, b in t.black.items():
            if b:
                steps.setdefault(x, []).append(i)
    return steps


def annotate_nice(seq: ContractionSequence, s: int | None = None) -> NiceAnnotation:
    """Label every universe node with the first step at which it is nice.

    Raises
    ------
    DisconnectedGraphError
        If the base graph is disconnected.
    """
    _require_connected(seq.graph)
    s = _resolve_s(seq, s)
    u = universe(seq)
    black_steps = _black_incident_steps(seq)
    rho = {}
    for x, vs in u.vertices.items():
        steps = black_steps.get(x)
        rho[x] = min(steps) if steps and len(vs) <= s else None

    for x, kids in u.children.items():
        if rho[x] is not None:
            for c in kids:
                if rho[c] is None:
                    raise AssertionError(f"node {c} is not nice but its parent {x} is")

    maximal = [
        x for x in u.vertices
        if rho[x] is not None and (u.parent[x] is None or rho[u.parent[x]] is None)
    ]
    covered = sorted(v for x in maximal for v in u.vertices[x])
    if seq.n > s and covered != list(range(seq.n)):
        raise AssertionError("maximal nice sets do not partition the vertex set")
    maximal.sort(key=lambda x: (rho[x], -u.birth[x], x))
    return NiceAnnotation(s, u, rho, tuple(maximal))


def nice_order(seq: ContractionSequence, s: int | None = None) -> LinearOrder:
    """Order the maximal nice sets and list each one's vertices by id.

    Graphs with at most ``s`` vertices get the identity order.
    """
    _require_connected(seq.graph)
    s = _resolve_s(seq, s)
    if seq.n <= max(s, 1):
        return LinearOrder.identity(seq.n)
    ann = annotate_nice(seq, s)
    verts = ann.universe.vertices
    return LinearOrder(v for x in ann.maximal for v in sorted(verts[x]))


def nice_order_incremental(seq: ContractionSequence, s: int | None = None) -> LinearOrder:
    """Same order built by refining a ranking of nice nodes split by split.

    At each split the ranking keeps the old positions (both halves of a nice
    node stay tied in its slot), then appends the freshly nice nodes with
    later birth first.  Ties left at the end are resolved by vertex id.
    """
    _require_connected(seq.graph)
    s = _resolve_s(seq, s)
    n = seq.n
    if n <= max(s, 1):
        return LinearOrder.identity(n)
    u = universe(seq)
    trigraphs = list(seq.trigraphs())[::-1]  # trigraphs[i - 1] is G_i

    def nice_nodes(i):
        t = trigraphs[i - 1]
        return {x for x in t.nodes if len(t.nodes[x]) <= s and t.black[x]}

    blocks: list[list[int]] = []
    nice_prev = nice_nodes(1)
    for i in range(1, n):
        z = u.created_at_split(i)
        x, y = u.children[z]
        nice_next = nice_nodes(i + 1)

        def origin(w):
            return z if w in (x, y) else w

        refined = []
        for block in blocks:
            new_block = []
            for w in block:
                images = (x, y) if w == z else (w,)
                new_block.extend(c for c in images if c in nice_next)
            if new_block:
                refined.append(new_block)
        fresh = sorted(
            (w for w in nice_next if origin(w) not in nice_prev),
            key=lambda w: (-u.birth[w], w),
        )
        refined.extend([w] for w in fresh)
        blocks = refined
        nice_prev = nice_next

    return LinearOrder(v for block in blocks for v in sorted(b for w in block for b in u.vertices[w]))


def nice_order_per_component(seq: ContractionSequence, s: int | None = None) -> LinearOrder:
    """Order each connected component on its own and concatenate.

    Each component uses the restriction of ``seq`` to it and its own biclique
    number unless ``s`` is given.
    """
    g = seq.graph
    out = []
    for comp in g.components():
        sub_seq, labels = restrict_sequence(seq, comp)
        order = nice_order(sub_seq, s)
        out.extend(labels[v] for v in order)
    return LinearOrder(out)


def cograph_order(g: Graph) -> LinearOrder:
    """Cotree order: join children smallest first, union children by lowest id.

    Raises
    ------
    NotACographError
        If ``g`` is not a cograph.
    """
    if g.n == 0:
        return LinearOrder(())

    def emit(node):
        if node.kind == "leaf":
            return [next(iter(node.vertices))]
        if node.kind == "join":
            kids = sorted(node.children, key=lambda c: (c.size, min(c.vertices)))
        else:
            kids = sorted(node.children, key=lambda c: min(c.vertices))
        return [v for c in kids for v in emit(c)]

    return LinearOrder(emit(cotree(g)))


def non_nice_violations(seq: ContractionSequence, s: int | None = None) -> list[str]:
    """Check the three structural facts about non-nice nodes at every step.

    With ``s`` at least the biclique number, at every index ``i`` the nodes of
    ``G_i`` that are not nice at step ``i`` satisfy: a small one has no black
    edge; no two of them share a black edge; the black neighbourhood of each
    covers at most ``s`` vertices.  Returns a description of every failure.
    """
    s = _resolve_s(seq, s)
    n = seq.n
    problems = []
    for k, t in enumerate(seq.trigraphs()):
        i = n - k
        bad = {x for x in t.nodes if not (len(t.nodes[x]) <= s and t.black[x])}
        for x in bad:
            size = len(t.nodes[x])
            if size <= s and t.black[x]:
                problems.append(f"G_{i}: small non-nice node {x} has a black edge")
            for y in t.black[x] & bad:
                if x < y:
                    problems.append(f"G_{i}: non-nice nodes {x} and {y} share a black edge")
            covered = sum(len(t.nodes[y]) for y in t.black[x])
            if covered > s:
                problems.append(
                    f"G_{i}: non-nice node {x} has {covered} > {s} black-adjacent vertices"
                )
    return problems


def prefix_discrepancies(seq: ContractionSequence, s: int | None = None) -> list[dict]:
    """Compare two descriptions of the nodes preceding a vertex's nice set.

    For each maximal nice set ``N`` with ``t = rho(N) - 1``, the nodes of
    ``G_t`` lying inside earlier maximal nice sets are compared with the nodes
    of ``G_t`` that are nice at step ``t``.  Every mismatch is returned.
    """
    s = _resolve_s(seq, s)
    if seq.n <= max(s, 1):
        return []
    ann = annotate_nice(seq, s)
    u = ann.universe
    out = []
    for a, na in enumerate(ann.maximal):
        t = ann.rho[na] - 1
        alive = u.nodes_at(t)
        earlier = set()
        for x in alive:
            if any(u.vertices[x] <= u.vertices[ann.maximal[i]] for i in range(a)):
                earlier.add(x)
        nice_t = {x for x in alive if ann.nice_at(x, t)}
        if earlier != nice_t:
            out.append({
                "set": na,
                "t": t,
                "earlier_nodes": sorted(earlier),
                "nice_nodes": sorted(nice_t),
            })
    return out
