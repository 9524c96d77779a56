"""Cograph recognition by complement-connectivity recursion.

A graph is a cograph iff every induced subgraph on two or more vertices is
disconnected or has a disconnected complement.  The recursion below builds
the cotree directly from that characterisation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotACographError
from .graph import Graph


@dataclass(frozen=True)
class Cotree:
    """``kind`` is ``'leaf'``, ``'union'`` or ``'join'``; leaves carry a vertex."""

    kind: str
    vertices: frozenset
    children: tuple = ()

    @property
    def size(self):
        return len(self.vertices)


def _components(vertices, adjacent):
    rest = set(vertices)
    comps = []
    while rest:
        s = min(rest)
        rest.discard(s)
        stack, comp = [s], {s}
        while stack:
            x = stack.pop()
            for y in [y for y in rest if adjacent(x, y)]:
                rest.discard(y)
                comp.add(y)
                stack.append(y)
        comps.append(frozenset(comp))
    return comps


def cotree(g: Graph, vertices=None) -> Cotree:
    """Cotree of ``g`` (or of the subgraph induced by ``vertices``).

    Raises
    ------
    NotACographError
        If some induced subgraph is connected with a connected complement.
    """
    if vertices is None:
        vertices = frozenset(range(g.n))
    vertices = frozenset(vertices)
    if not vertices:
        raise ValueError("cotree of an empty vertex set")
    if len(vertices) == 1:
        return Cotree("leaf", vertices)
    comps = _components(vertices, lambda x, y: y in g.adj[x])
    if len(comps) > 1:
        return Cotree("union", vertices, tuple(cotree(g, c) for c in comps))
    cocomps = _components(vertices, lambda x, y: y not in g.adj[x])
    if len(cocomps) > 1:
        return Cotree("join", vertices, tuple(cotree(g, c) for c in cocomps))
    raise NotACographError(
        f"induced subgraph on {sorted(vertices)} is connected with connected complement"
    )


def is_cograph(g: Graph) -> bool:
    if g.n == 0:
        return True
    try:
        cotree(g)
    except NotACographError:
        return False
    return True


def cograph_bomega(g: Graph) -> int:
    """Biclique number of a cograph by dynamic programming over its cotree.

    For each cotree node keeps ``best[a]`` = largest ``b`` such that some
    ``K_{a,b}`` (sides disjoint, ``a`` or ``b`` possibly zero) sits inside it.
    """

    def table(node):
        if node.kind == "leaf":
            return [1, 0]
        tabs = [table(c) for c in node.children]
        if node.kind == "union":
            size = node.size
            out = [0] * (size + 1)
            out[0] = size
            for t in tabs:
                for a in range(1, len(t)):
                    out[a] = max(out[a], t[a])
            return out
        out = tabs[0]
        for t in tabs[1:]:
            merged = [-1] * (len(out) + len(t) - 1)
            for a1, b1 in enumerate(out):
                for a2, b2 in enumerate(t):
                    if b1 + b2 > merged[a1 + a2]:
                        merged[a1 + a2] = b1 + b2
            out = merged
        return out

    if g.n == 0:
        return 0
    best = table(cotree(g))
    return max(min(a, b) for a, b in enumerate(best))
