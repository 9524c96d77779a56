"""Weak and strong reachability, backconnectivity and the derived parameters.

For a vertex ``v`` only the *set* of vertices placed before it matters for
``Sreach_r[L, v]`` and ``b_r(L, v)``; the helpers below therefore take that
set as a bitmask, which lets the exact minimisation run a dynamic program
over prefixes instead of over permutations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .config import Budget
from .errors import ResourceLimitError
from .graph import Graph, degeneracy
from .order import LinearOrder

__all__ = [
    "wreach",
    "sreach",
    "backconn",
    "wreach_sets",
    "ReachProfile",
    "profile",
    "exact_param",
    "exact_param_bruteforce",
    "DEFAULT_EXACT_LIMIT",
    "PARAMS",
]

DEFAULT_EXACT_LIMIT = 11
PARAMS = ("wcol", "scol", "adm")


def _before_mask(order: LinearOrder, v: int) -> int:
    mask = 0
    for u in order.sequence[: order.rank[v]]:
        mask |= 1 << u
    return mask


def _sreach_from_prefix(g: Graph, before: int, v: int, r: int) -> set[int]:
    found = {v}
    seen = (1 << v) | before
    frontier = [v]
    for _ in range(r):
        nxt = []
        for x in frontier:
            for y in g.adj[x]:
                bit = 1 << y
                if before & bit:
                    found.add(y)
                elif not seen & bit:
                    seen |= bit
                    nxt.append(y)
        frontier = nxt
        if not frontier:
            break
    return found


def _ball_avoiding(g: Graph, u: int, blocked: int, r: int) -> list[int]:
    """Vertices within distance ``r`` of ``u`` in ``g`` minus the ``blocked`` set."""
    seen = blocked | (1 << u)
    reached = [u]
    frontier = [u]
    for _ in range(r):
        nxt = []
        for x in frontier:
            for y in g.adj[x]:
                if not seen >> y & 1:
                    seen |= 1 << y
                    nxt.append(y)
        reached.extend(nxt)
        frontier = nxt
        if not frontier:
            break
    return reached


def wreach_sets(g: Graph, order: LinearOrder, r: int) -> list[set[int]]:
    """``Wreach_r[L, v]`` for every vertex ``v``.

    ``u`` is weakly reachable from ``v`` iff ``v`` lies within distance ``r``
    of ``u`` in the subgraph induced by the vertices not before ``u``; one
    truncated BFS per ``u`` fills in all sets.
    """
    out = [set() for _ in range(g.n)]
    blocked = 0
    for u in order.sequence:
        for w in _ball_avoiding(g, u, blocked, r):
            out[w].add(u)
        blocked |= 1 << u
    return out


def wreach(g: Graph, order: LinearOrder, r: int, v: int) -> set[int]:
    """Vertices ``u`` joined to ``v`` by a path of length at most ``r`` whose
    minimum under ``order`` is ``u``."""
    found = set()
    blocked = 0
    for u in order.sequence[: order.rank[v] + 1]:
        if v in _ball_avoiding(g, u, blocked, r):
            found.add(u)
        blocked |= 1 << u
    return found


def sreach(g: Graph, order: LinearOrder, r: int, v: int) -> set[int]:
    """Vertices ``u`` not after ``v`` joined to it by a path of length at most
    ``r`` whose inner vertices all come after ``v``."""
    return _sreach_from_prefix(g, _before_mask(order, v), v, r)


def _backconn_from_prefix(g: Graph, before: int, v: int, r: int, budget: Budget) -> int:
    # Truncating a path at its first vertex before v keeps the packing
    # disjoint, so inner vertices may be restricted to those after v.
    direct = sum(1 for y in g.adj[v] if before >> y & 1)
    starts = sorted(y for y in g.adj[v] if not before >> y & 1)
    targets = before & ~sum(1 << y for y in g.adj[v])
    if r < 2 or not starts or not targets:
        return direct

    cap = min(len(starts), targets.bit_count())
    best = 0
    adj = g.adj

    def routes(start, used):
        """Simple paths start -> ... -> target with at most r - 1 inner vertices."""
        path = [start]
        on_path = (1 << start) | (1 << v)

        def walk(x, on_path):
            budget.tick(best_known=direct + best)
            for y in adj[x]:
                bit = 1 << y
                if used & bit or on_path & bit:
                    continue
                if targets & bit:
                    yield on_path | bit
            if len(path) < r - 1:
                for y in sorted(adj[x]):
                    bit = 1 << y
                    if used & bit or on_path & bit or targets & bit or before & bit:
                        continue
                    path.append(y)
                    yield from walk(y, on_path | bit)
                    path.pop()

        yield from walk(start, on_path)

    def pack(i, used, count):
        nonlocal best
        if count > best:
            best = count
        if best == cap or count + (len(starts) - i) <= best:
            return
        if i == len(starts):
            return
        s = starts[i]
        if not used >> s & 1:
            tried = set()
            for claimed in routes(s, used):
                claimed &= ~(1 << v)
                if claimed in tried:
                    continue
                tried.add(claimed)
                pack(i + 1, used | claimed, count + 1)
                if best == cap:
                    return
        pack(i + 1, used, count)

    pack(0, 0, 0)
    return direct + best


def backconn(g: Graph, order: LinearOrder, r: int, v: int, budget: int | None = None) -> int:
    """``b_r(L, v)``: the largest number of paths of length at most ``r`` from
    ``v`` that meet only in ``v`` and end strictly before ``v``.

    Exact backtracking over path packings.

    Raises
    ------
    ResourceLimitError
        When more than ``budget`` partial paths are expanded.
    """
    counter = Budget(budget, what="backconn")
    return _backconn_from_prefix(g, _before_mask(order, v), v, r, counter)


@dataclass(frozen=True)
class ReachProfile:
    """Per-vertex reachability data for one order and radius."""

    order: LinearOrder
    r: int
    wreach: tuple[frozenset, ...]
    sreach: tuple[frozenset, ...]
    backconn: tuple[int, ...] | None

    @property
    def wcol(self) -> int:
        return max((len(s) for s in self.wreach), default=0)

    @property
    def scol(self) -> int:
        return max((len(s) for s in self.sreach), default=0)

    @property
    def adm(self) -> int | None:
        if self.backconn is None:
            return None
        return max(self.backconn, default=0)

    def rows(self) -> list[dict]:
        """One record per vertex, in vertex order."""
        return [
            {
                "vertex": v,
                "rank": self.order.rank[v],
                "wreach": len(self.wreach[v]),
                "sreach": len(self.sreach[v]),
                "backconn": None if self.backconn is None else self.backconn[v],
            }
            for v in range(len(self.wreach))
        ]


def profile(g: Graph, order: LinearOrder, r: int, with_backconn: bool = True,
            budget: int | None = None) -> ReachProfile:
    if len(order) != g.n:
        raise ValueError("order and graph sizes differ")
    w = wreach_sets(g, order, r)
    s = []
    b = [] if with_backconn else None
    counter = Budget(budget, what="backconn")
    before = 0
    for v in order.sequence:
        s.append((v, frozenset(_sreach_from_prefix(g, before, v, r))))
        if with_backconn:
            b.append((v, _backconn_from_prefix(g, before, v, r, counter)))
        before |= 1 << v
    s_by_v = dict(s)
    return ReachProfile(
        order,
        r,
        tuple(frozenset(x) for x in w),
        tuple(s_by_v[v] for v in range(g.n)),
        None if b is None else tuple(dict(b)[v] for v in range(g.n)),
    )


def _per_order_value(g, order, which, r, budget=None):
    p = profile(g, order, r, with_backconn=(which == "adm"), budget=budget)
    return getattr(p, which)


def exact_param(g: Graph, which: str, r: int, budget: int | None = None,
                limit: int = DEFAULT_EXACT_LIMIT) -> tuple[int, LinearOrder]:
    """Minimum over all orders of ``max_v`` of the chosen per-vertex quantity.

    ``which`` is ``'wcol'``, ``'scol'`` or ``'adm'``.  Returns the value and
    the lexicographically least optimal order.

    ``scol`` and ``adm`` use a memoised search over prefix sets.  ``wcol``
    builds orders left to right with branch and bound: placing ``u`` adds it
    to the weak reach set of every vertex in its ``r``-ball avoiding the
    prefix, so partial counts only grow.
    """
    if which not in PARAMS:
        raise ValueError(f"unknown parameter {which!r}")
    n = g.n
    if n > limit:
        raise ResourceLimitError(f"exact {which} limited to n <= {limit}, got n={n}")
    if n == 0:
        return 0, LinearOrder(())
    counter = Budget(budget, what=f"exact {which}")
    if which == "wcol":
        return _exact_wcol(g, r, counter)
    return _exact_prefix_param(g, which, r, counter)


def _exact_prefix_param(g, which, r, counter):
    n = g.n
    full = (1 << n) - 1
    memo = {full: 0}
    cost_memo = {}

    def cost(before, v):
        key = (before, v)
        c = cost_memo.get(key)
        if c is None:
            counter.tick()
            if which == "scol":
                c = len(_sreach_from_prefix(g, before, v, r))
            else:
                c = _backconn_from_prefix(g, before, v, r, counter)
            cost_memo[key] = c
        return c

    def best(before):
        val = memo.get(before)
        if val is not None:
            return val
        val = None
        for v in range(n):
            if before >> v & 1:
                continue
            c = cost(before, v)
            if val is not None and c >= val:
                continue
            rest = best(before | (1 << v))
            cand = max(c, rest)
            if val is None or cand < val:
                val = cand
        memo[before] = val
        return val

    value = best(0)
    seq = []
    before = 0
    while before != full:
        for v in range(n):
            if before >> v & 1:
                continue
            if max(cost(before, v), best(before | (1 << v))) <= value:
                seq.append(v)
                before |= 1 << v
                break
    return value, LinearOrder(seq)


def _exact_wcol(g, r, counter):
    n = g.n
    _, start_order = degeneracy(g)
    bound = _per_order_value(g, start_order, "wcol", r)
    best = {"value": bound, "order": None}
    counts = [0] * n
    seq = []

    def limit():
        return best["value"] if best["order"] is None else best["value"] - 1

    def dfs(blocked):
        if len(seq) == n:
            best["value"] = max(counts)
            best["order"] = list(seq)
            return
        cap = limit()
        for u in range(n):
            if blocked >> u & 1:
                continue
            counter.tick(best_known=best["value"])
            ball = _ball_avoiding(g, u, blocked, r)
            if any(counts[w] + 1 > cap for w in ball):
                continue
            for w in ball:
                counts[w] += 1
            seq.append(u)
            dfs(blocked | (1 << u))
            seq.pop()
            for w in ball:
                counts[w] -= 1
            cap = limit()

    dfs(0)
    if best["order"] is None:
        # the starting order was optimal and nothing beat or matched it first
        return bound, start_order
    return best["value"], LinearOrder(best["order"])


def exact_param_bruteforce(g: Graph, which: str, r: int) -> tuple[int, LinearOrder]:
    """Reference minimisation over every permutation (tiny graphs only)."""
    best = None
    for perm in itertools.permutations(range(g.n)):
        order = LinearOrder(perm)
        val = _per_order_value(g, order, which, r)
        if best is None or val < best[0]:
            best = (val, order)
    return best
