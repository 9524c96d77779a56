"""Linear orders on the vertex set ``0..n-1``."""

from __future__ import annotations

from collections.abc import Iterable, Sequence


class LinearOrder:
    """A bijection between vertices and ranks ``0..n-1``.

    ``sequence[i]`` is the vertex at rank ``i``; ``rank[v]`` is the rank of
    vertex ``v``.  Vertex ``u`` comes before ``v`` iff ``rank[u] < rank[v]``.
    """

    __slots__ = ("sequence", "rank")

    def __init__(self, sequence: Iterable[int]):
        seq = tuple(int(v) for v in sequence)
        n = len(seq)
        rank = [-1] * n
        for i, v in enumerate(seq):
            if not 0 <= v < n or rank[v] != -1:
                raise ValueError(f"not a permutation of 0..{n - 1}: {seq}")
            rank[v] = i
        self.sequence = seq
        self.rank = tuple(rank)

    @classmethod
    def identity(cls, n: int) -> LinearOrder:
        return cls(range(n))

    @classmethod
    def from_ranks(cls, rank: Sequence[int]) -> LinearOrder:
        seq = [0] * len(rank)
        for v, i in enumerate(rank):
            seq[i] = v
        return cls(seq)

    def __len__(self):
        return len(self.sequence)

    def __iter__(self):
        return iter(self.sequence)

    def __eq__(self, other):
        return isinstance(other, LinearOrder) and self.sequence == other.sequence

    def __hash__(self):
        return hash(self.sequence)

    def __repr__(self):
        return f"LinearOrder({list(self.sequence)})"

    def before(self, u: int, v: int) -> bool:
        return self.rank[u] < self.rank[v]
