"""Finite digraphs as dense bitset rows, plus vertex-set algebra.

A graph of order n keeps one n-bit adjacency row per vertex; row v *is*
the outgoing set Out(v) = {w | v -> w}.  Python integers are the bit
containers, so union/intersection/difference are single word-parallel
C-level operations regardless of n.

Vertex ids are dense integers in [0, n).  Both ``Graph`` and ``VertexSet``
are frozen values: safe to hash, share, and compare structurally.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


def bits_of(mask: int) -> Iterator[int]:
    """Yield the set-bit indices of a nonnegative int in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class VertexSet:
    """An immutable subset of the vertex range [0, width)."""

    width: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.width < 0:
            raise ValueError(f"width must be nonnegative, got {self.width}")
        if self.bits < 0 or self.bits >> self.width:
            raise ValueError("bit index outside [0, width)")

    @classmethod
    def from_indices(cls, width: int, indices: Iterable[int]) -> VertexSet:
        mask = 0
        for i in indices:
            if not 0 <= i < width:
                raise ValueError(f"index {i} outside [0, {width})")
            mask |= 1 << i
        return cls(width, mask)

    @classmethod
    def full(cls, width: int) -> VertexSet:
        return cls(width, (1 << width) - 1)

    def _check_width(self, other: VertexSet) -> None:
        if self.width != other.width:
            raise ValueError(f"width mismatch: {self.width} != {other.width}")

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.width and bool(self.bits >> v & 1)

    def __iter__(self) -> Iterator[int]:
        return bits_of(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __or__(self, other: VertexSet) -> VertexSet:
        self._check_width(other)
        return VertexSet(self.width, self.bits | other.bits)

    def __and__(self, other: VertexSet) -> VertexSet:
        self._check_width(other)
        return VertexSet(self.width, self.bits & other.bits)

    def __sub__(self, other: VertexSet) -> VertexSet:
        self._check_width(other)
        return VertexSet(self.width, self.bits & ~other.bits)

    def __xor__(self, other: VertexSet) -> VertexSet:
        self._check_width(other)
        return VertexSet(self.width, self.bits ^ other.bits)

    def issubset(self, other: VertexSet) -> bool:
        self._check_width(other)
        return self.bits & ~other.bits == 0

    __le__ = issubset

    def complement(self) -> VertexSet:
        return VertexSet(self.width, self.bits ^ ((1 << self.width) - 1))

    def to_list(self) -> list[int]:
        return list(bits_of(self.bits))

    def __repr__(self) -> str:
        return f"VertexSet({self.width}, {{{', '.join(map(str, self))}}})"


@dataclass(frozen=True)
class Graph:
    """A finite digraph: order n >= 1 and one adjacency row per vertex."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("graph order must be at least 1")
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.rows)}")
        for v, row in enumerate(self.rows):
            if row < 0 or row >> self.n:
                raise ValueError(f"row {v} has an endpoint outside [0, {self.n})")

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} outside [0, {self.n})")

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.rows[u] >> v & 1)

    def out_set(self, v: int) -> VertexSet:
        """The outgoing set Out(v), as a fresh immutable value."""
        self._check_vertex(v)
        return VertexSet(self.n, self.rows[v])

    def loops(self) -> VertexSet:
        """All looped vertices, i.e. {v | v -> v}."""
        mask = 0
        for v, row in enumerate(self.rows):
            mask |= row & (1 << v)
        return VertexSet(self.n, mask)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges in (source, target) lexicographic order."""
        for u, row in enumerate(self.rows):
            for w in bits_of(row):
                yield u, w

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


def make_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph of order n from an edge list; duplicates collapse."""
    if n < 1:
        raise ValueError("graph order must be at least 1")
    rows = [0] * n
    for u, w in edges:
        if not 0 <= u < n:
            raise ValueError(f"edge source {u} outside [0, {n})")
        if not 0 <= w < n:
            raise ValueError(f"edge target {w} outside [0, {n})")
        rows[u] |= 1 << w
    return Graph(n, tuple(rows))
