"""Digraph value types.

Vertices are the integers 1..n. Every digraph is an orientation of a simple
graph: no loops and never both (u, v) and (v, u).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, NamedTuple, Optional, Tuple

from src.core.error_codes import DigraphErrorCode
from src.core.exceptions import DigraphException

DistanceRow = Tuple[Optional[int], ...]


class Arc(NamedTuple):
    """Directed edge tail -> head."""

    tail: int
    head: int

    def reversed(self) -> "Arc":
        return Arc(self.head, self.tail)


def _bfs(n: int, source: int, adjacency: Tuple[Tuple[int, ...], ...]) -> DistanceRow:
    # index 0 is padding so that row[v] is the distance to vertex v
    dist: list[Optional[int]] = [None] * (n + 1)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in adjacency[u]:
            if dist[w] is None:
                dist[w] = dist[u] + 1  # type: ignore[operator]
                queue.append(w)
    return tuple(dist)


@dataclass(frozen=True)
class Digraph:
    """Immutable orientation of a simple graph on vertices 1..n."""

    n: int
    arcs: FrozenSet[Arc]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise DigraphException(
                "Vertex count must be non-negative",
                DigraphErrorCode.VERTEX_OUT_OF_RANGE,
                {"n": self.n},
            )
        for tail, head in self.arcs:
            if not (1 <= tail <= self.n and 1 <= head <= self.n):
                raise DigraphException(
                    f"Arc ({tail},{head}) has an endpoint outside 1..{self.n}",
                    DigraphErrorCode.VERTEX_OUT_OF_RANGE,
                    {"arc": [tail, head], "n": self.n},
                )
            if tail == head:
                raise DigraphException(
                    f"Loop arc ({tail},{head})",
                    DigraphErrorCode.LOOP_ARC,
                    {"arc": [tail, head]},
                )
            if (head, tail) in self.arcs:
                raise DigraphException(
                    f"Digon pair ({tail},{head}) and ({head},{tail})",
                    DigraphErrorCode.DIGON_PAIR,
                    {"pair": sorted([tail, head])},
                )

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    def sorted_arcs(self) -> Tuple[Arc, ...]:
        """Arcs in lexicographic order."""
        return tuple(sorted(self.arcs))

    def has_arc(self, tail: int, head: int) -> bool:
        return (tail, head) in self.arcs

    def check_vertex(self, v: int) -> None:
        """Raise VertexOutOfRange unless 1 <= v <= n."""
        if not 1 <= v <= self.n:
            raise DigraphException(
                f"Vertex {v} outside 1..{self.n}",
                DigraphErrorCode.VERTEX_OUT_OF_RANGE,
                {"vertex": v, "n": self.n},
            )

    @cached_property
    def successors(self) -> Tuple[Tuple[int, ...], ...]:
        """successors[v] lists the heads of arcs leaving v (index 0 unused)."""
        out: list[list[int]] = [[] for _ in range(self.n + 1)]
        for tail, head in self.arcs:
            out[tail].append(head)
        return tuple(tuple(sorted(row)) for row in out)

    @cached_property
    def predecessors(self) -> Tuple[Tuple[int, ...], ...]:
        """predecessors[v] lists the tails of arcs entering v (index 0 unused)."""
        into: list[list[int]] = [[] for _ in range(self.n + 1)]
        for tail, head in self.arcs:
            into[head].append(tail)
        return tuple(tuple(sorted(row)) for row in into)

    @cached_property
    def out_distance_rows(self) -> Tuple[DistanceRow, ...]:
        """out_distance_rows[u][v] = d(u, v), None when unreachable."""
        empty: DistanceRow = ()
        return (empty,) + tuple(
            _bfs(self.n, u, self.successors) for u in self.vertices
        )

    @cached_property
    def in_distance_rows(self) -> Tuple[DistanceRow, ...]:
        """in_distance_rows[v][u] = d(u, v), None when unreachable."""
        empty: DistanceRow = ()
        return (empty,) + tuple(
            _bfs(self.n, v, self.predecessors) for v in self.vertices
        )

    def __repr__(self) -> str:
        arcs = ", ".join(f"{t}->{h}" for t, h in self.sorted_arcs())
        return f"Digraph(n={self.n}, arcs=[{arcs}])"


@dataclass(frozen=True)
class NeighborhoodProfile:
    """First and second out- and in-neighborhoods of one vertex."""

    vertex: int
    nplus: FrozenSet[int]
    nplusplus: FrozenSet[int]
    nminus: FrozenSet[int]
    nminusminus: FrozenSet[int]

    @property
    def dplus(self) -> int:
        return len(self.nplus)

    @property
    def dplusplus(self) -> int:
        return len(self.nplusplus)

    @property
    def dminus(self) -> int:
        return len(self.nminus)

    @property
    def dminusminus(self) -> int:
        return len(self.nminusminus)


@dataclass(frozen=True)
class BlowUp:
    """Result of replacing every vertex by an independent class of copies.

    class_of[k - 1] is the original vertex whose class contains new vertex k;
    classes[i - 1] lists the new vertices of class V_i in ascending order.
    """

    digraph: Digraph
    class_of: Tuple[int, ...]
    classes: Tuple[Tuple[int, ...], ...]


__all__ = ["Arc", "Digraph", "NeighborhoodProfile", "BlowUp", "DistanceRow"]
