"""
Digraph Service

Construction, distances, neighborhoods and structural edits of digraphs.
All functions are pure; digraphs are never mutated.
"""

import math
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, Sequence, Tuple, Union

from src.core.error_codes import DigraphErrorCode
from src.core.exceptions import DigraphException
from src.core.logger import get_logger
from src.models import Arc, BlowUp, Digraph, NeighborhoodProfile, RatVector

logger = get_logger(__name__)

INFINITY = math.inf
Distance = Union[int, float]


def build_digraph(n: int, arcs: Iterable[Tuple[int, int]]) -> Digraph:
    """
    Build a digraph from a vertex count and an arc list.

    Repeated arcs are merged; loops, digons and out-of-range endpoints are
    rejected.

    Raises:
        DigraphException: LOOP_ARC, DIGON_PAIR or VERTEX_OUT_OF_RANGE
    """
    arc_set = frozenset(Arc(int(t), int(h)) for t, h in arcs)
    return Digraph(n, arc_set)


def empty_digraph(n: int) -> Digraph:
    return Digraph(n, frozenset())


def out_distance(D: Digraph, u: int, v: int) -> Distance:
    """Length of a shortest directed path from u to v; INFINITY if none."""
    D.check_vertex(u)
    D.check_vertex(v)
    d = D.out_distance_rows[u][v]
    return INFINITY if d is None else d


def out_distance_layer(D: Digraph, v: int, k: int) -> FrozenSet[int]:
    """Vertices at out-distance exactly k from v."""
    D.check_vertex(v)
    row = D.out_distance_rows[v]
    return frozenset(u for u in D.vertices if row[u] == k)


def in_distance_layer(D: Digraph, v: int, k: int) -> FrozenSet[int]:
    """Vertices u with d(u, v) exactly k."""
    D.check_vertex(v)
    row = D.in_distance_rows[v]
    return frozenset(u for u in D.vertices if row[u] == k)


def neighborhoods(D: Digraph, v: int) -> NeighborhoodProfile:
    """First and second out- and in-neighborhoods of v."""
    return NeighborhoodProfile(
        vertex=v,
        nplus=out_distance_layer(D, v, 1),
        nplusplus=out_distance_layer(D, v, 2),
        nminus=in_distance_layer(D, v, 1),
        nminusminus=in_distance_layer(D, v, 2),
    )


def out_degree(D: Digraph, v: int) -> int:
    D.check_vertex(v)
    return len(D.successors[v])


def in_degree(D: Digraph, v: int) -> int:
    D.check_vertex(v)
    return len(D.predecessors[v])


def min_out_degree(D: Digraph) -> int:
    """Minimum out-degree; 0 for the digraph without vertices."""
    return min((len(D.successors[v]) for v in D.vertices), default=0)


def min_in_degree(D: Digraph) -> int:
    return min((len(D.predecessors[v]) for v in D.vertices), default=0)


def degree_table(D: Digraph) -> Tuple[Tuple[int, int, int], ...]:
    """(v, d+(v), d++(v)) for every vertex in ascending order."""
    table = []
    for v in D.vertices:
        row = D.out_distance_rows[v]
        dplus = sum(1 for u in D.vertices if row[u] == 1)
        dplusplus = sum(1 for u in D.vertices if row[u] == 2)
        table.append((v, dplus, dplusplus))
    return tuple(table)


def weight_of(w: RatVector, vertices: Iterable[int]) -> Fraction:
    """Total weight w(S) of a vertex set."""
    return sum((w[v - 1] for v in vertices), Fraction(0))


def reverse(D: Digraph) -> Digraph:
    """Digraph with every arc direction flipped."""
    return Digraph(D.n, frozenset(a.reversed() for a in D.arcs))


def delete_arc(D: Digraph, arc: Tuple[int, int]) -> Digraph:
    """
    Remove one arc, keeping the vertex set.

    Raises:
        DigraphException: ARC_NOT_PRESENT
    """
    arc = Arc(*arc)
    if arc not in D.arcs:
        raise DigraphException(
            f"Arc ({arc.tail},{arc.head}) is not present",
            DigraphErrorCode.ARC_NOT_PRESENT,
            {"arc": [arc.tail, arc.head]},
        )
    return Digraph(D.n, D.arcs - {arc})


def delete_vertex(D: Digraph, v: int) -> Tuple[Digraph, Dict[int, int]]:
    """
    Remove v and its incident arcs; remaining vertices are renumbered
    1..n-1 in their original order.

    Returns:
        The smaller digraph and the old -> new vertex map
    """
    D.check_vertex(v)
    index_map = {u: (u if u < v else u - 1) for u in D.vertices if u != v}
    arcs = frozenset(
        Arc(index_map[t], index_map[h]) for t, h in D.arcs if t != v and h != v
    )
    return Digraph(D.n - 1, arcs), index_map


def is_strongly_connected(D: Digraph) -> bool:
    """True iff every ordered pair of vertices has a finite out-distance."""
    if D.n == 0:
        return True
    # reachability from vertex 1 in D and in the reverse suffices
    return all(d is not None for d in D.out_distance_rows[1][1:]) and all(
        d is not None for d in D.in_distance_rows[1][1:]
    )


def degree_gap(D: Digraph, v: int) -> int:
    """a(v) = d−(v) − d−−(v)."""
    profile = neighborhoods(D, v)
    return profile.dminus - profile.dminusminus


def blow_up(D: Digraph, multiplicities: Sequence[int]) -> BlowUp:
    """
    Replace vertex i by an independent class V_i of multiplicities[i-1]
    vertices and each arc (i, j) by all arcs from V_i to V_j.

    New vertices are numbered class by class in the order of the original
    vertices.

    Raises:
        DigraphException: NON_POSITIVE_MULTIPLICITY, or VERTEX_OUT_OF_RANGE
            when the multiplicity count differs from n
    """
    if len(multiplicities) != D.n:
        raise DigraphException(
            f"Expected {D.n} multiplicities, got {len(multiplicities)}",
            DigraphErrorCode.VERTEX_OUT_OF_RANGE,
            {"n": D.n, "count": len(multiplicities)},
        )
    for i, m in enumerate(multiplicities, start=1):
        if m < 1:
            raise DigraphException(
                f"Multiplicity of vertex {i} must be positive, got {m}",
                DigraphErrorCode.NON_POSITIVE_MULTIPLICITY,
                {"vertex": i, "multiplicity": m},
            )

    classes = []
    class_of = []
    next_vertex = 1
    for i, m in enumerate(multiplicities, start=1):
        classes.append(tuple(range(next_vertex, next_vertex + m)))
        class_of.extend([i] * m)
        next_vertex += m

    arcs = frozenset(
        Arc(a, b) for t, h in D.arcs for a in classes[t - 1] for b in classes[h - 1]
    )
    logger.debug(
        "Blow-up of %r with multiplicities %s has %d vertices and %d arcs",
        D,
        list(multiplicities),
        next_vertex - 1,
        len(arcs),
    )
    return BlowUp(
        digraph=Digraph(next_vertex - 1, arcs),
        class_of=tuple(class_of),
        classes=tuple(classes),
    )


__all__ = [
    "INFINITY",
    "build_digraph",
    "empty_digraph",
    "out_distance",
    "out_distance_layer",
    "in_distance_layer",
    "neighborhoods",
    "out_degree",
    "in_degree",
    "min_out_degree",
    "min_in_degree",
    "degree_table",
    "weight_of",
    "reverse",
    "delete_arc",
    "delete_vertex",
    "is_strongly_connected",
    "degree_gap",
    "blow_up",
]
