"""
Enumeration Service

Deterministic, index-addressable streams of labeled digraphs and
tournaments, seeded random digraphs, and brute-force canonical forms.

Unordered pairs {i, j} (i < j) are listed lexicographically: (1,2), (1,3),
..., (n-1,n). The index of a labeled digraph is its pair-state word read as a
number with the first pair as the most significant digit. Pair states are
0 = no arc, 1 = i -> j, 2 = j -> i; tournaments use the digits 1 and 2 only,
written in base 2 as 0 = i -> j, 1 = j -> i.
"""

import itertools
import math
from fractions import Fraction
from typing import Iterator, List, Sequence, Tuple, Union

import numpy as np

from src.core.config import settings
from src.core.error_codes import EnumerationErrorCode
from src.core.exceptions import EnumerationException
from src.core.logger import get_logger
from src.models import Arc, Digraph, as_fraction

logger = get_logger(__name__)

ProbabilityLike = Union[Fraction, int, str]

# numpy integer draws are bounded by int64
_MAX_DENOMINATOR = 2**62


def vertex_pairs(n: int) -> List[Tuple[int, int]]:
    return list(itertools.combinations(range(1, n + 1), 2))


def _check_n(n: int) -> None:
    if n < 1:
        raise EnumerationException(
            f"Vertex count must be at least 1, got {n}",
            EnumerationErrorCode.INVALID_SPEC,
            {"n": n},
        )


def check_cap(n: int, cap: int, what: str, allow_oversize: bool = False) -> None:
    """
    Raises:
        EnumerationException: SIZE_CAP_EXCEEDED unless allow_oversize
    """
    if n <= cap:
        return
    if not allow_oversize:
        raise EnumerationException(
            f"{what} is capped at n = {cap}, got n = {n}",
            EnumerationErrorCode.SIZE_CAP_EXCEEDED,
            {"n": n, "cap": cap, "what": what},
        )
    logger.warning("%s cap n = %d overridden for n = %d", what, cap, n)


def digraph_count(n: int) -> int:
    return 3 ** math.comb(n, 2)


def tournament_count(n: int) -> int:
    return 2 ** math.comb(n, 2)


def _from_states(
    n: int, pairs: Sequence[Tuple[int, int]], states: Sequence[int]
) -> Digraph:
    arcs = []
    for (i, j), state in zip(pairs, states):
        if state == 1:
            arcs.append(Arc(i, j))
        elif state == 2:
            arcs.append(Arc(j, i))
    return Digraph(n, frozenset(arcs))


def _digits(index: int, base: int, width: int) -> List[int]:
    digits = [0] * width
    for k in range(width - 1, -1, -1):
        index, digits[k] = divmod(index, base)
    return digits


def digraph_at_index(n: int, index: int) -> Digraph:
    """The index-th digraph of enumerate_digraphs(n)."""
    _check_n(n)
    pairs = vertex_pairs(n)
    if not 0 <= index < digraph_count(n):
        raise EnumerationException(
            f"Index {index} outside 0..{digraph_count(n) - 1}",
            EnumerationErrorCode.INVALID_SPEC,
            {"n": n, "index": index},
        )
    return _from_states(n, pairs, _digits(index, 3, len(pairs)))


def tournament_at_index(n: int, index: int) -> Digraph:
    """The index-th tournament of enumerate_tournaments(n)."""
    _check_n(n)
    pairs = vertex_pairs(n)
    if not 0 <= index < tournament_count(n):
        raise EnumerationException(
            f"Index {index} outside 0..{tournament_count(n) - 1}",
            EnumerationErrorCode.INVALID_SPEC,
            {"n": n, "index": index},
        )
    return _from_states(n, pairs, [d + 1 for d in _digits(index, 2, len(pairs))])


def enumerate_digraphs(n: int, allow_oversize: bool = False) -> Iterator[Digraph]:
    """
    All 3^(n(n-1)/2) labeled digraphs on n vertices in index order.

    Raises:
        EnumerationException: INVALID_SPEC or SIZE_CAP_EXCEEDED
    """
    _check_n(n)
    check_cap(n, settings.enumeration__max_all_n, "Digraph enumeration", allow_oversize)
    pairs = vertex_pairs(n)
    for states in itertools.product((0, 1, 2), repeat=len(pairs)):
        yield _from_states(n, pairs, states)


def enumerate_tournaments(n: int, allow_oversize: bool = False) -> Iterator[Digraph]:
    """All 2^(n(n-1)/2) labeled tournaments on n vertices in index order."""
    _check_n(n)
    check_cap(
        n,
        settings.enumeration__max_tournament_n,
        "Tournament enumeration",
        allow_oversize,
    )
    pairs = vertex_pairs(n)
    for states in itertools.product((1, 2), repeat=len(pairs)):
        yield _from_states(n, pairs, states)


def validate_probabilities(
    p_forward: ProbabilityLike, p_backward: ProbabilityLike
) -> Tuple[Fraction, Fraction]:
    """
    Raises:
        EnumerationException: INVALID_PROBABILITY
    """
    try:
        pf, pb = as_fraction(p_forward), as_fraction(p_backward)
    except (ValueError, ZeroDivisionError) as exc:
        raise EnumerationException.wrap(
            exc,
            f"Unreadable probabilities {p_forward!r}, {p_backward!r}",
            EnumerationErrorCode.INVALID_PROBABILITY,
        ) from exc
    if pf < 0 or pb < 0 or pf + pb > 1:
        raise EnumerationException(
            f"Need p_forward, p_backward >= 0 with sum <= 1, got {pf}, {pb}",
            EnumerationErrorCode.INVALID_PROBABILITY,
            {"p_forward": str(pf), "p_backward": str(pb)},
        )
    if math.lcm(pf.denominator, pb.denominator) > _MAX_DENOMINATOR:
        raise EnumerationException(
            "Probability denominators are too large for exact integer draws",
            EnumerationErrorCode.INVALID_PROBABILITY,
            {"p_forward": str(pf), "p_backward": str(pb)},
        )
    return pf, pb


def _sample(
    n: int, pf: Fraction, pb: Fraction, seed_sequence: np.random.SeedSequence
) -> Digraph:
    rng = np.random.Generator(np.random.PCG64(seed_sequence))
    denominator = math.lcm(pf.denominator, pb.denominator)
    forward = pf * denominator
    either = (pf + pb) * denominator
    arcs = []
    # one uniform integer per pair compared against exact thresholds
    for i, j in vertex_pairs(n):
        r = int(rng.integers(0, denominator))
        if r < forward:
            arcs.append(Arc(i, j))
        elif r < either:
            arcs.append(Arc(j, i))
    return Digraph(n, frozenset(arcs))


def random_digraph(
    n: int, p_forward: ProbabilityLike, p_backward: ProbabilityLike, seed: int
) -> Digraph:
    """
    Each pair i < j independently becomes i -> j with probability p_forward,
    j -> i with probability p_backward, and stays empty otherwise.

    Deterministic for a fixed seed: PCG64 seeded by SeedSequence(seed).
    """
    _check_n(n)
    pf, pb = validate_probabilities(p_forward, p_backward)
    return _sample(n, pf, pb, np.random.SeedSequence(seed))


def random_digraph_at_index(
    n: int,
    p_forward: ProbabilityLike,
    p_backward: ProbabilityLike,
    seed: int,
    index: int,
) -> Digraph:
    """The index-th sample of a random sweep, from SeedSequence(seed, (index,))."""
    _check_n(n)
    pf, pb = validate_probabilities(p_forward, p_backward)
    return _sample(n, pf, pb, np.random.SeedSequence(seed, spawn_key=(index,)))


def canonical_key(D: Digraph, allow_oversize: bool = False) -> Tuple[Arc, ...]:
    """Lexicographically least sorted arc tuple over all relabelings."""
    check_cap(
        D.n, settings.enumeration__max_canonical_n, "Canonicalization", allow_oversize
    )
    best = None
    for perm in itertools.permutations(range(1, D.n + 1)):
        key = tuple(sorted(Arc(perm[t - 1], perm[h - 1]) for t, h in D.arcs))
        if best is None or key < best:
            best = key
    assert best is not None
    return best


def canonicalize(D: Digraph, allow_oversize: bool = False) -> Digraph:
    """
    Isomorphism-invariant representative of D.

    Raises:
        EnumerationException: SIZE_CAP_EXCEEDED
    """
    return Digraph(D.n, frozenset(canonical_key(D, allow_oversize)))


__all__ = [
    "vertex_pairs",
    "check_cap",
    "digraph_count",
    "tournament_count",
    "digraph_at_index",
    "tournament_at_index",
    "enumerate_digraphs",
    "enumerate_tournaments",
    "validate_probabilities",
    "random_digraph",
    "random_digraph_at_index",
    "canonical_key",
    "canonicalize",
]
