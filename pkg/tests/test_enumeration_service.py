"""Tests for labeled enumeration, seeded sampling and canonical forms."""

import itertools

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import settings as hypothesis_settings
from hypothesis import strategies as st

from src.core.error_codes import EnumerationErrorCode
from src.core.exceptions import EnumerationException
from src.models import Digraph
from src.services import enumeration_service
from src.services.enumeration_service import (
    canonical_key,
    canonicalize,
    check_cap,
    digraph_at_index,
    digraph_count,
    enumerate_digraphs,
    enumerate_tournaments,
    random_digraph,
    random_digraph_at_index,
    tournament_at_index,
    tournament_count,
    validate_probabilities,
    vertex_pairs,
)


def to_networkx(D: Digraph) -> nx.DiGraph:
    G = nx.DiGraph()
    G.add_nodes_from(D.vertices)
    G.add_edges_from(D.arcs)
    return G


def test_vertex_pairs_order():
    assert vertex_pairs(3) == [(1, 2), (1, 3), (2, 3)]
    assert vertex_pairs(1) == []


def test_counts():
    assert digraph_count(4) == 729
    assert tournament_count(4) == 64
    assert tournament_count(6) == 32768
    assert sum(1 for _ in enumerate_digraphs(3)) == 27
    assert sum(1 for _ in enumerate_tournaments(4)) == 64


def test_first_and_last_indices():
    assert digraph_at_index(3, 0).arc_count == 0
    assert digraph_at_index(3, 1).arcs == {(2, 3)}
    assert digraph_at_index(3, 2).arcs == {(3, 2)}
    assert digraph_at_index(3, 26).arcs == {(2, 1), (3, 1), (3, 2)}
    assert tournament_at_index(3, 0).arcs == {(1, 2), (1, 3), (2, 3)}
    assert tournament_at_index(3, 7).arcs == {(2, 1), (3, 1), (3, 2)}


def test_index_addressing_matches_stream():
    for index, D in enumerate(enumerate_digraphs(3)):
        assert digraph_at_index(3, index) == D
    for index, D in enumerate(enumerate_tournaments(3)):
        assert tournament_at_index(3, index) == D


def test_index_out_of_range():
    with pytest.raises(EnumerationException) as exc_info:
        digraph_at_index(2, 3)
    assert exc_info.value.error_code == EnumerationErrorCode.INVALID_SPEC


def test_invalid_vertex_count():
    with pytest.raises(EnumerationException) as exc_info:
        next(enumerate_digraphs(0))
    assert exc_info.value.error_code == EnumerationErrorCode.INVALID_SPEC


def test_size_caps():
    with pytest.raises(EnumerationException) as exc_info:
        next(enumerate_digraphs(9))
    assert exc_info.value.error_code == EnumerationErrorCode.SIZE_CAP_EXCEEDED
    assert exc_info.value.details["cap"] == 6
    with pytest.raises(EnumerationException):
        next(enumerate_tournaments(8))


def test_cap_override_warns(monkeypatch):
    warnings = []
    monkeypatch.setattr(
        enumeration_service.logger, "warning", lambda *args: warnings.append(args)
    )
    check_cap(9, 6, "Digraph enumeration", allow_oversize=True)
    assert warnings and "overridden" in warnings[0][0]


def test_oversize_enumeration_allowed(override_settings):
    override_settings(enumeration__max_all_n=2)
    assert sum(1 for _ in enumerate_digraphs(3, allow_oversize=True)) == 27


@pytest.mark.parametrize(
    "p_forward, p_backward",
    [("-1/3", "1/3"), ("2/3", "2/3"), ("1/0", "0"), ("abc", "0")],
)
def test_invalid_probabilities(p_forward, p_backward):
    with pytest.raises(EnumerationException) as exc_info:
        validate_probabilities(p_forward, p_backward)
    assert exc_info.value.error_code == EnumerationErrorCode.INVALID_PROBABILITY


def test_random_digraph_is_deterministic():
    first = random_digraph(6, "1/3", "1/3", seed=42)
    second = random_digraph(6, "1/3", "1/3", seed=42)
    assert first == second


def test_random_digraph_extremes():
    complete = random_digraph(5, 1, 0, seed=7)
    assert complete.arcs == set(vertex_pairs(5))
    empty = random_digraph(5, 0, 0, seed=7)
    assert empty.arc_count == 0
    reverse_complete = random_digraph(5, 0, 1, seed=7)
    assert reverse_complete.arcs == {(j, i) for i, j in vertex_pairs(5)}


def test_random_stream_indices_are_independent():
    samples = [random_digraph_at_index(6, "1/3", "1/3", 3, k) for k in range(5)]
    again = [random_digraph_at_index(6, "1/3", "1/3", 3, k) for k in range(5)]
    assert samples == again
    assert len(set(samples)) > 1


def test_canonicalize_relabelings():
    D = Digraph(3, frozenset({(1, 2), (2, 3)}))
    for perm in itertools.permutations([1, 2, 3]):
        relabeled = Digraph(
            3, frozenset((perm[t - 1], perm[h - 1]) for t, h in D.arcs)
        )
        assert canonicalize(relabeled) == canonicalize(D)
    assert canonical_key(D) == ((1, 2), (2, 3))


def test_canonical_cap(override_settings):
    override_settings(enumeration__max_canonical_n=2)
    with pytest.raises(EnumerationException) as exc_info:
        canonical_key(Digraph(3, frozenset()))
    assert exc_info.value.error_code == EnumerationErrorCode.SIZE_CAP_EXCEEDED


def test_isomorphism_class_counts():
    assert len({canonical_key(D) for D in enumerate_digraphs(3)}) == 7
    assert len({canonical_key(D) for D in enumerate_tournaments(4)}) == 4


@pytest.mark.property_based
@hypothesis_settings(max_examples=60, deadline=None)
@given(
    st.integers(min_value=0, max_value=digraph_count(4) - 1),
    st.integers(min_value=0, max_value=digraph_count(4) - 1),
)
def test_canonical_key_matches_networkx_isomorphism(i, j):
    D, E = digraph_at_index(4, i), digraph_at_index(4, j)
    same_key = canonical_key(D) == canonical_key(E)
    assert same_key == nx.is_isomorphic(to_networkx(D), to_networkx(E))
