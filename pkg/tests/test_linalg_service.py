"""Tests for exact products, inversion and the second-neighborhood matrix."""

import pytest
from hypothesis import given
from hypothesis import settings as hypothesis_settings
from hypothesis import strategies as st

from src.core.error_codes import LinalgErrorCode
from src.core.exceptions import LinalgException
from src.models import RatMatrix, RatVector, integer_scaling
from src.services.digraph_service import neighborhoods, reverse
from src.services.enumeration_service import digraph_at_index, digraph_count
from src.services.linalg_service import (
    Invertible,
    Singular,
    invert,
    is_nonnegative,
    mat_mul,
    mat_vec,
    null_vector,
    second_neighborhood_matrix,
    transpose,
)


def test_matrix_of_cycle(cycle3):
    S = second_neighborhood_matrix(cycle3)
    assert S == RatMatrix.from_rows([[0, 1, -1], [-1, 0, 1], [1, -1, 0]])


def test_matrix_of_out_star(out_star):
    S = second_neighborhood_matrix(out_star)
    assert S == RatMatrix.from_rows([[0, 1, 1], [0, 0, 0], [0, 0, 0]])


def test_matrix_of_reverse_is_transpose(cycle3, transitive3):
    for D in (cycle3, transitive3):
        assert second_neighborhood_matrix(reverse(D)) == transpose(
            second_neighborhood_matrix(D)
        )


def test_mat_vec_dimension_mismatch():
    with pytest.raises(LinalgException) as exc_info:
        mat_vec(RatMatrix.identity(2), RatVector.ones(3))
    assert exc_info.value.error_code == LinalgErrorCode.DIMENSION_MISMATCH


def test_mat_mul_dimension_mismatch():
    with pytest.raises(LinalgException) as exc_info:
        mat_mul(RatMatrix.zeros(2, 3), RatMatrix.zeros(2, 3))
    assert exc_info.value.error_code == LinalgErrorCode.DIMENSION_MISMATCH


def test_invert_not_square():
    with pytest.raises(LinalgException) as exc_info:
        invert(RatMatrix.zeros(2, 3))
    assert exc_info.value.error_code == LinalgErrorCode.NOT_SQUARE


def test_invert_two_by_two():
    M = RatMatrix.from_rows([[2, -1], [-1, 2]])
    result = invert(M)
    assert isinstance(result, Invertible)
    assert result.inverse == RatMatrix.from_rows([["2/3", "1/3"], ["1/3", "2/3"]])


def test_invert_needs_row_swap():
    M = RatMatrix.from_rows([[0, 1], [1, 0]])
    result = invert(M)
    assert isinstance(result, Invertible)
    assert result.inverse == M


def test_invert_empty_matrix():
    result = invert(RatMatrix.zeros(0, 0))
    assert isinstance(result, Invertible)
    assert result.inverse.shape == (0, 0)


def test_cycle_matrix_is_singular(cycle3):
    result = invert(second_neighborhood_matrix(cycle3))
    assert isinstance(result, Singular)
    assert result.null_vector == RatVector.of([1, 1, 1])


def test_path_matrix_null_vector(path2):
    result = invert(second_neighborhood_matrix(path2))
    assert isinstance(result, Singular)
    assert result.null_vector == RatVector.of([1, 0])


def test_null_vector_of_invertible_matrix_is_none():
    assert null_vector(RatMatrix.identity(3)) is None


def test_is_nonnegative():
    assert is_nonnegative(RatMatrix.identity(2))
    assert not is_nonnegative(RatMatrix.from_rows([[1, "-1/5"]]))


def test_integer_scaling():
    assert integer_scaling(RatVector.of(["1/2", "1/3", 0])) == (3, 2, 0)
    assert integer_scaling(RatVector.of([4, 6])) == (2, 3)
    assert integer_scaling(RatVector.zeros(2)) == (0, 0)


def test_not_le_is_existential():
    u = RatVector.of([1, -1])
    assert u.not_le(0)
    assert not u.gt(0)
    assert u.not_gt(0)


@pytest.mark.property_based
@hypothesis_settings(max_examples=80, deadline=None)
@given(st.integers(min_value=0, max_value=digraph_count(4) - 1))
def test_inverse_or_null_vector_is_exact(index):
    S = second_neighborhood_matrix(digraph_at_index(4, index))
    result = invert(S)
    if isinstance(result, Invertible):
        assert mat_mul(S, result.inverse) == RatMatrix.identity(4)
        assert mat_mul(result.inverse, S) == RatMatrix.identity(4)
    else:
        assert not result.null_vector.is_zero()
        assert mat_vec(S, result.null_vector).is_zero()


@pytest.mark.property_based
@hypothesis_settings(max_examples=50, deadline=None)
@given(
    st.lists(
        st.lists(
            st.fractions(min_value=-3, max_value=3, max_denominator=5),
            min_size=3,
            max_size=3,
        ),
        min_size=3,
        max_size=3,
    )
)
def test_invert_random_rational_matrices(rows):
    M = RatMatrix.from_rows(rows)
    result = invert(M)
    if isinstance(result, Invertible):
        assert mat_mul(M, result.inverse) == RatMatrix.identity(3)
    else:
        assert mat_vec(M, result.null_vector).is_zero()


def test_reverse_gives_transpose_for_every_small_digraph():
    for n in range(1, 5):
        for index in range(digraph_count(n)):
            D = digraph_at_index(n, index)
            S = second_neighborhood_matrix(D)
            assert second_neighborhood_matrix(reverse(D)) == transpose(S)


def test_row_sums_are_degree_differences():
    for n in range(1, 5):
        for index in range(digraph_count(n)):
            D = digraph_at_index(n, index)
            row_sums = mat_vec(second_neighborhood_matrix(D), RatVector.ones(n))
            for v in D.vertices:
                profile = neighborhoods(D, v)
                assert row_sums[v - 1] == profile.dplus - profile.dplusplus
