from itertools import product as cartesian

from hypothesis import given, settings, strategies as st

import pytest

from qsymshuffle.basis import (
    build_y_basis,
    c_entry,
    c_matrix,
    c_matrix_by_expansion,
    column_expansion,
    convert_U_to_Z,
    convert_Z_to_U,
    d_matrix,
    d_matrix_by_expansion,
    d_matrix_by_inversion,
    d_matrix_by_projection,
    m_product,
    u_product,
    y_matrix,
    y_shuffle_check,
    z_product,
    z_product_via_u,
)
from qsymshuffle.combinatorics import compositions_of, is_anti_lyndon, word_of_composition
from qsymshuffle.linalg import LinearCombination, matrix_invert
from qsymshuffle.wsym import c_by_counting_table

L = LinearCombination


def test_y_basis_small():
    assert build_y_basis(2)[(1, 1)] == L({(1, 1): 1})
    assert build_y_basis(3)[(1, 2)] == L({(1, 2): 1, (2, 1): 1})
    assert build_y_basis(4)[(1, 2, 1)] == L({(1, 2, 1): 1, (2, 1, 1): 1})


@pytest.mark.parametrize("n", range(1, 8))
def test_y_basis_fixes_anti_lyndon(n):
    y = build_y_basis(n)
    for I in compositions_of(n):
        if is_anti_lyndon(I):
            assert y[I] == L({I: 1})


def test_y_basis_has_negative_entries_from_degree_six():
    # Triangularity and integrality survive; nonnegativity does not.
    y = build_y_basis(6)
    assert y[(1, 2, 2, 1)] == L({(1, 2, 2, 1): 1, (2, 1, 2, 1): 1, (3, 1, 1, 1): -6})
    for n in range(1, 6):
        for k in range(1, n + 1):
            assert all(x >= 0 for row in y_matrix(n, k).entries for x in row)


def test_y_shuffle_law_on_words():
    y = build_y_basis(4)
    w = y.word_element((1, 2, 1))
    assert w == L({word_of_composition((1, 2, 1)): 1, word_of_composition((2, 1, 1)): 1})
    for I, J in cartesian(compositions_of(2), compositions_of(2)):
        assert y_shuffle_check(I, J)


def test_y_matrix_examples():
    assert y_matrix(4, 2).entries == ((1, 2, 1), (0, 1, 1), (0, 0, 1))
    assert y_matrix(5, 2).entries == ((1, 0, 6, 1), (0, 1, 2, 1), (0, 0, 1, 1), (0, 0, 0, 1))
    assert y_matrix(6, 1).entries == ((1,),)


def test_c_entry_examples():
    assert c_entry((2, 2), (3, 1)) == 2
    assert c_entry((3, 1), (2, 2)) == 0
    assert c_entry((5,), (5,)) == 1


def test_c_and_d_matrices():
    assert d_matrix(4, 2).entries == ((1, -2, 1), (0, 1, -1), (0, 0, 1))
    assert d_matrix(5, 1).entries == ((1,),)
    c = c_matrix(5, 3)
    assert c.index == ((3, 1, 1), (2, 2, 1), (2, 1, 2), (1, 3, 1), (1, 2, 2), (1, 1, 3))
    assert c.is_lower_unitriangular()


@pytest.mark.parametrize("n", range(1, 7))
def test_d_is_inverse_transpose_of_c(n):
    for k in range(1, n + 1):
        c, d = c_matrix(n, k), d_matrix(n, k)
        assert d == matrix_invert(c).transpose()
        assert d.is_upper_unitriangular()
        assert d == d_matrix_by_inversion(n, k) == d_matrix_by_expansion(n, k) == d_matrix_by_projection(n, k)
        assert c == c_matrix_by_expansion(n, k)


def test_column_expansion():
    assert column_expansion((3, 1)) == L({(3, 1): 1, (2, 2): 2, (1, 3): 1})
    assert column_expansion((2, 2)) == L({(2, 2): 1, (1, 3): 1})
    assert column_expansion((1, 1, 1)) == L({(1, 1, 1): 1})


def test_conversions():
    assert convert_U_to_Z((1, 1, 2)) == L({(1, 1, 2): 1, (1, 2, 1): 1, (2, 1, 1): 1})
    assert convert_U_to_Z((1, 2, 1)) == L({(1, 2, 1): 1, (2, 1, 1): 1})
    assert convert_U_to_Z((2, 1, 1)) == L({(2, 1, 1): 1})
    assert convert_Z_to_U((2, 1)) == L({(2, 1): 1})
    assert convert_Z_to_U((1, 2)) == L({(1, 2): 1, (2, 1): -1})


def test_worked_products():
    assert z_product((1,), (2, 1)) == L({(1, 2, 1): 1, (2, 1, 1): 3})
    assert z_product((1,), (1, 2)) == L({(1, 1, 2): 2, (1, 2, 1): 2})
    assert z_product((1,), (1,)) == L({(1, 1): 2})
    assert m_product((2, 1), (1, 2))[(2, 1, 1, 2)] == 2
    assert u_product((1,), (1,)) == L({(1, 1): 2})


@pytest.mark.parametrize("total", range(2, 6))
def test_z_product_two_ways(total):
    for a in range(1, total):
        for I in compositions_of(a):
            for J in compositions_of(total - a):
                assert z_product(I, J) == z_product_via_u(I, J)


def test_c_entry_matches_set_partition_count_degree_8():
    counts = c_by_counting_table(8)
    for k in range(1, 9):
        for I in compositions_of(8, k):
            for J in compositions_of(8, k):
                assert counts.get((I, J), 0) == c_entry(I, J)


compositions = st.integers(1, 3).flatmap(lambda n: st.sampled_from(compositions_of(n)))


@settings(max_examples=60, deadline=None)
@given(compositions, compositions, compositions)
def test_z_product_associative_and_commutative(I, J, K):
    assert z_product(I, J) == z_product(J, I)
    left = sum((z_product(x, K) * c for x, c in z_product(I, J).items()), L())
    right = sum((z_product(I, x) * c for x, c in z_product(J, K).items()), L())
    assert left == right
    assert all(isinstance(c, int) and c > 0 for c in left.values())
