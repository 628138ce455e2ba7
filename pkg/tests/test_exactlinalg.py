"""Exact rank against an independent oracle, plus structural invariances."""

from fractions import Fraction

from hypothesis import given, settings, strategies as st
import sympy

from qhyperplane.exactlinalg import SparseExactMatrix


def test_rank_zero_matrix():
    assert SparseExactMatrix(3, 4).rank() == 0


def test_rank_identity():
    m = SparseExactMatrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert m.rank() == 3
    assert m.kernel_dimension() == 0


def test_rank_proportional_rows():
    m = SparseExactMatrix.from_rows([[1, 2], [2, 4]])
    assert m.rank() == 1


def test_kernel_dimension_trivial_cases():
    assert SparseExactMatrix(2, 3).kernel_dimension() == 3
    assert SparseExactMatrix.from_rows([[1, 1]]).kernel_dimension() == 1


small_matrices = st.lists(
    st.lists(st.fractions(min_value=-3, max_value=3), min_size=1, max_size=5),
    min_size=1, max_size=5).filter(lambda rows: len({len(r) for r in rows}) == 1)


@settings(max_examples=60, deadline=None)
@given(small_matrices)
def test_rank_matches_sympy(rows):
    ours = SparseExactMatrix.from_rows(rows).rank()
    theirs = sympy.Matrix(rows).rank()
    assert ours == theirs


@settings(max_examples=40, deadline=None)
@given(small_matrices, st.randoms(use_true_random=False))
def test_rank_invariant_under_permutation(rows, rng):
    m = SparseExactMatrix.from_rows(rows)
    shuffled_rows = list(rows)
    rng.shuffle(shuffled_rows)
    cols = list(range(len(rows[0])))
    rng.shuffle(cols)
    permuted = [[row[c] for c in cols] for row in shuffled_rows]
    assert SparseExactMatrix.from_rows(permuted).rank() == m.rank()


@settings(max_examples=60, deadline=None)
@given(small_matrices)
def test_pivot_strategies_agree(rows):
    m = SparseExactMatrix.from_rows(rows)
    assert m.rank("shortest") == m.rank("first")


@settings(max_examples=60, deadline=None)
@given(small_matrices)
def test_rank_bounded_by_shape(rows):
    m = SparseExactMatrix.from_rows(rows)
    assert m.rank() <= min(m.n_rows, m.n_cols)


@settings(max_examples=40, deadline=None)
@given(small_matrices)
def test_kernel_basis_spans_the_kernel(rows):
    m = SparseExactMatrix.from_rows(rows)
    basis = m.kernel_basis()
    assert len(basis) == m.kernel_dimension()
    row_dicts = m.row_dicts()
    for vec in basis:
        for row in row_dicts:
            assert sum(row.get(c, Fraction(0)) * v for c, v in vec.items()) == 0


def test_matmul_and_is_zero():
    a = SparseExactMatrix.from_rows([[1, 2], [3, 4]])
    b = SparseExactMatrix.from_rows([[2, 0], [-1, 1]])
    prod = a.matmul(b)
    # the exact zero at (0, 0) is dropped, never stored
    assert prod.entries == {(0, 1): Fraction(2), (1, 0): Fraction(2),
                            (1, 1): Fraction(4)}
    assert SparseExactMatrix(2, 2).matmul(SparseExactMatrix(2, 2)).is_zero()


def test_rejects_out_of_range_entries():
    import pytest

    with pytest.raises(IndexError):
        SparseExactMatrix(1, 1, {(1, 0): Fraction(1)})
