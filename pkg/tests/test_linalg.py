import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lightsectors.linalg import (
    DimensionMismatchError,
    Matrix,
    Subspace,
    column_space,
    format_rational,
    kernel,
    parse_rational,
    quotient_dim,
    rank,
    rref,
    subspace_contains,
    subspace_equal,
    vector,
)

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def matrices(draw, max_dim=5, min_dim=0):
    rows = draw(st.integers(min_dim, max_dim))
    cols = draw(st.integers(min_dim, max_dim))
    grid = [
        [draw(rationals) for _ in range(cols)] for _ in range(rows)
    ]
    return Matrix.from_rows(grid, cols=cols)


@st.composite
def invertible_matrices(draw, n):
    """L D U with unit-triangular L, U and nonzero diagonal D: always invertible."""
    lower = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    upper = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i):
            lower[i][j] = draw(rationals)
            upper[j][i] = draw(rationals)
    diag = [draw(rationals.filter(lambda q: q != 0)) for _ in range(n)]
    d = Matrix.from_rows(
        [[diag[i] if i == j else Fraction(0) for j in range(n)] for i in range(n)],
        cols=n,
    )
    return Matrix.from_rows(lower, cols=n) @ d @ Matrix.from_rows(upper, cols=n)


# -- rational text form --------------------------------------------------


def test_parse_rational_canonical_forms():
    assert parse_rational("-3/7") == Fraction(-3, 7)
    assert parse_rational("0") == 0
    assert parse_rational("5") == 5


def test_parse_rational_reduces_on_input():
    q = parse_rational("2/4")
    assert q == Fraction(1, 2)
    assert format_rational(q) == "1/2"


@pytest.mark.parametrize("bad", ["1/-2", "+3", "1.5", " 1", "1 ", "", "1e3", "a", "1/0"])
def test_parse_rational_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


@given(q=rationals)
def test_format_parse_round_trip(q):
    assert parse_rational(format_rational(q)) == q


# -- rref ----------------------------------------------------------------


def test_rref_identity():
    m = Matrix.identity(3)
    reduced, rk = rref(m)
    assert reduced == m and rk == 3


def test_rref_zero():
    m = Matrix.zero(2, 4)
    reduced, rk = rref(m)
    assert reduced == m and rk == 0


def test_rref_dependent_rows():
    # Hand row-reduction: R2 := R2 - 2 R1 leaves a single pivot row.
    m = Matrix.from_rows([[1, 1], [2, 2]])
    reduced, rk = rref(m)
    assert rk == 1
    assert reduced == Matrix.from_rows([[1, 1], [0, 0]])


@given(m=matrices())
def test_rref_idempotent(m):
    reduced, rk = rref(m)
    again, rk2 = rref(reduced)
    assert again == reduced and rk2 == rk


@given(m=matrices())
def test_rank_nullity(m):
    assert rank(m) + kernel(m).dim == m.cols


@given(m=matrices())
def test_results_stay_in_lowest_terms(m):
    reduced, _ = rref(m)
    for row in reduced.entries:
        for q in row:
            assert q.denominator > 0
            assert math.gcd(q.numerator, q.denominator) == 1


# -- column space / kernel ----------------------------------------------


def test_column_space_single_column():
    sub = column_space(Matrix.from_columns([(1, 1)], rows=2))
    assert sub.basis == (vector([1, 1]),)


def test_column_space_identity_is_full():
    assert column_space(Matrix.identity(3)).is_full()


def test_column_space_two_columns():
    sub = column_space(Matrix.from_columns([(1, 1, 0), (0, 0, 1)], rows=3))
    assert sub.dim == 2
    assert sub.basis == (vector([1, 1, 0]), vector([0, 0, 1]))


def test_kernel_identity_and_zero():
    assert kernel(Matrix.identity(3)).dim == 0
    assert kernel(Matrix.zero(2, 3)) == Subspace.full(3)


def test_kernel_one_equation():
    # Solving x + y = 0 by hand gives the line through (1, -1).
    sub = kernel(Matrix.from_rows([[1, 1]]))
    assert sub.basis == (vector([1, -1]),)


@settings(max_examples=50)
@given(data=st.data(), m=matrices(max_dim=4, min_dim=1))
def test_column_space_invariant_under_invertible_recombination(data, m):
    if m.cols == 0:
        p = Matrix.identity(0)
    else:
        p = data.draw(invertible_matrices(m.cols))
    assert subspace_equal(column_space(m), column_space(m @ p))


@given(m=matrices(max_dim=4))
def test_kernel_vectors_annihilate(m):
    for v in kernel(m).basis:
        assert all(x == 0 for x in m.apply(v))


# -- subspace operations --------------------------------------------------


def test_subspace_canonical_uniqueness():
    a = Subspace.spanned_by([(1, 1, 0), (0, 0, 1)], 3)
    b = Subspace.spanned_by([(1, 1, 1), (0, 0, 2), (1, 1, 3)], 3)
    assert subspace_equal(a, b)
    assert a == b  # structural equality of canonical bases


def test_subspace_contains_scalar_multiple():
    sub = Subspace.spanned_by([(1, 1)], 2)
    assert subspace_contains(sub, (2, 2))
    assert not subspace_contains(sub, (1, 0))


def test_quotient_dim():
    assert quotient_dim(3, Subspace.spanned_by([(1, -1, 0)], 3)) == 2
    assert quotient_dim(4, Subspace.zero(4)) == 4


def test_quotient_dim_ambient_mismatch():
    with pytest.raises(DimensionMismatchError):
        quotient_dim(3, Subspace.zero(2))


def test_subspace_equal_ambient_mismatch():
    with pytest.raises(DimensionMismatchError):
        subspace_equal(Subspace.zero(2), Subspace.zero(3))


def test_contains_length_mismatch():
    with pytest.raises(DimensionMismatchError):
        Subspace.full(2).contains((1, 2, 3))


def test_non_canonical_basis_rejected():
    with pytest.raises(ValueError):
        Subspace(2, (vector([2, 0]),))


def test_matmul_shape_mismatch():
    with pytest.raises(DimensionMismatchError):
        Matrix.identity(2) @ Matrix.identity(3)
