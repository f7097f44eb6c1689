from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from qls_nakayama.cyclotomic import CycScalar, parse_scalar, root_of_unity
from qls_nakayama.exact_linalg import (
    DimensionMismatch,
    Echelon,
    Matrix,
    in_span,
    nullspace,
    rank,
    rref,
    span_equal,
    span_of,
)

small = st.integers(-3, 3)


@st.composite
def rational_matrices(draw):
    r = draw(st.integers(1, 6))
    c = draw(st.integers(1, 6))
    rows = draw(st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r))
    return rows


def to_matrix(rows, N=1):
    return Matrix([[CycScalar.rational(N, v) for v in row] for row in rows], N, len(rows[0]))


@given(rational_matrices())
def test_rank_matches_sympy(rows):
    assert rank(to_matrix(rows)) == sympy.Matrix(rows).rank()


@given(rational_matrices())
def test_rref_matches_sympy(rows):
    R, piv = rref(to_matrix(rows))
    S, spiv = sympy.Matrix(rows).rref()
    assert piv == list(spiv)
    for i in range(len(piv)):
        assert [Fraction(str(v)) for v in S.row(i)] == [R[i, j].coeffs[0] for j in range(R.cols)]


@given(rational_matrices())
def test_nullspace_is_kernel_of_right_size(rows):
    M = to_matrix(rows)
    basis = nullspace(M)
    assert len(basis) == M.cols - rank(M)
    for v in basis:
        assert all(x.is_zero() for x in M.apply(v))
    if basis:
        assert rank(Matrix(basis, 1)) == len(basis)


def test_cyclotomic_rank_drop():
    # rows (1, i) and (i, -1) are proportional over Q(i)
    i = root_of_unity(4, 1)
    one = CycScalar.one(4)
    M = Matrix([[one, i], [i, -one]], 4)
    assert rank(M) == 1
    (v,) = nullspace(M)
    assert all(x.is_zero() for x in M.apply(v))


def test_cyclotomic_full_rank_over_q_zeta3():
    w = root_of_unity(3, 1)
    one = CycScalar.one(3)
    # Vandermonde in 1, w, w^2
    M = Matrix([[one, one, one], [one, w, w * w], [one, w * w, w ** 4]], 3)
    assert rank(M) == 3
    assert nullspace(M) == []


def test_ragged_and_mismatched_shapes():
    one = CycScalar.one(1)
    with pytest.raises(DimensionMismatch):
        Matrix([[one], [one, one]], 1)
    with pytest.raises(DimensionMismatch):
        Matrix.identity(2, 1).apply([one])


@given(rational_matrices())
def test_echelon_rank_agrees_with_dense(rows):
    ech = span_of([{j: CycScalar.rational(1, v) for j, v in enumerate(row) if v} for row in rows],
                  dim=len(rows[0]))
    assert ech.rank == rank(to_matrix(rows))


def test_echelon_membership_and_span_equality():
    N = 4
    i = root_of_unity(N, 1)
    one = CycScalar.one(N)
    a = {0: one, 1: i}
    b = {1: one, 2: -i}
    assert in_span({0: one, 1: i + one, 2: -i}, [a, b])
    assert not in_span({2: one}, [a, b])
    ech = Echelon(3)
    assert ech.add(a) and ech.add(b) and not ech.add({0: i, 1: -one})
    assert not ech.is_full()
    assert span_equal([a, b], [{0: one, 1: i + one, 2: -i}, b])
    assert not span_equal([a], [b])


def test_echelon_with_parsed_scalars():
    N = 8
    v = {0: parse_scalar("z^2 + 1/2", N), 3: parse_scalar("z - z^3", N)}
    ech = Echelon(4)
    ech.add(v)
    w = {k: c * parse_scalar("3*z^5 - 2", N) for k, c in v.items()}
    assert ech.contains(w)
