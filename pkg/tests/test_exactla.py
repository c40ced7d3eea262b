from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from coendcheck.exactla import (Mat, Q, SingularMatrixError, factor_permutation, fmt,
                                inverse, kernel, kron, kron_all, quotient_by, rank, rref,
                                solve, swap_map, transpose_dual)
from strategies import any_mat, invertible, mats, rationals


def naive_matmul(a, b):
    return Mat(a.rows, b.cols, [sum(a[i, k] * b[k, j] for k in range(a.cols))
                                for i in range(a.rows) for j in range(b.cols)])


def sympy_rank(m):
    return sympy.Matrix(m.rows, m.cols, [sympy.Rational(x) for x in m.entries]).rank()


class TestScalars:
    def test_canonical_forms(self):
        assert Q("6/4") == Fraction(3, 2)
        assert type(Q("4/2")) is int and Q("4/2") == 2
        assert Q(Fraction(0, 5)) == 0 and type(Q(Fraction(0, 5))) is int

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            Q(0.5)

    def test_serialization(self):
        assert fmt(Fraction(-3, 6)) == "-1/2"
        assert fmt(7) == "7"
        assert fmt(Fraction(8, 4)) == "2"

    @given(rationals)
    def test_fmt_round_trip(self, x):
        assert Q(fmt(x)) == x


class TestKernel:
    def test_rank_one_symmetric(self):
        k = kernel(Mat.from_rows([[1, 1], [1, 1]]))
        assert k == Mat.column([1, -1])

    def test_injective(self):
        assert kernel(Mat.identity(3)).shape == (3, 0)

    def test_zero_map(self):
        assert kernel(Mat.zeros(2, 3)) == Mat.identity(3)

    @given(any_mat())
    def test_basis_of_null_space(self, m):
        k = kernel(m)
        assert (m @ k).is_zero()
        assert k.cols == m.cols - sympy_rank(m)
        assert rank(k) == k.cols

    @given(any_mat())
    def test_deterministic(self, m):
        assert kernel(m) == kernel(Mat(m.rows, m.cols, m.entries))


class TestQuotient:
    def test_collapse_difference(self):
        assert quotient_by(2, Mat.column([1, -1])).q == 1

    def test_no_relations(self):
        qs = quotient_by(3, Mat.zeros(3, 0))
        assert qs.q == 3
        assert qs.proj == Mat.identity(3) and qs.sect == Mat.identity(3)

    def test_full_collapse(self):
        assert quotient_by(4, Mat.identity(4)).q == 0

    def test_row_mismatch(self):
        with pytest.raises(ValueError):
            quotient_by(3, Mat.zeros(2, 1))

    @given(any_mat(5))
    def test_invariants(self, rel):
        qs = quotient_by(rel.rows, rel)
        assert qs.q == rel.rows - sympy_rank(rel)
        assert (qs.proj @ qs.sect).is_identity()
        assert (qs.proj @ rel).is_zero()
        assert rank(qs.proj) == qs.q
        # sections are standard basis vectors
        for t, c in enumerate(qs.free):
            assert qs.sect.col_values(t) == Mat.unit_column(rel.rows, c).entries


class TestKron:
    def test_identities(self):
        assert kron(Mat.identity(2), Mat.identity(3)) == Mat.identity(6)

    @given(mats(2, 3))
    def test_scalar(self, m):
        assert kron(Mat.from_rows([[2]]), m) == m * 2

    @given(mats(2, 2), mats(2, 2), mats(2, 2), mats(2, 2))
    def test_mixed_product(self, a, b, c, d):
        left = naive_matmul(kron(a, b), kron(c, d))
        assert left == kron(naive_matmul(a, c), naive_matmul(b, d))

    @given(any_mat(3), any_mat(3))
    def test_index_convention(self, a, b):
        k = kron(a, b)
        for i in range(a.rows):
            for j in range(a.cols):
                for p in range(b.rows):
                    for q in range(b.cols):
                        assert k[i * b.rows + p, j * b.cols + q] == a[i, j] * b[p, q]

    @given(any_mat(2), any_mat(2), any_mat(2))
    def test_associative(self, a, b, c):
        assert kron(kron(a, b), c) == kron(a, kron(b, c)) == kron_all(a, b, c)


class TestTransposeDual:
    def test_identity(self):
        assert transpose_dual(Mat.identity(3)) == Mat.identity(3)

    @given(mats(3, 3), mats(3, 3))
    def test_reverses_products(self, a, b):
        assert transpose_dual(naive_matmul(a, b)) == naive_matmul(b.T, a.T)

    @given(any_mat())
    def test_involution(self, m):
        assert transpose_dual(transpose_dual(m)) == m


class TestSwap:
    @pytest.mark.parametrize("n", [0, 1, 4])
    def test_trivial_factor(self, n):
        assert swap_map(1, n) == Mat.identity(n)

    def test_involution(self):
        s = swap_map(2, 2)
        assert (s @ s).is_identity()

    @given(mats(3, 3), mats(2, 2))
    def test_naturality(self, a, b):
        assert naive_matmul(swap_map(3, 2), kron(a, b)) == naive_matmul(kron(b, a), swap_map(3, 2))

    @given(st.integers(1, 3), st.integers(1, 3))
    def test_inverse_is_reverse_swap(self, m, n):
        assert (swap_map(n, m) @ swap_map(m, n)).is_identity()

    @given(st.integers(1, 3), st.integers(1, 3), st.integers(1, 3))
    def test_factor_permutation_matches_swap(self, a, b, c):
        dims = [a, b, c]
        p = Mat.identity(a * b * c).take_rows(factor_permutation(dims, [0, 2, 1]))
        assert p == kron(Mat.identity(a), swap_map(b, c))


class TestSolving:
    @given(invertible(3))
    def test_inverse(self, m):
        assert (m @ inverse(m)).is_identity() and (inverse(m) @ m).is_identity()

    def test_singular(self):
        with pytest.raises(SingularMatrixError):
            inverse(Mat.from_rows([[1, 2], [2, 4]]))

    @given(mats(3, 4), mats(4, 1))
    def test_solve_consistent(self, a, x):
        b = a @ x
        y = solve(a, b)
        assert y is not None and a @ y == b

    def test_solve_inconsistent(self):
        assert solve(Mat.from_rows([[1, 1], [1, 1]]), Mat.column([1, 2])) is None

    @given(any_mat(4))
    def test_rref_leftmost_pivots(self, m):
        r, piv = rref(m)
        assert piv == sorted(piv)
        for i, p in enumerate(piv):
            assert r[i, p] == 1
            assert all(r[i, j] == 0 for j in range(p))
            assert all(r[k, p] == 0 for k in range(r.rows) if k != i)
        assert len(piv) == sympy_rank(m)


def test_matrices_are_immutable():
    m = Mat.identity(2)
    with pytest.raises(AttributeError):
        m.rows = 3


def test_rejects_bad_entry_count():
    with pytest.raises(ValueError):
        Mat(2, 2, [1, 2, 3])
