import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from detdio.errors import CapExceeded, DimensionMismatch, NotSquare, ParseError, ShapeError
from detdio.matrix import (
    DEFAULT_MINOR_CAP,
    IntMat,
    determinant,
    determinant_cofactor,
    format_matrix,
    maximal_minors,
    minor_cap,
    multiply,
    parse_matrix,
    rank,
)

from gen import leibniz_det, matrices, square_matrices

M24 = IntMat([[2, 2, -3, 4], [2, 2, 1, 2]])
U24 = IntMat([[-1, 2, -5, -1], [0, 0, 0, 1], [-1, 0, 2, 0], [0, -1, 4, 0]])
A_UNIT = IntMat([[1, 2, -3, 4], [0, 1, 1, 2]])


def test_intmat_shape_and_access():
    m = IntMat([[1, 2, 3], [4, 5, 6]])
    assert m.shape == (2, 3)
    assert m[1, 2] == 6
    assert m.col(1) == (2, 5)
    assert m.transpose().tolist() == [[1, 4], [2, 5], [3, 6]]
    assert IntMat.zeros(0, 3).shape == (0, 3)
    assert IntMat.zeros(0, 3).transpose().shape == (3, 0)


def test_intmat_rejects_ragged_rows():
    with pytest.raises(ShapeError):
        IntMat([[1, 2], [3]])


def test_intmat_is_immutable_and_hashable():
    m = IntMat([[1]])
    with pytest.raises(AttributeError):
        m.nrows = 3
    assert {m: 1}[IntMat([[1]])] == 1


def test_big_integers_survive():
    big = 10**80 + 7
    m = IntMat([[big, 1], [0, big]])
    assert determinant(m) == big * big
    assert multiply(m, IntMat.identity(2)) == m


class TestMultiply:
    def test_identity(self):
        m = IntMat([[1, -2, 3], [4, 0, -6], [7, 8, 9]])
        assert multiply(IntMat.identity(3), m) == m

    def test_reduction_transform_product(self):
        assert (M24 @ U24).tolist() == [[1, 0, 0, 0], [-3, 2, 0, 0]]

    def test_one_by_one(self):
        assert multiply(IntMat([[3]]), IntMat([[5]])).tolist() == [[15]]

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            multiply(IntMat([[1, 2]]), IntMat([[1, 2]]))

    def test_empty_inner_dimension(self):
        assert multiply(IntMat.zeros(2, 0), IntMat.zeros(0, 3)) == IntMat.zeros(2, 3)


class TestDeterminant:
    def test_identity(self):
        assert determinant(IntMat.identity(4)) == 1

    def test_two_by_two(self):
        assert determinant(IntMat([[2, -3], [1, 1]])) == 5

    def test_known_unimodular(self):
        assert determinant(U24) == 1
        assert determinant_cofactor(U24) == 1

    def test_empty(self):
        assert determinant(IntMat()) == 1

    def test_singular(self):
        assert determinant(IntMat([[1, 2], [2, 4]])) == 0
        assert determinant(IntMat([[0, 0, 1], [0, 0, 2], [3, 4, 5]])) == 0

    def test_needs_pivoting(self):
        assert determinant(IntMat([[0, 1], [1, 0]])) == -1

    def test_not_square(self):
        with pytest.raises(NotSquare):
            determinant(IntMat([[1, 2]]))
        with pytest.raises(NotSquare):
            determinant_cofactor(IntMat([[1, 2]]))

    @settings(max_examples=300)
    @given(square_matrices(max_n=6))
    def test_fraction_free_matches_cofactor(self, m):
        assert determinant(m) == determinant_cofactor(m)

    @settings(max_examples=100)
    @given(square_matrices(max_n=5))
    def test_matches_leibniz(self, m):
        assert determinant(m) == leibniz_det(m.rows)

    @settings(max_examples=200)
    @given(st.integers(1, 5).flatmap(lambda n: st.tuples(square_matrices(n, n), square_matrices(n, n))))
    def test_binet(self, pair):
        m, n = pair
        assert determinant(m @ n) == determinant(m) * determinant(n)


class TestMaximalMinors:
    def test_lexicographic_order(self):
        assert maximal_minors(A_UNIT) == [1, 1, 2, 5, 0, -10]

    def test_two_by_four(self):
        # independent 2x2 expansion of every column pair
        expected = [
            M24[0, i] * M24[1, j] - M24[0, j] * M24[1, i] for i, j in itertools.combinations(range(4), 2)
        ]
        assert expected == [0, 8, -4, 8, -4, -10]
        assert maximal_minors(M24) == expected

    def test_square_is_singleton(self):
        assert maximal_minors(IntMat.identity(2)) == [1]

    def test_too_many_rows(self):
        with pytest.raises(ShapeError):
            maximal_minors(IntMat([[1], [2]]))

    def test_cap(self):
        with pytest.raises(CapExceeded):
            maximal_minors(IntMat([[1] * 10]), cap=9)
        assert len(maximal_minors(IntMat([[1] * 10]), cap=10)) == 10

    def test_cap_from_environment(self, monkeypatch):
        assert minor_cap() == DEFAULT_MINOR_CAP
        monkeypatch.setenv("DETDIO_MINOR_CAP", "5")
        assert minor_cap() == 5
        with pytest.raises(CapExceeded):
            maximal_minors(IntMat([[1, 2, 3, 4, 5, 6]]))

    @given(square_matrices(min_n=1, max_n=5))
    def test_square_singleton_property(self, m):
        assert maximal_minors(m) == [determinant(m)]


class TestRank:
    def test_zero(self):
        assert rank(IntMat.zeros(2, 3)) == 0

    def test_two_by_four(self):
        assert rank(M24) == 2

    def test_proportional(self):
        assert rank(IntMat([[1, 2], [2, 4]])) == 1

    def test_skipped_pivot_column(self):
        assert rank(IntMat([[0, 1, 2], [0, 2, 5], [0, 3, 7]])) == 2

    @settings(max_examples=300)
    @given(matrices(min_rows=1, max_rows=4, min_cols=4, max_cols=6, elements=st.integers(-2, 2)))
    def test_full_rank_iff_nonzero_minor(self, m):
        assert (rank(m) == m.nrows) == any(maximal_minors(m))


class TestTextFormat:
    def test_round_trip(self):
        text = "1 0 0 0\n-3 2 0 0\n"
        m = parse_matrix(text)
        assert m.tolist() == [[1, 0, 0, 0], [-3, 2, 0, 0]]
        assert format_matrix(m) == text

    def test_comments_and_whitespace(self):
        m = parse_matrix("# known block\n  1\t2  -3 4\n\n0 1 1 2\n# end\n")
        assert m == A_UNIT

    def test_empty_is_zero_by_zero(self):
        assert parse_matrix("").shape == (0, 0)
        assert format_matrix(IntMat()) == ""

    def test_big_integer(self):
        big = "-" + "9" * 100
        assert parse_matrix(big + " 1\n")[0, 0] == -int("9" * 100)

    @pytest.mark.parametrize(
        "text, line, column",
        [("1 2\n3\n", 2, 1), ("1 +2\n", 1, 3), ("1 2.5\n", 1, 3), ("# ok\n1 x\n", 2, 3)],
    )
    def test_errors_carry_position(self, text, line, column):
        with pytest.raises(ParseError) as info:
            parse_matrix(text)
        assert (info.value.line, info.value.column) == (line, column)

    @given(matrices(min_rows=1, max_rows=5, min_cols=1, max_cols=5))
    def test_format_parse_identity(self, m):
        assert parse_matrix(format_matrix(m)) == m
