import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from detdio.divisor import greatest_divisor_minors
from detdio.errors import InvalidInstance, ShapeError, Unsolvable
from detdio.matrix import IntMat, determinant, determinant_cofactor
from detdio.solver import EquationInstance, Orientation, is_solvable, solve, verify_solution

from gen import full_rank_matrices, random_full_rank

TOP, BOTTOM = Orientation.KNOWN_ON_TOP, Orientation.KNOWN_ON_BOTTOM
A_UNIT = IntMat([[1, 2, -3, 4], [0, 1, 1, 2]])
A_EVEN = IntMat([[2, 2, -3, 4], [2, 2, 1, 2]])


class TestInstance:
    def test_needs_unknown_row(self):
        with pytest.raises(ShapeError):
            EquationInstance(IntMat.identity(2), 1)

    def test_positive_target(self):
        with pytest.raises(InvalidInstance):
            EquationInstance(A_UNIT, 0)
        with pytest.raises(InvalidInstance):
            EquationInstance(A_UNIT, -2)

    def test_absent_known_block_allows_zero(self):
        assert EquationInstance(IntMat.zeros(0, 3), 0).unknown_rows == 3

    def test_assemble_orientation(self):
        x = IntMat([[7, 8]])
        assert EquationInstance(IntMat([[3, 5]]), 1).assemble(x).tolist() == [[3, 5], [7, 8]]
        assert EquationInstance(IntMat([[3, 5]]), 1, BOTTOM).assemble(x).tolist() == [[7, 8], [3, 5]]

    def test_assemble_shape(self):
        with pytest.raises(ShapeError):
            EquationInstance(IntMat([[3, 5]]), 1).assemble(IntMat([[1, 2, 3]]))


class TestIsSolvable:
    def test_unit_divisor(self):
        assert is_solvable(EquationInstance(A_UNIT, 2))

    def test_even_divisor_odd_target(self):
        assert greatest_divisor_minors(A_EVEN) == 2
        assert not is_solvable(EquationInstance(A_EVEN, 3))
        assert is_solvable(EquationInstance(A_EVEN, 4))

    @pytest.mark.parametrize("d", [1, 2, 7])
    def test_rank_deficient(self, d):
        assert not is_solvable(EquationInstance(IntMat([[1, 2, 0], [2, 4, 0]]), d))

    def test_absent_known_block(self):
        assert is_solvable(EquationInstance(IntMat.zeros(0, 2), 0))


class TestSolve:
    def test_row_three_five(self):
        inst = EquationInstance(IntMat([[3, 5]]), 1)
        x = solve(inst)
        assert x.tolist() == [[1, 2]]
        assert 3 * 2 - 5 * 1 == 1

    def test_absent_known_block(self):
        x = solve(EquationInstance(IntMat.zeros(0, 3), 5))
        assert x.tolist() == [[1, 0, 0], [0, 1, 0], [0, 0, 5]]
        assert solve(EquationInstance(IntMat.zeros(0, 2), 0)).tolist() == [[1, 0], [0, 0]]

    def test_two_known_rows(self):
        inst = EquationInstance(A_UNIT, 2)
        x = solve(inst)
        assert x.shape == (2, 4)
        assert determinant_cofactor(inst.assemble(x)) == 2

    def test_unsolvable(self):
        with pytest.raises(Unsolvable):
            solve(EquationInstance(A_EVEN, 3))
        with pytest.raises(Unsolvable):
            solve(EquationInstance(IntMat([[1, 2, 0], [2, 4, 0]]), 1))

    @pytest.mark.parametrize("shape", [(1, 2), (1, 3), (2, 3), (1, 4), (2, 5), (3, 4)])
    def test_bottom_orientation_targets_plus_d(self, shape):
        rng = random.Random(sum(shape))
        for _ in range(20):
            a = random_full_rank(rng, *shape)
            d = greatest_divisor_minors(a) * rng.randint(1, 5)
            inst = EquationInstance(a, d, BOTTOM)
            assert determinant(inst.assemble(solve(inst))) == d

    @settings(max_examples=200, deadline=None)
    @given(full_rank_matrices(max_rows=3), st.integers(1, 9))
    def test_round_trip_exact_plus_d(self, a, k):
        d = k * greatest_divisor_minors(a)
        for orientation in (TOP, BOTTOM):
            inst = EquationInstance(a, d, orientation)
            assert is_solvable(inst)
            assert determinant(inst.assemble(solve(inst))) == d

    @settings(max_examples=200, deadline=None)
    @given(full_rank_matrices(max_rows=3), st.integers(1, 200))
    def test_necessity(self, a, d):
        gd = greatest_divisor_minors(a)
        inst = EquationInstance(a, d)
        if d % gd:
            assert not is_solvable(inst)
            with pytest.raises(Unsolvable):
                solve(inst)
        else:
            assert verify_solution(inst, solve(inst))


class TestVerify:
    inst = EquationInstance(IntMat([[3, 5]]), 1)

    def test_plus(self):
        assert verify_solution(self.inst, IntMat([[1, 2]]))

    def test_minus_accepted(self):
        assert determinant(self.inst.assemble(IntMat([[-1, -2]]))) == -1
        assert verify_solution(self.inst, IntMat([[-1, -2]]))

    def test_singular(self):
        assert not verify_solution(self.inst, IntMat([[0, 0]]))

    def test_shape(self):
        with pytest.raises(ShapeError):
            verify_solution(self.inst, IntMat([[1, 2], [3, 4]]))


def brute_force_values(a, b, bound=40):
    """All values of det([[a, b], [x1, x2]]) over a box of unknowns."""
    return {a * x2 - b * x1 for x1 in range(-bound, bound + 1) for x2 in range(-bound, bound + 1)}


def test_exhaustive_single_row_against_brute_force():
    for a, b in itertools.product(range(-4, 5), repeat=2):
        if a == b == 0:
            continue
        values = brute_force_values(a, b)
        for d in range(1, 7):
            found = d in values or -d in values
            assert is_solvable(EquationInstance(IntMat([[a, b]]), d)) == found, (a, b, d)
