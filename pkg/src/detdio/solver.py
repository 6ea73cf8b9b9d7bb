"""Decide and solve ``det([A; X]) = +-d`` for an unknown integer block ``X``.

``A`` is a known ``r x c`` block with ``r < c``; ``X`` has ``c - r`` rows.
A solution exists iff ``A`` has full row rank and its greatest divisor
divides ``d``. The constructive direction reduces ``A @ U = [N | 0]``,
completes the triangle with ``B = [0 | diag(1, ..., 1, l)]`` and maps back:
``X = B @ U^-1``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .divisor import greatest_divisor_ltf
from .errors import DimensionMismatch, InvalidInstance, RankDeficient, ShapeError, Unsolvable
from .ltf import ltf_reduce
from .matrix import IntMat, determinant, is_full_row_rank


class Orientation(enum.Enum):
    KNOWN_ON_TOP = "top"
    KNOWN_ON_BOTTOM = "bottom"


@dataclass(frozen=True)
class EquationInstance:
    known: IntMat
    d: int
    orientation: Orientation = Orientation.KNOWN_ON_TOP

    def __post_init__(self):
        r, c = self.known.shape
        if not r < c:
            raise ShapeError(f"need at least one unknown row: known block is {r}x{c}")
        if r >= 1 and self.d <= 0:
            raise InvalidInstance(f"target d must be positive when a known block is given, got {self.d}")
        if self.d < 0:
            raise InvalidInstance(f"target d must be non-negative, got {self.d}")

    @property
    def unknown_rows(self) -> int:
        return self.known.ncols - self.known.nrows

    def assemble(self, unknown: IntMat) -> IntMat:
        """Stack the known and unknown blocks in this instance's orientation."""
        if unknown.shape != (self.unknown_rows, self.known.ncols):
            raise ShapeError(
                f"unknown block must be {self.unknown_rows}x{self.known.ncols}, got {unknown.nrows}x{unknown.ncols}"
            )
        if self.orientation is Orientation.KNOWN_ON_TOP:
            return self.known.vstack(unknown)
        return unknown.vstack(self.known)


def is_solvable(inst: EquationInstance) -> bool:
    """Full row rank and greatest divisor dividing ``d``; trivially true with no known rows."""
    if inst.known.nrows == 0:
        return True
    if not is_full_row_rank(inst.known):
        return False
    return inst.d % greatest_divisor_ltf(inst.known) == 0


def _solve_on_top(known: IntMat, d: int) -> IntMat:
    r, c = known.shape
    if r == 0:
        return IntMat.diagonal([1] * (c - 1) + [d])
    try:
        dec = ltf_reduce(known)
    except RankDeficient as exc:
        raise Unsolvable(f"known block is not of full row rank: {exc}") from None
    gd = math.prod(dec.diagonal)
    k, rem = divmod(d, gd)
    if rem:
        raise Unsolvable(f"greatest divisor {gd} does not divide {d}")
    # det([A'; B]) = gd * l and det(U^-1) = det(U), so l = k * det(U) gives +d.
    l = k * dec.transform.sign
    m = c - r
    block = IntMat(
        ([0] * r + [(l if i == m - 1 else 1) if i == j else 0 for j in range(m)] for i in range(m)),
        ncols=c,
    )
    return block @ dec.transform.inverse


def solve(inst: EquationInstance) -> IntMat:
    """Return ``X`` with ``det`` of the assembled matrix exactly ``+d``.

    Raises:
        Unsolvable: the known block is rank deficient or its greatest divisor
            does not divide ``d``.
    """
    x = _solve_on_top(inst.known, inst.d)
    if inst.orientation is Orientation.KNOWN_ON_BOTTOM and x.nrows:
        # Moving r rows past c - r rows is a permutation of sign (-1)^(r(c-r)).
        r, m = inst.known.nrows, x.nrows
        if (r * m) % 2:
            x = x.scale_row(0, -1)
    return x


def verify_solution(inst: EquationInstance, unknown: IntMat) -> bool:
    """True iff the assembled determinant is ``+d`` or ``-d``."""
    try:
        full = inst.assemble(unknown)
    except DimensionMismatch as exc:
        raise ShapeError(str(exc)) from None
    return abs(determinant(full)) == inst.d
