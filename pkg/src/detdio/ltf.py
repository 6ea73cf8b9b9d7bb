"""Lower Triangular Form by integer column operations.

A full-row-rank ``r x c`` matrix ``M`` is brought to ``[N | 0]`` with ``N``
lower triangular and a positive diagonal, using only elementary column
operations. The product of those operations is returned together with its
inverse, so ``M @ forward == ltf`` holds exactly.

The reduction works row by row, and each row runs a multi-entry Euclidean
algorithm over the active columns:

1. pick the entry of smallest nonzero absolute value as pivot (lowest column
   index on ties);
2. negate any other column whose entry is negative, then divide each entry by
   the pivot with remainder ``0 <= r < |pivot|``;
3. subtract ``q`` times the pivot column from each other column.

When a single nonzero remains it is swapped onto the diagonal and made
positive.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import RankDeficient, ShapeError
from .matrix import IntMat
from .unimodular import AddMultiple, ElementaryOp, Negate, Swap, TransformPair, _mutate


@dataclass(frozen=True)
class RowStats:
    """Bookkeeping for one row of the reduction."""

    rounds: int  # pivot selections made on this row
    start_max: int  # largest |entry| of the active part of the row when it was reached


@dataclass(frozen=True)
class LtfDecomposition:
    ltf: IntMat
    transform: TransformPair
    ops: tuple[ElementaryOp, ...] = ()
    row_stats: tuple[RowStats, ...] = ()

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.ltf[i, i] for i in range(self.ltf.nrows))


def is_ltf(m: IntMat) -> bool:
    """True iff ``m`` is ``[N | 0]`` with ``N`` lower triangular, positive diagonal."""
    r, c = m.shape
    if r > c:
        return False
    for i in range(r):
        row = m.row(i)
        if row[i] <= 0:
            return False
        if any(row[i + 1:]):
            return False
    return True


def euclid_quotient(value: int, pivot: int) -> int:
    """Quotient ``q`` with ``value = q * pivot + rem`` and ``0 <= rem < |pivot|``."""
    q = value // abs(pivot)
    return q if pivot > 0 else -q


class _Reducer:
    # Mutable workspace: columns of M and of U, rows of U^-1.

    def __init__(self, m: IntMat):
        r, c = m.shape
        self.cols = [list(col) for col in zip(*m.rows)] if r else [[] for _ in range(c)]
        self.u_cols = [[int(i == j) for i in range(c)] for j in range(c)]
        self.inv_rows = [[int(i == j) for j in range(c)] for i in range(c)]
        self.sign = 1
        self.ops: list[ElementaryOp] = []

    def apply(self, op: ElementaryOp) -> None:
        _mutate(self.cols, op)
        _mutate(self.u_cols, op)
        inv = op.inverse()
        if isinstance(inv, AddMultiple):
            inv = AddMultiple(inv.src, inv.dest, inv.factor)
        _mutate(self.inv_rows, inv)
        self.sign *= op.det
        self.ops.append(op)

    def entry(self, i: int, j: int) -> int:
        return self.cols[j][i]


def ltf_reduce(m: IntMat) -> LtfDecomposition:
    """Reduce a full-row-rank matrix to Lower Triangular Form.

    Raises:
        ShapeError: more rows than columns.
        RankDeficient: some row's active part vanishes, so ``m`` is not of
            full row rank.
    """
    r, c = m.shape
    if r > c:
        raise ShapeError(f"LTF needs rows <= cols, got {m.shape}")
    work = _Reducer(m)
    stats = []
    for i in range(r):
        active = range(i, c)
        start_max = max(abs(work.entry(i, j)) for j in active)
        rounds = 0
        while True:
            nonzero = [j for j in active if work.entry(i, j)]
            if not nonzero:
                raise RankDeficient(f"row {i} vanishes after reduction; matrix is not full row rank")
            if len(nonzero) == 1:
                break
            rounds += 1
            p = min(nonzero, key=lambda j: (abs(work.entry(i, j)), j))
            pivot = work.entry(i, p)
            for j in nonzero:
                if j == p:
                    continue
                if work.entry(i, j) < 0:
                    work.apply(Negate(j))
                q = euclid_quotient(work.entry(i, j), pivot)
                if q:
                    work.apply(AddMultiple(j, p, -q))
        (s,) = nonzero
        if s != i:
            work.apply(Swap(i, s))
        if work.entry(i, i) < 0:
            work.apply(Negate(i))
        stats.append(RowStats(rounds, start_max))

    ltf = IntMat(zip(*work.cols), ncols=c) if r else IntMat.zeros(0, c)
    forward = IntMat(zip(*work.u_cols), ncols=c) if c else IntMat.zeros(0, 0)
    inverse = IntMat(work.inv_rows, ncols=c)
    return LtfDecomposition(ltf, TransformPair(forward, inverse, work.sign), tuple(work.ops), tuple(stats))


def unimodular_inverse(m: IntMat) -> IntMat:
    """Exact integer inverse of a unimodular matrix.

    ``m @ U == L`` with ``L`` lower unitriangular, so ``m^-1 = U @ L^-1``.
    """
    if not m.is_square:
        raise ShapeError(f"inverse needs a square matrix, got {m.shape}")
    try:
        dec = ltf_reduce(m)
    except RankDeficient:
        raise ShapeError("matrix is singular, not unimodular") from None
    low = dec.ltf
    n = m.nrows
    if any(low[i, i] != 1 for i in range(n)):
        raise ShapeError("matrix is not unimodular")
    inv = [[int(i == j) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i):
            inv[i][j] = -sum(low[i, k] * inv[k][j] for k in range(j, i))
    return dec.transform.forward @ IntMat(inv, ncols=n)
