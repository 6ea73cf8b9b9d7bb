"""Elementary integer column operations and unimodular transforms.

Three operations generate every unimodular transform: negating a column,
adding an integer multiple of one column to another, and swapping two
columns. Each is applied by direct column mutation; :func:`op_matrix` gives
the equivalent elementary matrix ``E`` with ``M @ E == apply_col_op(M, op)``.

Row operations reuse the same op types. A row op acts as left
multiplication by the transpose of the column op's matrix.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Union

from .errors import IndexOutOfRange, ShapeError
from .matrix import IntMat, determinant


@dataclass(frozen=True)
class Negate:
    col: int

    def indices(self) -> tuple[int, ...]:
        return (self.col,)

    def inverse(self) -> Negate:
        return self

    @property
    def det(self) -> int:
        return -1


@dataclass(frozen=True)
class AddMultiple:
    """``C[dest] <- C[dest] + factor * C[src]``."""

    dest: int
    src: int
    factor: int

    def __post_init__(self):
        if self.dest == self.src:
            raise ValueError("AddMultiple needs dest != src")

    def indices(self) -> tuple[int, ...]:
        return (self.dest, self.src)

    def inverse(self) -> AddMultiple:
        return AddMultiple(self.dest, self.src, -self.factor)

    @property
    def det(self) -> int:
        return 1


@dataclass(frozen=True)
class Swap:
    a: int
    b: int

    def indices(self) -> tuple[int, ...]:
        return (self.a, self.b)

    def inverse(self) -> Swap:
        return self

    @property
    def det(self) -> int:
        return -1 if self.a != self.b else 1


ElementaryOp = Union[Negate, AddMultiple, Swap]


def _check(op: ElementaryOp, n: int) -> None:
    for k in op.indices():
        if not 0 <= k < n:
            raise IndexOutOfRange(f"{op} out of range for {n} columns")


def _mutate(lines: list[list[int]], op: ElementaryOp) -> None:
    # `lines` holds the vectors the op acts on (columns, or rows for row ops).
    if isinstance(op, Negate):
        lines[op.col] = [-x for x in lines[op.col]]
    elif isinstance(op, AddMultiple):
        f = op.factor
        lines[op.dest] = [x + f * y for x, y in zip(lines[op.dest], lines[op.src])]
    elif isinstance(op, Swap):
        lines[op.a], lines[op.b] = lines[op.b], lines[op.a]
    else:
        raise TypeError(f"not an elementary op: {op!r}")


def apply_col_op(m: IntMat, op: ElementaryOp) -> IntMat:
    """Return ``m`` with the column operation applied."""
    _check(op, m.ncols)
    cols = [list(c) for c in zip(*m.rows)] if m.nrows else [[] for _ in range(m.ncols)]
    _mutate(cols, op)
    if not m.nrows:
        return m
    return IntMat(zip(*cols), ncols=m.ncols)


def apply_row_op(m: IntMat, op: ElementaryOp) -> IntMat:
    """Return ``m`` with the same operation applied to rows instead of columns."""
    _check(op, m.nrows)
    rows = m.tolist()
    _mutate(rows, op)
    return IntMat(rows, ncols=m.ncols)


def op_matrix(op: ElementaryOp, n: int) -> IntMat:
    """The ``n x n`` elementary matrix of a column operation."""
    _check(op, n)
    return apply_col_op(IntMat.identity(n), op)


def row_op_matrix(op: ElementaryOp, n: int) -> IntMat:
    """The ``n x n`` matrix ``E`` with ``E @ M == apply_row_op(M, op)``."""
    _check(op, n)
    return apply_row_op(IntMat.identity(n), op)


def swap_composition(a: int, b: int) -> list[ElementaryOp]:
    """Express ``Swap(a, b)`` without the swap primitive.

    C_a += C_b; C_b -= C_a; C_a += C_b; negate C_b. On columns (x, y) this
    gives (x+y, y) -> (x+y, -x) -> (y, -x) -> (y, x).
    """
    if a == b:
        return []
    return [AddMultiple(a, b, 1), AddMultiple(b, a, -1), AddMultiple(a, b, 1), Negate(b)]


def _left_apply(op: ElementaryOp, m: IntMat) -> IntMat:
    # E @ m for the column-op matrix E: rows of m mix the way E's columns do,
    # which is the row op with src and dest exchanged.
    if isinstance(op, AddMultiple):
        return apply_row_op(m, AddMultiple(op.src, op.dest, op.factor))
    return apply_row_op(m, op)


@dataclass(frozen=True)
class TransformPair:
    """A unimodular matrix together with its exact inverse."""

    forward: IntMat
    inverse: IntMat
    sign: int = 1  # determinant of ``forward``

    @classmethod
    def identity(cls, n: int) -> TransformPair:
        eye = IntMat.identity(n)
        return cls(eye, eye, 1)

    @property
    def size(self) -> int:
        return self.forward.nrows

    @property
    def det(self) -> int:
        return self.sign


def accumulate(pair: TransformPair, op: ElementaryOp) -> TransformPair:
    """Append ``op``: ``forward @ E`` and ``E^-1 @ inverse`` in lockstep."""
    n = pair.size
    _check(op, n)
    return TransformPair(
        apply_col_op(pair.forward, op),
        _left_apply(op.inverse(), pair.inverse),
        pair.sign * op.det,
    )


def accumulate_all(ops: Iterable[ElementaryOp], n: int) -> TransformPair:
    pair = TransformPair.identity(n)
    for op in ops:
        pair = accumulate(pair, op)
    return pair


def is_unimodular(m: IntMat) -> bool:
    return m.is_square and abs(determinant(m)) == 1


def random_op(n: int, rng: random.Random, max_factor: int = 3) -> ElementaryOp:
    """Draw one elementary op on ``n`` columns (``n >= 1``)."""
    if n < 1:
        raise ShapeError("need at least one column")
    kinds = ["negate"] if n == 1 else ["negate", "addmul", "swap"]
    kind = rng.choice(kinds)
    if kind == "negate":
        return Negate(rng.randrange(n))
    a, b = rng.sample(range(n), 2)
    if kind == "swap":
        return Swap(a, b)
    factor = 0
    while factor == 0:
        factor = rng.randint(-max_factor, max_factor)
    return AddMultiple(a, b, factor)


def random_unimodular(n: int, rng: random.Random, max_ops: int = 20) -> TransformPair:
    """A random unimodular pair built from at most ``max_ops`` elementary ops."""
    ops = [random_op(n, rng) for _ in range(rng.randint(0, max_ops))]
    return accumulate_all(ops, n)
