"""Dense matrices of Python integers with exact determinants and minors.

Everything here works on unbounded ``int`` values; nothing is ever converted
to floating point. Matrices are immutable, so they can be shared freely
between threads and used as dictionary keys.
"""

from __future__ import annotations

import itertools
import math
import operator
import os
import re
from typing import Iterable, Sequence

from .errors import (
    CapExceeded,
    DimensionMismatch,
    InternalError,
    NotSquare,
    ParseError,
    ShapeError,
)

DEFAULT_MINOR_CAP = 10**6
MINOR_CAP_ENV = "DETDIO_MINOR_CAP"


def minor_cap() -> int:
    """Return the active enumeration cap, honouring ``DETDIO_MINOR_CAP``."""
    raw = os.environ.get(MINOR_CAP_ENV)
    if raw is None or not raw.strip():
        return DEFAULT_MINOR_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{MINOR_CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError(f"{MINOR_CAP_ENV} must be positive, got {cap}")
    return cap


class IntMat:
    """Immutable ``nrows x ncols`` matrix of arbitrary-precision integers.

    The column count is stored separately so that matrices with zero rows
    (an absent known block, for instance) still know how wide they are.
    """

    __slots__ = ("_rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable[int]] = (), ncols: int | None = None):
        data = tuple(tuple(operator.index(x) for x in row) for row in rows)
        if data:
            width = len(data[0])
            for i, row in enumerate(data):
                if len(row) != width:
                    raise ShapeError(f"row {i} has {len(row)} entries, expected {width}")
            if ncols is not None and ncols != width:
                raise ShapeError(f"rows have {width} entries but ncols={ncols}")
        else:
            width = 0 if ncols is None else ncols
            if width < 0:
                raise ShapeError("ncols must be non-negative")
        object.__setattr__(self, "_rows", data)
        object.__setattr__(self, "nrows", len(data))
        object.__setattr__(self, "ncols", width)

    def __setattr__(self, name, value):
        raise AttributeError("IntMat is immutable")

    @classmethod
    def identity(cls, n: int) -> IntMat:
        return cls(([int(i == j) for j in range(n)] for i in range(n)), ncols=n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> IntMat:
        return cls(([0] * ncols for _ in range(nrows)), ncols=ncols)

    @classmethod
    def diagonal(cls, entries: Sequence[int]) -> IntMat:
        n = len(entries)
        return cls(([entries[i] if i == j else 0 for j in range(n)] for i in range(n)), ncols=n)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        return self._rows[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self._rows[i]

    def col(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self._rows)

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self._rows]

    def transpose(self) -> IntMat:
        return IntMat(zip(*self._rows), ncols=self.nrows) if self.nrows else IntMat.zeros(self.ncols, 0)

    @property
    def T(self) -> IntMat:
        return self.transpose()

    def select_columns(self, cols: Sequence[int]) -> IntMat:
        return IntMat(([row[j] for j in cols] for row in self._rows), ncols=len(cols))

    def delete_column(self, j: int) -> IntMat:
        return self.select_columns([k for k in range(self.ncols) if k != j])

    def select_rows(self, rows: Sequence[int]) -> IntMat:
        return IntMat((self._rows[i] for i in rows), ncols=self.ncols)

    def vstack(self, other: IntMat) -> IntMat:
        if self.ncols != other.ncols:
            raise DimensionMismatch(f"cannot stack {self.shape} on {other.shape}")
        return IntMat(self._rows + other._rows, ncols=self.ncols)

    def scale_row(self, i: int, factor: int) -> IntMat:
        rows = list(self._rows)
        rows[i] = tuple(factor * x for x in rows[i])
        return IntMat(rows, ncols=self.ncols)

    def __matmul__(self, other: IntMat) -> IntMat:
        return multiply(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMat):
            return NotImplemented
        return self.ncols == other.ncols and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.ncols, self._rows))

    def __repr__(self) -> str:
        return f"IntMat({self.tolist()!r}, ncols={self.ncols})"

    def __str__(self) -> str:
        return format_matrix(self)


def as_intmat(m: IntMat | Sequence[Sequence[int]]) -> IntMat:
    return m if isinstance(m, IntMat) else IntMat(m)


def multiply(lhs: IntMat, rhs: IntMat) -> IntMat:
    """Exact matrix product ``lhs @ rhs``."""
    if lhs.ncols != rhs.nrows:
        raise DimensionMismatch(f"cannot multiply {lhs.shape} by {rhs.shape}")
    cols = list(zip(*rhs.rows)) if rhs.nrows else [()] * rhs.ncols
    return IntMat(
        ([sum(map(operator.mul, row, col)) for col in cols] for row in lhs.rows),
        ncols=rhs.ncols,
    )


def _bareiss(rows: list[list[int]], ncols: int) -> tuple[int, int]:
    """Fraction-free forward elimination in place.

    Returns ``(rank, sign)`` where ``sign`` is the parity of the row swaps
    performed. After elimination of a square full-rank input, the last pivot
    is the determinant up to that sign. Every intermediate is a minor of the
    input, so the exact divisions below can never leave a remainder.
    """
    nrows = len(rows)
    prev = 1
    rank = 0
    sign = 1
    for k in range(ncols):
        if rank == nrows:
            break
        pivot_row = next((i for i in range(rank, nrows) if rows[i][k] != 0), None)
        if pivot_row is None:
            continue
        if pivot_row != rank:
            rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
            sign = -sign
        p = rows[rank][k]
        top = rows[rank]
        for i in range(rank + 1, nrows):
            cur = rows[i]
            lead = cur[k]
            for j in range(k + 1, ncols):
                q, rem = divmod(p * cur[j] - lead * top[j], prev)
                if rem:
                    raise InternalError("fraction-free elimination produced a non-exact division")
                cur[j] = q
            cur[k] = 0
        prev = p
        rank += 1
    return rank, sign


def determinant(m: IntMat) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if not m.is_square:
        raise NotSquare(f"determinant needs a square matrix, got {m.shape}")
    n = m.nrows
    if n == 0:
        return 1
    rows = m.tolist()
    rank, sign = _bareiss(rows, n)
    if rank < n:
        return 0
    return sign * rows[n - 1][n - 1]


def determinant_cofactor(m: IntMat) -> int:
    """Determinant by Laplace expansion along the first row.

    Exponential time; kept as an independent oracle for small matrices.
    """
    if not m.is_square:
        raise NotSquare(f"determinant needs a square matrix, got {m.shape}")

    def expand(rows: tuple[tuple[int, ...], ...]) -> int:
        n = len(rows)
        if n == 0:
            return 1
        if n == 1:
            return rows[0][0]
        total = 0
        for j, a in enumerate(rows[0]):
            if a:
                minor = tuple(r[:j] + r[j + 1:] for r in rows[1:])
                total += (-a if j % 2 else a) * expand(minor)
        return total

    return expand(m.rows)


def rank(m: IntMat) -> int:
    """Rank over the rationals, computed exactly."""
    if m.nrows == 0 or m.ncols == 0:
        return 0
    rows = m.tolist()
    r, _ = _bareiss(rows, m.ncols)
    return r


def is_full_row_rank(m: IntMat) -> bool:
    return rank(m) == m.nrows


def maximal_minors(m: IntMat, cap: int | None = None) -> list[int]:
    """Determinants of every ``r x r`` column selection, lexicographic order.

    Args:
        m: an ``r x c`` matrix with ``r <= c``.
        cap: maximum number of column subsets; defaults to :func:`minor_cap`.

    Raises:
        ShapeError: if ``r > c``.
        CapExceeded: if ``C(c, r)`` exceeds the cap.
    """
    r, c = m.shape
    if r > c:
        raise ShapeError(f"maximal minors need rows <= cols, got {m.shape}")
    limit = minor_cap() if cap is None else cap
    count = math.comb(c, r)
    if count > limit:
        raise CapExceeded(f"C({c}, {r}) = {count} column subsets exceeds cap {limit}")
    return [determinant(m.select_columns(cols)) for cols in itertools.combinations(range(c), r)]


_TOKEN = re.compile(r"\S+")
_INT = re.compile(r"-?[0-9]+\Z")


def parse_matrix(text: str) -> IntMat:
    """Parse the plain-text matrix format.

    Lines starting with ``#`` and blank lines are ignored; every other line is
    a row of whitespace-separated decimal integers. Empty input is ``0 x 0``.
    """
    rows: list[list[int]] = []
    width = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        row = []
        for tok in _TOKEN.finditer(line):
            if not _INT.match(tok.group()):
                raise ParseError(f"not an integer: {tok.group()!r}", lineno, tok.start() + 1)
            row.append(int(tok.group()))
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ParseError(f"row has {len(row)} entries, expected {width}", lineno, 1)
        rows.append(row)
    return IntMat(rows)


def format_matrix(m: IntMat) -> str:
    """Serialize ``m``: single spaces between entries, ``\\n`` after each row."""
    return "".join(" ".join(str(x) for x in row) + "\n" for row in m.rows)
