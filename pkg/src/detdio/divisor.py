"""Greatest divisor of a full-row-rank integer matrix.

The greatest divisor is the gcd of all maximal minors. It can be computed two
ways that must agree: by enumerating the minors directly, or as the product of
the diagonal of the matrix's Lower Triangular Form.
"""

from __future__ import annotations

import math
from functools import reduce

from .errors import RankDeficient
from .ltf import ltf_reduce
from .matrix import IntMat, maximal_minors


def greatest_divisor_minors(m: IntMat, cap: int | None = None) -> int:
    """gcd of the maximal minors of ``m`` (always positive).

    Raises:
        RankDeficient: all maximal minors vanish.
        CapExceeded: too many column subsets to enumerate.
    """
    g = reduce(math.gcd, maximal_minors(m, cap), 0)
    if g == 0:
        raise RankDeficient("all maximal minors are zero; greatest divisor is undefined")
    return g


def greatest_divisor_ltf(m: IntMat) -> int:
    """Product of the LTF diagonal of ``m``."""
    return math.prod(ltf_reduce(m).diagonal)


def greatest_divisor(m: IntMat, method: str = "ltf") -> int:
    if method == "ltf":
        return greatest_divisor_ltf(m)
    if method == "minors":
        return greatest_divisor_minors(m)
    raise ValueError(f"unknown method {method!r}; expected 'ltf' or 'minors'")
