"""Linear forms as determinants, and the classical linear Diophantine equation.

For any integer form ``a . x`` (not identically zero) there is an
``(n-1) x n`` integer matrix ``A`` with ``det([A; x]) == a . x`` for every
``x``. Equivalently, the last-row cofactors of ``[A; x]`` are exactly ``a``.
:func:`complete_to_form` builds such an ``A``. It completes the primitive
part ``a' = a / gcd(a)`` to a unimodular ``V = [B; a']``, reads ``A`` off
``(V^-1)^T``, and scales the first row by the gcd.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import reduce
from typing import Sequence

from .errors import DegenerateForm, InternalError, ShapeError, Unsolvable
from .ltf import ltf_reduce, unimodular_inverse
from .matrix import IntMat, determinant, maximal_minors
from .solver import EquationInstance, Orientation, is_solvable, solve


@dataclass(frozen=True)
class LinearForm:
    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Sequence[int]):
        object.__setattr__(self, "coeffs", tuple(int(a) for a in coeffs))
        if len(self.coeffs) < 2:
            raise ShapeError(f"a linear form needs at least 2 coefficients, got {len(self.coeffs)}")
        if not any(self.coeffs):
            raise DegenerateForm("all coefficients are zero")

    @property
    def n(self) -> int:
        return len(self.coeffs)

    @property
    def gcd(self) -> int:
        return reduce(math.gcd, self.coeffs, 0)

    def __call__(self, x: Sequence[int]) -> int:
        return sum(a * xi for a, xi in zip(self.coeffs, x, strict=True))


@dataclass(frozen=True)
class FormCompletion:
    matrix: IntMat
    # The unimodular [B; a'] the completion was derived from; det is +1.
    unimodular: IntMat


def cofactor_vector(a: IntMat) -> list[int]:
    """Last-row cofactors of ``[a; x]``: ``det([a; x]) == sum(c_j * x_j)``."""
    r, n = a.shape
    if n < 2 or r != n - 1:
        raise ShapeError(f"cofactor vector needs an (n-1) x n matrix with n >= 2, got {r}x{n}")
    # 0-based: (-1)^((n-1) + j) * det(a without column j)
    return [(-1) ** (n - 1 + j) * determinant(a.delete_column(j)) for j in range(n)]


def complete_to_form(form: LinearForm | Sequence[int]) -> FormCompletion:
    """Find ``A`` with ``cofactor_vector(A) == form.coeffs``."""
    if not isinstance(form, LinearForm):
        form = LinearForm(form)
    k = form.gcd
    primitive = IntMat([[a // k for a in form.coeffs]])
    inst = EquationInstance(primitive, 1, Orientation.KNOWN_ON_BOTTOM)
    b = solve(inst)
    v = inst.assemble(b)
    if determinant(v) != 1:
        raise InternalError("completion matrix does not have determinant +1")
    u = unimodular_inverse(v).transpose()
    a = u.select_rows(range(form.n - 1)).scale_row(0, k)
    if cofactor_vector(a) != list(form.coeffs):
        raise InternalError("completion failed its cofactor identity")
    return FormCompletion(a, v)


def solve_linear(form: LinearForm | Sequence[int], d: int) -> list[int]:
    """Integer ``x`` with ``form(x) == d``.

    Reduces the coefficient row to ``[g, 0, ..., 0]`` by column operations;
    the first column of the transform, scaled by ``d / g``, is a solution.

    Raises:
        Unsolvable: ``gcd(a)`` does not divide ``d``.
    """
    if not isinstance(form, LinearForm):
        form = LinearForm(form)
    dec = ltf_reduce(IntMat([form.coeffs]))
    g = dec.ltf[0, 0]
    scale, rem = divmod(d, g)
    if rem:
        raise Unsolvable(f"unsolvable: gcd {g} does not divide {d}")
    return [scale * u for u in dec.transform.forward.col(0)]


def condition_equivalence_check(form: LinearForm | Sequence[int], d: int) -> bool:
    """Check that the determinant criterion on the completion agrees with ``gcd | d``.

    Also requires the completion's maximal minors to match the coefficients up
    to sign, as multisets; a mismatch is an internal error.
    """
    if not isinstance(form, LinearForm):
        form = LinearForm(form)
    a = complete_to_form(form).matrix
    minors = Counter(abs(x) for x in maximal_minors(a))
    if minors != Counter(abs(x) for x in form.coeffs):
        raise InternalError(f"maximal minors {sorted(minors.elements())} do not match coefficients {form.coeffs}")
    by_gcd = d % form.gcd == 0
    by_det = is_solvable(EquationInstance(a, d))
    return by_gcd == by_det
