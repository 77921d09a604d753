"""Closed-form scalars: alpha_lambda, Yokota's m_lambda, closure values of
e_lambda and Q_lambda, and the quantum / classical dimension of the sl(N)
irreducible indexed by a Young diagram.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .ring import (
    ONE,
    Z,
    ZERO,
    LaurentPoly,
    RatFunc,
    UniLaurent,
    exact_div,
    NotDivisibleError,
    qfact,
    qint,
    substitute,
)
from .young import YoungDiagram, content, hook_length

__all__ = [
    "EvaluationContext",
    "alpha",
    "alpha_row",
    "alpha_col",
    "alpha_factors",
    "m_lambda",
    "x_e_lambda",
    "x_Q_lambda",
    "x_Q_lambda_cellwise",
    "qdim",
    "qdim_factors",
    "classical_dim",
]


@dataclass(frozen=True)
class EvaluationContext:
    """Rank parameter of sl(N) together with the substitution x = s^(-1/N), v = s^(-N)."""

    N: int

    def __post_init__(self):
        if self.N < 1:
            raise ValueError(f"N must be >= 1, got {self.N}")

    def evaluate(self, p: LaurentPoly) -> UniLaurent:
        return substitute(p, self.N)


def _s_pow(e: int) -> LaurentPoly:
    return LaurentPoly.monomial(s=e)


def alpha_row(l: int) -> LaurentPoly:
    """Scalar for a single row of ``l`` cells: ``s^(l(l-1)/2) [l]!``."""
    if l < 0:
        raise ValueError("row length must be >= 0")
    return _s_pow(l * (l - 1) // 2) * qfact(l)


def alpha_col(k: int) -> LaurentPoly:
    """Scalar for a single column of ``k`` cells: ``s^(-k(k-1)/2) [k]!``."""
    if k < 0:
        raise ValueError("column length must be >= 0")
    return _s_pow(-k * (k - 1) // 2) * qfact(k)


def alpha_factors(lam: YoungDiagram) -> list[tuple[int, int]]:
    """``(content, hook length)`` for each cell in ``T(lambda)`` order."""
    return [(content(c), hook_length(lam, c)) for c in lam.cells()]


def alpha(lam: YoungDiagram) -> LaurentPoly:
    """``prod over cells of s^content [hook length]``."""
    total = ONE
    shift = 0
    for c, h in alpha_factors(lam):
        shift += c
        total = total * qint(h)
    return _s_pow(shift) * total


def m_lambda(lam: YoungDiagram) -> RatFunc:
    """Yokota's scalar, from the double product over the row-length weights.

    ``lambda_{n+1}`` is taken as 0 for the last row.
    """
    rows = lam.row
    num, den = ONE, ONE
    for n in range(1, len(lam) + 1):
        weight = rows(n) - rows(n + 1)
        for m in range(1, n + 1):
            den = den * qint(n - m + 1) ** weight
            num = num * qfact(rows(m) - rows(n + 1) + n - m) * qfact(rows(m) - rows(n))
            den = den * qfact(rows(m) - rows(n) + n - m) * qfact(rows(m) - rows(n + 1))
    return RatFunc(num, den)


def _cell_closure_numerator(c: int) -> LaurentPoly:
    # v^-1 s^c - v s^-c
    return LaurentPoly.monomial(v=-1, s=c) - LaurentPoly.monomial(v=1, s=-c)


def x_e_lambda(lam: YoungDiagram) -> RatFunc:
    """Closure value ``prod s^c (v^-1 s^c - v s^-c) / (s - s^-1)`` of e_lambda."""
    num = ONE
    for cell in lam.cells():
        c = content(cell)
        num = num * _s_pow(c) * _cell_closure_numerator(c)
    return RatFunc(num, Z ** lam.size)


def x_Q_lambda(lam: YoungDiagram) -> RatFunc:
    """Closure value of the genuine idempotent ``e_lambda / alpha_lambda``."""
    xe = x_e_lambda(lam)
    out = RatFunc(xe.num, xe.den * alpha(lam)).reduced()
    for part in (out.num, out.den):
        if part and part.degree_range(0) != (0, 0):
            raise ArithmeticError(f"x survived in X(Q_{lam}): {out}")
    return out


def x_Q_lambda_cellwise(lam: YoungDiagram) -> RatFunc:
    """The same value written cell by cell over quantum hook lengths."""
    num, den = ONE, ONE
    for cell in lam.cells():
        num = num * _cell_closure_numerator(content(cell))
        den = den * Z * qint(hook_length(lam, cell))
    return RatFunc(num, den)


def qdim_factors(lam: YoungDiagram, N: int) -> tuple[list[int], list[int]]:
    """Quantum integers left in ``prod [N+c] / prod [hook]`` after cancellation.

    ``[1]`` factors are dropped; a ``0`` in the numerator list means the
    dimension vanishes.
    """
    num = Counter(N + content(c) for c in lam.cells())
    den = Counter(hook_length(lam, c) for c in lam.cells())
    if any(k <= 0 for k in num):
        return [0], []
    common = num & den
    num, den = num - common, den - common
    num.pop(1, None)
    den.pop(1, None)
    return sorted(num.elements(), reverse=True), sorted(den.elements(), reverse=True)


def qdim(lam: YoungDiagram, ctx: EvaluationContext | int) -> LaurentPoly:
    """``prod [N + content] / prod [hook length]`` as a Laurent polynomial in s.

    Numerator and denominator are multiplied out first and divided once.
    """
    N = ctx.N if isinstance(ctx, EvaluationContext) else EvaluationContext(ctx).N
    cells = list(lam.cells())
    if any(N + content(c) <= 0 for c in cells):
        return ZERO
    num, den = ONE, ONE
    for c in cells:
        num = num * qint(N + content(c))
        den = den * qint(hook_length(lam, c))
    try:
        return exact_div(num, den)
    except NotDivisibleError as exc:
        raise ArithmeticError(
            f"internal error: hook formula for {lam}, N={N} is not a Laurent polynomial"
        ) from exc


def classical_dim(lam: YoungDiagram, N: int) -> int:
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    num, den = 1, 1
    for c in lam.cells():
        num *= N + content(c)
        den *= hook_length(lam, c)
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"internal error: classical dimension of {lam} at N={N} not integral")
    return q
