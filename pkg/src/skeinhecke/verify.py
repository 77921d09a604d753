"""Invariant suites comparing closed formulas with brute-force Hecke computation.

Each check is a generator of ``(label, passed)`` pairs so callers can stream a
report.  Checks are independent of one another and deterministic.
"""
from __future__ import annotations

import random
from itertools import combinations
from typing import Callable, Iterator

from . import hecke
from .braid import all_permutations, compose
from .hecke import (
    HeckeElement,
    a_n,
    a_n_recursive,
    alpha_col,
    alpha_row,
    b_n,
    b_n_recursive,
    closure_eval,
    e_lambda,
    embed,
    partial_closure,
    phi,
    split_plus,
)
from .qdim import alpha, classical_dim, m_lambda, qdim, x_e_lambda
from .ring import ONE, LaurentPoly, RatFunc, eval_s1
from .young import (
    Cell,
    YoungDiagram,
    is_inseparable,
    partitions,
    partitions_upto,
    pi_lambda,
    row_group,
    separates,
)

Result = Iterator[tuple[str, bool]]

__all__ = ["CHECKS", "DEFAULT_ORDER", "run", "cell_factor", "last_cell", "random_element"]


def cell_factor(c: int) -> RatFunc:
    """Closure factor ``s^c (v^-1 s^c - v s^-c) / z`` of a cell with content ``c``."""
    num = LaurentPoly.monomial(v=-1, s=2 * c) - LaurentPoly.monomial(v=1)
    return RatFunc(num, hecke.Z)


def last_cell(lam: YoungDiagram) -> tuple[int, int]:
    """Cell numbered ``|lambda|`` in ``T(lambda)``: end of the bottom row."""
    return len(lam), lam.rows[-1]


def random_element(rng: random.Random, n: int, terms: int = 4) -> HeckeElement:
    """Small random element with integer multiples of random monomials."""
    perms = list(all_permutations(n))
    d = {}
    for _ in range(terms):
        p = rng.choice(perms)
        c = LaurentPoly.monomial(
            rng.choice([-2, -1, 1, 2]), rng.randint(-1, 1), rng.randint(-1, 1), rng.randint(-2, 2)
        )
        d[p] = d[p] + c if p in d else c
    return HeckeElement(n, d)


def check_idempotency(max_cells: int) -> Result:
    for lam in partitions_upto(max_cells):
        e = e_lambda(lam)
        yield f"e({lam})^2 = alpha * e({lam})", e * e == e.scale(alpha(lam))


def check_orthogonality(max_cells: int) -> Result:
    for n in range(2, max_cells + 1):
        for lam, mu in combinations(list(partitions(n)), 2):
            e, f = e_lambda(lam), e_lambda(mu)
            yield f"e({lam}) e({mu}) = 0", (e * f).is_zero() and (f * e).is_zero()


def check_closure(max_cells: int) -> Result:
    for lam in partitions_upto(max_cells):
        yield f"X(e({lam})) = cell product", closure_eval(e_lambda(lam)) == x_e_lambda(lam)


def check_exclose(max_cells: int) -> Result:
    for lam in partitions_upto(max_cells):
        k, l = last_cell(lam)
        mu = lam.remove(Cell(k, l))
        lhs = partial_closure(e_lambda(lam))
        if mu.size == 0:
            rhs = HeckeElement.identity(0).scale(cell_factor(l - k))
        else:
            rhs = e_lambda(mu).scale(cell_factor(l - k))
        yield f"close last strand of e({lam}) = factor * e({mu})", lhs == rhs


def check_nero(max_cells: int) -> Result:
    for n in range(1, max_cells + 1):
        a, b = a_n(n), b_n(n)
        yield f"a_{n}^2 = alpha_row({n}) a_{n}", a * a == a.scale(alpha_row(n))
        yield f"b_{n}^2 = alpha_col({n}) b_{n}", b * b == b.scale(alpha_col(n))
        yield f"alpha_row({n}) = alpha(({n}))", alpha_row(n) == alpha(YoungDiagram((n,)))
        yield f"alpha_col({n}) = alpha((1^{n}))", alpha_col(n) == alpha(YoungDiagram((1,) * n))
        if n >= 2:
            yield (
                f"phi_a(b_{n - 1} (x) 1) = alpha_col({n - 1})",
                phi(embed(b_n(n - 1), 0, n), "a") == alpha_col(n - 1),
            )


def check_absorption(max_cells: int) -> Result:
    for n in range(2, max_cells + 1):
        a, b = a_n(n), b_n(n)
        for i in range(1, n):
            g = hecke.generator(n, i)
            yield (
                f"a_{n} sigma_{i} = xs a_{n} = sigma_{i} a_{n}",
                a * g == a.scale(hecke.B_ROOT) == g * a,
            )
            yield (
                f"b_{n} sigma_{i} = -xs^-1 b_{n} = sigma_{i} b_{n}",
                b * g == b.scale(hecke.A_ROOT) == g * b,
            )


def check_split(max_cells: int) -> Result:
    for n in range(1, max_cells + 1):
        yield f"recursive a_{n} = direct a_{n}", a_n_recursive(n) == a_n(n)
        yield f"recursive b_{n} = direct b_{n}", b_n_recursive(n) == b_n(n)


def check_splitplus(max_cells: int) -> Result:
    for n in range(2, max_cells + 1):
        yield f"a_{n} = a' + correction", split_plus(n, "a") == a_n(n)
        yield f"b_{n} = b' - correction", split_plus(n, "b") == b_n(n)


def check_marel(max_cells: int) -> Result:
    for lam in partitions_upto(max_cells):
        prod = ONE
        for r in lam.rows:
            prod = prod * alpha_row(r)
        for c in lam.conjugate.rows:
            prod = prod * alpha_col(c)
        yield f"m({lam}) * prod alpha = alpha({lam})", m_lambda(lam) * prod == RatFunc(alpha(lam))


def check_qdim(max_cells: int, max_n: int = 5) -> Result:
    for lam in partitions_upto(max_cells):
        for N in range(1, max_n + 1):
            q = qdim(lam, N)
            ok = q == q.invert_s() and eval_s1(q) == classical_dim(lam, N)
            if len(lam) > N:
                ok = ok and not q
            yield f"qdim({lam}) N={N}", ok


def check_separability(max_cells: int) -> Result:
    yield "(2) and (2) inseparable", is_inseparable(YoungDiagram((2,)), YoungDiagram((2,)))
    for lam in partitions_upto(max_cells):
        conj = lam.conjugate
        pi = pi_lambda(lam)
        yield f"pi({lam}) separates ({lam}) from ({conj})", separates(pi, lam, conj)
        if lam.size > 5:
            continue
        seps = {p for p in all_permutations(lam.size) if separates(p, lam, conj)}
        products = {
            compose(compose(rho, pi), sigma) for rho in row_group(lam) for sigma in row_group(conj)
        }
        yield f"separating perms for ({lam}) = R(lambda) pi R(lambda^v)", seps == products


def check_markov(max_cells: int, pairs: int = 50, seed: int = 20240) -> Result:
    rng = random.Random(seed)
    n = max(2, min(max_cells, 4))
    for k in range(pairs):
        a, b = random_element(rng, n), random_element(rng, n)
        yield f"X(AB) = X(BA) pair {k}", closure_eval(a * b) == closure_eval(b * a)


CHECKS: dict[str, Callable[[int], Result]] = {
    "idempotency": check_idempotency,
    "orthogonality": check_orthogonality,
    "closure": check_closure,
    "exclose": check_exclose,
    "nero": check_nero,
    "absorption": check_absorption,
    "split": check_split,
    "splitplus": check_splitplus,
    "marel": check_marel,
    "qdim": check_qdim,
    "separability": check_separability,
    "markov": check_markov,
}
DEFAULT_ORDER = tuple(CHECKS)


def run(names, max_cells: int) -> Iterator[tuple[str, str, bool]]:
    """Yield ``(check, label, passed)`` for each named check in order."""
    for name in names:
        if name not in CHECKS:
            raise KeyError(name)
        for label, ok in CHECKS[name](max_cells):
            yield name, label, bool(ok)
