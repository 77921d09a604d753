"""The Hecke algebra H_n as the skein of n-string braids.

Elements are expanded in the positive permutation braid basis ``omega_pi``.
Generators satisfy the braid relations and ``x^-1 sigma - x sigma^-1 = z``,
equivalently ``sigma^2 = xz sigma + x^2``.  Products are stacked top to
bottom: ``h1 * h2`` puts ``h1`` above ``h2``.

Scalars are :class:`~skeinhecke.ring.LaurentPoly` while building elements and
:class:`~skeinhecke.ring.RatFunc` once the unknot value ``delta`` or an
inverse ``1/alpha`` is involved.
"""
from __future__ import annotations

import os
from functools import lru_cache
from typing import Mapping, Union

from . import _pykernel
from ._tables import tables
from .braid import BraidWord, Permutation, peel_last_strand, reduced_word
from .qdim import alpha_col, alpha_row
from .ring import (
    DELTA,
    ONE,
    S,
    V,
    X,
    Z,
    LaurentPoly,
    RatFunc,
    exact_div,
    qint,
)
from .young import YoungDiagram, pi_lambda

try:
    if os.environ.get("SKEINHECKE_PURE"):
        raise ImportError("pure kernel forced")
    from . import _ckernel
except ImportError:
    _ckernel = None

__all__ = [
    "HeckeElement",
    "GuardError",
    "A_ROOT",
    "B_ROOT",
    "backend",
    "set_backend",
    "max_strands",
    "set_unsafe_max",
    "mul",
    "basis_element",
    "generator",
    "generator_inverse",
    "basis_inverse",
    "from_braid_word",
    "a_n",
    "b_n",
    "a_n_recursive",
    "b_n_recursive",
    "split_plus",
    "phi",
    "embed",
    "tensor",
    "E_lambda",
    "e_lambda",
    "yokota_epsilon",
    "yokota_scalar",
    "partial_closure",
    "closure_eval",
    "homfly_of_braid",
    "normalized_homfly",
]

Scalar = Union[LaurentPoly, RatFunc]

XZ = X * Z
X2 = X * X
X_INV = X ** -1
X_INV2 = X ** -2
# roots of t^2 - xz t - x^2: a_n absorbs generators at B_ROOT, b_n at A_ROOT
A_ROOT = -X * S ** -1
B_ROOT = X * S
CURL = X * V ** -1
_ROW_WEIGHT = X_INV * S  # (-a)^-1
_COL_WEIGHT = -X_INV * S ** -1  # (-b)^-1

DIRECT_SUM_GUARD = 7
E_LAMBDA_GUARD = 6

_backend = "compiled" if _ckernel is not None else "python"
_unsafe_max = 0


class GuardError(ValueError):
    """Requested strand count is above the configured size guard."""


def backend() -> str:
    return _backend


def set_backend(name: str) -> None:
    """Select ``"compiled"`` or ``"python"`` multiplication."""
    global _backend
    if name == "compiled" and _ckernel is None:
        raise RuntimeError("compiled kernel is not built")
    if name not in ("compiled", "python"):
        raise ValueError(f"unknown backend {name!r}")
    _backend = name


def set_unsafe_max(n: int) -> None:
    """Widen every size guard to at least ``n`` strands (never narrows)."""
    global _unsafe_max
    _unsafe_max = max(_unsafe_max, int(n))


def max_strands(default: int) -> int:
    limit = max(default, _unsafe_max)
    env = os.environ.get("SKEIN_MAX_STRANDS")
    if env:
        try:
            limit = max(limit, int(env))
        except ValueError:
            raise GuardError(f"SKEIN_MAX_STRANDS must be an integer, got {env!r}") from None
    return limit


def _guard(n: int, default: int, what: str) -> None:
    limit = max_strands(default)
    if n > limit:
        raise GuardError(
            f"{what} on {n} strands exceeds the guard of {limit}; "
            "raise it with --unsafe-max or SKEIN_MAX_STRANDS"
        )


def _coerce_scalar(c) -> Scalar:
    if isinstance(c, (LaurentPoly, RatFunc)):
        return c
    if isinstance(c, int):
        return LaurentPoly.const(c)
    raise TypeError(f"unsupported scalar {c!r}")


class HeckeElement:
    """Finite sum ``sum c_pi omega_pi`` in ``H_n``; immutable."""

    __slots__ = ("n", "_t")

    def __init__(self, n: int, terms: Mapping[tuple, object] | None = None):
        t = tables(n)
        d: dict = {}
        for p, c in (terms or {}).items():
            p = Permutation(p)
            if len(p) != n:
                raise ValueError(f"permutation {p} has degree {len(p)}, expected {n}")
            k = t.index[p]
            c = _coerce_scalar(c)
            d[k] = d[k] + c if k in d else c
        self.n = n
        self._t = {k: c for k, c in d.items() if c}

    @classmethod
    def _raw(cls, n: int, d: dict) -> "HeckeElement":
        h = object.__new__(cls)
        h.n = n
        h._t = d
        return h

    @classmethod
    def identity(cls, n: int) -> "HeckeElement":
        return cls._raw(n, {0: ONE})

    @classmethod
    def zero(cls, n: int) -> "HeckeElement":
        return cls._raw(n, {})

    # inspection ---------------------------------------------------------
    def terms(self) -> dict[Permutation, Scalar]:
        perms = tables(self.n).perms
        return {perms[k]: c for k, c in sorted(self._t.items())}

    def coefficient(self, p) -> Scalar:
        k = tables(self.n).index[tuple(p)]
        return self._t.get(k, ONE * 0)

    def __len__(self):
        return len(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def is_polynomial(self) -> bool:
        return all(isinstance(c, LaurentPoly) for c in self._t.values())

    # arithmetic ---------------------------------------------------------
    def _check(self, other: "HeckeElement"):
        if other.n != self.n:
            raise ValueError(f"strand mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        self._check(other)
        d = dict(self._t)
        for k, c in other._t.items():
            d[k] = d[k] + c if k in d else c
        return HeckeElement._raw(self.n, {k: c for k, c in d.items() if c})

    def __neg__(self):
        return HeckeElement._raw(self.n, {k: -c for k, c in self._t.items()})

    def __sub__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "HeckeElement":
        c = _coerce_scalar(c)
        if not c:
            return HeckeElement.zero(self.n)
        return HeckeElement._raw(self.n, {k: v for k, v in ((k, c * v) for k, v in self._t.items()) if v})

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return mul(self, other)
        if isinstance(other, (int, LaurentPoly, RatFunc)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentPoly, RatFunc)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if not isinstance(other, HeckeElement):
            return NotImplemented
        if other.n != self.n:
            return False
        zero = LaurentPoly.const(0)
        for k in self._t.keys() | other._t.keys():
            if not self._t.get(k, zero) == other._t.get(k, zero):
                return False
        return True

    __hash__ = None

    def to_ratfunc(self) -> "HeckeElement":
        return HeckeElement._raw(
            self.n, {k: c if isinstance(c, RatFunc) else RatFunc(c) for k, c in self._t.items()}
        )

    def __repr__(self):
        return f"HeckeElement(n={self.n}, terms={len(self._t)})"

    def __str__(self):
        if not self._t:
            return "0"
        perms = tables(self.n).perms
        parts = []
        for k in sorted(self._t):
            word = "w[" + ",".join(map(str, perms[k])) + "]"
            parts.append(f"({self._t[k]})*{word}")
        return " + ".join(parts)


# multiplication --------------------------------------------------------------


def mul(h1: HeckeElement, h2: HeckeElement) -> HeckeElement:
    h1._check(h2)
    n = h1.n
    t = tables(n)
    if _backend == "compiled" and h1.is_polynomial() and h2.is_polynomial():
        try:
            out = _ckernel.mul(
                t,
                {k: c.packed for k, c in h1._t.items()},
                {k: c.packed for k, c in h2._t.items()},
                XZ.packed,
                X2.packed,
            )
        except OverflowError:
            pass
        else:
            return HeckeElement._raw(n, {k: LaurentPoly._raw(d) for k, d in out.items()})
    return HeckeElement._raw(n, _pykernel.mul(t, h1._t, h2._t, XZ, X2))


def _times_gen(h: HeckeElement, i: int) -> HeckeElement:
    """``h * sigma_i`` for a 1-based generator index."""
    return HeckeElement._raw(h.n, _pykernel.times_gen(tables(h.n), h._t, i - 1, XZ, X2))


def _times_gen_inverse(h: HeckeElement, i: int) -> HeckeElement:
    # sigma^-1 = x^-2 sigma - x^-1 z
    return _times_gen(h, i).scale(X_INV2) - h.scale(X_INV * Z)


def basis_element(p, coeff=1) -> HeckeElement:
    p = Permutation(p)
    return HeckeElement(len(p), {p: coeff})


def generator(n: int, i: int) -> HeckeElement:
    if not 1 <= i < n:
        raise ValueError(f"sigma_{i} does not exist on {n} strands")
    return _times_gen(HeckeElement.identity(n), i)


def generator_inverse(n: int, i: int) -> HeckeElement:
    if not 1 <= i < n:
        raise ValueError(f"sigma_{i} does not exist on {n} strands")
    return _times_gen_inverse(HeckeElement.identity(n), i)


def basis_inverse(p) -> HeckeElement:
    """``omega_p^-1``, the negative permutation braid of ``p^-1``, in the positive basis."""
    p = Permutation(p)
    h = HeckeElement.identity(len(p))
    for i in reversed(reduced_word(p)):
        h = _times_gen_inverse(h, i)
    return h


def from_braid_word(word: BraidWord) -> HeckeElement:
    h = HeckeElement.identity(word.strands)
    for g in word.letters:
        h = _times_gen(h, g) if g > 0 else _times_gen_inverse(h, -g)
    return h


# row and column quasi-idempotents -------------------------------------------


def _weighted_sum(n: int, weight: LaurentPoly) -> HeckeElement:
    t = tables(n)
    powers = [ONE]
    for _ in range(n * (n - 1) // 2):
        powers.append(powers[-1] * weight)
    return HeckeElement._raw(n, {k: powers[l] for k, l in enumerate(t.lengths)})


@lru_cache(maxsize=None)
def _a_n(n: int) -> HeckeElement:
    return _weighted_sum(n, _ROW_WEIGHT)


@lru_cache(maxsize=None)
def _b_n(n: int) -> HeckeElement:
    return _weighted_sum(n, _COL_WEIGHT)


def a_n(n: int) -> HeckeElement:
    """``sum_pi (x^-1 s)^l(pi) omega_pi``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    _guard(n, DIRECT_SUM_GUARD, "a_n")
    return _a_n(n)


def b_n(n: int) -> HeckeElement:
    """``sum_pi (-x^-1 s^-1)^l(pi) omega_pi``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    _guard(n, DIRECT_SUM_GUARD, "b_n")
    return _b_n(n)


def _split_build(n: int, weight: LaurentPoly) -> HeckeElement:
    # a_n = a_{n-1} (x) a_1 + sum_i w^(i+1) a_{n-1} sigma_{n-1} ... sigma_{n-1-i}
    if n <= 1:
        return HeckeElement.identity(n)
    prev = embed(_split_build(n - 1, weight), 0, n)
    total = prev
    cur = prev
    w = ONE
    for i in range(n - 1):
        cur = _times_gen(cur, n - 1 - i)
        w = w * weight
        total = total + cur.scale(w)
    return total


def a_n_recursive(n: int) -> HeckeElement:
    _guard(n, DIRECT_SUM_GUARD, "a_n")
    return _split_build(n, _ROW_WEIGHT)


def b_n_recursive(n: int) -> HeckeElement:
    _guard(n, DIRECT_SUM_GUARD, "b_n")
    return _split_build(n, _COL_WEIGHT)


def split_plus(n: int, root: str) -> HeckeElement:
    """Right-hand side of the one-correction-term form of ``a_n`` (``root='a'``)
    or ``b_n`` (``root='b'``):

        a_n = a' + x^-1 s^(n-1) [n-1] / alpha_row(n-1) * a' sigma_{n-1} a'
        b_n = b' - x^-1 s^(1-n) [n-1] / alpha_col(n-1) * b' sigma_{n-1} b'

    where ``a' = a_{n-1} (x) 1``.  Scalars are RatFunc.
    """
    if n < 2:
        raise ValueError("split_plus needs n >= 2")
    if root == "a":
        base = embed(a_n(n - 1), 0, n)
        coeff = RatFunc(X_INV * LaurentPoly.monomial(s=n - 1) * qint(n - 1), alpha_row(n - 1))
    elif root == "b":
        base = embed(b_n(n - 1), 0, n)
        coeff = RatFunc(-X_INV * LaurentPoly.monomial(s=1 - n) * qint(n - 1), alpha_col(n - 1))
    else:
        raise ValueError(f"root must be 'a' or 'b', got {root!r}")
    correction = mul(_times_gen(base, n - 1), base)
    return base.to_ratfunc() + correction.scale(coeff)


def _root(root: str) -> LaurentPoly:
    if root == "a":
        return A_ROOT
    if root == "b":
        return B_ROOT
    raise ValueError(f"root must be 'a' or 'b', got {root!r}")


def phi(h: HeckeElement, root: str) -> Scalar:
    """The algebra homomorphism to scalars sending every generator to the root."""
    r = _root(root)
    lengths = tables(h.n).lengths
    total = LaurentPoly.const(0)
    for k, c in h._t.items():
        total = c * r ** lengths[k] + total
    return total


# embeddings and Young quasi-idempotents -------------------------------------


def embed(h: HeckeElement, offset: int, n: int) -> HeckeElement:
    """Place ``h`` on strands ``offset+1 .. offset+m`` of ``n``, other strands straight."""
    m = h.n
    if offset < 0 or offset + m > n:
        raise ValueError(f"cannot embed {m} strands at offset {offset} into {n}")
    src, dst = tables(m), tables(n)
    head = tuple(range(1, offset + 1))
    tail = tuple(range(offset + m + 1, n + 1))
    d = {}
    for k, c in h._t.items():
        p = head + tuple(offset + j for j in src.perms[k]) + tail
        d[dst.index[p]] = c
    return HeckeElement._raw(n, d)


def tensor(h1: HeckeElement, h2: HeckeElement) -> HeckeElement:
    """Juxtaposition ``h1 (x) h2`` with ``h1`` on the first strands."""
    n1, n2 = h1.n, h2.n
    t1, t2, t = tables(n1), tables(n2), tables(n1 + n2)
    d = {}
    for k1, c1 in h1._t.items():
        p1 = t1.perms[k1]
        for k2, c2 in h2._t.items():
            p = p1 + tuple(n1 + j for j in t2.perms[k2])
            v = c1 * c2
            if v:
                d[t.index[p]] = v
    return HeckeElement._raw(n1 + n2, d)


def E_lambda(lam: YoungDiagram, root: str) -> HeckeElement:
    """``a_{lambda_i}`` (root 'a') or ``b_{lambda_i}`` (root 'b') on each row block of ``T(lambda)``."""
    _guard(lam.size, DIRECT_SUM_GUARD, "E_lambda")
    block = {"a": a_n, "b": b_n}.get(root)
    if block is None:
        raise ValueError(f"root must be 'a' or 'b', got {root!r}")
    h = HeckeElement.identity(0)
    for r in lam.rows:
        h = tensor(h, block(r))
    return h


@lru_cache(maxsize=None)
def _e_lambda(lam: YoungDiagram) -> HeckeElement:
    pi = pi_lambda(lam)
    w = basis_element(pi)
    return E_lambda(lam, "a") * w * E_lambda(lam.conjugate, "b") * basis_inverse(pi)


def e_lambda(lam: YoungDiagram) -> HeckeElement:
    """``E_lambda(a) omega_pi E_{lambda^v}(b) omega_pi^-1`` with ``pi = pi_lambda``."""
    _guard(lam.size, E_LAMBDA_GUARD, "e_lambda")
    return _e_lambda(lam)


def yokota_scalar(lam: YoungDiagram) -> RatFunc:
    """``1 / (prod alpha_row(lambda_i) * (prod alpha_col(lambda^v_j))^2)``."""
    den = ONE
    for r in lam.rows:
        den = den * alpha_row(r)
    cols = ONE
    for c in lam.conjugate.rows:
        cols = cols * alpha_col(c)
    return RatFunc(ONE, den * cols * cols)


def yokota_epsilon(lam: YoungDiagram) -> HeckeElement:
    """Row block sandwiched between two copies of the conjugated column block, normalised."""
    _guard(lam.size, E_LAMBDA_GUARD, "yokota_epsilon")
    pi = pi_lambda(lam)
    cols = basis_element(pi) * E_lambda(lam.conjugate, "b") * basis_inverse(pi)
    core = cols * E_lambda(lam, "a") * cols
    return core.scale(yokota_scalar(lam))


# closure ---------------------------------------------------------------------


@lru_cache(maxsize=None)
def _closure_table(n: int) -> tuple[dict[int, int], dict[int, dict]]:
    """Per basis element of H_n: the H_{n-1} image of closing strand n.

    Returns ``(circle, curl)``: ``circle[k]`` is the index of ``omega_pi``
    restricted when ``pi(n) = n`` (factor delta); ``curl[k]`` is the expansion
    of ``omega_pi' * omega_cycle(j..n-1)`` (factor x v^-1) otherwise.
    """
    t, t1 = tables(n), tables(n - 1)
    circle: dict[int, int] = {}
    curl: dict[int, dict] = {}
    for k, p in enumerate(t.perms):
        if p[n - 1] == n:
            circle[k] = t1.index[p[: n - 1]]
            continue
        rest, j = peel_last_strand(p)
        cur = {t1.index[rest]: ONE}
        for g in range(n - 2, j - 1, -1):
            cur = _pykernel.times_gen(t1, cur, g - 1, XZ, X2)
        curl[k] = cur
    return circle, curl


def _common_denominator(h: HeckeElement) -> tuple[dict[int, LaurentPoly], LaurentPoly]:
    """Numerators over one shared denominator."""
    if h.is_polynomial():
        return dict(h._t), ONE
    dens: list[LaurentPoly] = []
    for c in h._t.values():
        d = c.den if isinstance(c, RatFunc) else ONE
        if not any(d == e for e in dens):
            dens.append(d)
    if len(dens) == 1:
        D = dens[0]
        return {k: (c.num if isinstance(c, RatFunc) else c * D) for k, c in h._t.items()}, D
    D = ONE
    for d in dens:
        D = D * d
    nums = {}
    for k, c in h._t.items():
        if isinstance(c, RatFunc):
            nums[k] = c.num * exact_div(D, c.den)
        else:
            nums[k] = c * D
    return nums, D


_CIRCLE_NUM = V ** -1 - V  # delta * z
_CURL_NUM = CURL * Z


def _close_numerators(n: int, nums: dict) -> dict:
    # returns z * (closure of strand n), so the shared denominator gains a factor z
    circle, curl = _closure_table(n)
    out: dict = {}
    for k, c in nums.items():
        if k in circle:
            k1 = circle[k]
            v = c * _CIRCLE_NUM
            out[k1] = out[k1] + v if k1 in out else v
        else:
            cc = c * _CURL_NUM
            for k1, e in curl[k].items():
                v = cc * e
                out[k1] = out[k1] + v if k1 in out else v
    return {k: c for k, c in out.items() if c}


def partial_closure(h: HeckeElement) -> HeckeElement:
    """Close the last strand: a Lambda-linear map ``H_n -> H_{n-1}``.

    Fixed last strand gives a disjoint circle (factor delta); otherwise the
    last strand forms a positive curl (factor x v^-1) after peeling.
    """
    if h.n < 1:
        raise ValueError("nothing to close on 0 strands")
    nums, D = _common_denominator(h)
    out = _close_numerators(h.n, nums)
    den = D * Z
    return HeckeElement._raw(h.n - 1, {k: RatFunc(c, den) for k, c in out.items()})


def closure_eval(h: HeckeElement) -> RatFunc:
    """Framed Homfly value of the closure of ``h`` (empty diagram = 1)."""
    nums, D = _common_denominator(h)
    n = h.n
    while n > 0:
        nums = _close_numerators(n, nums)
        D = D * Z
        n -= 1
    return RatFunc(nums.get(0, LaurentPoly.const(0)), D)


def homfly_of_braid(word: BraidWord) -> RatFunc:
    return closure_eval(from_braid_word(word))


def normalized_homfly(word: BraidWord) -> RatFunc:
    """Framed value divided by ``(x v^-1)^writhe`` and by the unknot value."""
    value = homfly_of_braid(word)
    w = word.writhe
    framing = CURL ** w if w >= 0 else (CURL ** -1) ** (-w)
    out = (value / (RatFunc(framing) * DELTA)).reduced()
    for part in (out.num, out.den):
        if part and part.degree_range(0) != (0, 0):
            raise ArithmeticError(f"x did not cancel in normalized Homfly value {out}")
    return out
