"""Exact Laurent polynomials in ``x, v, s`` and their fractions.

Monomials are packed into a single integer so that multiplying monomials is
integer addition and sorting packed keys sorts lexicographically on
``(s_exp, v_exp, x_exp)``.  Each exponent must stay inside
``[-2**20, 2**20)``.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Mapping, Union

__all__ = [
    "LaurentMonomial",
    "LaurentPoly",
    "RatFunc",
    "UniLaurent",
    "NotDivisibleError",
    "qint",
    "qfact",
    "exact_div",
    "substitute",
    "eval_s1",
    "ONE",
    "ZERO",
    "X",
    "V",
    "S",
    "Z",
    "DELTA",
]

_BITS = 21
_BIAS = 1 << (_BITS - 1)
_MASK = (1 << _BITS) - 1
ZERO_KEY = (_BIAS << (2 * _BITS)) | (_BIAS << _BITS) | _BIAS


class NotDivisibleError(ArithmeticError):
    """Raised when an exact division has a nonzero remainder."""


def pack(x: int = 0, v: int = 0, s: int = 0) -> int:
    return ((s + _BIAS) << (2 * _BITS)) | ((v + _BIAS) << _BITS) | (x + _BIAS)


def unpack(key: int) -> tuple[int, int, int]:
    """Packed key -> ``(x_exp, v_exp, s_exp)``."""
    return (
        (key & _MASK) - _BIAS,
        ((key >> _BITS) & _MASK) - _BIAS,
        (key >> (2 * _BITS)) - _BIAS,
    )


class LaurentMonomial(tuple):
    """``x^a v^b s^c`` as the triple ``(a, b, c)``; ordered by ``(c, b, a)``."""

    __slots__ = ()

    def __new__(cls, x_exp: int = 0, v_exp: int = 0, s_exp: int = 0):
        return super().__new__(cls, (x_exp, v_exp, s_exp))

    x_exp = property(lambda self: self[0])
    v_exp = property(lambda self: self[1])
    s_exp = property(lambda self: self[2])

    def key(self) -> int:
        return pack(*self)

    def __lt__(self, other):
        return self.key() < other.key()

    def __le__(self, other):
        return self.key() <= other.key()

    def __gt__(self, other):
        return self.key() > other.key()

    def __ge__(self, other):
        return self.key() >= other.key()

    def __mul__(self, other):
        return LaurentMonomial(*(a + b for a, b in zip(self, other)))

    def __str__(self):
        return _monomial_str(self.key()) or "1"


def _monomial_str(key: int) -> str:
    x, v, s = unpack(key)
    parts = []
    for name, e in (("x", x), ("v", v), ("s", s)):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def _render(terms: Mapping[int, int], monomial_str) -> str:
    if not terms:
        return "0"
    out = []
    for i, key in enumerate(sorted(terms, reverse=True)):
        c = terms[key]
        mono = monomial_str(key)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if i == 0:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(out)


class LaurentPoly:
    """Immutable element of ``Z[x^±1, v^±1, s^±1]``."""

    __slots__ = ("_t", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int, int], int] | None = None):
        t: dict[int, int] = {}
        for (x, v, s), c in (terms or {}).items():
            if c:
                k = pack(x, v, s)
                t[k] = t.get(k, 0) + c
        self._t = {k: c for k, c in t.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, packed: dict[int, int]) -> "LaurentPoly":
        # caller guarantees no zero coefficients
        p = object.__new__(cls)
        p._t = packed
        p._hash = None
        return p

    @classmethod
    def monomial(cls, coeff: int = 1, x: int = 0, v: int = 0, s: int = 0) -> "LaurentPoly":
        return cls._raw({pack(x, v, s): coeff} if coeff else {})

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls._raw({ZERO_KEY: c} if c else {})

    @property
    def packed(self) -> dict[int, int]:
        return self._t

    def terms(self) -> Iterator[tuple[LaurentMonomial, int]]:
        """Terms in printing order (descending on ``(s, v, x)``)."""
        for k in sorted(self._t, reverse=True):
            yield LaurentMonomial(*unpack(k)), self._t[k]

    def __len__(self):
        return len(self._t)

    def __bool__(self):
        return bool(self._t)

    def is_monomial(self) -> bool:
        return len(self._t) == 1

    def only_s(self) -> bool:
        return all(unpack(k)[:2] == (0, 0) for k in self._t)

    def degree_range(self, var: int) -> tuple[int, int]:
        """Min and max exponent of variable ``var`` (0=x, 1=v, 2=s)."""
        exps = [unpack(k)[var] for k in self._t]
        return min(exps), max(exps)

    # arithmetic ---------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "LaurentPoly | None":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if len(o._t) > len(self._t):
            a, b = o._t, self._t
        else:
            a, b = self._t, o._t
        out = dict(a)
        for k, c in b.items():
            c2 = out.get(k, 0) + c
            if c2:
                out[k] = c2
            else:
                del out[k]
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({k: -c for k, c in self._t.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return ZERO
            return LaurentPoly._raw({k: c * other for k, c in self._t.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._t, other._t
        if len(a) > len(b):
            a, b = b, a
        if len(a) == 1:
            (ka, ca), = a.items()
            off = ka - ZERO_KEY
            return LaurentPoly._raw({kb + off: ca * cb for kb, cb in b.items()})
        out: dict[int, int] = {}
        get = out.get
        for ka, ca in a.items():
            off = ka - ZERO_KEY
            for kb, cb in b.items():
                k = kb + off
                out[k] = get(k, 0) + ca * cb
        return LaurentPoly._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            if not self.is_monomial():
                raise NotDivisibleError("only monomials are units")
            (k, c), = self._t.items()
            if c not in (1, -1):
                raise NotDivisibleError("only monomials with coefficient ±1 are units")
            off = k - ZERO_KEY
            return LaurentPoly._raw({ZERO_KEY - off * (-e): c ** (-e)})
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self, o)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(o, self)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._t == o._t

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    # substitutions ------------------------------------------------------
    def invert_s(self) -> "LaurentPoly":
        """Image under ``s -> s^-1``."""
        out = {}
        for k, c in self._t.items():
            x, v, s = unpack(k)
            out[pack(x, v, -s)] = c
        return LaurentPoly._raw(out)

    def subs_monomial(self, x=(0, 0, 0), v=(0, 0, 0), s=(0, 0, 0)) -> "LaurentPoly":
        """Substitute each variable by a monomial, given as exponent triples."""
        out: dict[int, int] = {}
        for k, c in self._t.items():
            a, b, d = unpack(k)
            key = pack(
                a * x[0] + b * v[0] + d * s[0],
                a * x[1] + b * v[1] + d * s[1],
                a * x[2] + b * v[2] + d * s[2],
            )
            out[key] = out.get(key, 0) + c
        return LaurentPoly._raw({k: c for k, c in out.items() if c})

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"

    def __str__(self):
        return _render(self._t, _monomial_str)


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly.const(1)
X = LaurentPoly.monomial(x=1)
V = LaurentPoly.monomial(v=1)
S = LaurentPoly.monomial(s=1)
Z = S - S ** -1

Scalar = Union[LaurentPoly, "RatFunc"]


def _monomial_content(p: LaurentPoly) -> tuple[int, int, int]:
    """Componentwise minimum exponent over the terms of ``p``."""
    exps = [unpack(k) for k in p.packed]
    return tuple(min(e[i] for e in exps) for i in range(3))


class RatFunc:
    """Quotient ``num/den`` of Laurent polynomials.

    No gcd is taken; equality is decided by cross-multiplication.  When
    denominators coincide (the usual case inside a single computation) sums
    keep the shared denominator.
    """

    __slots__ = ("num", "den")
    __hash__ = None  # equality is not canonical

    def __init__(self, num, den=ONE):
        num = LaurentPoly._coerce(num)
        den = LaurentPoly._coerce(den)
        if num is None or den is None:
            raise TypeError("RatFunc needs LaurentPoly or int parts")
        if not den:
            raise ZeroDivisionError("zero denominator")
        self.num = num
        self.den = den

    @staticmethod
    def _coerce(other) -> "RatFunc | None":
        if isinstance(other, RatFunc):
            return other
        p = LaurentPoly._coerce(other)
        return None if p is None else RatFunc(p)

    def __bool__(self):
        return bool(self.num)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        if o.den == ONE:
            return RatFunc(self.num + o.num * self.den, self.den)
        if self.den == ONE:
            return RatFunc(self.num * o.den + o.num, o.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return RatFunc(self.num * other, self.den)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            raise ZeroDivisionError("division by zero RatFunc")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, e: int):
        if e < 0:
            return RatFunc(self.den ** -e, self.num ** -e)
        return RatFunc(self.num ** e, self.den ** e)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    def to_poly(self) -> LaurentPoly | None:
        """The quotient as a Laurent polynomial, or None if not divisible."""
        try:
            return exact_div(self.num, self.den)
        except NotDivisibleError:
            return None

    def reduced(self) -> "RatFunc":
        """Cosmetic form: strip common monomial content and common factors.

        Only the factors that arise in this setting are tried: cyclotomic
        polynomials in ``s`` and ``v`` and ``s^c +- v``.  The result is not a
        full gcd reduction, but it is deterministic.
        """
        num, den = self.num, self.den
        if not num:
            return RatFunc(ZERO)
        q = self.to_poly()
        if q is not None:
            return RatFunc(q)
        cn, cd = _monomial_content(num), _monomial_content(den)
        shift = LaurentPoly.monomial(1, *(-min(a, b) for a, b in zip(cn, cd)))
        num, den = num * shift, den * shift
        for f in _cancel_candidates():
            if len(den) == 1:
                break
            while True:
                try:
                    n2, d2 = exact_div(num, f), exact_div(den, f)
                except NotDivisibleError:
                    break
                num, den = n2, d2
        # make the leading denominator coefficient positive
        lead = max(den.packed)
        if den.packed[lead] < 0:
            num, den = -num, -den
        return RatFunc(num, den)

    def __repr__(self):
        return f"RatFunc({str(self.num)!r}, {str(self.den)!r})"

    def __str__(self):
        r = self.reduced()
        if r.den == ONE:
            return str(r.num)
        num = str(r.num)
        if len(r.num) > 1:
            num = f"({num})"
        den = str(r.den)
        if len(r.den) > 1:
            den = f"({den})"
        return f"{num}/{den}"


DELTA = RatFunc(V ** -1 - V, Z)


def _cyclotomic(d: int, var: str) -> LaurentPoly:
    t = LaurentPoly.monomial(**{var: 1})
    p = t ** d - ONE
    for e in range(1, d):
        if d % e == 0:
            p = exact_div(p, _cyclotomic_cached(e, var))
    return p


@lru_cache(maxsize=None)
def _cyclotomic_cached(d: int, var: str) -> LaurentPoly:
    return _cyclotomic(d, var)


@lru_cache(maxsize=1)
def _cancel_candidates() -> tuple[LaurentPoly, ...]:
    out = [_cyclotomic_cached(d, "s") for d in range(1, 41)]
    out += [_cyclotomic_cached(d, "v") for d in range(1, 5)]
    for c in range(-12, 13):
        out.append(LaurentPoly.monomial(s=c) - V)
        out.append(LaurentPoly.monomial(s=c) + V)
    return tuple(out)


@lru_cache(maxsize=None)
def qint(k: int) -> LaurentPoly:
    """Quantum integer ``[k] = s^(k-1) + s^(k-3) + ... + s^(1-k)``."""
    if k < 0:
        raise ValueError(f"qint needs k >= 0, got {k}")
    return LaurentPoly._raw({pack(s=k - 1 - 2 * i): 1 for i in range(k)})


@lru_cache(maxsize=None)
def qfact(k: int) -> LaurentPoly:
    if k < 0:
        raise ValueError(f"qfact needs k >= 0, got {k}")
    return ONE if k == 0 else qfact(k - 1) * qint(k)


def exact_div(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Return ``r`` with ``r*q == p``, or raise :class:`NotDivisibleError`.

    Long division on lex-leading terms.  Every quotient term must lie in the
    exponent box forced by the Newton polytopes of ``p`` and ``q``; leaving the
    box proves non-divisibility and guarantees termination.
    """
    if not q:
        raise ZeroDivisionError("exact_div by zero")
    if not p:
        return ZERO
    qt = q.packed
    lead_q = max(qt)
    lead_c = qt[lead_q]
    lo = [a - b for a, b in zip(_ranges(p)[0], _ranges(q)[0])]
    hi = [a - b for a, b in zip(_ranges(p)[1], _ranges(q)[1])]
    if any(l > h for l, h in zip(lo, hi)):
        raise NotDivisibleError("not divisible")
    rem = dict(p.packed)
    quot: dict[int, int] = {}
    while rem:
        lead_r = max(rem)
        c, m = divmod(rem[lead_r], lead_c)
        if m:
            raise NotDivisibleError("not divisible")
        off = lead_r - lead_q
        e = unpack(off + ZERO_KEY)
        if any(not (l <= ei <= h) for l, ei, h in zip(lo, e, hi)):
            raise NotDivisibleError("not divisible")
        quot[off + ZERO_KEY] = c
        for kq, cq in qt.items():
            k = kq + off
            v = rem.get(k, 0) - c * cq
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    return LaurentPoly._raw(quot)


def _ranges(p: LaurentPoly) -> tuple[list[int], list[int]]:
    exps = [unpack(k) for k in p.packed]
    return (
        [min(e[i] for e in exps) for i in range(3)],
        [max(e[i] for e in exps) for i in range(3)],
    )


class UniLaurent:
    """Laurent polynomial in one named variable (used for ``u = s^(1/N)``)."""

    __slots__ = ("_t", "var")

    def __init__(self, terms: Mapping[int, int], var: str = "u"):
        self._t = {e: c for e, c in terms.items() if c}
        self.var = var

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._t)

    def __eq__(self, other):
        if not isinstance(other, UniLaurent):
            return NotImplemented
        return self._t == other._t

    def __hash__(self):
        return hash(frozenset(self._t.items()))

    def __mul__(self, other):
        if not isinstance(other, UniLaurent):
            return NotImplemented
        out: dict[int, int] = {}
        for a, ca in self._t.items():
            for b, cb in other._t.items():
                out[a + b] = out.get(a + b, 0) + ca * cb
        return UniLaurent(out, self.var)

    def __str__(self):
        var = self.var

        def mono(e):
            return "" if e == 0 else var if e == 1 else f"{var}^{e}"

        return _render(self._t, mono)

    def __repr__(self):
        return f"UniLaurent({str(self)!r})"


def substitute(p: LaurentPoly, N: int) -> UniLaurent:
    """Image of ``p`` under ``x -> u^-1, v -> u^(-N^2), s -> u^N``."""
    if N < 1:
        raise ValueError("N must be >= 1")
    out: dict[int, int] = {}
    for k, c in p.packed.items():
        x, v, s = unpack(k)
        e = -x - N * N * v + N * s
        out[e] = out.get(e, 0) + c
    return UniLaurent(out, "u")


def eval_s1(p: LaurentPoly) -> int:
    """Value at ``s = 1`` of a polynomial in ``s`` alone."""
    if not p.only_s():
        raise ValueError(f"eval_s1 needs a polynomial in s only, got {p}")
    return sum(p.packed.values())
