"""Permutations, positive permutation braid words and braid-word input.

Composition is left to right, matching the stacking convention for tangles:
``compose(p, q)`` sends ``i`` to ``q(p(i))``, i.e. ``p`` is placed above ``q``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as _itperms
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Permutation",
    "BraidWord",
    "compose",
    "inverse",
    "length",
    "reduced_word",
    "peel_last_strand",
    "cycle_to",
    "identity",
    "transposition",
    "all_permutations",
    "parse_braid_word",
]


class Permutation(tuple):
    """One-line notation: entry ``i-1`` is the image of ``i``."""

    __slots__ = ()

    def __new__(cls, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        return super().__new__(cls, images)

    @classmethod
    def _trusted(cls, images) -> "Permutation":
        return tuple.__new__(cls, images)

    @property
    def degree(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def __repr__(self):
        return f"Permutation({tuple(self)})"

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting from its smallest entry."""
        seen = set()
        out = []
        for start in range(1, len(self) + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out


def identity(n: int) -> Permutation:
    return Permutation._trusted(range(1, n + 1))


def transposition(n: int, i: int) -> Permutation:
    """The simple transposition ``(i, i+1)`` in ``S_n``."""
    if not 1 <= i < n:
        raise ValueError(f"generator index {i} out of range for {n} strands")
    p = list(range(1, n + 1))
    p[i - 1], p[i] = p[i], p[i - 1]
    return Permutation._trusted(p)


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of ``S_n`` in lexicographic order of one-line notation."""
    for p in _itperms(range(1, n + 1)):
        yield Permutation._trusted(p)


def compose(p: Permutation, q: Permutation) -> Permutation:
    if len(p) != len(q):
        raise ValueError(f"degree mismatch: {len(p)} vs {len(q)}")
    return Permutation._trusted(q[i - 1] for i in p)


def inverse(p: Permutation) -> Permutation:
    inv = [0] * len(p)
    for i, j in enumerate(p, 1):
        inv[j - 1] = i
    return Permutation._trusted(inv)


def length(p: Sequence[int]) -> int:
    """Number of inversions."""
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def reduced_word(p: Permutation) -> list[int]:
    """Positive word ``[i1, ..., ik]`` with ``omega_p = sigma_i1 ... sigma_ik``.

    Strips the smallest right descent repeatedly: if value ``i+1`` precedes
    value ``i`` in one-line notation then ``p = p' * s_i`` with ``p'`` shorter.
    """
    cur = list(p)
    pos = {v: k for k, v in enumerate(cur)}
    word = []
    while True:
        for i in range(1, len(cur)):
            if pos[i] > pos[i + 1]:
                a, b = pos[i], pos[i + 1]
                cur[a], cur[b] = i + 1, i
                pos[i], pos[i + 1] = b, a
                word.append(i)
                break
        else:
            break
    word.reverse()
    return word


def cycle_to(n: int, j: int) -> Permutation:
    """The cycle ``(j j+1 ... n)`` read as ``n -> j``, ``k -> k+1`` for ``j <= k < n``.

    Its positive braid is ``sigma_{n-1} sigma_{n-2} ... sigma_j``.
    """
    if not 1 <= j <= n:
        raise ValueError(f"cycle start {j} out of range for degree {n}")
    images = list(range(1, n + 1))
    for k in range(j, n):
        images[k - 1] = k + 1
    images[n - 1] = j
    return Permutation._trusted(images)


def peel_last_strand(p: Permutation) -> tuple[Permutation, int]:
    """Split ``p = compose(p', cycle_to(n, j))`` with ``j = p(n)`` and ``p'(n) = n``.

    ``p'`` is returned restricted to ``S_{n-1}``.
    """
    n = len(p)
    if n < 1:
        raise ValueError("cannot peel a strand from the empty permutation")
    j = p[n - 1]
    images = [k if k < j else k - 1 for k in p[: n - 1]]
    return Permutation._trusted(images), j


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        object.__setattr__(self, "letters", tuple(self.letters))
        for g in self.letters:
            if g == 0 or abs(g) >= self.strands:
                raise ValueError(
                    f"generator {g} invalid on {self.strands} strands "
                    f"(need 1 <= |g| <= {self.strands - 1})"
                )

    @property
    def writhe(self) -> int:
        return sum(1 if g > 0 else -1 for g in self.letters)

    def permutation(self) -> Permutation:
        p = identity(self.strands)
        for g in self.letters:
            p = compose(p, transposition(self.strands, abs(g)))
        return p

    def __str__(self):
        return " ".join(str(g) for g in self.letters)


def parse_braid_word(text: str, strands: int) -> BraidWord:
    """Parse whitespace-separated signed generator indices, e.g. ``"1 -2 1"``."""
    try:
        letters = tuple(int(tok) for tok in text.split())
    except ValueError as exc:
        raise ValueError(f"malformed braid word {text!r}") from exc
    return BraidWord(strands, letters)
