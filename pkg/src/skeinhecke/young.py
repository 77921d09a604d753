"""Young diagram combinatorics.

Cells are 1-indexed ``(row, col)``.  ``T(lambda)`` numbers the cells
``1..|lambda|`` row by row from the top.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations, product
from typing import Iterator, NamedTuple

from .braid import Permutation, all_permutations

__all__ = [
    "Cell",
    "YoungDiagram",
    "parse_partition",
    "partitions",
    "partitions_upto",
    "conjugate",
    "content",
    "hook_length",
    "extreme_cells",
    "extreme_rectangle",
    "tableau_index",
    "cell_of_index",
    "pi_lambda",
    "row_group_generators",
    "row_group",
    "separates",
    "is_inseparable",
    "SEPARABILITY_GUARD",
]

SEPARABILITY_GUARD = 8


class Cell(NamedTuple):
    row: int
    col: int

    def transpose(self) -> "Cell":
        return Cell(self.col, self.row)


@dataclass(frozen=True)
class YoungDiagram:
    rows: tuple[int, ...] = ()

    def __post_init__(self):
        rows = tuple(int(r) for r in self.rows)
        if any(r <= 0 for r in rows):
            raise ValueError(f"row lengths must be positive: {rows}")
        if any(a < b for a, b in zip(rows, rows[1:])):
            raise ValueError(f"row lengths must be weakly decreasing: {rows}")
        object.__setattr__(self, "rows", rows)

    @property
    def size(self) -> int:
        return sum(self.rows)

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def __contains__(self, cell) -> bool:
        i, j = cell
        return 1 <= i <= len(self.rows) and 1 <= j <= self.rows[i - 1]

    def __str__(self):
        return ",".join(map(str, self.rows))

    def row(self, i: int) -> int:
        """``lambda_i``, zero past the last row."""
        return self.rows[i - 1] if 1 <= i <= len(self.rows) else 0

    def cells(self) -> Iterator[Cell]:
        """Cells in ``T(lambda)`` order."""
        for i, r in enumerate(self.rows, 1):
            for j in range(1, r + 1):
                yield Cell(i, j)

    @cached_property
    def conjugate(self) -> "YoungDiagram":
        return conjugate(self)

    def remove(self, cell: Cell) -> "YoungDiagram":
        """Diagram with ``cell`` deleted; raises if the result is not a diagram."""
        if cell not in self:
            raise ValueError(f"{cell} not in {self}")
        rows = list(self.rows)
        if cell.col != rows[cell.row - 1]:
            raise ValueError(f"{cell} is not at the end of its row")
        rows[cell.row - 1] -= 1
        if cell.row < len(rows) and rows[cell.row - 1] < rows[cell.row]:
            raise ValueError(f"removing {tuple(cell)} from {self} does not leave a Young diagram")
        return YoungDiagram(tuple(r for r in rows if r))


def parse_partition(text: str) -> YoungDiagram:
    """``"4,2,1"`` -> ``YoungDiagram((4, 2, 1))``; the empty string is the empty diagram."""
    text = text.strip()
    if not text:
        return YoungDiagram(())
    try:
        rows = tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise ValueError(f"malformed partition {text!r}") from exc
    return YoungDiagram(rows)


def partitions(n: int) -> Iterator[YoungDiagram]:
    """Partitions of ``n`` in reverse lexicographic order, ``(n)`` first."""

    def rec(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    for rows in rec(n, n):
        yield YoungDiagram(rows)


def partitions_upto(max_cells: int, include_empty: bool = False) -> Iterator[YoungDiagram]:
    for n in range(0 if include_empty else 1, max_cells + 1):
        yield from partitions(n)


def conjugate(lam: YoungDiagram) -> YoungDiagram:
    first = lam.rows[0] if lam.rows else 0
    return YoungDiagram(tuple(sum(1 for r in lam.rows if r >= j) for j in range(1, first + 1)))


def _check_cell(lam: YoungDiagram | None, cell: Cell):
    if lam is not None and cell not in lam:
        raise ValueError(f"cell {tuple(cell)} is not in the diagram {lam}")


def content(cell: Cell, lam: YoungDiagram | None = None) -> int:
    _check_cell(lam, cell)
    return cell[1] - cell[0]


def hook_length(lam: YoungDiagram, cell: Cell) -> int:
    _check_cell(lam, cell)
    i, j = cell
    return lam.row(i) - j + lam.conjugate.row(j) - i + 1


def extreme_cells(lam: YoungDiagram) -> list[Cell]:
    return [c for c in lam.cells() if hook_length(lam, c) == 1]


def extreme_rectangle(lam: YoungDiagram, cell: Cell) -> list[Cell]:
    if cell not in lam or hook_length(lam, cell) != 1:
        raise ValueError(f"{tuple(cell)} is not an extreme cell of {lam}")
    return [Cell(i, j) for i in range(1, cell[0] + 1) for j in range(1, cell[1] + 1)]


def tableau_index(lam: YoungDiagram, cell: Cell) -> int:
    _check_cell(lam, cell)
    i, j = cell
    return sum(lam.rows[: i - 1]) + j


def cell_of_index(lam: YoungDiagram, k: int) -> Cell:
    if not 1 <= k <= lam.size:
        raise ValueError(f"index {k} out of range 1..{lam.size}")
    for i, r in enumerate(lam.rows, 1):
        if k <= r:
            return Cell(i, k)
        k -= r
    raise AssertionError("unreachable")


def pi_lambda(lam: YoungDiagram) -> Permutation:
    """Carries cell ``k`` of ``T(lambda)`` to the index of its transpose in ``T(lambda^v)``."""
    conj = lam.conjugate
    return Permutation(
        tableau_index(conj, cell_of_index(lam, k).transpose()) for k in range(1, lam.size + 1)
    )


def _row_blocks(lam: YoungDiagram) -> list[range]:
    blocks, start = [], 1
    for r in lam.rows:
        blocks.append(range(start, start + r))
        start += r
    return blocks


def row_group_generators(lam: YoungDiagram) -> list[int]:
    return [i for block in _row_blocks(lam) for i in list(block)[:-1]]


def row_group(lam: YoungDiagram) -> list[Permutation]:
    """All permutations preserving each row of ``T(lambda)`` (the group ``R(lambda)``)."""
    n = lam.size
    blocks = _row_blocks(lam)
    out = []
    for choice in product(*(list(permutations(b)) for b in blocks)):
        images = [0] * n
        for block, perm in zip(blocks, choice):
            for src, dst in zip(block, perm):
                images[src - 1] = dst
        out.append(Permutation._trusted(images))
    return out


def separates(pi: Permutation, lam: YoungDiagram, mu: YoungDiagram) -> bool:
    if not (lam.size == mu.size == len(pi)):
        raise ValueError(
            f"size mismatch: |lambda|={lam.size}, |mu|={mu.size}, degree={len(pi)}"
        )
    row_of = {}
    for i, block in enumerate(_row_blocks(mu)):
        for k in block:
            row_of[k] = i
    for block in _row_blocks(lam):
        targets = [row_of[pi(k)] for k in block]
        if len(set(targets)) != len(targets):
            return False
    return True


def is_inseparable(lam: YoungDiagram, mu: YoungDiagram, guard: int = SEPARABILITY_GUARD) -> bool:
    """Brute force over ``S_n``; refuses ``n`` above ``guard``."""
    if lam.size != mu.size:
        raise ValueError(f"size mismatch: {lam.size} vs {mu.size}")
    if lam.size > guard:
        raise ValueError(f"n={lam.size} exceeds the brute-force guard {guard}")
    return not any(separates(p, lam, mu) for p in all_permutations(lam.size))
