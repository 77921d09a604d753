"""Per-degree lookup tables for the positive-permutation-braid basis of H_n."""
from __future__ import annotations

from array import array
from functools import lru_cache

from .braid import Permutation, all_permutations, length, reduced_word

# Beyond this the tables alone would not fit comfortably in memory.
MAX_TABLE_DEGREE = 9


class BasisTables:
    """Index ``S_n`` (lexicographic, identity at index 0) and record right
    multiplication by each generator.

    ``rmul[g * size + k]`` is the index of ``perm_k * s_{g+1}`` and
    ``up[g * size + k]`` is 1 when that product is longer than ``perm_k``.
    The DFS tree links each non-identity permutation to the parent obtained
    by stripping the last letter of its reduced word; ``child_start``,
    ``child_node`` and ``child_gen`` store the tree in CSR form.
    """

    def __init__(self, n: int):
        if n > MAX_TABLE_DEGREE:
            raise ValueError(f"basis tables for n={n} exceed the hard limit {MAX_TABLE_DEGREE}")
        self.n = n
        self.perms: list[Permutation] = list(all_permutations(n))
        self.size = len(self.perms)
        self.index = {p: k for k, p in enumerate(self.perms)}
        self.lengths = array("i", (length(p) for p in self.perms))
        size = self.size
        gens = max(n - 1, 0)
        self.gens = gens
        self.rmul = array("i", [0]) * (gens * size)
        self.up = array("b", [0]) * (gens * size)
        for k, p in enumerate(self.perms):
            for g in range(gens):
                q = list(p)
                a, b = q.index(g + 1), q.index(g + 2)
                q[a], q[b] = g + 2, g + 1
                k2 = self.index[tuple(q)]
                self.rmul[g * size + k] = k2
                self.up[g * size + k] = 1 if a < b else 0

        self.parent = array("i", [-1]) * size
        self.parent_gen = array("i", [-1]) * size
        children: list[list[tuple[int, int]]] = [[] for _ in range(size)]
        for k, p in enumerate(self.perms):
            if k == 0:
                continue
            g = reduced_word(p)[-1] - 1
            par = self.rmul[g * size + k]
            self.parent[k] = par
            self.parent_gen[k] = g
            children[par].append((k, g))
        self.child_start = array("i", [0]) * (size + 1)
        self.child_node = array("i")
        self.child_gen = array("i")
        for k in range(size):
            self.child_start[k] = len(self.child_node)
            for c, g in children[k]:
                self.child_node.append(c)
                self.child_gen.append(g)
        self.child_start[size] = len(self.child_node)

    def rmul_gen(self, g: int) -> tuple[memoryview, memoryview]:
        s = self.size
        return memoryview(self.rmul)[g * s:(g + 1) * s], memoryview(self.up)[g * s:(g + 1) * s]

    def needed(self, support) -> bytearray:
        """Flags for nodes whose DFS subtree meets ``support``."""
        flags = bytearray(self.size)
        parent = self.parent
        for k in support:
            while k >= 0 and not flags[k]:
                flags[k] = 1
                k = parent[k]
        return flags

    def word(self, k: int) -> list[int]:
        """0-based generator word of the permutation with index ``k``."""
        out = []
        while k > 0:
            out.append(self.parent_gen[k])
            k = self.parent[k]
        out.reverse()
        return out


@lru_cache(maxsize=None)
def tables(n: int) -> BasisTables:
    return BasisTables(n)
