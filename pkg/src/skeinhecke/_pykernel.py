"""Pure-Python Hecke multiplication kernel.

Elements are dicts ``basis index -> scalar``; scalars only need ``+``, ``*``
and truthiness, so the same code serves Laurent polynomials and fractions.
The compiled kernel mirrors :func:`mul` on packed Laurent polynomials.
"""
from __future__ import annotations

from ._tables import BasisTables


def times_gen(t: BasisTables, cur: dict, g: int, xz, x2) -> dict:
    """Right multiplication by ``sigma_{g+1}``, using ``sigma^2 = xz sigma + x^2``."""
    tgt, up = t.rmul_gen(g)
    out: dict = {}
    get = out.get
    for k, c in cur.items():
        k2 = tgt[k]
        if up[k]:
            prev = get(k2)
            out[k2] = c if prev is None else prev + c
        else:
            prev = get(k)
            v = xz * c
            out[k] = v if prev is None else prev + v
            prev = get(k2)
            v = x2 * c
            out[k2] = v if prev is None else prev + v
    return {k: c for k, c in out.items() if c}


def mul(t: BasisTables, left: dict, right: dict, xz, x2) -> dict:
    """``left * right`` as ``sum_rho right[rho] * (left * omega_rho)``.

    ``left * omega_rho`` is built by walking the DFS tree of reduced words, so
    each node costs one generator multiplication; subtrees missing the
    support of ``right`` are skipped.
    """
    if not left or not right:
        return {}
    need = t.needed(right)
    start, node_of, gen_of = t.child_start, t.child_node, t.child_gen
    result: dict = {}
    get = result.get
    stack = [(0, left)]
    while stack:
        node, cur = stack.pop()
        d = right.get(node)
        if d is not None:
            for k, c in cur.items():
                prev = get(k)
                v = c * d
                result[k] = v if prev is None else prev + v
        for e in range(start[node], start[node + 1]):
            child = node_of[e]
            if need[child]:
                stack.append((child, times_gen(t, cur, gen_of[e], xz, x2)))
    return {k: c for k, c in result.items() if c}
