# distutils: language = c++
# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Hecke multiplication on packed Laurent polynomials.

Same algorithm as ``_pykernel.mul``.  Coefficients are int64; any overflow
raises ``OverflowError`` so the caller can redo the product in Python with
arbitrary-precision integers.
"""
from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector
from libc.stdint cimport int64_t

ctypedef unordered_map[int64_t, int64_t] Poly
ctypedef vector[Poly] Elem

cdef extern from *:
    """
    static inline int sk_add_ovf(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    static inline int sk_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    """
    bint sk_add_ovf(long long a, long long b, long long *r) noexcept nogil
    bint sk_mul_ovf(long long a, long long b, long long *r) noexcept nogil


cdef struct Ctx:
    int size
    const int* rmul
    const signed char* up
    const int* cstart
    const int* cnode
    const int* cgen
    const unsigned char* need
    const unsigned char* has_right
    int64_t zero


cdef bint poly_add(Poly& acc, Poly& a) noexcept nogil:
    cdef long long s
    for kv in a:
        if kv.second == 0:
            continue
        if sk_add_ovf(acc[kv.first], kv.second, &s):
            return True
        acc[kv.first] = s
    return False


cdef bint poly_addmul(Poly& acc, Poly& a, Poly& b, int64_t zero) noexcept nogil:
    cdef long long p, s
    cdef int64_t off
    for ka in a:
        if ka.second == 0:
            continue
        off = ka.first - zero
        for kb in b:
            if kb.second == 0:
                continue
            if sk_mul_ovf(ka.second, kb.second, &p):
                return True
            if sk_add_ovf(acc[kb.first + off], p, &s):
                return True
            acc[kb.first + off] = s
    return False


cdef bint times_gen(Ctx* ctx, Elem& cur, Elem& out, int g, Poly& xz, Poly& x2) noexcept nogil:
    cdef int size = ctx.size
    cdef int k, k2
    cdef const int* tgt = ctx.rmul + g * size
    cdef const signed char* up = ctx.up + g * size
    out.resize(size)
    for k in range(size):
        if cur[k].empty():
            continue
        k2 = tgt[k]
        if up[k]:
            if poly_add(out[k2], cur[k]):
                return True
        else:
            if poly_addmul(out[k], cur[k], xz, ctx.zero):
                return True
            if poly_addmul(out[k2], cur[k], x2, ctx.zero):
                return True
    return False


cdef bint visit(Ctx* ctx, int node, Elem& cur, Elem& right, Elem& result,
                Poly& xz, Poly& x2) noexcept nogil:
    cdef int k, e, child
    cdef Elem nxt
    if ctx.has_right[node]:
        for k in range(ctx.size):
            if not cur[k].empty():
                if poly_addmul(result[k], cur[k], right[node], ctx.zero):
                    return True
    for e in range(ctx.cstart[node], ctx.cstart[node + 1]):
        child = ctx.cnode[e]
        if not ctx.need[child]:
            continue
        nxt.clear()
        if times_gen(ctx, cur, nxt, ctx.cgen[e], xz, x2):
            return True
        if visit(ctx, child, nxt, right, result, xz, x2):
            return True
    return False


cdef void load_elem(dict src, Elem& dst, int size) except *:
    dst.resize(size)
    for idx, poly in src.items():
        for key, c in poly.items():
            dst[<int>idx][<int64_t>key] = <int64_t>c


cdef void load_poly(dict src, Poly& dst) except *:
    for key, c in src.items():
        dst[<int64_t>key] = <int64_t>c


def mul(t, dict left, dict right, dict xz, dict x2):
    """Packed-polynomial version of ``_pykernel.mul``.

    ``left``/``right`` map basis index to ``{packed monomial: coefficient}``.
    """
    if not left or not right:
        return {}
    from .ring import ZERO_KEY

    cdef int size = t.size
    cdef const int[:] rmul = t.rmul
    cdef const signed char[:] up = t.up
    cdef const int[:] cstart = t.child_start
    cdef const int[:] cnode = t.child_node
    cdef const int[:] cgen = t.child_gen
    cdef bytearray need = t.needed(right)
    cdef bytearray has_right = bytearray(size)
    for idx in right:
        has_right[idx] = 1
    cdef const unsigned char[:] need_v = need
    cdef const unsigned char[:] has_v = has_right

    cdef Ctx ctx
    ctx.size = size
    ctx.rmul = &rmul[0] if rmul.shape[0] else NULL
    ctx.up = &up[0] if up.shape[0] else NULL
    ctx.cstart = &cstart[0]
    ctx.cnode = &cnode[0] if cnode.shape[0] else NULL
    ctx.cgen = &cgen[0] if cgen.shape[0] else NULL
    ctx.need = &need_v[0]
    ctx.has_right = &has_v[0]
    ctx.zero = <int64_t>ZERO_KEY

    cdef Elem L, R, result
    cdef Poly pxz, px2
    load_elem(left, L, size)
    load_elem(right, R, size)
    load_poly(xz, pxz)
    load_poly(x2, px2)
    result.resize(size)

    cdef bint overflow
    with nogil:
        overflow = visit(&ctx, 0, L, R, result, pxz, px2)
    if overflow:
        raise OverflowError("int64 overflow in compiled Hecke kernel")

    out = {}
    cdef int k
    for k in range(size):
        if result[k].empty():
            continue
        d = {}
        for kv in result[k]:
            if kv.second != 0:
                d[kv.first] = kv.second
        if d:
            out[k] = d
    return out
