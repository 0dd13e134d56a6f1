# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled hot kernels; same contract as ``grs._kernels_py``."""

IMPLEMENTATION = "cython"

cdef dict _ONE = {(0, 0): 1}
cdef dict _MONO_CACHE = {}


cpdef dict poly_add(dict p, dict q, object scale=1):
    cdef dict out = dict(p)
    cdef object key, c, v
    for key, c in q.items():
        v = out.get(key, 0) + scale * c
        if v:
            out[key] = v
        else:
            out.pop(key, None)
    return out


cpdef dict poly_iadd(dict acc, dict q, object scale=1):
    cdef object key, c, v
    for key, c in q.items():
        v = acc.get(key, 0) + scale * c
        if v:
            acc[key] = v
        else:
            acc.pop(key, None)
    return acc


cpdef dict poly_mul(dict p, dict q):
    cdef dict out = {}
    cdef tuple ka, kb, key
    cdef object ca, cb, v
    cdef Py_ssize_t a0, a1
    for ka, ca in p.items():
        a0 = ka[0]
        a1 = ka[1]
        for kb, cb in q.items():
            key = (a0 + <Py_ssize_t>kb[0], a1 + <Py_ssize_t>kb[1])
            v = out.get(key, 0) + ca * cb
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return out


cdef dict _shift(dict p, Py_ssize_t er, Py_ssize_t es):
    cdef tuple key
    if er == 0 and es == 0:
        return p
    return {(<Py_ssize_t>key[0] + er, <Py_ssize_t>key[1] + es): c for key, c in p.items()}


cdef void _acc(dict out, tuple mono, dict p):
    cdef object cur = out.get(mono)
    if cur is None:
        out[mono] = dict(p)
    else:
        poly_iadd(<dict>cur, p)
        if not cur:
            del out[mono]


cdef dict _times_a(dict terms):
    cdef dict out = {}
    cdef tuple mono
    cdef dict p
    cdef Py_ssize_t k, l, t, m, n, j, e
    for mono, p in terms.items():
        k, l, t, m, n, j = mono
        e = 2 * (m + n)
        if l == 0:
            _acc(out, (k + 1, 0, t, m, n, j), _shift(p, e, 0))
        else:
            _acc(out, (0, l - 1, t, m, n, j + 1), _shift(p, e, 0))
            _acc(out, (0, l - 1, t, m + 1, n + 1, j), _shift(p, e + 2, 0))
    return out


cdef dict _times_d(dict terms):
    cdef dict out = {}
    cdef tuple mono
    cdef dict p
    cdef Py_ssize_t k, l, t, m, n, j, e
    for mono, p in terms.items():
        k, l, t, m, n, j = mono
        e = -2 * (m + n)
        if k == 0:
            _acc(out, (0, l + 1, t, m, n, j), _shift(p, e, 0))
        else:
            _acc(out, (k - 1, 0, t, m, n, j + 1), _shift(p, e, 0))
            _acc(out, (k - 1, 0, t, m + 1, n + 1, j), _shift(p, e - 2, 0))
    return out


cpdef tuple mono_mul(tuple x, tuple y):
    cdef tuple key = (x, y)
    cdef object hit = _MONO_CACHE.get(key)
    if hit is not None:
        return <tuple>hit
    cdef Py_ssize_t k2, l2, t2, m2, n2, j2, i
    cdef Py_ssize_t k, l, t, m, n, j
    k2, l2, t2, m2, n2, j2 = y
    k, l, t, m, n, j = x
    cdef dict terms = {(k, l, t, m, n, j + j2): _ONE}
    cdef dict nxt
    cdef tuple mono
    cdef dict p
    for i in range(k2):
        terms = _times_a(terms)
    for i in range(l2):
        terms = _times_d(terms)
    if t2:
        nxt = {}
        for mono, p in terms.items():
            k, l, t, m, n, j = mono
            nxt[(k, l, t + t2, m, n, j)] = _shift(p, 0, 2 * (n - m) * t2)
        terms = nxt
    if m2 or n2:
        nxt = {}
        for mono, p in terms.items():
            k, l, t, m, n, j = mono
            nxt[(k, l, t, m + m2, n + n2, j)] = p
        terms = nxt
    cdef tuple result = tuple(terms.items())
    _MONO_CACHE[key] = result
    return result


cpdef dict elem_mul(dict x, dict y):
    cdef dict out = {}
    cdef tuple m1, m2, mono, pair
    cdef dict p1, p2, p12, q, prod
    cdef object cur
    for m1, p1 in x.items():
        for m2, p2 in y.items():
            p12 = poly_mul(p1, p2)
            for pair in mono_mul(m1, m2):
                mono = <tuple>pair[0]
                q = <dict>pair[1]
                prod = poly_mul(p12, q)
                cur = out.get(mono)
                if cur is None:
                    out[mono] = prod
                else:
                    poly_iadd(<dict>cur, prod)
                    if not cur:
                        del out[mono]
    return out


cpdef dict tensor_mul(dict x, dict y):
    cdef dict out = {}
    cdef tuple legs1, legs2, legs, prods, pair
    cdef dict p1, p2, p
    cdef list partial, nxt
    cdef Py_ssize_t i, rank
    cdef object cur
    for legs1, p1 in x.items():
        rank = len(legs1)
        for legs2, p2 in y.items():
            partial = [((), poly_mul(p1, p2))]
            for i in range(rank):
                prods = mono_mul(<tuple>legs1[i], <tuple>legs2[i])
                nxt = []
                for legs, p in partial:
                    for pair in prods:
                        nxt.append((legs + (pair[0],), poly_mul(p, <dict>pair[1])))
                partial = nxt
            for legs, p in partial:
                cur = out.get(legs)
                if cur is None:
                    out[legs] = p
                else:
                    poly_iadd(<dict>cur, p)
                    if not cur:
                        del out[legs]
    return out


def clear_cache():
    _MONO_CACHE.clear()
