"""Pure-Python hot kernels: Laurent-polynomial and basis-monomial products.

Polynomials are dicts ``{(doubled r exp, doubled s exp): coeff}``; monomials
are tuples ``(k, l, t, m, n, j)`` for ``a^k d^l f^t b^m c^n Det^j`` with
``min(k, l) == 0``.  Returned dicts are fresh; cached product tables are
shared and must not be mutated by callers.
"""

IMPLEMENTATION = "python"

_ONE = {(0, 0): 1}


def poly_add(p, q, scale=1):
    out = dict(p)
    for key, c in q.items():
        v = out.get(key, 0) + scale * c
        if v:
            out[key] = v
        else:
            out.pop(key, None)
    return out


def poly_iadd(acc, q, scale=1):
    for key, c in q.items():
        v = acc.get(key, 0) + scale * c
        if v:
            acc[key] = v
        else:
            acc.pop(key, None)
    return acc


def poly_mul(p, q):
    if len(p) == 1 and len(q) == 1:
        ((a0, a1), ca), = p.items()
        ((b0, b1), cb), = q.items()
        return {(a0 + b0, a1 + b1): ca * cb}
    out = {}
    for (a0, a1), ca in p.items():
        for (b0, b1), cb in q.items():
            key = (a0 + b0, a1 + b1)
            v = out.get(key, 0) + ca * cb
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return out


def _shift(p, er, es):
    if not er and not es:
        return p
    return {(a + er, b + es): c for (a, b), c in p.items()}


def _times_a(terms):
    out = {}
    for (k, l, t, m, n, j), p in terms.items():
        e = 2 * (m + n)
        if l == 0:
            _acc(out, (k + 1, 0, t, m, n, j), _shift(p, e, 0))
        else:
            # d^l a = d^(l-1) Det + r d^(l-1) b c
            _acc(out, (0, l - 1, t, m, n, j + 1), _shift(p, e, 0))
            _acc(out, (0, l - 1, t, m + 1, n + 1, j), _shift(p, e + 2, 0))
    return out


def _times_d(terms):
    out = {}
    for (k, l, t, m, n, j), p in terms.items():
        e = -2 * (m + n)
        if k == 0:
            _acc(out, (0, l + 1, t, m, n, j), _shift(p, e, 0))
        else:
            # a^k d = a^(k-1) Det + r^-1 a^(k-1) b c
            _acc(out, (k - 1, 0, t, m, n, j + 1), _shift(p, e, 0))
            _acc(out, (k - 1, 0, t, m + 1, n + 1, j), _shift(p, e - 2, 0))
    return out


def _acc(out, mono, p):
    cur = out.get(mono)
    if cur is None:
        out[mono] = dict(p)
    else:
        poly_iadd(cur, p)
        if not cur:
            del out[mono]


_MONO_CACHE = {}


def mono_mul(x, y):
    """Product of two basis monomials as a tuple of (monomial, poly) pairs."""
    key = (x, y)
    hit = _MONO_CACHE.get(key)
    if hit is not None:
        return hit
    k2, l2, t2, m2, n2, j2 = y
    k, l, t, m, n, j = x
    terms = {(k, l, t, m, n, j + j2): _ONE}
    for _ in range(k2):
        terms = _times_a(terms)
    for _ in range(l2):
        terms = _times_d(terms)
    if t2:
        # b^m c^n f = s^(n-m) f b^m c^n, and f never changes m, n
        terms = {
            (a, b, c + t2, mm, nn, jj): _shift(p, 0, 2 * (nn - mm) * t2)
            for (a, b, c, mm, nn, jj), p in terms.items()
        }
    if m2 or n2:
        terms = {
            (a, b, c, mm + m2, nn + n2, jj): p
            for (a, b, c, mm, nn, jj), p in terms.items()
        }
    result = tuple(terms.items())
    _MONO_CACHE[key] = result
    return result


def elem_mul(x, y):
    """Product of two elements given as ``{monomial: poly}`` dicts."""
    out = {}
    for m1, p1 in x.items():
        for m2, p2 in y.items():
            p12 = poly_mul(p1, p2)
            for mono, q in mono_mul(m1, m2):
                cur = out.get(mono)
                prod = poly_mul(p12, q)
                if cur is None:
                    out[mono] = prod
                else:
                    poly_iadd(cur, prod)
                    if not cur:
                        del out[mono]
    return out


def tensor_mul(x, y):
    """Legwise product of two tensors ``{(mono, ...): poly}`` of equal rank."""
    out = {}
    for legs1, p1 in x.items():
        for legs2, p2 in y.items():
            partial = [((), poly_mul(p1, p2))]
            for a, b in zip(legs1, legs2):
                prods = mono_mul(a, b)
                nxt = []
                for legs, p in partial:
                    for mono, q in prods:
                        nxt.append((legs + (mono,), poly_mul(p, q)))
                partial = nxt
            for legs, p in partial:
                cur = out.get(legs)
                if cur is None:
                    out[legs] = p
                else:
                    poly_iadd(cur, p)
                    if not cur:
                        del out[legs]
    return out


def clear_cache():
    _MONO_CACHE.clear()
