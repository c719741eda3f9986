"""Pure-Python polynomial kernels over packed monomials.

A polynomial is a dict ``{key: coeff}`` with integer coefficients.  A key
packs the exponent vector of the parameter monomial into one nonnegative
integer, ``FIELD_BITS`` bits per variable with the top bit of each field
kept clear as a guard.  Adding keys multiplies monomials, and comparing
keys as integers is a lexicographic order with the last variable most
significant.

The same API is provided by the compiled ``_kernel_c`` module.
"""

from heapq import heapify, heappop, heappush

FIELD_BITS = 16
FIELD_MASK = (1 << (FIELD_BITS - 1)) - 1
MAX_VARS = 16
GUARD = sum(1 << (FIELD_BITS * i + FIELD_BITS - 1) for i in range(MAX_VARS))

BACKEND = "python"


def divides_key(a, b):
    """True if monomial ``a`` divides monomial ``b``."""
    return ((b | GUARD) - a) & GUARD == GUARD


def mul(a, b, eps=0):
    """Product of two polynomials.

    ``eps`` is either 0 or the key bit of exponent 2 in a variable that
    squares to one; products are reduced with it.
    """
    if len(a) > len(b):
        a, b = b, a
    out = {}
    get = out.get
    bitems = list(b.items())
    for ka, ca in a.items():
        for kb, cb in bitems:
            k = ka + kb
            if eps and k & eps:
                k ^= eps
            out[k] = get(k, 0) + ca * cb
    return {k: c for k, c in out.items() if c}


def mul_term(a, key, coeff, eps=0):
    """Product of a polynomial with the single term ``coeff * key``."""
    out = {}
    for k, c in a.items():
        k += key
        if eps and k & eps:
            k ^= eps
            out[k] = out.get(k, 0) + c * coeff
        else:
            out[k] = c * coeff
    if eps:
        return {k: c for k, c in out.items() if c}
    return out


def add(a, b):
    out = dict(a)
    for k, c in b.items():
        v = out.get(k, 0) + c
        if v:
            out[k] = v
        else:
            del out[k]
    return out


def sub(a, b):
    out = dict(a)
    for k, c in b.items():
        v = out.get(k, 0) - c
        if v:
            out[k] = v
        else:
            del out[k]
    return out


def divexact(f, g):
    """Exact quotient ``f / g`` or None when ``g`` does not divide ``f``.

    Neither polynomial may involve a variable that squares to one.
    """
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    if not f:
        return {}
    lg = max(g)
    cg = g[lg]
    rest = [(k, c) for k, c in g.items() if k != lg]
    r = dict(f)
    heap = [-k for k in r]
    heapify(heap)
    q = {}
    while heap:
        lr = -heappop(heap)
        c = r.pop(lr, 0)
        if not c:
            continue
        if ((lr | GUARD) - lg) & GUARD != GUARD:
            return None
        qc, rem = divmod(c, cg)
        if rem:
            return None
        m = lr - lg
        q[m] = qc
        for k, cc in rest:
            kk = k + m
            old = r.get(kk)
            if old is None:
                r[kk] = -qc * cc
                heappush(heap, -kk)
            else:
                v = old - qc * cc
                if v:
                    r[kk] = v
                else:
                    del r[kk]
    return q


def monomial_gcd(polys, shifts):
    """Key of the largest monomial dividing every term, over the given fields."""
    for p in polys:
        if 0 in p:
            return 0
    key = 0
    for s in shifts:
        m = FIELD_MASK
        for p in polys:
            for k in p:
                e = (k >> s) & FIELD_MASK
                if e < m:
                    m = e
                    if not m:
                        break
            if not m:
                break
        if m:
            key |= m << s
    return key


def evaluate(f, shift, xi):
    """Substitute the integer ``xi`` for the variable stored at ``shift``."""
    out = {}
    powers = {}
    for k, c in f.items():
        e = (k >> shift) & FIELD_MASK
        if e:
            p = powers.get(e)
            if p is None:
                p = powers[e] = xi ** e
            k -= e << shift
            c = c * p
        out[k] = out.get(k, 0) + c
    return {k: c for k, c in out.items() if c}
