"""Multivariate gcd and friends on packed integer polynomials.

The gcd is the heuristic evaluation/interpolation algorithm: evaluate the
main variable at a large integer, recurse, lift the result back by
symmetric xi-adic expansion and confirm by trial division.  Trial division
makes every returned answer correct; a run of unlucky evaluation points
raises :class:`HeuristicGCDFailed` instead.
"""

from math import gcd as igcd
from math import isqrt

from . import kernel

_TRIES = 6


class HeuristicGCDFailed(ArithmeticError):
    pass


def content(f):
    return igcd(*f.values()) if f else 0


def max_norm(f):
    return max(abs(c) for c in f.values())


def lead(f):
    """Leading (key, coefficient) in packed lex order."""
    k = max(f)
    return k, f[k]


def scale_down(f, c):
    return {k: v // c for k, v in f.items()}


def neg(f):
    return {k: -v for k, v in f.items()}


def positive_lead(f):
    return neg(f) if f and f[max(f)] < 0 else f


def primitive(f):
    c = content(f)
    if c > 1:
        f = scale_down(f, c)
    return positive_lead(f)


def field_values(f, shift):
    mask = kernel.FIELD_MASK
    return {(k >> shift) & mask for k in f}


def used_shifts(polys, shifts):
    mask = kernel.FIELD_MASK
    out = []
    for s in shifts:
        if any((k >> s) & mask for p in polys for k in p):
            out.append(s)
    return out


def monomial_gcd(polys, shifts):
    """Key of the largest monomial dividing every term of every poly."""
    return kernel.monomial_gcd(tuple(polys), tuple(shifts))


def _interpolate(h, shift, xi):
    out = {}
    half = xi // 2
    i = 0
    while h:
        g = {}
        for k, c in h.items():
            c %= xi
            if c > half:
                c -= xi
            if c:
                g[k] = c
        add_key = i << shift
        for k, c in g.items():
            out[k + add_key] = c
        h = kernel.sub(h, g)
        h = {k: c // xi for k, c in h.items()}
        i += 1
    return positive_lead(out) if out else out


def _heu(f, g, shifts):
    c = igcd(content(f), content(g))
    if c > 1:
        f = scale_down(f, c)
        g = scale_down(g, c)
    present = used_shifts((f, g), shifts)
    if not present:
        a, b = f.get(0, 0), g.get(0, 0)
        h = igcd(a, b)
        return {0: h * c}, {0: a // h}, {0: b // h}
    v = present[-1]
    rest = present[:-1]
    fn, gn = max_norm(f), max_norm(g)
    b = 2 * min(fn, gn) + 29
    xi = max(
        min(b, 99 * isqrt(b)),
        2 * min(fn // abs(lead(f)[1]), gn // abs(lead(g)[1])) + 4,
    )
    for _ in range(_TRIES):
        ff = kernel.evaluate(f, v, xi)
        gg = kernel.evaluate(g, v, xi)
        if ff and gg:
            h, cff, cfg = _heu(ff, gg, rest)
            h = primitive(_interpolate(h, v, xi))
            q1 = kernel.divexact(f, h)
            if q1 is not None:
                q2 = kernel.divexact(g, h)
                if q2 is not None:
                    return {k: x * c for k, x in h.items()}, q1, q2
            cff = _interpolate(cff, v, xi)
            if cff:
                h = kernel.divexact(f, cff)
                if h is not None:
                    q2 = kernel.divexact(g, h)
                    if q2 is not None:
                        return {k: x * c for k, x in h.items()}, cff, q2
            cfg = _interpolate(cfg, v, xi)
            if cfg:
                h = kernel.divexact(g, cfg)
                if h is not None:
                    q1 = kernel.divexact(f, h)
                    if q1 is not None:
                        return {k: x * c for k, x in h.items()}, q1, cfg
        xi = 73794 * xi * isqrt(isqrt(xi)) // 27011
    raise HeuristicGCDFailed("heuristic gcd exhausted its evaluation points")


def gcd(f, g, shifts):
    """Primitive gcd with positive leading coefficient.

    ``shifts`` lists the bit offsets of the variables that may occur.
    """
    if not f:
        return primitive(g)
    if not g:
        return primitive(f)
    if len(f) == 1 or len(g) == 1:
        # a monomial's divisors are monomials
        return {monomial_gcd((f, g), shifts): 1}
    h, _, _ = _heu(f, g, shifts)
    return primitive(h)


def lcm(f, g, shifts):
    h = gcd(f, g, shifts)
    return positive_lead(kernel.mul(f, kernel.divexact(g, h)))
