"""Exact arithmetic in Q(k, q, G_1, ..., G_m) with m = floor(n/2).

Numerators and denominators are integer polynomials stored as dicts of
packed monomial keys (see :mod:`ssvpoly._kernel_py`).  Every
:class:`Scalar` produced by arithmetic is canonical: numerator and
denominator are coprime, share no integer content, and the denominator has
positive leading coefficient.

For even ``n`` the parameter ``G_{n/2}`` squares to one.  By default it is
kept as a formal symbol ``e`` with ``e**2 = 1``: exponents are reduced mod 2
and denominators are made free of it by multiplying with the conjugate.

>>> R = param_ring(1)
>>> k = R.k
>>> ((k**2 - 1) / (k - 1)).to_text()
'k + 1'
>>> R.k.inv() == 1 / k
True
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd as igcd

from . import kernel, polyalg
from .errors import DivergentLimitError, MalformedScalarError, SpecializationPoleError

_ONE = {0: 1}


class ParamRing:
    """The coefficient field for a fixed metaplectic degree ``n``.

    Obtain instances through :func:`param_ring`, which caches them.
    """

    def __init__(self, n, reduce_ghalf=True):
        if n < 1:
            raise ValueError("metaplectic degree must be positive")
        self.n = n
        self.reduce_ghalf = bool(reduce_ghalf) and n % 2 == 0
        self.symbols = ("k", "q") + tuple(f"G{j}" for j in range(1, n // 2 + 1))
        self.nvars = len(self.symbols)
        fb = kernel.FIELD_BITS
        self.shifts = tuple(i * fb for i in range(self.nvars))
        self.index = {s: i for i, s in enumerate(self.symbols)}
        if self.reduce_ghalf:
            es = self.shifts[-1]
            self.eps_key = 1 << es
            self.eps_bit = 2 << es
            self.plain_shifts = self.shifts[:-1]
        else:
            self.eps_key = 0
            self.eps_bit = 0
            self.plain_shifts = self.shifts
        self.zero = Scalar._new(self, {}, _ONE)
        self.one = Scalar._new(self, dict(_ONE), _ONE)
        self.k = self.monomial({"k": 1})
        self.q = self.monomial({"q": 1})

    def __repr__(self):
        return f"param_ring({self.n}, reduce_ghalf={self.reduce_ghalf})"

    def __reduce__(self):
        return (param_ring, (self.n, self.reduce_ghalf))

    # keys

    def key(self, exps):
        """Packed key of a monomial given as ``{symbol: exponent >= 0}``."""
        out = 0
        for name, e in exps.items():
            if e < 0 or e > kernel.FIELD_MASK:
                raise ValueError(f"exponent {e} out of range")
            if e == 0:
                continue
            i = self.index.get(name)
            if i is None:
                raise ValueError(f"unknown symbol {name!r} for n={self.n}")
            if self.eps_key and self.shifts[i] == self.shifts[-1]:
                e %= 2
            out |= e << self.shifts[i]
        return out

    def exponents(self, key):
        """Exponent tuple of a key in symbol order."""
        mask = kernel.FIELD_MASK
        return tuple((key >> s) & mask for s in self.shifts)

    # constructors

    def G(self, j):
        """The Gauss-sum parameter ``G_j`` for ``1 <= j <= n // 2``."""
        if not 1 <= j <= self.n // 2:
            raise ValueError(f"G index {j} outside 1..{self.n // 2}")
        return self.monomial({f"G{j}": 1})

    def symbol(self, name):
        return self.monomial({name: 1})

    def monomial(self, exps, coeff=1):
        """``coeff`` times a Laurent monomial; exponents may be negative."""
        pos = {s: e for s, e in exps.items() if e > 0}
        negs = {s: -e for s, e in exps.items() if e < 0}
        c = Fraction(coeff)
        num = {self.key(pos): c.numerator} if c else {}
        den = {self.key(negs): c.denominator}
        return _canon(self, num, den)

    def __call__(self, value):
        return self.scalar(value)

    def scalar(self, value):
        if isinstance(value, Scalar):
            if value.ring is not self:
                raise ValueError("scalar belongs to a different ring")
            return value
        if isinstance(value, (int, Fraction)):
            c = Fraction(value)
            if not c:
                return self.zero
            return _canon(self, {0: c.numerator}, {0: c.denominator})
        raise TypeError(f"cannot convert {type(value).__name__} to a scalar")

    def from_polys(self, num, den=None):
        """Scalar from raw (possibly non-canonical) packed polynomials."""
        return _canon(self, dict(num), dict(den) if den is not None else dict(_ONE))

    def raw(self, num, den=None):
        """Wrap packed polynomials without normalizing.

        The result compares correctly with ``==`` but is not canonical
        until :func:`scalar_normalize` is applied.
        """
        den = dict(den) if den is not None else dict(_ONE)
        if not den:
            raise MalformedScalarError("zero denominator")
        return Scalar._new(self, {k: c for k, c in num.items() if c}, den)


def param_ring(n, reduce_ghalf=True):
    """Cached :class:`ParamRing` for degree ``n``; equal arguments give the same object."""
    return _param_ring(int(n), bool(reduce_ghalf) and n % 2 == 0)


@lru_cache(maxsize=None)
def _param_ring(n, reduce_ghalf):
    return ParamRing(n, reduce_ghalf)


def _split_eps(ring, f):
    ek = ring.eps_key
    c, d = {}, {}
    for k, v in f.items():
        if k & ek:
            d[k ^ ek] = v
        else:
            c[k] = v
    return c, d


def _join_eps(ring, c, d):
    out = dict(c)
    ek = ring.eps_key
    for k, v in d.items():
        out[k | ek] = v
    return out


def _canon(ring, num, den):
    if not den:
        raise MalformedScalarError("zero denominator")
    if not num:
        return ring.zero
    ek = ring.eps_key
    if ek and any(k & ek for k in den):
        c, d = _split_eps(ring, den)
        conj = _join_eps(ring, c, {k: -v for k, v in d.items()})
        num = kernel.mul(num, conj, ring.eps_bit)
        den = kernel.sub(kernel.mul(c, c), kernel.mul(d, d))
        if not den:
            raise MalformedScalarError("denominator is a zero divisor")
        if not num:
            return ring.zero
    m = polyalg.monomial_gcd((num, den), ring.plain_shifts)
    if m:
        num = {k - m: v for k, v in num.items()}
        den = {k - m: v for k, v in den.items()}
    g = igcd(igcd(*num.values()), igcd(*den.values()))
    if g > 1:
        num = {k: v // g for k, v in num.items()}
        den = {k: v // g for k, v in den.items()}
    if len(den) > 1:
        num, den = _cancel(ring, num, den)
    if den[max(den)] < 0:
        num = {k: -v for k, v in num.items()}
        den = {k: -v for k, v in den.items()}
    return Scalar._new(ring, num, den)


def _cancel(ring, num, den):
    shifts = ring.plain_shifts
    if ring.eps_key:
        c, d = _split_eps(ring, num)
    else:
        c, d = num, {}
    try:
        g = polyalg.gcd(den, c, shifts) if c else polyalg.primitive(den)
        if d and len(g) > 1:
            g = polyalg.gcd(g, d, shifts)
    except polyalg.HeuristicGCDFailed:
        return num, den
    if len(g) == 1:
        return num, den
    den = kernel.divexact(den, g)
    if d:
        num = _join_eps(ring, kernel.divexact(c, g) if c else {}, kernel.divexact(d, g))
    else:
        num = kernel.divexact(c, g)
    return num, den


def _poly_is_one(p):
    return len(p) == 1 and p.get(0) == 1


class Scalar:
    """Immutable element of the coefficient field."""

    __slots__ = ("ring", "num", "den")

    def __init__(self, ring, num, den=None):
        s = _canon(ring, dict(num), dict(den) if den is not None else dict(_ONE))
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "num", s.num)
        object.__setattr__(self, "den", s.den)

    @classmethod
    def _new(cls, ring, num, den):
        obj = object.__new__(cls)
        object.__setattr__(obj, "ring", ring)
        object.__setattr__(obj, "num", num)
        object.__setattr__(obj, "den", den)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def __reduce__(self):
        return (_rebuild, (self.ring, self.num, self.den))

    # coercion

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.ring is not self.ring:
                raise ValueError("scalars from different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.scalar(other)
        return None

    # predicates

    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_one(self):
        return self == self.ring.one

    def is_monomial(self):
        """True for a rational multiple of a Laurent monomial."""
        return len(self.num) <= 1 and len(self.den) == 1

    def is_constant(self):
        return set(self.num) <= {0} and set(self.den) == {0}

    def to_fraction(self):
        if not self.is_constant():
            raise ValueError(f"{self.to_text()} is not a constant")
        return Fraction(self.num.get(0, 0), self.den[0])

    # arithmetic

    def __neg__(self):
        return Scalar._new(self.ring, {k: -v for k, v in self.num.items()}, self.den)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        eb = self.ring.eps_bit
        if self.den == other.den:
            return _canon(self.ring, kernel.add(self.num, other.num), self.den)
        num = kernel.add(kernel.mul(self.num, other.den, eb), kernel.mul(other.num, self.den, eb))
        return _canon(self.ring, num, kernel.mul(self.den, other.den))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.num or not other.num:
            return self.ring.zero
        eb = self.ring.eps_bit
        if _poly_is_one(other.den) and _poly_is_one(other.num):
            return self
        if _poly_is_one(self.den) and _poly_is_one(self.num):
            return other
        return _canon(
            self.ring, kernel.mul(self.num, other.num, eb), kernel.mul(self.den, other.den)
        )

    __rmul__ = __mul__

    def inv(self):
        if not self.num:
            raise MalformedScalarError("inverse of zero")
        return _canon(self.ring, dict(self.den), dict(self.num))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        base = self
        if e < 0:
            base, e = self.inv(), -e
        result = self.ring.one
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # comparison

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return scalar_equals(self, other)

    def __hash__(self):
        return hash((self.ring.n, frozenset(self.num.items()), frozenset(self.den.items())))

    # display

    def to_text(self):
        return _frac_text(self.ring, self.num, self.den, _poly_text)

    def to_latex(self):
        n = _poly_latex(self.ring, self.num)
        if _poly_is_one(self.den):
            return n
        return "\\frac{%s}{%s}" % (n, _poly_latex(self.ring, self.den))

    def __repr__(self):
        return f"Scalar({self.to_text()})"

    def __str__(self):
        return self.to_text()

    # conveniences

    def substitute(self, bindings):
        return scalar_substitute(self, bindings)

    def limit_q(self, direction):
        return scalar_limit_q(self, direction)

    def to_ring(self, target, q_power=1):
        return change_ring(self, target, q_power)


def _rebuild(ring, num, den):
    return Scalar._new(ring, num, den)


def scalar_normalize(a):
    """Canonical representative of ``a``.

    >>> R = param_ring(2)
    >>> g = R.G(1)
    >>> scalar_normalize(g**3 / g).to_text()
    '1'
    """
    return _canon(a.ring, dict(a.num), dict(a.den))


def scalar_equals(a, b):
    """Equality by cross multiplication; no gcd is computed."""
    if a.ring is not b.ring:
        raise ValueError("scalars from different rings")
    if a.den == b.den:
        return a.num == b.num
    eb = a.ring.eps_bit
    return kernel.mul(a.num, b.den, eb) == kernel.mul(b.num, a.den, eb)


def _q_orders(ring, f):
    qs = ring.shifts[1]
    mask = kernel.FIELD_MASK
    return [(k >> qs) & mask for k in f]


def _q_slice(ring, f, e):
    qs = ring.shifts[1]
    mask = kernel.FIELD_MASK
    return {k - (e << qs): c for k, c in f.items() if (k >> qs) & mask == e}


def scalar_limit_q(a, direction):
    """Limit as q tends to 0 (``"zero"``) or infinity (``"infinity"``)."""
    ring = a.ring
    if not a.num:
        return ring.zero
    on, od = _q_orders(ring, a.num), _q_orders(ring, a.den)
    if direction in ("zero", "q0", 0):
        en, ed = min(on), min(od)
        if en > ed:
            return ring.zero
        if en < ed:
            raise DivergentLimitError(f"{a.to_text()} has a pole at q=0")
    elif direction in ("infinity", "qinf"):
        en, ed = max(on), max(od)
        if en < ed:
            return ring.zero
        if en > ed:
            raise DivergentLimitError(f"{a.to_text()} has a pole at q=infinity")
    else:
        raise ValueError(f"unknown direction {direction!r}")
    return _canon(ring, _q_slice(ring, a.num, en), _q_slice(ring, a.den, ed))


def _eval_poly(ring, f, values):
    """Evaluate a packed polynomial with some variables bound to Scalars."""
    mask = kernel.FIELD_MASK
    bound = [(i, ring.shifts[i], v) for i, v in values.items()]
    clear = 0
    for _, s, _ in bound:
        clear |= mask << s
    groups = {}
    for k, c in f.items():
        sig = tuple((k >> s) & mask for _, s, _ in bound)
        groups.setdefault(sig, {})
        rest = k & ~clear
        groups[sig][rest] = groups[sig].get(rest, 0) + c
    total = ring.zero
    powers = {}
    for sig, poly in groups.items():
        term = ring.raw(poly) if poly else ring.zero
        term = _canon(ring, dict(term.num), dict(term.den))
        for (i, _, v), e in zip(bound, sig):
            if e:
                p = powers.get((i, e))
                if p is None:
                    p = powers[(i, e)] = v**e
                term = term * p
        total = total + term
    return total


def scalar_substitute(a, bindings):
    """Substitute symbols by rationals or Scalars of the same ring.

    >>> R = param_ring(1)
    >>> k = R.k
    >>> scalar_substitute(k.inv() - k, {"k": Fraction(1, 2)}).to_text()
    '3/2'
    """
    ring = a.ring
    values = {}
    for name, v in bindings.items():
        i = ring.index.get(name)
        if i is None:
            raise ValueError(f"unknown symbol {name!r}")
        v = ring.scalar(v)
        if ring.eps_key and ring.shifts[i] == ring.shifts[-1] and not (v * v).is_one():
            raise ValueError(f"{name} squares to one; it cannot be sent to {v.to_text()}")
        values[i] = v
    if not values:
        return a
    den = _eval_poly(ring, a.den, values)
    if not den:
        raise SpecializationPoleError(f"denominator of {a.to_text()} vanishes")
    return _eval_poly(ring, a.num, values) / den


def change_ring(a, target, q_power=1):
    """Map ``a`` into ``target`` by symbol name, sending q to q**q_power."""
    src = a.ring
    moves = []
    for i, name in enumerate(src.symbols):
        j = target.index.get(name)
        if j is None:
            moves.append(None)
        else:
            moves.append(target.shifts[j])

    def conv(f):
        out = {}
        for k, c in f.items():
            exps = src.exponents(k)
            nk = 0
            for i, e in enumerate(exps):
                if not e:
                    continue
                if moves[i] is None:
                    raise ValueError(f"symbol {src.symbols[i]} does not exist in {target!r}")
                if i == 1:
                    e *= q_power
                nk += e << moves[i]
            out[nk] = out.get(nk, 0) + c
        return out

    num, den = conv(a.num), conv(a.den)
    if target.eps_key:
        num = kernel.mul(num, _ONE, target.eps_bit)
        den = kernel.mul(den, _ONE, target.eps_bit)
    return _canon(target, num, den)


def poly_from_terms(ring, terms):
    """Packed polynomial from ``[(coeff, {symbol: exponent})]``; coefficients may be rational.

    Returns ``(poly, denominator)`` with an integer polynomial and a positive
    integer common denominator.
    """
    fr = [(Fraction(c), exps) for c, exps in terms]
    d = 1
    for c, _ in fr:
        d = d * c.denominator // igcd(d, c.denominator)
    out = {}
    for c, exps in fr:
        key = ring.key(exps)
        v = c * d
        out[key] = out.get(key, 0) + v.numerator
    if ring.eps_key:
        out = kernel.mul(out, _ONE, ring.eps_bit)
    return {k: v for k, v in out.items() if v}, d


def poly_terms(ring, f):
    """Terms of a packed polynomial as ``[(coeff, exponent tuple)]`` in display order."""
    items = [(c, ring.exponents(k)) for k, c in f.items()]
    items.sort(key=lambda t: (sum(t[1]), t[1][::-1]), reverse=True)
    return items


def _mono_text(ring, exps, sep=" "):
    parts = []
    for name, e in zip(ring.symbols, exps):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return sep.join(parts)


def _poly_text(ring, f):
    if not f:
        return "0"
    out = []
    for i, (c, exps) in enumerate(poly_terms(ring, f)):
        mono = _mono_text(ring, exps)
        a = abs(c)
        body = mono if (a == 1 and mono) else (f"{a} {mono}" if mono else f"{a}")
        if i == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)


def _latex_mono(ring, exps):
    parts = []
    for name, e in zip(ring.symbols, exps):
        sym = name if len(name) == 1 else f"{name[0]}_{{{name[1:]}}}"
        if e == 1:
            parts.append(sym)
        elif e:
            parts.append(f"{sym}^{{{e}}}")
    return "".join(parts)


def _poly_latex(ring, f):
    if not f:
        return "0"
    out = []
    for i, (c, exps) in enumerate(poly_terms(ring, f)):
        mono = _latex_mono(ring, exps)
        a = abs(c)
        body = mono if (a == 1 and mono) else f"{a}{mono}"
        sign = "-" if c < 0 else ("" if i == 0 else "+")
        out.append(sign + body)
    return "".join(out)


def _frac_text(ring, num, den, fmt):
    n = fmt(ring, num)
    if _poly_is_one(den):
        return n
    d = fmt(ring, den)
    if len(num) > 1:
        n = f"({n})"
    if len(den) > 1:
        d = f"({d})"
    return f"{n}/{d}"
