"""Sparse Laurent polynomials in x_1..x_r over :class:`~ssvpoly.field.Scalar`."""

from .errors import DomainError, NotDivisibleError, RankMismatchError
from .field import Scalar, change_ring


def _vec(v, r=None):
    v = tuple(int(x) for x in v)
    if r is not None and len(v) != r:
        raise RankMismatchError(f"exponent {v} does not have length {r}")
    return v


def _add_into(terms, exp, c):
    old = terms.get(exp)
    if old is None:
        if c:
            terms[exp] = c
    else:
        s = old + c
        if s:
            terms[exp] = s
        else:
            del terms[exp]


class LaurentPolynomial:
    """Immutable mapping from exponent tuples to nonzero Scalars.

    >>> from ssvpoly.field import param_ring
    >>> R = param_ring(1)
    >>> x1 = LaurentPolynomial.monomial(R, (1, 0, 0))
    >>> x2 = LaurentPolynomial.monomial(R, (0, 1, 0))
    >>> (x1 * x2).support()
    [(1, 1, 0)]
    """

    __slots__ = ("ring", "rank", "terms")

    def __init__(self, ring, rank, terms=None):
        self.ring = ring
        self.rank = rank
        clean = {}
        if terms:
            for e, c in terms.items():
                e = _vec(e, rank)
                c = ring.scalar(c)
                _add_into(clean, e, c)
        self.terms = clean

    @classmethod
    def _wrap(cls, ring, rank, terms):
        obj = object.__new__(cls)
        obj.ring = ring
        obj.rank = rank
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls, ring, rank):
        return cls._wrap(ring, rank, {})

    @classmethod
    def monomial(cls, ring, exp, coeff=1):
        exp = _vec(exp)
        c = ring.scalar(coeff)
        return cls._wrap(ring, len(exp), {exp: c} if c else {})

    @classmethod
    def constant(cls, ring, rank, coeff=1):
        return cls.monomial(ring, (0,) * rank, coeff)

    def _check(self, other):
        if other.rank != self.rank:
            raise RankMismatchError(f"rank {self.rank} vs {other.rank}")
        if other.ring is not self.ring:
            raise ValueError("polynomials over different rings")

    # access

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def coefficient(self, exp):
        return self.terms.get(_vec(exp), self.ring.zero)

    def support(self):
        return sorted(self.terms)

    def items(self):
        """Terms in lexicographic exponent order."""
        return [(e, self.terms[e]) for e in sorted(self.terms)]

    def __iter__(self):
        return iter(self.items())

    # arithmetic

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            _add_into(out, e, c)
        return LaurentPolynomial._wrap(self.ring, self.rank, out)

    def __neg__(self):
        return LaurentPolynomial._wrap(
            self.ring, self.rank, {e: -c for e, c in self.terms.items()}
        )

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = self.ring.scalar(c)
        if not c:
            return LaurentPolynomial.zero(self.ring, self.rank)
        return LaurentPolynomial._wrap(
            self.ring, self.rank, {e: v * c for e, v in self.terms.items()}
        )

    def shift(self, exp):
        """Multiply by the monomial x^exp."""
        exp = _vec(exp, self.rank)
        return LaurentPolynomial._wrap(
            self.ring,
            self.rank,
            {tuple(a + b for a, b in zip(e, exp)): c for e, c in self.terms.items()},
        )

    def __mul__(self, other):
        if isinstance(other, LaurentPolynomial):
            self._check(other)
            out = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    _add_into(out, tuple(a + b for a, b in zip(e1, e2)), c1 * c2)
            return LaurentPolynomial._wrap(self.ring, self.rank, out)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        if other.rank != self.rank or set(self.terms) != set(other.terms):
            return False
        return all(c == other.terms[e] for e, c in self.terms.items())

    __hash__ = None

    def map_coefficients(self, fn, ring=None):
        ring = ring or self.ring
        out = {}
        for e, c in self.terms.items():
            v = fn(c)
            if v:
                out[e] = v
        return LaurentPolynomial._wrap(ring, self.rank, out)

    def substitute(self, bindings):
        return self.map_coefficients(lambda c: c.substitute(bindings))

    def limit_q(self, direction):
        return self.map_coefficients(lambda c: c.limit_q(direction))

    def proportional_to(self, other):
        """Return c with ``self == c * other`` or None."""
        self._check(other)
        if set(self.terms) != set(other.terms):
            return None
        if not self.terms:
            return self.ring.one
        e0 = min(self.terms)
        c = self.terms[e0] / other.terms[e0]
        for e, v in self.terms.items():
            if v != c * other.terms[e]:
                return None
        return c

    # display

    def to_text(self):
        if not self.terms:
            return "0"
        parts = []
        for i, (e, c) in enumerate(self.items()):
            mono = monomial_text(e)
            neg = False
            if c.is_one():
                body = mono or "1"
            elif (-c).is_one():
                neg, body = True, mono or "1"
            else:
                if c.is_monomial() and c.num and next(iter(c.num.values())) < 0:
                    neg, c = True, -c
                ct = c.to_text()
                if mono and (len(c.num) > 1 or "/" in ct):
                    ct = f"({ct})"
                body = f"{ct} {mono}" if mono else ct
            if i == 0:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def to_latex(self):
        if not self.terms:
            return "0"
        parts = []
        for i, (e, c) in enumerate(self.items()):
            mono = monomial_latex(e)
            if c.is_one():
                body = mono or "1"
            elif (-c).is_one():
                body = "-" + (mono or "1")
            else:
                ct = c.to_latex()
                if len(c.num) > 1 and c.den == {0: 1} and mono:
                    ct = f"\\left({ct}\\right)"
                body = ct + mono
            if i and not body.startswith("-"):
                body = "+" + body
            parts.append(body)
        return "".join(parts)

    def __repr__(self):
        return f"LaurentPolynomial({self.to_text()})"

    def __str__(self):
        return self.to_text()


def monomial_text(e):
    parts = []
    for i, a in enumerate(e, 1):
        if a == 1:
            parts.append(f"x{i}")
        elif a:
            parts.append(f"x{i}^{a}")
    return " ".join(parts)


def monomial_latex(e):
    parts = []
    for i, a in enumerate(e, 1):
        if a == 1:
            parts.append(f"x_{{{i}}}")
        elif a:
            parts.append(f"x_{{{i}}}^{{{a}}}")
    return "".join(parts)


def poly_arith(a, b, op):
    """``op`` is ``"add"``, ``"mul"`` or ``"scale"`` (``b`` a Scalar)."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "scale":
        return a.scale(b)
    raise ValueError(f"unknown op {op!r}")


def geometric_ratio(t, n, alpha, ring, qexp=0):
    """Expansion of ``(1 - y**(-t/n)) / (1 - y)`` with ``y = q**qexp * x**(n*alpha)``.

    ``t`` must be a multiple of ``n``.  With ``qexp = 0`` this is the ratio
    in the T_i action; the affine generator uses ``alpha = -theta`` and
    ``qexp = n``.
    """
    if t % n:
        raise DomainError(f"t={t} is not a multiple of n={n}")
    r = len(alpha)
    m = t // n
    out = {}
    q = ring.q
    if m > 0:
        for j in range(1, m + 1):
            e = tuple(-j * n * a for a in alpha)
            out[e] = -(q ** (-j * qexp))
    elif m < 0:
        for j in range(0, -m):
            e = tuple(j * n * a for a in alpha)
            out[e] = q ** (j * qexp)
    return LaurentPolynomial._wrap(ring, r, out)


def poly_substitute_power(a, n, target=None):
    """Send x_i to x_i**n and q to q**n, landing in ``target`` (default: same ring)."""
    target = target or a.ring
    return LaurentPolynomial._wrap(
        target,
        a.rank,
        {tuple(n * x for x in e): change_ring(c, target, n) for e, c in a.terms.items()},
    )


def exact_divide_linear(a, c, alpha):
    """Exact quotient of ``a`` by ``1 - c * x**alpha``.

    Each line ``{base + t*alpha}`` is divided independently by running the
    recurrence ``b_t = a_t + c*b_{t-1}`` upward in ``t``.
    """
    alpha = _vec(alpha, a.rank)
    c = a.ring.scalar(c)
    if not any(alpha):
        raise DomainError("division direction must be nonzero")
    if not c:
        return a
    p = next(i for i, x in enumerate(alpha) if x)
    lines = {}
    for e, v in a.terms.items():
        t = e[p] // alpha[p]
        base = tuple(x - t * y for x, y in zip(e, alpha))
        lines.setdefault(base, {})[t] = v
    out = {}
    for base, coeffs in lines.items():
        lo, hi = min(coeffs), max(coeffs)
        prev = a.ring.zero
        for t in range(lo, hi + 1):
            b = coeffs.get(t, a.ring.zero) + c * prev
            if t == hi:
                if b:
                    raise NotDivisibleError(
                        f"remainder along direction {alpha} at {base}: {b.to_text()}"
                    )
            elif b:
                out[tuple(x + t * y for x, y in zip(base, alpha))] = b
            prev = b
    return LaurentPolynomial._wrap(a.ring, a.rank, out)
