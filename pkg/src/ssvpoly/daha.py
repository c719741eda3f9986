"""The polynomial representation as executable operators.

Everything here is built from the Demazure-Lusztig operators T_0..T_{r-1},
the rotation omega and multiplication by monomials, acting monomial by
monomial.  None of it uses alcove walks, so :func:`intertwiner_E` is an
independent construction of E_mu.
"""

from functools import lru_cache

from . import kernel, polyalg
from .errors import InternalInconsistencyError
from .field import Scalar
from .laurent import LaurentPolynomial, _add_into, exact_divide_linear
from .rootsys import (
    AffineRoot,
    G_param,
    all_perms,
    gamma_eval,
    perm_length,
    simple_act,
    simple_root_vector,
    unit,
)
from .words import canonical_perm_word, reduce_to_fundamental

# monomial actions, cached per context


@lru_cache(maxsize=200000)
def _T_mono(i, lam, ctx):
    """T_i x^lam as a tuple of (exponent, Scalar)."""
    ring = ctx.ring
    n = ctx.n
    out = {}
    c = ring.k - ring.k.inv()
    if i == 0:
        th = lam[0] - lam[-1]
        a = -th
        m = (a - a % n) // n
        if m > 0:
            for j in range(1, m + 1):
                e = list(lam)
                e[0] += j * n
                e[-1] -= j * n
                _add_into(out, tuple(e), -c * ring.q ** (-j * n))
        elif m < 0:
            for j in range(0, -m):
                e = list(lam)
                e[0] -= j * n
                e[-1] += j * n
                _add_into(out, tuple(e), c * ring.q ** (j * n))
        e = list(lam)
        e[0], e[-1] = lam[-1], lam[0]
        _add_into(out, tuple(e), G_param(a, ctx) * ring.q**th)
    else:
        a = lam[i - 1] - lam[i]
        m = (a - a % n) // n
        if m > 0:
            for j in range(1, m + 1):
                e = list(lam)
                e[i - 1] -= j * n
                e[i] += j * n
                _add_into(out, tuple(e), -c)
        elif m < 0:
            for j in range(0, -m):
                e = list(lam)
                e[i - 1] += j * n
                e[i] -= j * n
                _add_into(out, tuple(e), c)
        e = list(lam)
        e[i - 1], e[i] = lam[i], lam[i - 1]
        _add_into(out, tuple(e), G_param(a, ctx))
    return tuple(out.items())


@lru_cache(maxsize=200000)
def _Tinv_mono(i, lam, ctx):
    ring = ctx.ring
    out = dict(_T_mono(i, lam, ctx))
    _add_into(out, lam, ring.k.inv() - ring.k)
    return tuple(out.items())


def _omega_mono(lam, ctx, inverse):
    ring = ctx.ring
    if inverse:
        return lam[1:] + lam[:1], ring.q ** lam[0]
    return lam[-1:] + lam[:-1], ring.q ** (-lam[-1])


def _apply_mono_table(f, table):
    out = {}
    for e, c in f.items():
        for e2, c2 in table(e):
            _add_into(out, e2, c * c2)
    return out


# operator words


class OperatorWord:
    """Product of atoms, applied right to left.

    Atoms are ``("T", i)``, ``("Tinv", i)``, ``("omega",)``,
    ``("omega_inv",)``, ``("X", mu)`` and ``("scalar", c)``.
    """

    def __init__(self, atoms=()):
        self.atoms = tuple(atoms)

    def __mul__(self, other):
        return OperatorWord(self.atoms + other.atoms)

    def __repr__(self):
        return "OperatorWord(%s)" % " ".join(
            "".join(str(x) for x in a) for a in self.atoms
        )

    def apply_terms(self, f, ctx):
        for atom in reversed(self.atoms):
            f = _apply_atom(atom, f, ctx)
        return f

    def apply(self, f, ctx):
        return LaurentPolynomial._wrap(f.ring, f.rank, self.apply_terms(f.terms, ctx))


def _apply_atom(atom, f, ctx):
    kind = atom[0]
    if kind == "T":
        i = atom[1]
        return _apply_mono_table(f, lambda e: _T_mono(i, e, ctx))
    if kind == "Tinv":
        i = atom[1]
        return _apply_mono_table(f, lambda e: _Tinv_mono(i, e, ctx))
    if kind in ("omega", "omega_inv"):
        inv = kind == "omega_inv"
        out = {}
        for e, c in f.items():
            e2, s = _omega_mono(e, ctx, inv)
            out[e2] = c * s
        return out
    if kind == "X":
        mu = atom[1]
        return {tuple(a + b for a, b in zip(e, mu)): c for e, c in f.items()}
    if kind == "scalar":
        s = atom[1]
        if not s:
            return {}
        return {e: c * s for e, c in f.items()}
    raise ValueError(f"unknown atom {atom!r}")


def Y_word(i, ctx, inverse=False):
    """Y^{n e_i} (1-based i) as an operator word."""
    r = ctx.r
    if not inverse:
        atoms = [("Tinv", j) for j in range(i - 1, 0, -1)]
        atoms.append(("omega",))
        atoms += [("T", j) for j in range(r - 1, i - 1, -1)]
    else:
        atoms = [("Tinv", j) for j in range(i, r)]
        atoms.append(("omega_inv",))
        atoms += [("T", j) for j in range(1, i)]
    return OperatorWord(atoms)


def Y_lattice_word(mu, s, ctx):
    ring = ctx.ring
    word = OperatorWord()
    for i, m in enumerate(mu, 1):
        w = Y_word(i, ctx, inverse=m < 0)
        for _ in range(abs(m)):
            word = word * w
    if s:
        word = word * OperatorWord([("scalar", ring.q ** (-s * ctx.n))])
    return word


def T_s_theta_inverse_word(ctx):
    r = ctx.r
    letters = list(range(1, r)) + list(range(r - 2, 0, -1))
    return OperatorWord([("Tinv", j) for j in letters])


def T0_check_word(ctx):
    """T_0^vee = T_{s_theta}^{-1} X^{-n theta}."""
    n, r = ctx.n, ctx.r
    th = [0] * r
    th[0], th[-1] = -n, n
    return T_s_theta_inverse_word(ctx) * OperatorWord([("X", tuple(th))])


# public operators


def _wrap(f, poly):
    return LaurentPolynomial._wrap(poly.ring, poly.rank, f)


def apply_Ti(i, f, ctx):
    """T_i for 1 <= i <= r-1.

    >>> from ssvpoly.rootsys import MetaplecticContext
    >>> from ssvpoly.field import param_ring
    >>> ctx = MetaplecticContext(3, 1)
    >>> x = LaurentPolynomial.monomial(ctx.ring, (2, 0, 0))
    >>> apply_Ti(1, x, ctx).to_text()
    '(1/k) x2^2 + ((-k^2 + 1)/k) x1 x2'
    """
    if not 1 <= i <= ctx.r - 1:
        raise ValueError(f"index {i} outside 1..{ctx.r - 1}")
    return _wrap(_apply_atom(("T", i), f.terms, ctx), f)


def apply_T0(f, ctx):
    return _wrap(_apply_atom(("T", 0), f.terms, ctx), f)


def apply_T(i, f, ctx, inverse=False):
    return _wrap(_apply_atom(("Tinv" if inverse else "T", i), f.terms, ctx), f)


def apply_omega(f, ctx, inverse=False):
    return _wrap(_apply_atom(("omega_inv" if inverse else "omega",), f.terms, ctx), f)


def apply_Y(i, f, ctx, inverse=False):
    """Y^{n e_i} (or its inverse), 1-based ``i``."""
    return Y_word(i, ctx, inverse).apply(f, ctx)


def apply_Y_lattice(mu, s, f, ctx):
    """Y of the rescaled lattice element ``mu + s delta``: q^(-sn) prod_i Y_i^mu_i."""
    return Y_lattice_word(tuple(mu), s, ctx).apply(f, ctx)


def _S_terms(i, f, ctx):
    ring = ctx.ring
    r = ctx.r
    if i == 0:
        th = [0] * r
        th[0], th[-1] = 1, -1
        y = Y_lattice_word(tuple(th), -1, ctx)
        tcheck = T0_check_word(ctx)
    else:
        y = Y_lattice_word(tuple(-x for x in simple_root_vector(r, i)), 0, ctx)
        tcheck = OperatorWord([("T", i)])
    g = dict(f)
    for e, c in y.apply_terms(f, ctx).items():
        _add_into(g, e, -c)
    out = tcheck.apply_terms(g, ctx)
    c = ring.k.inv() - ring.k
    for e, v in f.items():
        _add_into(out, e, c * v)
    return out


def apply_S(i, f, ctx):
    """Polynomial intertwiner S_i = T_i^vee (1 - Y^{-alpha_i^(n)}) + (1/k - k)."""
    return _wrap(_S_terms(i, f.terms, ctx), f)


def _clear_denominators(f, ring):
    """Scale ``f`` by the lcm of its denominators; returns polynomial coefficients."""
    shifts = ring.plain_shifts
    dens = []
    seen = set()
    for c in f.values():
        key = frozenset(c.den.items())
        if key not in seen:
            seen.add(key)
            dens.append(c.den)
    L = dens[0]
    for d in dens[1:]:
        L = polyalg.lcm(L, d, shifts)
    out = {}
    for e, c in f.items():
        cof = kernel.divexact(L, c.den)
        out[e] = Scalar._new(ring, kernel.mul(c.num, cof, ring.eps_bit), {0: 1})
    return out


def intertwiner_E(mu, ctx):
    """E_mu by applying intertwiners to x^lam along the reduced word.

    After every step the result is rescaled to be monic at the new weight.
    """
    ring = ctx.ring
    mu = ctx.check_rank(mu)
    dec = reduce_to_fundamental(mu, ctx)
    f = {dec.lam: ring.one}
    nu = dec.lam
    for i in reversed(dec.word):
        g = _S_terms(i, _clear_denominators(f, ring), ctx)
        nu = simple_act(ctx.r, i, ctx.n, nu)
        lead = g.get(nu)
        if lead is None or not lead:
            raise InternalInconsistencyError(f"intertwiner lost the monomial x^{nu}")
        f = {e: c / lead for e, c in g.items()}
    return LaurentPolynomial._wrap(ring, ctx.r, f)


def apply_U(f, ctx):
    """Hecke symmetrizer sum_u k^l(u) T_u."""
    ring = ctx.ring
    out = {}
    for u in all_perms(ctx.r):
        word = OperatorWord([("T", i) for i in canonical_perm_word(u)])
        w = ring.k ** perm_length(u)
        for e, c in word.apply_terms(f.terms, ctx).items():
            _add_into(out, e, c * w)
    return _wrap(out, f)


def eigenvalue_check(E, mu, ctx):
    """True iff Y^{n e_i} E = gamma(n e_i; mu) E for every i."""
    for i in range(1, ctx.r + 1):
        ev = gamma_eval(AffineRoot(tuple(ctx.n * x for x in unit(ctx.r, i - 1)), 0), mu, ctx)
        if apply_Y(i, E, ctx) != E.scale(ev):
            return False
    return True


def apply_CG(i, f, ctx):
    """f + k (1 - x^{n alpha_i}) (T_i - k) f / (1 - k^2 x^{n alpha_i})."""
    ring = ctx.ring
    k = ring.k
    alpha = tuple(ctx.n * x for x in simple_root_vector(ctx.r, i))
    g = apply_Ti(i, f, ctx) - f.scale(k)
    g = g - g.shift(alpha)
    h = exact_divide_linear(g, k * k, alpha)
    return f + h.scale(k)
