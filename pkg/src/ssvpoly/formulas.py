"""Alcove-walk formulas for E_mu, T_u E_mu, P_mu and their q-limits.

For a decomposition ``mu = w lam`` with reduced word ``(i_1, ..., i_l)``
and roots beta_j, a walk ``p`` contributes

    sigma-product(phi(p), lam)
    * prod_{j positive fold} (1/k - k) / (1 - g_j)
    * prod_{j negative fold} (1/k - k) g_j / (1 - g_j)

at the exponent ``n wt(p) + phi(p) lam``, where ``g_j = gamma(-beta_j; lam)``.
Sums are accumulated over the common denominator ``prod_j (1 - g_j)`` so
each walk only costs Laurent-polynomial arithmetic, and one reduced
division happens per exponent at the end.
"""

from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError, InternalInconsistencyError
from .laurent import LaurentPolynomial
from .rootsys import (
    AffineWeylElement,
    all_perms,
    gamma_eval,
    is_dominant,
    perm_apply,
    perm_length,
    sigma_eval,
    simple_act,
)
from .walks import _step_sign, enumerate_walks
from .words import canonical_perm_word, decompose, greedy_word, reduce_to_fundamental


@dataclass(frozen=True)
class WalkTerm:
    exponent: tuple
    coefficient: object


@lru_cache(maxsize=None)
def sigma_product(phi, lam, ctx):
    """prod_a sigma((lam, s_{u_t} ... s_{u_{a+1}} alpha_{u_a})) over the canonical word of phi.

    Equals the coefficient of ``T_{u_1} ... T_{u_t} x^lam`` at ``x^{phi lam}``
    for ``lam`` in A^(n).
    """
    word = canonical_perm_word(phi)
    v = lam
    acc = ctx.ring.one
    for i in reversed(word):
        acc = acc * sigma_eval(v[i - 1] - v[i], ctx)
        v = simple_act(ctx.r, i, ctx.n, v)
    return acc


def _decomposition(mu, ctx, word=None):
    mu = ctx.check_rank(mu)
    if word is None:
        return reduce_to_fundamental(mu, ctx)
    lam, _ = greedy_word(mu, ctx.n)
    return decompose(mu, lam, tuple(word), ctx.n)


def _gammas(dec, ctx):
    return [gamma_eval(-b, dec.lam, ctx) for b in dec.betas]


def walk_coefficient(p, dec, ctx):
    """The term contributed by one walk, computed directly."""
    ring = ctx.ring
    c = ring.k.inv() - ring.k
    gam = _gammas(dec, ctx)
    coeff = sigma_product(p.phi, dec.lam, ctx)
    for j in p.pos_folds:
        coeff = coeff * c / (1 - gam[j])
    for j in p.neg_folds:
        coeff = coeff * c * gam[j] / (1 - gam[j])
    exp = tuple(ctx.n * t + x for t, x in zip(p.wt, perm_apply(p.phi, dec.lam)))
    return WalkTerm(exp, coeff)


def _walk_sum(dec, ctx, starts, mode):
    """Sum of walk terms over ``starts = [(perm, weight)]``.

    ``mode`` is ``full`` (exact coefficients), ``zero`` or ``infinity``
    (the degenerate fold factors of the q-limits).
    """
    ring = ctx.ring
    r, n = ctx.r, ctx.n
    word = dec.word
    ell = len(word)
    lam = dec.lam
    c = ring.k.inv() - ring.k
    if mode == "full":
        gam = _gammas(dec, ctx)
        cross_f = [1 - g for g in gam]
        pos_f = [c] * ell
        neg_f = [c * g for g in gam]
    elif mode == "zero":
        cross_f = [ring.one] * ell
        pos_f, neg_f = [c] * ell, None
    elif mode == "infinity":
        cross_f = [ring.one] * ell
        pos_f, neg_f = None, [-c] * ell
    else:
        raise ValueError(f"unknown mode {mode!r}")
    refl = {i: AffineWeylElement.simple_reflection(r, i) for i in set(word)}
    buckets = {}

    def rec(j, z, acc):
        if j == ell:
            phi = z.perm
            e = tuple(n * t + x for t, x in zip(z.translation, perm_apply(phi, lam)))
            val = acc * sigma_product(phi, lam, ctx)
            old = buckets.get(e)
            buckets[e] = val if old is None else old + val
            return
        i = word[j]
        rec(j + 1, z * refl[i], acc * cross_f[j])
        if _step_sign(z, i):
            if pos_f is not None:
                rec(j + 1, z, acc * pos_f[j])
        elif neg_f is not None:
            rec(j + 1, z, acc * neg_f[j])

    for perm, weight in starts:
        rec(0, AffineWeylElement.from_perm(perm), weight)
    if mode == "full" and ell:
        denom = ring.one
        for f in cross_f:
            denom = denom * f
        buckets = {e: v / denom for e, v in buckets.items() if v}
    return LaurentPolynomial(ring, r, {e: v for e, v in buckets.items() if v})


def _unfolded_scalar(dec, ctx):
    z = AffineWeylElement.identity(ctx.r)
    for i in dec.word:
        z = z * AffineWeylElement.simple_reflection(ctx.r, i)
    return sigma_product(z.perm, dec.lam, ctx)


def _monic(poly, dec, ctx):
    s = _unfolded_scalar(dec, ctx)
    out = poly.scale(s.inv())
    if not out.coefficient(dec.mu).is_one():
        raise InternalInconsistencyError(
            f"coefficient of x^{dec.mu} is {out.coefficient(dec.mu).to_text()}, not 1"
        )
    return out


def _check_normalization(normalization):
    if normalization not in ("monic", "raw"):
        raise ValueError(f"unknown normalization {normalization!r}")


def compute_E(mu, ctx, normalization="monic", word=None):
    """E_mu^(n) from walks of type ``word`` starting at the fundamental alcove.

    ``word`` defaults to the greedy reduced word; any reduced word gives the
    same monic polynomial.

    >>> from ssvpoly.rootsys import MetaplecticContext
    >>> compute_E((0, 1, 0), MetaplecticContext(3, 1)).to_text()
    'x2 + ((k^2 - 1)/(k^4 q - 1)) x1'
    """
    _check_normalization(normalization)
    dec = _decomposition(mu, ctx, word)
    raw = _walk_sum(dec, ctx, [(tuple(range(ctx.r)), ctx.ring.one)], "full")
    return _monic(raw, dec, ctx) if normalization == "monic" else raw


def compute_TuE(u, mu, ctx):
    """A nonzero multiple of T_u E_mu: the walk sum started at ``u``."""
    u = tuple(u)
    if sorted(u) != list(range(ctx.r)):
        raise DomainError(f"{u} is not a permutation of 0..{ctx.r - 1}")
    dec = _decomposition(mu, ctx)
    return _walk_sum(dec, ctx, [(u, ctx.ring.one)], "full")


def _require_dominant(mu, ctx):
    mu = ctx.check_rank(mu)
    if not is_dominant(mu):
        raise DomainError(f"{mu} is not dominant")
    return mu


def _p_starts(ctx):
    k = ctx.ring.k
    return [(u, k ** perm_length(u)) for u in all_perms(ctx.r)]


def compute_P(mu, ctx):
    """The symmetric polynomial: sum over u of k^l(u) times the walks from u.

    >>> from ssvpoly.rootsys import MetaplecticContext
    >>> compute_P((0, 0, 0), MetaplecticContext(3, 1)).to_text()
    'k^6 + 2 k^4 + 2 k^2 + 1'
    """
    mu = _require_dominant(mu, ctx)
    dec = reduce_to_fundamental(mu, ctx)
    return _walk_sum(dec, ctx, _p_starts(ctx), "full")


def _direction(direction):
    if direction in ("zero", "q0"):
        return "zero"
    if direction in ("infinity", "qinf"):
        return "infinity"
    raise ValueError(f"unknown direction {direction!r}")


def compute_E_limit(mu, ctx, direction, normalization="monic"):
    """q -> 0 keeps walks with only positive folds, q -> infinity only negative ones."""
    _check_normalization(normalization)
    dec = _decomposition(mu, ctx)
    raw = _walk_sum(dec, ctx, [(tuple(range(ctx.r)), ctx.ring.one)], _direction(direction))
    return _monic(raw, dec, ctx) if normalization == "monic" else raw


def compute_P_limit(mu, ctx, direction):
    mu = _require_dominant(mu, ctx)
    dec = reduce_to_fundamental(mu, ctx)
    return _walk_sum(dec, ctx, _p_starts(ctx), _direction(direction))


def walk_table(mu, ctx, start=None):
    """Walks of the decomposition with their terms, for display."""
    dec = _decomposition(mu, ctx)
    start = AffineWeylElement.from_perm(tuple(start) if start else tuple(range(ctx.r)))
    rows = []
    for p in enumerate_walks(start, dec.word):
        rows.append((p, walk_coefficient(p, dec, ctx)))
    return dec, rows
