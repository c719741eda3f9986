from fractions import Fraction
from itertools import product

import pytest

from ssvpoly.errors import DomainError
from ssvpoly.formulas import (
    compute_E,
    compute_E_limit,
    compute_P,
    compute_P_limit,
    compute_TuE,
    walk_coefficient,
)
from ssvpoly.laurent import LaurentPolynomial
from ssvpoly.rootsys import AffineWeylElement, MetaplecticContext, gamma_eval, is_dominant
from ssvpoly.walks import enumerate_walks
from ssvpoly.words import bruhat_lower_set, reduce_to_fundamental


def ctx(n, r=3):
    return MetaplecticContext(r, n)


def poly(c, terms):
    return LaurentPolynomial(c.ring, c.r, dict(terms))


def test_fundamental_weight_is_monomial():
    for n in (1, 2, 3, 4, 5):
        c = ctx(n)
        assert compute_E((1, 0, 0), c) == poly(c, {(1, 0, 0): c.ring.one})


def test_e_examples():
    c = ctx(1)
    k, q = c.ring.k, c.ring.q
    want = poly(c, {(0, 1, 0): c.ring.one, (1, 0, 0): (k - 1) * (k + 1) / (k**4 * q - 1)})
    assert compute_E((0, 1, 0), c) == want
    c = ctx(3)
    k, q, g = c.ring.k, c.ring.q, c.ring.G(1)
    want = poly(c, {(0, 1, 0): c.ring.one, (1, 0, 0): (k - 1) * (k + 1) * g**2 / (k * (k * q - g**3))})
    assert compute_E((0, 1, 0), c) == want
    c = ctx(2)
    assert compute_E((2, 0, 0), c) == poly(c, {(2, 0, 0): c.ring.one})


def test_walk_coefficient_examples():
    c = ctx(3)
    d = reduce_to_fundamental((0, 1, 0), c)
    unfolded, folded = enumerate_walks(AffineWeylElement.identity(3), d.word)
    t = walk_coefficient(unfolded, d, c)
    assert t.exponent == (0, 1, 0) and t.coefficient == c.ring.G(1)
    c = ctx(1)
    k, q = c.ring.k, c.ring.q
    d = reduce_to_fundamental((0, 1, 0), c)
    _, folded = enumerate_walks(AffineWeylElement.identity(3), d.word)
    t = walk_coefficient(folded, d, c)
    assert t.exponent == (1, 0, 0) and t.coefficient == (k.inv() - k) / (1 - q * k**4)
    d = reduce_to_fundamental((1, 1, 0), c)
    (p,) = enumerate_walks(AffineWeylElement.identity(3), d.word)
    assert walk_coefficient(p, d, c).coefficient.is_one()


def test_raw_sum_equals_walk_terms():
    c = ctx(2)
    mu = (-1, 2, 0)
    d = reduce_to_fundamental(mu, c)
    total = LaurentPolynomial.zero(c.ring, 3)
    for p in enumerate_walks(AffineWeylElement.identity(3), d.word):
        t = walk_coefficient(p, d, c)
        total = total + LaurentPolynomial.monomial(c.ring, t.exponent, t.coefficient)
    assert compute_E(mu, c, normalization="raw") == total


@pytest.mark.parametrize("n", [1, 2, 3])
def test_monic_and_support(n):
    c = ctx(n)
    for mu in product(range(-1, 3), repeat=3):
        E = compute_E(mu, c)
        assert E.coefficient(mu).is_one()
        assert set(E.support()) == bruhat_lower_set(mu, c)


def test_tue_examples():
    c = ctx(1)
    k = c.ring.k
    assert compute_TuE((0, 1, 2), (0, 1, 0), c) == compute_E((0, 1, 0), c, "raw")
    assert compute_TuE((1, 0, 2), (1, 0, 0), c) == poly(c, {(0, 1, 0): k.inv()})
    with pytest.raises(DomainError):
        compute_TuE((0, 0, 1), (1, 0, 0), c)


def test_p_examples():
    c = ctx(1)
    k = c.ring.k
    assert compute_P((0, 0, 0), c) == poly(c, {(0, 0, 0): k**6 + 2 * k**4 + 2 * k**2 + 1})
    c = ctx(2)
    k, g = c.ring.k, c.ring.G(1)
    want = poly(c, {(0, 0, 1): k**4 + k**2, (0, 1, 0): k**3 * g + k * g, (1, 0, 0): k**2 + 1})
    assert compute_P((1, 0, 0), c) == want
    want = poly(c, {e: k**2 + 1 for e in ((2, 0, 0), (0, 2, 0), (0, 0, 2))})
    assert compute_P((2, 0, 0), c) == want


def test_p_requires_dominant():
    with pytest.raises(DomainError):
        compute_P((0, 1, 0), ctx(1))
    with pytest.raises(DomainError):
        compute_P_limit((0, 1, 0), ctx(1), "zero")


def test_limit_examples():
    c = ctx(1)
    k = c.ring.k
    assert compute_E_limit((2, 1, 0), c, "zero") == poly(c, {(2, 1, 0): c.ring.one})
    want = poly(c, {(0, 1, 0): c.ring.one, (1, 0, 0): 1 - k * k})
    assert compute_E_limit((0, 1, 0), c, "zero") == want
    assert compute_E_limit((0, 1, 0), c, "qinf") == poly(c, {(0, 1, 0): c.ring.one})
    P0 = compute_P((0, 0, 0), c)
    assert compute_P_limit((0, 0, 0), c, "zero") == P0
    assert compute_P_limit((0, 0, 0), c, "infinity") == P0
    c = ctx(2)
    assert compute_P_limit((1, 0, 0), c, "zero") == compute_P((1, 0, 0), c).limit_q("zero")
    assert compute_P_limit((2, 0, 0), c, "infinity") == compute_P((2, 0, 0), c).limit_q("infinity")
    with pytest.raises(ValueError):
        compute_E_limit((0, 1, 0), c, "sideways")


@pytest.mark.parametrize("n", [1, 2, 3])
def test_every_walk_term_positive_at_small_q(n):
    c = ctx(n)
    bind = {"k": Fraction(1, 2), "q": Fraction(1, 10**4)}
    bind.update({s: 1 for s in c.ring.symbols[2:]})
    for mu in product(range(-1, 3), repeat=3):
        d = reduce_to_fundamental(mu, c)
        for b in d.betas:
            g = gamma_eval(-b, d.lam, c).substitute(bind).to_fraction()
            assert 0 < g < 1
        for p in enumerate_walks(AffineWeylElement.identity(3), d.word):
            assert walk_coefficient(p, d, c).coefficient.substitute(bind).to_fraction() > 0


@pytest.mark.parametrize("m,n", [(1, 2), (1, 3), (2, 4)])
def test_support_shrinks(m, n):
    for mu in product(range(-1, 3), repeat=3):
        assert set(compute_E(mu, ctx(n)).support()) <= set(compute_E(mu, ctx(m)).support())


def test_dominant_p_is_q0_monomial_sum():
    c = ctx(2)
    for mu in ((1, 0, 0), (2, 1, 0), (1, 1, 0)):
        assert is_dominant(mu)
        assert compute_E_limit(mu, c, "zero") == poly(c, {mu: c.ring.one})
