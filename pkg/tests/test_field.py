from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st
from strategies import polys, scalars, to_sympy

from ssvpoly.errors import DivergentLimitError, MalformedScalarError, SpecializationPoleError
from ssvpoly.field import (
    param_ring,
    scalar_equals,
    scalar_limit_q,
    scalar_normalize,
    scalar_substitute,
)

R1 = param_ring(1)
R2 = param_ring(2)
R3 = param_ring(3)
k, q = R1.k, R1.q


def test_normalize_cancels_common_factor():
    a = R1.raw((k * k - 1).num, (k - 1).num)
    assert scalar_normalize(a).to_text() == "k + 1"


def test_normalize_keeps_coprime_pair():
    a = (k - 1) * (k + 1) / (k**4 * q - 1)
    assert scalar_normalize(a).to_text() == "(k^2 - 1)/(k^4 q - 1)"


def test_normalize_reduces_half_gauss_sum():
    g = R2.G(1)
    assert scalar_normalize(g**3 / g).is_one()
    assert (g * g).is_one()


def test_no_reduction_when_disabled():
    R = param_ring(2, reduce_ghalf=False)
    g = R.G(1)
    assert (g * g).to_text() == "G1^2"


def test_zero_denominator_is_malformed():
    with pytest.raises(MalformedScalarError):
        R1.raw({0: 1}, {})
    with pytest.raises(ZeroDivisionError):
        k / R1.zero


def test_equals_sign_cancellation():
    g = R3.G(1)
    kk, qq = R3.k, R3.q
    assert scalar_equals(1 / (kk * g - qq), -1 / (qq - kk * g))
    assert not scalar_equals(k, k.inv())
    assert scalar_equals(q * k**4 / (1 - q * k**4), -q * k**4 / (q * k**4 - 1))


def test_limit_examples():
    a = (k * k - 1) / (k**4 * q - 1)
    assert scalar_limit_q(a, "zero") == 1 - k * k
    assert scalar_limit_q(a, "infinity").is_zero()
    assert scalar_limit_q(q * k**4 / (1 - q * k**4), "infinity") == R1(-1)


def test_limit_poles():
    with pytest.raises(DivergentLimitError):
        scalar_limit_q(1 / q, "zero")
    with pytest.raises(DivergentLimitError):
        scalar_limit_q(q, "infinity")


def test_substitute_examples():
    assert scalar_substitute(k.inv() - k, {"k": Fraction(1, 2)}) == R1(Fraction(3, 2))
    assert scalar_substitute(k**4 * q - 1, {"q": 0}) == R1(-1)
    assert scalar_substitute(k - k.inv(), {"k": 2}) == R1(Fraction(3, 2))


def test_substitute_pole():
    with pytest.raises(SpecializationPoleError):
        scalar_substitute(1 / (k - 1), {"k": 1})


def test_half_gauss_sum_only_takes_signs():
    g = R2.G(1)
    assert scalar_substitute(g + R2.k, {"G1": -1}) == R2.k - 1
    with pytest.raises(ValueError):
        scalar_substitute(g, {"G1": 2})


def test_text_and_latex():
    a = (k * k - 1) / (k**4 * q - 1)
    assert str(a) == "(k^2 - 1)/(k^4 q - 1)"
    assert a.to_latex() == "\\frac{k^{2}-1}{k^{4}q-1}"


@given(scalars(R3), scalars(R3), scalars(R3))
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a - a == R3.zero


@given(scalars(R2, nonzero=True))
def test_inverse(a):
    assert (a * a.inv()).is_one()


@given(scalars(R3), scalars(R3))
def test_equality_matches_canonical_forms(a, b):
    na, nb = scalar_normalize(a), scalar_normalize(b)
    assert scalar_equals(a, b) == (na.num == nb.num and na.den == nb.den)
    assert scalar_equals(a, a)
    assert scalar_equals(a, b) == scalar_equals(b, a)


@given(scalars(R1), scalars(R1))
def test_canonical_form_agrees_with_sympy(a, b):
    s = a * b + a
    num, syms = to_sympy(s.num, R1)
    den, _ = to_sympy(s.den, R1)
    assert sympy.gcd(num, den).is_number
    na, _ = to_sympy(a.num, R1)
    da, _ = to_sympy(a.den, R1)
    nb, _ = to_sympy(b.num, R1)
    db, _ = to_sympy(b.den, R1)
    assert sympy.simplify(num / den - (na / da) * (nb / db) - na / da) == 0


@given(scalars(R3), scalars(R3), st.fractions(-3, 3), st.fractions(1, 3))
def test_substitution_is_a_homomorphism(a, b, kv, qv):
    bind = {"k": kv, "q": qv}
    try:
        sa, sb = scalar_substitute(a, bind), scalar_substitute(b, bind)
    except SpecializationPoleError:
        return
    assert scalar_substitute(a * b, bind) == sa * sb
    assert scalar_substitute(a + b, bind) == sa + sb


@given(polys(R1), polys(R1).filter(lambda p: not p.is_zero()))
def test_limit_zero_matches_small_q(num, den):
    a = num / den
    try:
        lim = scalar_limit_q(a, "zero")
    except DivergentLimitError:
        return
    kv = Fraction(7, 5)
    eps = Fraction(1, 10**6)
    try:
        near = scalar_substitute(a, {"k": kv, "q": eps}).to_fraction()
    except SpecializationPoleError:
        return
    at = scalar_substitute(lim, {"k": kv}).to_fraction()
    assert abs(near - at) <= Fraction(1, 100) * (1 + abs(at))


@given(scalars(R3))
def test_limits_are_q_free(a):
    for d in ("zero", "infinity"):
        try:
            lim = scalar_limit_q(a, d)
        except DivergentLimitError:
            continue
        assert all(R3.exponents(key)[1] == 0 for key in lim.num)
        assert all(R3.exponents(key)[1] == 0 for key in lim.den)
