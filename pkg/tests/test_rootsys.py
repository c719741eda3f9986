from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ssvpoly.errors import MalformedMetaplecticError
from ssvpoly.rootsys import (
    AffineRoot,
    AffineWeylElement,
    MetaplecticContext,
    affine_simple_root,
    all_perms,
    gamma_eval,
    gamma_exponents,
    in_fundamental,
    pairing_eval,
    positive_roots,
    psi_n,
    reflect,
    sigma_eval,
    simple_act,
    weyl_act,
)

C31 = MetaplecticContext(3, 1)


def test_pairing_examples():
    assert pairing_eval(AffineRoot((1, -1, 0)), (1, 0, 0)) == 1
    assert pairing_eval(AffineRoot((-1, 0, 1), 1), (1, 0, 0)) == 0
    assert pairing_eval(AffineRoot((-2, 0, 2), 4), (2, 0, 0)) == 0


def test_reflect_examples():
    a0 = affine_simple_root(3, 0, 1)
    assert reflect(a0, (1, 0, 0)) == (1, 0, 0)
    assert reflect(a0, (2, 0, 0)) == (1, 0, 1)
    assert reflect(affine_simple_root(3, 0, 2), (3, 0, 0)) == (2, 0, 1)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_reflect_matches_simple_action(n):
    for i in range(3):
        for v in product(range(-2, 3), repeat=3):
            assert reflect(affine_simple_root(3, i, n), v) == simple_act(3, i, n, v)
            s = AffineWeylElement.simple_reflection(3, i, n)
            assert s.act(v) == simple_act(3, i, n, v)


def test_weyl_act_examples():
    assert weyl_act(AffineWeylElement.omega(3), (0, 0, 0)) == (1, 0, 0)
    lam = (2, 1, -1)
    for n in (1, 2):
        s0 = AffineWeylElement.simple_reflection(3, 0, n)
        img = weyl_act(s0, AffineRoot(lam, 0), "linear")
        assert img == AffineRoot((-1, 1, 2), n * 3)
    e = AffineWeylElement.identity(3)
    assert weyl_act(e, (4, 5, 6)) == (4, 5, 6)


def test_psi_examples():
    assert psi_n(AffineRoot((1, -1, 0)), 2) == AffineRoot((2, -2, 0))
    assert psi_n(affine_simple_root(3, 0), 2) == AffineRoot((-2, 0, 2), 4)
    w = AffineWeylElement((1, 0, 0), (1, 0, 2))
    assert psi_n(w, 3) == AffineWeylElement((3, 0, 0), (1, 0, 2))


elements = st.builds(
    AffineWeylElement,
    st.tuples(*[st.integers(-3, 3)] * 3),
    st.sampled_from(all_perms(3)),
)
vectors = st.tuples(*[st.integers(-4, 4)] * 3)


@given(elements, elements, vectors)
def test_group_action(a, b, v):
    assert (a * b).act(v) == a.act(b.act(v))
    assert a.inverse().act(a.act(v)) == v


@given(elements, elements, st.integers(1, 4), vectors)
def test_psi_homomorphism(a, b, n, v):
    assert psi_n(a * b, n) == psi_n(a, n) * psi_n(b, n)
    assert psi_n(a, n).act(tuple(n * x for x in v)) == tuple(n * x for x in a.act(v))


@given(elements, elements)
def test_linear_action_is_an_action(a, b):
    rho = AffineRoot((1, 0, -1), 2)
    assert (a * b).act_linear(rho) == a.act_linear(b.act_linear(rho))


def test_sigma_examples():
    for n in (1, 2, 5):
        ctx = MetaplecticContext(3, n)
        assert sigma_eval(0, ctx) == ctx.ring.k
        assert sigma_eval(n, ctx) == ctx.ring.k.inv()
    c5 = MetaplecticContext(3, 5)
    assert sigma_eval(-2, c5) == c5.ring.G(2).inv()
    assert sigma_eval(3, c5) == c5.ring.G(2).inv()
    assert sigma_eval(-1, c5) == c5.ring.G(1).inv()


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_sigma_inverse_pairs(n):
    ctx = MetaplecticContext(3, n)
    for a in range(-13, 14):
        if a:
            assert (sigma_eval(a, ctx) * sigma_eval(-a, ctx)).is_one()


def test_gamma_examples():
    ring = C31.ring
    assert gamma_eval(AffineRoot((1, 0, 0)), (0, 0, 0), C31) == ring.k**2
    assert gamma_eval(AffineRoot((-1, 1, 0)), (1, 0, 0), C31) == ring.q * ring.k**4
    for rho in (AffineRoot((2, -1, -1), 3), AffineRoot((0, 1, -1), -1)):
        for lam in ((1, 0, 0), (2, -1, 1)):
            assert (gamma_eval(rho, lam, C31) * gamma_eval(-rho, lam, C31)).is_one()


def test_gamma_rejects_non_metaplectic():
    c2 = MetaplecticContext(3, 2)
    with pytest.raises(MalformedMetaplecticError):
        gamma_exponents(AffineRoot((1, -1, 0)), (0, 0, 0), c2)
    with pytest.raises(MalformedMetaplecticError):
        gamma_exponents(AffineRoot((2, -2, 0), 1), (0, 0, 0), c2)


def metaplectic_roots(r, n, levels=range(-2, 3)):
    for a in positive_roots(r):
        for s in levels:
            for sign in (1, -1):
                yield AffineRoot(tuple(sign * n * x for x in a), s * n * n)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_gammas_equal_lemma(n):
    ctx = MetaplecticContext(3, n)
    for lam in product(range(-2, 3), repeat=3):
        for i in range(3):
            slam = simple_act(3, i, n, lam)
            if slam == lam:
                continue
            s = AffineWeylElement.simple_reflection(3, i, n)
            for j in range(3):
                rho = affine_simple_root(3, j, n)
                assert gamma_eval(s.act_linear(rho), lam, ctx) == gamma_eval(rho, slam, ctx)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_gamma_never_one(n):
    ctx = MetaplecticContext(3, n)
    for lam in product(range(-2, 3), repeat=3):
        for rho in metaplectic_roots(3, n):
            assert not gamma_eval(rho, lam, ctx).is_one()


@pytest.mark.parametrize("n", [1, 2, 3])
def test_q_power_lemma(n):
    ctx = MetaplecticContext(3, n)
    lams = [v for v in product(range(-1, n + 2), repeat=3) if in_fundamental(v, n)]
    assert lams
    for lam in lams:
        for rho in metaplectic_roots(3, n, levels=range(0, 3)):
            if not rho.is_positive():
                continue
            order = gamma_exponents(-rho, lam, ctx)["q"]
            assert order >= 0
            if rho.pairing(lam):
                assert order > 0
