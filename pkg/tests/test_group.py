from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from polyweyl import (
    GroupElement,
    Poly,
    RescaleMap,
    compose,
    identity,
    inverse,
    khat_apply,
    khat_inverse,
    t_apply,
    t_inv_apply,
)
from polyweyl.errors import DegreeMismatchError, DomainError

from conftest import group_elements, polys, rationals

SQUARES = [Fraction(1, 4), Fraction(1), Fraction(4), Fraction(9)]


def test_documented_compositions():
    g = GroupElement.of(1, 0, 1)
    assert compose(g, g) == GroupElement.of(2, 0, 2)
    assert compose(g, GroupElement.of(-1, 0, 1)) == GroupElement.of(0, 1, 2)
    h = compose(GroupElement.of(0, 0, 0, 1), GroupElement(2, 1, Poly.zero(2)))
    assert h == GroupElement.of(1, Fraction(1, 6), -1, 1)


def test_identity_and_inverse_examples():
    e = identity(1)
    assert e == GroupElement.of(0, 0, 0)
    assert inverse(e) == e
    assert inverse(GroupElement.of(1, 0, 0, 1)) == GroupElement.of(-1, 0, 0, -1)
    u, a0, a1 = Fraction(3, 7), Fraction(-1, 2), Fraction(5)
    assert inverse(GroupElement.of(u, a0, a1)) == GroupElement.of(-u, -a0, -a1)


def test_degree_mismatch():
    with pytest.raises(DegreeMismatchError):
        compose(identity(1), identity(2))


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.tuples(*(group_elements(n) for _ in range(3)))))
def test_associativity(triple):
    g, h, k = triple
    assert compose(compose(g, h), k) == compose(g, compose(h, k))


@given(group_elements())
def test_unit_and_inverse_laws(g):
    e = identity(g.n)
    assert compose(e, g) == g and compose(g, e) == g
    assert compose(g, inverse(g)) == e
    assert compose(inverse(g), g) == e


@given(group_elements(n=1), group_elements(n=1))
def test_n1_weyl_cocycle(g, h):
    u, (a0, a1) = g.u, g.coeffs
    v, (b0, b1) = h.u, h.coeffs
    expected = GroupElement.of(u + v, a0 + b0 + (u * b1 - v * a1) / 2, a1 + b1)
    assert compose(g, h) == expected


def test_khat_examples():
    g = GroupElement.of(Fraction(2, 3), 5, -7, Fraction(1, 2))
    assert khat_apply(RescaleMap(1), g) == g
    u, (a0, a1, a2) = g.u, g.coeffs
    assert khat_apply(RescaleMap(4), g) == GroupElement.of(2 * u, 4 * a0, 2 * a1, a2)
    assert RescaleMap(4).exact and not RescaleMap(2).exact
    assert khat_inverse(RescaleMap(4), g) == khat_apply(RescaleMap(Fraction(1, 4)), g)
    # L=9, n=1: X coefficient scaled by 3 and back
    h = GroupElement.of(3, 0, 3)
    assert khat_inverse(RescaleMap(9), h) == GroupElement.of(1, 0, 1)
    with pytest.raises(DomainError):
        RescaleMap(0)


def _weights_oracle(L, n):
    """(u weight, a_j weights) from floating powers."""
    return float(L) ** 0.5, [float(L) ** (1 - j / 2) for j in range(n + 1)]


@given(group_elements(), st.sampled_from([Fraction(2), Fraction(3, 7), Fraction(5, 2)]))
def test_khat_non_square_matches_float_weights(g, L):
    out = khat_apply(RescaleMap(L), g)
    wu, wa = _weights_oracle(L, g.n)
    assert out.u == pytest.approx(float(g.u) * wu, rel=1e-14, abs=1e-300)
    for c, c0, w in zip(out.coeffs, g.coeffs, wa):
        assert c == pytest.approx(float(c0) * w, rel=1e-14, abs=1e-300)


@given(group_elements(), st.sampled_from(SQUARES), st.sampled_from(SQUARES))
def test_khat_multiplicative_exact(g, L1, L2):
    lhs = khat_apply(RescaleMap(L1), khat_apply(RescaleMap(L2), g))
    assert lhs == khat_apply(RescaleMap(L1 * L2), g)
    assert khat_inverse(RescaleMap(L1), khat_apply(RescaleMap(L1), g)) == g


def _khat_poly(L, P):
    return khat_apply(RescaleMap(L), GroupElement(P.n, 0, P)).P


def _khat_inv_poly(L, P):
    return khat_inverse(RescaleMap(L), GroupElement(P.n, 0, P)).P


@given(st.integers(1, 4).flatmap(lambda n: polys(n)), rationals(), st.sampled_from(SQUARES))
def test_intertwining_identities(P, u, L):
    r = RescaleMap(L).weights(0)[0]  # |I|^(1/2), exact for squares
    assert _khat_poly(L, t_apply(u, P)) == t_apply(u * r, _khat_poly(L, P))
    assert _khat_inv_poly(L, t_inv_apply(u, P)) == t_inv_apply(u / r, _khat_inv_poly(L, P))
    assert _khat_poly(L, t_inv_apply(u, P)) == t_inv_apply(u * r, _khat_poly(L, P))
    assert _khat_inv_poly(L, t_apply(u, P)) == t_apply(u / r, _khat_inv_poly(L, P))


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.tuples(group_elements(n), group_elements(n))),
       st.sampled_from(SQUARES))
def test_khat_automorphism_exact(pair, L):
    g, h = pair
    m = RescaleMap(L)
    assert khat_apply(m, compose(g, h)) == compose(khat_apply(m, g), khat_apply(m, h))


def _close(x, y, tol=1e-9):
    return abs(x - y) <= tol * max(1.0, abs(x), abs(y))


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(group_elements(n, bound=4),
                                                      group_elements(n, bound=4))),
       st.sampled_from([Fraction(2), Fraction(3), Fraction(5, 3), Fraction(7, 2)]))
def test_khat_automorphism_float(pair, L):
    g, h = pair
    m = RescaleMap(L)
    lhs = khat_apply(m, compose(g, h))
    rhs = compose(khat_apply(m, g), khat_apply(m, h))
    assert _close(lhs.u, rhs.u)
    assert all(_close(a, b) for a, b in zip(lhs.coeffs, rhs.coeffs))
