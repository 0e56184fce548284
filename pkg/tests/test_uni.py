from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from jacsyz.fields import PrimeField, QQ, random_primes
from jacsyz.uni import UniPoly, uni_interpolate, uni_squarefree

coeff = st.fractions(min_value=-50, max_value=50, max_denominator=10)
polys = st.lists(coeff, min_size=0, max_size=6).map(lambda cs: UniPoly(QQ, cs))


def _from_ints(cs):
    return UniPoly(QQ, [Fraction(c) for c in cs])


@given(polys, polys)
def test_divmod_identity(a, b):
    if b.is_zero():
        return
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.is_zero() or r.degree < b.degree


@given(polys, polys)
def test_gcd_divides_both(a, b):
    g = a.gcd(b)
    if g.is_zero():
        assert a.is_zero() and b.is_zero()
        return
    assert (a % g).is_zero() and (b % g).is_zero()
    assert g.lc() == QQ.one()


@given(polys, polys, polys)
def test_gcd_sees_common_factor(a, b, c):
    if c.degree < 1:
        return
    g = (a * c).gcd(b * c)
    assert (g % c.monic()).is_zero()


@settings(max_examples=40)
@given(st.lists(st.tuples(st.integers(-30, 30), coeff),
                min_size=1, max_size=8,
                unique_by=lambda t: t[0]))
def test_interpolation_round_trip(pts):
    pts = [(Fraction(x), y) for x, y in pts]
    u = uni_interpolate(QQ, pts)
    assert u.is_zero() or u.degree < len(pts)
    for x, y in pts:
        assert u(x) == y


def _upow(u, n):
    acc = UniPoly.one(u.field)
    for _ in range(n):
        acc = acc * u
    return acc


def test_squarefree_yun():
    x = UniPoly.x(QQ)
    one = UniPoly.one(QQ)
    u = _upow(x - one, 2) * (x + one) * _upow(x - one.scale(Fraction(2)), 3)
    fac = uni_squarefree(u)
    rebuilt = UniPoly.one(QQ)
    for g, m in fac:
        rebuilt = rebuilt * _upow(g, m)
    assert rebuilt.monic() == u.monic()
    assert sorted(m for _, m in fac) == [1, 2, 3]


def test_resultant_known_value():
    # res(x^2 - 1, x - 2) = (2-1)(2+1) = 3
    a = _from_ints([-1, 0, 1])
    b = _from_ints([-2, 1])
    assert a.resultant(b) == Fraction(3)
    # common root => 0
    assert a.resultant(_from_ints([-1, 1])) == 0


@settings(max_examples=25)
@given(polys, polys, polys)
def test_resultant_multiplicative(a, b, c):
    if a.degree < 1 or b.degree < 1 or c.degree < 1:
        return
    assert (a * b).resultant(c) == a.resultant(c) * b.resultant(c)


def test_roots_gfp():
    p = random_primes(1, seed=3)[0]
    F = PrimeField(p)
    x = UniPoly.x(F)
    rs = [F.coerce(5), F.coerce(17), F.coerce(-2)]
    u = UniPoly.one(F)
    for r in rs:
        u = u * (x - UniPoly.constant(F, r))
    assert sorted(u.roots_gfp()) == sorted(rs)


def test_pow_mod():
    p = random_primes(1, seed=4)[0]
    F = PrimeField(p)
    x = UniPoly.x(F)
    mod = _upow(x, 3) - UniPoly.one(F)
    assert x.pow_mod(3 * 10**6, mod) == UniPoly.one(F) % mod


def test_eval_matches_horner():
    u = _from_ints([1, -2, 0, 4])
    t = Fraction(3, 2)
    assert u(t) == 1 - 2 * t + 4 * t ** 3
