from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as hst

from zrspace import kronecker as kr
from zrspace import zr_space as zr
from zrspace.errors import DomainError
from zrspace.field_arith import GENERIC, BasePair, Place, PolyT, RatFunT, gauss_val, parse_poly_t, parse_ratfun_t
from zrspace.zr_space import ZarSubset

QZ = BasePair("q-z")
P = Place.prime
ALL = ZarSubset.all_places()


def h(text, base=QZ):
    return parse_ratfun_t(base, text)


def test_trivial_extension_examples():
    assert kr.in_trivial_extension(P(2), h("T"))
    assert kr.in_trivial_extension(P(2), h("1/T"))
    assert kr.in_trivial_extension(P(2), h("(2+T)/(1+2*T)"))
    assert not kr.in_trivial_extension(P(2), h("1/2"))
    assert kr.in_trivial_extension(GENERIC, h("1/2"))


def test_kr_member_examples():
    spec = kr.KrSpec(QZ, ALL)
    assert kr.kr_member(spec, h("(2+T)/(1+2*T)"))
    assert not kr.kr_member(spec, h("1/2"))
    assert kr.kr_witness(spec, h("1/2")) == P(2)
    assert kr.kr_member(kr.KrSpec(QZ, ZarSubset.finite([P(3)])), h("1/2"))
    with pytest.raises(DomainError):
        kr.KrSpec(QZ, ZarSubset.empty())


def test_kr_member_oracle_over_window():
    # direct Gauss-valuation scan over every prime up to 50
    spec = kr.KrSpec(QZ, ALL)
    for text in ("(6+T)/(3*T^2+2)", "(5/4*T+1)/(T-1/2)", "(10+15*T)/5"):
        expected = all(gauss_val(P(p), h(text).f) >= gauss_val(P(p), h(text).g) for p in (2, 3, 5, 7, 11, 13))
        assert kr.kr_member(spec, h(text)) == expected


def test_kfr_axiom_examples():
    spec = kr.KrSpec(QZ, ALL)
    assert kr.kfr_axiom_check(spec, [parse_poly_t(QZ, "2 + T"), parse_poly_t(QZ, "1")])
    rep = kr.content_formula_check(spec, parse_poly_t(QZ, "4 + 2*T + T^2"))
    assert rep and rep.checked >= 3
    assert kr.content_formula_check(spec, parse_poly_t(QZ, "5"))
    with pytest.raises(DomainError):
        kr.kfr_axiom_check(spec, [PolyT([])])


def test_phi_pullback_examples():
    Fs = kr.phi_pullback(h("(2+T)/3"))
    assert set(Fs) == {
        frozenset({Fraction(2, 3), Fraction(1), Fraction(1, 2)}),
        frozenset({Fraction(1, 3), Fraction(2), Fraction(1)}),
    }
    assert kr.phi_pullback(h("5/7")) == [frozenset({Fraction(5, 7), Fraction(1)})]
    assert kr.phi_pullback(h("T")) == [frozenset({Fraction(1)})]
    assert zr.b_F(QZ, kr.phi_pullback(h("T"))[0]) == ZarSubset.whole()
    with pytest.raises(DomainError):
        kr.phi_pullback(RatFunT(PolyT([]), PolyT([Fraction(1)])))


def test_pullback_formula_function_field():
    base = BasePair("fpx-fp", 2)
    hh = parse_ratfun_t(base, "(x + T)/(x^2 + T^2)")
    for q in list(kr.coefficient_support(base, hh)) + [Place.infinity()]:
        assert kr.in_trivial_extension(q, hh) == kr.pullback_contains(base, hh, q)


def test_kr_star_member_examples():
    f, g = parse_poly_t(QZ, "2 + 4*T"), parse_poly_t(QZ, "2")
    assert kr.kr_star_member(QZ, ALL, (f, g))
    assert kr.kr_star_member(QZ, ALL, (g, g))
    assert not kr.kr_star_member(QZ, ALL, (parse_poly_t(QZ, "1"), parse_poly_t(QZ, "2")))
    with pytest.raises(DomainError):
        kr.kr_star_member(QZ, ALL, (parse_poly_t(QZ, "1/2"), g))
    with pytest.raises(DomainError):
        kr.kr_star_member(BasePair("fpx-fp", 2), ALL, h("T"))


def test_kr_star_member_agrees_with_kronecker_ring():
    # over a PID, wedge_Y on contents reproduces Kr of the generization closure
    Y = ZarSubset.finite([P(2), P(3)])
    for text in ("(2+T)/(1+2*T)", "(6+T)/3", "1/2", "(1+T)/(4+2*T)"):
        assert kr.kr_star_member(QZ, Y, h(text)) == kr.kr_member(kr.KrSpec(QZ, Y), h(text))


ints = hst.integers(-40, 40)
polys = hst.lists(ints, min_size=1, max_size=4).filter(lambda cs: any(cs))


@given(polys, polys, hst.sampled_from([2, 3, 5]))
@settings(max_examples=150, deadline=None)
def test_pullback_formula_property(fc, gc, p):
    hh = RatFunT(PolyT([Fraction(c) for c in fc]), PolyT([Fraction(c, 3) for c in gc]))
    assert kr.in_trivial_extension(P(p), hh) == kr.pullback_contains(QZ, hh, P(p))


@given(polys, polys)
@settings(max_examples=100, deadline=None)
def test_kr_ring_is_closed_under_products(fc, gc):
    spec = kr.KrSpec(QZ, ALL)
    a = RatFunT(PolyT([Fraction(c) for c in fc]), PolyT([Fraction(c) for c in gc]))
    T = h("T")
    if kr.kr_member(spec, a):
        assert kr.kr_member(spec, a * T) and kr.kr_member(spec, a * a)
