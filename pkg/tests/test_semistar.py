from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as hst

from zrspace import semistar as st
from zrspace import zr_space as zr
from zrspace.errors import DomainError, ParseError
from zrspace.field_arith import BasePair, Place
from zrspace.semistar import FracIdeal, GenModule, StarSpec
from zrspace.zr_space import ZarSubset

QZ = BasePair("q-z")
P = Place.prime
ALL = ZarSubset.all_places()
WHOLE = ZarSubset.whole()


def fin(*ps, generic=False):
    return ZarSubset.finite([P(q) for q in ps], generic)


def I(*gens):
    return FracIdeal.of(QZ, [Fraction(g) for g in gens])


def test_frac_ideal_normalizes_to_exponents():
    assert I(6, 4).exponent(P(2)) == 1 and I(6, 4).exponent(P(3)) == 0
    J = FracIdeal.parse(QZ, "ideal:[6, 4/3]")
    assert J.exponent(P(2)) == 1 and J.exponent(P(3)) == -1
    assert J.generator() == Fraction(2, 3)
    with pytest.raises(ParseError):
        FracIdeal.parse(QZ, "ideal:6")
    with pytest.raises(DomainError):
        I(0)
    with pytest.raises(DomainError):
        FracIdeal.of(BasePair("fpx-fp", 2), [1])


def test_apply_wedge_examples():
    M = st.apply_wedge(StarSpec(fin(2, 3)), I(6))
    assert dict(M.exceptions) == {P(2): 1, P(3): 1}
    assert M.constraint == fin(2, 3)
    assert st.apply_wedge(StarSpec(ZarSubset.generic_point()), I(6)).is_whole_field()
    Z = st.apply_wedge(StarSpec(ALL), I(1))
    assert Z.constraint == ALL and not Z.exceptions
    with pytest.raises(DomainError):
        StarSpec(ZarSubset.empty())


def test_gen_contains_examples():
    Zmod = st.apply_wedge(StarSpec(ALL), I(1))
    twoZ = st.apply_wedge(StarSpec(ALL), I(2))
    assert st.gen_contains(Zmod, twoZ) and not st.gen_contains(twoZ, Zmod)
    a = GenModule({P(2): 1}, fin(2))
    b = GenModule({P(2): 1}, fin(2, 3))
    assert st.gen_contains(a, b) and not st.gen_contains(b, a)


def test_module_membership_oracle():
    M = st.apply_wedge(StarSpec(fin(2, 3)), I(6))
    for a in range(1, 40):
        for b in (1, 2, 3, 5, 7):
            x = Fraction(a, b)
            expected = all(_v(p, x) >= 1 for p in (2, 3))
            assert M.contains_element(QZ, x) == expected


def _v(p, x):
    n, d, k = x.numerator, x.denominator, 0
    while n % p == 0:
        n //= p
        k += 1
    while d % p == 0:
        d //= p
        k -= 1
    return k


def test_hat_closure_examples():
    assert st.hat_closure(ALL) == WHOLE
    assert st.hat_closure(fin(2)) == fin(2, generic=True)
    assert st.wedge_ft_equal(ALL, WHOLE)
    assert not st.wedge_ft_equal(fin(2), fin(3))
    J = st.distinguishing_ideal(QZ, fin(2), fin(3))
    assert st.apply_wedge(StarSpec(fin(2)), J) != st.apply_wedge(StarSpec(fin(3)), J)
    assert st.distinguishing_ideal(QZ, ALL, WHOLE) is None


def test_b_apply_examples():
    for g in (6, 1, Fraction(4, 3)):
        M = st.b_apply(I(g))
        assert M == I(g).as_module()


def test_eab_examples():
    s = StarSpec(ALL)
    assert st.eab_check(s, [(I(2), I(3), I(6)), (I(5), I(5), I(5))])


def test_star_valuation_overrings():
    assert st.star_valuation_overrings(StarSpec(ALL)) == WHOLE
    assert st.star_valuation_overrings(StarSpec(fin(2))) == fin(2, generic=True)
    s = StarSpec(ZarSubset.generic_point())
    assert st.star_valuation_overrings(s) == ZarSubset.generic_point()
    W = st.star_overring_witness(StarSpec(fin(2)), QZ, P(3))
    assert W == FracIdeal.from_exponents(QZ, {P(3): -1})
    assert st.star_overring_witness(StarSpec(fin(2)), QZ, P(2)) is None
    assert st.is_star_valuation_overring(StarSpec(fin(2)), P(2), [I(6), I(Fraction(1, 2))])


def test_complete_witness_examples():
    Yh = st.complete_witness(ALL)
    assert Yh == WHOLE and zr.is_proconstructible(Yh) and zr.sp_closure(Yh) == Yh
    assert st.complete_witness(fin(2, 5)) == fin(2, 5, generic=True)


def test_vacancy_examples():
    assert st.vacancy_check(ALL).checked == 1
    assert st.vacancy_check(WHOLE)
    rep = st.vacancy_check(fin(2))
    assert rep.passed and rep.checked == 0 and "vacuous" in rep.witness
    assert st.is_vacant_base(QZ, [P(2), P(3)])
    assert st.is_vacant_base(BasePair("fpx-fpx", 2))


pool = [P(q) for q in (2, 3, 5, 7)]
subsets = hst.builds(
    lambda mode, ps, g: ZarSubset(mode, tuple(ps), g),
    hst.sampled_from(["finite", "cofinite"]),
    hst.sets(hst.sampled_from(pool)),
    hst.booleans(),
).filter(lambda Y: not Y.is_empty())
ideals = hst.dictionaries(hst.sampled_from(pool), hst.integers(-3, 3)).map(
    lambda e: FracIdeal.from_exponents(QZ, e)
)
scalars = hst.sampled_from([Fraction(1), Fraction(2), Fraction(3, 5), Fraction(-7, 4), Fraction(1, 6)])


@given(subsets, ideals, ideals, scalars)
@settings(max_examples=200, deadline=None)
def test_semistar_axioms(Y, E, F, x):
    s = StarSpec(Y)
    Es = st.apply_wedge(s, E)
    # extensive, idempotent, monotone, and compatible with scaling
    assert st.gen_contains(Es, E.as_module())
    assert st.apply_wedge(s, Es) == Es
    if F <= E:
        assert st.gen_contains(Es, st.apply_wedge(s, F))
    assert st.apply_wedge(s, E.scale(x)) == Es.scale(QZ, x)
    # the star of a product only depends on the places of Y
    assert st.apply_wedge(s, E * F).constraint == Es.constraint


@given(subsets, ideals, ideals, ideals)
@settings(max_examples=200, deadline=None)
def test_eab_property(Y, F, G, H):
    assert st.eab_check(StarSpec(Y), [(F, G, H)])


@given(subsets, ideals)
@settings(max_examples=200, deadline=None)
def test_wedge_depends_only_on_hat_closure(Y, E):
    assert st.apply_wedge(StarSpec(Y), E) == st.apply_wedge(StarSpec(st.hat_closure(Y)), E)
