"""Kronecker function rings Kr(Y) as intersections of Gauss extensions V(T).

Run with ``python demos/02_kronecker_rings.py``.
"""

from zrspace import kronecker as kr
from zrspace import zr_space as zr
from zrspace.field_arith import BasePair, Place, gauss_val, parse_poly_t, parse_ratfun_t
from zrspace.semistar import hat_closure
from zrspace.zr_space import ZarSubset

base = BasePair("q-z")
Y = ZarSubset.all_places()
spec = kr.KrSpec(base, Y)

# %% Membership is decided at the finitely many primes dividing a coefficient.
for text in ("(2+T)/(1+2*T)", "1/2", "(6+3*T)/(3*T^2+3)", "T", "1/T"):
    h = parse_ratfun_t(base, text)
    print(f"{text:>20}: member={kr.kr_member(spec, h)!s:5}  witness={kr.kr_witness(spec, h)}")

# Only the 2-adic place rejects 1/2, so dropping it lets 1/2 in.
only3 = kr.KrSpec(base, ZarSubset.finite([Place.prime(3)]))
print("1/2 over {p:3}:", kr.kr_member(only3, parse_ratfun_t(base, "1/2")))

# %% The Gauss valuation is the minimum over coefficients.
f = parse_poly_t(base, "4 + 2*T + T^2")
print("v*_2(4 + 2T + T^2) =", gauss_val(Place.prime(2), f))
print("content formula:", kr.content_formula_check(spec, f).to_dict())

# %% The pullback of B_h along V -> V(T) is a finite union of basic opens B_F.
h = parse_ratfun_t(base, "(2+T)/3")
Fs = kr.phi_pullback(h)
print("F_ij:", [sorted(map(str, F)) for F in Fs])
union = ZarSubset.empty()
for F in Fs:
    union = union | zr.b_F(base, F)
print("union of B_F:", union)

# %% Kr(Y) only sees the constructible closure plus generizations.
for Yi in (ZarSubset.all_places(), ZarSubset.cofinite([Place.prime(5)])):
    Yh = hat_closure(Yi)
    same = all(kr.kr_member(kr.KrSpec(base, Yi), parse_ratfun_t(base, t)) ==
               kr.kr_member(kr.KrSpec(base, Yh), parse_ratfun_t(base, t)) for t in ("1/5", "(5+T)/25", "7/2"))
    print(f"{Yi} vs {Yh}: agree={same}")

# %% Over F_2(x) with the degree place, x and 1/x sit on opposite sides of infinity.
ff = BasePair("fpx-fp", 2)
spec_ff = kr.KrSpec(ff, ZarSubset.all_places())
for text in ("x + T", "1/x", "(x^2+T)/(x+1)"):
    print(f"over F_2(x): {text:>14} -> witness {kr.kr_witness(spec_ff, parse_ratfun_t(ff, text))}")
