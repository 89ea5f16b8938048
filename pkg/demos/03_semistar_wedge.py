"""The semistar operations wedge_Y over Z: finite type, e.a.b., vacancy.

Run with ``python demos/03_semistar_wedge.py``.
"""

from zrspace import semistar as st
from zrspace.field_arith import BasePair, Place
from zrspace.semistar import FracIdeal, StarSpec
from zrspace.zr_space import ZarSubset

base = BasePair("q-z")
p = Place.prime

# %% A fractional ideal is stored by its exponents; (6, 4/3) = (2/3).
I = FracIdeal.parse(base, "ideal:[6, 4/3]")
print(I, I.to_json())

# wedge over {2, 3} only remembers the 2- and 3-adic bounds.
s = StarSpec(ZarSubset.finite([p(2), p(3)]))
print("wedge_{2,3}(6Z) =", st.apply_wedge(s, FracIdeal.parse(base, "ideal:[6]")))
print("b(4/3 Z)        =", st.b_apply(FracIdeal.parse(base, "ideal:[4/3]")))

# %% Two families define the same finite-type operation iff their hat closures agree.
pairs = [
    (ZarSubset.all_places(), ZarSubset.whole()),
    (ZarSubset.finite([p(2)]), ZarSubset.finite([p(3)])),
    (ZarSubset.cofinite([p(7)]), ZarSubset.cofinite([p(7)], generic=True)),
]
for Y1, Y2 in pairs:
    eq = st.wedge_ft_equal(Y1, Y2)
    wit = None if eq else st.distinguishing_ideal(base, Y1, Y2)
    print(f"{str(Y1):>28} vs {str(Y2):<28} equal={eq} witness={wit}")

# %% e.a.b.: (FG)* <= (FH)* forces G* <= H*.
F, G, H = (FracIdeal.parse(base, t) for t in ("ideal:[2]", "ideal:[3]", "ideal:[6]"))
print("e.a.b. on (2, 3, 6):", st.eab_check(StarSpec(ZarSubset.all_places()), [(F, G, H)]).passed)

# %% Z is vacant: every representation misses no place, so its hat closure is everything.
print(st.is_vacant_base(base, [p(2), p(3), p(5)]).to_dict())
print("all places:", st.vacancy_check(ZarSubset.all_places()).witness)
print("{2}:       ", st.vacancy_check(ZarSubset.finite([p(2)])).witness)
