"""Closures and ultrafilter limits, first on a finite poset and then on Zar(Q|Z).

Run with ``python demos/01_closures_and_limits.py``.
"""

from fractions import Fraction

from zrspace import finite_spectral as fs
from zrspace import zr_space as zr
from zrspace.field_arith import BasePair, Place
from zrspace.zr_space import FREE, Principal, ZarSubset

# %% A three-point spectral space: a is the generic point, b and c are closed.
P = fs.FinitePoset(["a", "b", "c"], [("a", "b"), ("a", "c")])
for Y in ({"a"}, {"b"}, {"b", "c"}):
    print(f"Y={sorted(Y)}  zar={sorted(fs.cl_zar(P, Y))}  inv={sorted(fs.cl_inv(P, Y))}  cons={sorted(fs.cl_cons(P, Y))}")

# The inverse topology flips the order.
print("dual order:", fs.dual(P).to_json()["leq"])

# %% Spec(Z/360): every ultrafilter on a finite Y is principal, and its prime is the center.
R, _ = fs.spec_zn(360)
print("primes of Z/360:", R.primes)
for y in R.primes:
    print(f"  centered at {y}: P_U = ({fs.ultrafilter_prime(R, set(R.primes), y)})")

# %% Zar(Q|Z): the generic point Q and one DVR Z_(p) per prime.
base = BasePair("q-z")
everything = ZarSubset.all_places()
print("first ultrafilter classes on all places:",
      [str(u) if u is not FREE else "free" for u in zr.ultrafilter_classes(everything, base).take(4)])
print("free class converges to:", zr.limit_point(everything, FREE))
print("principal class at 5 converges to:", zr.limit_point(everything, Principal(Place.prime(5))))

# The free class is why an infinite set of places picks up Q in the constructible closure.
print("Cl_cons(all places) =", zr.cl_cons(everything))
print("Cl_cons({2, 7})      =", zr.cl_cons(ZarSubset.finite([Place.prime(2), Place.prime(7)])))

# Basic opens: B_x collects the valuation rings containing x.
for x in (Fraction(3, 2), Fraction(1, 6), Fraction(10)):
    print(f"B_{x} = {zr.b_x(base, x)}")

# %% Adding Q does not change the intersection ring, because the closures agree.
R1, R2 = zr.intersection_ring(everything), zr.intersection_ring(zr.cl_cons(everything))
for x in (Fraction(7), Fraction(7, 2)):
    print(f"{x}: in ring over all places? {zr.ring_member(base, R1, x)}; over its closure? {zr.ring_member(base, R2, x)}")
