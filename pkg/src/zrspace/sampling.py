"""Seeded random generators for the randomized checks.

Subsets and ideals draw their places from a small pool of the first places of
the base pair, so that random objects actually interact.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import islice

import sympy

from .field_arith import BasePair, Place, PolyT, RatFunc, RatFunT
from .finite_spectral import FinitePoset
from .polys import Poly, is_irreducible
from .semistar import FracIdeal
from .zr_space import ZarSubset

DEFAULT_SEED = 20130101
BASES = (
    BasePair("q-z"),
    BasePair("qx-qx"),
    BasePair("fpx-fpx", 2),
    BasePair("fpx-fp", 2),
)
PID_BASES = tuple(b for b in BASES if b.is_pid)

_SMALL_PRIMES = list(sympy.primerange(2, 200))


def place_pool(base: BasePair, n: int = 8) -> list[Place]:
    return list(islice(base.iter_places(), n))


def random_place(base: BasePair, rng: random.Random) -> Place:
    if base.kind == "q-z":
        return Place.prime(rng.choice(_SMALL_PRIMES))
    if base.has_infinity and rng.random() < 0.1:
        return Place.infinity()
    while True:
        d = rng.randint(1, 3)
        if base.p:
            tail = [rng.randrange(base.p) for _ in range(d)]
        else:
            tail = [rng.randint(-6, 6) for _ in range(d)]
        f = Poly(tail + [1], base.p)
        if is_irreducible(f):
            return Place.irreducible(f)


def _random_poly(base: BasePair, rng: random.Random, deg: int) -> Poly:
    while True:
        if base.p:
            cs = [rng.randrange(base.p) for _ in range(deg + 1)]
        else:
            cs = [rng.randint(-9, 9) for _ in range(deg + 1)]
        f = Poly(cs, base.p)
        if not f.is_zero():
            return f


def random_element(base: BasePair, rng: random.Random, pool=None, height: int = 1000):
    """A nonzero element of K; half of the time a product of pool places."""
    if pool and rng.random() < 0.5:
        x = base.one()
        for q in rng.sample(pool, min(len(pool), rng.randint(1, 3))):
            if q.kind == "inf":
                continue
            e = rng.choice([-2, -1, 1, 2])
            x = x * (Fraction(q.value) ** e if q.kind == "p" else RatFunc(q.value) ** e)
        return x * random_unit_constant(base, rng)
    if base.kind == "q-z":
        return Fraction(rng.choice([-1, 1]) * rng.randint(1, height), rng.randint(1, height))
    return RatFunc(_random_poly(base, rng, rng.randint(0, 2)), _random_poly(base, rng, rng.randint(0, 2)))


def random_unit_constant(base: BasePair, rng: random.Random):
    if base.p:
        return base.const(rng.randint(1, base.p - 1))
    return base.const(rng.choice([1, -1, 2, Fraction(1, 3)])) if base.kind != "q-z" else Fraction(1)


def random_poly_t(base: BasePair, rng: random.Random, max_deg: int = 4, pool=None, height: int = 1000) -> PolyT:
    while True:
        d = rng.randint(0, max_deg)
        cs = [
            random_element(base, rng, pool, height) if rng.random() < 0.8 else base.zero()
            for _ in range(d + 1)
        ]
        f = PolyT(cs)
        if not f.is_zero():
            return f


def random_ratfun_t(base: BasePair, rng: random.Random, max_deg: int = 4, pool=None, height: int = 1000) -> RatFunT:
    return RatFunT(
        random_poly_t(base, rng, max_deg, pool, height), random_poly_t(base, rng, max_deg, pool, height)
    )


def random_a_poly(base: BasePair, rng: random.Random, max_deg: int = 3, pool=None) -> PolyT:
    """A nonzero polynomial in T with coefficients in A (PID bases)."""
    while True:
        cs = []
        for _ in range(rng.randint(0, max_deg) + 1):
            if rng.random() < 0.2:
                cs.append(base.zero())
                continue
            x = random_element(base, rng, pool, height=50)
            if base.kind == "q-z":
                x = Fraction(x.numerator)
            else:
                x = RatFunc(x.num)
            cs.append(x)
        f = PolyT(cs)
        if not f.is_zero():
            return f


def random_subset(
    base: BasePair, rng: random.Random, pool=None, infinite: bool | None = None, generic: bool | None = None
) -> ZarSubset:
    pool = pool or place_pool(base)
    if infinite is None:
        infinite = rng.random() < 0.5
    if generic is None:
        generic = rng.random() < 0.5
    places = rng.sample(pool, rng.randint(0, min(4, len(pool))))
    mode = "cofinite" if infinite else "finite"
    return ZarSubset(mode, tuple(places), generic)


def random_nonempty_subset(base: BasePair, rng: random.Random, pool=None, **kw) -> ZarSubset:
    while True:
        Y = random_subset(base, rng, pool, **kw)
        if not Y.is_empty():
            return Y


def random_ideal(base: BasePair, rng: random.Random, pool=None) -> FracIdeal:
    pool = [q for q in (pool or place_pool(base)) if q.kind != "inf"]
    if rng.random() < 0.7:
        exps = {q: rng.randint(-3, 3) for q in rng.sample(pool, rng.randint(0, min(3, len(pool))))}
        return FracIdeal.from_exponents(base, exps)
    gens = [random_element(base, rng, pool, height=60) for _ in range(rng.randint(1, 3))]
    return FracIdeal.of(base, gens)


def random_poset(rng: random.Random, max_size: int = 8) -> FinitePoset:
    n = rng.randint(1, max_size)
    labels = [f"e{i}" for i in range(n)]
    rng.shuffle(labels)
    density = rng.random()
    pairs = [(labels[i], labels[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < density]
    return FinitePoset(labels, pairs)
