"""Trivial extensions V(T) and the K-function rings Kr(Y) = cap_{V in Y} V(T).

Rings are handled through their membership predicates.  A rational function
h = f/g lies in V_p(T) iff v*_p(f) >= v*_p(g), where v* is the Gauss
valuation; only places dividing some coefficient of f or g can break this,
so membership in Kr(Y) is a finite check.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from functools import reduce
from math import lcm

from .errors import DomainError
from .field_arith import GENERIC, BasePair, Place, PolyT, RatFunT, gauss_val, support, val
from .polys import Poly, poly_gcd
from .reports import Report
from .semistar import FracIdeal, StarSpec, apply_wedge, gen_contains
from .zr_space import ZarSubset, b_F


@dataclass(frozen=True)
class KrSpec:
    base: BasePair
    Y: ZarSubset

    def __post_init__(self):
        if self.Y.is_empty():
            raise DomainError("Kr(Y) needs a nonempty Y")


def in_trivial_extension(place, h: RatFunT) -> bool:
    """h in V(T) for the valuation ring V at ``place`` (always true for V = K)."""
    if h.is_zero() or place is GENERIC:
        return True
    return gauss_val(place, h.f) >= gauss_val(place, h.g)


def coefficient_support(base: BasePair, h: RatFunT) -> set[Place]:
    out: set[Place] = set()
    for c in h.f.nonzero_coeffs() + h.g.nonzero_coeffs():
        out |= support(base, c)
    return out


def kr_witness(spec: KrSpec, h: RatFunT) -> Place | None:
    """The first place of Y at which h fails, or ``None`` if h is in Kr(Y)."""
    if h.is_zero():
        return None
    for q in sorted(coefficient_support(spec.base, h)):
        if q in spec.Y and not in_trivial_extension(q, h):
            return q
    return None


def kr_member(spec: KrSpec, h: RatFunT) -> bool:
    return kr_witness(spec, h) is None


def _t_elements(base: BasePair):
    one, zero = base.one(), base.zero()
    T = RatFunT(PolyT([zero, one]), PolyT([one]))
    return T, RatFunT(PolyT([one]), PolyT([zero, one]))


def kfr_axiom_check(spec: KrSpec, samples: Iterable[PolyT]) -> Report:
    """T, 1/T and f(0)/f lie in Kr(Y) for every sample f with f(0) != 0."""
    rep = Report("k-function-ring-axioms", True)
    for name, h in zip(("T", "1/T"), _t_elements(spec.base)):
        rep.checked += 1
        if not kr_member(spec, h):
            rep.fail(f"{name} not in Kr(Y)")
    for f in samples:
        if f.is_zero():
            raise DomainError("samples must be nonzero")
        if not f.coeffs[0]:
            continue
        rep.checked += 1
        if not kr_member(spec, RatFunT(PolyT([f.coeffs[0]]), f)):
            rep.fail(f"f(0)/f for f = {f}")
    return rep


def content_formula_check(spec: KrSpec, f: PolyT, places: Iterable[Place] | None = None) -> Report:
    """(f_0, ..., f_r) Kr(Y) = f Kr(Y): each f_i/f is in Kr(Y), and at each tested place
    f/c is in V(T) for a coefficient c of least valuation."""
    if f.is_zero():
        raise DomainError("content of the zero polynomial")
    rep = Report("content-formula", True)
    one = spec.base.one()
    for c in f.nonzero_coeffs():
        rep.checked += 1
        if not kr_member(spec, RatFunT(PolyT([c]), f)):
            rep.fail(f"coefficient {c} / f not in Kr(Y)")
    if places is None:
        places = [q for q in coefficient_support(spec.base, RatFunT(f, PolyT([one]))) if q in spec.Y]
    for q in places:
        c = min(f.nonzero_coeffs(), key=lambda a: val(q, a))
        rep.checked += 1
        if not in_trivial_extension(q, RatFunT(f, PolyT([c]))):
            rep.fail(f"f / {c} not in V(T) at {q}")
    return rep


def phi_pullback(h: RatFunT) -> list[frozenset]:
    """The sets F_ij with phi(B_h) = union of B_{F_ij} over Zar_0(K(T)).

    F_ij = {a_i/b_j} u {a_l/a_i} u {b_m/b_j} for a_i, b_j nonzero.  Ratios that
    vanish are dropped: 0 lies in every valuation ring.
    """
    a, b = h.f.coeffs, h.g.coeffs
    if h.f.is_zero() or h.g.is_zero():
        raise DomainError("phi_pullback needs a nonzero numerator and denominator")
    out = []
    for ai in a:
        if not ai:
            continue
        for bj in b:
            if not bj:
                continue
            F = {ai / bj}
            F.update(al / ai for al in a if al)
            F.update(bm / bj for bm in b if bm)
            out.append(frozenset(F))
    return out


def pullback_contains(base: BasePair, h: RatFunT, place) -> bool:
    """Whether ``place`` lies in the union of the B_{F_ij}."""
    return any(place in b_F(base, F) for F in phi_pullback(h))


def clear_denominators(base: BasePair, h: RatFunT) -> tuple[PolyT, PolyT]:
    """f, g in A[T] with h = f/g."""
    if not base.is_pid:
        raise DomainError(f"{base}: elements of K(T) need not be quotients over A[T]")
    coeffs = h.f.nonzero_coeffs() + h.g.nonzero_coeffs()
    if base.kind == "q-z":
        d = base.const(reduce(lcm, (c.denominator for c in coeffs), 1))
    else:
        den = reduce(lambda u, v: u * v // poly_gcd(u, v), (c.den for c in coeffs), Poly.const(1, base.p))
        d = base.const(1) * den
    return h.f.scale(d), h.g.scale(d)


def content_ideal(base: BasePair, f: PolyT) -> FracIdeal:
    return FracIdeal.of(base, f.nonzero_coeffs())


def kr_star_member(base: BasePair, Y: ZarSubset, h) -> bool:
    """Membership in Kr(A, *) for * = wedge_Y: c(f)^* inside c(g)^*.

    ``h`` is either a pair ``(f, g)`` of polynomials over A, or a RatFunT whose
    denominators are cleared first.
    """
    if isinstance(h, RatFunT):
        f, g = clear_denominators(base, h)
    else:
        f, g = h
        coeffs = f.nonzero_coeffs() + g.nonzero_coeffs()
        if any(not base.in_base_ring(c) for c in coeffs):
            raise DomainError("kr_star_member needs f and g with coefficients in A")
    if g.is_zero():
        raise DomainError("zero denominator")
    if f.is_zero():
        return True
    s = StarSpec(Y)
    return gen_contains(apply_wedge(s, content_ideal(base, g)), apply_wedge(s, content_ideal(base, f)))
