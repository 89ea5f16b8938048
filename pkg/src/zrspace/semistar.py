"""The semistar operations wedge_Y on a PID A (Z, Q[x] or F_p[x]).

A nonzero finitely generated A-submodule of K is principal, so it is pinned
down by its exponent vector ``p -> min over generators of v_p``.  The module
E^{wedge_Y} = cap_{V in Y} EV is

    {x : v_p(x) >= e_p for every place p of Y}

which is what :class:`GenModule` stores.  The generic point K of Y imposes no
condition because EK = K.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, ParseError, ZrError
from .field_arith import GENERIC, BasePair, Place, RatFunc, support, val
from .polys import Poly
from .reports import Report
from .zr_space import (
    ZarSubset,
    cl_cons,
    gen_closure,
    intersection_ring,
    is_proconstructible,
    is_representation,
    ring_member,
)


def _require_pid(base: BasePair) -> None:
    if not base.is_pid:
        raise DomainError(f"{base}: A is not a PID with quotient field K; ideals are not modelled")


def _element_with(base: BasePair, exps: dict[Place, int]):
    """An element whose exponent vector is ``exps`` (zero elsewhere)."""
    if base.kind == "q-z":
        out = Fraction(1)
        for q, e in exps.items():
            out *= Fraction(q.value) ** e
        return out
    num = den = Poly.const(1, base.p)
    for q, e in exps.items():
        if e > 0:
            num = num * q.value**e
        elif e < 0:
            den = den * q.value ** (-e)
    return RatFunc(num, den)


def _clean(exps: dict) -> tuple[tuple[Place, int], ...]:
    return tuple(sorted((q, e) for q, e in exps.items() if e != 0))


@dataclass(frozen=True)
class FracIdeal:
    """Nonzero finitely generated fractional ideal of A."""

    base: BasePair
    generators: tuple
    exponents: tuple[tuple[Place, int], ...]

    @classmethod
    def of(cls, base: BasePair, generators: Iterable) -> FracIdeal:
        _require_pid(base)
        gens = tuple(g for g in generators if g)
        if not gens:
            raise DomainError("a fractional ideal needs a nonzero generator")
        places = set().union(*(support(base, g) for g in gens))
        exps = {q: min(val(q, g) for g in gens) for q in places}
        return cls(base, gens, _clean(exps))

    @classmethod
    def principal(cls, base: BasePair, x) -> FracIdeal:
        return cls.of(base, [x])

    @classmethod
    def unit(cls, base: BasePair) -> FracIdeal:
        return cls.of(base, [base.one()])

    @classmethod
    def from_exponents(cls, base: BasePair, exps: dict[Place, int]) -> FracIdeal:
        _require_pid(base)
        for q in exps:
            base.check_place(q)
        return cls(base, (_element_with(base, exps),), _clean(exps))

    @classmethod
    def parse(cls, base: BasePair, text: str) -> FracIdeal:
        """``"ideal:[6, 4/3]"`` (the ``ideal:`` prefix is optional)."""
        body = text.strip()
        if body.startswith("ideal:"):
            body = body[len("ideal:"):].strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ParseError(f"bad ideal syntax {text!r}")
        items = [s for s in body[1:-1].split(",") if s.strip()]
        return cls.of(base, [base.element(s) for s in items])

    def exponent(self, place: Place) -> int:
        return dict(self.exponents).get(place, 0)

    def generator(self):
        return _element_with(self.base, dict(self.exponents))

    def __mul__(self, other: FracIdeal) -> FracIdeal:
        exps = dict(self.exponents)
        for q, e in other.exponents:
            exps[q] = exps.get(q, 0) + e
        return FracIdeal.from_exponents(self.base, exps)

    def scale(self, x) -> FracIdeal:
        return self * FracIdeal.principal(self.base, x)

    def __le__(self, other: FracIdeal) -> bool:
        """Containment: every exponent of ``other`` is at most ours."""
        a, b = dict(self.exponents), dict(other.exponents)
        return all(b.get(q, 0) <= a.get(q, 0) for q in set(a) | set(b))

    def __eq__(self, other):
        return isinstance(other, FracIdeal) and (self.base, self.exponents) == (
            other.base,
            other.exponents,
        )

    def __hash__(self):
        return hash((self.base, self.exponents))

    def as_module(self) -> GenModule:
        return GenModule(dict(self.exponents), ZarSubset.all_places())

    def __str__(self):
        return f"({self.generator()})"

    def to_json(self) -> dict:
        return {
            "generators": [str(g) for g in self.generators],
            "exponents": {str(q): e for q, e in self.exponents},
        }


@dataclass(frozen=True)
class GenModule:
    """{x in K : v_p(x) >= e_p for p in ``constraint``}, with e_p = 0 off ``exceptions``."""

    exceptions: tuple[tuple[Place, int], ...]
    constraint: ZarSubset

    def __init__(self, exceptions, constraint: ZarSubset):
        constraint = constraint.place_part()
        exc = dict(exceptions)
        object.__setattr__(
            self, "exceptions", _clean({q: e for q, e in exc.items() if q in constraint})
        )
        object.__setattr__(self, "constraint", constraint)

    def exponent(self, place: Place) -> int | None:
        """Lower bound at ``place``; ``None`` when unconstrained."""
        if place not in self.constraint:
            return None
        return dict(self.exceptions).get(place, 0)

    def contains_element(self, base: BasePair, x) -> bool:
        if not x:
            return True
        exc = dict(self.exceptions)
        places = set(exc) | set(support(base, x))
        return all(val(q, x) >= exc.get(q, 0) for q in places if q in self.constraint)

    def scale(self, base: BasePair, x) -> GenModule:
        """x * M."""
        if not x:
            raise DomainError("scaling by zero leaves the nonzero modules")
        exc = dict(self.exceptions)
        for q in support(base, x):
            exc[q] = exc.get(q, 0) + val(q, x)
        return GenModule(exc, self.constraint)

    def is_whole_field(self) -> bool:
        return self.constraint.is_empty()

    def to_json(self) -> dict:
        return {
            "constraint": self.constraint.to_json(),
            "exceptions": {str(q): e for q, e in self.exceptions},
        }

    def __str__(self):
        if self.is_whole_field():
            return "K"
        exc = ", ".join(f"{q}>={e}" for q, e in self.exceptions)
        return f"{{v >= 0 on {self.constraint}; {exc}}}" if exc else f"{{v >= 0 on {self.constraint}}}"


@dataclass(frozen=True)
class StarSpec:
    """The semistar operation wedge_Y for a nonempty Y."""

    Y: ZarSubset

    def __post_init__(self):
        if self.Y.is_empty():
            raise DomainError("wedge over the empty family is not a semistar operation")


def apply_wedge(s: StarSpec, E: FracIdeal | GenModule) -> GenModule:
    """E -> cap of EV over V in Y; EV_p keeps only the bound at p (or is K)."""
    if isinstance(E, FracIdeal):
        E = E.as_module()
    return GenModule(E.exceptions, E.constraint & s.Y.place_part())


def gen_contains(M1: GenModule, M2: GenModule) -> bool:
    """Whether M2 is contained in M1.

    Off its constraint set M2 reaches arbitrarily negative valuations (approximation
    in a PID), so M1 may only constrain places M2 constrains, and no more tightly.
    """
    if not M1.constraint <= M2.constraint:
        return False
    e1, e2 = dict(M1.exceptions), dict(M2.exceptions)
    return all(
        e1.get(q, 0) <= e2.get(q, 0) for q in set(e1) | set(e2) if q in M1.constraint
    )


def modules_equal(M1: GenModule, M2: GenModule) -> bool:
    return M1 == M2


def hat_closure(Y: ZarSubset) -> ZarSubset:
    """Cl_cons(Y) closed under generizations."""
    if Y.is_empty():
        raise DomainError("hat closure of the empty set is not used")
    return gen_closure(cl_cons(Y))


def wedge_ft_equal(Y1: ZarSubset, Y2: ZarSubset) -> bool:
    """Whether the finite-type parts of wedge_Y1 and wedge_Y2 agree."""
    return hat_closure(Y1) == hat_closure(Y2)


def distinguishing_ideal(base: BasePair, Y1: ZarSubset, Y2: ZarSubset) -> FracIdeal | None:
    """(1/p)A for a place p in exactly one of the hat closures; ``None`` if they agree."""
    h1, h2 = hat_closure(Y1).place_part(), hat_closure(Y2).place_part()
    diff = (h1 - h2) | (h2 - h1)
    if diff.is_empty():
        return None
    if diff.is_finite():
        q = diff.places[0]
    else:
        q = next(pl for pl in base.iter_places() if pl in diff)
    return FracIdeal.from_exponents(base, {q: -1})


def b_apply(I: FracIdeal) -> GenModule:
    """The b-operation wedge_{Zar(K|A)}."""
    return apply_wedge(StarSpec(ZarSubset.whole()), I)


def eab_check(s: StarSpec, triples: Iterable[tuple[FracIdeal, FracIdeal, FracIdeal]]) -> Report:
    """(FG)* <= (FH)* must force G* <= H*."""
    rep = Report("eab", True)
    for F, G, H in triples:
        rep.checked += 1
        if gen_contains(apply_wedge(s, F * H), apply_wedge(s, F * G)):
            if not gen_contains(apply_wedge(s, H), apply_wedge(s, G)):
                rep.fail(f"F={F}, G={G}, H={H}")
    return rep


def extend_to(E: FracIdeal, V) -> GenModule:
    """EV for a point V of Zar(K|A)."""
    if V is GENERIC:
        return GenModule({}, ZarSubset.empty())
    return GenModule({V: E.exponent(V)}, ZarSubset.finite([V]))


def is_star_valuation_overring(s: StarSpec, V, ideals: Iterable[FracIdeal]) -> bool:
    """F* <= FV on every sampled F."""
    return all(gen_contains(extend_to(F, V), apply_wedge(s, F)) for F in ideals)


def star_overring_witness(s: StarSpec, base: BasePair, V) -> FracIdeal | None:
    """An F with F* not inside FV, for a place V outside hat(Y)."""
    if V is GENERIC or V in hat_closure(s.Y):
        return None
    F = FracIdeal.from_exponents(base, {V: -1})
    return None if gen_contains(extend_to(F, V), apply_wedge(s, F)) else F


def star_valuation_overrings(s: StarSpec) -> ZarSubset:
    return hat_closure(s.Y)


def complete_witness(Y: ZarSubset) -> ZarSubset:
    """A proconstructible, generization-closed set inducing (wedge_Y)_f."""
    Yh = hat_closure(Y)
    if not (is_proconstructible(Yh) and gen_closure(Yh) == Yh and wedge_ft_equal(Y, Yh)):
        raise ZrError(f"hat closure {Yh} of {Y} is not a completeness witness")
    return Yh


def vacancy_check(Y: ZarSubset) -> Report:
    """For a representation Y of A, hat(Y) must be the whole space."""
    rep = Report("vacancy", True)
    if Y.is_empty() or not is_representation(Y):
        rep.witness = "vacuous: not a representation of A"
        return rep
    rep.checked = 1
    Yh = hat_closure(Y)
    rep.witness = f"hat closure is {Yh}"
    if Yh != ZarSubset.whole():
        rep.fail(f"{Y} represents A but its hat closure is {Yh}")
    return rep


def is_vacant_base(base: BasePair, perturb: Iterable[Place] = ()) -> Report:
    """A = Z or k[x] is vacant: a representation must contain every place p, since
    dropping p admits 1/p; so every hat closure is the whole space."""
    _require_pid(base)
    rep = Report("vacant-base", True, witness="representations contain every place")
    for Y in (ZarSubset.all_places(), ZarSubset.whole()):
        sub = vacancy_check(Y)
        rep.checked += 1
        if not sub.passed or not sub.checked:
            rep.fail(f"{Y}: {sub.violations or 'not recognised as a representation'}")
    for q in perturb:
        # dropping q lets 1/q in, so the perturbed set no longer represents A
        Y = ZarSubset.cofinite([q])
        inv_q = _element_with(base, {q: -1})
        rep.checked += 1
        if not ring_member(base, intersection_ring(Y), inv_q) or is_representation(Y):
            rep.fail(f"dropping {q} should admit 1/{q.value}")
    return rep

