"""The Zariski-Riemann space Zar(K|A) of a one-dimensional base pair.

Points are the generic point K and one discrete valuation ring per place.
Subsets are tracked in the finite/cofinite place algebra plus a flag for the
generic point; every basic open B_F is place-cofinite and contains K, so the
trace of the constructible algebra lives inside this representation and all
closures are decidable.

Specialization order: V <= W iff W is in the Zariski closure of {V} iff W is
contained in V.  Here K <= every place and distinct places are incomparable.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from itertools import islice

from .errors import DomainError, ParseError, PreconditionError
from .field_arith import GENERIC, BasePair, Place, SpacePoint, poles, support, val
from .reports import Report

# ---------------------------------------------------------------------------
# subsets
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ZarSubset:
    """``mode='finite'``: the listed places; ``mode='cofinite'``: all places but the listed ones.

    The generic point K belongs to the subset iff ``generic``.
    """

    mode: str
    places: tuple[Place, ...] = ()
    generic: bool = False

    def __post_init__(self):
        if self.mode not in ("finite", "cofinite"):
            raise DomainError(f"mode must be 'finite' or 'cofinite', got {self.mode!r}")
        object.__setattr__(self, "places", tuple(sorted(set(self.places))))
        object.__setattr__(self, "generic", bool(self.generic))

    # -- constructors ---------------------------------------------------
    @classmethod
    def finite(cls, places: Iterable[Place] = (), generic: bool = False) -> ZarSubset:
        return cls("finite", tuple(places), generic)

    @classmethod
    def cofinite(cls, excluded: Iterable[Place] = (), generic: bool = False) -> ZarSubset:
        return cls("cofinite", tuple(excluded), generic)

    @classmethod
    def empty(cls) -> ZarSubset:
        return cls.finite()

    @classmethod
    def whole(cls) -> ZarSubset:
        return cls.cofinite(generic=True)

    @classmethod
    def all_places(cls) -> ZarSubset:
        return cls.cofinite()

    @classmethod
    def generic_point(cls) -> ZarSubset:
        return cls.finite(generic=True)

    @classmethod
    def of_points(cls, points: Iterable[SpacePoint]) -> ZarSubset:
        pts = list(points)
        return cls.finite([q for q in pts if q is not GENERIC], GENERIC in pts)

    # -- queries ----------------------------------------------------------
    def __contains__(self, pt) -> bool:
        if pt is GENERIC:
            return self.generic
        return (pt in self.places) == (self.mode == "finite")

    @property
    def has_infinite_places(self) -> bool:
        return self.mode == "cofinite"

    def is_finite(self) -> bool:
        return self.mode == "finite"

    def is_empty(self) -> bool:
        return self.mode == "finite" and not self.places and not self.generic

    def place_part(self) -> ZarSubset:
        return ZarSubset(self.mode, self.places, False)

    def with_generic(self, flag: bool = True) -> ZarSubset:
        return ZarSubset(self.mode, self.places, flag)

    def points(self) -> list[SpacePoint]:
        """Explicit point list (finite subsets only)."""
        if self.mode != "finite":
            raise DomainError("a cofinite subset has infinitely many points")
        return list(self.places) + ([GENERIC] if self.generic else [])

    # -- Boolean algebra --------------------------------------------------
    def __or__(self, other: ZarSubset) -> ZarSubset:
        a, b = set(self.places), set(other.places)
        g = self.generic or other.generic
        if self.mode == other.mode == "finite":
            return ZarSubset("finite", tuple(a | b), g)
        if self.mode == other.mode == "cofinite":
            return ZarSubset("cofinite", tuple(a & b), g)
        fin, cof = (a, b) if self.mode == "finite" else (b, a)
        return ZarSubset("cofinite", tuple(cof - fin), g)

    def __and__(self, other: ZarSubset) -> ZarSubset:
        a, b = set(self.places), set(other.places)
        g = self.generic and other.generic
        if self.mode == other.mode == "finite":
            return ZarSubset("finite", tuple(a & b), g)
        if self.mode == other.mode == "cofinite":
            return ZarSubset("cofinite", tuple(a | b), g)
        fin, cof = (a, b) if self.mode == "finite" else (b, a)
        return ZarSubset("finite", tuple(fin - cof), g)

    def __invert__(self) -> ZarSubset:
        mode = "cofinite" if self.mode == "finite" else "finite"
        return ZarSubset(mode, self.places, not self.generic)

    def __sub__(self, other: ZarSubset) -> ZarSubset:
        return self & ~other

    def __le__(self, other: ZarSubset) -> bool:
        return (self - other).is_empty()

    def __ge__(self, other: ZarSubset) -> bool:
        return other <= self

    # -- I/O ----------------------------------------------------------------
    def to_json(self) -> dict:
        return {"mode": self.mode, "places": [str(q) for q in self.places], "generic": self.generic}

    @classmethod
    def from_json(cls, base: BasePair, obj) -> ZarSubset:
        if not isinstance(obj, dict) or set(obj) - {"mode", "places", "generic"}:
            raise ParseError(f"bad subset object {obj!r}")
        try:
            places = [base.place(s) for s in obj.get("places", [])]
            return cls(obj["mode"], tuple(places), bool(obj.get("generic", False)))
        except KeyError as exc:
            raise ParseError("subset object needs a 'mode'") from exc

    def __str__(self):
        ps = ", ".join(str(q) for q in self.places)
        if self.mode == "finite":
            core = f"{{{ps}}}"
        else:
            core = f"all places except {{{ps}}}" if ps else "all places"
        return core + (" + K" if self.generic else "")


# ---------------------------------------------------------------------------
# basic opens
# ---------------------------------------------------------------------------


def b_x(base: BasePair, x) -> ZarSubset:
    """B_x = {V : x in V}, for x != 0."""
    if not x:
        raise DomainError("B_0 is not used; pass nonzero elements")
    return ZarSubset.cofinite(poles(base, x), generic=True)


def b_F(base: BasePair, F: Iterable) -> ZarSubset:
    """B_F = Zar(K|A[F]) = intersection of B_x over x in F."""
    out = ZarSubset.whole()
    for x in F:
        out = out & b_x(base, x)
    return out


# ---------------------------------------------------------------------------
# order closures
# ---------------------------------------------------------------------------


def sp_closure(Y: ZarSubset) -> ZarSubset:
    """Closure under specializations (every place specializes K)."""
    return ZarSubset.whole() if Y.generic else Y


def gen_closure(Y: ZarSubset) -> ZarSubset:
    """Closure under generizations, Y-up: every nonempty Y acquires K."""
    return Y if Y.is_empty() else Y.with_generic(True)


# ---------------------------------------------------------------------------
# ultrafilters
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Principal:
    point: SpacePoint

    def __str__(self):
        return f"Principal({self.point})"


class _FreeClass:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "FreeClass"


FREE = _FreeClass()
UltrafilterClass = Principal | _FreeClass


class UltrafilterClasses:
    """Trace classes of ultrafilters on Y over the finite/cofinite algebra.

    All free ultrafilters share one trace, so the family is the principal
    classes plus, when Y has infinitely many places, the single ``FREE``.
    Iteration over a cofinite Y is lazy and needs ``base``.
    """

    def __init__(self, Y: ZarSubset, base: BasePair | None = None):
        self.Y = Y
        self.base = base
        self.free = Y.has_infinite_places

    def __contains__(self, u) -> bool:
        if u is FREE:
            return self.free
        return isinstance(u, Principal) and u.point in self.Y

    def __iter__(self):
        if self.Y.generic:
            yield Principal(GENERIC)
        if self.Y.mode == "finite":
            yield from (Principal(q) for q in self.Y.places)
            return
        yield FREE
        if self.base is None:
            raise DomainError("enumerating principal classes of a cofinite set needs a base pair")
        for q in self.base.iter_places():
            if q in self.Y:
                yield Principal(q)

    def take(self, n: int) -> list:
        return list(islice(self, n))


def ultrafilter_classes(Y: ZarSubset, base: BasePair | None = None) -> UltrafilterClasses:
    if Y.is_empty():
        raise DomainError("there are no ultrafilters on the empty set")
    return UltrafilterClasses(Y, base)


def limit_point(Y: ZarSubset, u) -> SpacePoint:
    """Ultrafilter limit point A_U = {x : B_x meets Y in a U-large set}.

    For a free class every B_x cuts Y in a cofinite subset, so A_U = K.
    """
    if u not in ultrafilter_classes(Y):
        raise DomainError(f"{u} is not an ultrafilter class on {Y}")
    if u is FREE:
        return GENERIC
    return u.point


# ---------------------------------------------------------------------------
# the three topologies
# ---------------------------------------------------------------------------


def cl_cons(Y: ZarSubset) -> ZarSubset:
    if Y.is_empty():
        return Y
    classes = ultrafilter_classes(Y)
    limits = ZarSubset.of_points([limit_point(Y, FREE)]) if classes.free else ZarSubset.empty()
    # principal classes contribute exactly the points of Y
    return Y | limits


def cl_zar(Y: ZarSubset) -> ZarSubset:
    return sp_closure(cl_cons(Y))


def cl_inv(Y: ZarSubset) -> ZarSubset:
    return gen_closure(cl_cons(Y))


def is_proconstructible(Y: ZarSubset) -> bool:
    return cl_cons(Y) == Y


def is_quasicompact_zar(Y: ZarSubset) -> bool:
    """Infinitely many places without K: the cover by B_x, x ranging over
    inverses of the places of Y, has no finite subcover."""
    return Y.is_finite() or Y.generic


# ---------------------------------------------------------------------------
# intersections of valuation rings
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SemilocalRingRep:
    """The ring {x : v_p(x) >= 0 for every place p in ``constraint``}."""

    constraint: ZarSubset

    def __post_init__(self):
        if self.constraint.generic:
            raise DomainError("a ring constraint set consists of places only")

    def __str__(self):
        c = self.constraint
        if c.is_empty():
            return "K"
        if c == ZarSubset.all_places():
            return "A"
        return f"intersection over {c}"


def intersection_ring(Y: ZarSubset) -> SemilocalRingRep:
    if Y.is_empty():
        raise DomainError("the intersection over the empty family is not defined")
    return SemilocalRingRep(Y.place_part())


def ring_member(base: BasePair, R: SemilocalRingRep, x) -> bool:
    if not x:
        return True
    return all(val(q, x) >= 0 for q in support(base, x) if q in R.constraint)


def noninvertible_places(base: BasePair, x, Y: ZarSubset) -> list[Place]:
    """Places of Y where x is a nonunit: always finite, the local-finiteness witness."""
    return sorted(q for q in support(base, x) if q in Y)


def is_locally_finite(base: BasePair, Y: ZarSubset, samples: Iterable = ()) -> Report:
    """Always true here: a nonzero x is a nonunit only at the finitely many places of its support."""
    rep = Report("locally-finite", True, witness="every nonzero x has finite support")
    for x in samples:
        if not x:
            continue
        rep.checked += 1
        bad = noninvertible_places(base, x, Y)
        if not set(bad) <= support(base, x):
            rep.fail(f"{x}: {bad}")
    return rep


def center(base: BasePair, pt: SpacePoint) -> str:
    """The prime M_V cap A of A."""
    if pt is GENERIC or not base.is_pid:
        return "(0)"
    return f"({pt.value})"


def is_representation(Y: ZarSubset) -> bool:
    """Whether the intersection of Y is A; for Z and k[x] only the full place set does it,
    since dropping a place p lets 1/p in."""
    return not Y.is_empty() and intersection_ring(Y).constraint == ZarSubset.all_places()


def check_closure_determines_ring(
    Y1: ZarSubset, Y2: ZarSubset, base: BasePair | None = None, samples: Iterable = ()
) -> Report:
    """Equal constructible closures force equal intersections."""
    if Y1.is_empty() or Y2.is_empty():
        raise PreconditionError("both subsets must be nonempty")
    same_closure = cl_cons(Y1) == cl_cons(Y2)
    r1, r2 = intersection_ring(Y1), intersection_ring(Y2)
    rep = Report("closure-determines-intersection", True)
    rep.witness = "closures differ (vacuous)" if not same_closure else f"both rings are {r1}"
    if same_closure:
        rep.checked += 1
        if r1 != r2:
            rep.fail(f"{r1} != {r2}")
        for x in samples:
            if base is None:
                raise DomainError("membership sampling needs a base pair")
            rep.checked += 1
            if ring_member(base, r1, x) != ring_member(base, r2, x):
                rep.fail(f"membership of {x} differs")
    return rep


def check_maximal_centers(Y: ZarSubset) -> Report:
    """Every place whose center is maximal lies in cl_cons(Y), for Y representing A."""
    if not is_representation(Y):
        raise PreconditionError(f"{Y} does not represent A")
    closure = cl_cons(Y)
    rep = Report("maximal-centers-in-closure", ZarSubset.all_places() <= closure, checked=1)
    rep.witness = "a representation contains every place"
    if not rep.passed:
        rep.violations.append(f"{closure} misses a place")
    return rep
