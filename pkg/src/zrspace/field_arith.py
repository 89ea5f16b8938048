"""Exact arithmetic in K = Q, Q(x) or F_p(x), its places, and Gauss extensions to K(T).

A *base pair* fixes the field K and the subring A:

========  =========  ==========
label     K          A
========  =========  ==========
q-z       Q          Z
qx-qx     Q(x)       Q[x]
fpx-fpx   F_p(x)     F_p[x]
fpx-fp    F_p(x)     F_p
========  =========  ==========

Elements of Q are ``Fraction``; elements of k(x) are :class:`RatFunc`.
Nonidentity points of Zar(K|A) are discrete valuation rings, one per
:class:`Place`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import count, product

import sympy

from .errors import DomainError, ParseError
from .polys import Poly, factor, is_irreducible, multiplicity, poly_gcd

KINDS = ("q-z", "qx-qx", "fpx-fpx", "fpx-fp")


# ---------------------------------------------------------------------------
# rational functions in x
# ---------------------------------------------------------------------------


class RatFunc:
    """Reduced quotient num/den of polynomials over Q or F_p, den monic."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None):
        p = num.p
        if den is None:
            den = Poly.const(1, p)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = num, Poly.const(1, p)
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
            lc = den.lc
            if lc != 1:
                inv = pow(lc, -1, p) if p else 1 / lc
                num, den = num.scale(inv), den.scale(inv)
        self.num = num
        self.den = den

    @property
    def p(self) -> int:
        return self.num.p

    def _lift(self, other) -> RatFunc:
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly):
            return RatFunc(other)
        if isinstance(other, (int, Fraction)):
            return RatFunc(Poly.const(other, self.p))
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero in k(x)")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return RatFunc(Poly.const(1, self.p)) / (self ** (-n))
        return RatFunc(self.num**n, self.den**n)

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return False
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if self.den.degree == 0:
            return str(self.num)
        n = str(self.num)
        if len(self.num.coeffs) > 1 or "/" in n:
            n = f"({n})"
        return f"{n}/({self.den})"

    __repr__ = __str__


# ---------------------------------------------------------------------------
# places and points
# ---------------------------------------------------------------------------

_KIND_ORDER = {"p": 0, "irr": 1, "inf": 2}


@dataclass(frozen=True)
class Place:
    """A discrete valuation of K: a prime, a monic irreducible, or the degree valuation."""

    kind: str
    value: object = None

    def __post_init__(self):
        if self.kind == "p":
            if not isinstance(self.value, int) or not sympy.isprime(self.value):
                raise DomainError(f"{self.value!r} is not a prime")
        elif self.kind == "irr":
            f = self.value
            if not isinstance(f, Poly) or not f.is_monic() or not is_irreducible(f):
                raise DomainError(f"{f} is not a monic irreducible polynomial")
        elif self.kind == "inf":
            if self.value is not None:
                raise DomainError("the degree place carries no value")
        else:
            raise DomainError(f"unknown place kind {self.kind!r}")

    @classmethod
    def prime(cls, p: int) -> Place:
        return cls("p", int(p))

    @classmethod
    def irreducible(cls, f: Poly) -> Place:
        return cls("irr", f)

    @classmethod
    def infinity(cls) -> Place:
        return cls("inf")

    def sort_key(self):
        if self.kind == "p":
            return (0, self.value)
        if self.kind == "irr":
            return (1, self.value.sort_key())
        return (2,)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        if self.kind == "p":
            return f"p:{self.value}"
        if self.kind == "irr":
            return f"irr:{self.value}"
        return "inf"

    def __repr__(self):
        return f"Place({self})"


class _Generic:
    """The generic point of Zar(K|A): the field K itself (trivial valuation)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "K"

    __str__ = __repr__

    def __reduce__(self):
        return (_Generic, ())


GENERIC = _Generic()
SpacePoint = Place | _Generic


# ---------------------------------------------------------------------------
# base pairs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BasePair:
    kind: str
    p: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DomainError(f"unknown base pair {self.kind!r}; expected one of {KINDS}")
        if self.kind.startswith("fpx"):
            if not sympy.isprime(self.p):
                raise DomainError(f"characteristic {self.p} is not prime")
        elif self.p:
            raise DomainError(f"base pair {self.kind} takes no characteristic")

    @classmethod
    def parse(cls, text: str) -> BasePair:
        kind, _, p = text.strip().partition(":")
        if kind.startswith("fpx") and not p:
            raise ParseError(f"base pair {kind} needs a characteristic, e.g. {kind}:2")
        try:
            return cls(kind, int(p) if p else 0)
        except ValueError as exc:
            raise ParseError(str(exc)) from exc

    def __str__(self):
        return f"{self.kind}:{self.p}" if self.p else self.kind

    @property
    def is_function_field(self) -> bool:
        return self.kind != "q-z"

    @property
    def has_infinity(self) -> bool:
        """The degree valuation contains A only when A is the constant field."""
        return self.kind == "fpx-fp"

    @property
    def is_pid(self) -> bool:
        """A is a PID with quotient field K (false only for (F_p(x), F_p))."""
        return self.kind != "fpx-fp"

    # -- elements -----------------------------------------------------
    def const(self, c):
        if self.is_function_field:
            return RatFunc(Poly.const(c, self.p))
        return Fraction(c)

    def one(self):
        return self.const(1)

    def zero(self):
        return self.const(0)

    def gen(self):
        """The transcendental x (function fields only)."""
        if not self.is_function_field:
            raise DomainError("Q has no variable x")
        return RatFunc(Poly.x(self.p))

    def element(self, text: str):
        """Parse a field element such as ``"3/2"`` or ``"(x^2+1)/x"``."""
        h = parse_ratfun_t(self, text)
        if h.f.degree > 0 or h.g.degree > 0:
            raise ParseError(f"{text!r} involves T; expected an element of K")
        return h.f.coeffs[0] if not h.f.is_zero() else self.zero()

    def in_base_ring(self, a) -> bool:
        """Whether a lies in A."""
        if self.kind == "q-z":
            return a.denominator == 1
        if a.den.degree != 0:
            return False
        return self.kind != "fpx-fp" or a.num.degree <= 0

    # -- places -------------------------------------------------------
    def check_place(self, place: Place) -> Place:
        if self.kind == "q-z":
            ok = place.kind == "p"
        elif place.kind == "irr":
            ok = place.value.p == self.p
        else:
            ok = place.kind == "inf" and self.has_infinity
        if not ok:
            raise DomainError(f"place {place} is not a point of Zar over {self}")
        return place

    def place(self, text: str) -> Place:
        """Parse ``"p:5"``, ``"irr:x^2+x+1"`` or ``"inf"``."""
        text = text.strip()
        if text == "inf":
            return self.check_place(Place.infinity())
        kind, sep, rest = text.partition(":")
        if not sep or kind not in ("p", "irr"):
            raise ParseError(f"bad place syntax {text!r}")
        if kind == "p":
            try:
                q = int(rest)
            except ValueError as exc:
                raise ParseError(f"bad prime in {text!r}") from exc
            return self.check_place(Place.prime(q))
        if not self.is_function_field:
            raise DomainError(f"place {text} is not a point of Zar over {self}")
        f = self.element(rest)
        if f.den.degree != 0:
            raise ParseError(f"{rest!r} is not a polynomial")
        return self.check_place(Place.irreducible(f.num))

    def iter_places(self):
        """Infinite canonical enumeration of all places (the degree place comes first)."""
        if self.kind == "q-z":
            q = 2
            while True:
                yield Place.prime(q)
                q = sympy.nextprime(q)
        if self.has_infinity:
            yield Place.infinity()
        if self.p:
            for d in count(1):
                yield from _fp_irreducibles(self.p, d)
        else:
            seen: set[Poly] = set()
            for h in count(1):
                for f in _q_irreducibles(h):
                    if f not in seen:
                        seen.add(f)
                        yield Place.irreducible(f)


def _heights(h: int) -> list[Fraction]:
    vals = {Fraction(a, b) for a in range(-h, h + 1) for b in range(1, h + 1)}
    return sorted(vals)


@lru_cache(maxsize=None)
def _q_irreducibles(h: int) -> tuple[Poly, ...]:
    """Monic irreducibles over Q of degree <= h with coefficients of height <= h."""
    hs = _heights(h)
    out = []
    for d in range(1, h + 1):
        for tail in product(hs, repeat=d):
            f = Poly(tail + (1,), 0)
            if is_irreducible(f):
                out.append(f)
    return tuple(sorted(out, key=Poly.sort_key))


@lru_cache(maxsize=None)
def _fp_irreducibles(p: int, d: int) -> tuple[Place, ...]:
    out = []
    for tail in product(range(p), repeat=d):
        f = Poly(tail + (1,), p)
        if is_irreducible(f):
            out.append(Place.irreducible(f))
    return tuple(sorted(out))


def enumerate_places(base: BasePair, bound: int) -> list[Place]:
    """All places up to ``bound`` in canonical order.

    ``bound`` caps the prime for Q, the degree over F_p, and both degree and
    coefficient height over Q (where degree-1 places alone are infinite).
    """
    if bound < 0:
        raise DomainError("bound must be nonnegative")
    if base.kind == "q-z":
        return [Place.prime(q) for q in sympy.primerange(2, bound + 1)]
    if base.p:
        out = [pl for d in range(1, bound + 1) for pl in _fp_irreducibles(base.p, d)]
    else:
        out = [Place.irreducible(f) for f in _q_irreducibles(bound)] if bound else []
    if base.has_infinity:
        out.append(Place.infinity())
    return out


# ---------------------------------------------------------------------------
# valuations
# ---------------------------------------------------------------------------


def _is_zero(x) -> bool:
    return not x


def val(place: Place, x) -> int:
    """Order of x at ``place``."""
    if _is_zero(x):
        raise DomainError("the valuation of 0 is not represented")
    if place.kind == "p":
        q = place.value
        return _int_mult(x.numerator, q) - _int_mult(x.denominator, q)
    if not isinstance(x, RatFunc):
        raise DomainError(f"place {place} needs an element of k(x), got {x!r}")
    if place.kind == "inf":
        return x.den.degree - x.num.degree
    pi = place.value
    if pi.p != x.p:
        raise DomainError(f"place {place} and element {x} live over different fields")
    return multiplicity(x.num, pi) - multiplicity(x.den, pi)


def _int_mult(n: int, q: int) -> int:
    n = abs(n)
    k = 0
    while n % q == 0:
        n //= q
        k += 1
    return k


@lru_cache(maxsize=65536)
def _int_primes(n: int) -> tuple[int, ...]:
    return tuple(sorted(sympy.factorint(abs(n))))


def support(base: BasePair, x) -> frozenset[Place]:
    """The finite set of places of Zar(K|A) where x is not a unit."""
    if _is_zero(x):
        raise DomainError("0 has no finite support")
    if base.kind == "q-z":
        qs = _int_primes(x.numerator) + _int_primes(x.denominator)
        return frozenset(Place.prime(q) for q in qs if q > 1)
    out = {Place.irreducible(f) for f, _ in factor(x.num)}
    out.update(Place.irreducible(f) for f, _ in factor(x.den))
    if base.has_infinity and x.num.degree != x.den.degree:
        out.add(Place.infinity())
    return frozenset(out)


def poles(base: BasePair, x) -> frozenset[Place]:
    """Places where v(x) < 0; x is stored reduced, so these come from the denominator."""
    if _is_zero(x):
        raise DomainError("0 has no poles to report")
    if base.kind == "q-z":
        return frozenset(Place.prime(q) for q in _int_primes(x.denominator) if q > 1)
    out = {Place.irreducible(f) for f, _ in factor(x.den)}
    if base.has_infinity and x.num.degree > x.den.degree:
        out.add(Place.infinity())
    return frozenset(out)


# ---------------------------------------------------------------------------
# polynomials and rational functions in T over K
# ---------------------------------------------------------------------------


class PolyT:
    """Polynomial in T with coefficients in K, low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and _is_zero(cs[-1]):
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def nonzero_coeffs(self):
        return [c for c in self.coeffs if not _is_zero(c)]

    def __add__(self, other: PolyT) -> PolyT:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return PolyT([c + b[i] if i < len(b) else c for i, c in enumerate(a)])

    def __neg__(self):
        return PolyT([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: PolyT) -> PolyT:
        if not self.coeffs or not other.coeffs:
            return PolyT()
        out = [None] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                t = a * b
                out[i + j] = t if out[i + j] is None else out[i + j] + t
        return PolyT(out)

    def scale(self, c) -> PolyT:
        return PolyT([a * c for a in self.coeffs])

    def __eq__(self, other):
        return isinstance(other, PolyT) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if _is_zero(c):
                continue
            cs = str(c)
            if any(ch in cs for ch in "+-/") and not cs.lstrip("-").isdigit():
                cs = f"({cs})"
            mono = "" if k == 0 else ("T" if k == 1 else f"T^{k}")
            terms.append(cs if not mono else (mono if cs == "1" else f"{cs}*{mono}"))
        return " + ".join(terms)

    __repr__ = __str__


class RatFunT:
    """Quotient f/g in K(T); g is scaled monic, common factors are not cancelled."""

    __slots__ = ("f", "g")

    def __init__(self, f: PolyT, g: PolyT):
        if g.is_zero():
            raise ZeroDivisionError("zero denominator in K(T)")
        lc = g.coeffs[-1]
        self.f = f.scale(1 / lc)
        self.g = g.scale(1 / lc)

    @classmethod
    def poly(cls, f: PolyT, one) -> RatFunT:
        return cls(f, PolyT([one]))

    def is_zero(self) -> bool:
        return self.f.is_zero()

    def __add__(self, o: RatFunT) -> RatFunT:
        if self.g == o.g:
            return RatFunT(self.f + o.f, self.g)
        return RatFunT(self.f * o.g + o.f * self.g, self.g * o.g)

    def __neg__(self):
        return RatFunT(-self.f, self.g)

    def __sub__(self, o):
        return self + (-o)

    def __mul__(self, o: RatFunT) -> RatFunT:
        return RatFunT(self.f * o.f, self.g * o.g)

    def __truediv__(self, o: RatFunT) -> RatFunT:
        if o.f.is_zero():
            raise ZeroDivisionError("division by zero in K(T)")
        return RatFunT(self.f * o.g, self.g * o.f)

    def __str__(self):
        if self.g.degree == 0:
            return str(self.f)
        return f"({self.f})/({self.g})"

    __repr__ = __str__


def gauss_val(place: Place, f) -> int:
    """Gauss valuation v*: min of coefficient valuations; v*(f) - v*(g) on f/g."""
    if isinstance(f, RatFunT):
        return gauss_val(place, f.f) - gauss_val(place, f.g)
    if f.is_zero():
        raise DomainError("Gauss valuation of the zero polynomial")
    return min(val(place, c) for c in f.nonzero_coeffs())


# ---------------------------------------------------------------------------
# parsing: rational expressions in x and T
# ---------------------------------------------------------------------------


def _tokenize(text: str):
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            yield ("num", int(text[i:j]))
            i = j
        elif ch in "xT":
            yield ("var", ch)
            i += 1
        elif ch in "+-*/^()":
            yield ("op", ch)
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r} in {text!r}")
    yield ("end", None)


class _Parser:
    def __init__(self, base: BasePair, text: str):
        self.base = base
        self.text = text
        self.toks = list(_tokenize(text))
        self.i = 0
        one = base.one()
        self.one = RatFunT.poly(PolyT([one]), one)

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, op):
        t = self.take()
        if t != ("op", op):
            raise ParseError(f"expected {op!r} in {self.text!r}")

    def const(self, c) -> RatFunT:
        k = self.base.const(c)
        return RatFunT(PolyT([k]), PolyT([self.base.one()]))

    def parse(self) -> RatFunT:
        v = self.expr()
        if self.peek()[0] != "end":
            raise ParseError(f"trailing input in {self.text!r}")
        return v

    def expr(self):
        v = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self):
        v = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            w = self.unary()
            v = v * w if op == "*" else v / w
        return v

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
        return self.power()

    def power(self):
        v = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            sign = 1
            if self.peek() == ("op", "-"):
                self.take()
                sign = -1
            kind, n = self.take()
            if kind != "num":
                raise ParseError(f"exponent must be an integer in {self.text!r}")
            r = self.one
            for _ in range(n):
                r = r * v
            v = r if sign > 0 else self.one / r
        return v

    def atom(self):
        kind, v = self.take()
        if kind == "num":
            return self.const(v)
        if kind == "var":
            one = self.base.one()
            if v == "T":
                return RatFunT(PolyT([self.base.zero(), one]), PolyT([one]))
            k = self.base.gen()
            return RatFunT(PolyT([k]), PolyT([one]))
        if (kind, v) == ("op", "("):
            e = self.expr()
            self.expect(")")
            return e
        if v is None:
            raise ParseError(f"unexpected end of input in {self.text!r}")
        raise ParseError(f"unexpected token {v!r} in {self.text!r}")


def parse_ratfun_t(base: BasePair, text: str) -> RatFunT:
    """Parse a rational expression in x (function fields) and T, e.g. ``"(2+T)/(1+2*T)"``."""
    try:
        return _Parser(base, text).parse()
    except ZeroDivisionError as exc:
        raise ParseError(f"division by zero in {text!r}") from exc
    except DomainError as exc:
        raise ParseError(f"{text!r}: {exc}") from exc


def parse_poly_t(base: BasePair, text: str) -> PolyT:
    """Parse a polynomial in T such as ``"2 + 3/2*T + T^2"``."""
    h = parse_ratfun_t(base, text)
    if h.g.degree != 0:
        raise ParseError(f"{text!r} is not a polynomial in T")
    return h.f
