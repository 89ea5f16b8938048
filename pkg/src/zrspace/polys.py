"""Dense univariate polynomials over Q or a prime field F_p.

Coefficients are stored low degree first.  Over Q they are ``Fraction``;
over F_p they are ints in ``range(p)``.  Factorization and irreducibility
are delegated to sympy's dense-polynomial toolkits.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import zip_longest

from sympy.polys.domains import QQ, ZZ
from sympy.polys.factortools import dup_factor_list
from sympy.polys.galoistools import gf_factor, gf_irreducible_p

from .errors import DomainError


def _coerce(c, p: int):
    if p:
        if isinstance(c, Fraction):
            if c.denominator % p == 0:
                raise DomainError(f"{c} has no image in F_{p}")
            return c.numerator * pow(c.denominator, -1, p) % p
        return int(c) % p
    return Fraction(c)


class Poly:
    """Immutable polynomial; ``p == 0`` means coefficients in Q."""

    __slots__ = ("coeffs", "p", "_hash")

    def __init__(self, coeffs=(), p: int = 0):
        cs = [_coerce(c, p) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self.p = p
        self._hash = hash((self.coeffs, p))

    @classmethod
    def _raw(cls, coeffs, p):
        obj = object.__new__(cls)
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        obj.coeffs = tuple(cs)
        obj.p = p
        obj._hash = hash((obj.coeffs, p))
        return obj

    @classmethod
    def const(cls, c, p: int = 0) -> Poly:
        return cls((c,), p)

    @classmethod
    def x(cls, p: int = 0) -> Poly:
        return cls((0, 1), p)

    # -- basic queries -------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self._zero()

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def _zero(self):
        return 0 if self.p else Fraction(0)

    def _inv(self, c):
        if self.p:
            return pow(c, -1, self.p)
        return 1 / c

    def _norm(self, c):
        return c % self.p if self.p else c

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.p == other.p and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly.const(other, self.p)
        return NotImplemented

    def __hash__(self):
        return self._hash

    def sort_key(self):
        return (self.degree, tuple(reversed(self.coeffs)))

    # -- arithmetic ----------------------------------------------------
    def _lift(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.p != self.p:
                raise DomainError("polynomials over different constant fields")
            return other
        return Poly.const(other, self.p)

    def __add__(self, other):
        o = self._lift(other)
        z = self._zero()
        return Poly._raw(
            (self._norm(a + b) for a, b in zip_longest(self.coeffs, o.coeffs, fillvalue=z)), self.p
        )

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw((self._norm(-a) for a in self.coeffs), self.p)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        if not self.coeffs or not o.coeffs:
            return Poly._raw((), self.p)
        out = [self._zero()] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] += a * b
        return Poly._raw((self._norm(c) for c in out), self.p)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = Poly.const(1, self.p)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> Poly:
        c = _coerce(c, self.p)
        return Poly._raw((self._norm(a * c) for a in self.coeffs), self.p)

    def __divmod__(self, other):
        o = self._lift(other)
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(o.coeffs)
        if dq < 0:
            return Poly._raw((), self.p), self
        inv = self._inv(o.lc)
        quo = [self._zero()] * (dq + 1)
        for k in range(dq, -1, -1):
            c = self._norm(rem[k + len(o.coeffs) - 1] * inv)
            quo[k] = c
            if c == 0:
                continue
            for j, b in enumerate(o.coeffs):
                rem[k + j] = self._norm(rem[k + j] - c * b)
        return Poly._raw(quo, self.p), Poly._raw(rem[: len(o.coeffs) - 1], self.p)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        return self.scale(self._inv(self.lc))

    def __call__(self, t):
        acc = self._zero()
        for c in reversed(self.coeffs):
            acc = self._norm(acc * t + c)
        return acc

    # -- display -------------------------------------------------------
    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                cs = str(c)
                if "/" in cs:
                    cs = f"({cs})"
                terms.append(f"{cs}*{mono}")
        out = terms[0]
        for t in terms[1:]:
            out += t if t.startswith("-") else "+" + t
        return out

    def __repr__(self):
        field = f"F_{self.p}" if self.p else "Q"
        return f"Poly({self}, {field})"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (zero if both are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def _to_sympy(f: Poly):
    if f.p:
        return [ZZ(int(c)) for c in reversed(f.coeffs)]
    return [QQ(c.numerator, c.denominator) for c in reversed(f.coeffs)]


def _from_sympy(dense, p: int) -> Poly:
    if p:
        return Poly([int(c) for c in reversed(dense)], p)
    return Poly([Fraction(int(c.numerator), int(c.denominator)) for c in reversed(dense)], 0)


@lru_cache(maxsize=65536)
def factor(f: Poly) -> tuple[tuple[Poly, int], ...]:
    """Monic irreducible factors with multiplicities, sorted canonically.

    The leading coefficient is dropped; constants factor as ``()``.
    """
    if f.is_zero():
        raise DomainError("cannot factor the zero polynomial")
    if f.degree == 0:
        return ()
    if f.p:
        _, facs = gf_factor(_to_sympy(f), f.p, ZZ)
    else:
        _, facs = dup_factor_list(_to_sympy(f), QQ)
    out = [(_from_sympy(g, f.p).monic(), m) for g, m in facs]
    return tuple(sorted(out, key=lambda fm: fm[0].sort_key()))


@lru_cache(maxsize=65536)
def is_irreducible(f: Poly) -> bool:
    if f.degree < 1:
        return False
    if f.p:
        return bool(gf_irreducible_p(_to_sympy(f.monic()), f.p, ZZ))
    facs = factor(f)
    return len(facs) == 1 and facs[0][1] == 1


@lru_cache(maxsize=262144)
def multiplicity(f: Poly, pi: Poly) -> int:
    """Largest k with pi^k dividing f (f nonzero, deg pi >= 1)."""
    k = 0
    q, r = divmod(f, pi)
    while r.is_zero():
        k += 1
        f = q
        q, r = divmod(f, pi)
    return k
