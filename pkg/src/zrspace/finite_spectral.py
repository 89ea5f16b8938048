"""Finite spectral spaces, presented by their specialization order.

A finite T0 space is spectral and is determined by the preorder
``x <= y  iff  y in Cl({x})``, which is then a partial order.  Zariski closed
sets are up-sets, inverse-closed sets are down-sets, and since every
ultrafilter on a finite set is principal the constructible topology is
discrete.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

import numpy as np
import sympy

from .errors import DomainError, InvalidPosetError, InvalidSubsetError


@dataclass(frozen=True)
class FinitePoset:
    """Carrier labels and the full (reflexive, transitive) order relation."""

    elements: tuple[str, ...]
    leq: frozenset[tuple[str, str]]

    def __init__(self, elements, leq=()):
        elems = tuple(str(e) for e in elements)
        if len(set(elems)) != len(elems):
            raise InvalidPosetError("duplicate element labels")
        carrier = set(elems)
        rel = {(e, e) for e in elems}
        for a, b in leq:
            a, b = str(a), str(b)
            if a not in carrier or b not in carrier:
                raise InvalidPosetError(f"pair ({a}, {b}) mentions an unknown element")
            rel.add((a, b))
        rel = _transitive_closure(elems, rel)
        for a, b in rel:
            if a != b and (b, a) in rel:
                raise InvalidPosetError(f"{a} and {b} are mutually below each other")
        object.__setattr__(self, "elements", elems)
        object.__setattr__(self, "leq", frozenset(rel))

    def le(self, x: str, y: str) -> bool:
        return (x, y) in self.leq

    def __len__(self):
        return len(self.elements)

    @classmethod
    def chain(cls, labels) -> FinitePoset:
        labels = list(labels)
        return cls(labels, list(zip(labels, labels[1:])))

    @classmethod
    def antichain(cls, labels) -> FinitePoset:
        return cls(labels)

    @classmethod
    def from_json(cls, text_or_obj) -> FinitePoset:
        obj = json.loads(text_or_obj) if isinstance(text_or_obj, str) else text_or_obj
        try:
            return cls(obj["elements"], [tuple(p) for p in obj.get("leq", [])])
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidPosetError(f"bad poset object: {exc}") from exc

    def to_json(self) -> dict:
        pairs = sorted((a, b) for a, b in self.leq if a != b)
        return {"elements": list(self.elements), "leq": [list(p) for p in pairs]}


def _transitive_closure(elems, rel):
    rel = set(rel)
    for k in elems:
        below = [a for a in elems if (a, k) in rel]
        above = [b for b in elems if (k, b) in rel]
        for a in below:
            for b in above:
                rel.add((a, b))
    return rel


def _check(P: FinitePoset, Y) -> frozenset[str]:
    Y = frozenset(str(y) for y in Y)
    bad = Y - set(P.elements)
    if bad:
        raise InvalidSubsetError(f"not elements of the poset: {sorted(bad)}")
    return Y


def sp_closure(P: FinitePoset, Y) -> frozenset[str]:
    Y = _check(P, Y)
    return frozenset(x for x in P.elements if any(P.le(y, x) for y in Y))


def gen_closure(P: FinitePoset, Y) -> frozenset[str]:
    Y = _check(P, Y)
    return frozenset(x for x in P.elements if any(P.le(x, y) for y in Y))


def cl_cons(P: FinitePoset, Y) -> frozenset[str]:
    """Discrete: each point is the limit of its own principal ultrafilter and of nothing else."""
    Y = _check(P, Y)
    return frozenset(principal_limit(P, Y, y) for y in Y)


def cl_zar(P: FinitePoset, Y) -> frozenset[str]:
    return sp_closure(P, Y)


def cl_inv(P: FinitePoset, Y) -> frozenset[str]:
    return gen_closure(P, Y)


def dual(P: FinitePoset) -> FinitePoset:
    """Specialization order of the inverse topology."""
    return FinitePoset(P.elements, [(b, a) for a, b in P.leq])


def principal_limit(P: FinitePoset, Y, y: str) -> str:
    Y = _check(P, Y)
    if y not in Y:
        raise InvalidSubsetError(f"center {y} is not in the subset")
    return y


# ---------------------------------------------------------------------------
# Spec(Z/nZ)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FiniteRingSpec:
    modulus: int
    primes: tuple[int, ...]

    def __post_init__(self):
        if self.modulus < 2:
            raise DomainError("modulus must be at least 2")
        if tuple(sorted(sympy.factorint(self.modulus))) != self.primes:
            raise DomainError(f"{self.primes} are not the prime divisors of {self.modulus}")


def spec_zn(n: int) -> tuple[FiniteRingSpec, FinitePoset]:
    """Spec(Z/nZ): the maximal ideals (p) for p | n, pairwise incomparable."""
    if n < 2:
        raise DomainError("Z/nZ needs n >= 2")
    primes = tuple(sorted(sympy.factorint(n)))
    return FiniteRingSpec(n, primes), FinitePoset.antichain(str(q) for q in primes)


@lru_cache(maxsize=8)
def _residues(n: int) -> np.ndarray:
    r = np.arange(n)
    r.flags.writeable = False
    return r


@lru_cache(maxsize=64)
def _divisible(n: int, q: int) -> np.ndarray:
    m = _residues(n) % q == 0
    m.flags.writeable = False
    return m


def ultrafilter_prime(R: FiniteRingSpec, Y, y: int) -> int:
    """P_U = {a : V(a) cap Y in U} for U principal at y, read off as a prime of Z/nZ.

    Evaluated by scanning every residue a in 0..n-1 with V(a) = {p | n : p | a};
    the resulting ideal is matched against the primes (p) of Z/nZ.
    """
    Y = frozenset(int(q) for q in Y)
    if not Y <= set(R.primes):
        raise DomainError(f"{sorted(Y)} is not a set of primes of Z/{R.modulus}")
    if y not in Y:
        raise DomainError(f"center {y} is not in Y")
    n = R.modulus
    residues = _residues(n)
    # bit i of trace[a] records whether the i-th prime of Y lies in V(a)
    ys = sorted(Y)
    trace = np.zeros(n, dtype=np.int64)
    for i, q in enumerate(ys):
        trace |= _divisible(n, q).astype(np.int64) << i
    in_ultrafilter = (trace >> ys.index(y)) & 1 == 1
    ideal = residues[in_ultrafilter]
    for q in R.primes:
        if len(ideal) == n // q and np.array_equal(ideal, residues[::q]):
            return q
    raise DomainError(f"P_U = {ideal[:5]}... is not a prime ideal of Z/{n}")


# ---------------------------------------------------------------------------
# enumeration helpers (used by the exhaustive checks)
# ---------------------------------------------------------------------------


def naturally_labelled_posets(n: int):
    """Every poset on {0..n-1} whose order extends the natural order of labels.

    Every finite poset is isomorphic to at least one of these.
    """
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        rel = {pairs[k] for k in range(len(pairs)) if mask >> k & 1}
        if all((a, c) in rel for (a, b) in rel for (b2, c) in rel if b == b2):
            yield rel


def canonical_form(n: int, rel) -> tuple:
    return min(tuple(sorted((s[a], s[b]) for a, b in rel)) for s in permutations(range(n)))


def posets_up_to_isomorphism(n: int) -> list[FinitePoset]:
    seen = {}
    for rel in naturally_labelled_posets(n):
        key = canonical_form(n, rel)
        if key not in seen:
            seen[key] = FinitePoset([str(i) for i in range(n)], [(str(a), str(b)) for a, b in rel])
    return list(seen.values())
