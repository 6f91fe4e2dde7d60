"""Multiplicatively closed subsets: symbolic over Z, explicit in finite rings.

A multiplicative set always contains 1 and is closed under multiplication; it
may legally contain 0 (then localizing at it collapses everything, and every
"exists s" predicate downstream holds with the honest witness 0).

Over Z four symbolic presentations are supported (plus the saturation wrapper
of the generated kind); inside a finite ring a set is stored in full.  The one
decision primitive everything else reduces to is `meets_ideal`: does S meet a
given ideal, and if so at which canonical witness.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cache
from math import gcd

from .rings import (
    Ideal,
    IntegerRing,
    ModularRing,
    ProductRing,
    QuotientData,
    Ring,
    RingMismatchError,
    UnsupportedRingError,
    divides,
    element_of,
    factorize,
    ideal,
    ideal_contains,
    is_prime,
    quotient_ring,
    units,
)


@dataclass(frozen=True)
class ZUnits:
    """S = {1, -1}."""

    def __str__(self) -> str:
        return "units"


@dataclass(frozen=True)
class ZNonZero:
    """S = Z minus {0}."""

    def __str__(self) -> str:
        return "nonzero"


@dataclass(frozen=True)
class ZComplementOfPrimes:
    """S = Z minus the union of pZ over the listed primes."""

    primes: tuple[int, ...]

    def __post_init__(self):
        if not self.primes:
            raise ValueError("at least one prime is required")
        if len(set(self.primes)) != len(self.primes):
            raise ValueError("primes must be distinct")
        for p in self.primes:
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")

    def __str__(self) -> str:
        return "comp-primes:" + ",".join(map(str, self.primes))


@dataclass(frozen=True)
class ZGeneratedBy:
    """Multiplicative closure of the generators together with 1.

    A generator 0 is legal and kept: then 0 lies in S.
    """

    gens: tuple[int, ...]

    def __str__(self) -> str:
        return "gen:" + ",".join(map(str, self.gens))


@dataclass(frozen=True)
class ZSaturatedGeneratedBy:
    """Saturation of ZGeneratedBy: integers dividing some product of the gens."""

    gens: tuple[int, ...]

    def __str__(self) -> str:
        return "saturated-gen:" + ",".join(map(str, self.gens))


ZMultSet = ZUnits | ZNonZero | ZComplementOfPrimes | ZGeneratedBy | ZSaturatedGeneratedBy


@dataclass(frozen=True)
class MultSet:
    """A multiplicatively closed subset of a finite ring, stored in full."""

    ring: Ring
    elements: frozenset

    def __post_init__(self):
        if not self.ring.is_finite:
            raise UnsupportedRingError("explicit multiplicative sets need a finite ring")
        if self.ring.one not in self.elements:
            raise ValueError("a multiplicative set must contain 1")
        for a in self.elements:
            for b in self.elements:
                if self.ring.mul(a, b) not in self.elements:
                    raise ValueError("set is not closed under multiplication")

    def __str__(self) -> str:
        return "{" + ",".join(str(x) for x in sorted(self.elements)) + "}"

    def sorted_elements(self):
        return sorted(self.elements)


AnyMultSet = MultSet | ZMultSet


def _gen_products_contain(gens: tuple[int, ...], x: int) -> bool:
    """Is x a product of generators (the empty product 1 included)?"""
    if x == 1:
        return True
    if x == 0:
        return 0 in gens
    bound = abs(x)
    seen = {1}
    frontier = [1]
    while frontier:
        nxt = []
        for v in frontier:
            for g in gens:
                w = v * g
                if w == x:
                    return True
                if w == 0 or abs(w) > bound or w in seen:
                    continue
                seen.add(w)
                nxt.append(w)
        frontier = nxt
    return False


def _divides_some_product(gens: tuple[int, ...], x: int) -> bool:
    """Is x a divisor of some product of the generators?"""
    if x in (1, -1):
        return True
    if x == 0:
        return 0 in gens
    if 0 in gens:
        return True  # 0 is a product, and everything divides 0
    return all(
        any(g % p == 0 for g in gens) for p in factorize(abs(x))
    )


def z_multset_contains(s: ZMultSet, x: int) -> bool:
    if isinstance(s, ZUnits):
        return x in (1, -1)
    if isinstance(s, ZNonZero):
        return x != 0
    if isinstance(s, ZComplementOfPrimes):
        return all(x % p != 0 for p in s.primes)
    if isinstance(s, ZGeneratedBy):
        return _gen_products_contain(s.gens, x)
    return _divides_some_product(s.gens, x)


def multset_contains(s: AnyMultSet, x) -> bool:
    if isinstance(s, MultSet):
        return x in s.elements
    return z_multset_contains(s, x)


def closure_in_ring(ring: Ring, gens) -> MultSet:
    """Least multiplicatively closed subset containing gens and 1."""
    if not ring.is_finite:
        raise UnsupportedRingError("closure needs a finite ring")
    current = {ring.one}
    frontier = [element_of(ring, g) for g in gens]
    current.update(frontier)
    while frontier:
        nxt = []
        for a in frontier:
            for b in list(current):
                c = ring.mul(a, b)
                if c not in current:
                    current.add(c)
                    nxt.append(c)
        frontier = nxt
    return MultSet(ring, frozenset(current))


def product_multset(*sets: MultSet) -> MultSet:
    """Cartesian product of finite multiplicative sets over the product ring."""
    from .rings import product_ring

    ring = product_ring(*(s.ring for s in sets))
    elems = set()
    for combo in itertools.product(*(s.sorted_elements() for s in sets)):
        flat: list[int] = []
        for s, part in zip(sets, combo):
            flat.extend(part if isinstance(part, tuple) else (part,))
        elems.add(tuple(flat))
    return MultSet(ring, frozenset(elems))


def reduce_presentation(p: ZMultSet, target: int | Ring) -> MultSet:
    """Image of the symbolic Z-set under Z -> Z/n (or a finite product ring)."""
    if isinstance(target, int):
        target = ModularRing(target)
    if isinstance(target, ProductRing):
        from math import lcm

        span = lcm(*(c.n for c in target.components))  # >= 2: components are >= 2
        inner = reduce_presentation(p, ModularRing(span))
        elems = frozenset(
            tuple(x % c.n for c in target.components) for x in inner.elements
        )
        return MultSet(target, elems)
    if not isinstance(target, ModularRing):
        raise UnsupportedRingError("reduction targets a finite ring")
    n = target.n
    if isinstance(p, ZUnits):
        return MultSet(target, frozenset({1 % n, (n - 1) % n}))
    if isinstance(p, ZNonZero):
        return MultSet(target, frozenset(range(n)))
    if isinstance(p, ZComplementOfPrimes):
        relevant = [q for q in p.primes if n % q == 0]
        elems = frozenset(
            x for x in range(n) if all(x % q != 0 for q in relevant)
        )
        return MultSet(target, elems)
    if isinstance(p, ZGeneratedBy):
        return closure_in_ring(target, [g % n for g in p.gens])
    if isinstance(p, ZSaturatedGeneratedBy):
        base = closure_in_ring(target, [g % n for g in p.gens])
        return saturation(base)
    raise TypeError(f"not a symbolic multiplicative set: {p!r}")


def _meets_ideal_z(p: ZMultSet, i: Ideal):
    c = i.data
    if isinstance(p, ZNonZero):
        return c if c != 0 else None
    if isinstance(p, ZUnits):
        return 1 if c == 1 else None
    if isinstance(p, ZComplementOfPrimes):
        if c == 0 or any(c % q == 0 for q in p.primes):
            return None
        return c
    if isinstance(p, (ZGeneratedBy, ZSaturatedGeneratedBy)):
        gens = p.gens
        if 0 in gens and isinstance(p, ZGeneratedBy):
            return 0
        if isinstance(p, ZSaturatedGeneratedBy) and 0 in gens:
            return c  # the saturation is all of Z
        if c == 0:
            return None
        if c == 1:
            return 1
        if isinstance(p, ZSaturatedGeneratedBy):
            return c if _divides_some_product(gens, c) else None
        # pick one generator per prime of c and raise it far enough
        chosen: dict[int, int] = {}
        for q, e in factorize(c).items():
            g = next((g for g in gens if g != 0 and g % q == 0), None)
            if g is None:
                return None
            vq = 0
            gg = g
            while gg % q == 0:
                vq += 1
                gg //= q
            need = -(-e // vq)  # ceil
            chosen[g] = max(chosen.get(g, 0), need)
        w = 1
        for g, e in chosen.items():
            w *= g**e
        return w
    raise TypeError(f"not a symbolic multiplicative set: {p!r}")


def meets_ideal(s: AnyMultSet, i: Ideal):
    """Some witness in S ∩ I (canonically least for finite sets), else None."""
    if isinstance(s, MultSet):
        if s.ring != i.ring:
            raise RingMismatchError("set and ideal over different rings")
        for x in s.sorted_elements():
            if ideal_contains(i, x):
                return x
        return None
    if not isinstance(i.ring, IntegerRing):
        raise RingMismatchError("symbolic sets pair with ideals of Z")
    return _meets_ideal_z(s, i)


def saturation(s: AnyMultSet):
    """S* = {x : xR meets S}; same representation kind as the input."""
    if isinstance(s, MultSet):
        ring = s.ring
        sat = set()
        for x in ring.elements():
            if any(divides(ring, x, t) for t in s.elements):
                sat.add(x)
        return MultSet(ring, frozenset(sat))
    if isinstance(s, (ZUnits, ZNonZero, ZComplementOfPrimes, ZSaturatedGeneratedBy)):
        return s
    return ZSaturatedGeneratedBy(s.gens)


def satisfies_max_multiple(s: AnyMultSet):
    """A witness in S divisible by every element of S, else None.

    Finite sets always have one (the product of all elements works); the least
    witness in canonical element order is returned.
    """
    if isinstance(s, MultSet):
        ring = s.ring
        for cand in s.sorted_elements():
            if all(divides(ring, t, cand) for t in s.elements):
                return cand
        raise AssertionError("finite multiplicative sets always have a witness")
    if isinstance(s, ZUnits):
        return 1
    if isinstance(s, (ZGeneratedBy, ZSaturatedGeneratedBy)):
        if 0 in s.gens:
            return 0
        if all(g in (1, -1) for g in s.gens):
            return 1
        return None
    return None


@dataclass(frozen=True)
class LocalizationData:
    """Finite-ring localization realized as a quotient.

    Inverting S is the same as inverting its maximal-multiple witness s*, and
    over a finite ring the kernel of the localization map is the annihilator
    of s* (every s in S divides s*, and the powers of s* divide s* again, so
    the union of annihilators over S is ann(s*)).  The localized ring is then
    the quotient by that kernel, where every image of S is a unit (asserted).
    """

    source: Ring
    kernel: Ideal
    quotient: QuotientData

    @property
    def trivial(self) -> bool:
        return self.quotient.trivial

    @property
    def ring(self):
        return self.quotient.ring


def localize(ring: Ring, s: MultSet) -> LocalizationData:
    if not ring.is_finite:
        raise UnsupportedRingError("localization of Z is out of scope")
    if s.ring != ring:
        raise RingMismatchError("set over a different ring")
    star = satisfies_max_multiple(s)

    def _ann_of(comp: ModularRing, x: int) -> int:
        g = gcd(x, comp.n)
        return comp.n // g

    if isinstance(ring, ProductRing):
        kernel = ideal(
            ring,
            tuple(_ann_of(c, star[t]) for t, c in enumerate(ring.components)),
        )
    else:
        kernel = ideal(ring, _ann_of(ring, star))
    q = quotient_ring(ring, kernel)
    if not q.trivial:
        target_units = units(q.ring)
        for t in s.elements:
            if q.project(t) not in target_units:
                raise AssertionError("localized image of S must consist of units")
    return LocalizationData(ring, kernel, q)


def multset_image(s: MultSet, q: QuotientData) -> MultSet:
    """Image of a finite multiplicative set under a quotient projection."""
    return MultSet(q.ring, frozenset(q.project(x) for x in s.elements))


@cache
def one_multset(ring: Ring) -> MultSet:
    return MultSet(ring, frozenset({ring.one}))
