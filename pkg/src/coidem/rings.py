"""Supported base rings (Z, Z/nZ, finite products of Z/nZ), elements, ideals.

Every ring here is a principal ideal ring, so an ideal is a single canonical
generator per coordinate:

  * over Z:    cZ with c >= 0 (c = 0 is the zero ideal);
  * over Z/n:  dZ/n with d | n and 1 <= d <= n (d = n encodes the zero ideal,
               d = 1 the whole ring);
  * over a product: one canonical generator per component.

Elements are plain ints (Z and Z/n) or tuples of ints (products), stored
reduced; equality is structural.  All values are immutable and hashable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cache
from math import gcd, lcm


class RingMismatchError(ValueError):
    """Operands live over different rings."""


class UnsupportedRingError(ValueError):
    """The operation needs enumeration (or finiteness) that Z cannot offer."""


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (inputs are desk scale)."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_factors(n: int) -> tuple[int, ...]:
    return tuple(sorted(factorize(n)))


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == {n: 1}


def divisors(n: int) -> tuple[int, ...]:
    return tuple(d for d in range(1, n + 1) if n % d == 0)


@dataclass(frozen=True)
class IntegerRing:
    """The ring of integers.  Symbolic only: no element or ideal enumeration."""

    def __str__(self) -> str:
        return "Z"

    @property
    def is_finite(self) -> bool:
        return False

    @property
    def one(self) -> int:
        return 1

    @property
    def zero(self) -> int:
        return 0

    def normalize(self, x: int) -> int:
        return int(x)

    def contains(self, x) -> bool:
        return isinstance(x, int)

    def mul(self, a: int, b: int) -> int:
        return a * b

    def add(self, a: int, b: int) -> int:
        return a + b


@dataclass(frozen=True)
class ModularRing:
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("modulus must be >= 2 (the zero ring is rejected)")

    def __str__(self) -> str:
        return f"Z/{self.n}"

    @property
    def is_finite(self) -> bool:
        return True

    @property
    def one(self) -> int:
        return 1

    @property
    def zero(self) -> int:
        return 0

    def normalize(self, x: int) -> int:
        return int(x) % self.n

    def contains(self, x) -> bool:
        return isinstance(x, int) and 0 <= x < self.n

    def elements(self):
        return range(self.n)

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.n

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.n


@dataclass(frozen=True)
class ProductRing:
    components: tuple[ModularRing, ...]

    def __post_init__(self):
        if not self.components:
            raise ValueError("a product ring needs at least one component")
        if not all(isinstance(c, ModularRing) for c in self.components):
            raise ValueError("product components must be modular rings")

    def __str__(self) -> str:
        return " x ".join(str(c) for c in self.components)

    @property
    def is_finite(self) -> bool:
        return True

    @property
    def one(self):
        return tuple(1 for _ in self.components)

    @property
    def zero(self):
        return tuple(0 for _ in self.components)

    def normalize(self, x):
        return tuple(c.normalize(v) for c, v in zip(self.components, x))

    def contains(self, x) -> bool:
        return (
            isinstance(x, tuple)
            and len(x) == len(self.components)
            and all(c.contains(v) for c, v in zip(self.components, x))
        )

    def elements(self):
        return itertools.product(*(c.elements() for c in self.components))

    def mul(self, a, b):
        return tuple(c.mul(x, y) for c, x, y in zip(self.components, a, b))

    def add(self, a, b):
        return tuple(c.add(x, y) for c, x, y in zip(self.components, a, b))


Ring = IntegerRing | ModularRing | ProductRing

Z = IntegerRing()


def product_ring(*rings: Ring) -> ProductRing:
    """Build a product ring, flattening nested products."""
    comps: list[ModularRing] = []
    for r in rings:
        if isinstance(r, ModularRing):
            comps.append(r)
        elif isinstance(r, ProductRing):
            comps.extend(r.components)
        else:
            raise UnsupportedRingError("only finite rings can be multiplied")
    return ProductRing(tuple(comps))


@dataclass(frozen=True)
class Ideal:
    """Canonical principal ideal; `data` is the generator (per component)."""

    ring: Ring
    data: int | tuple[int, ...]

    def __str__(self) -> str:
        if isinstance(self.ring, IntegerRing):
            return f"{self.data}Z"
        if isinstance(self.ring, ModularRing):
            return f"({self.data}) in {self.ring}"
        return "(" + ", ".join(str(d) for d in self.data) + f") in {self.ring}"


def _canonical_generator(ring: Ring, g: int) -> int:
    if isinstance(ring, IntegerRing):
        return abs(g)
    n = ring.n
    g = gcd(g, n)
    return n if g == 0 else g


def ideal(ring: Ring, data) -> Ideal:
    """Internal constructor normalizing a raw generator (tuple for products)."""
    if isinstance(ring, ProductRing):
        data = tuple(
            _canonical_generator(c, d) for c, d in zip(ring.components, data)
        )
        return Ideal(ring, data)
    return Ideal(ring, _canonical_generator(ring, data))


def element_of(ring: Ring, x):
    """Normalize x into ring, raising RingMismatchError on shape mismatch."""
    if isinstance(ring, ProductRing):
        if not isinstance(x, tuple) or len(x) != len(ring.components):
            raise RingMismatchError(f"{x!r} is not an element shape for {ring}")
        return ring.normalize(x)
    if not isinstance(x, int):
        raise RingMismatchError(f"{x!r} is not an element shape for {ring}")
    return ring.normalize(x)


def ideal_from_generators(ring: Ring, gens) -> Ideal:
    norm = [element_of(ring, g) for g in gens]
    if isinstance(ring, ProductRing):
        per = []
        for i, comp in enumerate(ring.components):
            g = 0
            for e in norm:
                g = gcd(g, e[i])
            per.append(_canonical_generator(comp, g))
        return Ideal(ring, tuple(per))
    g = 0
    for e in norm:
        g = gcd(g, e)
    return ideal(ring, g)


def zero_ideal(ring: Ring) -> Ideal:
    return ideal_from_generators(ring, [])


def unit_ideal(ring: Ring) -> Ideal:
    one = ring.one
    return ideal_from_generators(ring, [one])


def ideal_is_zero(i: Ideal) -> bool:
    return i == zero_ideal(i.ring)


def ideal_is_whole(i: Ideal) -> bool:
    return i == unit_ideal(i.ring)


def _require_same_ring(a, b):
    if a.ring != b.ring:
        raise RingMismatchError(f"operands over {a.ring} and {b.ring}")


def ideal_product(i: Ideal, j: Ideal) -> Ideal:
    _require_same_ring(i, j)
    if isinstance(i.ring, ProductRing):
        return ideal(i.ring, tuple(a * b for a, b in zip(i.data, j.data)))
    return ideal(i.ring, i.data * j.data)


def ideal_intersect(i: Ideal, j: Ideal) -> Ideal:
    _require_same_ring(i, j)
    if isinstance(i.ring, ProductRing):
        return ideal(i.ring, tuple(lcm(a, b) for a, b in zip(i.data, j.data)))
    return ideal(i.ring, lcm(i.data, j.data))


def ideal_contains(i: Ideal, x) -> bool:
    """Membership x in the ideal (x must already be reduced)."""
    if isinstance(i.ring, ProductRing):
        return all(x[t] % d == 0 for t, d in enumerate(i.data))
    if isinstance(i.ring, IntegerRing):
        return x == 0 if i.data == 0 else x % i.data == 0
    return x % i.data == 0


def ideal_leq(i: Ideal, j: Ideal) -> bool:
    """i ⊆ j, decided via divisibility of the canonical generators."""
    _require_same_ring(i, j)
    if isinstance(i.ring, ProductRing):
        return all(a % b == 0 for a, b in zip(i.data, j.data))
    if isinstance(i.ring, IntegerRing):
        return i.data == 0 if j.data == 0 else i.data % j.data == 0
    return i.data % j.data == 0


def ideal_elements(i: Ideal):
    if not i.ring.is_finite:
        raise UnsupportedRingError("Z ideals cannot be enumerated")
    if isinstance(i.ring, ProductRing):
        return [
            x
            for x in i.ring.elements()
            if ideal_contains(i, x)
        ]
    return [x for x in range(0, i.ring.n, i.data)]


def all_ideals(ring: Ring) -> tuple[Ideal, ...]:
    """Every ideal of a finite ring, canonical generators in ascending order."""
    if isinstance(ring, ModularRing):
        return tuple(Ideal(ring, d) for d in divisors(ring.n))
    if isinstance(ring, ProductRing):
        per = [divisors(c.n) for c in ring.components]
        return tuple(Ideal(ring, combo) for combo in itertools.product(*per))
    raise UnsupportedRingError("Z has infinitely many ideals")


def divides(ring: Ring, t, s) -> bool:
    """True iff s lies in the principal ideal tR."""
    if isinstance(ring, ProductRing):
        return all(
            divides(c, a, b) for c, a, b in zip(ring.components, t, s)
        )
    if isinstance(ring, IntegerRing):
        return s == 0 if t == 0 else s % t == 0
    g = gcd(t, ring.n)
    return s % (ring.n if g == 0 else g) == 0


@cache
def units(ring: Ring) -> frozenset:
    if isinstance(ring, ModularRing):
        return frozenset(x for x in range(ring.n) if gcd(x, ring.n) == 1)
    if isinstance(ring, ProductRing):
        return frozenset(
            itertools.product(*(sorted(units(c)) for c in ring.components))
        )
    raise UnsupportedRingError("use the symbolic Units presentation over Z")


def prime_ideals(ring: Ring) -> tuple[Ideal, ...]:
    if isinstance(ring, ModularRing):
        return tuple(Ideal(ring, p) for p in prime_factors(ring.n))
    if isinstance(ring, ProductRing):
        out = []
        for idx, comp in enumerate(ring.components):
            for p in prime_factors(comp.n):
                data = tuple(
                    p if t == idx else 1 for t in range(len(ring.components))
                )
                out.append(Ideal(ring, data))
        return tuple(out)
    raise UnsupportedRingError("prime ideals of Z are not enumerable")


def maximal_ideals(ring: Ring) -> tuple[Ideal, ...]:
    # Supported finite rings are artinian: primes and maximals coincide.
    return prime_ideals(ring)


@dataclass(frozen=True)
class QuotientData:
    """Quotient ring R/I with projection data; `trivial` flags collapse to 0."""

    source: Ring
    by: Ideal
    ring: Ring | None
    trivial: bool
    kept: tuple[int, ...] = ()  # product case: surviving component indices

    def project(self, x):
        if self.trivial:
            raise ValueError("projection into the flagged trivial ring")
        if isinstance(self.source, ProductRing):
            return tuple(x[i] % self.by.data[i] for i in self.kept)
        return x % self.by.data

    def ideal_image(self, j: Ideal) -> Ideal:
        if j.ring != self.source:
            raise RingMismatchError("ideal over a different ring")
        if self.trivial:
            raise ValueError("image in the flagged trivial ring")
        if isinstance(self.source, ProductRing):
            return ideal(
                self.ring, tuple(gcd(j.data[i], self.by.data[i]) for i in self.kept)
            )
        return ideal(self.ring, gcd(j.data, self.by.data))


def quotient_ring(ring: Ring, i: Ideal) -> QuotientData:
    if i.ring != ring:
        raise RingMismatchError("ideal over a different ring")
    if isinstance(ring, ModularRing):
        d = i.data
        if d == 1:
            return QuotientData(ring, i, None, True)
        return QuotientData(ring, i, ModularRing(d), False)
    if isinstance(ring, ProductRing):
        kept = tuple(t for t, d in enumerate(i.data) if d > 1)
        if not kept:
            return QuotientData(ring, i, None, True)
        comps = tuple(ModularRing(i.data[t]) for t in kept)
        return QuotientData(ring, i, ProductRing(comps), False, kept)
    raise UnsupportedRingError("quotients are computed for finite rings only")
