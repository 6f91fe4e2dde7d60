"""Finite modules over Z/n and product rings, plus the rank-1 module Z over Z.

A finite module M = Z/d_1 ⊕ ... ⊕ Z/d_k over Z/n (each d_i | n) is handled
through integer lattices: a submodule corresponds to the preimage lattice L
with D·Z^k ⊆ L ⊆ Z^k, D = diag(d_1, ..., d_k), stored as its unique Hermite
basis.  Sums, intersections, ideal action, both colon operators, annihilators,
quotients, torsion and localization all become exact integer linear algebra.

Over a product ring a module is a tuple of component modules and every
submodule decomposes componentwise, so the operators act coordinatewise.

The only infinite module supported is Z itself, handled entirely through the
closed forms in the z_* functions (submodules are tZ with t >= 0).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cache
from math import gcd, lcm, prod

from . import intmat
from .intmat import Matrix
from .multsets import MultSet, localize, satisfies_max_multiple
from .rings import (
    Ideal,
    IntegerRing,
    ModularRing,
    ProductRing,
    Ring,
    RingMismatchError,
    UnsupportedRingError,
    ideal,
    ideal_from_generators,
)


@dataclass(frozen=True)
class FinModule:
    """M = ⊕ Z/d_i over a modular ring; coordinates follow `factors`."""

    ring: ModularRing
    factors: tuple[int, ...]

    def __post_init__(self):
        for d in self.factors:
            if d < 2:
                raise ValueError("factors must be >= 2 after normalization")
            if self.ring.n % d != 0:
                raise ValueError(
                    f"factor {d} does not divide the characteristic {self.ring.n}"
                )

    def __str__(self) -> str:
        if not self.factors:
            return "0"
        return " + ".join(f"Z/{d}" for d in self.factors)

    @property
    def rank(self) -> int:
        return len(self.factors)

    @property
    def order(self) -> int:
        return prod(self.factors)

    @property
    def exponent(self) -> int:
        return lcm(*self.factors) if self.factors else 1

    def elements(self):
        return itertools.product(*(range(d) for d in self.factors))

    @property
    def zero_element(self):
        return (0,) * len(self.factors)

    def normalize_element(self, x):
        return tuple(v % d for v, d in zip(x, self.factors))

    def add(self, a, b):
        return tuple((x + y) % d for x, y, d in zip(a, b, self.factors))

    def scale(self, r: int, a):
        return tuple((r * x) % d for x, d in zip(a, self.factors))


@dataclass(frozen=True)
class ProductModule:
    ring: ProductRing
    components: tuple[FinModule, ...]

    def __post_init__(self):
        if len(self.components) != len(self.ring.components):
            raise ValueError("one module component per ring component")
        for comp, rc in zip(self.components, self.ring.components):
            if comp.ring != rc:
                raise RingMismatchError("component module over the wrong ring")

    def __str__(self) -> str:
        return " x ".join(f"({c})" for c in self.components)

    @property
    def order(self) -> int:
        return prod(c.order for c in self.components)

    def elements(self):
        return itertools.product(*(c.elements() for c in self.components))

    @property
    def zero_element(self):
        return tuple(c.zero_element for c in self.components)

    def normalize_element(self, x):
        return tuple(c.normalize_element(v) for c, v in zip(self.components, x))

    def add(self, a, b):
        return tuple(c.add(x, y) for c, x, y in zip(self.components, a, b))

    def scale(self, r, a):
        return tuple(c.scale(ri, x) for c, ri, x in zip(self.components, r, a))


@dataclass(frozen=True)
class ZModule:
    """The Z-module Z; submodules are encoded as integers t >= 0 (meaning tZ)."""

    def __str__(self) -> str:
        return "Z"

    @property
    def ring(self) -> IntegerRing:
        return IntegerRing()


AnyModule = FinModule | ProductModule | ZModule


def module_from_factors(ring: Ring, factors) -> FinModule:
    """Build a finite module, normalizing away trivial factors.

    A declaration over Z (finite factors as a Z-module) is re-based over Z/e
    with e the exponent, so symbolic multiplicative subsets of Z reduce
    consistently mod e downstream.  (The Z-declared zero module has exponent 1
    and is re-based over Z/2; every zero module behaves identically anyway.)
    """
    cleaned = tuple(int(d) for d in factors if int(d) != 1)
    if any(d < 1 for d in cleaned):
        raise ValueError("factors must be positive")
    if isinstance(ring, IntegerRing):
        e = lcm(*cleaned) if cleaned else 1
        return FinModule(ModularRing(max(e, 2)), cleaned)
    if isinstance(ring, ModularRing):
        return FinModule(ring, cleaned)
    raise UnsupportedRingError("use product_module for product rings")


def product_module(*components: FinModule) -> ProductModule:
    from .rings import product_ring

    return ProductModule(product_ring(*(c.ring for c in components)), tuple(components))


@dataclass(frozen=True)
class Submodule:
    """Canonical Hermite basis of the preimage lattice of a submodule."""

    module: FinModule
    basis: Matrix

    def __str__(self) -> str:
        gens = ",".join("(" + ",".join(map(str, r)) + ")" for r in self.basis)
        return f"<{gens}>"

    @property
    def order(self) -> int:
        covol = prod(self.basis[i][i] for i in range(len(self.basis)))
        return self.module.order // covol

    def contains(self, x) -> bool:
        return intmat.in_rowspan(self.basis, x)

    def elements(self):
        return [x for x in self.module.elements() if self.contains(x)]


@dataclass(frozen=True)
class ProductSubmodule:
    module: ProductModule
    parts: tuple[Submodule, ...]

    def __str__(self) -> str:
        return " x ".join(str(p) for p in self.parts)

    @property
    def order(self) -> int:
        return prod(p.order for p in self.parts)

    def contains(self, x) -> bool:
        return all(p.contains(v) for p, v in zip(self.parts, x))

    def elements(self):
        return list(itertools.product(*(p.elements() for p in self.parts)))


AnySubmodule = Submodule | ProductSubmodule


def _relation_rows(m: FinModule):
    k = m.rank
    return [tuple(m.factors[i] if j == i else 0 for j in range(k)) for i in range(k)]


def _submodule(m: FinModule, rows) -> Submodule:
    basis = intmat.hnf_square(list(rows) + _relation_rows(m), m.rank)
    return Submodule(m, basis)


def submodule_from_generators(m: AnyModule, gens) -> AnySubmodule:
    if isinstance(m, ProductModule):
        per = tuple(
            submodule_from_generators(comp, [g[i] for g in gens])
            for i, comp in enumerate(m.components)
        )
        return ProductSubmodule(m, per)
    rows = []
    for g in gens:
        if len(g) != m.rank:
            raise ValueError(f"generator {g!r} has the wrong length for {m}")
        rows.append(tuple(int(v) for v in g))
    return _submodule(m, rows)


@cache
def zero_submodule(m: AnyModule) -> AnySubmodule:
    if isinstance(m, ProductModule):
        return ProductSubmodule(m, tuple(zero_submodule(c) for c in m.components))
    return _submodule(m, [])


@cache
def full_submodule(m: AnyModule) -> AnySubmodule:
    if isinstance(m, ProductModule):
        return ProductSubmodule(m, tuple(full_submodule(c) for c in m.components))
    return _submodule(m, intmat.identity(m.rank))


def _require_same_parent(n: AnySubmodule, k: AnySubmodule):
    if n.module != k.module:
        raise RingMismatchError("submodules of different parent modules")


def sub_sum(n: AnySubmodule, k: AnySubmodule) -> AnySubmodule:
    _require_same_parent(n, k)
    if isinstance(n, ProductSubmodule):
        return ProductSubmodule(
            n.module, tuple(sub_sum(a, b) for a, b in zip(n.parts, k.parts))
        )
    return _submodule(n.module, n.basis + k.basis)


def sub_intersect(n: AnySubmodule, k: AnySubmodule) -> AnySubmodule:
    _require_same_parent(n, k)
    if isinstance(n, ProductSubmodule):
        return ProductSubmodule(
            n.module, tuple(sub_intersect(a, b) for a, b in zip(n.parts, k.parts))
        )
    basis = intmat.lattice_intersect(n.basis, k.basis, n.module.rank)
    return Submodule(n.module, basis)


def sub_leq(n: AnySubmodule, k: AnySubmodule) -> bool:
    _require_same_parent(n, k)
    if isinstance(n, ProductSubmodule):
        return all(sub_leq(a, b) for a, b in zip(n.parts, k.parts))
    return all(intmat.in_rowspan(k.basis, row) for row in n.basis)


def _check_ideal_ring(i: Ideal, m: AnyModule):
    if i.ring != m.ring:
        raise RingMismatchError("ideal over a different ring than the module")


def ideal_action(i: Ideal, n: AnySubmodule) -> AnySubmodule:
    """The submodule IN."""
    _check_ideal_ring(i, n.module)
    if isinstance(n, ProductSubmodule):
        comps = tuple(
            ideal_action(ideal(part.module.ring, i.data[t]), part)
            for t, part in enumerate(n.parts)
        )
        return ProductSubmodule(n.module, comps)
    d = i.data
    rows = [tuple(d * v for v in row) for row in n.basis]
    return _submodule(n.module, rows)


def scalar_submodule(s, n: AnySubmodule) -> AnySubmodule:
    """The submodule sN for a ring element s."""
    if isinstance(n, ProductSubmodule):
        comps = tuple(scalar_submodule(si, part) for si, part in zip(s, n.parts))
        return ProductSubmodule(n.module, comps)
    rows = [tuple(s * v for v in row) for row in n.basis]
    return _submodule(n.module, rows)


def colon_into(n: AnySubmodule, i: Ideal) -> AnySubmodule:
    """(N :_M I) = {m : Im ⊆ N}; for I = (d) this is {x : d·x ∈ L_N}."""
    _check_ideal_ring(i, n.module)
    if isinstance(n, ProductSubmodule):
        comps = tuple(
            colon_into(part, ideal(part.module.ring, i.data[t]))
            for t, part in enumerate(n.parts)
        )
        return ProductSubmodule(n.module, comps)
    m = n.module
    d = i.data
    if d == 1:
        return n
    scaled = intmat.lattice_intersect(intmat.diagonal([d] * m.rank), n.basis, m.rank)
    rows = [tuple(v // d for v in row) for row in scaled]
    return _submodule(m, rows)


def colon_ring(n: AnySubmodule, k: AnySubmodule) -> Ideal:
    """(N :_R K) = {r : rK ⊆ N}, canonical generator per coordinate."""
    _require_same_parent(n, k)
    if isinstance(n, ProductSubmodule):
        data = tuple(colon_ring(a, b).data for a, b in zip(n.parts, k.parts))
        return ideal(n.module.ring, data)
    m = n.module
    c = 1
    for row in k.basis:
        c = lcm(c, intmat.multiple_order(n.basis, row))
    if m.ring.n % c:
        raise AssertionError("colon generator must divide the characteristic")
    return ideal(m.ring, c)


def annihilator(n: AnySubmodule) -> Ideal:
    return colon_ring(zero_submodule(n.module), n)


class QuotientModule:
    """M/N in invariant-factor form with the submodule correspondence.

    The Smith form U·H_N·V = diag(s) turns x ↦ x·V into an isomorphism
    Z^k / L_N → ⊕ Z/s_i; coordinates with s_i = 1 are dropped.  Projection and
    lift restrict to the order isomorphism between submodules of M containing
    N and submodules of M/N.
    """

    def __init__(self, source, by):
        if by.module != source:
            raise RingMismatchError("submodule of a different module")
        self.source = source
        self.by = by
        if isinstance(source, ProductModule):
            self._cq = tuple(
                QuotientModule(c, p) for c, p in zip(source.components, by.parts)
            )
            self.module = ProductModule(
                source.ring, tuple(q.module for q in self._cq)
            )
            return
        _, s, v = intmat.smith_normal_form(by.basis)
        self._diag = tuple(s[i][i] for i in range(source.rank))
        self._kept = tuple(i for i, si in enumerate(self._diag) if si >= 2)
        self.module = FinModule(source.ring, tuple(self._diag[i] for i in self._kept))
        self._v = v
        self._vinv = intmat.unimodular_inverse(v)

    def project_element(self, x):
        if isinstance(self.source, ProductModule):
            return tuple(q.project_element(v) for q, v in zip(self._cq, x))
        y = intmat.vec_mat(x, self._v)
        return tuple(y[i] % self._diag[i] for i in self._kept)

    def project_submodule(self, sub: AnySubmodule) -> AnySubmodule:
        if isinstance(self.source, ProductModule):
            parts = tuple(
                q.project_submodule(p) for q, p in zip(self._cq, sub.parts)
            )
            return ProductSubmodule(self.module, parts)
        rows = [intmat.vec_mat(r, self._v) for r in sub.basis]
        proj = [tuple(r[i] for i in self._kept) for r in rows]
        return _submodule(self.module, proj)

    def lift_submodule(self, sub: AnySubmodule) -> AnySubmodule:
        if isinstance(self.source, ProductModule):
            parts = tuple(
                q.lift_submodule(p) for q, p in zip(self._cq, sub.parts)
            )
            return ProductSubmodule(self.source, parts)
        k = self.source.rank
        rows = []
        for r in sub.basis:
            wide = [0] * k
            for pos, i in enumerate(self._kept):
                wide[i] = r[pos]
            rows.append(wide)
        for i in range(k):
            if i not in self._kept:
                rows.append([1 if j == i else 0 for j in range(k)])
        rows = [intmat.vec_mat(r, self._vinv) for r in rows]
        return _submodule(self.source, rows)


def quotient_module(m: AnyModule, n: AnySubmodule) -> QuotientModule:
    return QuotientModule(m, n)


class SubmoduleAsModule:
    """A submodule N of M presented as a module in its own right.

    Writing elements of N in coordinates z w.r.t. its basis H_N identifies N
    with Z^k / span(C), where the rows of C express the relation rows D in the
    H_N basis.  Smith-reducing C gives the abstract invariant factors;
    `restrict` carries submodules of M inside N to the abstract module and
    `embed` carries them back.
    """

    def __init__(self, n: Submodule):
        m = n.module
        self.parent = m
        self.of = n
        c_rows = tuple(
            tuple(intmat.rowspan_coords(n.basis, rel)) for rel in _relation_rows(m)
        )
        _, s, v = intmat.smith_normal_form(c_rows)
        self._diag = tuple(s[i][i] for i in range(m.rank))
        self._kept = tuple(i for i, si in enumerate(self._diag) if si >= 2)
        self.module = FinModule(m.ring, tuple(self._diag[i] for i in self._kept))
        self._v = v
        self._vinv = intmat.unimodular_inverse(v)

    def restrict(self, sub: Submodule) -> Submodule:
        if not sub_leq(sub, self.of):
            raise ValueError("submodule is not inside N")
        rows = []
        for r in sub.basis:
            coords = intmat.rowspan_coords(self.of.basis, r)
            rows.append(intmat.vec_mat(coords, self._v))
        proj = [tuple(r[i] for i in self._kept) for r in rows]
        return _submodule(self.module, proj)

    def embed(self, sub: Submodule) -> Submodule:
        k = self.parent.rank
        rows = []
        for r in sub.basis:
            wide = [0] * k
            for pos, i in enumerate(self._kept):
                wide[i] = r[pos]
            rows.append(wide)
        for i in range(k):
            if i not in self._kept:
                rows.append([1 if j == i else 0 for j in range(k)])
        rows = [intmat.vec_mat(r, self._vinv) for r in rows]
        rows = [intmat.vec_mat(r, self.of.basis) for r in rows]
        return _submodule(self.parent, rows)


def submodule_as_module(n: Submodule) -> SubmoduleAsModule:
    return SubmoduleAsModule(n)


def s_torsion(m: AnyModule, s: MultSet, cross_check: bool | None = None) -> AnySubmodule:
    """{x : sx = 0 for some s in S} = (0 :_M <s*>) with s* the maximal multiple.

    The colon route and an elementwise scan are compared on small modules;
    a disagreement would be an implementation bug, not a data condition.
    """
    if s.ring != m.ring:
        raise RingMismatchError("multiplicative set over a different ring")
    star = satisfies_max_multiple(s)
    result = colon_into(zero_submodule(m), ideal_from_generators(m.ring, [star]))
    if cross_check is None:
        cross_check = m.order <= 512
    if cross_check:
        zero = m.zero_element
        direct = {
            x for x in m.elements() if any(m.scale(t, x) == zero for t in s.elements)
        }
        if direct != set(result.elements()):
            raise AssertionError("s_torsion cross-check failed")
    return result


class LocalizedModule:
    """S⁻¹M modeled as M/(S-torsion) over the localized ring.

    `map_submodule` sends N ≤ M to the model of S⁻¹N; `map_ideal` sends an
    ideal of R to its image in the localized ring.  `trivial` flags 0 ∈ S.
    """

    def __init__(self, m: AnyModule, s: MultSet):
        self.source = m
        self.localization = localize(m.ring, s)
        if self.localization.trivial:
            self.torsion = None
            self.module = None
            return
        self.torsion = s_torsion(m, s, cross_check=False)
        self._quo = quotient_module(m, self.torsion)
        loc = self.localization
        if isinstance(m, ProductModule):
            kept = loc.quotient.kept
            ring2 = loc.ring
            self._kept = kept
            comps = tuple(
                FinModule(ring2.components[pos], self._quo.module.components[i].factors)
                for pos, i in enumerate(kept)
            )
            self.module = ProductModule(ring2, comps)
        else:
            self.module = FinModule(loc.ring, self._quo.module.factors)

    @property
    def trivial(self) -> bool:
        return self.localization.trivial

    @property
    def ring(self):
        return self.localization.ring

    def map_submodule(self, n: AnySubmodule) -> AnySubmodule:
        if self.trivial:
            raise ValueError("localization collapsed to the zero module")
        full = self._quo.project_submodule(n)
        if isinstance(self.source, ProductModule):
            parts = tuple(
                Submodule(self.module.components[pos], full.parts[i].basis)
                for pos, i in enumerate(self._kept)
            )
            return ProductSubmodule(self.module, parts)
        return Submodule(self.module, full.basis)

    def map_ideal(self, i: Ideal) -> Ideal:
        if self.trivial:
            raise ValueError("localization collapsed to the zero ring")
        return self.localization.quotient.ideal_image(i)

    def map_multset(self, s: MultSet) -> MultSet:
        q = self.localization.quotient
        return MultSet(q.ring, frozenset(q.project(x) for x in s.elements))


def localize_module(m: AnyModule, s: MultSet) -> LocalizedModule:
    return LocalizedModule(m, s)


# ---------------------------------------------------------------------------
# Closed forms for the Z-module Z.  Submodules are tZ, ideals are cZ; the four
# operator values:
#
#   Ann(tZ)       = 0Z                 for t > 0;      Z  for t = 0
#   (0 :_Z cZ)    = 0Z                 for c > 0;      Z  for c = 0
#   (tZ :_Z cZ)   = (t / gcd(t, c)) Z  for c > 0;      Z  for c = 0
#   (tZ :_R kZ)   = (t / gcd(t, k)) Z  for k > 0;      Z  for k = 0
# ---------------------------------------------------------------------------


def _check_nonneg(*vals):
    for v in vals:
        if v < 0:
            raise ValueError("Z-side submodules and ideals use nonnegative generators")


def z_annihilator(t: int) -> Ideal:
    _check_nonneg(t)
    return ideal(IntegerRing(), 0 if t > 0 else 1)


def z_colon_into(t: int, c: int) -> int:
    """(tZ :_Z cZ) as a submodule generator."""
    _check_nonneg(t, c)
    if c == 0:
        return 1
    if t == 0:
        return 0
    return t // gcd(t, c)


def z_colon_ring(t: int, k: int) -> Ideal:
    """(tZ :_R kZ) as an ideal of Z."""
    _check_nonneg(t, k)
    if k == 0:
        return ideal(IntegerRing(), 1)
    if t == 0:
        return ideal(IntegerRing(), 0)
    return ideal(IntegerRing(), t // gcd(t, k))


def z_ideal_action(c: int, t: int) -> int:
    _check_nonneg(c, t)
    return c * t


def z_sub_sum(t: int, k: int) -> int:
    _check_nonneg(t, k)
    return gcd(t, k)


def z_sub_intersect(t: int, k: int) -> int:
    _check_nonneg(t, k)
    return lcm(t, k) if t and k else 0
