"""Full submodule-lattice enumeration, completely irreducible detection,
irredundant intersection decompositions, and an independent element-set oracle.

Enumeration strategy: split the module into p-primary components, enumerate
each component's lattice by a closure fixpoint (start from 0, adjoin single
elements, dedup by canonical Hermite basis), then glue across primes via CRT
lifts; the subgroup lattice of a finite abelian group is the product of the
lattices of its p-components.

The oracle (`naive_oracle`) never touches the lattice machinery: it closes raw
element sets under scalar action and addition, so the two routes agreeing is a
meaningful check of the canonical-form arithmetic.
"""

from __future__ import annotations

import hashlib
import json
import os
from functools import cached_property

import itertools

from .intmat import hnf_square
from .modules import (
    AnyModule,
    AnySubmodule,
    FinModule,
    ProductModule,
    ProductSubmodule,
    Submodule,
    _submodule,
    sub_leq,
)
from .rings import factorize

DEFAULT_CAP = 100_000
CACHE_FORMAT = 1


class LatticeCapExceeded(RuntimeError):
    pass


def _sort_key(sub: AnySubmodule):
    if isinstance(sub, ProductSubmodule):
        return (sub.order, tuple(p.basis for p in sub.parts))
    return (sub.order, sub.basis)


class SubmoduleLattice:
    """The complete submodule lattice, in canonical (order, basis) order."""

    def __init__(self, parent: AnyModule, all_subs):
        self.parent = parent
        self.all = tuple(sorted(all_subs, key=_sort_key))
        self.index = {sub: i for i, sub in enumerate(self.all)}

    def __len__(self) -> int:
        return len(self.all)

    @cached_property
    def leq(self):
        """leq[i][j] is True iff all[i] ⊆ all[j]."""
        n = len(self.all)
        orders = [s.order for s in self.all]
        table = [[False] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                if i == j:
                    table[i][j] = True
                elif orders[j] % orders[i] == 0 and sub_leq(self.all[i], self.all[j]):
                    table[i][j] = True
        return table

    @cached_property
    def covers(self):
        """Hasse pairs (i, j): all[j] covers all[i] (immediate containment)."""
        n = len(self.all)
        leq = self.leq
        pairs = []
        for i in range(n):
            ups = [j for j in range(n) if j != i and leq[i][j]]
            for j in ups:
                if not any(l != j and leq[l][j] for l in ups):
                    pairs.append((i, j))
        return tuple(pairs)

    @cached_property
    def covers_of(self):
        out = {i: [] for i in range(len(self.all))}
        for i, j in self.covers:
            out[i].append(j)
        return out

    @cached_property
    def completely_irreducible_indexes(self):
        """Proper submodules whose strict over-set meets them at a unique cover.

        In a finite lattice a proper N is completely irreducible exactly when
        the intersection of all strictly larger submodules differs from N,
        i.e. when N has a unique cover.
        """
        top = len(self.all) - 1  # the full module sorts last
        return tuple(
            i
            for i in range(len(self.all))
            if i != top and len(self.covers_of[i]) == 1
        )

    def completely_irreducibles(self):
        return tuple(self.all[i] for i in self.completely_irreducible_indexes)


def _p_component_bases(factors: tuple[int, ...], cap: int):
    """All sublattice bases of ⊕ Z/f_i by closure fixpoint (any factor list)."""
    k = len(factors)
    if k == 0:
        return [()]  # the empty basis of Z^0
    relations = tuple(
        tuple(factors[i] if j == i else 0 for j in range(k)) for i in range(k)
    )
    zero = hnf_square(relations, k)
    found = {zero}
    frontier = [zero]
    elements = list(itertools.product(*(range(f) for f in factors)))
    from .intmat import in_rowspan

    while frontier:
        fresh = []
        for base in frontier:
            for m in elements:
                if in_rowspan(base, m):
                    continue
                b2 = hnf_square(base + (m,), k)
                if b2 not in found:
                    found.add(b2)
                    fresh.append(b2)
                    if len(found) > cap:
                        raise LatticeCapExceeded(
                            f"more than {cap} submodules; raise the cap to proceed"
                        )
        frontier = fresh
    return sorted(found)


from functools import cache


@cache
def _p_component_bases_cached(factors: tuple[int, ...]):
    # keyed by the factor shape alone: the subgroup lattice of ⊕ Z/f_i does
    # not depend on which ambient ring the module lives over
    return _p_component_bases(factors, DEFAULT_CAP)


def _crt_lift(residue: int, q: int, m: int) -> int:
    """The x mod qm with x ≡ residue (mod q) and x ≡ 0 (mod m), gcd(q, m) = 1."""
    if m == 1:
        return residue % q
    inv = pow(m % q, -1, q)
    return (residue * m * inv) % (q * m)


def _modular_lattice_bases(m: FinModule, cap: int):
    k = m.rank
    if k == 0:
        return [()]
    primes = sorted(factorize(m.exponent))
    per_prime = []
    for p in primes:
        coords = []
        pparts = []
        for i, d in enumerate(m.factors):
            e = 0
            dd = d
            while dd % p == 0:
                e += 1
                dd //= p
            if e:
                coords.append(i)
                pparts.append(p**e)
        per_prime.append((p, coords, tuple(pparts)))
    component_bases = []
    total = 1
    for p, coords, pparts in per_prime:
        if cap >= DEFAULT_CAP:
            bases = _p_component_bases_cached(pparts)
        else:
            bases = _p_component_bases(pparts, cap)
        total *= len(bases)
        if total > cap:
            raise LatticeCapExceeded(
                f"more than {cap} submodules; raise the cap to proceed"
            )
        component_bases.append((coords, pparts, bases))
    out = []
    for combo in itertools.product(*(b for _, _, b in component_bases)):
        rows = []
        for (coords, pparts, _), base in zip(component_bases, combo):
            for row in base:
                wide = [0] * k
                for pos, i in enumerate(coords):
                    q = pparts[pos]
                    wide[i] = _crt_lift(row[pos], q, m.factors[i] // q)
                rows.append(tuple(wide))
        out.append(_submodule(m, rows).basis)
    return out


def _cache_path(cache_dir: str, m: AnyModule) -> str:
    key = repr(m)
    digest = hashlib.sha256(key.encode()).hexdigest()[:24]
    return os.path.join(cache_dir, f"lattice_{digest}.json")


def _cache_load(cache_dir: str, m: FinModule):
    path = _cache_path(cache_dir, m)
    try:
        with open(path, "r", encoding="utf-8") as fh:
            blob = json.load(fh)
    except (OSError, ValueError):
        return None
    if blob.get("format") != CACHE_FORMAT or blob.get("module") != repr(m):
        return None
    return [tuple(tuple(int(v) for v in row) for row in basis) for basis in blob["bases"]]


def _cache_store(cache_dir: str, m: FinModule, bases):
    os.makedirs(cache_dir, exist_ok=True)
    path = _cache_path(cache_dir, m)
    blob = {
        "format": CACHE_FORMAT,
        "module": repr(m),
        "bases": [[list(row) for row in basis] for basis in bases],
    }
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(blob, fh)
    os.replace(tmp, path)


_memory_cache: dict = {}
_default_cache_dir: str | None = None


def set_default_cache_dir(path: str | None):
    """Directory for the on-disk lattice cache (None disables it)."""
    global _default_cache_dir
    _default_cache_dir = path


def enumerate_submodules(
    m: AnyModule, cap: int = DEFAULT_CAP, cache_dir: str | None = None
) -> SubmoduleLattice:
    """The complete submodule lattice of a finite module."""
    if cache_dir is None:
        cache_dir = _default_cache_dir
    cached = _memory_cache.get(m)
    if cached is not None:
        if len(cached) > cap:
            raise LatticeCapExceeded(f"lattice has {len(cached)} > cap {cap} submodules")
        return cached
    if isinstance(m, ProductModule):
        comp_lattices = [
            enumerate_submodules(c, cap=cap, cache_dir=cache_dir) for c in m.components
        ]
        count = 1
        for cl in comp_lattices:
            count *= len(cl)
        if count > cap:
            raise LatticeCapExceeded(f"lattice has {count} > cap {cap} submodules")
        subs = [
            ProductSubmodule(m, parts)
            for parts in itertools.product(*(cl.all for cl in comp_lattices))
        ]
        lattice = SubmoduleLattice(m, subs)
    else:
        bases = None
        if cache_dir:
            bases = _cache_load(cache_dir, m)
        if bases is None:
            bases = _modular_lattice_bases(m, cap)
            if cache_dir:
                _cache_store(cache_dir, m, bases)
        if len(bases) > cap:
            raise LatticeCapExceeded(f"lattice has {len(bases)} > cap {cap} submodules")
        lattice = SubmoduleLattice(m, [Submodule(m, b) for b in bases])
    _memory_cache[m] = lattice
    return lattice


def naive_oracle(m: AnyModule, max_order: int = 4096):
    """Every submodule as a frozen set of elements, by raw element arithmetic.

    Closes element sets under scalar action and addition only; no lattice or
    canonical-form machinery is involved, so this is an independent route to
    the same answer as `enumerate_submodules`.
    """
    if m.order > max_order:
        raise LatticeCapExceeded(f"oracle guard: |M| = {m.order} > {max_order}")
    elements = list(m.elements())
    ring_elements = list(m.ring.elements())
    zero = m.zero_element
    bottom = frozenset({zero})

    def adjoin(subgroup, x):
        # submodule generated by subgroup ∪ {x}: shift by the cyclic module Rx
        shifts = {m.scale(r, x) for r in ring_elements}
        return frozenset(m.add(a, t) for a in subgroup for t in shifts)

    found = {bottom}
    frontier = [bottom]
    while frontier:
        fresh = []
        for sub in frontier:
            for x in elements:
                if x in sub:
                    continue
                bigger = adjoin(sub, x)
                if bigger not in found:
                    found.add(bigger)
                    fresh.append(bigger)
        frontier = fresh
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def completely_irreducibles(m: AnyModule, cap: int = DEFAULT_CAP):
    return enumerate_submodules(m, cap=cap).completely_irreducibles()


def ci_decomposition(n: AnySubmodule, cap: int = DEFAULT_CAP):
    """An irredundant family of completely irreducibles intersecting to N.

    The full module gets the empty family (empty intersection convention).
    Deterministic: candidates are scanned in lattice order and dropped
    greedily while the remaining intersection still equals N.
    """
    from .modules import full_submodule, sub_intersect

    m = n.module
    lattice = enumerate_submodules(m, cap=cap)
    if n == full_submodule(m):
        return ()
    candidates = [
        ci for ci in lattice.completely_irreducibles() if sub_leq(n, ci)
    ]

    def intersect_all(subs):
        acc = full_submodule(m)
        for s in subs:
            acc = sub_intersect(acc, s)
        return acc

    if intersect_all(candidates) != n:
        raise AssertionError("completely irreducibles above N must meet in N")
    chosen = list(candidates)
    i = 0
    while i < len(chosen):
        trial = chosen[:i] + chosen[i + 1 :]
        if intersect_all(trial) == n:
            chosen = trial
        else:
            i += 1
    return tuple(chosen)
