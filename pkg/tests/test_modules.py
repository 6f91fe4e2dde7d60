import itertools
import random

import pytest
import hypothesis.strategies as st
from hypothesis import given

from coidem.lattice import enumerate_submodules
from coidem.modules import (
    FinModule,
    annihilator,
    colon_into,
    colon_ring,
    full_submodule,
    ideal_action,
    localize_module,
    module_from_factors,
    product_module,
    quotient_module,
    s_torsion,
    scalar_submodule,
    sub_intersect,
    sub_leq,
    sub_sum,
    submodule_as_module,
    submodule_from_generators,
    z_annihilator,
    z_colon_into,
    z_colon_ring,
    z_ideal_action,
    z_sub_intersect,
    z_sub_sum,
    zero_submodule,
)
from coidem.multsets import MultSet, closure_in_ring
from coidem.rings import (
    ModularRing,
    Z,
    all_ideals,
    ideal,
    ideal_intersect,
    ideal_leq,
    ideal_product,
    unit_ideal,
    zero_ideal,
)

Z12 = ModularRing(12)
Z4 = ModularRing(4)
Z6 = ModularRing(6)
Z2 = ModularRing(2)

M12 = module_from_factors(Z12, [12])
M4 = module_from_factors(Z4, [4])
M42 = module_from_factors(Z4, [4, 2])
M22 = module_from_factors(Z2, [2, 2])


def small_modules(max_order=16, moduli=(2, 3, 4, 6, 8, 9, 12)):
    out = []
    for n in moduli:
        ring = ModularRing(n)
        divs = [d for d in range(2, n + 1) if n % d == 0]
        lists = [()]
        for _ in range(3):
            lists = lists + [
                t + (d,) for t in lists for d in divs if (not t or d >= t[-1])
            ]
        seen = set()
        for t in lists:
            if t and t not in seen:
                seen.add(t)
                m = FinModule(ring, t)
                if 2 <= m.order <= max_order:
                    out.append(m)
    return out


def test_module_from_factors():
    assert module_from_factors(Z4, [2, 4]).factors == (2, 4)
    rebased = module_from_factors(Z, [2, 2])
    assert rebased.ring == Z2 and rebased.factors == (2, 2)
    assert module_from_factors(Z6, [1, 6]).factors == (6,)
    with pytest.raises(ValueError):
        module_from_factors(Z4, [3])


def test_submodule_from_generators_examples():
    n2 = submodule_from_generators(M4, [(2,)])
    assert sorted(n2.elements()) == [(0,), (2,)]
    line = submodule_from_generators(M22, [(1, 0)])
    assert sorted(line.elements()) == [(0, 0), (1, 0)]
    cyc = submodule_from_generators(M42, [(1, 1)])
    assert sorted(cyc.elements()) == sorted([(0, 0), (1, 1), (2, 0), (3, 1)])
    with pytest.raises(ValueError):
        submodule_from_generators(M4, [(1, 0)])


def test_sum_intersect_examples():
    m6 = module_from_factors(Z6, [6])
    assert sub_sum(
        submodule_from_generators(m6, [(2,)]), submodule_from_generators(m6, [(3,)])
    ) == full_submodule(m6)
    a4 = submodule_from_generators(M12, [(4,)])
    a6 = submodule_from_generators(M12, [(6,)])
    assert sub_intersect(a4, a6) == zero_submodule(M12)
    assert sub_sum(a4, a4) == a4


def test_ideal_action_examples():
    n3 = submodule_from_generators(M12, [(3,)])
    assert ideal_action(ideal(Z12, 2), n3) == submodule_from_generators(M12, [(6,)])
    assert ideal_action(zero_ideal(Z12), n3) == zero_submodule(M12)
    assert ideal_action(unit_ideal(Z12), n3) == n3


def test_colon_into_examples():
    assert colon_into(zero_submodule(M12), ideal(Z12, 2)) == submodule_from_generators(
        M12, [(6,)]
    )
    n2 = submodule_from_generators(M12, [(2,)])
    assert colon_into(n2, ideal(Z12, 3)) == n2
    assert colon_into(n2, zero_ideal(Z12)) == full_submodule(M12)


def test_colon_ring_and_annihilator_examples():
    n2 = submodule_from_generators(M4, [(2,)])
    assert colon_ring(n2, full_submodule(M4)) == ideal(Z4, 2)
    m24 = module_from_factors(Z4, [2, 4])
    assert annihilator(full_submodule(m24)) == zero_ideal(Z4)
    assert annihilator(zero_submodule(m24)) == unit_ideal(Z4)
    line = submodule_from_generators(M22, [(1, 0)])
    assert annihilator(line) == zero_ideal(Z2)
    assert colon_ring(n2, n2) == unit_ideal(Z4)


def test_scalar_submodule_examples():
    assert scalar_submodule(3, full_submodule(M4)) == full_submodule(M4)
    assert scalar_submodule(2, full_submodule(M4)) == submodule_from_generators(
        M4, [(2,)]
    )
    assert scalar_submodule(0, full_submodule(M4)) == zero_submodule(M4)


def test_quotient_examples():
    assert quotient_module(M12, submodule_from_generators(M12, [(4,)])).module.factors == (4,)
    diag = submodule_from_generators(M22, [(1, 1)])
    assert quotient_module(M22, diag).module.factors == (2,)
    assert quotient_module(M22, full_submodule(M22)).module.factors == ()


def test_s_torsion_examples():
    s2 = closure_in_ring(Z12, [2])
    assert s_torsion(M12, s2) == submodule_from_generators(M12, [(3,)])
    s_units = MultSet(Z12, frozenset({1, 5, 7, 11}))
    assert s_torsion(M12, s_units) == zero_submodule(M12)
    s0 = closure_in_ring(Z12, [0])
    assert s_torsion(M12, s0) == full_submodule(M12)


def test_localize_module_examples():
    s2 = closure_in_ring(Z12, [2])
    lm = localize_module(M12, s2)
    assert lm.ring == ModularRing(3)
    assert lm.module.factors == (3,)
    s13 = MultSet(Z4, frozenset({1, 3}))
    assert localize_module(M4, s13).module == M4
    s0 = closure_in_ring(Z6, [0])
    assert localize_module(module_from_factors(Z6, [6]), s0).trivial


def test_z_closed_forms():
    assert z_annihilator(5) == ideal(Z, 0)
    assert z_annihilator(0) == ideal(Z, 1)
    assert z_colon_into(0, 5) == 0 and z_colon_into(0, 0) == 1
    assert z_colon_into(6, 2) == 3
    assert z_colon_ring(6, 2) == ideal(Z, 3)
    assert z_ideal_action(2, 3) == 6
    assert z_sub_sum(4, 6) == 2 and z_sub_intersect(4, 6) == 12
    assert z_sub_intersect(0, 4) == 0
    # (0 : Ann^2(tZ)) = Z for t > 0: each tZ is non-coidempotent classically
    for t in (1, 2, 5):
        ann = z_annihilator(t)
        assert z_colon_into(0, ann.data) == 1


# -- laws ---------------------------------------------------------------------


def test_galois_adjunction_exhaustive_small():
    for m in small_modules(max_order=12):
        subs = enumerate_submodules(m).all
        for i in all_ideals(m.ring):
            for n in subs:
                action = ideal_action(i, n)
                for k in subs:
                    lhs = sub_leq(action, k)
                    mid = ideal_leq(i, colon_ring(k, n))
                    rhs = sub_leq(n, colon_into(k, i))
                    assert lhs == mid == rhs


def test_automatic_inclusions_and_annihilator_laws():
    for m in small_modules(max_order=12):
        subs = enumerate_submodules(m).all
        full = full_submodule(m)
        zero = zero_submodule(m)
        for n in subs:
            ann = annihilator(n)
            ann2 = ideal_product(ann, ann)
            assert sub_leq(n, colon_into(zero, ann2))
            c = colon_ring(n, full)
            assert sub_leq(ideal_action(ideal_product(c, c), full), n)
            for k in subs:
                assert annihilator(sub_sum(n, k)) == ideal_intersect(
                    annihilator(n), annihilator(k)
                )
                assert ideal_leq(
                    ideal_product(annihilator(n), annihilator(k)),
                    annihilator(sub_sum(n, k)),
                )


@given(st.sampled_from([(2, (2,) * 5), (8, (2, 8)), (12, (2, 2, 3)), (16, (4, 4))]),
       st.integers(0, 10**6))
def test_adjunction_sampled_midsize(spec, seed):
    n, factors = spec
    m = FinModule(ModularRing(n), factors)
    rng = random.Random(seed)
    subs = enumerate_submodules(m).all
    ideals = all_ideals(m.ring)
    i = rng.choice(ideals)
    a, b = rng.choice(subs), rng.choice(subs)
    assert sub_leq(ideal_action(i, a), b) == ideal_leq(i, colon_ring(b, a))
    assert sub_leq(ideal_action(i, a), b) == sub_leq(a, colon_into(b, i))


def test_quotient_correspondence_is_order_iso():
    for m in small_modules(max_order=16):
        lat = enumerate_submodules(m)
        for n in lat.all:
            q = quotient_module(m, n)
            over = [s for s in lat.all if sub_leq(n, s)]
            images = [q.project_submodule(s) for s in over]
            assert len(set(images)) == len(over)  # injective over N
            for s, img in zip(over, images):
                assert q.lift_submodule(img) == s
            qlat = enumerate_submodules(q.module)
            assert len(qlat) == len(over)  # surjective
            for a, b in itertools.product(over[:6], over[:6]):
                assert q.project_submodule(sub_sum(a, b)) == sub_sum(
                    q.project_submodule(a), q.project_submodule(b)
                )
                assert q.project_submodule(sub_intersect(a, b)) == sub_intersect(
                    q.project_submodule(a), q.project_submodule(b)
                )


def test_quotient_correspondence_sampled_jumbo():
    m = FinModule(Z2, (2,) * 5)
    lat = enumerate_submodules(m)
    rng = random.Random(7)
    for _ in range(5):
        n = rng.choice(lat.all)
        q = quotient_module(m, n)
        over = [s for s in lat.all if sub_leq(n, s)]
        sample = rng.sample(over, min(8, len(over)))
        for s in sample:
            assert q.lift_submodule(q.project_submodule(s)) == s
        assert len(enumerate_submodules(q.module)) == len(over)


def test_submodule_as_module_roundtrip():
    for m in small_modules(max_order=16):
        lat = enumerate_submodules(m)
        for n in lat.all:
            abstract = submodule_as_module(n)
            assert abstract.module.order == n.order
            inside = [s for s in lat.all if sub_leq(s, n)]
            for s in inside:
                assert abstract.embed(abstract.restrict(s)) == s
            assert len(enumerate_submodules(abstract.module)) == len(inside)


def test_product_module_ops_are_componentwise():
    ma = module_from_factors(Z2, [2, 2])
    mb = module_from_factors(ModularRing(3), [3])
    mp = product_module(ma, mb)
    np = submodule_from_generators(mp, [((1, 0), (0,)), ((0, 0), (1,))])
    assert np.order == 6
    assert annihilator(np).data == (2, 3)  # kills the (1,0) line, kills Z/3 never
    q = quotient_module(mp, np)
    assert q.module.order == mp.order // np.order
    lat = enumerate_submodules(mp)
    assert len(lat) == len(enumerate_submodules(ma)) * len(enumerate_submodules(mb))


def test_z_declared_reduction_soundness():
    # evaluating the coidempotency inclusion with explicit integer scalars
    # agrees with the reduced computation over Z/e
    from coidem.multsets import reduce_presentation, ZComplementOfPrimes, ZGeneratedBy
    from coidem.predicates import coidempotent

    for factors in [(2, 2), (4,), (2, 4), (6,)]:
        m = module_from_factors(Z, factors)
        e = m.ring.n
        for pres in (ZComplementOfPrimes((2,)), ZGeneratedBy((2,)), ZGeneratedBy((3,))):
            reduced = reduce_presentation(pres, e)
            for n in enumerate_submodules(m).all:
                verdict = coidempotent(m, n, pres)
                ann = annihilator(n)
                x = colon_into(zero_submodule(m), ideal_product(ann, ann))
                # search explicit integer scalars t in S with |t| bounded
                from coidem.multsets import z_multset_contains

                found = None
                for t in range(-4 * e, 4 * e + 1):
                    if z_multset_contains(pres, t) and sub_leq(
                        scalar_submodule(t % e, x), n
                    ):
                        found = t
                        break
                if found is not None:
                    assert verdict.holds  # an explicit integer scalar witnesses it
                if verdict.holds:
                    assert verdict.witness in reduced.elements
