"""Exact decision procedures for coidempotent-style submodule properties
over Z, Z/nZ and finite products of Z/nZ, with a law-verification harness.
"""

from .rings import (
    Ideal,
    IntegerRing,
    ModularRing,
    ProductRing,
    RingMismatchError,
    UnsupportedRingError,
    Z,
    all_ideals,
    divides,
    ideal_from_generators,
    ideal_intersect,
    ideal_product,
    maximal_ideals,
    prime_ideals,
    product_ring,
    quotient_ring,
    units,
)
from .multsets import (
    MultSet,
    ZComplementOfPrimes,
    ZGeneratedBy,
    ZNonZero,
    ZSaturatedGeneratedBy,
    ZUnits,
    closure_in_ring,
    localize,
    meets_ideal,
    multset_contains,
    one_multset,
    product_multset,
    reduce_presentation,
    satisfies_max_multiple,
    saturation,
)
from .modules import (
    FinModule,
    ProductModule,
    Submodule,
    ZModule,
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
    zero_submodule,
)
from .lattice import (
    LatticeCapExceeded,
    SubmoduleLattice,
    ci_decomposition,
    completely_irreducibles,
    enumerate_submodules,
    naive_oracle,
)
from .predicates import (
    Verdict,
    coidempotent,
    comultiplication,
    copure,
    direct_summand,
    fully,
    fully_coidempotent_z,
    idempotent,
    multiplication,
    pure,
    s_finite,
    s_noetherian,
    semisimple,
)
from .theorems import (
    CorpusConfig,
    Instance,
    Report,
    generate_corpus,
    reproduce_examples,
    theorem_registry,
    verify_all,
)

__version__ = "0.1.0"
