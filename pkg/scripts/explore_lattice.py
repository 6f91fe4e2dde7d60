#!/usr/bin/env python3
"""Print the submodule lattice and per-submodule predicate verdicts.

Usage:
    python scripts/explore_lattice.py "Z/12" "Z/12" "fgen:1"
    python scripts/explore_lattice.py "Z/2" "Z/2+Z/2" "gen:2"

A quick way to see which submodules are (co)idempotent, (co)pure and
completely irreducible for a given module and multiplicative set.
"""

import sys

from coidem.lattice import enumerate_submodules
from coidem.predicates import coidempotent, copure, idempotent, pure, resolve_multset
from coidem.specs import parse_module, parse_multset, parse_ring


def main(argv):
    if len(argv) != 3:
        print(__doc__)
        return 2
    ring = parse_ring(argv[0])
    module = parse_module(ring, argv[1])
    s = resolve_multset(module, parse_multset(ring, argv[2]))
    lat = enumerate_submodules(module)
    ci = set(lat.completely_irreducible_indexes)
    print(f"{module} over {ring}, S = {s}: {len(lat.all)} submodules")
    header = f"{'submodule':<24} {'order':>5}  coid idem pure copure ci"
    print(header)
    print("-" * len(header))
    for i, n in enumerate(lat.all):
        row = [
            "y" if coidempotent(module, n, s).holds else ".",
            "y" if idempotent(module, n, s).holds else ".",
            "y" if pure(module, n, s).holds else ".",
            "y" if copure(module, n, s).holds else ".",
            "y" if i in ci else ".",
        ]
        print(f"{str(n):<24} {n.order:>5}  {'    '.join(row)}")
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
