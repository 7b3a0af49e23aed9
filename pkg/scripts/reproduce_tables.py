#!/usr/bin/env python3
"""Print the full three-particle story: the standard binary-search system,
each named basis with its transformed projectors, the induced partitions,
and the permuted x/y-product triple.
"""

import numpy as np

from statesieve import (CERECEDA_AXES, cereceda_system, certify_system,
                        is_atomic, meet_all, named_basis, standard_system,
                        system_partitions, transformed_system)


def show_matrix(m, indent="  "):
    for row in np.asarray(m):
        cells = []
        for z in row:
            z = complex(z)
            re = z.real if abs(z.real) >= 5e-4 else 0.0
            cells.append(f"{re:6.3f}" if z.imag == 0 else f"{z:.3f}")
        print(indent + " ".join(cells))


def show_partitions(parts):
    for k, part in enumerate(parts, start=1):
        blocks = " ".join("{" + ",".join(map(str, b)) + "}" for b in part.blocks)
        print(f"  proposition {k}: {blocks}")
    m = meet_all(parts)
    print(f"  meet atomic: {is_atomic(m)}")


def main():
    system = standard_system(3)
    print("standard binary-search system (diagonals):")
    for p in system.projectors:
        print("  ", np.real(np.diag(p)).astype(int))

    for key in ("ghz", "w", "equal_weight"):
        basis, unitary = named_basis(key)
        moved = transformed_system(unitary, system)
        print(f"\n=== basis '{key}' ===")
        print("states:")
        for label in basis.labels:
            print(f"  {label}")
        print("transformed projectors:")
        for k, p in enumerate(moved.projectors, start=1):
            print(f" projector {k}:")
            show_matrix(p)
        print("certified:", not certify_system(moved))
        show_partitions(system_partitions(moved, basis))

    print("\n=== permuted x/y-product triple ===")
    triple = cereceda_system()
    basis, _ = named_basis("ghz")
    for axes, p in zip(CERECEDA_AXES, triple.projectors):
        print(f" axes {axes}:")
        show_matrix(p)
    show_partitions(system_partitions(triple, basis))


if __name__ == "__main__":
    main()
