"""Finite rings as tables: construction, ideals, quotients, products.

Every ring here is a pair of Cayley tables over indices 0..n-1.  The
constructors build the familiar examples; everything else is exhaustive
computation over those tables.
"""

from orelab import (
    canonical_hash,
    construct,
    direct_product,
    ideal_closure,
    quotient,
    two_sided_ideals,
    units,
)


def main():
    z12 = construct("zmod(12)")
    print(f"Z/12: order {z12.order}, units {sorted(units(z12))}")

    print("\ntwo-sided ideals of Z/12:")
    for ideal in two_sided_ideals(z12):
        print(f"  {sorted(ideal)}")

    four = ideal_closure(z12, [4])
    q, proj = quotient(z12, four)
    print(f"\nquotient by {sorted(four)} has order {q.order}")
    print(f"it is Z/4 on the nose: hashes match = "
          f"{canonical_hash(q) == canonical_hash(construct('zmod(4)'))}")

    t2 = construct("upper_triangular(gf(2),2)")
    print(f"\nupper triangular 2x2 over F_2: order {t2.order}")
    print(f"elements are named by their matrices, e.g. one = {t2.name_of(t2.one)}")
    print(f"units: {[t2.name_of(u) for u in sorted(units(t2))]}")

    prod = direct_product(construct("gf(2)"), construct("gf(3)"))
    print(f"\nF_2 x F_3 has order {prod.ring.order}; "
          f"element (1, 2) is index {prod.encode([1, 2])}")
    assert prod.decode(prod.encode([1, 2])) == (1, 2)


if __name__ == "__main__":
    main()
