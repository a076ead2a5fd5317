"""Inverting a set of elements: Ore conditions and the fraction ring.

A multiplicative set S can be inverted on the left exactly when it is a
left denominator set.  The fraction ring S^{-1}R is built from pairs
(s, r) standing for s^{-1} r, glued by a two-sided equivalence.  On Z/6
inverting {1, 3} collapses everything 3 kills and leaves a copy of F_2.
"""

from orelab import (
    MulSet,
    ass,
    build_fraction_ring,
    construct,
    core,
    is_left_denominator,
    is_left_ore,
    ore_report,
    quotient_model_isomorphism,
    saturate,
)


def main():
    z6 = construct("zmod(6)")
    s = MulSet(z6, [1, 3])

    print(f"S = {sorted(s)} inside Z/6")
    print(f"left Ore: {is_left_ore(s).holds}")
    print(f"left denominator: {is_left_denominator(s).holds}")
    print(f"ass(S) = {sorted(ass(s))}  (everything some member of S kills)")
    print(f"core(S) = {sorted(core(s))}  (members with the largest kernel)")
    print(f"saturation = {sorted(saturate(s))}  (all of the units of S^-1 R pulled back)")

    fr = build_fraction_ring(z6, s)
    print(f"\nS^-1 R has order {fr.ring.order}")
    print(f"fractions: {[fr.ring.name_of(i) for i in range(fr.ring.order)]}")
    print(f"the canonical map kills {sorted(fr.sigma.kernel())}")

    theta = quotient_model_isomorphism(fr)
    print(f"S^-1 R is the quotient R/ass(S) in disguise: {theta.is_bijective()}")

    # pairs (s, r) with the same class are literally the same fraction
    assert fr.class_of(1, 3) == fr.ring.one  # 3/1 = 1 because 3 = 1 mod ass
    assert fr.class_of(3, 0) == fr.ring.zero
    print("\npair identities hold: 1\\3 = 1 and 3\\0 = 0")

    # a set that is NOT Ore: upper triangular matrices with unit corner
    t2 = construct("upper_triangular(gf(2),2)")
    bad = [4, 5, 6, 7]
    verdict = is_left_ore(t2, bad)
    print(f"\nin T_2(F_2) the set {bad} is left Ore: {verdict.holds} "
          f"(witness pair {verdict.witness})")

    rep = ore_report(MulSet(t2, [1, 3, 5, 7]))
    print(f"the set {sorted(rep.mulset)} is a denominator set on the left only: "
          f"{rep.sidedness}")


if __name__ == "__main__":
    main()
