"""Splitting a ring along its maximal localizations, and the law suite.

When the localization radical vanishes, the annihilators are pairwise
comaximal, and each quotient cannot be localized further, the ring is
the product of its maximal localizations.  Z/12 splits as Z/4 x Z/3
even though it is not localizable; T_2(F_2) does not split at all.
"""

from orelab import construct, product_decomposition, run_laws


def show_split(spec):
    ring = construct(spec)
    dec = product_decomposition(ring)
    print(f"== {spec}")
    for cond in dec.conditions:
        print(f"  condition {cond.name}: {cond.holds}")
    if dec.succeeded:
        orders = [f.order for f in dec.factors]
        division = ["division" if d else "not division" for d in dec.factor_division]
        print(f"  splits into orders {orders} ({', '.join(division)})")
    else:
        print("  does not split")
    print()


def main():
    show_split("zmod(12)")
    show_split("zmod(6)")
    show_split("zmod(4)")   # single factor: the ring is already maximal
    show_split("upper_triangular(gf(2),2)")

    # the registry of structural laws runs the same checks wholesale
    ring = construct("zmod(6)")
    results = run_laws(ring, ["27Nov12", "25Nov12", "C2Dec12"])
    print("law checks on zmod(6):")
    for r in results:
        state = "holds" if r.holds else "FAILS"
        if not r.applicable:
            state = "not applicable"
        print(f"  {r.law_id} {r.name}: {state} ({r.detail})")


if __name__ == "__main__":
    main()
