"""Left fraction rings built by the Ore calculus on pairs.

The construction is the textbook one: pairs (s, r) standing for s^-1 r,
identified when c*s = d*t lands in the denominator set with c*r = d*q.
It never peeks at the quotient-by-annihilator shortcut; that model is a
separate oracle (``quotient_model_isomorphism``) used to cross-check the
result.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import InternalInconsistency, NotDenominator
from .oresets import MulSet, _check_semigroup, _subset_of, ass, core, is_left_denominator
from .rings import (
    CarrierSubset,
    FiniteRing,
    RingMap,
    hom_is_R_isomorphism,
    quotient,
    regular_elements,
    units,
)

__all__ = [
    "FractionRing",
    "LargestQuotient",
    "build_fraction_ring",
    "quotient_model_isomorphism",
    "core_transfer_isomorphism",
    "largest_left_quotient",
    "classical_left_quotient",
]

# base rings up to this order get every witness choice checked; larger
# ones get a deterministic random resample per table entry
_EXHAUSTIVE_ORDER = 8


@dataclass(eq=False)
class FractionRing:
    """S^-1 R together with its bookkeeping.

    reps[i] is the minimal (s, r) pair of class i under (s, r) order;
    sigma is the canonical map r |-> 1-over-s * (s r).
    """

    base: FiniteRing
    dens: CarrierSubset
    ring: FiniteRing
    sigma: RingMap
    reps: tuple[tuple[int, int], ...]
    pair_class: dict = field(repr=False)

    def class_of(self, s: int, r: int) -> int:
        try:
            return self.pair_class[(s, r)]
        except KeyError:
            raise ValueError(f"({s}, {r}) is not a denominator pair of this fraction ring")

    def to_doc(self) -> dict:
        from .catalog import canonical_hash

        return {
            "base_hash": canonical_hash(self.base),
            "denominators": list(self.dens),
            "order": self.ring.order,
            "zero": self.ring.zero,
            "one": self.ring.one,
            "add": [list(row) for row in self.ring.add],
            "mul": [list(row) for row in self.ring.mul],
            "sigma": list(self.sigma.table),
            "representatives": [list(p) for p in self.reps],
        }


def build_fraction_ring(ring: FiniteRing, dens, witness_samples: int = 3) -> FractionRing:
    """Localize at a left denominator set (or denominator semigroup).

    dens may be a MulSet, a CarrierSubset or an iterable of indices; a set
    without one is accepted as long as it is zero-free and closed, which
    is what cores of denominator sets look like.
    """
    elems = _subset_of(ring, dens)
    _check_semigroup(ring, elems)
    den = is_left_denominator(ring, elems)
    if not den.holds:
        raise NotDenominator(den.witness)

    n = ring.order
    mul, add = ring.mul, ring.add
    s_list = sorted(elems.indices())
    in_s = elems.mask
    pairs = [(s, r) for s in s_list for r in range(n)]

    # membership keys: K(t,q) holds every (d*t, d*q); C(s,r) holds every
    # (c*s, c*r) whose first coordinate stays in the set
    K: dict[tuple[int, int], set] = {}
    C: dict[tuple[int, int], list] = {}
    for t, q in pairs:
        K[(t, q)] = {(mul[d][t], mul[d][q]) for d in range(n)}
    for s, r in pairs:
        C[(s, r)] = [
            (mul[c][s], mul[c][r]) for c in range(n) if (in_s >> mul[c][s]) & 1
        ]

    reps: list[tuple[int, int]] = []
    pair_class: dict[tuple[int, int], int] = {}
    for p in pairs:
        hits = [i for i, rep in enumerate(reps) if any(x in K[rep] for x in C[p])]
        if len(hits) > 1:
            raise InternalInconsistency(
                f"pair {p} matches {len(hits)} distinct classes; relation not transitive"
            )
        if hits:
            pair_class[p] = hits[0]
        else:
            pair_class[p] = len(reps)
            reps.append(p)
    k = len(reps)

    # by_value[s][v] = all r' with r'*s == v, for witness searches
    by_value: dict[int, dict[int, list[int]]] = {}
    for s in s_list:
        m: dict[int, list[int]] = {}
        for rp in range(n):
            m.setdefault(mul[rp][s], []).append(rp)
        by_value[s] = m

    exhaustive = n <= _EXHAUSTIVE_ORDER
    rng = random.Random((elems.mask << 16) | n)

    def sum_class(s, r, t, q, s1, r1):
        # s^-1 r + t^-1 q = (s1 t)^-1 (r1 r + s1 q) whenever s1 t = r1 s
        return pair_class[(mul[s1][t], add[mul[r1][r]][mul[s1][q]])]

    def prod_class(s, r, t, q, t1, r2):
        # s^-1 r * t^-1 q = (t1 s)^-1 (r2 q) whenever t1 r = r2 t
        return pair_class[(mul[t1][s], mul[r2][q])]

    def first_witness(anchor: int, through: int):
        # smallest (w, r') in S x R with w*through == r'*anchor
        lookup = by_value[anchor]
        for w in s_list:
            cands = lookup.get(mul[w][through])
            if cands:
                return w, cands[0]
        raise InternalInconsistency("left Ore witness vanished during table build")

    def check_all_witnesses(result, anchor, through, classify):
        lookup = by_value[anchor]
        for w in s_list:
            for rp in lookup.get(mul[w][through], ()):
                if classify(w, rp) != result:
                    raise InternalInconsistency(
                        f"witness ({w}, {rp}) changes the result class"
                    )

    def check_sampled_witnesses(result, anchor, through, classify):
        for _ in range(witness_samples):
            w = rng.choice(s_list)
            cands = by_value[anchor].get(mul[w][through])
            if not cands:
                continue
            rp = rng.choice(cands)
            if classify(w, rp) != result:
                raise InternalInconsistency(f"witness ({w}, {rp}) changes the result class")

    add_table = [[0] * k for _ in range(k)]
    mul_table = [[0] * k for _ in range(k)]
    for i, (s, r) in enumerate(reps):
        for j, (t, q) in enumerate(reps):
            s1, r1 = first_witness(s, t)
            res = sum_class(s, r, t, q, s1, r1)
            classify = lambda w, rp, s=s, r=r, t=t, q=q: sum_class(s, r, t, q, w, rp)
            if exhaustive:
                check_all_witnesses(res, s, t, classify)
            else:
                check_sampled_witnesses(res, s, t, classify)
            add_table[i][j] = res

            t1, r2 = first_witness(t, r)
            res = prod_class(s, r, t, q, t1, r2)
            classify = lambda w, rp, s=s, r=r, t=t, q=q: prod_class(s, r, t, q, w, rp)
            if exhaustive:
                check_all_witnesses(res, t, r, classify)
            else:
                check_sampled_witnesses(res, t, r, classify)
            mul_table[i][j] = res

    s0 = s_list[0]
    sigma_table = tuple(pair_class[(s0, mul[s0][x])] for x in range(n))
    names = tuple(f"{s}\\{r}" for s, r in reps)
    fr_ring = FiniteRing(
        k, add_table, mul_table, sigma_table[ring.zero], sigma_table[ring.one], names
    )
    try:
        sigma = RingMap(ring, fr_ring, sigma_table)
    except ValueError as e:
        raise InternalInconsistency(f"canonical map is not a homomorphism: {e}") from e

    if sigma.kernel() != ass(ring, elems):
        raise InternalInconsistency("kernel of the canonical map differs from ass(S)")
    fr_units = units(fr_ring)
    for s in s_list:
        if sigma(s) not in fr_units:
            raise InternalInconsistency(f"denominator {s} is not invertible in the fractions")
    for idx, (s, r) in enumerate(reps):
        if fr_ring.mul[sigma(s)][idx] != sigma(r):
            raise InternalInconsistency("s * (s^-1 r) failed to recover r")

    return FractionRing(ring, elems, fr_ring, sigma, tuple(reps), pair_class)


def quotient_model_isomorphism(fr: FractionRing) -> RingMap:
    """The oracle: R/ass(S) -> S^-1 R, cosets through the canonical map.

    Well-definedness, bijectivity and compatibility with the canonical
    maps are all verified; any failure is an internal error because on
    finite rings this comparison is forced by theory.
    """
    ring = fr.base
    a = fr.sigma.kernel()
    q, proj = quotient(ring, a)
    table: list[int | None] = [None] * q.order
    for x in range(ring.order):
        c, v = proj(x), fr.sigma(x)
        if table[c] is None:
            table[c] = v
        elif table[c] != v:
            raise InternalInconsistency("quotient model map is ill-defined")
    try:
        theta = RingMap(q, fr.ring, tuple(table))  # type: ignore[arg-type]
    except ValueError as e:
        raise InternalInconsistency(f"quotient model map is not a homomorphism: {e}") from e
    if not hom_is_R_isomorphism(theta, proj, fr.sigma):
        raise InternalInconsistency("quotient model map is not an R-isomorphism")
    return theta


def core_transfer_isomorphism(fr: FractionRing) -> tuple[FractionRing, RingMap]:
    """Localize at the core and exhibit s^-1 r |-> s^-1 r as an R-isomorphism."""
    ring = fr.base
    c = core(ring, fr.dens)
    if not c:
        raise InternalInconsistency("a left Ore set on a finite ring has an empty core")
    cfr = build_fraction_ring(ring, c)
    table = tuple(fr.class_of(s, r) for s, r in cfr.reps)
    try:
        theta = RingMap(cfr.ring, fr.ring, table)
    except ValueError as e:
        raise InternalInconsistency(f"core transfer map is not a homomorphism: {e}") from e
    if not hom_is_R_isomorphism(theta, cfr.sigma, fr.sigma):
        raise InternalInconsistency("core transfer map is not an R-isomorphism")
    return cfr, theta


@dataclass(frozen=True)
class LargestQuotient:
    """The largest left quotient ring and its regular denominator set."""

    regular_set: MulSet
    fractions: FractionRing
    coincides_with_classical: bool

    @property
    def ring(self) -> FiniteRing:
        return self.fractions.ring


def largest_left_quotient(ring: FiniteRing) -> LargestQuotient:
    """Localize at the largest regular left denominator set.

    The set is found the same way the saturated family finds it (pull the
    units of R/0 back through the projection); on a finite ring it must
    equal the unit group and the regular elements, and both identities
    are asserted.
    """
    zero_ideal = CarrierSubset.from_indices(ring.order, [ring.zero])
    q0, proj0 = quotient(ring, zero_ideal)
    qu = units(q0)
    pulled = CarrierSubset.from_indices(
        ring.order, (x for x in range(ring.order) if proj0(x) in qu)
    )
    u = units(ring)
    if pulled != u:
        raise InternalInconsistency("unit pullback through R/0 differs from the unit group")
    if regular_elements(ring) != u:
        raise InternalInconsistency("regular elements differ from units on a finite ring")
    s0 = MulSet(ring, u)
    den = is_left_denominator(s0)
    if not den.holds:
        raise InternalInconsistency(f"the unit group failed the denominator test at {den.witness}")
    fr = build_fraction_ring(ring, s0)
    return LargestQuotient(s0, fr, True)


def classical_left_quotient(ring: FiniteRing) -> LargestQuotient:
    """The classical quotient at the regular elements.

    On finite rings the regular elements are the units, so this collapses
    to ``largest_left_quotient``; the flag on the result records that the
    collapse was verified, not assumed.
    """
    return largest_left_quotient(ring)
