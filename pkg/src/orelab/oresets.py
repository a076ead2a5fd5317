"""Multiplicative sets, left Ore and left denominator conditions.

The predicates work on any zero-free multiplicatively closed subset, not
only on sets that contain one: cores of denominator sets are closed
semigroups that usually lack one, yet they are denominator sets in every
sense that matters (their fraction rings exist and are isomorphic to the
original ones).  ``MulSet`` is the strict notion used in reports.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import InternalInconsistency, NotDenominator, NotOre, ZeroAbsorbed
from .rings import CarrierSubset, FiniteRing, is_two_sided_ideal, opposite

__all__ = [
    "MulSet",
    "Verdict",
    "OreReport",
    "mul_closure",
    "is_left_ore",
    "is_left_denominator",
    "ass",
    "r_ass",
    "core",
    "max_kernel_elements",
    "saturate",
    "semigroup_product",
    "denominator_sidedness",
    "ore_report",
]


class Verdict(NamedTuple):
    """Outcome of a yes/no check; witness explains a failure."""

    holds: bool
    witness: tuple | None


class MulSet:
    """A multiplicative subset: contains one, excludes zero, closed."""

    __slots__ = ("ring", "elements")

    def __init__(self, ring: FiniteRing, elements):
        if not isinstance(elements, CarrierSubset):
            elements = CarrierSubset.from_indices(ring.order, elements)
        if elements.n != ring.order:
            raise ValueError("subset lives on a different carrier")
        if ring.one not in elements:
            raise ValueError("a multiplicative set must contain one")
        if ring.zero in elements:
            raise ValueError("a multiplicative set must not contain zero")
        elems = elements.indices()
        for s in elems:
            row = ring.mul[s]
            for t in elems:
                if row[t] not in elements:
                    raise ValueError(f"not closed under multiplication: {s}*{t} escapes")
        self.ring = ring
        self.elements = elements

    def __contains__(self, x: int) -> bool:
        return x in self.elements

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def mask(self) -> int:
        return self.elements.mask

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MulSet)
            and self.ring == other.ring
            and self.elements == other.elements
        )

    def __hash__(self) -> int:
        return hash((self.ring, self.elements))

    def __str__(self) -> str:
        return str(self.elements)

    def __repr__(self) -> str:
        return f"MulSet({self.elements})"


def _subset_of(ring: FiniteRing, setlike) -> CarrierSubset:
    """Normalize MulSet / CarrierSubset / iterable to a CarrierSubset."""
    if isinstance(setlike, MulSet):
        if setlike.ring != ring:
            raise ValueError("set belongs to a different ring")
        return setlike.elements
    if isinstance(setlike, CarrierSubset):
        if setlike.n != ring.order:
            raise ValueError("subset lives on a different carrier")
        return setlike
    return CarrierSubset.from_indices(ring.order, setlike)


def _check_semigroup(ring: FiniteRing, elems: CarrierSubset) -> None:
    """Zero-free, nonempty, multiplicatively closed; raises otherwise."""
    if not elems:
        raise ValueError("empty set cannot be a denominator semigroup")
    if ring.zero in elems:
        raise ValueError("denominator semigroup must not contain zero")
    idx = elems.indices()
    for s in idx:
        for t in idx:
            if ring.mul[s][t] not in elems:
                raise ValueError(f"not multiplicatively closed: {s}*{t} escapes")


def mul_closure(ring: FiniteRing, generators: Iterable[int]) -> MulSet:
    """Smallest multiplicative set containing the generators and one.

    Raises ZeroAbsorbed with a product chain when zero is reachable.
    """
    gens = [int(g) for g in generators]
    for g in gens:
        if not 0 <= g < ring.order:
            raise ValueError(f"generator {g} outside carrier")
    mul = ring.mul
    members = [ring.one]
    seen = 1 << ring.one
    parents: dict[int, tuple[int, int]] = {}
    queue = [g for g in gens if not (seen >> g) & 1]

    def chain_to(e: int) -> list[tuple[int, int, int]]:
        if e not in parents:
            return []
        x, y = parents[e]
        return chain_to(x) + chain_to(y) + [(x, y, e)]

    while queue:
        x = queue.pop(0)
        if (seen >> x) & 1:
            continue
        if x == ring.zero:
            raise ZeroAbsorbed(chain_to(x) or [(x, ring.one, x)])
        seen |= 1 << x
        members.append(x)
        for m in list(members):
            for a, b in ((x, m), (m, x)):
                p = mul[a][b]
                if not (seen >> p) & 1 and p not in parents:
                    parents[p] = (a, b)
                    queue.append(p)
    if (seen >> ring.zero) & 1:
        raise ZeroAbsorbed(chain_to(ring.zero))
    return MulSet(ring, CarrierSubset(ring.order, seen))


def ass(ring_or_mulset, setlike=None) -> CarrierSubset:
    """ass(S) = {r : s*r = 0 for some s in S}, the union of left kernels."""
    if setlike is None:
        mulset = ring_or_mulset
        ring, elems = mulset.ring, mulset.elements
    else:
        ring = ring_or_mulset
        elems = _subset_of(ring, setlike)
    mask = 0
    for s in elems:
        mask |= ring.left_kernel_mask(s)
    return CarrierSubset(ring.order, mask)


def r_ass(ring: FiniteRing, setlike) -> CarrierSubset:
    """r.ass(X) = {r : r*x = 0 for some x in X}."""
    elems = _subset_of(ring, setlike)
    if not elems:
        raise ValueError("r_ass needs a nonempty set")
    mask = 0
    for x in elems:
        mask |= ring.right_kernel_mask(x)
    return CarrierSubset(ring.order, mask)


def is_left_ore(ring_or_mulset, setlike=None) -> Verdict:
    """Left Ore condition: S*r meets R*s for every r in R, s in S.

    On failure the witness is the violating pair (r, s), first in
    lexicographic order.
    """
    if setlike is None:
        ring, elems = ring_or_mulset.ring, ring_or_mulset.elements
    else:
        ring = ring_or_mulset
        elems = _subset_of(ring, setlike)
    mul = ring.mul
    n = ring.order
    s_list = elems.indices()
    # Rs as a bitmask per s in S
    rs_mask = {}
    for s in s_list:
        m = 0
        for r in range(n):
            m |= 1 << mul[r][s]
        rs_mask[s] = m
    for r in range(n):
        sr = 0
        for s in s_list:
            sr |= 1 << mul[s][r]
        for s in s_list:
            if sr & rs_mask[s] == 0:
                return Verdict(False, (r, s))
    return Verdict(True, None)


def is_left_denominator(ring_or_mulset, setlike=None) -> Verdict:
    """Left Ore plus left reversibility (r*s = 0 forces t*r = 0, t in S)."""
    if setlike is None:
        ring, elems = ring_or_mulset.ring, ring_or_mulset.elements
    else:
        ring = ring_or_mulset
        elems = _subset_of(ring, setlike)
    ore = is_left_ore(ring, elems)
    if not ore.holds:
        return ore
    kill = ass(ring, elems).mask
    mul = ring.mul
    zero = ring.zero
    for r in range(ring.order):
        if (kill >> r) & 1:
            continue
        for s in elems:
            if mul[r][s] == zero:
                return Verdict(False, (r, s))
    return Verdict(True, None)


def core(ring_or_mulset, setlike=None) -> CarrierSubset:
    """Elements of S whose left kernel is all of ass(S); needs left Ore."""
    if setlike is None:
        ring, elems = ring_or_mulset.ring, ring_or_mulset.elements
    else:
        ring = ring_or_mulset
        elems = _subset_of(ring, setlike)
    ore = is_left_ore(ring, elems)
    if not ore.holds:
        raise NotOre(ore.witness)
    target = ass(ring, elems).mask
    out = 0
    for s in elems:
        if ring.left_kernel_mask(s) == target:
            out |= 1 << s
    return CarrierSubset(ring.order, out)


def max_kernel_elements(ring_or_mulset, setlike=None) -> CarrierSubset:
    """Members whose left kernel is maximal among members' kernels.

    For a left Ore set this must coincide with the core; that identity is
    asserted here rather than assumed.
    """
    if setlike is None:
        ring, elems = ring_or_mulset.ring, ring_or_mulset.elements
    else:
        ring = ring_or_mulset
        elems = _subset_of(ring, setlike)
    kernels = {s: ring.left_kernel_mask(s) for s in elems}
    values = set(kernels.values())

    def is_max(k: int) -> bool:
        return not any(o != k and o | k == o for o in values)

    out = 0
    for s, k in kernels.items():
        if is_max(k):
            out |= 1 << s
    result = CarrierSubset(ring.order, out)
    if is_left_ore(ring, elems).holds:
        if result != core(ring, elems):
            raise InternalInconsistency(
                f"max-kernel members {result} differ from core {core(ring, elems)}"
            )
    return result


def saturate(mulset: MulSet) -> MulSet:
    """Division-closure of a left denominator set.

    Computed as the preimage of the units of R/ass(S) under the projection
    and independently as the preimage of the units of the fraction ring
    under the canonical map; the two must agree.
    """
    from . import localize  # deferred: localize depends on this module
    from .rings import quotient, units

    ring = mulset.ring
    den = is_left_denominator(mulset)
    if not den.holds:
        raise NotDenominator(den.witness)
    a = ass(mulset)
    if not is_two_sided_ideal(ring, a):
        raise InternalInconsistency(f"ass {a} of a denominator set is not an ideal")
    q, proj = quotient(ring, a)
    u = units(q)
    by_quotient = CarrierSubset.from_indices(
        ring.order, (x for x in range(ring.order) if proj(x) in u)
    )
    fr = localize.build_fraction_ring(ring, mulset)
    fu = units(fr.ring)
    by_fractions = CarrierSubset.from_indices(
        ring.order, (x for x in range(ring.order) if fr.sigma(x) in fu)
    )
    if by_quotient != by_fractions:
        raise InternalInconsistency(
            f"saturation routes disagree: quotient {by_quotient}, fractions {by_fractions}"
        )
    out = MulSet(ring, by_quotient)
    if not mulset.elements.issubset(out.elements):
        raise InternalInconsistency("saturation lost elements of the original set")
    if ass(out) != a:
        raise InternalInconsistency("saturation changed the annihilator ideal")
    return out


def semigroup_product(s: MulSet, t: MulSet) -> MulSet:
    """Multiplicative closure of S union T.

    When both inputs are denominator sets with ass(S) contained in ass(T),
    the product is again a left denominator set whose ass contains ass(T);
    both facts are asserted because theory guarantees them.
    """
    if s.ring != t.ring:
        raise ValueError("sets belong to different rings")
    ring = s.ring
    product = mul_closure(ring, list(s.elements) + list(t.elements))
    s_den = is_left_denominator(s)
    t_den = is_left_denominator(t)
    if s_den.holds and t_den.holds and ass(s).issubset(ass(t)):
        verdict = is_left_denominator(product)
        if not verdict.holds:
            raise InternalInconsistency(
                f"product of nested denominator sets fails at {verdict.witness}"
            )
        if not ass(t).issubset(ass(product)):
            raise InternalInconsistency("product lost part of the larger annihilator")
    return product


def denominator_sidedness(mulset: MulSet) -> str:
    """Classify as left-only, right-only, two-sided or neither.

    The right-hand check runs the left predicate on the opposite ring.
    """
    left = is_left_denominator(mulset).holds
    op = opposite(mulset.ring)
    right = is_left_denominator(op, mulset.elements).holds
    if left and right:
        return "two-sided"
    if left:
        return "left-only"
    if right:
        return "right-only"
    return "neither"


@dataclass(frozen=True)
class OreReport:
    """Everything the one-set analysis knows about a multiplicative set."""

    mulset: MulSet
    left_ore: Verdict
    left_denominator: Verdict
    annihilator: CarrierSubset
    core: CarrierSubset | None  # None when the set is not left Ore
    core_empty: bool | None
    saturation: MulSet | None  # None when the set is not a denominator set
    sidedness: str

    def to_doc(self) -> dict:
        return {
            "set": list(self.mulset.elements),
            "is_left_ore": self.left_ore.holds,
            "ore_witness": list(self.left_ore.witness) if self.left_ore.witness else None,
            "is_left_denominator": self.left_denominator.holds,
            "denominator_witness": (
                list(self.left_denominator.witness) if self.left_denominator.witness else None
            ),
            "ass": list(self.annihilator),
            "core": list(self.core) if self.core is not None else None,
            "core_empty": self.core_empty,
            "saturation": list(self.saturation.elements) if self.saturation else None,
            "sidedness": self.sidedness,
        }


def ore_report(mulset: MulSet) -> OreReport:
    """Run every one-set analysis and bundle the results."""
    ring = mulset.ring
    ore = is_left_ore(mulset)
    den = is_left_denominator(mulset)
    a = ass(mulset)
    if a.mask & mulset.mask:
        raise InternalInconsistency("a multiplicative set meets its own annihilator")
    c = None
    c_empty = None
    if ore.holds:
        c = core(mulset)
        c_empty = len(c) == 0
        if not c.issubset(mulset.elements):
            raise InternalInconsistency("core escapes the set")
        if den.holds and not is_two_sided_ideal(ring, a):
            raise InternalInconsistency("ass of a denominator set is not an ideal")
    sat = saturate(mulset) if den.holds else None
    return OreReport(mulset, ore, den, a, c, c_empty, sat, denominator_sidedness(mulset))
