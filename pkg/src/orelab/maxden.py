"""Maximal denominator sets, the localization radical, and verdicts.

On a finite ring every saturated left denominator set is the pullback of
the unit group of a quotient R/a, so the whole family can be enumerated
by walking the two-sided ideals.  Everything downstream (maximal sets,
radical, localizability, product splitting) is computed from that family
and cross-checked against an independent route wherever one exists.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DEFAULT_GUARDS, Guards, InternalInconsistency, SizeGuardExceeded
from .localize import FractionRing, build_fraction_ring, largest_left_quotient, quotient_model_isomorphism
from .oresets import MulSet, ass, is_left_denominator
from .rings import (
    CarrierSubset,
    FiniteRing,
    RingMap,
    direct_product,
    is_division_ring,
    is_semiprime,
    minimal_primes,
    opposite,
    quotient,
    subgroup_sum,
    two_sided_ideals,
    uniform_dimension,
    units,
)

__all__ = [
    "RouteResult",
    "LocalizabilityVerdict",
    "Condition",
    "Decomposition",
    "LocalizationProfile",
    "SidedProfiles",
    "saturated_denominator_sets",
    "brute_force_denominator_sets",
    "max_den",
    "left_localization_radical",
    "localization_profile",
    "is_left_localizable",
    "is_localization_maximal",
    "product_decomposition",
    "sided_profiles",
]


@dataclass(frozen=True)
class RouteResult:
    """Outcome of one localizability criterion."""

    name: str
    ran: bool
    value: bool | None
    detail: str = ""

    def to_doc(self) -> dict:
        return {"name": self.name, "ran": self.ran, "value": self.value, "detail": self.detail}


@dataclass(frozen=True)
class LocalizabilityVerdict:
    localizable: bool | None
    partial: bool
    routes: tuple[RouteResult, ...]

    def to_doc(self) -> dict:
        return {
            "localizable": self.localizable,
            "partial": self.partial,
            "routes": [r.to_doc() for r in self.routes],
        }


@dataclass(frozen=True)
class Condition:
    name: str
    holds: bool
    detail: str = ""

    def to_doc(self) -> dict:
        return {"name": self.name, "holds": self.holds, "detail": self.detail}


@dataclass(eq=False)
class Decomposition:
    """Result of trying to split a ring along its maximal denominator sets."""

    succeeded: bool
    n_factors: int
    conditions: tuple[Condition, ...]
    factors: tuple[FiniteRing, ...] | None = None
    projections: tuple[RingMap, ...] | None = None
    iso: RingMap | None = None
    factor_division: tuple[bool, ...] | None = None

    def to_doc(self) -> dict:
        from .catalog import canonical_hash

        doc = {
            "succeeded": self.succeeded,
            "n_factors": self.n_factors,
            "conditions": [c.to_doc() for c in self.conditions],
        }
        if self.succeeded:
            doc["factor_orders"] = [f.order for f in self.factors]
            doc["factor_hashes"] = [canonical_hash(f) for f in self.factors]
            doc["factor_division"] = list(self.factor_division)
        return doc


@dataclass(eq=False)
class LocalizationProfile:
    """Everything the analyzer knows about one ring's left localizations."""

    ring: FiniteRing
    saturated: tuple[tuple[CarrierSubset, MulSet], ...]
    maximal: tuple[MulSet, ...]
    maximal_ass: tuple[CarrierSubset, ...]
    localizations: tuple[FractionRing, ...]
    radical: CarrierSubset
    localizable: CarrierSubset
    completely_localizable: CarrierSubset
    non_localizable: CarrierSubset
    verdict: LocalizabilityVerdict
    decomposition: Decomposition

    def to_doc(self) -> dict:
        from .catalog import canonical_hash

        return {
            "ring_hash": canonical_hash(self.ring),
            "order": self.ring.order,
            "saturated_family": [
                {"ass": sorted(a), "set": sorted(s)} for a, s in self.saturated
            ],
            "maximal_sets": [sorted(s) for s in self.maximal],
            "maximal_ass": [sorted(a) for a in self.maximal_ass],
            "localization_orders": [fr.ring.order for fr in self.localizations],
            "localization_division": [is_division_ring(fr.ring) for fr in self.localizations],
            "radical": sorted(self.radical),
            "localizable": sorted(self.localizable),
            "completely_localizable": sorted(self.completely_localizable),
            "non_localizable": sorted(self.non_localizable),
            "verdict": self.verdict.to_doc(),
            "decomposition": self.decomposition.to_doc(),
        }


def saturated_denominator_sets(
    ring: FiniteRing, guards: Guards = DEFAULT_GUARDS
) -> dict[CarrierSubset, MulSet]:
    """All saturated left denominator sets, keyed by annihilator ideal.

    Candidates are unit pullbacks through each proper quotient; a
    candidate survives when it passes the denominator test and its
    annihilator is exactly the ideal it came from.
    """
    out: dict[CarrierSubset, MulSet] = {}
    for a in two_sided_ideals(ring, guards):
        if len(a) == ring.order:
            continue
        q, proj = quotient(ring, a)
        qu = units(q)
        t = CarrierSubset.from_indices(
            ring.order, (x for x in range(ring.order) if proj(x) in qu)
        )
        if not is_left_denominator(ring, t).holds:
            continue
        if ass(ring, t) != a:
            continue
        out[a] = MulSet(ring, t)
    if not out:
        raise InternalInconsistency("the unit group went missing from the saturated family")
    return out


def brute_force_denominator_sets(
    ring: FiniteRing, guards: Guards = DEFAULT_GUARDS
) -> list[MulSet]:
    """Every left denominator set containing 1, by raw subset enumeration.

    Exponential in the order, so it refuses to run past the brute-force
    guard.  This is the oracle the saturated-family route is checked
    against on small rings.
    """
    n = ring.order
    if n > guards.brute_force:
        raise SizeGuardExceeded("brute-force denominator enumeration", n, guards.brute_force)
    mul = ring.mul
    rest = [x for x in range(n) if x not in (ring.zero, ring.one)]
    found: list[MulSet] = []
    for bits in range(1 << len(rest)):
        members = [ring.one] + [rest[i] for i in range(len(rest)) if (bits >> i) & 1]
        mask = 0
        for m in members:
            mask |= 1 << m
        closed = all((mask >> mul[a][b]) & 1 for a in members for b in members)
        if not closed:
            continue
        sub = CarrierSubset(n, mask)
        if is_left_denominator(ring, sub).holds:
            found.append(MulSet(ring, sub))
    found.sort(key=lambda s: (len(s), s.mask))
    return found


def _maximal_entries(
    family: dict[CarrierSubset, MulSet]
) -> list[tuple[CarrierSubset, MulSet]]:
    items = list(family.items())
    by_sets = [
        (a, s)
        for a, s in items
        if not any(s.mask != t.mask and (s.mask | t.mask) == t.mask for _, t in items)
    ]
    by_ideals = [
        (a, s)
        for a, s in items
        if not any(a.mask != b.mask and (a.mask | b.mask) == b.mask for b, _ in items)
    ]
    if {a for a, _ in by_sets} != {a for a, _ in by_ideals}:
        raise InternalInconsistency(
            "maximality by set inclusion and by annihilator inclusion disagree"
        )
    by_sets.sort(key=lambda pair: (len(pair[0]), pair[0].mask))
    return by_sets


def max_den(ring: FiniteRing, guards: Guards = DEFAULT_GUARDS) -> list[MulSet]:
    """The maximal left denominator sets, smallest annihilator first."""
    return [s for _, s in _maximal_entries(saturated_denominator_sets(ring, guards))]


def left_localization_radical(
    ring: FiniteRing, guards: Guards = DEFAULT_GUARDS
) -> CarrierSubset:
    """Intersection of the annihilators of the maximal denominator sets.

    Cross-checked against the joint kernel of the canonical maps into the
    maximal localizations, which is computed by the Ore calculus rather
    than from the ideal family.
    """
    entries = _maximal_entries(saturated_denominator_sets(ring, guards))
    frs = [build_fraction_ring(ring, s) for _, s in entries]
    return _radical_from(ring, entries, frs)


def _radical_from(ring, entries, localizations) -> CarrierSubset:
    mask = (1 << ring.order) - 1
    for a, _ in entries:
        mask &= a.mask
    kernel_mask = (1 << ring.order) - 1
    for fr in localizations:
        kernel_mask &= fr.sigma.kernel().mask
    if mask != kernel_mask:
        raise InternalInconsistency("radical by ideals differs from radical by kernels")
    return CarrierSubset(ring.order, mask)


def is_localization_maximal(ring: FiniteRing, guards: Guards = DEFAULT_GUARDS) -> bool:
    """Whether the ring admits no localization beyond itself.

    True exactly when the zero ideal is the only annihilator in the
    saturated family.  The largest quotient must then collapse onto the
    ring itself, which is asserted.
    """
    family = saturated_denominator_sets(ring, guards)
    zero_ideal = CarrierSubset.from_indices(ring.order, [ring.zero])
    answer = set(family.keys()) == {zero_ideal}
    lq = largest_left_quotient(ring)
    if not lq.fractions.sigma.is_bijective():
        raise InternalInconsistency("largest quotient of a finite ring must be the ring itself")
    return answer


def product_decomposition(
    ring: FiniteRing,
    guards: Guards = DEFAULT_GUARDS,
    _entries: list[tuple[CarrierSubset, MulSet]] | None = None,
    _localizations: list[FractionRing] | None = None,
) -> Decomposition:
    """Try to split the ring along its maximal denominator sets.

    Four conditions are tested; when they all hold the coordinate map
    onto the product of quotients is built, proved bijective, and the
    expected identifications (unit pullbacks, projection kernels, the
    localizations themselves) are verified on the result.
    """
    if _entries is None:
        _entries = _maximal_entries(saturated_denominator_sets(ring, guards))
    entries = _entries
    n_factors = len(entries)
    full = CarrierSubset.full(ring.order)
    zero_ideal = CarrierSubset.from_indices(ring.order, [ring.zero])

    conditions = [
        Condition("finitely-many-maximal-sets", True, f"count = {n_factors}")
    ]

    radical_mask = full.mask
    for a, _ in entries:
        radical_mask &= a.mask
    rad = CarrierSubset(ring.order, radical_mask)
    conditions.append(
        Condition(
            "zero-localization-radical",
            rad == zero_ideal,
            "" if rad == zero_ideal else f"radical = {{{', '.join(ring.name_of(x) for x in sorted(rad))}}}",
        )
    )

    pair_ok, pair_detail = True, ""
    for i in range(n_factors):
        for j in range(i + 1, n_factors):
            if subgroup_sum(ring, entries[i][0], entries[j][0]) != full:
                pair_ok = False
                pair_detail = f"annihilators {i} and {j} do not add up to the ring"
                break
        if not pair_ok:
            break
    conditions.append(Condition("pairwise-comaximal-annihilators", pair_ok, pair_detail))

    quotients: list[tuple[FiniteRing, RingMap]] = []
    fac_ok, fac_detail = True, ""
    for idx, (a, _) in enumerate(entries):
        q, proj = quotient(ring, a)
        quotients.append((q, proj))
        if fac_ok and not is_localization_maximal(q, guards):
            fac_ok = False
            fac_detail = f"quotient by annihilator {idx} still localizes properly"
    conditions.append(Condition("localization-maximal-quotients", fac_ok, fac_detail))

    if not all(c.holds for c in conditions):
        return Decomposition(False, n_factors, tuple(conditions))

    product = direct_product(*(q for q, _ in quotients), guards=guards)
    table = tuple(
        product.encode([proj(x) for _, proj in quotients]) for x in range(ring.order)
    )
    try:
        iso = RingMap(ring, product.ring, table)
    except ValueError as e:
        raise InternalInconsistency(f"coordinate map is not a homomorphism: {e}") from e
    if not iso.is_bijective():
        raise InternalInconsistency("coordinate map onto the product is not bijective")

    if _localizations is None:
        _localizations = [build_fraction_ring(ring, s) for _, s in entries]
    for idx, ((a, s), (q, proj), fr) in enumerate(zip(entries, quotients, _localizations)):
        qu = units(q)
        pulled = CarrierSubset.from_indices(
            ring.order, (x for x in range(ring.order) if proj(x) in qu)
        )
        if pulled.mask != s.mask:
            raise InternalInconsistency(f"factor {idx} is not the unit pullback of its quotient")
        if proj.kernel() != a:
            raise InternalInconsistency(f"projection kernel differs from annihilator {idx}")
        quotient_model_isomorphism(fr)  # raises if R/a and the localization disagree

    return Decomposition(
        True,
        n_factors,
        tuple(conditions),
        tuple(q for q, _ in quotients),
        tuple(proj for _, proj in quotients),
        iso,
        tuple(is_division_ring(q) for q, _ in quotients),
    )


_ROUTE_ELEMENTS = "every-nonzero-element-localizable"
_ROUTE_RADICAL = "zero-radical-with-division-localizations"
_ROUTE_GOLDIE = "semiprime-with-matching-uniform-dimension"
_ROUTE_QUOTIENT = "largest-quotient-splits-into-division-rings"


def localization_profile(
    ring: FiniteRing, guards: Guards = DEFAULT_GUARDS
) -> LocalizationProfile:
    """Full left-localization analysis of one ring."""
    family = saturated_denominator_sets(ring, guards)
    entries = _maximal_entries(family)
    localizations = [build_fraction_ring(ring, s) for _, s in entries]
    radical = _radical_from(ring, entries, localizations)

    loc_mask = 0
    for _, s in entries:
        loc_mask |= s.mask
    com_mask = (1 << ring.order) - 1
    for _, s in entries:
        com_mask &= s.mask
    localizable = CarrierSubset(ring.order, loc_mask)
    completely = CarrierSubset(ring.order, com_mask)
    non_localizable = localizable.complement()

    u_mask = units(ring).mask
    if (u_mask | com_mask) != com_mask:
        raise InternalInconsistency("a unit escaped a maximal denominator set")
    if ring.zero not in non_localizable:
        raise InternalInconsistency("zero claimed to be localizable")
    if not radical.issubset(non_localizable):
        raise InternalInconsistency("the localization radical met a localizable element")

    routes: list[RouteResult] = []

    nonzero = CarrierSubset.full(ring.order) - CarrierSubset.from_indices(ring.order, [ring.zero])
    v1 = localizable == nonzero
    bad = sorted(non_localizable - CarrierSubset.from_indices(ring.order, [ring.zero]))
    routes.append(
        RouteResult(
            _ROUTE_ELEMENTS,
            True,
            v1,
            "" if v1 else "stuck elements: {" + ", ".join(ring.name_of(x) for x in bad) + "}",
        )
    )

    zero_ideal = CarrierSubset.from_indices(ring.order, [ring.zero])
    rad_zero = radical == zero_ideal
    divs = [is_division_ring(fr.ring) for fr in localizations]
    v2 = rad_zero and all(divs)
    if v2:
        d2 = ""
    elif not rad_zero:
        d2 = "radical is nonzero"
    else:
        d2 = f"localization {divs.index(False)} is not a division ring"
    routes.append(RouteResult(_ROUTE_RADICAL, True, v2, d2))

    try:
        sp = is_semiprime(ring, guards)
        if not sp:
            routes.append(RouteResult(_ROUTE_GOLDIE, True, False, "not semiprime"))
        else:
            mins = minimal_primes(ring, guards)
            ud = uniform_dimension(ring, guards)
            v3 = ud == len(mins) == len(entries)
            d3 = (
                ""
                if v3
                else f"uniform dimension {ud}, minimal primes {len(mins)}, maximal sets {len(entries)}"
            )
            routes.append(RouteResult(_ROUTE_GOLDIE, True, v3, d3))
    except SizeGuardExceeded as e:
        routes.append(RouteResult(_ROUTE_GOLDIE, False, None, f"skipped: {e}"))

    try:
        lq = largest_left_quotient(ring)
        dec_q = product_decomposition(lq.ring, guards)
        v4 = dec_q.succeeded and all(dec_q.factor_division)
        if v4:
            d4 = ""
        elif not dec_q.succeeded:
            failed = next(c for c in dec_q.conditions if not c.holds)
            d4 = f"splitting fails: {failed.name}"
        else:
            d4 = "a split factor is not a division ring"
        routes.append(RouteResult(_ROUTE_QUOTIENT, True, v4, d4))
    except SizeGuardExceeded as e:
        routes.append(RouteResult(_ROUTE_QUOTIENT, False, None, f"skipped: {e}"))

    values = {r.value for r in routes if r.ran}
    if len(values) > 1:
        raise InternalInconsistency(
            "localizability routes disagree: "
            + "; ".join(f"{r.name}={r.value}" for r in routes if r.ran)
        )
    partial = not all(r.ran for r in routes)
    verdict = LocalizabilityVerdict(values.pop() if values else None, partial, tuple(routes))

    dec = product_decomposition(ring, guards, _entries=entries, _localizations=localizations)

    return LocalizationProfile(
        ring,
        tuple((a, s) for a, s in family.items()),
        tuple(s for _, s in entries),
        tuple(a for a, _ in entries),
        tuple(localizations),
        radical,
        localizable,
        completely,
        non_localizable,
        verdict,
        dec,
    )


def is_left_localizable(ring: FiniteRing, guards: Guards = DEFAULT_GUARDS) -> bool | None:
    """True/False when the four routes settle it; None on a partial verdict."""
    return localization_profile(ring, guards).verdict.localizable


@dataclass(eq=False)
class SidedProfiles:
    """Left and right profiles side by side, plus the two-sided family."""

    left: LocalizationProfile
    right: LocalizationProfile
    two_sided_maximal: tuple[MulSet, ...]
    completely_localizable: CarrierSubset

    def to_doc(self) -> dict:
        return {
            "left": self.left.to_doc(),
            "right": self.right.to_doc(),
            "two_sided_maximal": [sorted(s) for s in self.two_sided_maximal],
            "completely_localizable": sorted(self.completely_localizable),
        }


def sided_profiles(ring: FiniteRing, guards: Guards = DEFAULT_GUARDS) -> SidedProfiles:
    """Run the analysis on the ring and on its opposite, then intersect.

    The right-hand profile is literally the left-hand analysis of the
    opposite ring; element indices agree because opposite() keeps the
    carrier fixed.
    """
    left = localization_profile(ring, guards)
    op = opposite(ring)
    right = localization_profile(op, guards)

    two: dict[CarrierSubset, MulSet] = {}
    for a in two_sided_ideals(ring, guards):
        if len(a) == ring.order:
            continue
        q, proj = quotient(ring, a)
        qu = units(q)
        t = CarrierSubset.from_indices(
            ring.order, (x for x in range(ring.order) if proj(x) in qu)
        )
        left_ok = is_left_denominator(ring, t).holds and ass(ring, t) == a
        right_ok = is_left_denominator(op, t).holds and ass(op, t) == a
        if left_ok and right_ok:
            two[a] = MulSet(ring, t)
    maximal_two = [s for _, s in _maximal_entries(two)]

    com_mask = (1 << ring.order) - 1
    for s in maximal_two:
        com_mask &= s.mask
    com = CarrierSubset(ring.order, com_mask)
    both = left.completely_localizable & right.completely_localizable
    if not com.issubset(both):
        raise InternalInconsistency(
            "two-sided completely-localizable elements escape the one-sided intersections"
        )
    return SidedProfiles(left, right, tuple(maximal_two), com)
