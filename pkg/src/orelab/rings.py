"""Finite unital rings presented by explicit operation tables.

A ring lives on the carrier {0, ..., n-1}; ``add`` and ``mul`` are full
n-by-n tables.  Construction always validates every unital-ring law and
reports the first failure with a witness, so a ``FiniteRing`` that exists
is a ring.  Subsets of the carrier are bitmask-backed ``CarrierSubset``
values; maps between rings are table-backed ``RingMap`` values validated
as unital ring homomorphisms.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    AxiomViolation,
    Guards,
    DEFAULT_GUARDS,
    ImproperIdeal,
    InternalInconsistency,
    NotAnIdeal,
    SizeGuardExceeded,
)

__all__ = [
    "CarrierSubset",
    "FiniteRing",
    "RingMap",
    "ProductRing",
    "from_tables",
    "units",
    "regular_elements",
    "is_division_ring",
    "ideal_closure",
    "is_additive_subgroup",
    "is_left_ideal",
    "is_right_ideal",
    "is_two_sided_ideal",
    "subgroup_sum",
    "quotient",
    "direct_product",
    "opposite",
    "additive_subgroups",
    "two_sided_ideals",
    "left_ideals",
    "minimal_primes",
    "is_semiprime",
    "uniform_dimension",
    "hom_is_R_isomorphism",
]


def _bit_indices(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class CarrierSubset:
    """A subset of {0..n-1} stored as a bitmask; immutable by convention."""

    __slots__ = ("n", "mask")

    def __init__(self, n: int, mask: int = 0):
        if n <= 0:
            raise ValueError("carrier size must be positive")
        if mask < 0 or mask >> n:
            raise ValueError(f"mask {mask:#x} does not fit a carrier of size {n}")
        self.n = n
        self.mask = mask

    @classmethod
    def from_indices(cls, n: int, indices: Iterable[int]) -> "CarrierSubset":
        mask = 0
        for i in indices:
            if not 0 <= i < n:
                raise ValueError(f"index {i} outside carrier of size {n}")
            mask |= 1 << i
        return cls(n, mask)

    @classmethod
    def full(cls, n: int) -> "CarrierSubset":
        return cls(n, (1 << n) - 1)

    @classmethod
    def empty(cls, n: int) -> "CarrierSubset":
        return cls(n, 0)

    def indices(self) -> tuple[int, ...]:
        return tuple(_bit_indices(self.mask))

    def __contains__(self, i: int) -> bool:
        return 0 <= i < self.n and (self.mask >> i) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        return _bit_indices(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def _check_same(self, other: "CarrierSubset") -> None:
        if self.n != other.n:
            raise ValueError("subsets live on different carriers")

    def __or__(self, other: "CarrierSubset") -> "CarrierSubset":
        self._check_same(other)
        return CarrierSubset(self.n, self.mask | other.mask)

    def __and__(self, other: "CarrierSubset") -> "CarrierSubset":
        self._check_same(other)
        return CarrierSubset(self.n, self.mask & other.mask)

    def __sub__(self, other: "CarrierSubset") -> "CarrierSubset":
        self._check_same(other)
        return CarrierSubset(self.n, self.mask & ~other.mask)

    def complement(self) -> "CarrierSubset":
        return CarrierSubset(self.n, ~self.mask & ((1 << self.n) - 1))

    def issubset(self, other: "CarrierSubset") -> bool:
        self._check_same(other)
        return self.mask | other.mask == other.mask

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CarrierSubset)
            and self.n == other.n
            and self.mask == other.mask
        )

    def __hash__(self) -> int:
        return hash((self.n, self.mask))

    def __str__(self) -> str:
        return "{" + ", ".join(str(i) for i in self) + "}"

    def __repr__(self) -> str:
        return f"CarrierSubset(n={self.n}, {self})"


def _as_table(t, n: int, what: str) -> tuple[tuple[int, ...], ...]:
    rows = [tuple(int(v) for v in row) for row in t]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError(f"{what} table is not {n}x{n}")
    return tuple(rows)


class FiniteRing:
    """A finite ring with 1 on {0..n-1}; validated on construction."""

    def __init__(self, order, add, mul, zero, one, names: Sequence[str] | None = None):
        self.order = int(order)
        self.add = _as_table(add, self.order, "add")
        self.mul = _as_table(mul, self.order, "mul")
        self.zero = int(zero)
        self.one = int(one)
        if not (0 <= self.zero < self.order and 0 <= self.one < self.order):
            raise ValueError("zero/one outside carrier")
        if names is not None:
            names = tuple(str(x) for x in names)
            if len(names) != self.order:
                raise ValueError("names length must equal order")
            if any((not x) or any(c.isspace() for c in x) for x in names):
                raise ValueError("names must be nonempty and whitespace-free")
        self.names = names
        self._validate()

    # -- validation ---------------------------------------------------

    @cached_property
    def np_add(self) -> np.ndarray:
        a = np.asarray(self.add, dtype=np.int64)
        a.setflags(write=False)
        return a

    @cached_property
    def np_mul(self) -> np.ndarray:
        m = np.asarray(self.mul, dtype=np.int64)
        m.setflags(write=False)
        return m

    def _validate(self) -> None:
        n = self.order
        A, M = self.np_add, self.np_mul
        for what, T in (("add", A), ("mul", M)):
            if T.min() < 0 or T.max() >= n:
                bad = np.argwhere((T < 0) | (T >= n))[0]
                raise AxiomViolation("closure", (what, int(bad[0]), int(bad[1])))
        if self.zero == self.one:
            raise AxiomViolation("nontrivial", (self.zero,), "zero and one coincide")
        if not np.array_equal(A, A.T):
            b = np.argwhere(A != A.T)[0]
            raise AxiomViolation("add-commutative", (int(b[0]), int(b[1])))
        idx = np.arange(n)
        if not np.array_equal(A[self.zero], idx):
            b = int(np.argwhere(A[self.zero] != idx)[0][0])
            raise AxiomViolation("add-identity", (b,))
        has_neg = (A == self.zero).any(axis=1)
        if not has_neg.all():
            raise AxiomViolation("add-inverse", (int(np.argwhere(~has_neg)[0][0]),))
        for a in range(n):
            left = A[A[a]]
            right = A[a][A]
            if not np.array_equal(left, right):
                b, c = np.argwhere(left != right)[0]
                raise AxiomViolation("add-associative", (a, int(b), int(c)))
        for a in range(n):
            left = M[M[a]]
            right = M[a][M]
            if not np.array_equal(left, right):
                b, c = np.argwhere(left != right)[0]
                raise AxiomViolation("mul-associative", (a, int(b), int(c)))
        if not np.array_equal(M[self.one], idx):
            b = int(np.argwhere(M[self.one] != idx)[0][0])
            raise AxiomViolation("mul-identity", (b,), "one is not a left identity")
        if not np.array_equal(M[:, self.one], idx):
            b = int(np.argwhere(M[:, self.one] != idx)[0][0])
            raise AxiomViolation("mul-identity", (b,), "one is not a right identity")
        for a in range(n):
            left = M[a][A]
            right = A[np.ix_(M[a], M[a])]
            if not np.array_equal(left, right):
                b, c = np.argwhere(left != right)[0]
                raise AxiomViolation("left-distributive", (a, int(b), int(c)))
        for c in range(n):
            left = M[:, c][A]
            right = A[np.ix_(M[:, c], M[:, c])]
            if not np.array_equal(left, right):
                x, y = np.argwhere(left != right)[0]
                raise AxiomViolation("right-distributive", (int(x), int(y), c))

    # -- basic structure ----------------------------------------------

    @cached_property
    def neg(self) -> tuple[int, ...]:
        out = [0] * self.order
        for x in range(self.order):
            out[x] = self.add[x].index(self.zero)
        return tuple(out)

    @property
    def elements(self) -> range:
        return range(self.order)

    @cached_property
    def structure_key(self) -> tuple:
        # names are labels only; identity of a ring is its tables
        return (self.order, self.zero, self.one, self.add, self.mul)

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteRing) and self.structure_key == other.structure_key

    def __hash__(self) -> int:
        return hash(self.structure_key)

    def __repr__(self) -> str:
        return f"<FiniteRing order={self.order} zero={self.zero} one={self.one}>"

    def name_of(self, x: int) -> str:
        return self.names[x] if self.names is not None else str(x)

    def left_kernel_mask(self, s: int) -> int:
        """Bitmask of {r : s*r = 0}."""
        row = self.mul[s]
        z = self.zero
        mask = 0
        for r in range(self.order):
            if row[r] == z:
                mask |= 1 << r
        return mask

    def right_kernel_mask(self, s: int) -> int:
        """Bitmask of {r : r*s = 0}."""
        z = self.zero
        mask = 0
        for r in range(self.order):
            if self.mul[r][s] == z:
                mask |= 1 << r
        return mask


def from_tables(order, add, mul, zero, one, names=None) -> FiniteRing:
    """Build and fully validate a ring from raw tables."""
    return FiniteRing(order, add, mul, zero, one, names)


# -- element classes ----------------------------------------------------


def units(ring: FiniteRing) -> CarrierSubset:
    """Two-sided invertible elements, found by scanning for inverses."""
    one = ring.one
    mul = ring.mul
    out = 0
    for u in range(ring.order):
        row = mul[u]
        for v in range(ring.order):
            if row[v] == one and mul[v][u] == one:
                out |= 1 << u
                break
    return CarrierSubset(ring.order, out)


def regular_elements(ring: FiniteRing) -> CarrierSubset:
    """Elements that are neither left nor right zero divisors."""
    n = ring.order
    mul = ring.mul
    out = 0
    for u in range(n):
        if len(set(mul[u])) != n:
            continue
        if len({mul[r][u] for r in range(n)}) != n:
            continue
        out |= 1 << u
    return CarrierSubset(n, out)


def is_division_ring(ring: FiniteRing) -> bool:
    return len(units(ring)) == ring.order - 1


# -- subgroups and ideals ------------------------------------------------


def _additive_closure_mask(ring: FiniteRing, mask: int) -> int:
    """Close a subset (as bitmask) under addition; 0 joins for free.

    A finite set closed under + automatically contains negatives, so this
    is the additive subgroup generated by the input.
    """
    add = ring.add
    members = [ring.zero]
    seen = 1 << ring.zero
    queue = list(_bit_indices(mask & ~seen))
    while queue:
        x = queue.pop()
        if (seen >> x) & 1:
            continue
        seen |= 1 << x
        members.append(x)
        row = add[x]
        for m in members:
            s = row[m]
            if not (seen >> s) & 1:
                queue.append(s)
    return seen


def is_additive_subgroup(ring: FiniteRing, sub: CarrierSubset) -> bool:
    if ring.zero not in sub:
        return False
    add = ring.add
    elems = sub.indices()
    m = sub.mask
    return all((m >> add[x][y]) & 1 for x in elems for y in elems)


def _absorbs(ring: FiniteRing, mask: int, left: bool, right: bool):
    """Return None if mask absorbs multiplication on the given sides,
    else a witness (r, h) or (h, r)."""
    mul = ring.mul
    for h in _bit_indices(mask):
        for r in range(ring.order):
            if left and not (mask >> mul[r][h]) & 1:
                return (r, h)
            if right and not (mask >> mul[h][r]) & 1:
                return (h, r)
    return None


def is_left_ideal(ring: FiniteRing, sub: CarrierSubset) -> bool:
    return is_additive_subgroup(ring, sub) and _absorbs(ring, sub.mask, True, False) is None


def is_right_ideal(ring: FiniteRing, sub: CarrierSubset) -> bool:
    return is_additive_subgroup(ring, sub) and _absorbs(ring, sub.mask, False, True) is None


def is_two_sided_ideal(ring: FiniteRing, sub: CarrierSubset) -> bool:
    return is_additive_subgroup(ring, sub) and _absorbs(ring, sub.mask, True, True) is None


def subgroup_sum(ring: FiniteRing, a: CarrierSubset, b: CarrierSubset) -> CarrierSubset:
    """Pointwise sum A + B of two additive subgroups (again a subgroup)."""
    add = ring.add
    out = 0
    for x in a:
        row = add[x]
        for y in b:
            out |= 1 << row[y]
    return CarrierSubset(ring.order, out)


def ideal_closure(ring: FiniteRing, generators: Iterable[int], side: str = "two") -> CarrierSubset:
    """Smallest ideal of the requested sidedness containing the generators.

    side is one of "left", "right", "two".
    """
    if side not in ("left", "right", "two"):
        raise ValueError(f"unknown side {side!r}")
    mul = ring.mul
    add = ring.add
    n = ring.order
    members = [ring.zero]
    seen = 1 << ring.zero
    queue = [int(g) for g in generators]
    for g in queue:
        if not 0 <= g < n:
            raise ValueError(f"generator {g} outside carrier")
    while queue:
        x = queue.pop()
        if (seen >> x) & 1:
            continue
        seen |= 1 << x
        members.append(x)
        row = add[x]
        for m in members:
            s = row[m]
            if not (seen >> s) & 1:
                queue.append(s)
        for r in range(n):
            if side in ("left", "two"):
                p = mul[r][x]
                if not (seen >> p) & 1:
                    queue.append(p)
            if side in ("right", "two"):
                p = mul[x][r]
                if not (seen >> p) & 1:
                    queue.append(p)
    return CarrierSubset(n, seen)


def additive_subgroups(ring: FiniteRing, guard: int | None = None) -> list[CarrierSubset]:
    """All additive subgroups, grown one generator at a time from {0}.

    Every subgroup arises by adjoining its elements one by one, so the
    closure lattice walk below reaches all of them without touching the
    2^n subset space.
    """
    if guard is not None and ring.order > guard:
        raise SizeGuardExceeded("additive subgroup enumeration", ring.order, guard)
    n = ring.order
    closure_memo: dict[int, int] = {}
    root = 1 << ring.zero
    seen = {root}
    frontier = [root]
    while frontier:
        nxt = []
        for h in frontier:
            for x in range(n):
                if (h >> x) & 1:
                    continue
                key = h | (1 << x)
                grown = closure_memo.get(key)
                if grown is None:
                    grown = _additive_closure_mask(ring, key)
                    closure_memo[key] = grown
                if grown not in seen:
                    seen.add(grown)
                    nxt.append(grown)
        frontier = nxt
    out = [CarrierSubset(n, m) for m in seen]
    out.sort(key=lambda s: (len(s), s.mask))
    return out


def _ideal_lattice(ring: FiniteRing, side: str) -> list[CarrierSubset]:
    """Walk the ideal lattice by summing principal ideals.

    A sum of ideals is an ideal, and every ideal is a sum of the
    principal ideals of its elements, so growing one principal ideal at
    a time reaches the whole lattice without touching the (much larger)
    additive subgroup lattice.
    """
    n = ring.order
    principal: dict[int, CarrierSubset] = {}
    for x in range(n):
        p = ideal_closure(ring, [x], side)
        principal.setdefault(p.mask, p)
    gens = list(principal.values())
    root = 1 << ring.zero
    seen = {root}
    frontier = [root]
    while frontier:
        nxt = []
        for h in frontier:
            cur = CarrierSubset(n, h)
            for p in gens:
                if p.mask | h == h:
                    continue
                grown = subgroup_sum(ring, cur, p).mask
                if grown not in seen:
                    seen.add(grown)
                    nxt.append(grown)
        frontier = nxt
    out = [CarrierSubset(n, m) for m in seen]
    out.sort(key=lambda s: (len(s), s.mask))
    return out


def two_sided_ideals(ring: FiniteRing, guards: Guards = DEFAULT_GUARDS) -> list[CarrierSubset]:
    """All two-sided ideals, sorted by size then lexicographically."""
    if ring.order > guards.order:
        raise SizeGuardExceeded("two-sided ideal enumeration", ring.order, guards.order)
    return _ideal_lattice(ring, "two")


def left_ideals(ring: FiniteRing, guards: Guards = DEFAULT_GUARDS) -> list[CarrierSubset]:
    """All left ideals; guarded separately because there can be many more."""
    if ring.order > guards.left_ideals:
        raise SizeGuardExceeded("left ideal enumeration", ring.order, guards.left_ideals)
    return _ideal_lattice(ring, "left")


# -- primes, semiprimeness, uniform dimension ----------------------------


def _is_prime_ideal(ring: FiniteRing, p: CarrierSubset, mul3: np.ndarray) -> bool:
    # p prime iff for all a, b outside p some a*r*b stays outside p
    n = ring.order
    outside = [x for x in range(n) if x not in p]
    if not outside:
        return False  # the whole ring is not prime
    in_p = np.zeros(n, dtype=bool)
    for x in p:
        in_p[x] = True
    escapes = (~in_p[mul3]).any(axis=1)  # escapes[a, b]: some r with a*r*b not in p
    sub = escapes[np.ix_(outside, outside)]
    return bool(sub.all())


def minimal_primes(ring: FiniteRing, guards: Guards = DEFAULT_GUARDS) -> list[CarrierSubset]:
    """Inclusion-minimal prime ideals, via the a*R*b containment test."""
    ideals = two_sided_ideals(ring, guards)
    M = ring.np_mul
    mul3 = M[M]  # mul3[a, r, b] = (a*r)*b
    primes = [p for p in ideals if len(p) < ring.order and _is_prime_ideal(ring, p, mul3)]
    out = []
    for p in primes:
        if not any(q is not p and q.issubset(p) for q in primes):
            out.append(p)
    out.sort(key=lambda s: (len(s), s.mask))
    return out


def is_semiprime(ring: FiniteRing, guards: Guards = DEFAULT_GUARDS) -> bool:
    """No nonzero ideal squares to zero; cross-checked against Min(R)."""
    ideals = two_sided_ideals(ring, guards)
    zero = ring.zero
    mul = ring.mul
    by_squares = True
    for ideal in ideals:
        if len(ideal) == 1:
            continue
        elems = ideal.indices()
        if all(mul[a][b] == zero for a in elems for b in elems):
            by_squares = False
            break
    inter = (1 << ring.order) - 1
    for p in minimal_primes(ring, guards):
        inter &= p.mask
    by_primes = inter == (1 << zero)
    if by_primes != by_squares:
        raise InternalInconsistency(
            f"semiprime tests disagree: prime-intersection {by_primes}, square-zero {by_squares}"
        )
    return by_squares


def uniform_dimension(ring: FiniteRing, guards: Guards = DEFAULT_GUARDS) -> int:
    """Largest k with k nonzero left ideals forming a direct sum in R."""
    nonzero = [i for i in left_ideals(ring, guards) if len(i) > 1]
    zero_mask = 1 << ring.zero
    best = 0

    def extend(start: int, span: CarrierSubset, count: int) -> None:
        nonlocal best
        if count > best:
            best = count
        for k in range(start, len(nonzero)):
            cand = nonzero[k]
            if cand.mask & span.mask == zero_mask:
                extend(k + 1, subgroup_sum(ring, span, cand), count + 1)

    extend(0, CarrierSubset(ring.order, zero_mask), 0)
    return best


# -- quotients, products, opposite ---------------------------------------


@dataclass(frozen=True)
class RingMap:
    """A unital ring homomorphism given by its full value table."""

    source: FiniteRing
    target: FiniteRing
    table: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(int(v) for v in self.table))
        src, tgt, f = self.source, self.target, self.table
        if len(f) != src.order:
            raise ValueError("map table length must equal source order")
        if any(not 0 <= v < tgt.order for v in f):
            raise ValueError("map value outside target carrier")
        if f[src.one] != tgt.one:
            raise ValueError("map does not send one to one")
        for x in range(src.order):
            for y in range(src.order):
                if f[src.add[x][y]] != tgt.add[f[x]][f[y]]:
                    raise ValueError(f"map not additive at ({x}, {y})")
                if f[src.mul[x][y]] != tgt.mul[f[x]][f[y]]:
                    raise ValueError(f"map not multiplicative at ({x}, {y})")

    def __call__(self, x: int) -> int:
        return self.table[x]

    def kernel(self) -> CarrierSubset:
        z = self.target.zero
        return CarrierSubset.from_indices(
            self.source.order, (x for x, v in enumerate(self.table) if v == z)
        )

    def image_mask(self) -> int:
        out = 0
        for v in self.table:
            out |= 1 << v
        return out

    def is_injective(self) -> bool:
        return len(set(self.table)) == self.source.order

    def is_surjective(self) -> bool:
        return len(set(self.table)) == self.target.order

    def is_bijective(self) -> bool:
        return self.source.order == self.target.order and self.is_injective()

    @classmethod
    def identity(cls, ring: FiniteRing) -> "RingMap":
        return cls(ring, ring, tuple(range(ring.order)))

    def compose(self, inner: "RingMap") -> "RingMap":
        """self after inner."""
        if inner.target is not self.source and inner.target != self.source:
            raise ValueError("composition mismatch")
        return RingMap(inner.source, self.target, tuple(self.table[v] for v in inner.table))


def quotient(ring: FiniteRing, ideal: CarrierSubset) -> tuple[FiniteRing, RingMap]:
    """R/a together with the projection map; a must be a proper two-sided ideal."""
    if ideal.n != ring.order:
        raise NotAnIdeal("subset lives on a different carrier")
    if not is_additive_subgroup(ring, ideal):
        raise NotAnIdeal(f"{ideal} is not an additive subgroup")
    w = _absorbs(ring, ideal.mask, True, True)
    if w is not None:
        raise NotAnIdeal(f"{ideal} does not absorb multiplication at {w}")
    if len(ideal) == ring.order:
        raise ImproperIdeal("cannot form the quotient by the whole ring")
    add = ring.add
    n = ring.order
    ideal_elems = ideal.indices()
    coset_rep = [-1] * n
    for x in range(n):
        coset_rep[x] = min(add[x][i] for i in ideal_elems)
    reps = sorted(set(coset_rep))
    index_of = {r: k for k, r in enumerate(reps)}
    proj = tuple(index_of[coset_rep[x]] for x in range(n))
    k = len(reps)
    q_add = [[index_of[coset_rep[add[reps[i]][reps[j]]]] for j in range(k)] for i in range(k)]
    q_mul = [[index_of[coset_rep[ring.mul[reps[i]][reps[j]]]] for j in range(k)] for i in range(k)]
    names = None
    if ring.names is not None:
        names = [ring.names[r] for r in reps]
    q = FiniteRing(k, q_add, q_mul, proj[ring.zero], proj[ring.one], names)
    return q, RingMap(ring, q, proj)


@dataclass(frozen=True)
class ProductRing:
    """A direct product with its factor bookkeeping.

    projections are unital ring maps; embeddings are plain value tables
    (they do not preserve one, so they are not RingMaps).
    """

    ring: FiniteRing
    factors: tuple[FiniteRing, ...]
    projections: tuple[RingMap, ...]
    embeddings: tuple[tuple[int, ...], ...]

    def encode(self, parts: Sequence[int]) -> int:
        out = 0
        for ring_i, x in zip(self.factors, parts):
            out = out * ring_i.order + x
        return out

    def decode(self, x: int) -> tuple[int, ...]:
        parts = []
        for ring_i in reversed(self.factors):
            parts.append(x % ring_i.order)
            x //= ring_i.order
        return tuple(reversed(parts))


def direct_product(*factors: FiniteRing, guards: Guards = DEFAULT_GUARDS) -> ProductRing:
    """Componentwise product; leftmost factor is the most significant digit."""
    if not factors:
        raise ValueError("need at least one factor")
    n = 1
    for f in factors:
        n *= f.order
    if n > guards.order:
        raise SizeGuardExceeded("direct product", n, guards.order)

    radices = [f.order for f in factors]

    def decode(x: int) -> tuple[int, ...]:
        parts = []
        for r in reversed(radices):
            parts.append(x % r)
            x //= r
        return tuple(reversed(parts))

    def encode(parts: Sequence[int]) -> int:
        out = 0
        for r, x in zip(radices, parts):
            out = out * r + x
        return out

    decoded = [decode(x) for x in range(n)]
    add_t = [
        [encode([f.add[a[i]][b[i]] for i, f in enumerate(factors)]) for b in decoded]
        for a in decoded
    ]
    mul_t = [
        [encode([f.mul[a[i]][b[i]] for i, f in enumerate(factors)]) for b in decoded]
        for a in decoded
    ]
    zero = encode([f.zero for f in factors])
    one = encode([f.one for f in factors])
    names = None
    if all(f.names is not None for f in factors):
        names = [
            "(" + ",".join(f.names[p[i]] for i, f in enumerate(factors)) + ")"
            for p in decoded
        ]
    ring = FiniteRing(n, add_t, mul_t, zero, one, names)
    projections = tuple(
        RingMap(ring, f, tuple(decoded[x][i] for x in range(n)))
        for i, f in enumerate(factors)
    )
    embeddings = []
    zeros = [f.zero for f in factors]
    for i, f in enumerate(factors):
        table = []
        for x in range(f.order):
            parts = list(zeros)
            parts[i] = x
            table.append(encode(parts))
        embeddings.append(tuple(table))
    return ProductRing(ring, tuple(factors), projections, tuple(embeddings))


def opposite(ring: FiniteRing) -> FiniteRing:
    """Same carrier and addition, multiplication reversed; an involution."""
    mul_t = tuple(tuple(ring.mul[y][x] for y in range(ring.order)) for x in range(ring.order))
    return FiniteRing(ring.order, ring.add, mul_t, ring.zero, ring.one, ring.names)


def hom_is_R_isomorphism(
    phi: RingMap,
    source_canonical: RingMap | None = None,
    target_canonical: RingMap | None = None,
) -> bool:
    """Bijective, and compatible with canonical maps from a common base.

    When both canonical maps are given (base -> source, base -> target),
    the check requires phi(source_canonical(r)) == target_canonical(r)
    for every base element r.
    """
    if not phi.is_bijective():
        return False
    if source_canonical is not None or target_canonical is not None:
        if source_canonical is None or target_canonical is None:
            raise ValueError("need both canonical maps or neither")
        if source_canonical.source.order != target_canonical.source.order:
            raise ValueError("canonical maps must share a base ring")
        for r in range(source_canonical.source.order):
            if phi(source_canonical(r)) != target_canonical(r):
                return False
    return True
