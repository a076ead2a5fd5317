"""Ring constructors, the ring file format, manifests, and hashing.

Element orderings are fixed and documented per constructor so that
tables, files and hashes are reproducible:

* ``zmod(n)``: residues 0..n-1.
* ``gf(q)``: little-endian digit index, element sum(c_i x^i) has index
  sum(c_i p^i).  The non-prime fields use fixed irreducibles:
  x^2+x+1 for 4, x^3+x+1 for 8, x^2+1 for 9.
* ``matrix(base, k)``: entries row-major, first entry most significant.
* ``upper_triangular(base, k)``: the on-or-above-diagonal positions
  row-major, first position most significant.
* ``product(...)``: leftmost factor most significant.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

from .errors import BadSpec, DEFAULT_GUARDS, Guards, ParseError, SizeGuardExceeded
from .rings import FiniteRing, direct_product, ideal_closure, quotient

__all__ = [
    "RingSpec",
    "BatchManifest",
    "parse_spec",
    "construct",
    "canonical_text",
    "canonical_hash",
    "save_ring_file",
    "load_ring_file",
    "parse_manifest",
    "DEFAULT_CATALOG",
]

_GF_IRREDUCIBLE = {
    4: (1, 1, 1),     # x^2 + x + 1 over F_2
    8: (1, 1, 0, 1),  # x^3 + x + 1 over F_2
    9: (1, 0, 1),     # x^2 + 1 over F_3
}
_GF_ORDERS = (2, 3, 4, 5, 7, 8, 9)


@dataclass(frozen=True)
class RingSpec:
    """Parsed constructor expression.

    args holds ints, nested RingSpecs, a path string (for file), or a
    tuple of generator indices (for quotient).
    """

    kind: str
    args: tuple

    def __str__(self) -> str:
        parts = []
        for a in self.args:
            if isinstance(a, tuple):
                parts.append("[" + ",".join(str(x) for x in a) + "]")
            else:
                parts.append(str(a))
        return f"{self.kind}({','.join(parts)})"


_KINDS = ("zmod", "gf", "matrix", "upper_triangular", "product", "quotient", "file")


class _SpecParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, reason: str):
        raise BadSpec(f"{reason} at position {self.pos} in {self.text!r}")

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, ch: str):
        self.skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def ident(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
            self.pos += 1
        if start == self.pos:
            self.error("expected a constructor name")
        return self.text[start:self.pos]

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected an integer")
        return int(self.text[start:self.pos])

    def int_list(self) -> tuple:
        self.expect("[")
        items = []
        if self.peek() != "]":
            items.append(self.integer())
            while self.peek() == ",":
                self.pos += 1
                items.append(self.integer())
        self.expect("]")
        return tuple(items)

    def path(self) -> str:
        # everything up to the matching close paren; quotes optional
        self.skip_ws()
        if self.peek() in ("'", '"'):
            q = self.text[self.pos]
            self.pos += 1
            start = self.pos
            end = self.text.find(q, start)
            if end < 0:
                self.error("unterminated quote")
            self.pos = end + 1
            return self.text[start:end]
        start = self.pos
        end = self.text.find(")", start)
        if end < 0:
            self.error("expected ')'")
        self.pos = end
        return self.text[start:end].strip()

    def spec(self) -> RingSpec:
        kind = self.ident()
        if kind not in _KINDS:
            self.error(f"unknown constructor {kind!r}")
        self.expect("(")
        args: list = []
        if kind == "zmod" or kind == "gf":
            args.append(self.integer())
        elif kind in ("matrix", "upper_triangular"):
            args.append(self.spec())
            self.expect(",")
            args.append(self.integer())
        elif kind == "product":
            args.append(self.spec())
            while self.peek() == ",":
                self.pos += 1
                args.append(self.spec())
            if len(args) < 2:
                self.error("product needs at least two factors")
        elif kind == "quotient":
            args.append(self.spec())
            self.expect(",")
            if self.peek() == "[":
                args.append(self.int_list())
            else:
                gens = [self.integer()]
                while self.peek() == ",":
                    self.pos += 1
                    gens.append(self.integer())
                args.append(tuple(gens))
        elif kind == "file":
            args.append(self.path())
        self.expect(")")
        return RingSpec(kind, tuple(args))


def parse_spec(text: str) -> RingSpec:
    p = _SpecParser(text)
    s = p.spec()
    p.skip_ws()
    if p.pos != len(text):
        p.error("trailing characters")
    return s


def _poly_name(digits: tuple[int, ...]) -> str:
    terms = []
    for power in range(len(digits) - 1, -1, -1):
        c = digits[power]
        if c == 0:
            continue
        if power == 0:
            terms.append(str(c))
        elif power == 1:
            terms.append("x" if c == 1 else f"{c}x")
        else:
            terms.append(f"x^{power}" if c == 1 else f"{c}x^{power}")
    return "+".join(terms) if terms else "0"


def _gf(q: int) -> FiniteRing:
    if q not in _GF_ORDERS:
        raise BadSpec(f"gf({q}) is not available; choose q in {_GF_ORDERS}")
    p = 2 if q in (2, 4, 8) else 3 if q in (3, 9) else q
    d = 1
    while p**d < q:
        d += 1
    if p**d != q:
        raise BadSpec(f"gf({q}): not a prime power")
    if d == 1:
        add = [[(i + j) % p for j in range(p)] for i in range(p)]
        mul = [[(i * j) % p for j in range(p)] for i in range(p)]
        return FiniteRing(p, add, mul, 0, 1, tuple(str(i) for i in range(p)))
    irr = _GF_IRREDUCIBLE[q]
    els = []
    for idx in range(q):
        digits, v = [], idx
        for _ in range(d):
            digits.append(v % p)
            v //= p
        els.append(tuple(digits))

    def reduce(poly: list[int]) -> tuple[int, ...]:
        poly = poly[:]
        for power in range(len(poly) - 1, d - 1, -1):
            c = poly[power]
            if c:
                for i, ic in enumerate(irr):
                    poly[power - d + i] = (poly[power - d + i] - c * ic) % p
        return tuple(poly[:d])

    def index(digits: tuple[int, ...]) -> int:
        v = 0
        for i in range(d - 1, -1, -1):
            v = v * p + digits[i]
        return v

    add = [[index(tuple((a[i] + b[i]) % p for i in range(d))) for b in els] for a in els]
    mul_t = []
    for a in els:
        row = []
        for b in els:
            prod = [0] * (2 * d - 1)
            for i, ai in enumerate(a):
                for j, bj in enumerate(b):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
            row.append(index(reduce(prod)))
        mul_t.append(row)
    names = tuple(_poly_name(e) for e in els)
    return FiniteRing(q, add, mul_t, 0, 1, names)


def _matrix_ring(base: FiniteRing, k: int, upper: bool, guards: Guards) -> FiniteRing:
    if k < 1:
        raise BadSpec("matrix size must be at least 1")
    if upper:
        positions = [(i, j) for i in range(k) for j in range(i, k)]
    else:
        positions = [(i, j) for i in range(k) for j in range(k)]
    m = len(positions)
    order = base.order**m
    if order > guards.order:
        raise SizeGuardExceeded(f"matrix ring of order {base.order}^{m}", order, guards.order)
    pos_index = {pq: t for t, pq in enumerate(positions)}
    b = base.order

    def decode(idx: int) -> list[int]:
        out = [0] * m
        for t in range(m - 1, -1, -1):
            out[t] = idx % b
            idx //= b
        return out

    def encode(entries: list[int]) -> int:
        v = 0
        for t in range(m):
            v = v * b + entries[t]
        return v

    mats = [decode(i) for i in range(order)]

    def at(entries: list[int], i: int, j: int) -> int:
        t = pos_index.get((i, j))
        return entries[t] if t is not None else base.zero

    badd, bmul = base.add, base.mul
    add_t = [[encode([badd[x[t]][y[t]] for t in range(m)]) for y in mats] for x in mats]
    mul_t = []
    for x in mats:
        row = []
        for y in mats:
            out = []
            for (i, j) in positions:
                acc = base.zero
                for l in range(k):
                    acc = badd[acc][bmul[at(x, i, l)][at(y, l, j)]]
                out.append(acc)
            row.append(encode(out))
        mul_t.append(row)
    zero = encode([base.zero] * m)
    one = encode([base.one if i == j else base.zero for (i, j) in positions])

    def mat_name(entries: list[int]) -> str:
        rows = []
        for i in range(k):
            rows.append("[" + ",".join(base.name_of(at(entries, i, j)) for j in range(k)) + "]")
        return "[" + ",".join(rows) + "]"

    names = tuple(mat_name(x) for x in mats)
    return FiniteRing(order, add_t, mul_t, zero, one, names)


def construct(spec: RingSpec | str, guards: Guards = DEFAULT_GUARDS) -> FiniteRing:
    """Build the ring a spec describes; every output is axiom-checked."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    kind = spec.kind
    if kind == "zmod":
        n = spec.args[0]
        if n < 2:
            raise BadSpec("zmod(n) needs n >= 2")
        if n > guards.order:
            raise SizeGuardExceeded(f"zmod({n})", n, guards.order)
        add = [[(i + j) % n for j in range(n)] for i in range(n)]
        mul = [[(i * j) % n for j in range(n)] for i in range(n)]
        return FiniteRing(n, add, mul, 0, 1, tuple(str(i) for i in range(n)))
    if kind == "gf":
        q = spec.args[0]
        if q > guards.order:
            raise SizeGuardExceeded(f"gf({q})", q, guards.order)
        return _gf(q)
    if kind in ("matrix", "upper_triangular"):
        base = construct(spec.args[0], guards)
        return _matrix_ring(base, spec.args[1], kind == "upper_triangular", guards)
    if kind == "product":
        factors = [construct(a, guards) for a in spec.args]
        return direct_product(*factors, guards=guards).ring
    if kind == "quotient":
        base = construct(spec.args[0], guards)
        gens = spec.args[1]
        for g in gens:
            if not 0 <= g < base.order:
                raise BadSpec(f"quotient generator {g} outside 0..{base.order - 1}")
        ideal = ideal_closure(base, gens, side="two")
        q, _ = quotient(base, ideal)
        return q
    if kind == "file":
        return load_ring_file(spec.args[0])
    raise BadSpec(f"unknown constructor {kind!r}")


def canonical_text(ring: FiniteRing, include_names: bool = True) -> str:
    """Serialize in the fixed field order: order, one, zero, add, mul, names."""
    lines = [f"order {ring.order}", f"one {ring.one}", f"zero {ring.zero}", "add"]
    for row in ring.add:
        lines.append(" ".join(str(v) for v in row))
    lines.append("mul")
    for row in ring.mul:
        lines.append(" ".join(str(v) for v in row))
    if include_names and ring.names is not None:
        lines.append("names")
        lines.append(" ".join(ring.names))
    return "\n".join(lines) + "\n"


def canonical_hash(ring: FiniteRing) -> str:
    """Content hash over the canonical form, names excluded.

    Table-level only: isomorphic rings with different tables hash apart.
    """
    text = canonical_text(ring, include_names=False)
    return hashlib.sha256(text.encode("ascii")).hexdigest()


def save_ring_file(ring: FiniteRing, path: str) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(canonical_text(ring))


def _parse_int(tok: str, lineno: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(lineno, f"{what}: {tok!r} is not an integer")


def load_ring_file(path: str) -> FiniteRing:
    """Read a ring file; structural problems raise ParseError with the
    offending line, mathematical ones surface as AxiomViolation."""
    try:
        with open(path, encoding="ascii") as fh:
            raw = fh.read()
    except OSError as e:
        raise ParseError(0, f"cannot read {path}: {e}")
    lines = raw.splitlines()
    pos = 0

    def next_line(what: str) -> tuple[int, str]:
        nonlocal pos
        while pos < len(lines) and not lines[pos].strip():
            pos += 1
        if pos >= len(lines):
            raise ParseError(len(lines), f"file ended while looking for {what}")
        pos += 1
        return pos, lines[pos - 1].strip()

    def keyword_value(key: str) -> int:
        lineno, line = next_line(key)
        parts = line.split()
        if len(parts) != 2 or parts[0] != key:
            raise ParseError(lineno, f"expected '{key} <integer>', got {line!r}")
        return _parse_int(parts[1], lineno, key)

    order = keyword_value("order")
    if order < 2:
        raise ParseError(pos, "order must be at least 2")
    one = keyword_value("one")
    zero = keyword_value("zero")

    def table(key: str) -> list[list[int]]:
        lineno, line = next_line(key)
        if line != key:
            raise ParseError(lineno, f"expected {key!r} header, got {line!r}")
        rows = []
        for _ in range(order):
            lineno, line = next_line(f"{key} row")
            toks = line.split()
            if len(toks) != order:
                raise ParseError(lineno, f"{key} row has {len(toks)} entries, expected {order}")
            rows.append([_parse_int(t, lineno, key) for t in toks])
        return rows

    add = table("add")
    mul = table("mul")

    names = None
    while pos < len(lines) and not lines[pos].strip():
        pos += 1
    if pos < len(lines):
        lineno, line = next_line("names")
        if line != "names":
            raise ParseError(lineno, f"unexpected content {line!r} after tables")
        lineno, line = next_line("names row")
        toks = tuple(line.split())
        if len(toks) != order:
            raise ParseError(lineno, f"names row has {len(toks)} entries, expected {order}")
        names = toks
        while pos < len(lines):
            if lines[pos].strip():
                raise ParseError(pos + 1, f"unexpected trailing content {lines[pos].strip()!r}")
            pos += 1

    for idx in (one, zero):
        if not 0 <= idx < order:
            raise ParseError(0, f"identity index {idx} outside 0..{order - 1}")
    return FiniteRing(order, add, mul, zero, one, names)


@dataclass(frozen=True)
class BatchManifest:
    specs: tuple[str, ...]
    analyses: tuple[str, ...]
    jobs: int | None
    out: str | None


def parse_manifest(text: str) -> BatchManifest:
    """Manifest grammar: 'ring <spec>', 'analysis <name>', 'jobs <n>',
    'out <dir>' directives, one per line; '#' starts a comment."""
    specs: list[str] = []
    analyses: list[str] = []
    jobs: int | None = None
    out: str | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split(None, 1)
        directive = parts[0]
        rest = parts[1].strip() if len(parts) > 1 else ""
        if directive == "ring":
            if not rest:
                raise ParseError(lineno, "ring directive needs a spec")
            try:
                parse_spec(rest)
            except BadSpec as e:
                raise ParseError(lineno, f"bad spec: {e}")
            specs.append(rest)
        elif directive == "analysis":
            if rest not in ("profile", "ore-report", "axioms"):
                raise ParseError(lineno, f"unknown analysis {rest!r}")
            analyses.append(rest)
        elif directive == "jobs":
            jobs = _parse_int(rest, lineno, "jobs")
            if jobs < 1:
                raise ParseError(lineno, "jobs must be positive")
        elif directive == "out":
            if not rest:
                raise ParseError(lineno, "out directive needs a directory")
            out = rest
        else:
            raise ParseError(lineno, f"unknown directive {directive!r}")
    if not analyses:
        analyses = ["profile"]
    return BatchManifest(tuple(specs), tuple(analyses), jobs, out)


# Curated coverage set: localizable and non-localizable rings, fields,
# a simple ring, non-semiprime triangular rings, and products mixing
# localization-maximal and non-maximal factors, all of order <= 48.
DEFAULT_CATALOG: tuple[str, ...] = (
    "zmod(2)",
    "zmod(3)",
    "zmod(4)",
    "zmod(5)",
    "zmod(6)",
    "zmod(7)",
    "zmod(8)",
    "zmod(9)",
    "zmod(10)",
    "zmod(11)",
    "zmod(12)",
    "gf(2)",
    "gf(3)",
    "gf(4)",
    "gf(5)",
    "gf(7)",
    "gf(8)",
    "gf(9)",
    "upper_triangular(gf(2),2)",
    "upper_triangular(gf(3),2)",
    "matrix(gf(2),2)",
    "product(gf(2),gf(3))",
    "product(gf(2),gf(2))",
    "product(gf(2),gf(2),gf(2))",
    "product(zmod(4),gf(3))",
    "product(gf(2),gf(3),gf(5))",
    "product(gf(2),matrix(gf(2),2))",
    "product(gf(2),upper_triangular(gf(2),2))",
    "product(gf(3),upper_triangular(gf(2),2))",
    "product(zmod(4),zmod(9))",
    "product(zmod(6),gf(7))",
)
