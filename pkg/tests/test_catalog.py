"""Constructors, spec parsing, ring files, hashing, manifests."""

import pytest

from orelab import (
    AxiomViolation,
    BadSpec,
    DEFAULT_CATALOG,
    Guards,
    ParseError,
    SizeGuardExceeded,
    canonical_hash,
    canonical_text,
    construct,
    load_ring_file,
    parse_manifest,
    parse_spec,
    save_ring_file,
    units,
)


def test_parse_spec_round_trip():
    for text in (
        "zmod(6)",
        "gf(8)",
        "matrix(gf(2),2)",
        "upper_triangular(gf(3),2)",
        "product(gf(2),gf(3),gf(5))",
        "product(zmod(4),matrix(gf(2),2))",
        "quotient(zmod(12),[4])",
    ):
        assert str(parse_spec(text)) == text
    # bare-integer generators are sugar for the bracketed list
    assert parse_spec("quotient(zmod(12),4)") == parse_spec("quotient(zmod(12),[4])")


def test_parse_spec_errors():
    for bad in ("zmod", "zmod()", "zmod(x)", "gf(6)", "product(gf(2))",
                "matrix(gf(2))", "frobnicate(3)", "zmod(6) trailing"):
        with pytest.raises(BadSpec):
            parse_spec(bad)
            construct(bad)


def test_zmod_construction():
    z5 = construct("zmod(5)")
    assert z5.order == 5 and z5.mul[3][4] == 2
    with pytest.raises(BadSpec):
        construct("zmod(1)")


def test_gf_construction():
    f4 = construct("gf(4)")
    assert f4.order == 4
    names = [f4.name_of(i) for i in range(4)]
    assert names == ["0", "1", "x", "x+1"]
    assert f4.mul[2][2] == 3  # x * x = x + 1
    assert f4.add[2][3] == 1  # x + (x+1) = 1
    f8 = construct("gf(8)")
    assert len(units(f8)) == 7


def test_gf9_multiplication():
    f9 = construct("gf(9)")
    # reduction polynomial x^2 + 1; element 3 is x, so x*x = -1 = 2
    assert f9.mul[3][3] == 2
    assert f9.name_of(3) == "x"
    assert f9.name_of(5) == "x+2"


def test_matrix_ring():
    m = construct("matrix(gf(2),2)")
    assert m.order == 16
    assert len(units(m)) == 6  # |GL_2(F_2)|
    t = construct("upper_triangular(gf(3),2)")
    assert t.order == 27
    assert len(units(t)) == 12  # 2 * 2 * 3


def test_matrix_names():
    t = construct("upper_triangular(gf(2),2)")
    assert t.name_of(t.one) == "[[1,0],[0,1]]"
    assert t.name_of(0) == "[[0,0],[0,0]]"


def test_construct_guard():
    with pytest.raises(SizeGuardExceeded):
        construct("matrix(gf(3),3)")
    with pytest.raises(SizeGuardExceeded):
        construct("zmod(300)")
    construct("zmod(300)", Guards(order=1024, left_ideals=64, brute_force=8))


def test_quotient_spec(z4):
    q = construct("quotient(zmod(12),4)")
    assert q.order == 4
    assert canonical_hash(q) == canonical_hash(z4)


def test_product_spec_flattening():
    p = construct("product(gf(2),gf(3))")
    assert p.order == 6
    nested = construct("product(gf(2),product(gf(3),gf(5)))")
    assert nested.order == 30


def test_canonical_hash_ignores_names(z6):
    text_with = canonical_text(z6, include_names=True)
    text_without = canonical_text(z6, include_names=False)
    assert ("names" in text_with) >= ("names" in text_without)
    h1 = canonical_hash(z6)
    assert h1 == canonical_hash(construct("zmod(6)"))
    assert h1 != canonical_hash(construct("zmod(4)"))


def test_ring_file_round_trip(tmp_path, t2f2):
    path = tmp_path / "t2f2.ring"
    save_ring_file(t2f2, str(path))
    back = load_ring_file(str(path))
    assert canonical_hash(back) == canonical_hash(t2f2)
    assert back.name_of(back.one) == t2f2.name_of(t2f2.one)


def test_ring_file_parse_errors(tmp_path, z4):
    path = tmp_path / "z.ring"
    save_ring_file(z4, str(path))
    good = path.read_text()

    truncated = tmp_path / "short.ring"
    truncated.write_text("\n".join(good.splitlines()[:4]) + "\n")
    with pytest.raises(ParseError):
        load_ring_file(str(truncated))

    mangled = tmp_path / "mangled.ring"
    mangled.write_text(good.replace("order 4", "order four"))
    with pytest.raises(ParseError) as exc:
        load_ring_file(str(mangled))
    assert exc.value.line >= 1

    trailing = tmp_path / "trailing.ring"
    trailing.write_text(good + "unexpected\n")
    with pytest.raises(ParseError):
        load_ring_file(str(trailing))


def test_ring_file_axiom_check(tmp_path, z4):
    path = tmp_path / "broken.ring"
    save_ring_file(z4, str(path))
    lines = path.read_text().splitlines()
    # corrupt one multiplication entry: associativity dies, parsing does not
    mul_at = lines.index("mul")
    row = lines[mul_at + 3].split()
    row[-1] = "1" if row[-1] != "1" else "2"
    lines[mul_at + 3] = " ".join(row)
    path.write_text("\n".join(lines) + "\n")
    with pytest.raises(AxiomViolation):
        load_ring_file(str(path))


def test_manifest_parsing():
    m = parse_manifest(
        """
        # comment
        ring zmod(6)
        ring gf(4)  # inline comment
        analysis profile
        analysis axioms
        jobs 4
        out reports
        """
    )
    assert m.specs == ("zmod(6)", "gf(4)")
    assert m.analyses == ("profile", "axioms")
    assert m.jobs == 4 and m.out == "reports"


def test_manifest_errors():
    with pytest.raises(ParseError):
        parse_manifest("ring zmod(oops)")
    with pytest.raises(ParseError):
        parse_manifest("analysis frobnicate")
    with pytest.raises(ParseError):
        parse_manifest("jobs zero")
    with pytest.raises(ParseError):
        parse_manifest("frobnicate zmod(6)")
    empty = parse_manifest("# nothing\n")
    assert empty.specs == () and empty.analyses == ("profile",)


def test_default_catalog_constructs(catalog_rings):
    assert len(DEFAULT_CATALOG) == 31
    orders = {spec: ring.order for spec, ring in catalog_rings.items()}
    assert orders["zmod(2)"] == 2
    assert orders["product(zmod(6),gf(7))"] == 42
    assert max(orders.values()) <= 48
