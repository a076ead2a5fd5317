"""Saturated families, maximal denominator sets, profiles, splittings."""

import pytest

from orelab import (
    CarrierSubset,
    Guards,
    SizeGuardExceeded,
    brute_force_denominator_sets,
    construct,
    is_left_localizable,
    is_localization_maximal,
    left_localization_radical,
    localization_profile,
    max_den,
    product_decomposition,
    saturated_denominator_sets,
    sided_profiles,
)

WIDE_GUARDS = Guards(order=256, left_ideals=64, brute_force=16)


def test_saturated_family_z6(z6):
    fam = saturated_denominator_sets(z6)
    got = {tuple(sorted(a)): tuple(sorted(s)) for a, s in fam.items()}
    assert got == {
        (0,): (1, 5),
        (0, 3): (1, 2, 4, 5),
        (0, 2, 4): (1, 3, 5),
    }


def test_max_den_z6(z6):
    assert [sorted(s) for s in max_den(z6)] == [[1, 2, 4, 5], [1, 3, 5]]


def test_max_den_z4(z4):
    fam = saturated_denominator_sets(z4)
    assert {tuple(sorted(a)) for a in fam} == {(0,)}
    assert [sorted(s) for s in max_den(z4)] == [[1, 3]]


def test_family_t2f2(t2f2):
    fam = saturated_denominator_sets(t2f2)
    got = {tuple(sorted(a)): tuple(sorted(s)) for a, s in fam.items()}
    assert got == {
        (0,): (5, 7),
        (0, 2, 4, 6): (1, 3, 5, 7),
    }
    assert [sorted(s) for s in max_den(t2f2)] == [[1, 3, 5, 7]]


def test_radical(z6, z4, z12, t2f2):
    assert sorted(left_localization_radical(z6)) == [0]
    assert sorted(left_localization_radical(z4)) == [0]
    assert sorted(left_localization_radical(z12)) == [0]
    assert sorted(left_localization_radical(t2f2)) == [0, 2, 4, 6]


def test_localization_maximal(z4, z6, m2f2, t2f2):
    assert is_localization_maximal(z4)
    assert not is_localization_maximal(z6)
    assert is_localization_maximal(m2f2)
    assert not is_localization_maximal(t2f2)
    assert is_localization_maximal(construct("gf(9)"))


def test_profile_z6(z6):
    prof = localization_profile(z6)
    assert sorted(prof.localizable) == [1, 2, 3, 4, 5]
    assert sorted(prof.completely_localizable) == [1, 5]
    assert sorted(prof.non_localizable) == [0]
    assert prof.verdict.localizable is True
    assert all(r.ran and r.value is True for r in prof.verdict.routes)
    assert len(prof.verdict.routes) == 4
    assert [fr.ring.order for fr in prof.localizations] == [3, 2]


def test_profile_z4(z4):
    prof = localization_profile(z4)
    assert prof.verdict.localizable is False
    assert sorted(prof.non_localizable) == [0, 2]
    assert sorted(prof.localizable) == [1, 3]
    dec = prof.decomposition
    assert dec.succeeded and dec.n_factors == 1
    assert dec.factors[0].order == 4
    assert dec.factor_division == (False,)


def test_profile_z12(z12):
    prof = localization_profile(z12)
    assert prof.verdict.localizable is False
    assert sorted(prof.non_localizable) == [0, 6]
    dec = prof.decomposition
    assert dec.succeeded and dec.n_factors == 2
    assert [f.order for f in dec.factors] == [4, 3]
    assert dec.factor_division == (False, True)
    assert dec.iso.is_bijective()


def test_profile_t2f2(t2f2):
    prof = localization_profile(t2f2)
    assert prof.verdict.localizable is False
    dec = prof.decomposition
    assert not dec.succeeded
    failed = {c.name for c in dec.conditions if not c.holds}
    assert failed == {"zero-localization-radical"}


def test_decomposition_condition_report(z6):
    dec = product_decomposition(z6)
    assert dec.succeeded and dec.n_factors == 2
    assert [f.order for f in dec.factors] == [3, 2]
    assert all(c.holds for c in dec.conditions)
    assert dec.factor_division == (True, True)


def test_is_left_localizable(z6, z4, m2f2):
    assert is_left_localizable(z6)
    assert not is_left_localizable(z4)
    assert not is_left_localizable(m2f2)
    assert is_left_localizable(construct("zmod(10)"))


def test_brute_force_guard(z12):
    with pytest.raises(SizeGuardExceeded):
        brute_force_denominator_sets(z12)
    found = brute_force_denominator_sets(z12, WIDE_GUARDS)
    sats = saturated_denominator_sets(z12)
    masks = {s.mask for s in sats.values()}
    # every brute-forced set saturates into the ideal-indexed family
    from orelab import MulSet, saturate

    for s in found:
        assert saturate(MulSet(z12, s)).mask in masks


def test_profile_guard():
    ring = construct("zmod(20)")
    with pytest.raises(SizeGuardExceeded):
        localization_profile(ring, Guards(order=16, left_ideals=16, brute_force=8))


def test_sided_profiles_t2f2(t2f2):
    sp = sided_profiles(t2f2)
    assert [sorted(s) for s in sp.left.maximal] == [[1, 3, 5, 7]]
    assert [sorted(s) for s in sp.right.maximal] == [[4, 5, 6, 7]]
    assert [sorted(s) for s in sp.two_sided_maximal] == [[5, 7]]
    assert sorted(sp.completely_localizable) == [5, 7]


def test_sided_profiles_commutative(z6):
    sp = sided_profiles(z6)
    assert {tuple(sorted(s)) for s in sp.left.maximal} == {
        tuple(sorted(s)) for s in sp.right.maximal
    }
    assert {tuple(sorted(s)) for s in sp.two_sided_maximal} == {(1, 2, 4, 5), (1, 3, 5)}


def test_decomposition_product_catalog():
    ring = construct("product(zmod(4),gf(3))")
    dec = product_decomposition(ring)
    assert dec.succeeded and dec.n_factors == 2
    assert sorted(f.order for f in dec.factors) == [3, 4]
    # localizability still fails because one factor is not a division ring
    assert not is_left_localizable(ring)
