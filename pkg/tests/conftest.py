import pytest

from orelab import DEFAULT_CATALOG, construct, localization_profile


@pytest.fixture(scope="session")
def z4():
    return construct("zmod(4)")


@pytest.fixture(scope="session")
def z6():
    return construct("zmod(6)")


@pytest.fixture(scope="session")
def z12():
    return construct("zmod(12)")


@pytest.fixture(scope="session")
def t2f2():
    # upper triangular 2x2 over F_2; elements encode (a, b, d) as a*4+b*2+d
    return construct("upper_triangular(gf(2),2)")


@pytest.fixture(scope="session")
def m2f2():
    return construct("matrix(gf(2),2)")


@pytest.fixture(scope="session")
def catalog_rings():
    return {spec: construct(spec) for spec in DEFAULT_CATALOG}


@pytest.fixture(scope="session")
def catalog_profiles(catalog_rings):
    # the expensive shared artifact; computed once for the whole run
    return {spec: localization_profile(ring) for spec, ring in catalog_rings.items()}
