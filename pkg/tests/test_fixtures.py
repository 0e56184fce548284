import pytest

from jacsyz.arrangements import tau_combinatorial
from jacsyz.backend import make_backend
from jacsyz.fixtures import FIXTURES, fixture_names, get_fixture
from jacsyz.tjurina import classify

# cheap fixtures verified here in full; the expensive ones (ex3 and the
# larger parametric families) are exercised by the acceptance suite
CHEAP = ["triangle", "ex1", "ex2a", "ex2b", "ex5", "ex12i:2", "ex12i:3",
         "ex14i:3", "ex14ii:4", "ex14ii:5", "ex14iip:4"]


@pytest.fixture(scope="module")
def backend():
    return make_backend(seed=0)


@pytest.mark.parametrize("name", CHEAP)
def test_fixture_classification(name, backend):
    fx = get_fixture(name)
    exp = fx.expected
    rep = classify(fx.f, backend if fx.f.field.tag == "Q" else None)
    assert rep.d == exp["d"]
    assert rep.classification == exp["class"]
    assert rep.exponents == exp["exponents"]
    assert rep.mdr == exp["mdr"]
    assert rep.tau == exp["tau"]


@pytest.mark.parametrize("name", ["triangle", "ex1", "ex2a", "ex2b"])
def test_arrangement_fixtures_tau_combinatorial(name):
    fx = get_fixture(name)
    assert tau_combinatorial(fx.arrangement) == fx.expected["tau"]
    assert fx.arrangement.lattice().m_max == fx.expected["m"]


def test_all_names_resolve():
    for name in fixture_names():
        fx = get_fixture(name)
        assert fx.name == name
        assert fx.kind in ("arrangement", "curve", "pencil")


def test_unknown_name():
    with pytest.raises(KeyError):
        get_fixture("nope")


def test_fixture_list_is_stable():
    assert fixture_names() == FIXTURES
    assert len(set(FIXTURES)) == len(FIXTURES)


def test_seed_changes_prime_field_realization():
    a = get_fixture("ex5", seed=0).arrangement
    b = get_fixture("ex5", seed=1).arrangement
    assert a.field.p != b.field.p
    # same combinatorics regardless of the realization prime
    assert tau_combinatorial(a) == tau_combinatorial(b)
