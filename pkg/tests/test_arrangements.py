import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from jacsyz.arrangements import (LineArrangement, arrangement_to_file,
                                 cone_construction, exponent_gap_check,
                                 faenzi_valles_check, lattice_isomorphic,
                                 multiplicity_bound_check,
                                 parse_arrangement_file, point_syzygy,
                                 tau_combinatorial, trichotomy)
from jacsyz.fields import QQ
from jacsyz.fixtures import get_fixture
from jacsyz.poly import poly_parse
from jacsyz.syzygy import is_primitive, mdr, verify_syzygy
from jacsyz.tjurina import classify, global_tjurina

covectors = st.lists(
    st.tuples(st.integers(-2, 2), st.integers(-2, 2), st.integers(-2, 2))
    .filter(lambda v: any(v)),
    min_size=3, max_size=7)


def _arr(covs):
    try:
        return LineArrangement(QQ, covs)
    except ValueError:  # repeated line after normalization
        return None


@settings(max_examples=60)
@given(covectors)
def test_lattice_pair_count_invariant(covs):
    A = _arr(covs)
    if A is None:
        return
    lat = A.lattice()
    assert sum(comb(p.multiplicity, 2) for p in lat.points) == comb(A.d, 2)
    for p in lat.points:
        assert len(p.lines) == p.multiplicity
        for i in p.lines:
            assert A.lines[i].contains(p.point)


@settings(max_examples=10, deadline=None)
@given(st.lists(
    st.tuples(st.integers(-2, 2), st.integers(-2, 2), st.integers(-2, 2))
    .filter(lambda v: any(v)),
    min_size=3, max_size=5))
def test_tau_combinatorial_is_tau(covs):
    A = _arr(covs)
    if A is None:
        return
    assert tau_combinatorial(A) == global_tjurina(A.f).tau


def test_known_lattices():
    A = get_fixture("ex1").arrangement
    lat = A.lattice()
    assert lat.m_max == 4
    assert [p.multiplicity for p in lat.points].count(4) == 1
    assert tau_combinatorial(A) == 19


def test_point_syzygy_all_points():
    A = get_fixture("ex1").arrangement
    for p in A.lattice().points:
        s = point_syzygy(A, p)
        assert verify_syzygy(A.f, s)
        assert s.degree == A.d - p.multiplicity
    # the modular point realizes the mdr: degree 6-4 = 2 = d1
    top = A.lattice().points[0]
    assert point_syzygy(A, top).degree == mdr(A.f)


def test_trichotomy_cases():
    A = get_fixture("ex1").arrangement  # r = 2 = d - m: case (0)
    assert trichotomy(A, A.lattice().points[0]).case == 0
    B = get_fixture("ex2a").arrangement  # r = 3 = d - m - 1 free: case (1)
    assert trichotomy(B, B.lattice().points[0]).case == 1


def test_multiplicity_bound():
    for name in ["triangle", "ex1", "ex2a", "ex2b"]:
        A = get_fixture(name).arrangement
        m, rhs, ok = multiplicity_bound_check(A)
        assert ok and Fraction(m) >= rhs


def test_exponent_gap():
    A = get_fixture("ex1").arrangement
    rep = classify(A.f)
    assert exponent_gap_check(rep, A.lattice().m_max)
    with pytest.raises(ValueError):
        exponent_gap_check(classify(poly_parse("x^4 + y^4 + z^4")), 2)


def test_faenzi_valles():
    # ex2a: d=8 free (3,4); k=3, ell=1 gives d=2k+ell+1
    v = faenzi_valles_check(get_fixture("ex2a").arrangement, 3, 1)
    assert v.free and v.exponents == (3, 4)
    with pytest.raises(ValueError):
        faenzi_valles_check(get_fixture("ex2a").arrangement, 2, 1)


def test_cone_construction():
    A = get_fixture("triangle").arrangement
    B, sk = cone_construction(A, (Fraction(1), Fraction(1), Fraction(1)))
    rep = classify(B.f)
    assert rep.classification == "free"
    assert rep.exponents == sk.expected_exponents
    assert rep.tau == sk.expected_tau
    with pytest.raises(ValueError):
        cone_construction(A, (Fraction(1), Fraction(0), Fraction(0)))


def test_lattice_isomorphic_projective_images():
    A = get_fixture("ex1").arrangement
    rng = random.Random(3)
    while True:
        M = [[Fraction(rng.randint(-3, 3)) for _ in range(3)]
             for _ in range(3)]
        det = (M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1])
               - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0])
               + M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]))
        if det != 0:
            break
    covs = [tuple(sum(M[i][j] * line.covector[i] for i in range(3))
                  for j in range(3)) for line in A.lines]
    B = LineArrangement(QQ, covs)
    assert lattice_isomorphic(A, B)
    assert not lattice_isomorphic(A, get_fixture("ex2a").arrangement)


def test_lattice_isomorphic_refuses_large_inputs():
    A = get_fixture("ex3").arrangement  # 19 lines is fine, 21 is not
    B = LineArrangement(QQ, [(1, 0, k) for k in range(11)]
                        + [(0, 1, k) for k in range(10)])
    with pytest.raises(ValueError):
        lattice_isomorphic(B, B)
    assert lattice_isomorphic(A, A)


def test_file_round_trip(tmp_path):
    A = get_fixture("ex2b").arrangement
    text = arrangement_to_file(A)
    B = parse_arrangement_file(text)
    assert [l.covector for l in A.lines] == [l.covector for l in B.lines]
    with pytest.raises(ValueError):
        parse_arrangement_file("lines\n1 0\n")
