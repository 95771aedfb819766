import itertools
from math import factorial

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import CATALOG, grp, lat, upto
from normlat.catalog import group_from_catalog
from normlat.errors import DomainError, NotNormal, TrivialGroup
from normlat.groups import cyclic_group, generate, subgroup_generated
from normlat.lattice import enumerate_normal_subgroups, normal_closure
from normlat.generation import (
    abelian_pgroup_tuple_count,
    class_count_in,
    class_generating_number_bruteforce,
    class_generating_number_structural,
    f_k_bruteforce,
    f_k_combinations,
    f_k_inversion,
    falling_factorial,
    generation_report,
    major_subgroups,
)


def test_class_count_examples():
    s3 = grp("S3")
    assert class_count_in(s3, lat("S3").nodes[1]) == 2
    assert class_count_in(s3, s3.trivial) == 1
    s4 = grp("S4")
    v4 = next(s for s in lat("S4").nodes if s.order == 4)
    assert class_count_in(s4, v4) == 2
    with pytest.raises(NotNormal):
        class_count_in(s3, subgroup_generated(s3, [s3.classes[1].representative]))


def test_class_generating_number_examples():
    assert class_generating_number_bruteforce(grp("S3")) == 1
    assert class_generating_number_bruteforce(grp("C2^2")) == 2
    assert class_generating_number_bruteforce(grp("A5")) == 1
    assert class_generating_number_structural(grp("SL23")) == 1
    assert class_generating_number_structural(grp("C2^3xC3")) == 3
    a5a5 = group_from_catalog("A5xA5")
    assert class_generating_number_structural(a5a5) == 1 == class_generating_number_bruteforce(a5a5)
    with pytest.raises(TrivialGroup):
        class_generating_number_structural(cyclic_group(1))


def test_f_k_examples():
    s3, v = grp("S3"), grp("C2^2")
    assert f_k_bruteforce(s3, s3.whole, 1) == 1
    for name in ("S3", "A4", "Q8"):
        assert f_k_bruteforce(grp(name), grp(name).trivial, 0) == 1
    assert f_k_bruteforce(v, v.whole, 2) == 6
    assert f_k_inversion(s3, 1) == 1
    assert f_k_inversion(v, 2) == 6
    assert f_k_inversion(v, 1) == 0
    with pytest.raises(DomainError):
        f_k_inversion(s3, -1)


@pytest.mark.parametrize("name", [c for c in upto(48) if len(grp(c).classes) <= 12])
def test_subset_counts_match_direct_enumeration(name):
    g = grp(name)
    for h in lat(name).nodes:
        for k in range(min(len(g.classes), 3) + 1):
            assert f_k_bruteforce(g, h, k, lat(name)) == f_k_combinations(g, h, k)


@pytest.mark.parametrize("name", upto(48))
def test_inversion_identity_on_every_normal_subgroup(name):
    g, L = grp(name), lat(name)
    for h in L.nodes:
        for k in range(len(g.classes) + 1):
            below = sum(f_k_bruteforce(g, t, k, L) for t in L.nodes if t <= h)
            assert below == falling_factorial(class_count_in(g, h), k)


@pytest.mark.parametrize("name", [c for c in CATALOG if grp(c).order > 1])
def test_generation_report_invariants(name):
    rep = generation_report(grp(name), lat=lat(name))
    d = rep.class_generating_number
    assert all(rep.fk[k] == 0 for k in range(d))
    assert rep.fk[d] > 0
    r = rep.major_subgroups[0]
    assert all(r <= t for t in rep.major_subgroups)


@pytest.mark.parametrize("spec,expected", [("C6", 1), ("C2^2xC3", 2), ("C2xC3^2", 2),
                                           ("C2^3xC3", 3), ("C2^2xC3^2", 2), ("C3^3xC2", 3),
                                           ("C2^4", 4), ("C2^3xC5", 3)])
def test_nilpotent_coprime_products(spec, expected):
    g = group_from_catalog(spec)
    assert class_generating_number_structural(g) == expected
    assert class_generating_number_bruteforce(g) == expected


def element_tuple_count(g, k):
    """Ordered k-tuples of distinct elements generating g, by enumeration."""
    hits = 0
    for combo in itertools.combinations(range(g.order), k):
        if generate(g, list(combo)).all():
            hits += 1
    return hits * factorial(k)


PGROUPS = [  # (spec, p, n, d)
    ("C2", 2, 1, 1), ("C4", 2, 2, 1), ("C2^2", 2, 2, 2), ("C8", 2, 3, 1), ("C4xC2", 2, 3, 2),
    ("C2^3", 2, 3, 3), ("C3", 3, 1, 1), ("C9", 3, 2, 1), ("C3^2", 3, 2, 2), ("Q8", 2, 3, 2),
    ("D4", 2, 3, 2), ("C4xC4", 2, 4, 2),
]


@pytest.mark.parametrize("spec,p,n,d", PGROUPS)
def test_pgroup_tuple_count_matches_enumeration(spec, p, n, d):
    g = group_from_catalog(spec)
    for k in range(0, 4):
        assert abelian_pgroup_tuple_count(p, n, d, k) == element_tuple_count(g, k)


def test_pgroup_tuple_count_examples():
    assert abelian_pgroup_tuple_count(2, 2, 2, 2) == 6 == (4 - 1) * (4 - 2)
    assert abelian_pgroup_tuple_count(3, 1, 1, 1) == 2
    for bad in ((4, 2, 1, 1), (2, 2, 3, 1), (2, 2, 0, 1), (2, 2, 1, -1)):
        with pytest.raises(DomainError):
            abelian_pgroup_tuple_count(*bad)


@given(st.sampled_from([2, 3]), st.integers(1, 4), st.data())
def test_pgroup_tuple_count_vanishes_below_rank(p, n, data):
    d = data.draw(st.integers(1, n))
    for k in range(d):
        assert abelian_pgroup_tuple_count(p, n, d, k) == 0
    assert abelian_pgroup_tuple_count(p, n, d, d) > 0


def test_major_subgroups_contain_radical():
    L = lat("SL23")
    assert [t.order for t in major_subgroups(L)] == [8, 24]
    assert [t.order for t in major_subgroups(lat("S3"))] == [3, 6]


def test_empty_tuple_conventions():
    g = cyclic_group(1)
    assert f_k_inversion(g, 0) == 1 and f_k_inversion(g, 1) == 0
    assert normal_closure(grp("S3"), np.array([], dtype=int)).is_trivial
