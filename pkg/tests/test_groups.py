import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import CATALOG, grp
from normlat.catalog import group_from_catalog
from normlat.errors import ClosureCapExceeded, InvalidPermutation, NotNormal, TrivialGroup, UnknownName
from normlat.groups import (
    center,
    conjugacy_classes,
    cyclic_group,
    direct_product,
    group_from_permutations,
    is_simple,
    parse_cycles,
    quotient,
    subgroup_generated,
)
from normlat.lattice import enumerate_normal_subgroups, normal_closure


def perms(*cycles, degree=None):
    return [parse_cycles(c, degree) for c in cycles]


def closure_oracle(gens):
    """Naive orbit of the identity under right multiplication by generators."""
    n = len(gens[0]) if gens else 1
    seen = {tuple(range(n))}
    frontier = list(seen)
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = tuple(s[i] for i in x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def test_permutation_examples():
    assert group_from_permutations(perms("(1 2 3)", "(1 2)", degree=3)).order == 6
    assert group_from_permutations([]).order == 1
    d4 = perms("(1 2 3 4)", "(1 3)", degree=4)
    assert group_from_permutations(d4).order == 8 == len(closure_oracle(d4))


def test_permutation_errors():
    with pytest.raises(InvalidPermutation):
        group_from_permutations([[0, 0, 1]])
    with pytest.raises(ClosureCapExceeded):
        group_from_permutations(perms("(1 2 3 4 5 6)", "(1 2)", degree=6), cap=100)
    with pytest.raises(InvalidPermutation):
        parse_cycles("(1 2)(2 3)")


@settings(max_examples=30, deadline=None)
@given(st.lists(st.permutations(range(5)), min_size=1, max_size=3))
def test_closure_matches_orbit_oracle(gens):
    g = group_from_permutations(gens)
    assert g.order == len(closure_oracle([list(p) for p in gens]))
    assert g.identity == 0


def test_catalog_examples():
    assert grp("C2^3").order == 8 and grp("C2^3").exponent == 2
    assert grp("SL23").order == 24
    assert grp("S4xC3").order == 72
    assert group_from_catalog("perm:(1 2 3);(1 2)").order == 6
    with pytest.raises(UnknownName):
        group_from_catalog("Z7")
    with pytest.raises(UnknownName):
        group_from_catalog("S3x")


@pytest.mark.parametrize("name", CATALOG)
def test_axioms_and_class_partition(name):
    g = grp(name)
    g.check_axioms()
    cls = conjugacy_classes(g)
    assert cls[0].mask == 1
    seen = 0
    for c in cls:
        assert seen & c.mask == 0
        seen |= c.mask
        assert g.order % c.size == 0
        assert len(set(g.element_orders[c.member_indices])) == 1
    assert seen == g.full_mask
    keys = [(c.element_order, c.size, int(c.member_indices[0])) for c in cls]
    assert keys == sorted(keys)


@pytest.mark.parametrize("name", [c for c in CATALOG if grp(c).order <= 72])
def test_quotients_are_homomorphic_images(name):
    g = grp(name)
    for n in enumerate_normal_subgroups(g).nodes:
        q, qmap = quotient(g, n)
        assert q.order * n.order == g.order
        img = qmap.image
        assert (q.mul[img[:, None], img[None, :]] == img[g.mul]).all()
        assert qmap.kernel == n


def test_direct_product_examples():
    c6 = direct_product(cyclic_group(2), cyclic_group(3))
    assert c6.order == 6 and c6.is_abelian and c6.exponent == 6
    v4 = direct_product(cyclic_group(2), cyclic_group(2))
    assert v4.order == 4 and v4.exponent == 2
    a5c2 = grp("A5xC2")
    assert len(enumerate_normal_subgroups(a5c2)) == 2 * len(enumerate_normal_subgroups(grp("A5")))


def test_direct_product_associative_up_to_layout():
    a, b, c = grp("S3"), grp("C2"), grp("C3")
    left = direct_product(direct_product(a, b), c)
    right = direct_product(a, direct_product(b, c))
    # canonical layouts agree exactly for the (x*|B| + y)*|C| + z indexing
    assert (left.mul == right.mul).all()
    assert len(left.classes) == len(right.classes) == 3 * 6


def test_class_examples():
    assert [c.size for c in grp("S3").classes] == [1, 3, 2]
    assert [c.size for c in grp("C5").classes] == [1] * 5
    sl = grp("SL23")
    assert len(sl.classes) == 7
    assert sorted(c.size for c in sl.classes if c.element_order == 3) == [4, 4]


def test_center_examples():
    assert center(grp("S3")).is_trivial
    assert center(grp("C4xC2")).is_whole
    assert center(grp("Q8")).order == 2


def test_quotient_examples():
    s3 = grp("S3")
    a3 = normal_closure(s3, [s3.classes[2].representative])
    assert quotient(s3, a3)[0].order == 2
    g = grp("D4")
    q, _ = quotient(g, g.trivial)
    assert (q.mul == g.mul).all()
    sl = grp("SL23")
    q, _ = quotient(sl, center(sl))
    a4 = grp("A4")
    assert q.order == 12
    assert sorted(c.size for c in q.classes) == sorted(c.size for c in a4.classes)
    assert sorted(q.element_orders) == sorted(a4.element_orders)


def test_quotient_rejects_non_normal():
    s3 = grp("S3")
    h = subgroup_generated(s3, [s3.classes[1].representative])
    assert h.order == 2
    with pytest.raises(NotNormal):
        quotient(s3, h)


def test_is_simple_examples():
    assert is_simple(grp("A5"))
    assert is_simple(grp("C7"))
    assert not is_simple(grp("S4"))
    with pytest.raises(TrivialGroup):
        is_simple(cyclic_group(1))


def test_multiplication_table_brute_force_for_perm_input():
    gens = perms("(1 2 3 4)", "(1 2)", degree=4)
    g = group_from_permutations(gens)
    elems = [parse_cycles(l, 4) if l != "()" else list(range(4)) for l in g.labels]
    for x, y in itertools.product(range(g.order), repeat=2):
        z = [elems[y][elems[x][i]] for i in range(4)]  # x first, then y
        assert elems[g.mul[x, y]] == z
    assert np.all(g.mul[g.inv, np.arange(g.order)] == 0)
