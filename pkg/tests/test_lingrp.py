import pytest

from pzero import perm as P
from pzero.field import make_field
from pzero.lingrp import (
    FamilyError,
    FamilyId,
    build_family,
    build_psl2,
    build_psu3,
    build_su3_matrix,
    build_sz,
    divisors,
    expected_order,
    fpf_cyclic_divisors,
    fpf_witness,
    stabilizer_constants,
    unital_points,
)


def textbook_order(name, n):
    """Orders from the standard formulas, written out independently."""
    from math import gcd

    if name == "PSL2":
        return n * (n * n - 1)
    if name == "SZ":
        return n * n * (n * n + 1) * (n - 1)
    pgu = n**3 * (n**3 + 1) * (n * n - 1)
    if name == "PGU3" or name == "SU3":
        return pgu
    return pgu // gcd(3, n + 1)


@pytest.mark.parametrize(
    "name,n",
    [("PSL2", 4), ("PSL2", 8), ("PSL2", 16), ("PSL2", 32), ("SZ", 8), ("SZ", 32),
     ("PGU3", 4), ("PSU3", 4), ("PSU3", 8), ("PGU3", 8)],
)
def test_group_orders(name, n):
    a = build_family(name, n)
    assert a.group.order() == textbook_order(name, n) == expected_order(FamilyId(name, n))


def test_known_small_orders():
    assert textbook_order("PSL2", 4) == 60
    assert textbook_order("SZ", 8) == 29120
    assert textbook_order("PSU3", 4) == 62400
    assert textbook_order("PSU3", 8) == 5515776


@pytest.mark.parametrize("name,n", [("PSL2", 8), ("SZ", 8), ("PSU3", 4)])
def test_natural_action_structure(name, n):
    a = build_family(name, n)
    sp, sp1, h, degree = stabilizer_constants(a.family)
    assert a.degree == degree
    assert P.is_two_transitive(a.group)
    assert a.group.stabilizer(a.distinguished_point).order() == sp == sp1 * h
    assert a.sylow2.order() == sp1
    assert P.is_subgroup(a.group, a.sylow2)
    assert P.is_ti_subgroup(a.group, a.sylow2)
    invs = P.sample_involutions(a.group, 300)
    assert all(len(u.fixed_points()) == 1 for u in invs)


def test_family_id_validation():
    with pytest.raises(FamilyError):
        FamilyId("PSL2", 6)
    with pytest.raises(FamilyError):
        FamilyId("SZ", 16)
    with pytest.raises(FamilyError):
        FamilyId("PSL2", 2)
    with pytest.raises(FamilyError):
        FamilyId("GL", 4)
    assert FamilyId("SZ", 32).n0 == 4
    assert FamilyId("PSU3", 8).mu == 3 and FamilyId("PSU3", 4).mu == 1


def test_unital_has_n_cubed_affine_points():
    for n in (4, 8):
        pts = unital_points(n)
        assert len(pts) == n**3
        F = make_field(2 * (n.bit_length() - 1))
        assert all(F.pow(y, n) ^ y == F.pow(x, n + 1) for x, y in pts)


def test_unital_maps_preserve_the_unital():
    a = build_psu3(4)
    pts = set(a.point_labels)
    for f in a.point_maps.values():
        assert {f(p) for p in pts} == pts


def test_suzuki_swap_is_an_involution_of_the_ovoid():
    a = build_sz(8)
    swap = a.point_maps["swap"]
    for p in a.point_labels:
        assert swap(swap(p)) == p


def test_psl2_builder_matches_sympy_order():
    from sympy.combinatorics import Permutation as SP, PermutationGroup as SG

    a = build_psl2(16)
    assert SG([SP(list(g.images)) for g in a.group.generators]).order() == 16 * 255


def test_fpf_cyclic_divisors():
    assert fpf_cyclic_divisors(FamilyId("PSL2", 8)) == [1, 3, 9]
    assert fpf_cyclic_divisors(FamilyId("SZ", 8)) == [1, 5, 13]
    assert fpf_cyclic_divisors(FamilyId("PSU3", 4)) == [1, 5, 13]
    assert divisors(36) == [1, 2, 3, 4, 6, 9, 12, 18, 36]


def test_fpf_witnesses_exist():
    a = build_sz(8)
    for c in fpf_cyclic_divisors(a.family):
        w = fpf_witness(a, c)
        assert w is not None and w.order() == c
        assert all(not (w**k).fixed_points() for k in range(1, c))


@pytest.mark.parametrize("n,mu", [(4, 1), (8, 3)])
def test_su3_matrix_group(n, mu):
    m = build_su3_matrix(n)
    assert m.order() == textbook_order("SU3", n)
    assert m.center_order() == mu
    assert m.order() // mu == textbook_order("PSU3", n)
    for x in m.generators:
        assert m.is_unitary(x)
        assert m.ops.det(x) == 1


def test_su3_size_limit():
    with pytest.raises(FamilyError):
        build_su3_matrix(16)


def test_unknown_builder():
    with pytest.raises(FamilyError):
        build_family("SU3", 4)
