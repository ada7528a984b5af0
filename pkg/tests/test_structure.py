"""Structural recognizers read off the table and lattice."""

import pytest

from latcover.errors import PrimeNotInOrder
from latcover.groups import build_group
from latcover.structure import (
    build_profile,
    derived_subgroup,
    frattini,
    is_abelian,
    is_cyclic,
    is_cyclic_pgroup_order_ge_p2,
    is_generalized_quaternion,
    is_nilpotent,
    is_normal,
    is_solvable,
    maximal_subgroups,
    omega1,
    order_p_subgroups_conjugate,
    p_complement,
    primes_of,
    sylow_subgroups,
)
from latcover.subgroups import closure
from latcover.verify import CATALOG, analyze_spec


def test_primes_of_accepts_group_or_order():
    assert primes_of(12) == [2, 3]
    assert primes_of(1) == []
    assert primes_of(build_group("A5")) == [2, 3, 5]
    assert primes_of(build_group("C1")) == []


def test_abelian_and_cyclic_flags():
    assert is_abelian(build_group("C12"))
    assert is_cyclic(build_group("C12"))
    assert is_abelian(build_group("C2xC2"))
    assert not is_cyclic(build_group("C2xC2"))
    assert not is_abelian(build_group("S3"))


def test_derived_subgroups():
    s3 = analyze_spec("S3")
    assert derived_subgroup(s3.group).elems == (0, 3, 4)
    assert derived_subgroup(analyze_spec("A4").group).order == 4
    assert derived_subgroup(analyze_spec("Q8").group).elems == (0, 4)
    assert derived_subgroup(analyze_spec("S4").group).order == 12
    assert derived_subgroup(analyze_spec("A5").group).order == 60
    assert derived_subgroup(analyze_spec("C12").group).order == 1


def test_solvability():
    for spec in ("C1", "S3", "S4", "Q16", "ZM(7,3,2)", "C2xC2xM3^3"):
        assert is_solvable(analyze_spec(spec).group), spec
    assert not is_solvable(analyze_spec("A5").group)


def test_is_normal():
    a = analyze_spec("S3")
    assert is_normal(a.group, closure(a.group, (3,)))
    assert not is_normal(a.group, closure(a.group, (2,)))


def test_sylow_subgroups():
    a = analyze_spec("S4")
    twos = sylow_subgroups(a.group, a.lattice, 2)
    assert [a.lattice.subs[i].order for i in twos] == [8, 8, 8]
    assert len(sylow_subgroups(a.group, a.lattice, 3)) == 4
    with pytest.raises(PrimeNotInOrder):
        sylow_subgroups(a.group, a.lattice, 5)
    with pytest.raises(PrimeNotInOrder):
        sylow_subgroups(a.group, a.lattice, 4)


def test_nilpotency():
    for spec, want in (("Q8", True), ("C12", True), ("D8", True), ("S3", False), ("D12", False), ("M3^3", True)):
        a = analyze_spec(spec)
        assert is_nilpotent(a.group, a.lattice) == want, spec


def test_omega1():
    d16 = analyze_spec("D16")
    assert omega1(d16.group, d16.lattice, 2).order == 16
    m33 = analyze_spec("M3^3")
    assert omega1(m33.group, m33.lattice, 3).order == 9
    c9 = analyze_spec("C9")
    assert omega1(c9.group, c9.lattice, 3).order == 3
    v4 = analyze_spec("C2xC2")
    assert omega1(v4.group, v4.lattice, 2).order == 4
    with pytest.raises(PrimeNotInOrder):
        omega1(d16.group, d16.lattice, 3)


def test_maximal_subgroups():
    a = analyze_spec("S3")
    assert [a.lattice.subs[i].order for i in maximal_subgroups(a.lattice)] == [2, 2, 2, 3]


def test_frattini():
    c8 = analyze_spec("C8")
    assert frattini(c8.group, c8.lattice).order == 4
    q8 = analyze_spec("Q8")
    assert frattini(q8.group, q8.lattice).elems == (0, 4)
    s3 = analyze_spec("S3")
    assert frattini(s3.group, s3.lattice).order == 1
    m33 = analyze_spec("M3^3")
    assert frattini(m33.group, m33.lattice).order == 3
    c1 = analyze_spec("C1")
    assert frattini(c1.group, c1.lattice).order == 1


def test_generalized_quaternion_recognizer():
    for spec, want in (
        ("Q8", True),
        ("Q16", True),
        ("Q32", True),
        ("C8", False),
        ("D8", False),
        ("SD16", False),
        ("M2^4", False),
        ("Dic3", False),
    ):
        a = analyze_spec(spec)
        assert is_generalized_quaternion(a.group, a.lattice) == want, spec


def test_cyclic_pgroup_recognizer():
    for spec, want in (
        ("C4", True),
        ("C8", True),
        ("C9", True),
        ("C25", True),
        ("C27", True),
        ("C2", False),
        ("C3", False),
        ("C6", False),
        ("C12", False),
        ("Q8", False),
    ):
        assert is_cyclic_pgroup_order_ge_p2(analyze_spec(spec).group) == want, spec


def test_order_p_conjugacy():
    a5 = analyze_spec("A5")
    for p in (2, 3, 5):
        assert order_p_subgroups_conjugate(a5.group, a5.lattice, a5.classes, p)
    v4 = analyze_spec("C2xC2")
    assert not order_p_subgroups_conjugate(v4.group, v4.lattice, v4.classes, 2)
    s4 = analyze_spec("S4")
    assert not order_p_subgroups_conjugate(s4.group, s4.lattice, s4.classes, 2)
    assert order_p_subgroups_conjugate(s4.group, s4.lattice, s4.classes, 3)
    with pytest.raises(PrimeNotInOrder):
        order_p_subgroups_conjugate(a5.group, a5.lattice, a5.classes, 7)


def test_p_complement():
    zm = analyze_spec("ZM(7,3,2)")
    assert p_complement(zm.group, zm.lattice, 7).order == 3
    a5 = analyze_spec("A5")
    assert p_complement(a5.group, a5.lattice, 5).order == 12
    assert p_complement(a5.group, a5.lattice, 3) is None
    assert p_complement(a5.group, a5.lattice, 2) is None
    s4 = analyze_spec("S4")
    assert p_complement(s4.group, s4.lattice, 3).order == 8
    assert p_complement(s4.group, s4.lattice, 2).order == 3
    c12 = analyze_spec("C12")
    assert p_complement(c12.group, c12.lattice, 2).order == 3
    with pytest.raises(PrimeNotInOrder):
        p_complement(c12.group, c12.lattice, 5)


def test_solvable_groups_have_all_p_complements():
    # Hall's theorem, checked on the small catalog members
    for spec in CATALOG:
        a = analyze_spec(spec)
        if a.group.order > 24 or not a.profile.is_solvable:
            continue
        for p in a.profile.primes:
            assert p_complement(a.group, a.lattice, p) is not None, (spec, p)


def test_profile_s4():
    a = analyze_spec("S4")
    pr = build_profile(a.group, a.lattice, a.classes)
    assert pr.primes == (2, 3)
    assert not pr.is_abelian
    assert not pr.is_cyclic
    assert not pr.is_p_group
    assert not pr.is_nilpotent
    assert pr.is_solvable
    assert not pr.is_generalized_quaternion
    assert pr.exponent_facts == {2: 9, 3: 4}


def test_profile_c12():
    pr = analyze_spec("C12").profile
    assert pr.primes == (2, 3)
    assert pr.is_abelian and pr.is_cyclic and pr.is_nilpotent and pr.is_solvable
    assert not pr.is_p_group
    assert pr.exponent_facts == {2: 1, 3: 1}


def test_profile_q16():
    pr = analyze_spec("Q16").profile
    assert pr.primes == (2,)
    assert pr.is_p_group and pr.is_generalized_quaternion
    assert pr.exponent_facts == {2: 1}
