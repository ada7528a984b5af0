"""Verification suites, the pinned catalog, and the family scan."""

import pytest

from latcover.verify import (
    CATALOG,
    FAMILY_NAMES,
    SUITE_ORDER,
    SUITES,
    THEOREM1_BREAKING,
    THEOREM1_NONBREAKING,
    CaseResult,
    SuiteResult,
    analyze_spec,
    in_class_c,
    run_suites,
    scan_class_c,
    verify_theorem1,
    _family_specs,
)

# class membership for every catalog group, frozen after cross-checking the
# theorem-backed entries by hand
IN_CLASS = {
    "C1": False,
    "C2": False,
    "C3": False,
    "C4": True,
    "C6": True,
    "C8": True,
    "C9": True,
    "C12": True,
    "C25": True,
    "C27": True,
    "C2xC2": False,
    "D6": True,
    "D8": False,
    "D10": True,
    "D12": True,
    "D16": False,
    "D20": True,
    "D24": True,
    "D32": False,
    "Q8": True,
    "Q16": True,
    "Q32": True,
    "Dic3": True,
    "SD16": True,
    "M2^4": True,
    "M2^5": True,
    "M3^3": True,
    "M3^4": True,
    "S3": True,
    "S4": True,
    "A4": True,
    "A5": False,
    "ZM(7,3,2)": True,
    "ZM(5,4,2)": True,
    "Q8xC3": True,
    "C2xC2xM3^3": True,
}


def test_catalog_membership_is_pinned():
    assert set(IN_CLASS) == set(CATALOG)
    got = {spec: in_class_c(analyze_spec(spec)) for spec in CATALOG}
    assert got == IN_CLASS


def test_pinned_lists_sit_inside_catalog():
    assert set(THEOREM1_BREAKING) <= set(CATALOG)
    assert set(THEOREM1_NONBREAKING) <= set(CATALOG)
    assert not set(THEOREM1_BREAKING) & set(THEOREM1_NONBREAKING)


@pytest.mark.parametrize("name", SUITE_ORDER)
def test_each_suite_passes(name):
    result = SUITES[name]()
    assert result.name == name
    assert result.cases
    assert result.passed, [c for c in result.cases if not c.ok]


def test_theorem1_sweeps_whole_catalog():
    sr = verify_theorem1()
    mains = [c for c in sr.cases if c.claim == "breaking-point-iff-recognized"]
    assert [c.group for c in mains] == list(CATALOG)
    # every group with breaking points gets the uniqueness follow-ups
    pgroups = [c.group for c in sr.cases if c.claim == "is-p-group"]
    assert pgroups == list(THEOREM1_BREAKING)
    assert any(c.claim == "order-2-subgroup-unique" for c in sr.cases)


def test_theorem1_accepts_custom_catalog():
    sr = verify_theorem1(("C4", "S3"))
    assert sr.passed
    assert len([c for c in sr.cases if c.claim == "breaking-point-iff-recognized"]) == 2


def test_run_suites_expands_and_dedupes():
    names = [sr.name for sr in run_suites(("all",))]
    assert names == list(SUITE_ORDER)
    assert [sr.name for sr in run_suites(("theorem1", "all"))] == list(SUITE_ORDER)
    assert len(run_suites(("theorem9", "theorem9"))) == 1


def test_run_suites_rejects_unknown():
    with pytest.raises(ValueError):
        run_suites(("theorem2",))


def test_case_result_witness_omitted_when_none():
    d = CaseResult("G", "claim", 1, 1, True).to_dict()
    assert "witness" not in d
    d = CaseResult("G", "claim", 1, 1, True, witness={"m": "o2"}).to_dict()
    assert d["witness"] == {"m": "o2"}


def test_suite_result_flags_failures():
    sr = SuiteResult("fake", [CaseResult("G", "c", True, False, False)])
    assert not sr.passed
    assert sr.to_dict()["passed"] is False


def test_analyze_spec_is_cached():
    assert analyze_spec("S3") is analyze_spec("S3")


def test_family_specs_goldens():
    assert _family_specs("dihedral", 12) == ["D6", "D8", "D10", "D12"]
    assert _family_specs("dicyclic", 20) == ["Q8", "Dic3", "Q16", "Dic5"]
    assert _family_specs("modular", 100) == ["M2^4", "M2^5", "M2^6", "M3^3", "M3^4"]
    assert _family_specs("semidihedral", 64) == ["SD16", "SD32", "SD64"]
    assert _family_specs("symmetric", 24) == ["S3", "S4"]
    assert _family_specs("alternating", 60) == ["A4", "A5"]
    assert _family_specs("cyclic", 5) == ["C1", "C2", "C3", "C4", "C5"]


def test_family_specs_zm():
    # every Zassenhaus triple with m*n <= 21, checked by hand
    assert _family_specs("zm", 21) == [
        "ZM(3,2,2)",
        "ZM(3,4,2)",
        "ZM(5,2,4)",
        "ZM(5,4,2)",
        "ZM(5,4,3)",
        "ZM(5,4,4)",
        "ZM(7,2,6)",
        "ZM(7,3,2)",
        "ZM(7,3,4)",
        "ZM(9,2,8)",
    ]


def test_family_specs_rejects_unknown():
    with pytest.raises(ValueError):
        _family_specs("sporadic", 64)
    with pytest.raises(ValueError):
        scan_class_c(16, ("sporadic",))


def test_scan_rows_dihedral():
    rows = scan_class_c(16, ("dihedral",))
    assert [r.spec for r in rows] == ["D6", "D8", "D10", "D12", "D14", "D16"]
    by = {r.spec: r for r in rows}
    assert by["D6"].in_c and by["D6"].witnesses == 2
    assert not by["D8"].in_c and by["D8"].witnesses == 0
    assert by["D16"].n_subgroups == 19
    assert all(r.skipped is None for r in rows)


def test_scan_marks_capped_rows_skipped():
    rows = scan_class_c(16, ("dihedral",), max_subgroups=12)
    by = {r.spec: r for r in rows}
    assert by["D10"].skipped is None
    for spec in ("D12", "D16"):
        r = by[spec]
        assert r.skipped == "subgroup-cap"
        assert r.order == int(spec[1:])
        assert r.in_c is None and r.witnesses is None and r.n_subgroups is None


def test_scan_row_dict_keys():
    row = scan_class_c(8, ("dicyclic",))[0]
    d = row.to_dict()
    assert d["spec"] == "Q8"
    assert d["in_C"] is True
    assert d["witnesses"] == 4
    assert d["bp_Lbar"] is True
    assert d["is_nilpotent"] is True
    assert d["skipped"] is None


def test_scan_counts_match_membership():
    rows = scan_class_c(27, ("cyclic",))
    for r in rows:
        if r.spec in IN_CLASS:
            assert r.in_c == IN_CLASS[r.spec], r.spec
        assert r.in_c == (r.witnesses > 0)


def test_family_names_frozen():
    assert FAMILY_NAMES == (
        "cyclic",
        "dihedral",
        "dicyclic",
        "modular",
        "semidihedral",
        "symmetric",
        "alternating",
        "zm",
    )
