"""Machine checks for the covering and breaking-point statements.

Each suite replays one statement over a pinned catalog of small groups
and records per-case expected/computed values.  Suite names are part of
the command-line interface and stay fixed even if cases are added.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Callable

from .errors import SubgroupCapExceeded
from .groups import DEFAULT_MAX_ORDER, GroupTable, build_group, parse_spec
from .posets import (
    KINDS,
    PosetView,
    breaking_points,
    build_poset,
    cover_holds,
    subgroup_is_cyclic,
    two_interval_cover,
)
from .structure import (
    StructureProfile,
    build_profile,
    derived_subgroup,
    frattini,
    is_cyclic_pgroup_order_ge_p2,
    is_generalized_quaternion,
    omega1,
    order_p_subgroups_conjugate,
    p_complement,
    sylow_subgroups,
)
from .subgroups import (
    DEFAULT_MAX_SUBGROUPS,
    ConjClassPoset,
    SubgroupLattice,
    closure,
    conjugacy_classes,
    enumerate_subgroups,
)

# groups whose class poset has a breaking point, and contrasting ones that do not
THEOREM1_BREAKING = ("C4", "C8", "C9", "C25", "C27", "Q8", "Q16", "Q32")
THEOREM1_NONBREAKING = (
    "C6",
    "C2xC2",
    "D8",
    "D16",
    "S3",
    "S4",
    "A4",
    "A5",
    "M2^4",
    "M3^3",
    "ZM(7,3,2)",
    "C2xC2xM3^3",
)

CATALOG = (
    "C1",
    "C2",
    "C3",
    "C4",
    "C6",
    "C8",
    "C9",
    "C12",
    "C25",
    "C27",
    "C2xC2",
    "D6",
    "D8",
    "D10",
    "D12",
    "D16",
    "D20",
    "D24",
    "D32",
    "Q8",
    "Q16",
    "Q32",
    "Dic3",
    "SD16",
    "M2^4",
    "M2^5",
    "M3^3",
    "M3^4",
    "S3",
    "S4",
    "A4",
    "A5",
    "ZM(7,3,2)",
    "ZM(5,4,2)",
    "Q8xC3",
    "C2xC2xM3^3",
)


@dataclass
class Analysis:
    """Everything derived from one group spec, built once and shared."""

    spec: str
    group: GroupTable
    lattice: SubgroupLattice
    classes: ConjClassPoset
    posets: dict[str, PosetView]
    profile: StructureProfile


def _analyze(spec: str, max_order: int, max_subgroups: int) -> Analysis:
    parsed = parse_spec(spec)
    g = build_group(parsed, max_order)
    lat = enumerate_subgroups(g, max_subgroups)
    ccp = conjugacy_classes(g, lat)
    posets = {kind: build_poset(g, lat, ccp, kind) for kind in KINDS}
    return Analysis(parsed.canonical(), g, lat, ccp, posets, build_profile(g, lat, ccp))


@lru_cache(maxsize=None)
def analyze_spec(
    spec: str,
    max_order: int = DEFAULT_MAX_ORDER,
    max_subgroups: int = DEFAULT_MAX_SUBGROUPS,
) -> Analysis:
    """Cached full analysis of a spec string."""
    return _analyze(spec, max_order, max_subgroups)


def in_class_c(a: Analysis) -> bool:
    """Whether two intervals of the class poset cover it entirely."""
    return two_interval_cover(a.posets["Lbar"]) is not None


@dataclass(frozen=True)
class CaseResult:
    group: str
    claim: str
    expected: Any
    computed: Any
    ok: bool
    witness: Any = None

    def to_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {
            "group": self.group,
            "claim": self.claim,
            "expected": self.expected,
            "computed": self.computed,
            "ok": self.ok,
        }
        if self.witness is not None:
            d["witness"] = self.witness
        return d


@dataclass
class SuiteResult:
    name: str
    cases: list[CaseResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.cases)

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "cases": [c.to_dict() for c in self.cases],
        }


def _case(group: str, claim: str, expected: Any, computed: Any, witness: Any = None) -> CaseResult:
    return CaseResult(group, claim, expected, computed, expected == computed, witness)


def verify_theorem1(catalog: tuple[str, ...] | list[str] = CATALOG) -> SuiteResult:
    """Class-poset breaking points exist exactly for cyclic p-groups of
    order at least p^2 and for generalized quaternion groups."""
    cases = []
    for spec in catalog:
        a = analyze_spec(spec)
        view = a.posets["Lbar"]
        bps = breaking_points(view)
        recognized = is_cyclic_pgroup_order_ge_p2(a.group) or is_generalized_quaternion(
            a.group, a.lattice
        )
        has = bool(bps)
        if spec in THEOREM1_BREAKING:
            expected, ok = True, has and recognized
        elif spec in THEOREM1_NONBREAKING:
            expected, ok = False, not has and not recognized
        else:
            expected, ok = recognized, has == recognized
        cases.append(
            CaseResult(
                group=spec,
                claim="breaking-point-iff-recognized",
                expected=expected,
                computed=has,
                ok=ok,
                witness={
                    "recognizer": recognized,
                    "breaking_points": [view.labels[x] for x in bps],
                },
            )
        )
        if not has:
            continue
        cases.append(_case(spec, "is-p-group", True, a.profile.is_p_group))
        for x in bps:
            o = view.orders[x]
            count = sum(1 for s in a.lattice.subs if s.order == o)
            size = len(a.classes.classes[view.payload[x]])
            cases.append(_case(spec, f"order-{o}-subgroup-unique", 1, count))
            cases.append(_case(spec, f"order-{o}-class-size-one", 1, size))
    return SuiteResult("theorem1", cases)


def verify_corollary3(catalog: tuple[str, ...] | list[str] = CATALOG) -> SuiteResult:
    """Whether breaking points exist does not depend on which of the four
    poset views is asked."""
    cases = []
    for spec in catalog:
        a = analyze_spec(spec)
        flags = {kind: bool(breaking_points(a.posets[kind])) for kind in KINDS}
        agree = len(set(flags.values())) == 1
        cases.append(CaseResult(spec, "existence-agrees-across-views", True, agree, agree, flags))
    return SuiteResult("corollary3", cases)


_MODULAR = (("M2^4", 2, 4), ("M2^5", 2, 5), ("M3^3", 3, 3), ("M3^4", 3, 4))


def verify_prop4_prop5() -> SuiteResult:
    """The modular maximal-cyclic p-groups admit a two-interval cover with
    the expected named pair; dihedral 2-groups admit none."""
    cases = []
    for spec, p, n in _MODULAR:
        a = analyze_spec(spec)
        g, lat, ccp = a.group, a.lattice, a.classes
        view = a.posets["Lbar"]
        w = two_interval_cover(view, find_all=True)
        cases.append(_case(spec, "in-class-c", True, w is not None))
        if w is None:
            continue
        # generators sit at fixed word indices: x at p, y at 1
        xp = p * p
        xq = p ** (n - 2) * p
        m_named = ccp.class_of[lat.index_of(closure(g, (xp, 1)))]
        n_named = ccp.class_of[lat.index_of(closure(g, (xq,)))]
        cases.append(
            _case(
                spec,
                "named-pair-covers",
                True,
                cover_holds(view, m_named, n_named),
                witness={"m": view.labels[m_named], "n": view.labels[n_named]},
            )
        )
        cases.append(_case(spec, "named-pair-among-witnesses", True, (m_named, n_named) in w.all_pairs))
        om = omega1(g, lat, p)
        ph = frattini(g, lat)
        om_cls = ccp.class_of[lat.index_of(om)]
        ph_cls = ccp.class_of[lat.index_of(ph)]
        cases.append(_case(spec, "first-witness-m-contains-omega1", True, view.le(om_cls, w.m_idx)))
        cases.append(_case(spec, "first-witness-n-inside-frattini", True, view.le(w.n_idx, ph_cls)))
        cases.append(_case(spec, "derived-subgroup-order", p, derived_subgroup(g).order))
        cases.append(_case(spec, "omega1-order", p * p, om.order))
        cases.append(_case(spec, "frattini-generated-by-x-p", True, ph.elems == closure(g, (xp,)).elems))
        cases.append(_case(spec, "frattini-index", p * p, g.order // ph.order))
        cases.append(_case(spec, "minimal-subgroup-count", p + 1, a.profile.exponent_facts[p]))
    for spec in ("D8", "D16", "D32"):
        cases.append(_case(spec, "in-class-c", False, in_class_c(analyze_spec(spec))))
    return SuiteResult("prop4-5", cases)


def _qualifying_primes(a: Analysis) -> list[tuple[int, int, int]]:
    """Primes with a single class of order-p subgroups and a p-complement.

    Returns (p, complement subgroup index, order-p subgroup index) triples.
    """
    out = []
    for p in a.profile.primes:
        if not order_p_subgroups_conjugate(a.group, a.lattice, a.classes, p):
            continue
        comp = p_complement(a.group, a.lattice, p)
        if comp is None:
            continue
        small = next(i for i, s in enumerate(a.lattice.subs) if s.order == p)
        out.append((p, a.lattice.index_of(comp), small))
    return out


def verify_theorem6_and_corollaries() -> SuiteResult:
    """Solvable groups with at least two prime divisors land in the class,
    witnessed by a p-complement above and an order-p subgroup below."""
    cases = []
    for spec in ("S3", "D10", "ZM(7,3,2)", "ZM(5,4,2)", "Q8xC3"):
        a = analyze_spec(spec)
        view = a.posets["Lbar"]
        cases.append(_case(spec, "solvable", True, a.profile.is_solvable))
        cases.append(_case(spec, "at-least-two-primes", True, len(a.profile.primes) >= 2))
        cases.append(_case(spec, "in-class-c", True, in_class_c(a)))
        quals = _qualifying_primes(a)
        cases.append(_case(spec, "has-qualifying-prime", True, bool(quals)))
        for p, comp, small in quals:
            m_node = a.classes.class_of[comp]
            n_node = a.classes.class_of[small]
            cases.append(
                _case(
                    spec,
                    f"complement-cover-p{p}",
                    True,
                    cover_holds(view, m_node, n_node),
                    witness={"m": view.labels[m_node], "n": view.labels[n_node]},
                )
            )
    for spec in ("ZM(7,3,2)", "ZM(5,4,2)"):
        a = analyze_spec(spec)
        allcyc = all(
            subgroup_is_cyclic(a.group, a.lattice.subs[i])
            for p in a.profile.primes
            for i in sylow_subgroups(a.group, a.lattice, p)
        )
        cases.append(_case(spec, "all-sylow-cyclic", True, allcyc))
    # the four-point alternating group lands in the class with the classical
    # pair: Klein four-group above, a three-cycle subgroup below
    a4 = analyze_spec("A4")
    view4 = a4.posets["Lbar"]
    v4 = next(i for i, s in enumerate(a4.lattice.subs) if s.order == 4)
    c3 = next(i for i, s in enumerate(a4.lattice.subs) if s.order == 3)
    m4 = a4.classes.class_of[v4]
    n4 = a4.classes.class_of[c3]
    cases.append(_case("A4", "in-class-c", True, in_class_c(a4)))
    cases.append(
        _case(
            "A4",
            "klein-over-three-cycle-covers",
            True,
            cover_holds(view4, m4, n4),
            witness={"m": view4.labels[m4], "n": view4.labels[n4]},
        )
    )
    # solvability matters: the smallest nonsolvable group stays out
    a5 = analyze_spec("A5")
    cases.append(
        _case("A5", "order-3-single-class", True, order_p_subgroups_conjugate(a5.group, a5.lattice, a5.classes, 3))
    )
    cases.append(
        _case("A5", "order-5-single-class", True, order_p_subgroups_conjugate(a5.group, a5.lattice, a5.classes, 5))
    )
    cases.append(_case("A5", "solvable", False, a5.profile.is_solvable))
    cases.append(_case("A5", "in-class-c", False, in_class_c(a5)))
    # membership can hold with no qualifying prime at all
    big = analyze_spec("C2xC2xM3^3")
    cases.append(_case("C2xC2xM3^3", "in-class-c", True, in_class_c(big)))
    for p in (2, 3):
        cases.append(
            _case(
                "C2xC2xM3^3",
                f"order-{p}-classes-not-single",
                False,
                order_p_subgroups_conjugate(big.group, big.lattice, big.classes, p),
            )
        )
    cases.append(_case("C2xC2xM3^3", "qualifying-primes", [], [p for p, _, _ in _qualifying_primes(big)]))
    for order in (6, 10, 12, 20, 24, 8, 16, 32):
        spec = f"D{order}"
        expected = order & (order - 1) != 0
        cases.append(_case(spec, "in-class-c-iff-not-2-power", expected, in_class_c(analyze_spec(spec))))
    return SuiteResult("theorem6", cases)


_LIFT_PAIRS = (("M3^3", "C2xC2"), ("Q8", "C3"), ("C9", "C4"))


def verify_theorem9() -> SuiteResult:
    """A witness pair survives a direct product with a coprime factor:
    lift M to M x H and keep N x 1."""
    cases = []
    for s1, s2 in _LIFT_PAIRS:
        a1 = analyze_spec(s1)
        w = two_interval_cover(a1.posets["Lbar"])
        cases.append(_case(s1, "factor-in-class-c", True, w is not None))
        if w is None:
            continue
        prod_spec = f"{s1}x{s2}"
        ap = analyze_spec(prod_spec)
        n2 = ap.group.order // a1.group.order
        cases.append(_case(prod_spec, "coprime-orders", 1, math.gcd(a1.group.order, n2)))
        view1 = a1.posets["Lbar"]
        m_elems = a1.lattice.subs[a1.classes.rep[view1.payload[w.m_idx]]].elems
        n_elems = a1.lattice.subs[a1.classes.rep[view1.payload[w.n_idx]]].elems
        lifted_m = tuple(sorted(e * n2 + j for e in m_elems for j in range(n2)))
        lifted_n = tuple(e * n2 for e in n_elems)
        m_node = ap.classes.class_of[ap.lattice.index_of(lifted_m)]
        n_node = ap.classes.class_of[ap.lattice.index_of(lifted_n)]
        view = ap.posets["Lbar"]
        cases.append(
            _case(
                prod_spec,
                "lifted-pair-covers",
                True,
                cover_holds(view, m_node, n_node),
                witness={"m": view.labels[m_node], "n": view.labels[n_node]},
            )
        )
        cases.append(_case(prod_spec, "in-class-c", True, in_class_c(ap)))
    cases.append(_case("C6", "in-class-c", True, in_class_c(analyze_spec("C6"))))
    for spec in ("C2", "C3"):
        cases.append(_case(spec, "in-class-c", False, in_class_c(analyze_spec(spec))))
    for spec in ("S3xC1", "C1xS3"):
        cases.append(
            _case(
                spec,
                "trivial-factor-preserves-membership",
                in_class_c(analyze_spec("S3")),
                in_class_c(analyze_spec(spec)),
            )
        )
    return SuiteResult("theorem9", cases)


SUITE_ORDER = ("theorem1", "corollary3", "prop4-5", "theorem6", "theorem9")
SUITES: dict[str, Callable[[], SuiteResult]] = {
    "theorem1": verify_theorem1,
    "corollary3": verify_corollary3,
    "prop4-5": verify_prop4_prop5,
    "theorem6": verify_theorem6_and_corollaries,
    "theorem9": verify_theorem9,
}


def run_suites(names: tuple[str, ...] | list[str]) -> list[SuiteResult]:
    """Run the named suites in canonical order; 'all' expands to every suite."""
    want: list[str] = []
    for nm in names:
        if nm == "all":
            want.extend(SUITE_ORDER)
        elif nm in SUITES:
            want.append(nm)
        else:
            raise ValueError(
                f"unknown suite {nm!r}; choose from {', '.join(SUITE_ORDER)} or all"
            )
    seen: set[str] = set()
    ordered = [nm for nm in want if not (nm in seen or seen.add(nm))]
    return [SUITES[nm]() for nm in ordered]


# ---------------------------------------------------------------------------
# family scan


FAMILY_NAMES = (
    "cyclic",
    "dihedral",
    "dicyclic",
    "modular",
    "semidihedral",
    "symmetric",
    "alternating",
    "zm",
)


def _is_prime(v: int) -> bool:
    if v < 2:
        return False
    d = 2
    while d * d <= v:
        if v % d == 0:
            return False
        d += 1
    return True


def _family_specs(family: str, max_order: int) -> list[str]:
    if family == "cyclic":
        return [f"C{n}" for n in range(1, max_order + 1)]
    if family == "dihedral":
        return [f"D{n}" for n in range(6, max_order + 1, 2)]
    if family == "dicyclic":
        out = []
        for m in range(2, max_order // 4 + 1):
            out.append(f"Q{4 * m}" if m & (m - 1) == 0 else f"Dic{m}")
        return out
    if family == "modular":
        out = []
        p = 2
        while p**3 <= max_order:
            if _is_prime(p):
                n = 4 if p == 2 else 3
                while p**n <= max_order:
                    out.append(f"M{p}^{n}")
                    n += 1
            p += 1
        return out
    if family == "semidihedral":
        out = []
        o = 16
        while o <= max_order:
            out.append(f"SD{o}")
            o *= 2
        return out
    if family == "symmetric":
        out = []
        n = 3
        while math.factorial(n) <= max_order:
            out.append(f"S{n}")
            n += 1
        return out
    if family == "alternating":
        out = []
        n = 4
        while math.factorial(n) // 2 <= max_order:
            out.append(f"A{n}")
            n += 1
        return out
    if family == "zm":
        out = []
        for m in range(2, max_order // 2 + 1):
            for n in range(2, max_order // m + 1):
                for r in range(2, m):
                    if math.gcd(m, n * (r - 1)) != 1:
                        continue
                    if pow(r, n, m) != 1:
                        continue
                    out.append(f"ZM({m},{n},{r})")
        return out
    raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILY_NAMES)}")


@dataclass(frozen=True)
class ScanRow:
    spec: str
    order: int
    n_subgroups: int | None = None
    n_classes: int | None = None
    bp_l: bool | None = None
    bp_lbar: bool | None = None
    bp_c: bool | None = None
    bp_cbar: bool | None = None
    in_c: bool | None = None
    witnesses: int | None = None
    is_abelian: bool | None = None
    is_cyclic: bool | None = None
    is_nilpotent: bool | None = None
    is_solvable: bool | None = None
    skipped: str | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "spec": self.spec,
            "order": self.order,
            "n_subgroups": self.n_subgroups,
            "n_classes": self.n_classes,
            "bp_L": self.bp_l,
            "bp_Lbar": self.bp_lbar,
            "bp_C": self.bp_c,
            "bp_Cbar": self.bp_cbar,
            "in_C": self.in_c,
            "witnesses": self.witnesses,
            "is_abelian": self.is_abelian,
            "is_cyclic": self.is_cyclic,
            "is_nilpotent": self.is_nilpotent,
            "is_solvable": self.is_solvable,
            "skipped": self.skipped,
        }


def scan_class_c(
    max_order: int = DEFAULT_MAX_ORDER,
    families: tuple[str, ...] | list[str] | None = None,
    max_subgroups: int = DEFAULT_MAX_SUBGROUPS,
) -> list[ScanRow]:
    """Sweep whole families up to an order bound, one row per group.

    Rows come out in family order, ascending within each family.  A row
    whose subgroup enumeration trips the cap is kept but marked skipped.
    Analyses are not cached; a long sweep holds one group at a time.
    """
    fams = FAMILY_NAMES if families is None else tuple(families)
    for fam in fams:
        if fam not in FAMILY_NAMES:
            raise ValueError(f"unknown family {fam!r}; choose from {', '.join(FAMILY_NAMES)}")
    rows = []
    for fam in fams:
        for spec in _family_specs(fam, max_order):
            try:
                a = _analyze(spec, max_order, max_subgroups)
            except SubgroupCapExceeded:
                order = parse_spec(spec).expected_order() or 0
                rows.append(ScanRow(spec=spec, order=order, skipped="subgroup-cap"))
                continue
            view = a.posets["Lbar"]
            w = two_interval_cover(view, find_all=True)
            rows.append(
                ScanRow(
                    spec=a.spec,
                    order=a.group.order,
                    n_subgroups=len(a.lattice.subs),
                    n_classes=len(a.classes.classes),
                    bp_l=bool(breaking_points(a.posets["L"])),
                    bp_lbar=bool(breaking_points(a.posets["Lbar"])),
                    bp_c=bool(breaking_points(a.posets["C"])),
                    bp_cbar=bool(breaking_points(a.posets["Cbar"])),
                    in_c=w is not None,
                    witnesses=len(w.all_pairs) if w is not None else 0,
                    is_abelian=a.profile.is_abelian,
                    is_cyclic=a.profile.is_cyclic,
                    is_nilpotent=a.profile.is_nilpotent,
                    is_solvable=a.profile.is_solvable,
                )
            )
    return rows
