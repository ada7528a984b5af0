"""Command line interface: analyze, verify, scan.

Exit codes: 0 success, 1 a verification suite failed, 2 bad usage or an
invalid spec, 3 an order or subgroup cap was exceeded.  Environment
variables LATCOVER_MAX_ORDER, LATCOVER_MAX_SUBGROUPS, LATCOVER_POSET and
LATCOVER_ALL_WITNESSES override the matching option defaults.  Stdout is
for humans; machine-readable output goes to --json/--csv paths only.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .errors import OrderCapExceeded, SpecInvalid, SubgroupCapExceeded
from .groups import DEFAULT_MAX_ORDER
from .posets import KINDS, PosetView, breaking_points, hasse_edges, two_interval_cover
from .subgroups import DEFAULT_MAX_SUBGROUPS
from .verify import Analysis, ScanRow, analyze_spec, run_suites, scan_class_c

SCAN_HEADER = (
    "spec",
    "order",
    "n_subgroups",
    "n_classes",
    "bp_L",
    "bp_Lbar",
    "bp_C",
    "bp_Cbar",
    "in_C",
    "witnesses",
)


@dataclass(frozen=True)
class PosetSummary:
    kind: str
    elements: int
    breaking_points: tuple[str, ...]

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "elements": self.elements,
            "breaking_points": list(self.breaking_points),
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "PosetSummary":
        return cls(d["kind"], d["elements"], tuple(d["breaking_points"]))


@dataclass(frozen=True)
class ClassCReport:
    member: bool
    witness_m: tuple[str, ...] | None = None
    witness_n: tuple[str, ...] | None = None
    witness_count: int | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "member": self.member,
            "witness_m": None if self.witness_m is None else list(self.witness_m),
            "witness_n": None if self.witness_n is None else list(self.witness_n),
            "witness_count": self.witness_count,
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "ClassCReport":
        return cls(
            d["member"],
            None if d["witness_m"] is None else tuple(d["witness_m"]),
            None if d["witness_n"] is None else tuple(d["witness_n"]),
            d["witness_count"],
        )


@dataclass(frozen=True)
class AnalysisReport:
    spec: str
    order: int
    primes: tuple[int, ...]
    is_abelian: bool
    is_cyclic: bool
    is_solvable: bool
    is_nilpotent: bool
    is_generalized_quaternion: bool
    n_subgroups: int
    n_classes: int
    posets: tuple[PosetSummary, ...]
    class_c: ClassCReport
    elapsed_s: float

    def to_dict(self) -> dict[str, Any]:
        return {
            "spec": self.spec,
            "order": self.order,
            "primes": list(self.primes),
            "is_abelian": self.is_abelian,
            "is_cyclic": self.is_cyclic,
            "is_solvable": self.is_solvable,
            "is_nilpotent": self.is_nilpotent,
            "is_generalized_quaternion": self.is_generalized_quaternion,
            "n_subgroups": self.n_subgroups,
            "n_classes": self.n_classes,
            "posets": [s.to_dict() for s in self.posets],
            "class_c": self.class_c.to_dict(),
            "elapsed_s": self.elapsed_s,
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "AnalysisReport":
        return cls(
            spec=d["spec"],
            order=d["order"],
            primes=tuple(d["primes"]),
            is_abelian=d["is_abelian"],
            is_cyclic=d["is_cyclic"],
            is_solvable=d["is_solvable"],
            is_nilpotent=d["is_nilpotent"],
            is_generalized_quaternion=d["is_generalized_quaternion"],
            n_subgroups=d["n_subgroups"],
            n_classes=d["n_classes"],
            posets=tuple(PosetSummary.from_dict(s) for s in d["posets"]),
            class_c=ClassCReport.from_dict(d["class_c"]),
            elapsed_s=d["elapsed_s"],
        )


def build_report(a: Analysis, all_witnesses: bool, elapsed_s: float) -> AnalysisReport:
    summaries = []
    for kind in KINDS:
        view = a.posets[kind]
        bps = breaking_points(view)
        summaries.append(PosetSummary(kind, view.size, tuple(view.labels[x] for x in bps)))
    view = a.posets["Lbar"]
    w = two_interval_cover(view, find_all=all_witnesses)
    if w is None:
        cc = ClassCReport(False, None, None, 0 if all_witnesses else None)
    else:
        labels = a.group.labels
        m_rep = a.lattice.subs[a.classes.rep[view.payload[w.m_idx]]]
        n_rep = a.lattice.subs[a.classes.rep[view.payload[w.n_idx]]]
        count = len(w.all_pairs) if all_witnesses else None
        cc = ClassCReport(
            True,
            tuple(labels[e] for e in m_rep.elems),
            tuple(labels[e] for e in n_rep.elems),
            count,
        )
    pr = a.profile
    return AnalysisReport(
        spec=a.spec,
        order=a.group.order,
        primes=pr.primes,
        is_abelian=pr.is_abelian,
        is_cyclic=pr.is_cyclic,
        is_solvable=pr.is_solvable,
        is_nilpotent=pr.is_nilpotent,
        is_generalized_quaternion=pr.is_generalized_quaternion,
        n_subgroups=len(a.lattice.subs),
        n_classes=len(a.classes.classes),
        posets=tuple(summaries),
        class_c=cc,
        elapsed_s=elapsed_s,
    )


def poset_dot(view: PosetView) -> str:
    """Hasse diagram in DOT form, edges pointing from covered to covering."""
    lines = ["digraph poset {"]
    for i, lab in enumerate(view.labels):
        lines.append(f'  n{i} [label="{lab}"];')
    for x, y in hasse_edges(view):
        lines.append(f"  n{x} -> n{y};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _cell(v: Any) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def _scan_cells(r: ScanRow) -> list[str]:
    wit = f"skipped:{r.skipped}" if r.skipped is not None else str(r.witnesses)
    return [
        r.spec,
        str(r.order),
        _cell(r.n_subgroups),
        _cell(r.n_classes),
        _cell(r.bp_l),
        _cell(r.bp_lbar),
        _cell(r.bp_c),
        _cell(r.bp_cbar),
        _cell(r.in_c),
        wit,
    ]


def scan_rows_csv(rows: list[ScanRow]) -> str:
    buf = io.StringIO()
    wr = csv.writer(buf, lineterminator="\n")
    wr.writerow(SCAN_HEADER)
    for r in rows:
        wr.writerow(_scan_cells(r))
    return buf.getvalue()


def scan_rows_table(rows: list[ScanRow]) -> str:
    """The same cells as the CSV, padded into an aligned text table."""
    table = [list(SCAN_HEADER)] + [_scan_cells(r) for r in rows]
    widths = [max(len(row[i]) for row in table) for i in range(len(SCAN_HEADER))]
    lines = [
        "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
        for row in table
    ]
    return "\n".join(lines) + "\n"


def _write_json(path: str, payload: Any) -> None:
    Path(path).write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")


def _fmt_flag(v: bool) -> str:
    return "yes" if v else "no"


def cmd_analyze(args: argparse.Namespace) -> int:
    t0 = time.perf_counter()
    try:
        a = analyze_spec(args.spec, args.max_order, args.max_subgroups)
    except SpecInvalid as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OrderCapExceeded, SubgroupCapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    report = build_report(a, args.all_witnesses, time.perf_counter() - t0)
    print(f"spec: {report.spec}")
    print(f"order: {report.order}")
    print(f"primes: {' '.join(str(p) for p in report.primes) or '-'}")
    print(
        "structure:"
        f" abelian={_fmt_flag(report.is_abelian)}"
        f" cyclic={_fmt_flag(report.is_cyclic)}"
        f" solvable={_fmt_flag(report.is_solvable)}"
        f" nilpotent={_fmt_flag(report.is_nilpotent)}"
        f" generalized-quaternion={_fmt_flag(report.is_generalized_quaternion)}"
    )
    print(f"subgroups: {report.n_subgroups}  classes: {report.n_classes}")
    for s in report.posets:
        bp = ", ".join(s.breaking_points) if s.breaking_points else "-"
        print(f"poset {s.kind}: {s.elements} elements, breaking points: {bp}")
    cc = report.class_c
    if cc.member:
        m_txt = "{" + ", ".join(cc.witness_m or ()) + "}"
        n_txt = "{" + ", ".join(cc.witness_n or ()) + "}"
        extra = f", witness pairs: {cc.witness_count}" if cc.witness_count is not None else ""
        print(f"class C: member, M = {m_txt}, N = {n_txt}{extra}")
    else:
        print("class C: not a member")
    print(f"elapsed: {report.elapsed_s:.3f}s")
    if args.json:
        _write_json(args.json, report.to_dict())
    if args.dot:
        Path(args.dot).write_text(poset_dot(a.posets[args.poset]), encoding="utf-8")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        results = run_suites(tuple(args.suites))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OrderCapExceeded, SubgroupCapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    rows = []
    for sr in results:
        for c in sr.cases:
            detail = "" if c.ok else f"expected={c.expected!r} computed={c.computed!r}"
            rows.append((sr.name, c.group, c.claim, "pass" if c.ok else "FAIL", detail))
    widths = [max(len(r[i]) for r in rows) for i in range(4)] if rows else [0, 0, 0, 0]
    for row in rows:
        line = "  ".join(row[i].ljust(widths[i]) for i in range(4)).rstrip()
        if row[4]:
            line += f"  {row[4]}"
        print(line)
    for sr in results:
        good = sum(1 for c in sr.cases if c.ok)
        mark = "pass" if sr.passed else "FAIL"
        print(f"suite {sr.name}: {mark} ({good}/{len(sr.cases)} cases)")
    all_passed = all(sr.passed for sr in results)
    print(f"verify: {'pass' if all_passed else 'FAIL'}")
    if args.json:
        payload = {"suites": [sr.to_dict() for sr in results], "passed": all_passed}
        _write_json(args.json, payload)
    return 0 if all_passed else 1


def cmd_scan(args: argparse.Namespace) -> int:
    families = tuple(args.families.split(",")) if args.families else None
    try:
        rows = scan_class_c(args.max_order, families, args.max_subgroups)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.csv:
        Path(args.csv).write_text(scan_rows_csv(rows), encoding="utf-8")
    if args.json:
        _write_json(args.json, {"rows": [r.to_dict() for r in rows]})
    if args.csv or args.json:
        members = sum(1 for r in rows if r.in_c)
        skipped = sum(1 for r in rows if r.skipped is not None)
        print(f"scanned {len(rows)} groups: {members} in class C, {skipped} skipped")
    else:
        sys.stdout.write(scan_rows_table(rows))
    return 0


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    return int(raw)


def _env_flag(name: str) -> bool:
    raw = os.environ.get(name, "").strip().lower()
    if raw in ("", "0", "false", "no", "off"):
        return False
    if raw in ("1", "true", "yes", "on"):
        return True
    raise ValueError(f"{name} must be a boolean-ish value, got {raw!r}")


def _build_parser() -> argparse.ArgumentParser:
    max_order = _env_int("LATCOVER_MAX_ORDER", DEFAULT_MAX_ORDER)
    max_subgroups = _env_int("LATCOVER_MAX_SUBGROUPS", DEFAULT_MAX_SUBGROUPS)
    poset = os.environ.get("LATCOVER_POSET", "Lbar")
    if poset not in KINDS:
        raise ValueError(f"LATCOVER_POSET must be one of {', '.join(KINDS)}, got {poset!r}")
    all_witnesses = _env_flag("LATCOVER_ALL_WITNESSES")

    parser = argparse.ArgumentParser(
        prog="latcover",
        description="Subgroup poset analysis: breaking points and two-interval covers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="analyze one group spec")
    pa.add_argument("spec", help="group spec, e.g. Q16, D8, M3^3, ZM(7,3,2), C2xC2xS3")
    pa.add_argument("--json", metavar="PATH", help="write the full report as JSON")
    pa.add_argument("--dot", metavar="PATH", help="write a Hasse diagram in DOT form")
    pa.add_argument("--poset", choices=KINDS, default=poset, help="which view --dot draws")
    pa.add_argument(
        "--all-witnesses",
        action="store_true",
        default=all_witnesses,
        help="count every covering pair instead of stopping at the first",
    )
    pa.add_argument("--max-order", type=int, default=max_order)
    pa.add_argument("--max-subgroups", type=int, default=max_subgroups)
    pa.set_defaults(func=cmd_analyze)

    pv = sub.add_parser("verify", help="run verification suites")
    pv.add_argument(
        "suites",
        nargs="*",
        default=["all"],
        help="theorem1 corollary3 prop4-5 theorem6 theorem9, or all (default)",
    )
    pv.add_argument("--json", metavar="PATH", help="write suite results as JSON")
    pv.set_defaults(func=cmd_verify)

    ps = sub.add_parser("scan", help="sweep group families for class membership")
    ps.add_argument("--max-order", type=int, default=max_order)
    ps.add_argument("--max-subgroups", type=int, default=max_subgroups)
    ps.add_argument(
        "--families",
        metavar="LIST",
        help="comma-separated family names (default: all families)",
    )
    ps.add_argument("--csv", metavar="PATH", help="write rows as CSV")
    ps.add_argument("--json", metavar="PATH", help="write rows as JSON")
    ps.set_defaults(func=cmd_scan)
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        parser = _build_parser()
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    return args.func(args)


def entrypoint() -> None:
    sys.exit(main())
