"""Poset views over a subgroup lattice and its conjugacy classes.

Four views share one representation: L (all subgroups), Lbar (classes
of subgroups), C (cyclic subgroups), Cbar (classes of cyclic
subgroups).  Order relations are bitrows: bit j of leq[i] means node i
lies below node j.  For C and Cbar the whole group is absent unless it
is itself cyclic, so those views may have no top.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import NotComparable
from .groups import GroupTable
from .subgroups import ConjClassPoset, Subgroup, SubgroupLattice

KINDS = ("L", "Lbar", "C", "Cbar")


def subgroup_is_cyclic(g: GroupTable, sub: Subgroup) -> bool:
    orders = g.element_orders
    return any(orders[e] == sub.order for e in sub.elems)


def _transpose(rows: list[int]) -> list[int]:
    out = [0] * len(rows)
    for i, row in enumerate(rows):
        r = row
        while r:
            j = (r & -r).bit_length() - 1
            out[j] |= 1 << i
            r &= r - 1
    return out


def _restrict(rows: list[int], keep: list[int]) -> list[int]:
    pos = {v: k for k, v in enumerate(keep)}
    out = []
    for i in keep:
        row = rows[i]
        nr = 0
        for j in keep:
            if row >> j & 1:
                nr |= 1 << pos[j]
        out.append(nr)
    return out


@dataclass
class PosetView:
    """One of the four poset views, with a fixed node order."""

    kind: str
    leq: list[int]
    labels: list[str]
    payload: list[int]      # subgroup index (L, C) or class index (Lbar, Cbar)
    orders: list[int]
    bottom_idx: int
    top_idx: int | None

    @property
    def size(self) -> int:
        return len(self.leq)

    def le(self, i: int, j: int) -> bool:
        return self.leq[i] >> j & 1 == 1

    @cached_property
    def down(self) -> list[int]:
        """Transpose of leq: bit i of down[j] means i lies below j."""
        return _transpose(self.leq)


def build_poset(g: GroupTable, lat: SubgroupLattice, ccp: ConjClassPoset, kind: str) -> PosetView:
    if kind == "L":
        return PosetView(
            kind=kind,
            leq=list(lat.subset),
            labels=[f"o{s.order}" for s in lat.subs],
            payload=list(range(len(lat.subs))),
            orders=[s.order for s in lat.subs],
            bottom_idx=lat.trivial_idx,
            top_idx=lat.full_idx,
        )
    if kind == "Lbar":
        orders = [lat.subs[r].order for r in ccp.rep]
        return PosetView(
            kind=kind,
            leq=list(ccp.leq),
            labels=[f"o{o}×{len(c)}" for o, c in zip(orders, ccp.classes)],
            payload=list(range(len(ccp.classes))),
            orders=orders,
            bottom_idx=ccp.bottom_idx,
            top_idx=ccp.top_idx,
        )
    if kind == "C":
        keep = [i for i, s in enumerate(lat.subs) if subgroup_is_cyclic(g, s)]
        pos = {v: k for k, v in enumerate(keep)}
        return PosetView(
            kind=kind,
            leq=_restrict(lat.subset, keep),
            labels=[f"o{lat.subs[i].order}" for i in keep],
            payload=keep,
            orders=[lat.subs[i].order for i in keep],
            bottom_idx=pos[lat.trivial_idx],
            top_idx=pos.get(lat.full_idx),
        )
    if kind == "Cbar":
        keep = [c for c in range(len(ccp.classes)) if subgroup_is_cyclic(g, lat.subs[ccp.rep[c]])]
        pos = {v: k for k, v in enumerate(keep)}
        orders = [lat.subs[ccp.rep[c]].order for c in keep]
        return PosetView(
            kind=kind,
            leq=_restrict(ccp.leq, keep),
            labels=[f"o{o}×{len(ccp.classes[c])}" for o, c in zip(orders, keep)],
            payload=keep,
            orders=orders,
            bottom_idx=pos[ccp.bottom_idx],
            top_idx=pos.get(ccp.top_idx),
        )
    raise ValueError(f"unknown poset kind {kind!r}, expected one of {KINDS}")


def breaking_points(p: PosetView) -> list[int]:
    """Nodes comparable to everything, other than the bottom and the top.

    In a view without a top, maximal nodes are excluded as well;
    anything below the missing whole group would not separate it.
    """
    full = (1 << p.size) - 1
    down = p.down
    out = []
    for x in range(p.size):
        if x == p.bottom_idx or x == p.top_idx:
            continue
        if p.top_idx is None and p.leq[x] == 1 << x:
            continue
        if p.leq[x] | down[x] == full:
            out.append(x)
    return out


@dataclass(frozen=True)
class IntervalCoverWitness:
    """A pair (m, n) whose down-set and up-set jointly cover the poset."""

    m_idx: int
    n_idx: int
    all_pairs: tuple[tuple[int, int], ...] | None = None


def two_interval_cover(p: PosetView, find_all: bool = False) -> IntervalCoverWitness | None:
    """First (m, n) with every node below m or above n, or None.

    Bottom and top are excluded as candidates for both slots; m = n is
    allowed.  Search order is fixed: m by descending order then label, n
    by ascending order then label, ties by node index.
    """
    full = (1 << p.size) - 1
    eligible = [x for x in range(p.size) if x != p.bottom_idx and x != p.top_idx]
    ms = sorted(eligible, key=lambda i: (-p.orders[i], p.labels[i]))
    ns = sorted(eligible, key=lambda i: (p.orders[i], p.labels[i]))
    down = p.down
    pairs: list[tuple[int, int]] = []
    for m in ms:
        dm = down[m]
        for n in ns:
            if dm | p.leq[n] == full:
                if not find_all:
                    return IntervalCoverWitness(m, n)
                pairs.append((m, n))
    if pairs:
        return IntervalCoverWitness(pairs[0][0], pairs[0][1], tuple(pairs))
    return None


def cover_holds(p: PosetView, m: int, n: int) -> bool:
    """Re-check a claimed cover pair node by node."""
    return all(p.le(x, m) or p.le(n, x) for x in range(p.size))


def interval(p: PosetView, a: int, b: int) -> list[int]:
    """All nodes x with a <= x <= b, ascending by node index."""
    if not p.le(a, b):
        raise NotComparable(f"nodes {a} and {b} are not comparable in {p.kind}")
    mask = p.leq[a] & p.down[b]
    out = []
    while mask:
        j = (mask & -mask).bit_length() - 1
        out.append(j)
        mask &= mask - 1
    return out


def hasse_edges(p: PosetView) -> list[tuple[int, int]]:
    """Covering pairs (x, y): x < y with nothing strictly between."""
    down = p.down
    edges = []
    for x in range(p.size):
        up = p.leq[x] & ~(1 << x)
        r = up
        while r:
            y = (r & -r).bit_length() - 1
            r &= r - 1
            between = up & down[y] & ~(1 << y)
            if between == 0:
                edges.append((x, y))
    return edges
