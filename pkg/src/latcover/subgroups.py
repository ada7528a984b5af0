"""Subgroup enumeration and conjugacy classes of subgroups.

Subgroups are stored as sorted element-index tuples plus a bitmask over
0..order-1, and the full listing is sorted by (order, elements) so every
index mentioned in reports is stable across runs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .errors import SubgroupCapExceeded
from .groups import GroupTable

DEFAULT_MAX_SUBGROUPS = 100_000


@dataclass(frozen=True)
class Subgroup:
    elems: tuple[int, ...]

    @cached_property
    def mask(self) -> int:
        m = 0
        for e in self.elems:
            m |= 1 << e
        return m

    @property
    def order(self) -> int:
        return len(self.elems)


def closure(g: GroupTable, seed: tuple[int, ...] | list[int]) -> Subgroup:
    """Smallest subgroup containing the seed elements (and the identity)."""
    fresh = []
    seen = {0}
    for s in seed:
        if not 0 <= s < g.order:
            raise ValueError(f"seed element {s} out of range for order {g.order}")
        if s not in seen:
            seen.add(s)
            fresh.append(s)
    flags = bytearray(g.order)
    flags[0] = 1
    elems = [0]
    _extend(g, flags, elems, fresh)
    return Subgroup(tuple(sorted(elems)))


def _extend(g: GroupTable, flags: bytearray, elems: list[int], fresh: list[int]) -> None:
    """Grow (flags, elems) to closure after adding the fresh elements.

    flags/elems must already describe a subgroup not containing fresh.
    Mutates all three lists in place; elems ends unsorted.
    """
    mul = g.mul
    n = g.order
    for f in fresh:
        flags[f] = 1
    work = list(fresh)
    elems.extend(fresh)
    while work:
        a = work.pop()
        row = mul[a]
        for b in tuple(elems):
            for c in (row[b], mul[b][a]):
                if not flags[c]:
                    flags[c] = 1
                    elems.append(c)
                    work.append(c)
        if len(elems) > n // 2:
            # index 2 subgroups are as large as proper ones get
            for c in range(n):
                if not flags[c]:
                    flags[c] = 1
                    elems.append(c)
            return


def conjugate_subgroup(g: GroupTable, sub: Subgroup, x: int) -> Subgroup:
    """The subgroup x^-1 * sub * x."""
    mul = g.mul
    xi = g.inv[x]
    pre = mul[xi]
    return Subgroup(tuple(sorted(mul[pre[h]][x] for h in sub.elems)))


def normalizer(g: GroupTable, sub: Subgroup) -> Subgroup:
    """Elements whose conjugation maps sub onto itself."""
    mask = sub.mask
    mul = g.mul
    inv = g.inv
    keep = []
    for x in range(g.order):
        pre = mul[inv[x]]
        if all(mask >> mul[pre[h]][x] & 1 for h in sub.elems):
            keep.append(x)
    return Subgroup(tuple(keep))


@dataclass
class SubgroupLattice:
    """All subgroups of a group, ordered by inclusion.

    subset is a bitrow per subgroup: bit j of subset[i] means subs[i] is
    contained in subs[j].
    """

    group: GroupTable
    subs: list[Subgroup]
    subset: list[int]
    trivial_idx: int
    full_idx: int
    _by_elems: dict[tuple[int, ...], int] = field(repr=False, default_factory=dict)

    def __len__(self) -> int:
        return len(self.subs)

    def index_of(self, elems: tuple[int, ...] | Subgroup) -> int:
        if isinstance(elems, Subgroup):
            elems = elems.elems
        return self._by_elems[tuple(sorted(elems))]


def enumerate_subgroups(g: GroupTable, max_subgroups: int = DEFAULT_MAX_SUBGROUPS) -> SubgroupLattice:
    """Enumerate every subgroup of g.

    Works one conjugacy class at a time: each found subgroup is extended
    by single generators, and each new subgroup contributes its whole
    conjugation orbit.  Extending only class representatives reaches all
    classes, since closure(H, a) conjugates to closure(H^x, a^x).
    """
    n = g.order
    mul = g.mul
    inv = g.inv
    orders = g.element_orders

    # one generator per cyclic subgroup keeps the branching factor down
    cyclic_of: dict[int, tuple[int, ...]] = {}
    gen_reps: list[int] = []
    seen_cyc: set[int] = set()
    for a in range(1, n):
        elems = [0]
        x = a
        while x != 0:
            elems.append(x)
            x = mul[x][a]
        cyc = Subgroup(tuple(sorted(elems)))
        cyclic_of[a] = cyc.elems
        if cyc.mask not in seen_cyc:
            seen_cyc.add(cyc.mask)
            gen_reps.append(a)

    found: dict[int, tuple[int, ...]] = {1: (0,)}
    queue: list[tuple[int, ...]] = [(0,)]

    def add_orbit(elems: tuple[int, ...]) -> None:
        sub = Subgroup(elems)
        if sub.mask in found:
            return
        orbit = [sub]
        found[sub.mask] = elems
        for x in range(1, n):
            c = conjugate_subgroup(g, sub, x)
            if c.mask not in found:
                found[c.mask] = c.elems
                orbit.append(c)
        if len(found) > max_subgroups:
            raise SubgroupCapExceeded(
                f"more than {max_subgroups} subgroups in group of order {n}"
            )
        queue.append(elems)

    while queue:
        base = queue.pop()
        base_mask = 0
        for e in base:
            base_mask |= 1 << e
        if len(base) == n:
            continue
        for a in gen_reps:
            if base_mask >> a & 1:
                continue
            flags = bytearray(n)
            elems = list(base)
            for e in base:
                flags[e] = 1
            fresh = [e for e in cyclic_of[a] if not flags[e]]
            _extend(g, flags, elems, fresh)
            add_orbit(tuple(sorted(elems)))

    subs = [Subgroup(e) for e in sorted(found.values(), key=lambda t: (len(t), t))]
    index = {s.elems: i for i, s in enumerate(subs)}
    subset = []
    for s in subs:
        row = 0
        sm = s.mask
        for j, t in enumerate(subs):
            if sm & t.mask == sm:
                row |= 1 << j
        subset.append(row)
    return SubgroupLattice(
        group=g,
        subs=subs,
        subset=subset,
        trivial_idx=0,
        full_idx=len(subs) - 1,
        _by_elems=index,
    )


@dataclass
class ConjClassPoset:
    """Conjugacy classes of subgroups, ordered by contained-in-some-member.

    classes[c] lists subgroup indices; rep[c] is the least of them.  Bit
    c2 of leq[c1] means some member of c2 contains rep(c1).
    """

    lattice: SubgroupLattice
    classes: list[tuple[int, ...]]
    rep: list[int]
    leq: list[int]
    bottom_idx: int
    top_idx: int
    class_of: list[int]

    def __len__(self) -> int:
        return len(self.classes)


def conjugacy_classes(g: GroupTable, lat: SubgroupLattice) -> ConjClassPoset:
    nsub = len(lat.subs)
    class_of = [-1] * nsub
    classes: list[tuple[int, ...]] = []
    for i in range(nsub):
        if class_of[i] != -1:
            continue
        c = len(classes)
        orbit = {i}
        for x in range(1, g.order):
            orbit.add(lat.index_of(conjugate_subgroup(g, lat.subs[i], x)))
        for j in orbit:
            class_of[j] = c
        classes.append(tuple(sorted(orbit)))
    rep = [cls[0] for cls in classes]
    nc = len(classes)
    leq = []
    for c1 in range(nc):
        r = lat.subs[rep[c1]]
        row = 0
        for c2 in range(nc):
            if r.order and lat.subs[rep[c2]].order % r.order:
                continue
            if any(lat.subset[rep[c1]] >> j & 1 for j in classes[c2]):
                row |= 1 << c2
        leq.append(row)
    return ConjClassPoset(
        lattice=lat,
        classes=classes,
        rep=rep,
        leq=leq,
        bottom_idx=class_of[lat.trivial_idx],
        top_idx=class_of[lat.full_idx],
        class_of=class_of,
    )
