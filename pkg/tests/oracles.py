"""Brute-force reference implementations the fast engine is tested against.

Everything here trades speed for obviousness: subgroups come from an
exhaustive subset sweep, poset facts from the raw definitions.  Results
are cached per spec string because several test modules share them.
"""

from __future__ import annotations

import itertools

import numpy as np

from latcover.groups import GroupTable, element_order
from latcover.posets import PosetView
from latcover.verify import analyze_spec

_SUBGROUP_CACHE: dict[str, list[tuple[int, ...]]] = {}


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def brute_subgroups(g: GroupTable) -> list[tuple[int, ...]]:
    """Every subgroup, found by testing subsets for closure.

    A finite subset containing the identity and closed under the product
    is a subgroup, so closure is the only thing checked.  Feasible up to
    order 24 or so.
    """
    if g.order <= 16:
        return _brute_bitmask(g)
    return _brute_batched(g)


def _brute_bitmask(g: GroupTable) -> list[tuple[int, ...]]:
    n = g.order
    mul = g.mul
    divs = set(_divisors(n))
    out = []
    for mask in range(1 << (n - 1)):
        elems = [0] + [i + 1 for i in range(n - 1) if mask >> i & 1]
        if len(elems) not in divs:
            continue
        es = set(elems)
        if all(mul[a][b] in es for a in elems for b in elems):
            out.append(tuple(elems))
    return sorted(out, key=lambda t: (len(t), t))


def _brute_batched(g: GroupTable) -> list[tuple[int, ...]]:
    # same sweep, but sized subsets streamed through numpy in batches
    n = g.order
    m = np.asarray(g.mul, dtype=np.int64)
    orders = [element_order(g, i) for i in range(n)]
    out = [(0,)]
    for d in _divisors(n):
        if d == 1:
            continue
        allowed = [i for i in range(1, n) if d % orders[i] == 0]
        if len(allowed) < d - 1:
            continue
        combos = itertools.combinations(allowed, d - 1)
        while True:
            batch = list(itertools.islice(combos, 200_000))
            if not batch:
                break
            cand = np.zeros((len(batch), d), dtype=np.int64)
            cand[:, 1:] = np.asarray(batch, dtype=np.int64)
            bm = np.zeros(len(batch), dtype=np.int64)
            for j in range(d):
                bm |= np.int64(1) << cand[:, j]
            # products against the second element prune most rows cheaply
            p1 = m[cand[:, 1][:, None], cand]
            ok = np.ones(len(batch), dtype=bool)
            for j in range(d):
                ok &= (bm >> p1[:, j] & 1).astype(bool)
            for row in cand[ok]:
                es = {int(v) for v in row}
                if all(int(m[a, b]) in es for a in row for b in row):
                    out.append(tuple(int(v) for v in row))
    return sorted(out, key=lambda t: (len(t), t))


def subgroups_by_spec(spec: str) -> list[tuple[int, ...]]:
    if spec not in _SUBGROUP_CACHE:
        _SUBGROUP_CACHE[spec] = brute_subgroups(analyze_spec(spec).group)
    return _SUBGROUP_CACHE[spec]


def brute_breaking_points(view: PosetView) -> list[int]:
    out = []
    for x in range(view.size):
        if x == view.bottom_idx or x == view.top_idx:
            continue
        if view.top_idx is None and not any(view.le(x, y) for y in range(view.size) if y != x):
            continue
        if all(view.le(x, y) or view.le(y, x) for y in range(view.size)):
            out.append(x)
    return out


def brute_cover_pairs(view: PosetView) -> list[tuple[int, int]]:
    els = [
        x
        for x in range(view.size)
        if x != view.bottom_idx and (view.top_idx is None or x != view.top_idx)
    ]
    pairs = []
    for m in els:
        for n in els:
            if all(view.le(x, m) or view.le(n, x) for x in range(view.size)):
                pairs.append((m, n))
    return pairs


def brute_hasse(view: PosetView) -> list[tuple[int, int]]:
    def lt(a: int, b: int) -> bool:
        return a != b and view.le(a, b)

    edges = []
    for x in range(view.size):
        for y in range(view.size):
            if lt(x, y) and not any(lt(x, z) and lt(z, y) for z in range(view.size)):
                edges.append((x, y))
    return edges


def reachability(size: int, edges: list[tuple[int, int]]) -> list[int]:
    """Reflexive-transitive closure of an edge list, as leq bitrows."""
    adj: list[list[int]] = [[] for _ in range(size)]
    for x, y in edges:
        adj[x].append(y)
    rows = []
    for x in range(size):
        seen = {x}
        stack = [x]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        row = 0
        for v in seen:
            row |= 1 << v
        rows.append(row)
    return rows
