"""Finite groups as validated Cayley tables.

Every group family is realized through a fixed normal-form element
encoding, so tables, subgroup listings, and downstream reports come out
byte-identical across runs.  Elements are the integers 0..order-1 and
the identity always sits at index 0.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from functools import cached_property, reduce

import numpy as np

from .errors import OrderCapExceeded, SpecInvalid

DEFAULT_MAX_ORDER = 512


@dataclass(eq=False, repr=False)
class GroupTable:
    """A finite group on 0..order-1 with identity 0.

    Treated as immutable after construction; instances are safe to share.
    """

    order: int
    mul: list[list[int]]
    inv: list[int]
    labels: list[str]
    spec: str
    identity: int = 0

    def __repr__(self) -> str:
        return f"GroupTable({self.spec!r}, order={self.order})"

    @cached_property
    def element_orders(self) -> list[int]:
        return [element_order(self, i) for i in range(self.order)]


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    problem: str | None = None
    witness: tuple[int, ...] | None = None


def element_order(g: GroupTable, i: int) -> int:
    """Least k >= 1 with i multiplied by itself k times giving the identity."""
    if not 0 <= i < g.order:
        raise ValueError(f"element index {i} out of range for order {g.order}")
    k = 1
    x = i
    while x != 0:
        x = g.mul[x][i]
        k += 1
    return k


def validate_group(g: GroupTable) -> ValidationResult:
    """Check the four table axioms, reporting the first violation found.

    Checks run in a fixed order: latin square, identity row/column,
    two-sided inverses, associativity.  The witness is an index triple
    locating the violation.
    """
    n = g.order
    if n < 1 or len(g.mul) != n or any(len(row) != n for row in g.mul):
        return ValidationResult(False, "shape", (n,))
    if len(g.inv) != n or len(g.labels) != n:
        return ValidationResult(False, "shape", (n,))
    m = np.asarray(g.mul, dtype=np.int64)
    if m.min() < 0 or m.max() >= n:
        bad = np.argwhere((m < 0) | (m >= n))[0]
        return ValidationResult(False, "latin", (int(bad[0]), int(bad[1])))
    ar = np.arange(n)
    if not np.array_equal(np.sort(m, axis=1), np.broadcast_to(ar, (n, n))):
        for i in range(n):
            seen: dict[int, int] = {}
            for j, v in enumerate(g.mul[i]):
                if v in seen:
                    return ValidationResult(False, "latin", (i, seen[v], j))
                seen[v] = j
    if not np.array_equal(np.sort(m, axis=0), np.broadcast_to(ar[:, None], (n, n))):
        for j in range(n):
            seen = {}
            for i in range(n):
                v = g.mul[i][j]
                if v in seen:
                    return ValidationResult(False, "latin", (seen[v], i, j))
                seen[v] = i
    if not (np.array_equal(m[0], ar) and np.array_equal(m[:, 0], ar)):
        for i in range(n):
            if g.mul[0][i] != i:
                return ValidationResult(False, "identity", (0, i, g.mul[0][i]))
            if g.mul[i][0] != i:
                return ValidationResult(False, "identity", (i, 0, g.mul[i][0]))
    iv = np.asarray(g.inv, dtype=np.int64)
    if iv.min() < 0 or iv.max() >= n or not (
        np.array_equal(m[ar, iv], np.zeros(n, dtype=np.int64))
        and np.array_equal(m[iv, ar], np.zeros(n, dtype=np.int64))
    ):
        for i in range(n):
            j = g.inv[i]
            if not 0 <= j < n or g.mul[i][j] != 0 or g.mul[j][i] != 0:
                return ValidationResult(False, "inverse", (i, j, g.mul[i][j] if 0 <= j < n else -1))
    # full O(n^3) sweep, chunked so peak memory stays modest
    block = max(1, (1 << 21) // max(1, n * n))
    for s in range(0, n, block):
        rows = m[s : s + block]
        left = m[rows]          # left[b, j, k] = m[m[s+b, j], k]
        right = rows[:, m]      # right[b, j, k] = m[s+b, m[j, k]]
        if not np.array_equal(left, right):
            b, j, k = np.argwhere(left != right)[0]
            return ValidationResult(False, "associativity", (s + int(b), int(j), int(k)))
    return ValidationResult(True)


# ---------------------------------------------------------------------------
# construction expressions


class GroupSpec:
    """Base class for parsed group construction expressions."""

    def validate(self) -> None:
        raise NotImplementedError

    def expected_order(self) -> int | None:
        """Order implied by the parameters, or None when only known after closure."""
        raise NotImplementedError

    def canonical(self) -> str:
        raise NotImplementedError


def _is_pow2(v: int) -> bool:
    return v >= 1 and v & (v - 1) == 0


def _is_prime(v: int) -> bool:
    if v < 2:
        return False
    d = 2
    while d * d <= v:
        if v % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class Cyclic(GroupSpec):
    n: int

    def validate(self) -> None:
        if self.n < 1:
            raise SpecInvalid(f"cyclic order must be >= 1, got {self.n}")

    def expected_order(self) -> int:
        return self.n

    def canonical(self) -> str:
        return f"C{self.n}"


@dataclass(frozen=True)
class Dihedral(GroupSpec):
    order: int

    def validate(self) -> None:
        if self.order < 4 or self.order % 2:
            raise SpecInvalid(f"dihedral order must be even and >= 4, got {self.order}")

    def expected_order(self) -> int:
        return self.order

    def canonical(self) -> str:
        return f"D{self.order}"


@dataclass(frozen=True)
class Dicyclic(GroupSpec):
    m: int          # order is 4m; m a power of two gives the quaternion family

    def validate(self) -> None:
        if self.m < 2:
            raise SpecInvalid(f"dicyclic parameter must be >= 2, got {self.m}")

    def expected_order(self) -> int:
        return 4 * self.m

    def canonical(self) -> str:
        return f"Q{4 * self.m}" if _is_pow2(self.m) else f"Dic{self.m}"


@dataclass(frozen=True)
class ModularMaxCyclic(GroupSpec):
    p: int
    n: int

    def validate(self) -> None:
        if not _is_prime(self.p):
            raise SpecInvalid(f"modular family needs a prime base, got {self.p}")
        if self.p == 2 and self.n < 4:
            raise SpecInvalid(f"M2^n needs n >= 4, got n={self.n}")
        if self.p > 2 and self.n < 3:
            raise SpecInvalid(f"M{self.p}^n needs n >= 3, got n={self.n}")

    def expected_order(self) -> int:
        return self.p**self.n

    def canonical(self) -> str:
        return f"M{self.p}^{self.n}"


@dataclass(frozen=True)
class Semidihedral(GroupSpec):
    order: int

    def validate(self) -> None:
        if not _is_pow2(self.order) or self.order < 16:
            raise SpecInvalid(f"semidihedral order must be 2^n with n >= 4, got {self.order}")

    def expected_order(self) -> int:
        return self.order

    def canonical(self) -> str:
        return f"SD{self.order}"


@dataclass(frozen=True)
class Symmetric(GroupSpec):
    n: int

    def validate(self) -> None:
        if self.n < 1:
            raise SpecInvalid(f"symmetric degree must be >= 1, got {self.n}")

    def expected_order(self) -> int:
        return math.factorial(self.n)

    def canonical(self) -> str:
        return f"S{self.n}"


@dataclass(frozen=True)
class Alternating(GroupSpec):
    n: int

    def validate(self) -> None:
        if self.n < 1:
            raise SpecInvalid(f"alternating degree must be >= 1, got {self.n}")

    def expected_order(self) -> int:
        return math.factorial(self.n) // 2 if self.n >= 2 else 1

    def canonical(self) -> str:
        return f"A{self.n}"


@dataclass(frozen=True)
class ZM(GroupSpec):
    """Metacyclic group <a, b | a^m = b^n = 1, b a b^-1 = a^r>."""

    m: int
    n: int
    r: int

    def validate(self) -> None:
        if self.m < 1 or self.n < 1:
            raise SpecInvalid(f"ZM parameters must be positive, got ({self.m},{self.n},{self.r})")
        if not 1 <= self.r <= max(1, self.m):
            raise SpecInvalid(f"ZM twist {self.r} out of range for modulus {self.m}")
        if math.gcd(self.m, self.n * (self.r - 1)) != 1:
            raise SpecInvalid(
                f"ZM({self.m},{self.n},{self.r}) needs gcd(m, n*(r-1)) = 1"
            )
        if pow(self.r, self.n, self.m) != 1 % self.m:
            raise SpecInvalid(f"ZM({self.m},{self.n},{self.r}) needs r^n = 1 (mod m)")

    def expected_order(self) -> int:
        return self.m * self.n

    def canonical(self) -> str:
        return f"ZM({self.m},{self.n},{self.r})"


@dataclass(frozen=True)
class DirectProduct(GroupSpec):
    factors: tuple[GroupSpec, ...]

    def validate(self) -> None:
        if len(self.factors) < 2:
            raise SpecInvalid("direct product needs at least two factors")
        for f in self.factors:
            f.validate()

    def expected_order(self) -> int | None:
        total = 1
        for f in self.factors:
            o = f.expected_order()
            if o is None:
                return None
            total *= o
        return total

    def canonical(self) -> str:
        return "x".join(f.canonical() for f in self.factors)


@dataclass(frozen=True)
class PermGenerated(GroupSpec):
    """Closure of explicit permutation generators on points 0..degree-1."""

    degree: int
    generators: tuple[tuple[int, ...], ...]

    def validate(self) -> None:
        if self.degree < 1:
            raise SpecInvalid(f"permutation degree must be >= 1, got {self.degree}")
        for p in self.generators:
            if sorted(p) != list(range(self.degree)):
                raise SpecInvalid(f"not a permutation of 0..{self.degree - 1}: {p}")

    def expected_order(self) -> None:
        return None

    def canonical(self) -> str:
        gens = ";".join(_cycles_text(p) for p in self.generators)
        return f"perm:{self.degree}:{gens}"


# ---------------------------------------------------------------------------
# spec grammar


def _split_product(text: str) -> list[str]:
    parts = []
    depth = 0
    cur = []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise SpecInvalid(f"unbalanced parentheses in {text!r}")
        if ch == "x" and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth:
        raise SpecInvalid(f"unbalanced parentheses in {text!r}")
    parts.append("".join(cur))
    return parts


def _parse_cycles(degree: int, text: str) -> tuple[int, ...]:
    """One generator written as 1-based cycles, e.g. '(1,2)(3,4)'."""
    if text == "()":
        return tuple(range(degree))
    if not re.fullmatch(r"(\(\d+(,\d+)*\))+", text):
        raise SpecInvalid(f"bad cycle notation: {text!r}")
    perm = list(range(degree))
    for body in re.findall(r"\(([^()]*)\)", text):
        pts = [int(v) - 1 for v in body.split(",")]
        if any(not 0 <= v < degree for v in pts):
            raise SpecInvalid(f"cycle point out of range 1..{degree}: ({body})")
        if len(set(pts)) != len(pts):
            raise SpecInvalid(f"repeated point in cycle ({body})")
        cyc = list(range(degree))
        for a, b in zip(pts, pts[1:] + pts[:1]):
            cyc[a] = b
        # compose: apply accumulated permutation, then this cycle
        perm = [cyc[v] for v in perm]
    return tuple(perm)


def parse_spec(text: str) -> GroupSpec:
    """Parse a construction expression like 'Q16', 'ZM(7,3,2)' or 'C2xC2xM3^3'.

    The returned spec has already passed its family constraints.
    """
    s = text.strip()
    if not s:
        raise SpecInvalid("empty group spec")
    parts = _split_product(s)
    if len(parts) > 1:
        if any(not p for p in parts):
            raise SpecInvalid(f"empty factor in product spec {text!r}")
        spec: GroupSpec = DirectProduct(tuple(parse_spec(p) for p in parts))
    else:
        spec = _parse_atom(s)
    spec.validate()
    return spec


def _parse_atom(s: str) -> GroupSpec:
    if m := re.fullmatch(r"C(\d+)", s):
        return Cyclic(int(m.group(1)))
    if m := re.fullmatch(r"SD(\d+)", s):
        return Semidihedral(int(m.group(1)))
    if m := re.fullmatch(r"S(\d+)", s):
        return Symmetric(int(m.group(1)))
    if m := re.fullmatch(r"Dic(\d+)", s):
        return Dicyclic(int(m.group(1)))
    if m := re.fullmatch(r"D(\d+)", s):
        return Dihedral(int(m.group(1)))
    if m := re.fullmatch(r"Q(\d+)", s):
        q = int(m.group(1))
        if not _is_pow2(q) or q < 8:
            raise SpecInvalid(f"quaternion order must be 2^n >= 8, got {q}")
        return Dicyclic(q // 4)
    if m := re.fullmatch(r"M(\d+)\^(\d+)", s):
        return ModularMaxCyclic(int(m.group(1)), int(m.group(2)))
    if m := re.fullmatch(r"A(\d+)", s):
        return Alternating(int(m.group(1)))
    if m := re.fullmatch(r"ZM\((\d+),(\d+),(\d+)\)", s):
        return ZM(int(m.group(1)), int(m.group(2)), int(m.group(3)))
    if m := re.fullmatch(r"perm:(\d+):(.+)", s):
        degree = int(m.group(1))
        if degree < 1:
            raise SpecInvalid(f"permutation degree must be >= 1, got {degree}")
        gens = tuple(_parse_cycles(degree, part) for part in m.group(2).split(";"))
        return PermGenerated(degree, gens)
    raise SpecInvalid(f"unrecognized group spec {s!r}")


# ---------------------------------------------------------------------------
# table builders


def _inv_from_mul(mul: list[list[int]]) -> list[int]:
    return [row.index(0) for row in mul]


def _cyclic_label(i: int, name: str = "a") -> str:
    if i == 0:
        return "1"
    return name if i == 1 else f"{name}^{i}"


def _build_cyclic(spec: Cyclic) -> GroupTable:
    n = spec.n
    mul = [[(i + j) % n for j in range(n)] for i in range(n)]
    labels = [_cyclic_label(i) for i in range(n)]
    return GroupTable(n, mul, _inv_from_mul(mul), labels, spec.canonical())


def _word_label(i: int, e: int, xn: str, yn: str) -> str:
    parts = []
    if i:
        parts.append(xn if i == 1 else f"{xn}^{i}")
    if e:
        parts.append(yn if e == 1 else f"{yn}^{e}")
    return "*".join(parts) if parts else "1"


def _build_metacyclic(mx: int, k: int, t: int, twist: int, xn: str, yn: str, spec_str: str) -> GroupTable:
    """Words x^i y^e with y x y^-1 = x^t and y^k = x^twist; index is i*k + e."""
    n = mx * k
    tpow = [pow(t, e, mx) for e in range(k)]
    mul = [[0] * n for _ in range(n)]
    for i in range(mx):
        for e in range(k):
            row = mul[i * k + e]
            te = tpow[e]
            for j in range(mx):
                lead = i + j * te
                for f in range(k):
                    s = e + f
                    i2 = (lead + twist * (s // k)) % mx
                    row[j * k + f] = i2 * k + (s % k)
    labels = [_word_label(i, e, xn, yn) for i in range(mx) for e in range(k)]
    return GroupTable(n, mul, _inv_from_mul(mul), labels, spec_str)


def _build_dihedral(spec: Dihedral) -> GroupTable:
    m = spec.order // 2
    return _build_metacyclic(m, 2, m - 1, 0, "x", "y", spec.canonical())


def _build_dicyclic(spec: Dicyclic) -> GroupTable:
    m = spec.m
    return _build_metacyclic(2 * m, 2, 2 * m - 1, m, "a", "b", spec.canonical())


def _build_modular(spec: ModularMaxCyclic) -> GroupTable:
    p, n = spec.p, spec.n
    mx = p ** (n - 1)
    r = p ** (n - 2) + 1
    # y x y^-1 = x^(r^-1) follows from x^y = x^r; r has order p mod mx
    t = pow(r, p - 1, mx)
    return _build_metacyclic(mx, p, t, 0, "x", "y", spec.canonical())


def _build_semidihedral(spec: Semidihedral) -> GroupTable:
    mx = spec.order // 2
    r = mx // 2 - 1      # self-inverse mod mx
    return _build_metacyclic(mx, 2, r, 0, "x", "y", spec.canonical())


def _build_zm(spec: ZM) -> GroupTable:
    return _build_metacyclic(spec.m, spec.n, spec.r % max(1, spec.m), 0, "a", "b", spec.canonical())


def _perm_mul(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """Apply p first, then q."""
    return tuple(q[v] for v in p)


def _perm_parity(p: tuple[int, ...]) -> int:
    seen = [False] * len(p)
    parity = 0
    for s in range(len(p)):
        if seen[s]:
            continue
        length = 0
        v = s
        while not seen[v]:
            seen[v] = True
            v = p[v]
            length += 1
        parity ^= (length - 1) & 1
    return parity


def _cycles_text(p: tuple[int, ...]) -> str:
    out = []
    seen = [False] * len(p)
    for s in range(len(p)):
        if seen[s] or p[s] == s:
            seen[s] = True
            continue
        cyc = []
        v = s
        while not seen[v]:
            seen[v] = True
            cyc.append(str(v + 1))
            v = p[v]
        out.append("(" + ",".join(cyc) + ")")
    return "".join(out) if out else "()"


def _cycle_label(p: tuple[int, ...]) -> str:
    txt = _cycles_text(p)
    return txt.replace(",", " ")


def _table_from_perms(perms: list[tuple[int, ...]], spec_str: str) -> GroupTable:
    index = {p: i for i, p in enumerate(perms)}
    n = len(perms)
    mul = [[index[_perm_mul(p, q)] for q in perms] for p in perms]
    labels = [_cycle_label(p) for p in perms]
    return GroupTable(n, mul, _inv_from_mul(mul), labels, spec_str)


def _build_symmetric(spec: Symmetric) -> GroupTable:
    perms = [tuple(p) for p in itertools.permutations(range(spec.n))]
    return _table_from_perms(perms, spec.canonical())


def _build_alternating(spec: Alternating) -> GroupTable:
    perms = [tuple(p) for p in itertools.permutations(range(spec.n)) if _perm_parity(tuple(p)) == 0]
    return _table_from_perms(perms, spec.canonical())


def _build_permgen(spec: PermGenerated, max_order: int) -> GroupTable:
    identity = tuple(range(spec.degree))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for p in frontier:
            for gen in spec.generators:
                q = _perm_mul(p, gen)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
                    if len(seen) > max_order:
                        raise OrderCapExceeded(
                            f"generated permutation group exceeds order cap {max_order}"
                        )
        frontier = nxt
    return _table_from_perms(sorted(seen), spec.canonical())


def direct_product(g1: GroupTable, g2: GroupTable, max_order: int = DEFAULT_MAX_ORDER) -> GroupTable:
    """Pairwise product with mixed-radix encoding (i, j) -> i*|g2| + j."""
    n1, n2 = g1.order, g2.order
    n = n1 * n2
    if n > max_order:
        raise OrderCapExceeded(f"product order {n} exceeds cap {max_order}")
    mul = [[0] * n for _ in range(n)]
    for a1 in range(n1):
        r1 = g1.mul[a1]
        for b1 in range(n2):
            row = mul[a1 * n2 + b1]
            r2 = g2.mul[b1]
            for a2 in range(n1):
                base = r1[a2] * n2
                for b2 in range(n2):
                    row[a2 * n2 + b2] = base + r2[b2]
    inv = [g1.inv[i] * n2 + g2.inv[j] for i in range(n1) for j in range(n2)]
    labels = [f"({g1.labels[i]},{g2.labels[j]})" for i in range(n1) for j in range(n2)]
    return GroupTable(n, mul, inv, labels, f"{g1.spec}x{g2.spec}")


def build_group(spec: GroupSpec | str, max_order: int = DEFAULT_MAX_ORDER) -> GroupTable:
    """Construct and validate the Cayley table for a spec (or spec string)."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    spec.validate()
    expected = spec.expected_order()
    if expected is not None and expected > max_order:
        raise OrderCapExceeded(f"{spec.canonical()} has order {expected} > cap {max_order}")
    if isinstance(spec, Cyclic):
        g = _build_cyclic(spec)
    elif isinstance(spec, Dihedral):
        g = _build_dihedral(spec)
    elif isinstance(spec, Dicyclic):
        g = _build_dicyclic(spec)
    elif isinstance(spec, ModularMaxCyclic):
        g = _build_modular(spec)
    elif isinstance(spec, Semidihedral):
        g = _build_semidihedral(spec)
    elif isinstance(spec, Symmetric):
        g = _build_symmetric(spec)
    elif isinstance(spec, Alternating):
        g = _build_alternating(spec)
    elif isinstance(spec, ZM):
        g = _build_zm(spec)
    elif isinstance(spec, PermGenerated):
        g = _build_permgen(spec, max_order)
    elif isinstance(spec, DirectProduct):
        tables = [build_group(f, max_order) for f in spec.factors]
        g = reduce(lambda a, b: direct_product(a, b, max_order), tables)
    else:
        raise SpecInvalid(f"unsupported spec type {type(spec).__name__}")
    check = validate_group(g)
    if not check.ok:
        raise RuntimeError(
            f"constructed table for {spec.canonical()} failed {check.problem} at {check.witness}"
        )
    return g
