"""Enumeration of CS_n and IP_n, subsemigroup closure, counting formulas,
ideals, maximal subsemigroups and H-cross-sections."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .generators import (Permutation, all_permutations, eta, is_special,
                         symmetric_generators, upsilon)
from .inverse import is_idempotent
from .partition import (Partition, is_ip, lam, multiply, rank, rho, serialize,
                        star)

DEFAULT_BOUNDS = {"ip": 5, "cs": 4, "maximal": 4, "automorphisms": 3,
                  "representation": 4, "is": 5}

MAX_CLOSURE = 10 ** 7


class BoundError(ValueError):
    """A degree is outside the range an operation supports."""


def bound(kind: str) -> int:
    env = os.environ.get("DUALSYM_MAX_N")
    if env:
        return int(env)
    return DEFAULT_BOUNDS.get(kind, DEFAULT_BOUNDS["ip"])


def check_bound(n: int, kind: str, lo: int = 1, hi: int | None = None):
    env = os.environ.get("DUALSYM_MAX_N")
    if env:
        top = int(env)
    else:
        top = bound(kind) if hi is None else hi
    if not lo <= n <= top:
        raise BoundError(f"{kind}: degree {n} outside supported range {lo}..{top}")


# ---------------------------------------------------------------------------
# counting

def stirling2(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise ValueError("stirling2 needs n, k >= 0")
    if k > n:
        return 0
    return _stirling_row(n)[k]


@lru_cache(maxsize=None)
def _stirling_row(n: int) -> tuple:
    if n == 0:
        return (1,)
    prev = _stirling_row(n - 1)
    row = [0] * (n + 1)
    for k in range(1, n + 1):
        row[k] = k * (prev[k] if k < len(prev) else 0) + prev[k - 1]
    return tuple(row)


def bell(n: int) -> int:
    """Bell numbers from the Bell triangle."""
    if n < 0:
        raise ValueError("bell needs n >= 0")
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def ip_order(n: int) -> int:
    from math import factorial
    return sum(stirling2(n, k) ** 2 * factorial(k) for k in range(1, n + 1))


def h_class_count(n: int) -> int:
    return sum(stirling2(n, k) ** 2 for k in range(1, n + 1))


# ---------------------------------------------------------------------------
# enumeration

def set_partitions(m: int):
    """Restricted growth strings of length m, in lexicographic order."""
    if m == 0:
        yield ()
        return
    a = [0] * m
    mx = [0] * m  # mx[i] = max(a[:i+1])

    def rec(i):
        if i == m:
            yield tuple(a)
            return
        top = mx[i - 1] + 1
        for v in range(top + 1):
            a[i] = v
            mx[i] = max(mx[i - 1], v)
            yield from rec(i + 1)

    yield from rec(1)


def _rgs_to_partition(n, rgs):
    blocks: list[list[int]] = []
    for s, v in enumerate(rgs):
        if v == len(blocks):
            blocks.append([])
        blocks[v].append(s)
    # an RGS lists blocks by least element, each ascending
    return Partition(n, tuple(map(tuple, blocks)), _canonical=True)


def enumerate_cs(n: int) -> list[Partition]:
    check_bound(n, "cs")
    return sorted(_rgs_to_partition(n, r) for r in set_partitions(2 * n))


def enumerate_ip(n: int) -> list[Partition]:
    check_bound(n, "ip")
    return sorted(a for a in (_rgs_to_partition(n, r) for r in set_partitions(2 * n))
                  if is_ip(a))


def enumerate_idempotents(n: int) -> list[Partition]:
    return [a for a in enumerate_ip(n) if is_idempotent(a)]


def enumerate_it(n: int) -> list[Partition]:
    return [a for a in enumerate_ip(n) if is_special(a)]


def enumerate_iop(n: int) -> list[Partition]:
    from .generators import in_iop
    return [a for a in enumerate_ip(n) if in_iop(a)]


def symmetric_group(n: int) -> list[Partition]:
    return sorted(eta(g) for g in all_permutations(n))


def symmetric_group_generators(n: int) -> list[Partition]:
    return [eta(g) for g in symmetric_generators(n)]


# ---------------------------------------------------------------------------
# closure

@dataclass
class ClosureTable:
    degree: int
    generators: list
    elements: list = field(default_factory=list)
    positions: dict = field(default_factory=dict)
    edges: list = field(default_factory=list)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, a):
        return a in self.positions

    @property
    def index(self) -> dict:
        return {serialize(a): i for a, i in self.positions.items()}

    def as_set(self) -> frozenset:
        return frozenset(self.elements)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "generators": [serialize(g) for g in self.generators],
            "elements": [serialize(a) for a in self.elements],
            "edges": [list(row) for row in self.edges],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


def close(generators, max_size: int = MAX_CLOSURE) -> ClosureTable:
    """Subsemigroup generated by ``generators``, built breadth first.

    Elements appear as: the distinct generators in the given order, then each
    new product a*g found while scanning elements in table order and, for
    each element, generators in order.  edges[i][j] is the position of
    elements[i] * generators[j].
    """
    gens = list(generators)
    if not gens:
        raise ValueError("close needs at least one generator")
    n = gens[0].degree
    if any(g.degree != n for g in gens):
        raise ValueError("generators have different degrees")
    table = ClosureTable(n, gens)
    elements, positions, edges = table.elements, table.positions, table.edges
    for g in gens:
        if g not in positions:
            positions[g] = len(elements)
            elements.append(g)
    i = 0
    while i < len(elements):
        a = elements[i]
        row = []
        for g in gens:
            c = multiply(a, g)
            p = positions.get(c)
            if p is None:
                if len(elements) >= max_size:
                    raise BoundError(f"closure exceeds {max_size} elements")
                p = positions[c] = len(elements)
                elements.append(c)
            row.append(p)
        edges.append(tuple(row))
        i += 1
    return table


def generated(generators) -> frozenset:
    return close(generators).as_set()


def is_product_closed(elements) -> bool:
    s = set(elements)
    return all(multiply(a, b) in s for a in s for b in s)


def is_inverse_closed(elements) -> bool:
    s = set(elements)
    return all(star(a) in s for a in s)


def greedy_generating_set(elements) -> list:
    """A (not necessarily minimum) generating set of a subsemigroup, picking
    high-rank elements first."""
    todo = sorted(elements, key=lambda a: (-rank(a), a))
    gens: list = []
    have: frozenset = frozenset()
    for a in todo:
        if a not in have:
            gens.append(a)
            have = generated(gens)
    return gens


# ---------------------------------------------------------------------------
# ideals

def ideal(k: int, n: int) -> frozenset:
    check_bound(n, "ip")
    if not 1 <= k <= n:
        raise BoundError(f"ideal index {k} outside 1..{n}")
    return frozenset(a for a in enumerate_ip(n) if rank(a) <= k)


# ---------------------------------------------------------------------------
# groups (for subgroup catalogues)

def subgroups(elements, one) -> list[frozenset]:
    """All subgroups of a finite group given by its elements (any objects
    with a `*` product) and identity, by repeatedly adjoining one element."""
    elements = list(elements)
    trivial = frozenset([one])
    found = {trivial}
    todo = [trivial]
    while todo:
        H = todo.pop()
        for g in elements:
            if g in H:
                continue
            K = _group_closure(H | {g})
            if K not in found:
                found.add(K)
                todo.append(K)
    return sorted(found, key=lambda H: (len(H), sorted(H)))


def _group_closure(gens) -> frozenset:
    els = set(gens)
    bdy = list(els)
    while bdy:
        nxt = []
        for a in bdy:
            for g in gens:
                c = a * g
                if c not in els:
                    els.add(c)
                    nxt.append(c)
        bdy = nxt
    return frozenset(els)


def maximal_among_proper(groups, whole) -> list[frozenset]:
    proper = [H for H in groups if len(H) < len(whole)]
    return [H for H in proper if not any(H < K for K in proper)]


_MAXIMAL_SUBGROUP_GENS = {
    2: [[[1, 2]]],
    3: [[[2, 3, 1]], [[2, 1, 3]], [[3, 2, 1]], [[1, 3, 2]]],
    4: [
        [[2, 3, 1, 4], [1, 3, 4, 2]],                    # A_4
        [[1, 3, 2, 4], [1, 3, 4, 2]],                    # stabilizer of 1
        [[3, 2, 1, 4], [3, 2, 4, 1]],                    # stabilizer of 2
        [[2, 1, 3, 4], [2, 4, 3, 1]],                    # stabilizer of 3
        [[2, 1, 3, 4], [2, 3, 1, 4]],                    # stabilizer of 4
        [[2, 3, 4, 1], [3, 2, 1, 4]],                    # D_4 on square 1234
        [[2, 4, 1, 3], [2, 1, 4, 3]],                    # D_4 on square 1243
        [[3, 4, 2, 1], [2, 1, 3, 4]],                    # D_4 on square 1324
    ],
}


def maximal_subgroups_of_symmetric(n: int) -> list[frozenset]:
    """Catalogue of maximal subgroups of S_n for n <= 4, as sets of
    Permutation."""
    if n not in _MAXIMAL_SUBGROUP_GENS:
        raise BoundError(f"no maximal subgroup catalogue for n = {n}")
    return [_group_closure([Permutation(g) for g in gens])
            for gens in _MAXIMAL_SUBGROUP_GENS[n]]


# ---------------------------------------------------------------------------
# maximal subsemigroups

@dataclass
class MaximalSubsemigroup:
    kind: str             # "IT" or "G"
    label: str
    elements: frozenset

    def __len__(self):
        return len(self.elements)


def maximal_subsemigroups(n: int, verify: bool = True) -> list[MaximalSubsemigroup]:
    """IT_n u I_{n-2} and G u I_{n-1} for each maximal subgroup G of S_n.

    With ``verify`` each set is checked to be a proper subsemigroup such
    that adjoining any outside element generates IP_n.
    """
    check_bound(n, "maximal", lo=3)
    ip = enumerate_ip(n)
    low2 = frozenset(a for a in ip if rank(a) <= n - 2)
    low1 = frozenset(a for a in ip if rank(a) <= n - 1)
    out = [MaximalSubsemigroup("IT", f"IT_{n} u I_{n - 2}",
                               frozenset(a for a in ip if is_special(a)) | low2)]
    for G in maximal_subgroups_of_symmetric(n):
        imgs = frozenset(eta(g) for g in G)
        label = "G[%s] u I_%d" % (",".join("".join(map(str, g.image)) for g in sorted(G)), n - 1)
        out.append(MaximalSubsemigroup("G", label, imgs | low1))
    if verify:
        full = frozenset(ip)
        for M in out:
            if not is_maximal_subsemigroup(M.elements, full):
                raise AssertionError(f"{M.label} failed the maximality check")
    return out


def is_maximal_subsemigroup(S, whole) -> bool:
    S = frozenset(S)
    if S == whole or not is_product_closed(S):
        return False
    gens = greedy_generating_set(S)
    return all(len(close(gens + [u])) == len(whole) for u in whole - S)


# ---------------------------------------------------------------------------
# H-classes

def h_classes(elements) -> dict:
    """Group elements by their (rho, lambda) pair."""
    out: dict = {}
    for a in elements:
        out.setdefault((rho(a), lam(a)), []).append(a)
    return out


def is_h_cross_section(subset, n: int) -> bool:
    subset = list(subset)
    classes = h_classes(enumerate_ip(n))
    hit = h_classes(subset)
    if len(subset) != len(classes) or len(hit) != len(subset):
        return False
    if set(hit) != set(classes):
        return False
    return is_product_closed(subset)


# ---------------------------------------------------------------------------
# IP_n u {upsilon} inside CS_n

def inverse_violation(elements, mul=multiply):
    """None if the finite product-closed set is an inverse semigroup,
    otherwise a short description of why not."""
    els = list(elements)
    idem = [e for e in els if mul(e, e) == e]
    for e, f in combinations(idem, 2):
        if mul(e, f) != mul(f, e):
            return f"idempotents {serialize(e)} and {serialize(f)} do not commute"
    for a in els:
        if not any(mul(mul(a, x), a) == a for x in els):
            return f"{serialize(a)} is not regular"
    return None


@dataclass
class CSMaximalityReport:
    degree: int
    base: list
    base_closed: bool
    base_inverse: bool
    witnesses: list                      # (literal, reason or None)
    inverse_supersets: int | None = None  # exhaustive count, n = 2 only

    @property
    def ok(self) -> bool:
        return (self.base_closed and self.base_inverse
                and all(r is not None for _, r in self.witnesses)
                and self.inverse_supersets in (None, 0))


def verify_ip_maximal_inverse_in_cs(n: int) -> CSMaximalityReport:
    if n not in (2, 3):
        raise BoundError("verify_ip_maximal_inverse_in_cs supports n in {2, 3}")
    cs = enumerate_cs(n)
    base = enumerate_ip(n) + [upsilon(n)]
    base_set = frozenset(base)
    closed = is_product_closed(base_set)
    inv = closed and inverse_violation(base_set) is None
    gens = greedy_generating_set(enumerate_ip(n)) + [upsilon(n)]
    witnesses = []
    for s in cs:
        if s in base_set:
            continue
        T = generated(gens + [s])
        witnesses.append((serialize(s), inverse_violation(T)))
    supersets = _count_inverse_supersets(cs, base_set) if n == 2 else None
    return CSMaximalityReport(n, [serialize(a) for a in base], closed, inv,
                              witnesses, supersets)


def _count_inverse_supersets(cs, base) -> int:
    """Number of inverse subsemigroups of CS_n strictly containing base."""
    idx = {a: i for i, a in enumerate(cs)}
    m = len(cs)
    table = [[idx[multiply(a, b)] for b in cs] for a in cs]
    base_ix = [idx[a] for a in base]
    outside = [i for i in range(m) if cs[i] not in base]
    count = 0
    for r in range(1, len(outside) + 1):
        for extra in combinations(outside, r):
            T = base_ix + list(extra)
            Ts = set(T)
            if any(table[i][j] not in Ts for i in T for j in T):
                continue
            if _is_inverse_ix(T, table):
                count += 1
    return count


def _is_inverse_ix(T, table) -> bool:
    idem = [e for e in T if table[e][e] == e]
    for e, f in combinations(idem, 2):
        if table[e][f] != table[f][e]:
            return False
    return all(any(table[table[a][x]][a] == a for x in T) for a in T)
