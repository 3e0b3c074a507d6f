"""The symmetric inverse monoid IS_m, the biequivalence model of IP_n,
the embedding kappa of IS_m into IP_{m+1}, and automorphisms of IP_n."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from itertools import combinations, permutations, product

from .enumeration import (check_bound, close, enumerate_ip,
                          symmetric_group_generators)
from .generators import Permutation, all_permutations, eta, xi
from .inverse import is_idempotent
from .partition import Partition, from_pairs, identity, multiply, rank, star, zero


# ---------------------------------------------------------------------------
# partial injections

class PartialInjection:
    """Injective partial map on {1..m}; ``mapping[x-1]`` is the image of x
    or None."""

    __slots__ = ("degree", "mapping")

    def __init__(self, mapping, degree: int | None = None):
        mapping = tuple(None if v is None else int(v) for v in mapping)
        if degree is None:
            degree = len(mapping)
        if len(mapping) != degree:
            raise ValueError("mapping length differs from degree")
        vals = [v for v in mapping if v is not None]
        if len(vals) != len(set(vals)):
            raise ValueError(f"not injective: {mapping}")
        if any(not 1 <= v <= degree for v in vals):
            raise ValueError(f"image outside 1..{degree}")
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "mapping", mapping)

    def __setattr__(self, name, value):
        raise AttributeError("PartialInjection is immutable")

    @classmethod
    def identity(cls, m):
        return cls(range(1, m + 1))

    @classmethod
    def empty(cls, m):
        return cls([None] * m)

    def __call__(self, x):
        return self.mapping[x - 1]

    @property
    def dom(self) -> frozenset:
        return frozenset(x for x, v in enumerate(self.mapping, 1) if v is not None)

    @property
    def ran(self) -> frozenset:
        return frozenset(v for v in self.mapping if v is not None)

    def inverse(self):
        inv = [None] * self.degree
        for x, v in enumerate(self.mapping, 1):
            if v is not None:
                inv[v - 1] = x
        return PartialInjection(inv)

    def __mul__(self, other):
        return is_multiply(self, other)

    def __eq__(self, other):
        return isinstance(other, PartialInjection) and self.mapping == other.mapping

    def __hash__(self):
        return hash(self.mapping)

    def __lt__(self, other):
        return _is_key(self) < _is_key(other)

    def __repr__(self):
        return f"PartialInjection({self.literal()!r})"

    def literal(self) -> str:
        return "[" + ",".join("-" if v is None else str(v) for v in self.mapping) + "]"

    def to_json(self) -> dict:
        return {"degree": self.degree, "map": list(self.mapping)}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


def _is_key(s):
    return tuple(0 if v is None else v for v in s.mapping)


_PI_LITERAL = re.compile(r"^\[\s*([0-9\-]+(?:\s*,\s*[0-9\-]+)*)?\s*\]$")


def parse_partial_injection(text: str) -> PartialInjection:
    m = _PI_LITERAL.match(text.strip())
    if m is None:
        raise ValueError(f"not a partial injection literal: {text!r}")
    if m.group(1) is None:
        raise ValueError("empty partial injection literal")
    vals = []
    for tok in m.group(1).split(","):
        tok = tok.strip()
        vals.append(None if tok == "-" else int(tok))
    return PartialInjection(vals)


def partial_injection_from_json(obj) -> PartialInjection:
    if isinstance(obj, str):
        obj = json.loads(obj)
    return PartialInjection(obj["map"], obj["degree"])


def is_multiply(s: PartialInjection, t: PartialInjection) -> PartialInjection:
    """x -> t(s(x)), defined where s(x) lies in dom(t)."""
    if s.degree != t.degree:
        raise ValueError(f"degree mismatch: {s.degree} vs {t.degree}")
    tm = t.mapping
    return PartialInjection(None if v is None else tm[v - 1] for v in s.mapping)


def enumerate_is(m: int) -> list[PartialInjection]:
    check_bound(m, "is")
    out = []
    pts = range(1, m + 1)
    for k in range(m + 1):
        for dom in combinations(pts, k):
            for ran in permutations(pts, k):
                img: list = [None] * m
                for x, y in zip(dom, ran):
                    img[x - 1] = y
                out.append(PartialInjection(img))
    return sorted(out)


def is_natural_leq(s: PartialInjection, t: PartialInjection) -> bool:
    """s <= t iff s is a restriction of t."""
    return all(v is None or v == w for v, w in zip(s.mapping, t.mapping))


# ---------------------------------------------------------------------------
# biequivalences

class Biequivalence:
    """A binary relation on {1..n} stored as a set of 1-based pairs."""

    __slots__ = ("degree", "pairs")

    def __init__(self, degree: int, pairs):
        pairs = frozenset((int(x), int(y)) for x, y in pairs)
        if any(not (1 <= x <= degree and 1 <= y <= degree) for x, y in pairs):
            raise ValueError("pair outside 1..n")
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "pairs", pairs)

    def __setattr__(self, name, value):
        raise AttributeError("Biequivalence is immutable")

    @classmethod
    def from_matrix(cls, rows):
        n = len(rows)
        return cls(n, [(x + 1, y + 1) for x in range(n) for y in range(n) if rows[x][y]])

    def matrix(self) -> tuple:
        n = self.degree
        return tuple(tuple((x, y) in self.pairs for y in range(1, n + 1))
                     for x in range(1, n + 1))

    def inverse(self):
        return Biequivalence(self.degree, [(y, x) for x, y in self.pairs])

    def compose(self, other):
        """Left-to-right relational composition: x (self;other) z iff
        x self y and y other z for some y."""
        succ: dict = {}
        for y, z in other.pairs:
            succ.setdefault(y, []).append(z)
        return Biequivalence(self.degree,
                             [(x, z) for x, y in self.pairs for z in succ.get(y, ())])

    def is_full(self) -> bool:
        pts = set(range(1, self.degree + 1))
        return {x for x, _ in self.pairs} == pts and {y for _, y in self.pairs} == pts

    def is_bifunctional(self) -> bool:
        return self.compose(self.inverse()).compose(self) == self

    def is_valid(self) -> bool:
        return self.is_full() and self.is_bifunctional()

    def __eq__(self, other):
        return (isinstance(other, Biequivalence) and self.degree == other.degree
                and self.pairs == other.pairs)

    def __hash__(self):
        return hash((self.degree, self.pairs))

    def __repr__(self):
        return f"Biequivalence({self.degree}, {sorted(self.pairs)})"


def to_biequivalence(a: Partition) -> Biequivalence:
    n = a.degree
    pairs = []
    for b in a.blocks:
        top = [s + 1 for s in b if s < n]
        bot = [s - n + 1 for s in b if s >= n]
        pairs.extend((x, y) for x in top for y in bot)
    return Biequivalence(n, pairs)


def from_biequivalence(alpha: Biequivalence) -> Partition:
    if not alpha.is_full():
        raise ValueError("relation is not full")
    if not alpha.is_bifunctional():
        raise ValueError("relation is not bifunctional")
    n = alpha.degree
    dom_eq = alpha.compose(alpha.inverse())
    seen = set()
    pairs = []
    for x in range(1, n + 1):
        if x in seen:
            continue
        A = sorted(y for (w, y) in dom_eq.pairs if w == x)
        seen.update(A)
        B = sorted({y for (w, y) in alpha.pairs if w == x})
        pairs.append((A, B))
    return from_pairs(n, pairs)


def _join(n, r1: Biequivalence, r2: Biequivalence) -> Biequivalence:
    """Smallest equivalence containing two equivalences, by union-find over
    their classes."""
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x, y in r1.pairs | r2.pairs:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[ry] = rx
    classes: dict = {}
    for x in range(1, n + 1):
        classes.setdefault(find(x), []).append(x)
    return Biequivalence(n, [(x, y) for c in classes.values() for x in c for y in c])


def biequiv_multiply(alpha: Biequivalence, beta: Biequivalence) -> Biequivalence:
    """alpha ; (alpha^-1;alpha  v  beta;beta^-1) ; beta"""
    n = alpha.degree
    if beta.degree != n:
        raise ValueError("degree mismatch")
    mid = _join(n, alpha.inverse().compose(alpha), beta.compose(beta.inverse()))
    return alpha.compose(mid).compose(beta)


# ---------------------------------------------------------------------------
# kappa : IS_m -> IP_{m+1}

def kappa(s: PartialInjection) -> Partition:
    m = s.degree
    n = m + 1
    pts = set(range(1, n + 1))
    omega_top = sorted(pts - s.dom)
    omega_bot = sorted(pts - s.ran)
    pairs = [(omega_top, omega_bot)]
    pairs += [([x], [s(x)]) for x in sorted(s.dom)]
    return from_pairs(n, pairs)


# ---------------------------------------------------------------------------
# D-classes and the non-embedding certificate

def d_classes(elements, mul) -> list[frozenset]:
    """D-classes of a finite monoid given as a list, computed as J-classes
    (equal principal two-sided ideals)."""
    elements = list(elements)
    ideals = {}
    for a in elements:
        left = {mul(x, a) for x in elements}
        ideals[a] = frozenset(mul(y, x) for y in left for x in elements)
    groups: dict = {}
    for a in elements:
        groups.setdefault(ideals[a], set()).add(a)
    return [frozenset(g) for g in groups.values()]


@dataclass
class EmbeddingObstruction:
    degree: int
    ip_d_classes: int
    is_d_classes: int

    @property
    def obstructed(self) -> bool:
        return self.is_d_classes > self.ip_d_classes

    def to_json(self):
        return {"degree": self.degree, "ip_d_classes": self.ip_d_classes,
                "is_d_classes": self.is_d_classes, "obstructed": self.obstructed}


def no_embedding_witness(n: int) -> EmbeddingObstruction:
    check_bound(n, "ip")
    ip_count = len(d_classes(enumerate_ip(n), multiply))
    is_count = len(d_classes(enumerate_is(n), is_multiply))
    return EmbeddingObstruction(n, ip_count, is_count)


# ---------------------------------------------------------------------------
# automorphisms

def phi_g(g: Permutation, a: Partition) -> Partition:
    """Conjugation a -> g^-1 a g."""
    e = eta(g)
    return multiply(multiply(star(e), a), e)


def automorphism_generators(n: int) -> list[Partition]:
    gens = symmetric_group_generators(n) if n > 1 else [identity(1)]
    if n >= 3:
        gens.append(xi(1, 2, 3, n))
    elif n == 2:
        gens.append(zero(2))
    return gens


def _signature(a: Partition):
    """(rank, idempotent, index, period) of the monogenic subsemigroup."""
    seen = {}
    x = a
    i = 1
    while x not in seen:
        seen[x] = i
        x = multiply(x, a)
        i += 1
    return rank(a), is_idempotent(a), seen[x], i - seen[x]


@dataclass(frozen=True)
class Automorphism:
    degree: int
    mapping: tuple     # pairs (element, image), sorted by element

    def __call__(self, a):
        return dict(self.mapping)[a]

    def as_dict(self) -> dict:
        return dict(self.mapping)


def enumerate_automorphisms(n: int) -> list[Automorphism]:
    """All multiplication-preserving bijections of IP_n, found by trying
    every signature-compatible assignment of generator images."""
    check_bound(n, "automorphisms")
    elements = enumerate_ip(n)
    gens = automorphism_generators(n)
    table = close(gens)
    if len(table) != len(elements):
        raise AssertionError("automorphism generators do not generate IP_n")
    by_sig: dict = {}
    for a in elements:
        by_sig.setdefault(_signature(a), []).append(a)
    choices = [by_sig[_signature(g)] for g in gens]
    k = len(gens)
    found = []
    for imgs in product(*choices):
        img = [None] * len(table)
        for j in range(k):
            p = table.positions[gens[j]]
            if img[p] is not None and img[p] != imgs[j]:
                break
            img[p] = imgs[j]
        else:
            if _extend(table, img, imgs) and len(set(img)) == len(img):
                mapping = dict(zip(table.elements, img))
                if all(mapping[multiply(a, b)] == multiply(mapping[a], mapping[b])
                       for a in elements for b in elements):
                    found.append(Automorphism(n, tuple(sorted(mapping.items()))))
    return sorted(set(found), key=lambda f: tuple(b for _, b in f.mapping))


def _extend(table, img, gen_imgs) -> bool:
    for i, row in enumerate(table.edges):
        a = img[i]
        if a is None:
            return False
        for j, p in enumerate(row):
            c = multiply(a, gen_imgs[j])
            if img[p] is None:
                img[p] = c
            elif img[p] != c:
                return False
    return True


def automorphism_as_conjugation(f: Automorphism) -> Permutation | None:
    """The g with f = phi_g, if there is one."""
    mp = f.as_dict()
    for g in all_permutations(f.degree):
        if all(phi_g(g, a) == b for a, b in mp.items()):
            return g
    return None
