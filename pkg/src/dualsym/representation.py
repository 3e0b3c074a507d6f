"""Closed inverse subsemigroups of IP_n, their right cosets, and the
effective transitive representations they induce."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .enumeration import BoundError, check_bound, enumerate_ip, subgroups
from .inverse import green_H, is_idempotent, natural_leq
from .morphisms import PartialInjection
from .partition import Partition, from_pairs, multiply, rank, serialize, split_block, star


def up_closure(A, n: int) -> frozenset:
    check_bound(n, "ip")
    A = list(A)
    return frozenset(b for b in enumerate_ip(n) if any(natural_leq(a, b) for a in A))


@dataclass(frozen=True)
class ClosedInverseSubsemigroup:
    degree: int
    elements: frozenset
    origin: frozenset          # the subgroup G with elements = [G]

    def __contains__(self, a):
        return a in self.elements

    def __len__(self):
        return len(self.elements)

    @property
    def identity(self) -> Partition:
        """The identity of the generating subgroup."""
        return next(g for g in self.origin if is_idempotent(g))


def closed_from_subgroup(G, n: int) -> ClosedInverseSubsemigroup:
    G = frozenset(G)
    return ClosedInverseSubsemigroup(n, up_closure(G, n), G)


def closed_from_idempotent(f: Partition) -> ClosedInverseSubsemigroup:
    return closed_from_subgroup([f], f.degree)


def is_closed_inverse(elements, n: int) -> bool:
    S = frozenset(elements)
    if not S:
        return False
    if any(star(a) not in S for a in S):
        return False
    if any(multiply(a, b) not in S for a in S for b in S):
        return False
    return up_closure(S, n) == S


def coset_eq(H: ClosedInverseSubsemigroup, a: Partition, b: Partition) -> bool:
    """[Ha] = [Hb], via a b^-1 in H."""
    if multiply(a, star(a)) not in H or multiply(b, star(b)) not in H:
        raise ValueError("coset_eq needs a a^-1 and b b^-1 in H")
    return multiply(a, star(b)) in H


def coset_set(H: ClosedInverseSubsemigroup, s: Partition) -> frozenset:
    """The set [Hs] itself."""
    return up_closure({multiply(h, s) for h in H.elements}, H.degree)


@dataclass
class CosetSpace:
    H: ClosedInverseSubsemigroup
    points: list                   # canonical labels, sorted
    reps: list                     # one representative per point
    point_of: dict = field(repr=False)   # valid element -> point index (0-based)

    def __len__(self):
        return len(self.points)

    def is_valid(self, x: Partition) -> bool:
        return x in self.point_of


def _primitive_idempotent(H: ClosedInverseSubsemigroup):
    if len(H.origin) == 1:
        (f,) = H.origin
        if rank(f) == 2 and is_idempotent(f):
            return f
    return None


def coset_space(H: ClosedInverseSubsemigroup) -> CosetSpace:
    n = H.degree
    valid = [x for x in enumerate_ip(n) if multiply(x, star(x)) in H]
    classes: list[list] = []
    for x in valid:
        for c in classes:
            if multiply(x, star(c[0])) in H:
                c.append(x)
                break
        else:
            classes.append([x])
    f = _primitive_idempotent(H)
    if f is not None:
        labels = [serialize(multiply(f, c[0])) for c in classes]
    else:
        labels = [min(serialize(y) for y in c) for c in classes]
    order = sorted(range(len(classes)), key=lambda i: labels[i])
    points = [labels[i] for i in order]
    reps = [classes[i][0] for i in order]
    point_of = {}
    for new, old in enumerate(order):
        for y in classes[old]:
            point_of[y] = new
    return CosetSpace(H, points, reps, point_of)


def phi_H(space: CosetSpace, s: Partition) -> PartialInjection:
    """[Hx] -> [Hxs] on the coset points, as a partial injection on
    1..len(points)."""
    img = []
    for x in space.reps:
        p = space.point_of.get(multiply(x, s))
        img.append(None if p is None else p + 1)
    return PartialInjection(img)


def representation_images(space: CosetSpace) -> dict:
    return {s: phi_H(space, s) for s in enumerate_ip(space.H.degree)}


def is_faithful(space: CosetSpace) -> bool:
    imgs = representation_images(space)
    return len(set(imgs.values())) == len(imgs)


def equivalent(H: ClosedInverseSubsemigroup, K: ClosedInverseSubsemigroup):
    """An a with a^-1 H a in K and a K a^-1 in H, or None."""
    for a in enumerate_ip(H.degree):
        ai = star(a)
        if all(multiply(multiply(ai, h), a) in K for h in H.elements) and \
           all(multiply(multiply(a, k), ai) in H for k in K.elements):
            return a
    return None


def theta_pr(n: int) -> list[Partition]:
    """Idempotents of rank 2."""
    return [e for e in enumerate_ip(n) if rank(e) == 2 and is_idempotent(e)]


def theta_max(n: int) -> list[Partition]:
    """Maximal idempotents strictly below the identity (rank n-1)."""
    return [e for e in enumerate_ip(n) if rank(e) == n - 1 and is_idempotent(e)]


def conjugator(f1: Partition, f2: Partition) -> Partition:
    """{F1 u F2', (X - F1) u (X - F2)'} for f_i = tau_{F_i} tau_{X - F_i}."""
    n = f1.degree
    F1 = split_block(f1, f1.blocks[0])[0]
    F2 = split_block(f2, f2.blocks[0])[0]
    X = set(range(1, n + 1))
    return from_pairs(n, [(F1, F2), (sorted(X - set(F1)), sorted(X - set(F2)))])


@dataclass
class Case:
    idempotent: str
    idempotent_rank: int
    subgroup_size: int
    points: int
    faithful: bool
    equivalent_to_canonical: bool

    def to_json(self):
        return {"subgroup_size": self.subgroup_size,
                "idempotent_rank": self.idempotent_rank,
                "points": self.points,
                "faithful": self.faithful,
                "equivalent_to_canonical": self.equivalent_to_canonical,
                "idempotent": self.idempotent}


@dataclass
class FaithfulnessReport:
    degree: int
    canonical: str
    cases: list

    @property
    def faithful_cases(self):
        return [c for c in self.cases if c.faithful]

    @property
    def ok(self) -> bool:
        """Faithful exactly for rank-2 idempotents with trivial group, all
        of them equivalent to the canonical one and of degree 2^n - 2."""
        n = self.degree
        for c in self.cases:
            expect = c.idempotent_rank == 2 and c.subgroup_size == 1
            if c.faithful != expect:
                return False
            if c.faithful and (not c.equivalent_to_canonical or c.points != 2 ** n - 2):
                return False
        return bool(self.faithful_cases)

    def to_json(self):
        return {"degree": self.degree, "cases": [c.to_json() for c in self.cases]}

    def dumps(self):
        return json.dumps(self.to_json(), separators=(",", ":"))


def h_class_of(e: Partition, elements) -> list:
    return [a for a in elements if green_H(a, e)]


def faithfulness_report(n: int) -> FaithfulnessReport:
    if n not in (2, 3, 4):
        raise BoundError("faithfulness_report supports n in {2, 3, 4}")
    elements = enumerate_ip(n)
    f0 = theta_pr(n)[0]
    canonical = closed_from_idempotent(f0)
    cases = []
    for e in (a for a in elements if is_idempotent(a)):
        group = h_class_of(e, elements)
        for G in subgroups(group, e):
            H = closed_from_subgroup(G, n)
            space = coset_space(H)
            faithful = is_faithful(space)
            eq = equivalent(H, canonical) is not None
            cases.append(Case(serialize(e), rank(e), len(G), len(space), faithful, eq))
    return FaithfulnessReport(n, serialize(f0), cases)
