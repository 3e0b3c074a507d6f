"""
Partitions of {1..n} u {1'..n'} with the gluing product.

Internally a point is a slot: unprimed i -> i-1, primed i' -> n+i-1.  The
slot order coincides with the total order 1 < ... < n < 1' < ... < n', so a
canonical partition is just a tuple of ascending slot tuples sorted by their
first entry.
"""

from __future__ import annotations

import re
from typing import Iterable, NamedTuple


class ParseError(ValueError):
    pass


class DegreeError(ValueError):
    pass


class Point(NamedTuple):
    index: int
    primed: bool = False

    def __str__(self):
        return f"{self.index}'" if self.primed else str(self.index)


def _canon(blocks: Iterable[Iterable[int]]) -> tuple:
    return tuple(sorted(tuple(sorted(b)) for b in blocks))


class Partition:
    """An element of CS_n, stored in canonical form.

    Instances are immutable and hashable; two partitions are equal iff they
    have the same degree and the same canonical block list.
    """

    __slots__ = ("degree", "blocks", "_hash")

    def __init__(self, degree: int, blocks, *, _canonical=False):
        if degree < 1:
            raise DegreeError("degree must be >= 1")
        if not _canonical:
            blocks = _canon(blocks)
            seen = [x for b in blocks for x in b]
            if any(len(b) == 0 for b in blocks):
                raise ValueError("empty block")
            if len(seen) != len(set(seen)):
                raise ValueError("blocks are not disjoint")
            if sorted(seen) != list(range(2 * degree)):
                raise ValueError("blocks do not cover all 2n points")
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "_hash", hash((degree, blocks)))

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    @classmethod
    def from_points(cls, degree: int, blocks) -> "Partition":
        """Build from blocks of Point (or (index, primed) pairs)."""
        slot_blocks = []
        for b in blocks:
            slots = []
            for p in b:
                idx, primed = p
                if not 1 <= idx <= degree:
                    raise ValueError(f"index {idx} outside 1..{degree}")
                slots.append(idx - 1 + (degree if primed else 0))
            slot_blocks.append(slots)
        return cls(degree, slot_blocks)

    def point_blocks(self) -> list[list[Point]]:
        n = self.degree
        return [[Point(s + 1, False) if s < n else Point(s - n + 1, True) for s in b]
                for b in self.blocks]

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self.degree == other.degree and self.blocks == other.blocks

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return (self.degree, self.blocks) < (other.degree, other.blocks)

    def __mul__(self, other):
        return multiply(self, other)

    def __repr__(self):
        return f"Partition({serialize(self)!r})"

    def __str__(self):
        return serialize(self)

    @property
    def key(self):
        return self.blocks


# ---------------------------------------------------------------------------
# text form

_LITERAL = re.compile(r"^(?:(\d+):)?\{(.*)\}$")
_POINT = re.compile(r"^(\d+)(')?$")


def parse(text: str, degree: int | None = None) -> Partition:
    text = text.strip()
    m = _LITERAL.match(text)
    if m is None:
        raise ParseError(f"not a partition literal: {text!r}")
    if m.group(1) is not None:
        prefix = int(m.group(1))
        if degree is not None and degree != prefix:
            raise ParseError(f"degree prefix {prefix} conflicts with degree {degree}")
        degree = prefix
    body = m.group(2)
    if body == "":
        raise ParseError("empty partition literal")
    blocks = []
    seen = set()
    for blk in body.split("|"):
        if blk == "":
            raise ParseError(f"empty block in {text!r}")
        pts = []
        for tok in blk.split(","):
            pm = _POINT.match(tok)
            if pm is None:
                raise ParseError(f"bad point {tok!r} in {text!r}")
            p = Point(int(pm.group(1)), pm.group(2) is not None)
            if p.index == 0:
                raise ParseError("point index 0")
            if p in seen:
                raise ParseError(f"duplicate point {p}")
            seen.add(p)
            pts.append(p)
        blocks.append(pts)
    top = max(p.index for p in seen)
    if degree is None:
        degree = top
    elif top > degree:
        raise ParseError(f"index {top} exceeds degree {degree}")
    if len(seen) != 2 * degree:
        missing = [str(Point(i, pr)) for pr in (False, True)
                   for i in range(1, degree + 1) if Point(i, pr) not in seen]
        raise ParseError(f"missing points: {','.join(missing)}")
    return Partition.from_points(degree, blocks)


def serialize(a: Partition, with_degree: bool | None = None) -> str:
    """Canonical literal.  The "n:" prefix is emitted when the largest index
    appearing would not recover the degree (never for valid partitions, since
    every point is present) or when asked for explicitly."""
    n = a.degree
    parts = []
    for b in a.blocks:
        parts.append(",".join(str(s + 1) if s < n else f"{s - n + 1}'" for s in b))
    body = "{" + "|".join(parts) + "}"
    if with_degree:
        return f"{n}:{body}"
    return body


# ---------------------------------------------------------------------------
# constructors

def identity(n: int) -> Partition:
    return Partition(n, tuple((i, n + i) for i in range(n)), _canonical=True)


def zero(n: int) -> Partition:
    return Partition(n, (tuple(range(2 * n)),), _canonical=True)


# ---------------------------------------------------------------------------
# product

def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def multiply(a: Partition, b: Partition) -> Partition:
    """Glue a's primed row to b's unprimed row and keep the outer rows.

    Three rows of n slots: 0..n-1 (a top), n..2n-1 (shared middle),
    2n..3n-1 (b bottom).  a's slots map to themselves, b's are shifted by n.
    """
    n = a.degree
    if b.degree != n:
        raise DegreeError(f"degree mismatch: {n} vs {b.degree}")
    parent = list(range(3 * n))
    # a's blocks are disjoint: each becomes a tree of depth one
    for blk in a.blocks:
        r = blk[0]
        for s in blk:
            parent[s] = r
    for blk in b.blocks:
        r = _find(parent, blk[0] + n)
        for s in blk[1:]:
            t = s + n
            while parent[t] != t:
                t = parent[t]
            if t != r:
                if t < r:
                    r, t = t, r
                parent[t] = r
    groups: dict[int, list[int]] = {}
    out = []
    for s in range(n):
        r = _find(parent, s)
        g = groups.get(r)
        if g is None:
            g = groups[r] = []
            out.append(g)
        g.append(s)
    for s in range(2 * n, 3 * n):
        r = _find(parent, s)
        g = groups.get(r)
        if g is None:
            g = groups[r] = []
            out.append(g)
        g.append(s - n)
    # groups were opened in increasing order of their least slot
    return Partition(n, tuple(map(tuple, out)), _canonical=True)


def star(a: Partition) -> Partition:
    """Swap primed and unprimed points.  An involution on CS_n; the inverse
    of a inside IP_n."""
    n = a.degree
    return Partition(n, [[s + n if s < n else s - n for s in b] for b in a.blocks])


# ---------------------------------------------------------------------------
# projections

class Equivalence:
    """A set partition of {1..n}, stored as sorted tuples of 1-based points."""

    __slots__ = ("degree", "classes")

    def __init__(self, degree: int, classes):
        classes = tuple(sorted(tuple(sorted(c)) for c in classes if c))
        flat = sorted(x for c in classes for x in c)
        if flat != list(range(1, degree + 1)):
            raise ValueError("classes must partition 1..n")
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "classes", classes)

    def __setattr__(self, name, value):
        raise AttributeError("Equivalence is immutable")

    def __eq__(self, other):
        if not isinstance(other, Equivalence):
            return NotImplemented
        return self.degree == other.degree and self.classes == other.classes

    def __hash__(self):
        return hash((self.degree, self.classes))

    def __len__(self):
        return len(self.classes)

    def __repr__(self):
        return "Equivalence(%s)" % "|".join(",".join(map(str, c)) for c in self.classes)

    def class_of(self, x: int) -> tuple:
        for c in self.classes:
            if x in c:
                return c
        raise KeyError(x)

    def related(self, x: int, y: int) -> bool:
        return y in self.class_of(x)

    def refines(self, other: "Equivalence") -> bool:
        """True iff every class of self lies inside a class of other
        (self is contained in other as a relation)."""
        label = {}
        for i, c in enumerate(other.classes):
            for x in c:
                label[x] = i
        return all(len({label[x] for x in c}) == 1 for c in self.classes)

    def __le__(self, other):
        return self.refines(other)

    def __ge__(self, other):
        return other.refines(self)


def rho(a: Partition) -> Equivalence:
    n = a.degree
    return Equivalence(n, [[s + 1 for s in b if s < n] for b in a.blocks])


def lam(a: Partition) -> Equivalence:
    n = a.degree
    return Equivalence(n, [[s - n + 1 for s in b if s >= n] for b in a.blocks])


# `lambda` is a keyword
lambda_ = lam


def is_ip(a: Partition) -> bool:
    n = a.degree
    return all(b[0] < n <= b[-1] for b in a.blocks)


def rank(a: Partition) -> int:
    """Number of blocks.  For elements of IP_n this is also the number of
    rho- and lambda-classes; see rank_checked for general partitions."""
    return len(a.blocks)


def rank_checked(a: Partition) -> tuple[int, bool]:
    """(block count, flag); the flag is False when the rho/lambda class
    counts differ from the block count, which happens only outside IP_n."""
    k = len(a.blocks)
    return k, len(rho(a)) == k and len(lam(a)) == k


def split_block(a: Partition, block) -> tuple[tuple, tuple]:
    """(unprimed part, primed part) of a block, as 1-based indices."""
    n = a.degree
    return (tuple(s + 1 for s in block if s < n),
            tuple(s - n + 1 for s in block if s >= n))


def from_pairs(n: int, pairs) -> Partition:
    """Build an IP element from (A, B) pairs meaning the block A u B'."""
    return Partition(n, [[x - 1 for x in A] + [n + y - 1 for y in B] for A, B in pairs])


def render(a: Partition) -> str:
    """ASCII listing: one row per index, left column the unprimed point with
    its block label, right column the primed point with its block label."""
    n = a.degree
    label = {}
    for i, b in enumerate(a.blocks):
        for s in b:
            label[s] = i
    names = [_block_name(i) for i in range(len(a.blocks))]
    w = len(str(n))
    lines = []
    for i in range(n):
        left = f"{i + 1:>{w}} [{names[label[i]]}]"
        right = f"[{names[label[n + i]]}] {i + 1:>{w}}'"
        lines.append(f"{left}   {right}")
    legend = "  ".join(f"{names[i]}={{{','.join(str(p) for p in blk)}}}"
                       for i, blk in enumerate(a.point_blocks()))
    lines.append(legend)
    return "\n".join(lines)


def _block_name(i: int) -> str:
    s = ""
    i += 1
    while i:
        i, r = divmod(i - 1, 26)
        s = chr(ord("A") + r) + s
    return s
