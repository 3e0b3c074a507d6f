"""Named elements of IP_n and the membership predicates for IT_n and IOP_n."""

from __future__ import annotations

from itertools import permutations

from .partition import Partition, from_pairs, identity, parse, split_block, zero


class Permutation:
    """A bijection of {1..n} given by its image list.

    Products compose left to right: (g*h)(x) = h(g(x)), which makes
    eta(g*h) = eta(g)*eta(h) for the gluing product of partitions.
    """

    __slots__ = ("degree", "image")

    def __init__(self, image):
        image = tuple(image)
        if sorted(image) != list(range(1, len(image) + 1)):
            raise ValueError(f"not a permutation: {image}")
        object.__setattr__(self, "degree", len(image))
        object.__setattr__(self, "image", image)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @classmethod
    def transposition(cls, n, x, y):
        img = list(range(1, n + 1))
        img[x - 1], img[y - 1] = y, x
        return cls(img)

    @classmethod
    def cycle(cls, n):
        """The n-cycle 1 -> 2 -> ... -> n -> 1."""
        return cls([i % n + 1 for i in range(1, n + 1)])

    def __call__(self, x):
        return self.image[x - 1]

    def __mul__(self, other):
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        return Permutation(other.image[x - 1] for x in self.image)

    def inverse(self):
        inv = [0] * self.degree
        for x, y in enumerate(self.image, 1):
            inv[y - 1] = x
        return Permutation(inv)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.image == other.image

    def __hash__(self):
        return hash(self.image)

    def __lt__(self, other):
        return self.image < other.image

    def __repr__(self):
        return f"Permutation({list(self.image)})"


def all_permutations(n):
    return [Permutation(p) for p in permutations(range(1, n + 1))]


def symmetric_generators(n):
    """Coxeter-style generators of S_n: the transposition (1 2) and the
    n-cycle.  Degenerate degrees return what is needed to generate."""
    if n == 1:
        return [Permutation.identity(1)]
    if n == 2:
        return [Permutation.transposition(2, 1, 2)]
    return [Permutation.transposition(n, 1, 2), Permutation.cycle(n)]


def _check_subset(A, n):
    A = set(A)
    if not A:
        raise ValueError("tau needs a nonempty set")
    if not A <= set(range(1, n + 1)):
        raise ValueError(f"{sorted(A)} is not a subset of 1..{n}")
    return A


def tau(A, n: int) -> Partition:
    A = _check_subset(A, n)
    rest = [x for x in range(1, n + 1) if x not in A]
    return from_pairs(n, [(sorted(A), sorted(A))] + [([x], [x]) for x in rest])


def xi(x: int, y: int, z: int, n: int) -> Partition:
    if n < 3:
        raise ValueError("xi needs n >= 3")
    if len({x, y, z}) != 3:
        raise ValueError("xi needs three distinct points")
    if not all(1 <= t <= n for t in (x, y, z)):
        raise ValueError("xi arguments outside 1..n")
    rest = [t for t in range(1, n + 1) if t not in (x, y, z)]
    return from_pairs(n, [([x, y], [x]), ([z], [y, z])] + [([t], [t]) for t in rest])


def eta(g: Permutation) -> Partition:
    n = g.degree
    return from_pairs(n, [([x], [g(x)]) for x in range(1, n + 1)])


def zeta(x: int, n: int) -> Partition:
    if n < 2:
        raise ValueError("zeta needs n >= 2")
    return tau([t for t in range(1, n + 1) if t != x], n)


def upsilon(n: int) -> Partition:
    if n < 2:
        raise ValueError("upsilon needs n >= 2")
    return Partition(n, [range(n), range(n, 2 * n)])


def is_special(a: Partition) -> bool:
    """Membership in IT_n: every block joins equally many unprimed and
    primed points."""
    n = a.degree
    for b in a.blocks:
        top = sum(1 for s in b if s < n)
        if 2 * top != len(b):
            return False
    return True


def in_iop(a: Partition) -> bool:
    """Blocks sorted by least unprimed index are also sorted by least primed
    index."""
    # canonical blocks are already sorted by least unprimed point
    prev = -1
    for b in a.blocks:
        top, bot = split_block(a, b)
        if not top or not bot:
            return False
        if bot[0] < prev:
            return False
        prev = bot[0]
    return True


def named(text: str, n: int | None = None) -> Partition:
    """Resolve a named literal ("tau:1,2", "xi:1,2,3", "zeta:3", "perm:2,1,3",
    "upsilon", "zero", "id") or fall back to a partition literal.

    The degree comes from ``n`` or, for perm, from the image length.
    """
    text = text.strip()
    head, _, arg = text.partition(":")
    args = [int(t) for t in arg.split(",")] if arg and head in {"tau", "xi", "zeta", "perm"} else []
    if head == "perm":
        g = Permutation(args)
        if n is not None and g.degree != n:
            raise ValueError(f"perm of degree {g.degree} where degree {n} expected")
        return eta(g)
    if head in {"tau", "xi", "zeta", "upsilon", "zero", "id"}:
        if n is None:
            raise ValueError(f"{head!r} needs an explicit degree")
        if head == "tau":
            return tau(args, n)
        if head == "xi":
            return xi(*args, n)
        if head == "zeta":
            (x,) = args
            return zeta(x, n)
        if head == "upsilon":
            return upsilon(n)
        if head == "zero":
            return zero(n)
        return identity(n)
    return parse(text, n)
