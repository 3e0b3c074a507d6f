"""Reference implementations used only by the tests.

They follow the definitions directly and share no code paths with the
library beyond the Partition container.
"""

from itertools import permutations, product

from dualsym.partition import Partition


def _same(a: Partition):
    """Return same(p, q) for points given as (index, primed)."""
    n = a.degree
    label = {}
    for i, b in enumerate(a.blocks):
        for s in b:
            label[(s + 1, False) if s < n else (s - n + 1, True)] = i
    return lambda p, q: label[p] == label[q]


def chain_product(a: Partition, b: Partition) -> Partition:
    """The product built from alternating chains through the middle row:
    unprimed points talk through a, primed points through b, and a chain
    c1, c2, ... alternately uses a on the primed copies and b on the
    unprimed copies."""
    n = a.degree
    sa, sb = _same(a), _same(b)
    X = range(1, n + 1)

    def walk_from_top(x):
        # odd: c with x ~a c' then closed under (b-step, a-step)
        odd = {c for c in X if sa((x, False), (c, True))}
        even = set()
        while True:
            new_even = {d for c in odd for d in X if sb((c, False), (d, False))}
            new_odd = odd | {d for c in new_even for d in X if sa((c, True), (d, True))}
            if new_even <= even and new_odd <= odd:
                return odd, even
            even |= new_even
            odd = new_odd

    def walk_from_bottom(y):
        # odd: c with y' ~b c then closed under (a-step, b-step)
        odd = {c for c in X if sb((y, True), (c, False))}
        even = set()
        while True:
            new_even = {d for c in odd for d in X if sa((c, True), (d, True))}
            new_odd = odd | {d for c in new_even for d in X if sb((c, False), (d, False))}
            if new_even <= even and new_odd <= odd:
                return odd, even
            even |= new_even
            odd = new_odd

    rel = set()
    for x in X:
        odd, even = walk_from_top(x)
        for y in X:
            if sa((x, False), (y, False)) or any(sa((c, True), (y, False)) for c in even):
                rel.add(((x, False), (y, False)))
            if any(sb((c, False), (y, True)) for c in odd):
                rel.add(((x, False), (y, True)))
                rel.add(((y, True), (x, False)))
    for x in X:
        odd, even = walk_from_bottom(x)
        for y in X:
            if sb((x, True), (y, True)) or any(sb((c, False), (y, True)) for c in even):
                rel.add(((x, True), (y, True)))
    pts = [(x, p) for p in (False, True) for x in X]
    # check it is an equivalence, then read off classes
    for p in pts:
        assert (p, p) in rel
    for p, q in rel:
        assert (q, p) in rel
    for p, q in list(rel):
        for r in pts:
            if (q, r) in rel:
                assert (p, r) in rel
    classes = []
    seen = set()
    for p in pts:
        if p in seen:
            continue
        cls = [q for q in pts if (p, q) in rel]
        seen.update(cls)
        classes.append(cls)
    return Partition.from_points(n, classes)


def all_set_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for p in all_set_partitions(rest):
        for i in range(len(p)):
            yield p[:i] + [[first] + p[i]] + p[i + 1:]
        yield [[first]] + p


def ip_by_construction(n):
    """IP_n built as (partition of X, partition of X', bijection)."""
    out = set()
    parts = list(all_set_partitions(range(1, n + 1)))
    for top in parts:
        for bot in parts:
            if len(top) != len(bot):
                continue
            for perm in permutations(bot):
                blocks = [[(x, False) for x in A] + [(y, True) for y in B]
                          for A, B in zip(top, perm)]
                out.add(Partition.from_points(n, blocks))
    return out


def cs_by_construction(n):
    pts = [(x, p) for p in (False, True) for x in range(1, n + 1)]
    return {Partition.from_points(n, blk) for blk in all_set_partitions(pts)}


def stirling2_by_surjections(n, k):
    """Count surjections n -> k and divide by k!."""
    from math import factorial
    count = sum(1 for f in product(range(k), repeat=n) if len(set(f)) == k)
    return count // factorial(k)


def bell_by_recurrence(n):
    from math import comb
    b = [1]
    for m in range(n):
        b.append(sum(comb(m, k) * b[k] for k in range(m + 1)))
    return b[n]
