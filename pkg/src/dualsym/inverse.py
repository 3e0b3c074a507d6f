"""Idempotents, the natural order, Green's relations and the two partial
products (trace and imprint) of IP_n."""

from __future__ import annotations

from .partition import Partition, lam, multiply, rank, rho, star


class _Undefined:
    """Marker for a partial product that is not defined."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "UNDEFINED"

    def __bool__(self):
        return False


UNDEFINED = _Undefined()


def _same_degree(a, b):
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} vs {b.degree}")


def is_idempotent(a: Partition) -> bool:
    # every block is E u E'
    n = a.degree
    for b in a.blocks:
        top = [s for s in b if s < n]
        bot = [s - n for s in b if s >= n]
        if top != bot:
            return False
    return True


def idempotent_meet(e: Partition, f: Partition) -> Partition:
    _same_degree(e, f)
    if not (is_idempotent(e) and is_idempotent(f)):
        raise ValueError("idempotent_meet needs two idempotents")
    return multiply(e, f)


def natural_leq(a: Partition, b: Partition) -> bool:
    """a <= b iff every block of b lies inside a block of a."""
    _same_degree(a, b)
    label = [0] * (2 * a.degree)
    for i, blk in enumerate(a.blocks):
        for s in blk:
            label[s] = i
    for blk in b.blocks:
        c = label[blk[0]]
        for s in blk[1:]:
            if label[s] != c:
                return False
    return True


def green_R(a: Partition, b: Partition) -> bool:
    _same_degree(a, b)
    return rho(a) == rho(b)


def green_L(a: Partition, b: Partition) -> bool:
    _same_degree(a, b)
    return lam(a) == lam(b)


def green_H(a: Partition, b: Partition) -> bool:
    return green_R(a, b) and green_L(a, b)


def green_D(a: Partition, b: Partition) -> bool:
    _same_degree(a, b)
    return rank(a) == rank(b)


green_J = green_D


def trace_product(a: Partition, b: Partition):
    """a*b when lambda_a = rho_b, otherwise UNDEFINED."""
    _same_degree(a, b)
    if lam(a) != rho(b):
        return UNDEFINED
    return multiply(a, b)


def imprint_product(e: Partition, a: Partition):
    """e*a when e is idempotent and rho_a refines rho_e, otherwise UNDEFINED."""
    _same_degree(e, a)
    if not is_idempotent(e):
        raise ValueError("imprint_product needs an idempotent left factor")
    if not rho(a).refines(rho(e)):
        return UNDEFINED
    return multiply(e, a)


def idempotent_of_R(a: Partition) -> Partition:
    return multiply(a, star(a))


def idempotent_of_L(a: Partition) -> Partition:
    return multiply(star(a), a)
