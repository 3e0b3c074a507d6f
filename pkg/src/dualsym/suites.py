"""Verification suites behind ``dualsym verify``.

Each suite is a generator of Check records; the CLI prints one PASS/FAIL
line per check.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import factorial

from . import enumeration as en
from .generators import in_iop, tau, xi
from .inverse import green_D, green_L, green_R, is_idempotent
from .morphisms import (automorphism_as_conjugation, enumerate_automorphisms,
                        enumerate_is, is_multiply, kappa, no_embedding_witness,
                        to_biequivalence, biequiv_multiply)
from .partition import lam, multiply, rank, rho
from .representation import faithfulness_report


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return f"{tag}  {self.name}" + (f"  ({self.detail})" if self.detail else "")

    def to_json(self):
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


# suite -> (lo, hi) supported degrees
BOUNDS = {
    "counts": (1, 5),
    "green": (1, 3),
    "generators": (3, 4),
    "ideals": (1, 4),
    "maximal": (3, 4),
    "automorphisms": (1, 3),
    "embedding": (1, 3),
    "representation": (2, 4),
    "iop": (1, 4),
    "cs-maximal": (2, 3),
}


def random_ip(n: int, rng: random.Random):
    """A uniformly random element of IP_n: random set partitions of both
    halves with equal block count, matched by a random bijection."""
    # sample the block count by weight s(n,k)^2 k!
    weights = [en.stirling2(n, k) ** 2 * factorial(k) for k in range(1, n + 1)]
    k = rng.choices(range(1, n + 1), weights=weights)[0]
    top = _random_set_partition(n, k, rng)
    bot = _random_set_partition(n, k, rng)
    rng.shuffle(bot)
    from .partition import from_pairs
    return from_pairs(n, list(zip(top, bot)))


def _random_set_partition(n, k, rng):
    """Uniform partition of 1..n into exactly k blocks (rejection from
    uniform surjections)."""
    while True:
        lab = [rng.randrange(k) for _ in range(n)]
        if len(set(lab)) == k:
            break
    blocks = [[] for _ in range(k)]
    for x, c in enumerate(lab, 1):
        blocks[c].append(x)
    return blocks


def suite_counts(n, seed=0):
    for m in range(1, n + 1):
        ip = en.enumerate_ip(m)
        yield Check(f"|IP_{m}| = sum_k s({m},k)^2 k! = {en.ip_order(m)}",
                    len(ip) == en.ip_order(m), f"enumerated {len(ip)}")
        e = sum(1 for a in ip if is_idempotent(a))
        yield Check(f"|E(IP_{m})| = Bell({m}) = {en.bell(m)}", e == en.bell(m),
                    f"enumerated {e}")
    if n <= en.bound("cs"):
        cs = en.enumerate_cs(n)
        yield Check(f"|CS_{n}| = Bell({2 * n}) = {en.bell(2 * n)}",
                    len(cs) == en.bell(2 * n), f"enumerated {len(cs)}")


def suite_green(n, seed=0):
    ip = en.enumerate_ip(n)
    right = {a: frozenset(multiply(a, x) for x in ip) for a in ip}
    left = {a: frozenset(multiply(x, a) for x in ip) for a in ip}
    two = {a: frozenset(multiply(b, y) for b in left[a] for y in ip) for a in ip}
    bad = [(a, b) for a in ip for b in ip
           if green_R(a, b) != (right[a] == right[b])
           or green_L(a, b) != (left[a] == left[b])
           or green_D(a, b) != (two[a] == two[b])]
    yield Check(f"R, L, D from rho/lambda/rank agree with principal ideals on IP_{n}",
                not bad, f"{len(ip) ** 2} pairs, {len(bad)} mismatches")
    rng = random.Random(seed)
    fails = 0
    for _ in range(2000):
        a, b = random_ip(8, rng), random_ip(8, rng)
        c = multiply(a, b)
        if rank(c) > min(rank(a), rank(b)) or not rho(a) <= rho(c) or not lam(b) <= lam(c):
            fails += 1
    yield Check("rank(ab) <= min(rank a, rank b), rho_a <= rho_ab, lambda_b <= lambda_ab "
                "(2000 random pairs, n = 8)", fails == 0, f"seed {seed}")


def suite_generators(n, seed=0):
    sgens = en.symmetric_group_generators(n)
    full = en.ip_order(n)
    t = en.close(sgens + [xi(1, 2, 3, n)])
    yield Check(f"IP_{n} = <S_{n}, xi_1,2,3>", len(t) == full, f"closure size {len(t)}")
    sym = en.symmetric_group(n)
    x = xi(1, 2, 3, n)
    orbit = {multiply(multiply(g, x), h) for g in sym for h in sym}
    cands = en.enumerate_ip(n) if n == 3 else [u for u in en.enumerate_ip(n) if rank(u) == n - 1]
    bad = [u for u in cands if (len(en.close(sgens + [u])) == full) != (u in orbit)]
    scope = "all u" if n == 3 else f"all rank-{n - 1} u"
    yield Check(f"<S_{n}, u> = IP_{n} iff u in S_{n} xi S_{n} ({scope})", not bad,
                f"{len(cands)} candidates, {len(bad)} mismatches")
    it = en.close(sgens + [tau([1, 2], n)])
    yield Check(f"<S_{n}, tau_1,2> = IT_{n}", it.as_set() == frozenset(en.enumerate_it(n)),
                f"closure size {len(it)}")


def suite_ideals(n, seed=0):
    ip = en.enumerate_ip(n)
    principal = {}
    for b in ip:
        principal[b] = frozenset(multiply(multiply(x, b), y) for x in ip for y in ip)
    ok = all(principal[b] == en.ideal(rank(b), n) for b in ip)
    yield Check(f"IP_{n} b IP_{n} = I_rank(b) for all b", ok)
    distinct = sorted(set(principal.values()), key=len)
    ideals = set()
    for mask in range(1, 2 ** len(distinct)):
        ideals.add(frozenset().union(*(d for i, d in enumerate(distinct) if mask >> i & 1)))
    expected = {en.ideal(k, n) for k in range(1, n + 1)}
    yield Check(f"every ideal of IP_{n} is some I_k", ideals == expected,
                f"{len(ideals)} ideals found")


def suite_maximal(n, seed=0):
    ms = en.maximal_subsemigroups(n, verify=False)
    expected = 1 + len(en.maximal_subgroups_of_symmetric(n))
    yield Check(f"IP_{n} has {expected} listed maximal subsemigroups",
                len({m.elements for m in ms}) == expected, f"{len(ms)} listed")
    whole = frozenset(en.enumerate_ip(n))
    for m in ms:
        yield Check(f"{m.label} is maximal", en.is_maximal_subsemigroup(m.elements, whole),
                    f"size {len(m)}")
        yield Check(f"{m.label} is inverse-closed", en.is_inverse_closed(m.elements))


def suite_automorphisms(n, seed=0):
    auts = enumerate_automorphisms(n)
    expected = 1 if n <= 2 else factorial(n)
    yield Check(f"|Aut(IP_{n})| = {expected}", len(auts) == expected, f"found {len(auts)}")
    yield Check("every automorphism is conjugation by a permutation",
                all(automorphism_as_conjugation(f) is not None for f in auts))


def suite_embedding(n, seed=0):
    iss = enumerate_is(n)
    imgs = {s: kappa(s) for s in iss}
    yield Check(f"kappa: IS_{n} -> IP_{n + 1} is injective", len(set(imgs.values())) == len(iss))
    bad = sum(1 for s in iss for t in iss if kappa(is_multiply(s, t)) != multiply(imgs[s], imgs[t]))
    yield Check(f"kappa(st) = kappa(s) kappa(t) on IS_{n}", bad == 0, f"{len(iss) ** 2} pairs")
    w = no_embedding_witness(n)
    yield Check(f"D-classes: IP_{n} has {n}, IS_{n} has {n + 1}",
                w.ip_d_classes == n and w.is_d_classes == n + 1,
                f"IP {w.ip_d_classes}, IS {w.is_d_classes}")
    ip = en.enumerate_ip(n)
    bi = {a: to_biequivalence(a) for a in ip}
    iso = all(to_biequivalence(multiply(a, b)) == biequiv_multiply(bi[a], bi[b])
              for a in ip for b in ip)
    yield Check(f"IP_{n} -> biequivalences is a multiplicative bijection",
                iso and len(set(bi.values())) == len(ip) and all(v.is_valid() for v in bi.values()))


def suite_representation(n, seed=0):
    rep = faithfulness_report(n)
    faithful = rep.faithful_cases
    yield Check("faithful exactly for rank-2 idempotents with trivial group",
                all(c.faithful == (c.idempotent_rank == 2 and c.subgroup_size == 1)
                    for c in rep.cases),
                f"{len(rep.cases)} closed inverse subsemigroups, {len(faithful)} faithful")
    yield Check(f"faithful degree = 2^{n} - 2 = {2 ** n - 2}",
                bool(faithful) and all(c.points == 2 ** n - 2 for c in faithful))
    yield Check("all faithful representations are equivalent",
                all(c.equivalent_to_canonical for c in faithful))


def suite_iop(n, seed=0):
    iop = en.enumerate_iop(n)
    yield Check(f"|IOP_{n}| = sum_k s({n},k)^2 = {en.h_class_count(n)}",
                len(iop) == en.h_class_count(n), f"enumerated {len(iop)}")
    yield Check(f"IOP_{n} is product- and inverse-closed",
                en.is_product_closed(iop) and en.is_inverse_closed(iop))
    yield Check(f"IOP_{n} is an H-cross-section of IP_{n}", en.is_h_cross_section(iop, n))
    yield Check(f"E(IOP_{n}) = E(IP_{n})",
                {a for a in iop if is_idempotent(a)} == set(en.enumerate_idempotents(n)))
    rng = random.Random(seed)
    sample = []
    while len(sample) < 200:
        a = random_ip(8, rng)
        if in_iop(a):
            sample.append(a)
    bad = sum(1 for a, b in zip(sample, sample[1:]) if not in_iop(multiply(a, b)))
    yield Check("IOP_8 closed on 199 random pairs", bad == 0, f"seed {seed}")


def suite_cs_maximal(n, seed=0):
    r = en.verify_ip_maximal_inverse_in_cs(n)
    yield Check(f"IP_{n} u {{Upsilon}} is an inverse subsemigroup of CS_{n}",
                r.base_closed and r.base_inverse, f"size {len(r.base)}")
    missing = [lit for lit, why in r.witnesses if why is None]
    yield Check(f"adjoining any of the {len(r.witnesses)} outside elements breaks inverseness",
                not missing, ", ".join(missing))
    if r.inverse_supersets is not None:
        yield Check("no inverse subsemigroup of CS_2 strictly contains it (exhaustive)",
                    r.inverse_supersets == 0)


SUITES = {
    "counts": suite_counts,
    "green": suite_green,
    "generators": suite_generators,
    "ideals": suite_ideals,
    "maximal": suite_maximal,
    "automorphisms": suite_automorphisms,
    "embedding": suite_embedding,
    "representation": suite_representation,
    "iop": suite_iop,
    "cs-maximal": suite_cs_maximal,
}


def run(suite: str, n: int, seed: int = 0) -> list[Check]:
    if suite not in SUITES:
        raise KeyError(suite)
    lo, hi = BOUNDS[suite]
    en.check_bound(n, suite, lo=lo, hi=hi)
    return list(SUITES[suite](n, seed))
