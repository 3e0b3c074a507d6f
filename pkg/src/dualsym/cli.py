"""dualsym command line.

Exit codes: 0 success, 1 a verification check failed, 2 usage or parse
error (including unknown suite), 3 degree mismatch, 4 degree outside the
supported range.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import enumeration as en
from . import suites
from .generators import named
from .inverse import green_D, green_H, green_L, green_R, natural_leq
from .partition import (DegreeError, ParseError, is_ip, lam, multiply, rank_checked,
                        render, rho, serialize, star)

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_DEGREE, EXIT_BOUND = 0, 1, 2, 3, 4

_NEEDS_DEGREE = ("tau", "xi", "zeta", "upsilon", "zero", "id")


class _Exit(Exception):
    def __init__(self, code, msg):
        super().__init__(msg)
        self.code = code


def _dump(obj):
    return json.dumps(obj, separators=(",", ":"))


def resolve(texts, n=None):
    """Turn literals into partitions, inferring the degree from the plain
    literals when named forms need one."""
    out = [None] * len(texts)
    degrees = set()
    try:
        for i, t in enumerate(texts):
            if t.split(":")[0] not in _NEEDS_DEGREE:
                out[i] = named(t, n)
                degrees.add(out[i].degree)
        if n is None:
            if len(degrees) > 1:
                raise _Exit(EXIT_DEGREE, f"degree mismatch: {sorted(degrees)}")
            n = degrees.pop() if degrees else None
        for i, t in enumerate(texts):
            if out[i] is None:
                if n is None:
                    raise _Exit(EXIT_PARSE, f"{t!r} needs a degree (-n)")
                out[i] = named(t, n)
    except _Exit:
        raise
    except (ParseError, ValueError, TypeError) as e:
        raise _Exit(EXIT_PARSE, str(e))
    if len({a.degree for a in out}) > 1:
        raise _Exit(EXIT_DEGREE, f"degree mismatch: {sorted({a.degree for a in out})}")
    return out


def cmd_mult(args):
    els = resolve(args.elements, args.n)
    if len(els) < 2:
        raise _Exit(EXIT_PARSE, "mult needs at least two elements")
    p = els[0]
    for b in els[1:]:
        try:
            p = multiply(p, b)
        except DegreeError as e:
            raise _Exit(EXIT_DEGREE, str(e))
    s = serialize(p)
    print(_dump({"product": s}) if args.json else s)


def cmd_star(args):
    (a,) = resolve([args.element], args.n)
    s = serialize(star(a))
    print(_dump({"star": s}) if args.json else s)


def cmd_rank(args):
    (a,) = resolve([args.element], args.n)
    k, exact = rank_checked(a)
    if args.json:
        print(_dump({"rank": k, "ip": is_ip(a), "classes_agree": exact,
                     "rho_classes": len(rho(a)), "lambda_classes": len(lam(a))}))
    elif exact:
        print(k)
    else:
        print(f"{k} (not in IP_n: rho has {len(rho(a))} classes, lambda has {len(lam(a))})")


def cmd_green(args):
    a, b = resolve([args.a, args.b], args.n)
    rel = {"R": green_R(a, b), "L": green_L(a, b), "H": green_H(a, b), "D": green_D(a, b)}
    rel["J"] = rel["D"]
    if args.json:
        print(_dump(rel))
    else:
        for k, v in rel.items():
            print(f"{k} {'yes' if v else 'no'}")


def cmd_leq(args):
    a, b = resolve([args.a, args.b], args.n)
    v = natural_leq(a, b)
    print(_dump({"leq": v}) if args.json else ("true" if v else "false"))


def _kind_elements(kind, n):
    if kind == "ip":
        return en.enumerate_ip(n)
    if kind == "cs":
        return en.enumerate_cs(n)
    if kind == "it":
        return en.enumerate_it(n)
    if kind == "iop":
        return en.enumerate_iop(n)
    if kind == "idempotents":
        return en.enumerate_idempotents(n)
    if kind.startswith("ideal:"):
        try:
            k = int(kind.split(":", 1)[1])
        except ValueError:
            raise _Exit(EXIT_PARSE, f"bad ideal index in {kind!r}")
        return sorted(en.ideal(k, n))
    raise _Exit(EXIT_PARSE, f"unknown kind {kind!r}")


def cmd_enumerate(args):
    els = _kind_elements(args.kind, args.n)
    if args.format == "count-only":
        print(len(els))
    elif args.format == "json":
        print(_dump({"kind": args.kind, "degree": args.n, "count": len(els),
                     "elements": [serialize(a) for a in els]}))
    else:
        for a in els:
            print(serialize(a))


def cmd_verify(args):
    if args.suite not in suites.SUITES:
        raise _Exit(EXIT_PARSE, f"unknown suite {args.suite!r}; choose from "
                                + ", ".join(suites.SUITES))
    checks = suites.run(args.suite, args.n, args.seed)
    ok = all(c.passed for c in checks)
    if args.json:
        print(_dump({"suite": args.suite, "degree": args.n, "seed": args.seed,
                     "passed": ok, "checks": [c.to_json() for c in checks]}))
    else:
        for c in checks:
            print(c.line())
        print(f"{args.suite} n={args.n}: {'PASS' if ok else 'FAIL'} "
              f"({sum(c.passed for c in checks)}/{len(checks)})")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_closure(args):
    gens = resolve(args.generators, args.n)
    t = en.close(gens)
    print(t.dumps())


def cmd_render(args):
    (a,) = resolve([args.element], args.n)
    print(render(a))


def build_parser():
    p = argparse.ArgumentParser(prog="dualsym", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True)

    def with_n(sp):
        sp.add_argument("-n", "--degree", dest="n", type=int, default=None,
                        help="degree for named elements (tau:, xi:, zero, ...)")
        sp.add_argument("--json", action="store_true")
        return sp

    sp = with_n(sub.add_parser("mult", help="product of two or more elements"))
    sp.add_argument("elements", nargs="+")
    sp.set_defaults(func=cmd_mult)

    sp = with_n(sub.add_parser("star", help="the inverse (prime swap)"))
    sp.add_argument("element")
    sp.set_defaults(func=cmd_star)

    sp = with_n(sub.add_parser("rank", help="number of blocks"))
    sp.add_argument("element")
    sp.set_defaults(func=cmd_rank)

    sp = with_n(sub.add_parser("green", help="Green's relations between two elements"))
    sp.add_argument("a")
    sp.add_argument("b")
    sp.set_defaults(func=cmd_green)

    sp = with_n(sub.add_parser("leq", help="natural partial order a <= b"))
    sp.add_argument("a")
    sp.add_argument("b")
    sp.set_defaults(func=cmd_leq)

    sp = sub.add_parser("enumerate", help="list ip, cs, it, iop, idempotents or ideal:k")
    sp.add_argument("kind")
    sp.add_argument("n", type=int)
    sp.add_argument("--format", choices=["lines", "json", "count-only"], default="lines")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("suite")
    sp.add_argument("n", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("closure", help="subsemigroup generated, as a JSON table")
    sp.add_argument("-n", "--degree", dest="n", type=int, default=None)
    sp.add_argument("generators", nargs="+")
    sp.set_defaults(func=cmd_closure)

    sp = sub.add_parser("render", help="ASCII block listing")
    sp.add_argument("-n", "--degree", dest="n", type=int, default=None)
    sp.add_argument("element")
    sp.set_defaults(func=cmd_render)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code = args.func(args)
    except _Exit as e:
        print(f"dualsym: {e}", file=sys.stderr)
        return e.code
    except en.BoundError as e:
        print(f"dualsym: {e}", file=sys.stderr)
        return EXIT_BOUND
    except DegreeError as e:
        print(f"dualsym: {e}", file=sys.stderr)
        return EXIT_DEGREE
    sys.stdout.flush()
    return code or EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
