"""Named test groups and the group-spec grammar.

Grammar: ``Cn``, ``Cn^d``, ``Sn``, ``An``, ``Dn`` (dihedral of order 2n),
``Q8``, ``SL23``, joined by ``x`` for direct products (``C2^2xS3``), or
``perm:(1 2 3)(4 5);(1 2)`` for an explicit permutation group.
"""
from __future__ import annotations

import itertools
import re

import numpy as np

from .errors import ClosureCapExceeded, UnknownName
from .groups import (
    DEFAULT_PERM_CAP,
    Group,
    cyclic_group,
    direct_product,
    group_from_permutations,
    parse_cycles,
)

_FACTOR = re.compile(r"^(?:(C)(\d+)(?:\^(\d+))?|([SAD])(\d+)|(Q8)|(SL23))$")


def _cycle(n: int, start: int = 0) -> list[int]:
    img = list(range(n))
    for i in range(start, n):
        img[i] = start + (i - start + 1) % (n - start)
    return img


def symmetric_group(n: int) -> Group:
    if n <= 1:
        return group_from_permutations([], 1, name=f"S{n}")
    gens = [_cycle(n), parse_cycles("(1 2)", n)]
    return group_from_permutations(gens, n, name=f"S{n}")


def alternating_group(n: int) -> Group:
    gens = [parse_cycles(f"(1 2 {i})", n) for i in range(3, n + 1)]
    return group_from_permutations(gens, max(n, 1), name=f"A{n}")


def dihedral_group(n: int) -> Group:
    """Symmetries of the n-gon, order 2n."""
    if n == 1:
        g = cyclic_group(2)
    elif n == 2:
        g = group_from_permutations([parse_cycles("(1 2)(3 4)"), parse_cycles("(1 3)(2 4)")], 4)
    else:
        flip = [(-i) % n for i in range(n)]
        g = group_from_permutations([_cycle(n), flip], n)
    return Group(g.mul, g.inv, g.labels, f"D{n}")


def quaternion_group() -> Group:
    i = parse_cycles("(1 2 3 4)(5 6 7 8)")
    j = parse_cycles("(1 5 3 7)(2 8 4 6)")
    return group_from_permutations([i, j], 8, name="Q8")


def sl23() -> Group:
    """SL(2,3) from its 24 matrices; identity first, matrices then dropped."""
    mats = [m for m in itertools.product(range(3), repeat=4)
            if (m[0] * m[3] - m[1] * m[2]) % 3 == 1]
    ident = (1, 0, 0, 1)
    mats.remove(ident)
    mats.insert(0, ident)
    index = {m: k for k, m in enumerate(mats)}

    def times(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return ((a * e + b * g) % 3, (a * f + b * h) % 3,
                (c * e + d * g) % 3, (c * f + d * h) % 3)

    n = len(mats)
    mul = np.array([[index[times(x, y)] for y in mats] for x in mats], dtype=np.int64)
    inv = np.argmax(mul == 0, axis=1)
    labels = tuple(f"[[{a},{b}],[{c},{d}]]" for a, b, c, d in mats)
    return Group(mul, inv, labels, "SL23")


def _factor(token: str, cap: int) -> Group:
    m = _FACTOR.match(token)
    if not m:
        raise UnknownName(f"unknown group name {token!r}")
    if m.group(1):
        n = int(m.group(2))
        d = int(m.group(3) or 1)
        if n < 1 or d < 1:
            raise UnknownName(f"bad cyclic spec {token!r}")
        if n ** d > cap:
            raise ClosureCapExceeded(f"{token} has order {n ** d} > cap {cap}")
        g = cyclic_group(n)
        out = g
        for _ in range(d - 1):
            out = direct_product(out, g)
        return Group(out.mul, out.inv, out.labels, token)
    if m.group(4):
        kind, n = m.group(4), int(m.group(5))
        if kind == "S":
            return symmetric_group(n) if n >= 1 else _bad(token)
        if kind == "A":
            return alternating_group(n) if n >= 1 else _bad(token)
        return dihedral_group(n) if n >= 1 else _bad(token)
    if m.group(6):
        return quaternion_group()
    return sl23()


def _bad(token):
    raise UnknownName(f"bad group spec {token!r}")


def group_from_catalog(name: str, cap: int = DEFAULT_PERM_CAP) -> Group:
    """Build a group from a spec string (see module docstring)."""
    spec = name.strip()
    if spec.startswith("perm:"):
        body = spec[len("perm:"):]
        gens = [parse_cycles(t) for t in body.split(";") if t.strip()]
        degree = max((len(p) for p in gens), default=1)
        gens = [p + list(range(len(p), degree)) for p in gens]
        return group_from_permutations(gens, degree, cap=cap, name=spec)
    tokens = spec.split("x")
    if not spec or any(not t for t in tokens):
        raise UnknownName(f"bad group spec {name!r}")
    out = None
    for t in tokens:
        f = _factor(t, cap)
        out = f if out is None else direct_product(out, f, cap=cap)
    if out.order > cap:
        raise ClosureCapExceeded(f"{spec} has order {out.order} > cap {cap}")
    return Group(out.mul, out.inv, out.labels, spec)


# Groups used by the cross-validation suites; all have order <= 200.
STANDARD_CATALOG = (
    "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C12",
    "C2^2", "C2^3", "C2^4", "C3^2", "C4xC2", "C4xC4",
    "S3", "D4", "D5", "D6", "D10", "Q8", "A4", "S4", "SL23", "A5",
    "C2xS3", "S3xS3", "C2^2xS3", "S3xC3", "Q8xC3", "Q8xC2", "A4xC2", "A4xC3",
    "D4xC3", "S4xC2", "C2^3xC3", "SL23xC2", "A5xC2", "A5xC3", "A4xS3",
    "C2^2xC3", "C2xC3^2", "D4xS3", "C5xD5", "S4xC3",
)
