"""Finite groups stored as full Cayley tables.

Elements are the dense indices ``0..order-1`` with the identity at 0.
Subgroups and conjugacy classes are bitsets over those indices, held as
Python ints so that meet, membership and containment are single integer
operations.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, reduce
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    ClosureCapExceeded,
    InvalidPermutation,
    NotNormal,
    TrivialGroup,
)

DEFAULT_PERM_CAP = 10_000


# --------------------------------------------------------------------------
# bitset helpers

def mask_from_bool(arr: np.ndarray) -> int:
    packed = np.packbits(np.asarray(arr, dtype=bool), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def mask_from_indices(indices: Iterable[int], n: int) -> int:
    arr = np.zeros(n, dtype=bool)
    arr[np.fromiter(indices, dtype=np.int64)] = True
    return mask_from_bool(arr)


def bool_from_mask(mask: int, n: int) -> np.ndarray:
    nbytes = (n + 7) // 8
    raw = np.frombuffer(mask.to_bytes(nbytes, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:n].astype(bool)


def indices_from_mask(mask: int, n: int) -> np.ndarray:
    return np.flatnonzero(bool_from_mask(mask, n))


# --------------------------------------------------------------------------
# core types

@dataclass(frozen=True, eq=False)
class Group:
    """A finite group given by its multiplication table.

    ``mul[x, y]`` is the index of ``x*y``; ``inv[x]`` the index of the
    inverse. Instances are immutable; derived data is cached lazily.
    """

    mul: np.ndarray
    inv: np.ndarray
    labels: tuple[str, ...]
    name: str = ""

    def __post_init__(self):
        self.mul.setflags(write=False)
        self.inv.setflags(write=False)

    def __repr__(self):
        return f"Group({self.name or '?'}, order={self.order})"

    @property
    def order(self) -> int:
        return self.mul.shape[0]

    @property
    def identity(self) -> int:
        return 0

    @cached_property
    def elements(self) -> np.ndarray:
        return np.arange(self.order)

    @cached_property
    def element_orders(self) -> np.ndarray:
        n = self.order
        orders = np.zeros(n, dtype=np.int64)
        cur = np.arange(n)
        k = 1
        while (orders == 0).any():
            hit = (cur == 0) & (orders == 0)
            orders[hit] = k
            cur = self.mul[cur, np.arange(n)]
            k += 1
        return orders

    @cached_property
    def exponent(self) -> int:
        return reduce(lambda a, b: a * b // gcd(a, b), (int(o) for o in set(self.element_orders.tolist())), 1)

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    @cached_property
    def trivial(self) -> Subgroup:
        return Subgroup(self, 1)

    @cached_property
    def whole(self) -> Subgroup:
        return Subgroup(self, self.full_mask)

    def conjugate_all(self, x: int) -> np.ndarray:
        """``g^-1 x g`` for every g, as an array indexed by g."""
        return self.mul[self.inv, self.mul[x, :]]

    @cached_property
    def classes(self) -> list[ConjClass]:
        return conjugacy_classes(self)

    @cached_property
    def class_of(self) -> np.ndarray:
        out = np.empty(self.order, dtype=np.int64)
        for i, c in enumerate(self.classes):
            out[c.member_indices] = i
        return out

    @cached_property
    def generators(self) -> tuple[int, ...]:
        """A small generating set, picked greedily by index."""
        gens: list[int] = []
        current = np.zeros(self.order, dtype=bool)
        current[0] = True
        for x in range(self.order):
            if not current[x]:
                gens.append(x)
                current = generate(self, gens)
        return tuple(gens)

    @cached_property
    def is_abelian(self) -> bool:
        return bool((self.mul == self.mul.T).all())

    def check_axioms(self) -> None:
        """Exhaustive associativity / identity / inverse check (desk scale)."""
        n = self.order
        m = self.mul
        if not (m[0] == np.arange(n)).all() or not (m[:, 0] == np.arange(n)).all():
            raise AssertionError("index 0 is not a two-sided identity")
        if not (m[np.arange(n), self.inv] == 0).all() or not (m[self.inv, np.arange(n)] == 0).all():
            raise AssertionError("inv is not a two-sided inverse")
        for x in range(n):
            # (x*y)*z == x*(y*z) for all y, z
            if not (m[m[x, :], :] == m[x, :][m].reshape(n, n)).all():
                raise AssertionError("multiplication is not associative")
        if len(set(self.labels)) != n:
            raise AssertionError("labels are not unique")


@dataclass(frozen=True)
class Subgroup:
    parent: Group
    mask: int

    def __hash__(self):
        return hash((id(self.parent), self.mask))

    def __eq__(self, other):
        return isinstance(other, Subgroup) and other.parent is self.parent and other.mask == self.mask

    def __repr__(self):
        return f"Subgroup(order={self.order} in {self.parent.name or '?'})"

    @property
    def order(self) -> int:
        return self.mask.bit_count()

    @cached_property
    def member_indices(self) -> np.ndarray:
        return indices_from_mask(self.mask, self.parent.order)

    @property
    def as_bool(self) -> np.ndarray:
        return bool_from_mask(self.mask, self.parent.order)

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> int(x) & 1)

    def __le__(self, other: Subgroup) -> bool:
        return self.mask & ~other.mask == 0

    def __lt__(self, other: Subgroup) -> bool:
        return self <= other and self.mask != other.mask

    def __and__(self, other: Subgroup) -> Subgroup:
        return Subgroup(self.parent, self.mask & other.mask)

    @property
    def is_trivial(self) -> bool:
        return self.mask == 1

    @property
    def is_whole(self) -> bool:
        return self.mask == self.parent.full_mask

    def is_normal(self) -> bool:
        g = self.parent
        m = self.member_indices
        conj = g.mul[g.inv[:, None], g.mul[m[None, :], g.elements[:, None]]]
        return bool(self.as_bool[conj].all())

    def is_abelian(self) -> bool:
        m = self.member_indices
        block = self.parent.mul[np.ix_(m, m)]
        return bool((block == block.T).all())


@dataclass(frozen=True)
class ConjClass:
    parent: Group
    representative: int
    mask: int

    def __hash__(self):
        return hash((id(self.parent), self.mask))

    def __eq__(self, other):
        return isinstance(other, ConjClass) and other.parent is self.parent and other.mask == self.mask

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    @cached_property
    def member_indices(self) -> np.ndarray:
        return indices_from_mask(self.mask, self.parent.order)

    @property
    def element_order(self) -> int:
        return int(self.parent.element_orders[self.representative])

    def __repr__(self):
        return (f"ConjClass({self.parent.labels[self.representative]}, "
                f"size={self.size}, order={self.element_order})")


@dataclass(frozen=True)
class QuotientMap:
    source: Group
    target: Group
    image: np.ndarray
    kernel: Subgroup

    def image_of(self, h: Subgroup) -> Subgroup:
        return Subgroup(self.target, mask_from_indices(np.unique(self.image[h.member_indices]), self.target.order))

    def preimage(self, h: Subgroup) -> Subgroup:
        return Subgroup(self.source, mask_from_bool(h.as_bool[self.image]))


# --------------------------------------------------------------------------
# subgroup generation

def generate(g: Group, gens: Sequence[int]) -> np.ndarray:
    """Boolean membership array of the subgroup generated by ``gens``."""
    members = np.zeros(g.order, dtype=bool)
    members[0] = True
    gens = np.unique(np.asarray(list(gens), dtype=np.int64))
    if gens.size == 0:
        return members
    frontier = np.array([0])
    while frontier.size:
        prod = np.unique(g.mul[np.ix_(frontier, gens)])
        new = prod[~members[prod]]
        members[new] = True
        frontier = new
    return members


def subgroup_generated(g: Group, gens: Iterable[int]) -> Subgroup:
    return Subgroup(g, mask_from_bool(generate(g, list(gens))))


def product_set(g: Group, a: Subgroup, b: Subgroup) -> int:
    """Bitset of the product set ``AB``; a subgroup when either factor is normal."""
    prod = g.mul[np.ix_(a.member_indices, b.member_indices)]
    members = np.zeros(g.order, dtype=bool)
    members[prod.ravel()] = True
    return mask_from_bool(members)


def subgroup_as_group(h: Subgroup, name: str = "") -> Group:
    """Re-index a subgroup as a standalone group (identity stays first)."""
    g = h.parent
    idx = h.member_indices  # sorted, so idx[0] == 0
    pos = np.full(g.order, -1, dtype=np.int64)
    pos[idx] = np.arange(idx.size)
    mul = pos[g.mul[np.ix_(idx, idx)]]
    inv = pos[g.inv[idx]]
    return Group(mul, inv, tuple(g.labels[i] for i in idx), name)


# --------------------------------------------------------------------------
# constructors

def _cycle_string(perm: np.ndarray) -> str:
    seen = np.zeros(perm.size, dtype=bool)
    parts = []
    for i in range(perm.size):
        if seen[i] or perm[i] == i:
            seen[i] = True
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(str(j + 1))
            j = perm[j]
        parts.append("(" + " ".join(cyc) + ")")
    return "".join(parts) or "()"


def _check_perm(p: Sequence[int], n: int) -> np.ndarray:
    arr = np.asarray(p, dtype=np.int64)
    if arr.shape != (n,) or sorted(arr.tolist()) != list(range(n)):
        raise InvalidPermutation(f"not a bijection on {n} points: {list(p)}")
    return arr


def group_from_permutations(generators: Sequence[Sequence[int]], degree: int | None = None,
                            cap: int = DEFAULT_PERM_CAP, name: str = "") -> Group:
    """Close a list of permutations under composition.

    Each generator is an image list on ``0..n-1``; products act left to
    right (``x*y`` applies x first). Labels are 1-based cycle notation.
    """
    if degree is None:
        degree = max((len(p) for p in generators), default=1)
    gens = [_check_perm(p, degree) for p in generators]
    gens = [p for p in gens if not (p == np.arange(degree)).all()]

    ident = np.arange(degree)
    elems = [ident]
    index = {ident.tobytes(): 0}
    parent = [(-1, -1)]
    right = [[] for _ in gens]  # right[s][x] = index of x*s
    i = 0
    while i < len(elems):
        x = elems[i]
        for s, gp in enumerate(gens):
            z = gp[x]
            key = z.tobytes()
            j = index.get(key)
            if j is None:
                j = len(elems)
                if j >= cap:
                    raise ClosureCapExceeded(f"generated group exceeds cap {cap}")
                index[key] = j
                elems.append(z)
                parent.append((i, s))
            right[s].append(j)
        i += 1

    n = len(elems)
    rs = [np.asarray(r, dtype=np.int64) for r in right]
    mul = np.empty((n, n), dtype=np.int64)
    mul[:, 0] = np.arange(n)
    for y in range(1, n):
        py, s = parent[y]
        mul[:, y] = rs[s][mul[:, py]]
    inv = np.argmax(mul == 0, axis=1)
    labels = tuple(_cycle_string(p) for p in elems)
    return Group(mul, inv, labels, name)


def parse_cycles(text: str, degree: int | None = None) -> list[int]:
    """``"(1 2 3)(4 5)"`` -> 0-based image list."""
    text = text.strip()
    cycles = []
    depth_ok = text.count("(") == text.count(")")
    if not depth_ok:
        raise InvalidPermutation(f"unbalanced parentheses in {text!r}")
    body = text.replace(")", ")\n")
    for chunk in body.split("\n"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if not (chunk.startswith("(") and chunk.endswith(")")):
            raise InvalidPermutation(f"bad cycle {chunk!r}")
        inner = chunk[1:-1].replace(",", " ").split()
        try:
            pts = [int(t) for t in inner]
        except ValueError:
            raise InvalidPermutation(f"bad cycle {chunk!r}") from None
        if any(p < 1 for p in pts) or len(set(pts)) != len(pts):
            raise InvalidPermutation(f"bad cycle {chunk!r}")
        cycles.append(pts)
    n = max([max(c) for c in cycles if c] + [degree or 0, 1])
    img = list(range(n))
    used: set[int] = set()
    for cyc in cycles:
        if used & set(cyc):
            raise InvalidPermutation(f"cycles are not disjoint in {text!r}")
        used |= set(cyc)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[a - 1] = b - 1
    return img


def cyclic_group(n: int) -> Group:
    if n < 1:
        raise ValueError("cyclic group needs n >= 1")
    i = np.arange(n)
    mul = (i[:, None] + i[None, :]) % n
    inv = (-i) % n
    labels = tuple("e" if k == 0 else ("a" if k == 1 else f"a^{k}") for k in range(n))
    return Group(mul, inv, labels, f"C{n}")


def direct_product(g: Group, h: Group, cap: int | None = None) -> Group:
    """Element ``(x, y)`` sits at index ``x*|h| + y``."""
    ng, nh = g.order, h.order
    if cap is not None and ng * nh > cap:
        raise ClosureCapExceeded(f"product order {ng * nh} exceeds cap {cap}")
    mul = (g.mul[:, None, :, None] * nh + h.mul[None, :, None, :]).reshape(ng * nh, ng * nh)
    inv = (g.inv[:, None] * nh + h.inv[None, :]).reshape(-1)
    labels = tuple(f"({a},{b})" for a in g.labels for b in h.labels)
    name = f"{g.name}x{h.name}" if g.name and h.name else ""
    return Group(mul, inv, labels, name)


def embed_left(prod: Group, sub: Subgroup, other_order: int) -> Subgroup:
    """Image of a subgroup of the first factor as ``sub x 1``."""
    return Subgroup(prod, mask_from_indices(sub.member_indices * other_order, prod.order))


def product_subgroup(prod: Group, a: Subgroup, b: Subgroup) -> Subgroup:
    """``a x b`` inside ``a.parent x b.parent`` under the canonical indexing."""
    nh = b.parent.order
    idx = (a.member_indices[:, None] * nh + b.member_indices[None, :]).ravel()
    return Subgroup(prod, mask_from_indices(idx, prod.order))


# --------------------------------------------------------------------------
# structure

def conjugacy_classes(g: Group) -> list[ConjClass]:
    """Classes ordered by (element order, size, smallest member)."""
    seen = np.zeros(g.order, dtype=bool)
    found = []
    for x in range(g.order):
        if seen[x]:
            continue
        members = np.unique(g.conjugate_all(x))
        seen[members] = True
        found.append(members)
    orders = g.element_orders
    found.sort(key=lambda m: (int(orders[m[0]]), m.size, int(m[0])))
    return [ConjClass(g, int(m[0]), mask_from_indices(m, g.order)) for m in found]


def center(g: Group) -> Subgroup:
    central = (g.mul == g.mul.T).all(axis=1)
    return Subgroup(g, mask_from_bool(central))


def quotient(g: Group, n: Subgroup) -> tuple[Group, QuotientMap]:
    """The factor group on left cosets of a normal subgroup."""
    if not n.is_normal():
        raise NotNormal("subgroup is not normal")
    members = n.member_indices
    coset = np.full(g.order, -1, dtype=np.int64)
    reps = []
    for x in range(g.order):
        if coset[x] < 0:
            coset[g.mul[x, members]] = len(reps)
            reps.append(x)
    reps = np.asarray(reps)
    mul = coset[g.mul[np.ix_(reps, reps)]]
    inv = coset[g.inv[reps]]
    suffix = "" if n.is_trivial else "N"
    labels = tuple(g.labels[r] + suffix for r in reps)
    name = f"{g.name}/N" if g.name else ""
    q = Group(mul, inv, labels, name)
    return q, QuotientMap(g, q, coset, n)


def is_simple(g: Group) -> bool:
    if g.order == 1:
        raise TrivialGroup("the trivial group is neither simple nor non-simple here")
    from .lattice import normal_closure

    return all(normal_closure(g, [c.representative]).is_whole for c in g.classes[1:])


def is_nilpotent(g: Group) -> bool:
    """True iff every Sylow subgroup is normal, i.e. the p-elements of
    each prime number exactly the p-part of the order."""
    n = g.order
    orders = g.element_orders
    for p in _prime_factors(n):
        ppart = p ** _valuation(n, p)
        count = int(sum(1 for o in orders.tolist() if _is_power_of(o, p)))
        if count != ppart:
            return False
    return True


def is_cyclic(g: Group) -> bool:
    return bool((g.element_orders == g.order).any())


def has_cyclic_center(g: Group) -> bool:
    z = center(g)
    return bool((g.element_orders[z.member_indices] == z.order).any())


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _valuation(n: int, p: int) -> int:
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def _is_power_of(x: int, p: int) -> bool:
    while x % p == 0:
        x //= p
    return x == 1
