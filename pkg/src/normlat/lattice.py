"""The lattice of normal subgroups, radical, socle and the socle's
decomposition into G-isomorphism classes of minimal normal subgroups."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

import numpy as np

from . import _modp
from .errors import (
    InternalInconsistency,
    NotElementaryAbelian,
    NotNormal,
    NotSemisimple,
    TrivialGroup,
)
from .groups import (
    Group,
    Subgroup,
    _prime_factors,
    _valuation,
    conjugacy_classes,
    generate,
    mask_from_bool,
    product_set,
    subgroup_as_group,
)

MAX_MODULE_RANK = 6


def normal_closure(g: Group, seed: Iterable[int]) -> Subgroup:
    """Smallest normal subgroup containing ``seed``."""
    seed = list(seed)
    if not seed:
        return g.trivial
    cls = np.unique(g.class_of[np.asarray(seed, dtype=np.int64)])
    gens = np.concatenate([g.classes[c].member_indices for c in cls])
    return Subgroup(g, mask_from_bool(generate(g, gens)))


@dataclass(eq=False)
class NormalLattice:
    """All normal subgroups of ``group``, sorted by (order, bitset).

    Sorting by order makes node indices a linear extension of inclusion,
    so node 0 is trivial and the last node is the whole group.
    """

    group: Group
    nodes: list[Subgroup]
    _index: dict[int, int] = field(init=False, repr=False)

    def __post_init__(self):
        self._index = {s.mask: i for i, s in enumerate(self.nodes)}

    def __len__(self):
        return len(self.nodes)

    def index(self, s: Subgroup) -> int:
        return self._index[s.mask]

    def __contains__(self, s: Subgroup) -> bool:
        return s.parent is self.group and s.mask in self._index

    @cached_property
    def leq(self) -> np.ndarray:
        n = len(self.nodes)
        out = np.zeros((n, n), dtype=bool)
        for i, a in enumerate(self.nodes):
            for j in range(i, n):
                out[i, j] = a <= self.nodes[j]
        return out

    @cached_property
    def covers(self) -> list[tuple[int, int]]:
        """Hasse edges ``(lower, upper)``."""
        leq = self.leq
        n = len(self.nodes)
        edges = []
        for i in range(n):
            ups = [j for j in range(i + 1, n) if leq[i, j]]
            for j in ups:
                if not any(leq[i, k] and leq[k, j] for k in ups if k != j):
                    edges.append((i, j))
        return edges

    @cached_property
    def meet_table(self) -> np.ndarray:
        n = len(self.nodes)
        out = np.empty((n, n), dtype=np.int64)
        for i, a in enumerate(self.nodes):
            for j in range(i, n):
                out[i, j] = out[j, i] = self._index[a.mask & self.nodes[j].mask]
        return out

    @cached_property
    def join_table(self) -> np.ndarray:
        n = len(self.nodes)
        out = np.empty((n, n), dtype=np.int64)
        for i, a in enumerate(self.nodes):
            for j in range(i, n):
                b = self.nodes[j]
                if a <= b:
                    k = j
                elif b <= a:
                    k = i
                else:
                    k = self._index[product_set(self.group, a, b)]
                out[i, j] = out[j, i] = k
        return out

    def meet(self, a: Subgroup, b: Subgroup) -> Subgroup:
        return self.nodes[self.meet_table[self.index(a), self.index(b)]]

    def join(self, a: Subgroup, b: Subgroup) -> Subgroup:
        return self.nodes[self.join_table[self.index(a), self.index(b)]]

    def below(self, s: Subgroup) -> list[int]:
        return [i for i, t in enumerate(self.nodes) if t <= s]

    def above(self, s: Subgroup) -> list[int]:
        return [i for i, t in enumerate(self.nodes) if s <= t]

    @cached_property
    def class_closure_nodes(self) -> np.ndarray:
        """Node index of the normal closure of each conjugacy class."""
        return np.array([self._index[normal_closure(self.group, [c.representative]).mask]
                         for c in self.group.classes], dtype=np.int64)


def enumerate_normal_subgroups(g: Group) -> NormalLattice:
    """Normal closures of single classes, then closed under joins."""
    masks = {1}
    for c in g.classes[1:]:
        masks.add(normal_closure(g, [c.representative]).mask)
    pending = sorted(masks)
    known = set(masks)
    subs = {m: Subgroup(g, m) for m in known}
    while pending:
        new = []
        for a in pending:
            sa = subs[a]
            for b in list(known):
                if a & ~b == 0 or b & ~a == 0:
                    continue
                j = product_set(g, sa, subs[b])
                if j not in known:
                    known.add(j)
                    subs[j] = Subgroup(g, j)
                    new.append(j)
        pending = new
    nodes = sorted(subs.values(), key=lambda s: (s.order, s.mask))
    return NormalLattice(g, nodes)


def _require_nontrivial(lat: NormalLattice):
    if lat.group.order < 2:
        raise TrivialGroup("operation needs |G| >= 2")


def maximal_normal_subgroups(lat: NormalLattice) -> list[Subgroup]:
    _require_nontrivial(lat)
    top = len(lat) - 1
    return [lat.nodes[i] for i, j in lat.covers if j == top]


def minimal_normal_subgroups(lat: NormalLattice) -> list[Subgroup]:
    _require_nontrivial(lat)
    return [lat.nodes[j] for i, j in lat.covers if i == 0]


def radical(lat: NormalLattice) -> Subgroup:
    """Intersection of the maximal normal subgroups."""
    mask = lat.group.full_mask
    for m in maximal_normal_subgroups(lat):
        mask &= m.mask
    return Subgroup(lat.group, mask)


def socle(lat: NormalLattice) -> Subgroup:
    """Join of the minimal normal subgroups."""
    out = lat.group.trivial
    for m in minimal_normal_subgroups(lat):
        out = lat.join(out, m)
    return out


# --------------------------------------------------------------------------
# elementary abelian normal subgroups as G-modules

def _prime_of(a: Subgroup) -> int:
    if a.is_trivial:
        raise NotElementaryAbelian("trivial subgroup has no prime")
    ps = _prime_factors(a.order)
    if len(ps) != 1 or not a.is_abelian():
        raise NotElementaryAbelian("subgroup is not an elementary abelian p-group")
    p = ps[0]
    if (a.parent.element_orders[a.member_indices[1:]] != p).any():
        raise NotElementaryAbelian("subgroup has elements of order other than p")
    return p


@dataclass
class _Coords:
    """An F_p basis of an elementary abelian subgroup and coordinates of
    every member with respect to it."""

    p: int
    basis: list[int]
    coords: dict[int, tuple[int, ...]]


def _coordinates(a: Subgroup, p: int) -> _Coords:
    g = a.parent
    basis: list[int] = []
    span = np.zeros(g.order, dtype=bool)
    span[0] = True
    for x in a.member_indices:
        if not span[x]:
            basis.append(int(x))
            span = generate(g, basis)
    coords: dict[int, tuple[int, ...]] = {}
    for vec in itertools.product(range(p), repeat=len(basis)):
        x = 0
        for b, e in zip(basis, vec):
            for _ in range(e):
                x = int(g.mul[x, b])
        coords[x] = vec
    return _Coords(p, basis, coords)


def _action_matrix(c: _Coords, g: Group, h: int) -> np.ndarray:
    """Matrix of ``x -> h^-1 x h`` on coordinate columns."""
    k = len(c.basis)
    out = np.zeros((k, k), dtype=np.int64)
    for j, b in enumerate(c.basis):
        y = int(g.mul[g.inv[h], g.mul[b, h]])
        out[:, j] = c.coords[y]
    return out


def g_hom_count(g: Group, a: Subgroup, b: Subgroup) -> int:
    """Number of homomorphisms ``f: a -> b`` with ``f(x^h) = f(x)^h``.

    These maps form an F_p vector space, namely the solutions of the
    linear system ``F rho_a(h) = rho_b(h) F`` over a generating set of G;
    the count is ``p**nullity``.
    """
    for s in (a, b):
        if not s.is_normal():
            raise NotNormal("argument is not normal in g")
    pa, pb = _prime_of(a), _prime_of(b)
    if pa != pb:
        return 1
    p = pa
    ca, cb = _coordinates(a, p), _coordinates(b, p)
    ka, kb = len(ca.basis), len(cb.basis)
    blocks = []
    eye_a, eye_b = np.eye(ka, dtype=np.int64), np.eye(kb, dtype=np.int64)
    for h in g.generators:
        ra = _action_matrix(ca, g, h)
        rb = _action_matrix(cb, g, h)
        # vec(F ra) - vec(rb F), column-major vec
        blocks.append((np.kron(ra.T, eye_b) - np.kron(eye_a, rb)) % p)
    if not blocks:
        return p ** (ka * kb)
    system = np.vstack(blocks)
    return p ** (ka * kb - _modp.rank(system, p))


def g_hom_count_enumerate(g: Group, a: Subgroup, b: Subgroup) -> int:
    """Same count by trying every assignment of basis images (small ranks only)."""
    p = _prime_of(a)
    ca = _coordinates(a, p)
    bm = b.member_indices
    total = 0
    for imgs in itertools.product(bm.tolist(), repeat=len(ca.basis)):
        f = {}
        for x, vec in ca.coords.items():
            y = 0
            for im, e in zip(imgs, vec):
                for _ in range(e):
                    y = int(g.mul[y, im])
            f[x] = y
        ok = True
        for x in ca.coords:
            if not ok:
                break
            for h in range(g.order):
                xh = int(g.mul[g.inv[h], g.mul[x, h]])
                if f[xh] != int(g.mul[g.inv[h], g.mul[f[x], h]]):
                    ok = False
                    break
        total += ok
    return total


# --------------------------------------------------------------------------
# socle decomposition

@dataclass
class AbelianSocleClass:
    """One G-isomorphism class of elementary abelian minimal normal subgroups."""

    representative: Subgroup
    order: int
    d: int
    q: int
    members: list[Subgroup]
    component: Subgroup  # join of all members, isomorphic to representative^d

    @property
    def prime(self) -> int:
        return _prime_factors(self.order)[0]


@dataclass
class SocleDecomposition:
    a: int
    b: int
    abelian_classes: list[AbelianSocleClass]
    non_abelian: list[Subgroup]
    socle: Subgroup

    def component_of(self, m: Subgroup) -> int:
        """Index (abelian classes first, then non-abelian) of the factor holding minimal normal ``m``."""
        for i, cl in enumerate(self.abelian_classes):
            if any(m == x for x in cl.members):
                return i
        for j, s in enumerate(self.non_abelian):
            if m == s:
                return self.a + j
        raise ValueError("not a minimal normal subgroup")


def _projective_dimension(count: int, q: int) -> int:
    d, total, power = 0, 0, 1
    while total < count:
        total += power
        power *= q
        d += 1
    if total != count:
        raise InternalInconsistency(f"{count} minimal normals is not (q^d-1)/(q-1) for q={q}")
    return d


def socle_decomposition(g: Group, lat: NormalLattice) -> SocleDecomposition:
    mins = minimal_normal_subgroups(lat)
    abelian = [m for m in mins if m.is_abelian()]
    non_abelian = [m for m in mins if not m.is_abelian()]
    groups: list[list[Subgroup]] = []
    for m in abelian:
        for cl in groups:
            rep = cl[0]
            if rep.order == m.order and g_hom_count(g, rep, m) > 1:
                cl.append(m)
                break
        else:
            groups.append([m])
    classes = []
    for cl in groups:
        rep = cl[0]
        p = _prime_of(rep)
        if len(_coordinates(rep, p).basis) > MAX_MODULE_RANK:
            raise InternalInconsistency("module rank above supported limit")
        q = g_hom_count(g, rep, rep)
        d = _projective_dimension(len(cl), q)
        comp = g.trivial
        for m in cl:
            comp = lat.join(comp, m)
        if comp.order != rep.order ** d:
            raise InternalInconsistency("homogeneous component has the wrong order")
        classes.append(AbelianSocleClass(rep, rep.order, d, q, cl, comp))
    soc = socle(lat)
    expected = 1
    for c in classes:
        expected *= c.order ** c.d
    for s in non_abelian:
        expected *= s.order
    if expected != soc.order:
        raise InternalInconsistency("socle order does not match its decomposition")
    return SocleDecomposition(len(classes), len(non_abelian), classes, non_abelian, soc)


# --------------------------------------------------------------------------
# groups with trivial radical

def is_product_of_simples(g: Group, lat: NormalLattice) -> bool:
    if g.order == 1:
        return True
    return radical(lat).is_trivial


@dataclass(frozen=True)
class SimpleType:
    """Isomorphism fingerprint of a non-abelian simple group."""

    order: int
    class_sizes: tuple[int, ...]

    def __str__(self):
        return f"simple[{self.order}]"


def simple_type(s: Subgroup) -> SimpleType:
    h = subgroup_as_group(s)
    return SimpleType(h.order, tuple(sorted(c.size for c in conjugacy_classes(h))))


def simple_factor_decomposition(g: Group, lat: NormalLattice
                                ) -> tuple[list[tuple[SimpleType, int]], list[tuple[int, int]]]:
    """Non-abelian simple factors with multiplicities, and the elementary
    abelian part as ``(p, exponent)`` pairs."""
    if not is_product_of_simples(g, lat):
        raise NotSemisimple("radical is nontrivial")
    if g.order == 1:
        return [], []
    counts: dict[SimpleType, int] = {}
    abelian_part = g.trivial
    for m in minimal_normal_subgroups(lat):
        if m.is_abelian():
            abelian_part = lat.join(abelian_part, m)
        else:
            t = simple_type(m)
            counts[t] = counts.get(t, 0) + 1
    n = abelian_part.order
    primes = [(p, _valuation(n, p)) for p in _prime_factors(n)]
    factors = sorted(counts.items(), key=lambda kv: (kv[0].order, kv[0].class_sizes))
    return factors, primes
