"""Möbius function of the normal subgroup lattice: generic recursion and
the closed form built from the socle decomposition of a quotient."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from .errors import DomainError, NotComparable, NotInLattice, NotSemisimple
from .groups import Group, QuotientMap, Subgroup, quotient
from .lattice import (
    NormalLattice,
    SocleDecomposition,
    enumerate_normal_subgroups,
    is_product_of_simples,
    simple_factor_decomposition,
    socle_decomposition,
)


@dataclass
class MoebiusTable:
    """``values[i][j]`` is mu(node i, node j), or None when i is not below j."""

    lattice: NormalLattice
    values: list[list[int | None]]

    def __getitem__(self, key: tuple[int, int]) -> int | None:
        i, j = key
        return self.values[i][j]

    def mu(self, x: Subgroup, y: Subgroup) -> int:
        v = self.values[self.lattice.index(x)][self.lattice.index(y)]
        if v is None:
            raise NotComparable("x is not below y")
        return v

    def pairs(self):
        n = len(self.values)
        for i in range(n):
            for j in range(i, n):
                if self.values[i][j] is not None:
                    yield i, j, self.values[i][j]


def moebius_recursive(lat: NormalLattice) -> MoebiusTable:
    leq = lat.leq
    n = len(lat)
    values: list[list[int | None]] = [[None] * n for _ in range(n)]
    for i in range(n):
        row = values[i]
        row[i] = 1
        ups = [j for j in range(i + 1, n) if leq[i, j]]
        for j in ups:
            # nodes are a linear extension, so every z with i<=z<j has index < j
            row[j] = -(row[i] + sum(row[z] for z in ups if z < j and leq[z, j]))
    return MoebiusTable(lat, values)


def gaussian_binomial(d: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^d."""
    if d < 0 or k < 0 or k > d or q < 2:
        raise DomainError(f"gaussian_binomial needs 0 <= k <= d and q >= 2, got {(d, k, q)}")
    num = den = 1
    for i in range(k):
        num *= q ** (d - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def subspace_moebius(alpha: int, q: int) -> int:
    """mu(0, W) in the subspace lattice for dim W = alpha."""
    return (-1) ** alpha * q ** comb(alpha, 2)


def mu_one_semisimple(g: Group, lat: NormalLattice | None = None) -> int:
    """mu(1, G) for G a direct product of simple groups."""
    if lat is None:
        lat = enumerate_normal_subgroups(g)
    if not is_product_of_simples(g, lat):
        raise NotSemisimple("group has nontrivial radical")
    factors, primes = simple_factor_decomposition(g, lat)
    value = (-1) ** sum(m for _, m in factors)
    for p, a in primes:
        value *= (-1) ** a * p ** comb(a, 2)
    return value


@dataclass
class _QuotientData:
    qmap: QuotientMap
    lattice: NormalLattice
    decomposition: SocleDecomposition | None


def _mu_in_quotient(data: _QuotientData, t_bar: Subgroup) -> int:
    if t_bar.is_trivial:
        return 1
    dec = data.decomposition
    if not t_bar <= dec.socle:
        return 0
    value = 1
    for cl in dec.abelian_classes:
        part = (t_bar & cl.component).order
        alpha = 0
        while part > 1:
            part //= cl.order
            alpha += 1
        value *= subspace_moebius(alpha, cl.q)
    c = sum(1 for s in dec.non_abelian if s <= t_bar)
    return value * (-1) ** c


class ClosedFormMoebius:
    """Closed-form mu(H, T) evaluated in G/H, with one quotient per H cached."""

    def __init__(self, g: Group, lat: NormalLattice, dec: SocleDecomposition | None = None):
        self.group = g
        self.lattice = lat
        self._cache: dict[int, _QuotientData] = {}
        if dec is not None:
            ident = QuotientMap(g, g, np.arange(g.order), g.trivial)
            self._cache[g.trivial.mask] = _QuotientData(ident, lat, dec)

    def _data(self, h: Subgroup) -> _QuotientData:
        d = self._cache.get(h.mask)
        if d is None:
            q, qmap = quotient(self.group, h)
            qlat = enumerate_normal_subgroups(q)
            qdec = socle_decomposition(q, qlat) if q.order > 1 else None
            d = _QuotientData(qmap, qlat, qdec)
            self._cache[h.mask] = d
        return d

    def __call__(self, h: Subgroup, t: Subgroup) -> int:
        if h not in self.lattice or t not in self.lattice:
            raise NotInLattice("arguments must be normal subgroups of the group")
        if not h <= t:
            raise NotComparable("h is not contained in t")
        if h == t:
            return 1
        data = self._data(h)
        return _mu_in_quotient(data, data.qmap.image_of(t))

    def table(self) -> MoebiusTable:
        lat = self.lattice
        n = len(lat)
        leq = lat.leq
        values: list[list[int | None]] = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                if leq[i, j]:
                    values[i][j] = self(lat.nodes[i], lat.nodes[j])
        return MoebiusTable(lat, values)


def moebius_closed(g: Group, lat: NormalLattice, dec: SocleDecomposition | None,
                   h: Subgroup, t: Subgroup) -> int:
    """mu(H, T) from the socle decomposition of G/H.

    Zero unless T/H lies in the socle of G/H; otherwise a signed product of
    ``q**binom(alpha, 2)`` terms over the abelian homogeneous components,
    with one extra sign per non-abelian minimal normal subgroup in T/H.
    """
    return ClosedFormMoebius(g, lat, dec)(h, t)


def moebius_closed_table(g: Group, lat: NormalLattice) -> MoebiusTable:
    return ClosedFormMoebius(g, lat).table()
