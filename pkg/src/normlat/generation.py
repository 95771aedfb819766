"""Generation of a group by conjugacy classes.

Covers the class generating number (by subset search and from the
structure of G/R), counts of generating tuples of classes (by exhaustive
enumeration and by Möbius inversion over the major subgroups), and the
closed-form tuple count for abelian p-groups.
"""
from __future__ import annotations

import itertools
import weakref
from dataclasses import dataclass, field
from math import comb, factorial

import numpy as np

from ._modp import is_prime
from .errors import BudgetExceeded, DomainError, NotNormal, TrivialGroup
from .groups import Group, Subgroup, quotient
from .lattice import (
    NormalLattice,
    enumerate_normal_subgroups,
    normal_closure,
    radical,
    simple_factor_decomposition,
    socle_decomposition,
)
from .moebius import ClosedFormMoebius, gaussian_binomial

SUBSET_BUDGET = 1 << 24


def falling_factorial(x: int, m: int) -> int:
    out = 1
    for i in range(m):
        out *= x - i
    return out


def class_count_in(g: Group, h: Subgroup) -> int:
    """Number of conjugacy classes of g lying inside the normal subgroup h."""
    if not h.is_normal():
        raise NotNormal("class counts need a normal subgroup")
    return sum(1 for c in g.classes if c.mask & ~h.mask == 0)


def class_generating_number_bruteforce(g: Group) -> int:
    if g.order < 2:
        raise TrivialGroup("trivial group")
    nonid = g.classes[1:]
    for k in range(1, len(nonid) + 1):
        for combo in itertools.combinations(nonid, k):
            seed = np.concatenate([c.member_indices for c in combo])
            if normal_closure(g, seed).is_whole:
                return k
    raise AssertionError("the nonidentity classes always generate")


def class_generating_number_structural(g: Group) -> int:
    """Largest rank of an elementary abelian factor of G/R, or 1 if G/R
    has only non-abelian simple factors."""
    if g.order < 2:
        raise TrivialGroup("trivial group")
    lat = enumerate_normal_subgroups(g)
    gbar, _ = quotient(g, radical(lat))
    _, primes = simple_factor_decomposition(gbar, enumerate_normal_subgroups(gbar))
    return max((a for _, a in primes), default=1)


# --------------------------------------------------------------------------
# exhaustive subset enumeration

_SUBSET_COUNTS: "weakref.WeakKeyDictionary[NormalLattice, np.ndarray]" = weakref.WeakKeyDictionary()


def _subset_counts(lat: NormalLattice, budget: int) -> np.ndarray:
    """``counts[node, k]``: number of k-sets of classes whose joint normal
    closure is lattice node ``node``. Every subset is visited."""
    cached = _SUBSET_COUNTS.get(lat)
    if cached is not None:
        return cached
    r = len(lat.group.classes)
    if (1 << r) > budget:
        raise BudgetExceeded(f"2^{r} class subsets exceed budget {budget}")
    join = lat.join_table
    single = lat.class_closure_nodes
    gen = np.zeros(1 << r, dtype=np.int32)
    size = np.zeros(1 << r, dtype=np.int8)
    for b in range(r):
        lo, hi = 1 << b, 1 << (b + 1)
        gen[lo:hi] = join[gen[:lo], single[b]]
        size[lo:hi] = size[:lo] + 1
    n = len(lat)
    flat = np.bincount(gen.astype(np.int64) * (r + 1) + size, minlength=n * (r + 1))
    _SUBSET_COUNTS[lat] = counts = flat.reshape(n, r + 1)
    return counts


def f_k_bruteforce(g: Group, h: Subgroup, k: int, lat: NormalLattice | None = None,
                   budget: int = SUBSET_BUDGET) -> int:
    """Ordered k-tuples of distinct classes of g whose elements generate h.

    Enumerates all subsets of classes (raising BudgetExceeded past
    ``budget`` subsets) and multiplies the k-set count by k!.
    """
    if k < 0:
        raise DomainError("k must be non-negative")
    if not h.is_normal():
        raise NotNormal("target must be normal")
    if lat is None:
        lat = enumerate_normal_subgroups(g)
    r = len(g.classes)
    if k > r:
        return 0
    counts = _subset_counts(lat, budget)
    return int(counts[lat.index(h), k]) * factorial(k)


def f_k_combinations(g: Group, h: Subgroup, k: int, budget: int = 1_000_000) -> int:
    """Direct version for small cases: normal closure of each k-set of classes."""
    classes = g.classes
    if comb(len(classes), k) > budget:
        raise BudgetExceeded("too many class tuples")
    hits = 0
    for combo in itertools.combinations(classes, k):
        seed = np.concatenate([c.member_indices for c in combo]) if combo else []
        if normal_closure(g, seed) == h:
            hits += 1
    return hits * factorial(k)


def major_subgroups(lat: NormalLattice) -> list[Subgroup]:
    """Normal subgroups containing the radical."""
    r = radical(lat)
    return [t for t in lat.nodes if r <= t]


def f_k_inversion(g: Group, k: int, lat: NormalLattice | None = None,
                  mu: ClosedFormMoebius | None = None) -> int:
    """Sum over major T of [classes in T]_k * mu(T, G)."""
    if k < 0:
        raise DomainError("k must be non-negative")
    if g.order == 1:
        return 1 if k == 0 else 0
    if lat is None:
        lat = enumerate_normal_subgroups(g)
    if mu is None:
        mu = ClosedFormMoebius(g, lat)
    top = lat.nodes[-1]
    return sum(falling_factorial(class_count_in(g, t), k) * mu(t, top)
               for t in major_subgroups(lat))


def abelian_pgroup_tuple_count(p: int, n: int, d: int, k: int) -> int:
    """Generating k-tuples of distinct elements of a p-group of order p^n
    whose Frattini quotient has rank d."""
    if not is_prime(p) or not (1 <= d <= n) or k < 0:
        raise DomainError(f"need prime p, 1 <= d <= n, k >= 0; got {(p, n, d, k)}")
    return sum(falling_factorial(p ** (n - d + i), k) * gaussian_binomial(d, i, p)
               * (-1) ** (d - i) * p ** comb(d - i, 2)
               for i in range(d + 1))


# --------------------------------------------------------------------------

@dataclass
class GenerationReport:
    group: Group
    class_generating_number: int
    fk: dict[int, int]
    major_subgroups: list[Subgroup]
    major_class_counts: list[int] = field(default_factory=list)


def generation_report(g: Group, kmax: int | None = None,
                      lat: NormalLattice | None = None) -> GenerationReport:
    if lat is None:
        lat = enumerate_normal_subgroups(g)
    mu = ClosedFormMoebius(g, lat, socle_decomposition(g, lat))
    if kmax is None:
        kmax = len(g.classes)
    fk = {k: f_k_inversion(g, k, lat, mu) for k in range(kmax + 1)}
    majors = major_subgroups(lat)
    return GenerationReport(g, class_generating_number_structural(g), fk, majors,
                            [class_count_in(g, t) for t in majors])
