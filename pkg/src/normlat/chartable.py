"""Complex character tables by Dixon's method, plus the faithful-character
sums and the vertical-cut characterization of class generation.

Class multiplication coefficients are reduced modulo a prime ``p`` with
``exponent(G) | p - 1``; their common eigenvectors over F_p give the
central characters, from which degrees and eigenvalue multiplicities are
recovered exactly and only then turned into complex numbers.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np

from . import _modp
from .errors import (
    CapExceeded,
    InternalInconsistency,
    KernelNotNormal,
    NotInLattice,
    PreconditionViolated,
    PrimeSearchFailed,
    TrivialGroup,
)
from .groups import ConjClass, Group, Subgroup, generate, mask_from_bool, product_set
from .lattice import NormalLattice, SocleDecomposition, enumerate_normal_subgroups

DIXON_PRIME_BOUND = 1 << 16
KERNEL_TOL = 1e-6
DEFAULT_TABLE_CAP = 2000


@dataclass(frozen=True, eq=False)
class Character:
    index: int
    values: np.ndarray
    degree: int
    kernel: Subgroup
    # multiplicities[k][i]: how often exp(2 pi i * i / o_k) is an eigenvalue
    # at class k, o_k the element order there
    multiplicities: tuple[tuple[int, ...], ...]

    @property
    def is_faithful(self) -> bool:
        return self.kernel.is_trivial


@dataclass(eq=False)
class CharacterTable:
    group: Group
    classes: list[ConjClass]
    characters: list[Character]
    values: np.ndarray
    prime: int

    @property
    def degrees(self) -> list[int]:
        return [c.degree for c in self.characters]

    @cached_property
    def lattice(self) -> NormalLattice:
        return enumerate_normal_subgroups(self.group)

    @property
    def class_sizes(self) -> np.ndarray:
        return np.array([c.size for c in self.classes])


# --------------------------------------------------------------------------
# Dixon

def dixon_primes(order: int, exponent: int, bound: int = DIXON_PRIME_BOUND):
    """Primes ``p = 1 mod exponent`` with ``p > 2 sqrt(order)``, ascending."""
    floor = 2 * math.isqrt(order)
    p = exponent + 1
    while p < bound:
        if p > floor and _modp.is_prime(p) and p * p > 4 * order:
            yield p
        p += exponent


def class_coefficients(g: Group) -> np.ndarray:
    """``c[j, k, l]`` = #{(x, y) in C_j x C_k : xy = z_l} for fixed z_l in C_l."""
    r = len(g.classes)
    cls = g.class_of
    out = np.zeros((r, r, r), dtype=np.int64)
    x = np.arange(g.order)
    for l, c in enumerate(g.classes):
        y = g.mul[g.inv, c.representative]
        np.add.at(out, (cls[x], cls[y], l), 1)
    return out


class _SplitFailed(Exception):
    pass


def _reduced_basis(w: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    rows, piv = _modp.rref(w.T, p)
    return rows[: len(piv)].T.copy(), piv


def _common_eigenvectors(mats: np.ndarray, p: int) -> list[np.ndarray]:
    r = mats.shape[1]
    spaces = [(np.eye(r, dtype=np.int64), list(range(r)))]
    for j in range(1, r):
        if all(v.shape[1] == 1 for v, _ in spaces):
            break
        out = []
        for v, piv in spaces:
            m = v.shape[1]
            if m == 1:
                out.append((v, piv))
                continue
            a = (mats[j] % p @ v % p)[piv, :]
            found = 0
            for lam in _modp.singular_shifts(a, p):
                ns = _modp.nullspace((a - lam * np.eye(m, dtype=np.int64)) % p, p)
                w = v @ ns % p
                out.append(_reduced_basis(w, p))
                found += ns.shape[1]
            if found != m:
                raise _SplitFailed("restriction is not diagonalizable over F_p")
        spaces = out
    if any(v.shape[1] != 1 for v, _ in spaces) or len(spaces) != r:
        raise _SplitFailed("class algebra did not split into r lines")
    return [v[:, 0] for v, _ in spaces]


def _power_classes(g: Group, x: int) -> list[int]:
    out, y = [], 0
    for _ in range(int(g.element_orders[x])):
        out.append(int(g.class_of[y]))
        y = int(g.mul[y, x])
    return out


def _dixon(g: Group, p: int):
    r = len(g.classes)
    sizes = [c.size for c in g.classes]
    coeff = class_coefficients(g)
    vectors = _common_eigenvectors(coeff, p)
    inv_cls = [int(g.class_of[g.inv[c.representative]]) for c in g.classes]
    e = g.exponent
    z = pow(_modp.primitive_root(p), (p - 1) // e, p)
    powers = [_power_classes(g, c.representative) for c in g.classes]
    result = []
    for w in vectors:
        if w[0] % p == 0:
            raise _SplitFailed("eigenvector vanishes at the identity class")
        w = w * pow(int(w[0]), -1, p) % p
        s = sum(int(w[k]) * int(w[inv_cls[k]]) * pow(sizes[k], -1, p) for k in range(r)) % p
        if s == 0:
            raise _SplitFailed("degenerate norm")
        dsq = g.order * pow(s, -1, p) % p
        degree = next((d for d in range(1, math.isqrt(g.order) + 1) if d * d % p == dsq), None)
        if degree is None:
            raise _SplitFailed("no admissible degree")
        theta = [degree * int(w[k]) * pow(sizes[k], -1, p) % p for k in range(r)]
        mults = []
        for k in range(r):
            o = len(powers[k])
            zo = pow(z, e // o, p)
            inv_o = pow(o, -1, p)
            row = []
            for i in range(o):
                acc = sum(theta[powers[k][t]] * pow(zo, (-i * t) % o, p) for t in range(o))
                mi = acc * inv_o % p
                if mi > degree:
                    raise _SplitFailed("eigenvalue multiplicity out of range")
                row.append(mi)
            if sum(row) != degree:
                raise _SplitFailed("multiplicities do not add up to the degree")
            mults.append(tuple(row))
        result.append((degree, tuple(mults)))
    return result


def _complex_values(mults) -> np.ndarray:
    out = np.empty(len(mults), dtype=complex)
    for k, row in enumerate(mults):
        o = len(row)
        out[k] = sum(m * np.exp(2j * np.pi * i / o) for i, m in enumerate(row))
    return out


def character_table(g: Group, cap: int = DEFAULT_TABLE_CAP) -> CharacterTable:
    """Irreducible complex characters, principal character first.

    Tries primes in increasing order until the class algebra splits and
    every lifted value is consistent; gives up at DIXON_PRIME_BOUND.
    """
    if g.order > cap:
        raise CapExceeded(f"order {g.order} exceeds cap {cap}")
    classes = g.classes
    data = None
    used = None
    for p in dixon_primes(g.order, g.exponent):
        try:
            data = _dixon(g, p)
        except _SplitFailed:
            continue
        used = p
        break
    if data is None:
        raise PrimeSearchFailed(f"no usable prime below {DIXON_PRIME_BOUND}")

    def sort_key(item):
        degree, mults = item
        principal = all(row[0] == degree for row in mults)
        return (not principal, degree, mults)

    data.sort(key=sort_key)
    chars = []
    for i, (degree, mults) in enumerate(data):
        vals = _complex_values(mults)
        chars.append(Character(i, vals, degree, _kernel_from_values(g, vals, degree), mults))
    values = np.array([c.values for c in chars])
    return CharacterTable(g, classes, chars, values, used)


def _kernel_from_values(g: Group, vals: np.ndarray, degree: int, tol: float = KERNEL_TOL) -> Subgroup:
    members = np.zeros(g.order, dtype=bool)
    for k, c in enumerate(g.classes):
        if abs(vals[k] - degree) < tol:
            members[c.member_indices] = True
    if not (generate(g, np.flatnonzero(members)) == members).all():
        raise KernelNotNormal("classes with chi(c) = chi(1) do not form a subgroup")
    return Subgroup(g, mask_from_bool(members))


def character_kernel(ct: CharacterTable, i: int) -> Subgroup:
    ker = ct.characters[i].kernel
    if ker not in ct.lattice:
        raise KernelNotNormal("kernel is not a node of the normal lattice")
    return ker


# --------------------------------------------------------------------------
# vertical cuts

def vertical_cut_number(ct: CharacterTable, tol: float = KERNEL_TOL) -> int:
    """Fewest non-identity columns which, together with the identity
    column, leave no row but the first constant."""
    r = len(ct.classes)
    if ct.group.order < 2:
        raise TrivialGroup("trivial group")
    row_masks = []
    for chi in ct.values[1:]:
        bits = 0
        for c in range(1, r):
            if abs(chi[c] - chi[0]) < tol:
                bits |= 1 << c
        row_masks.append(bits)
    for d in range(1, r):
        for cut in itertools.combinations(range(1, r), d):
            cm = sum(1 << c for c in cut)
            if not any(rm & cm == cm for rm in row_masks):
                return d
    raise AssertionError("the full table always gives a cut")


# --------------------------------------------------------------------------
# faithful characters

def kernel_restricted_sum(ct: CharacterTable, a: int, b: int, n: Subgroup) -> complex:
    """Sum of chi(A) * conj(chi(B)) over irreducibles whose kernel is exactly n."""
    if n not in ct.lattice:
        raise NotInLattice("n is not a normal subgroup")
    total = 0j
    for chi in ct.characters:
        if chi.kernel == n:
            total += chi.values[a] * np.conj(chi.values[b])
    return complex(total)


def faithful_pair_sum(ct: CharacterTable, a: int, b: int) -> complex:
    return kernel_restricted_sum(ct, a, b, ct.group.trivial)


def faithful_square_sum(ct: CharacterTable) -> int:
    return sum(chi.degree ** 2 for chi in ct.characters if chi.is_faithful)


def class_extends_socle(g: Group, c: ConjClass, s: Subgroup) -> bool:
    """Whether |C S| = |C| |S|."""
    cs = Subgroup(g, c.mask)  # treated as a plain bitset here
    return product_set(g, cs, s).bit_count() == c.size * s.order


def classes_distinct_modulo(g: Group, a: ConjClass, b: ConjClass, n: Subgroup) -> bool:
    """Whether the images of two classes in G/N are different classes."""
    return product_set(g, Subgroup(g, a.mask), n) != product_set(g, Subgroup(g, b.mask), n)


def faithful_norm_product(g: Group, dec: SocleDecomposition, c: ConjClass) -> Fraction:
    """Closed form of the faithful sum of |chi(C)|^2 for a class with |CS| = |C||S|.

    ``|G|/|C| * prod_i prod_{j<d_i} (1 - q_i^j/|A_i|) * prod_k (1 - 1/|S_k|)``,
    in exact rationals.
    """
    if not class_extends_socle(g, c, dec.socle):
        raise PreconditionViolated("|CS| != |C||S|")
    value = Fraction(g.order, c.size)
    for cl in dec.abelian_classes:
        for j in range(cl.d):
            value *= 1 - Fraction(cl.q ** j, cl.order)
    for s in dec.non_abelian:
        value *= 1 - Fraction(1, s.order)
    return value


def has_faithful_irrep_structural(dec: SocleDecomposition) -> bool:
    """False iff some |A_i| equals q_i^j with 0 <= j < d_i."""
    for cl in dec.abelian_classes:
        if any(cl.order == cl.q ** j for j in range(cl.d)):
            return False
    return True


def orthogonality_errors(ct: CharacterTable) -> tuple[float, float]:
    """Largest deviations from row and column orthogonality."""
    n = ct.group.order
    x = ct.values
    sizes = ct.class_sizes
    rows = (x * sizes) @ x.conj().T
    cols = x.T @ x.conj()
    row_err = float(np.abs(rows - n * np.eye(len(x))).max())
    col_err = float(np.abs(cols - np.diag(n / sizes)).max())
    return row_err, col_err


theorem5_product = faithful_norm_product
