"""Small dense linear algebra over a prime field F_p (p < 2**31)."""
from __future__ import annotations

import numpy as np


def rref(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = np.array(a, dtype=np.int64) % p
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(m[r:, c])
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            m[[r, k]] = m[[k, r]]
        m[r] = m[r] * pow(int(m[r, c]), -1, p) % p
        col = m[:, c].copy()
        col[r] = 0
        m = (m - col[:, None] * m[r][None, :]) % p
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a: np.ndarray, p: int) -> int:
    if a.size == 0:
        return 0
    return len(rref(a, p)[1])


def nullspace(a: np.ndarray, p: int) -> np.ndarray:
    """Basis of the right kernel, one vector per column."""
    rows, cols = a.shape
    r, pivots = rref(a, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    for j, f in enumerate(free):
        basis[f, j] = 1
        for i, pc in enumerate(pivots):
            basis[pc, j] = (-r[i, f]) % p
    return basis


def singular_shifts(a: np.ndarray, p: int) -> np.ndarray:
    """All lambda in F_p for which ``a - lambda*I`` is singular.

    Runs one batched elimination over every lambda at once.
    """
    m = a.shape[0]
    lam = np.arange(p, dtype=np.int64)
    x = (a[None, :, :] - lam[:, None, None] * np.eye(m, dtype=np.int64)[None]) % p
    inverse = np.zeros(p, dtype=np.int64)
    inverse[1:] = [pow(int(v), -1, p) for v in range(1, p)]
    singular = np.zeros(p, dtype=bool)
    batch = np.arange(p)
    for c in range(m):
        nz = x[:, c:, c] != 0
        has = nz.any(axis=1)
        singular |= ~has
        piv = c + np.argmax(nz, axis=1)
        top = x[batch, c].copy()
        x[batch, c] = x[batch, piv]
        x[batch, piv] = top
        f = x[:, c + 1:, c] * inverse[x[:, c, c]][:, None] % p
        x[:, c + 1:, :] = (x[:, c + 1:, :] - f[:, :, None] * x[:, c, None, :]) % p
    return lam[singular]


def primitive_root(p: int) -> int:
    factors = _prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    raise ValueError(f"no primitive root mod {p}")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _prime_factors(n: int) -> list[int]:
    out, q = [], 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out
