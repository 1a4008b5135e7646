"""Linear algebra backends: dense numpy elimination over F_p and exact
Fraction elimination for certification.

Primes are drawn near 2^24 so that a*b with a,b < p and row-length
accumulations both stay inside int64.
"""

from __future__ import annotations

import random
from fractions import Fraction

import numpy as np

PRIME_LO = 1 << 23
PRIME_HI = 1 << 24

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n):
    if n < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % small == 0:
            return n == small
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def seeded_primes(seed, count=2):
    """Deterministic distinct primes in [2^23, 2^24) from the given seed."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        cand = rng.randrange(PRIME_LO | 1, PRIME_HI, 2)
        if cand not in out and is_prime(cand):
            out.append(cand)
    return tuple(out)


# ---------------------------------------------------------------------------
# numpy mod-p elimination


def rank_modp(a, p):
    """Rank over F_p by forward elimination; mutates a copy."""
    a = np.array(a, dtype=np.int64) % p
    m, n = a.shape
    r = 0
    for c in range(n):
        if r == m:
            break
        col = a[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = a[r] * inv % p
        below = a[r + 1 :, c]
        hit = np.nonzero(below)[0]
        if hit.size:
            rows = hit + r + 1
            a[rows] = (a[rows] - np.outer(a[rows, c], a[r])) % p
        r += 1
    return r


def rref_modp(a, p):
    """Fully reduced row echelon form over F_p; returns (rref, pivot_cols)."""
    a = np.array(a, dtype=np.int64) % p
    m, n = a.shape
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        col = a[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = a[r] * inv % p
        others = np.nonzero(a[:, c])[0]
        others = others[others != r]
        if others.size:
            a[others] = (a[others] - np.outer(a[others, c], a[r])) % p
        pivots.append(c)
        r += 1
    return a[: len(pivots)], pivots


def nullspace_modp(a, p):
    """Kernel basis rows over F_p with identity on the free coordinates.

    Returns (basis, free_cols) where basis[i, free_cols[i]] == 1 and the
    basis rows span {x : a @ x == 0 mod p}.
    """
    m, n = a.shape if hasattr(a, "shape") else (len(a), len(a[0]))
    rref, pivots = rref_modp(a, p)
    pivset = set(pivots)
    free = [c for c in range(n) if c not in pivset]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for i, fc in enumerate(free):
        basis[i, fc] = 1
        for j, pc in enumerate(pivots):
            basis[i, pc] = (-int(rref[j, fc])) % p
    return basis, free


# ---------------------------------------------------------------------------
# exact Fraction elimination (small systems and certification)


def rref_exact(rows):
    """Reduced row echelon form over Q; rows is a list of lists."""
    a = [[Fraction(x) for x in row] for row in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a[: len(pivots)], pivots


def rank_exact(rows):
    return len(rref_exact(rows)[0])


def nullspace_exact(rows, ncols=None):
    """Exact kernel basis rows with identity on the free coordinates."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if not rows:
        rows = [[Fraction(0)] * ncols]
    rref, pivots = rref_exact(rows)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for j, pc in enumerate(pivots):
            vec[pc] = -rref[j][fc]
        basis.append(vec)
    return basis, free


def fraction_matrix_modp(mat, p):
    """Reduce a Fraction matrix mod p; denominators must be units mod p."""
    out = np.zeros((len(mat), len(mat[0])), dtype=np.int64)
    for i, row in enumerate(mat):
        for j, x in enumerate(row):
            f = Fraction(x)
            out[i, j] = f.numerator * pow(f.denominator, -1, p) % p
    return out
