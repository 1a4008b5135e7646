"""Symmetric group machinery: permutations, standard tableaux, and exact
irreducible representation matrices in Young's seminormal form.

Permutations are tuples of 0-based images; p[i] is the image of i.  The
seminormal matrices have rational entries and realize the Specht module of
their shape, with the single-row shape carrying the trivial representation.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations as _itperms

from hessllt.partitions import partitions


def identity_perm(n):
    return tuple(range(n))


def compose(a, b):
    """(a . b)[i] = a[b[i]]."""
    return tuple(a[x] for x in b)


def inverse(a):
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


@lru_cache(maxsize=None)
def all_perms(n):
    return tuple(sorted(_itperms(range(n))))


def transposition(n, i, j):
    """The transposition exchanging values i and j (1-based)."""
    out = list(range(n))
    out[i - 1], out[j - 1] = out[j - 1], out[i - 1]
    return tuple(out)


def cycle_type(p):
    n = len(p)
    seen = [False] * n
    lens = []
    for s in range(n):
        if seen[s]:
            continue
        ln, cur = 0, s
        while not seen[cur]:
            seen[cur] = True
            cur = p[cur]
            ln += 1
        lens.append(ln)
    return tuple(sorted(lens, reverse=True))


def class_representative(lam):
    """Permutation with consecutive cycles of the given lengths."""
    out = []
    start = 0
    for ln in lam:
        out.extend(list(range(start + 1, start + ln)) + [start])
        start += ln
    return tuple(out)


def adjacent_word(p):
    """Indices k (1-based) with p = s_{k_m} ... s_{k_1}."""
    cur = list(p)
    word = []
    changed = True
    while changed:
        changed = False
        for i in range(len(cur) - 1):
            if cur[i] > cur[i + 1]:
                cur[i], cur[i + 1] = cur[i + 1], cur[i]
                word.append(i + 1)
                changed = True
    return word


# ---------------------------------------------------------------------------
# standard Young tableaux and seminormal matrices


@lru_cache(maxsize=None)
def standard_tableaux(shape):
    """All standard tableaux of the shape, values 1..n, deterministic order."""
    n = sum(shape)
    rows = len(shape)

    def rec(filled, heights):
        if len(filled) == n:
            out = []
            pos = {v: rc for v, rc in filled.items()}
            tab = [[0] * shape[r] for r in range(rows)]
            for v, (r, c) in pos.items():
                tab[r][c] = v
            yield tuple(tuple(row) for row in tab)
            return
        v = len(filled) + 1
        for r in range(rows):
            c = heights[r]
            if c >= shape[r]:
                continue
            if r > 0 and heights[r - 1] <= c:
                continue
            filled[v] = (r, c)
            heights[r] += 1
            yield from rec(filled, heights)
            heights[r] -= 1
            del filled[v]

    return tuple(sorted(rec({}, [0] * rows)))


def _positions(tab):
    pos = {}
    for r, row in enumerate(tab):
        for c, v in enumerate(row):
            pos[v] = (r, c)
    return pos


def _swap_values(tab, a, b):
    return tuple(
        tuple(b if v == a else a if v == b else v for v in row) for row in tab
    )


@lru_cache(maxsize=None)
def seminormal_generators(shape):
    """Matrices of the adjacent transpositions s_1..s_{n-1} on SYT(shape).

    M[a][b] is the coefficient of tableau a in s_k applied to tableau b.
    """
    tabs = standard_tableaux(shape)
    index = {t: i for i, t in enumerate(tabs)}
    f = len(tabs)
    n = sum(shape)
    mats = []
    for k in range(1, n):
        m = [[Fraction(0)] * f for _ in range(f)]
        for t, tab in enumerate(tabs):
            pos = _positions(tab)
            (r1, c1), (r2, c2) = pos[k], pos[k + 1]
            if r1 == r2:
                m[t][t] = Fraction(1)
            elif c1 == c2:
                m[t][t] = Fraction(-1)
            else:
                other = index[_swap_values(tab, k, k + 1)]
                if other < t:
                    continue  # pair handled when t was `other`
                d = Fraction((c2 - r2) - (c1 - r1))
                m[t][t] = 1 / d
                m[other][t] = Fraction(1)
                m[t][other] = 1 - 1 / d**2
                m[other][other] = -1 / d
        mats.append(tuple(tuple(row) for row in m))
    return tuple(mats)


def _matmul(a, b):
    f = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(f)) for j in range(f))
        for i in range(f)
    )


@lru_cache(maxsize=None)
def rep_matrix(shape, perm):
    """Seminormal matrix of an arbitrary permutation, built from its word."""
    f = len(standard_tableaux(shape))
    mat = tuple(
        tuple(Fraction(int(i == j)) for j in range(f)) for i in range(f)
    )
    gens = seminormal_generators(shape)
    for k in reversed(adjacent_word(perm)):
        mat = _matmul(mat, gens[k - 1])
    return mat


def rep_dimension(shape):
    return len(standard_tableaux(shape))


@lru_cache(maxsize=None)
def character_table(n):
    """chi[shape][cycle_type] as exact integers, via seminormal traces."""
    table = {}
    for shape in partitions(n):
        row = {}
        for lam in partitions(n):
            mat = rep_matrix(shape, class_representative(lam))
            tr = sum(mat[i][i] for i in range(len(mat)))
            assert tr.denominator == 1
            row[lam] = int(tr)
        table[shape] = row
    return table
