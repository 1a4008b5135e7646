"""Integer partitions: enumeration, centralizer orders, small helpers."""

from __future__ import annotations

from functools import lru_cache
from math import factorial


@lru_cache(maxsize=None)
def partitions(n, max_part=None):
    """All partitions of n with parts <= max_part, descending lex order."""
    if n < 0:
        raise ValueError("partitions of a negative integer")
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(max_part, 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_max_len(n, max_len):
    """Partitions of n into at most max_len parts."""
    return tuple(lam for lam in partitions(n) if len(lam) <= max_len)


def is_partition(lam):
    return all(a >= b for a, b in zip(lam, lam[1:])) and all(a > 0 for a in lam)


def multiplicities(lam):
    """Map part -> multiplicity."""
    out = {}
    for part in lam:
        out[part] = out.get(part, 0) + 1
    return out


def z_lambda(lam):
    """Centralizer order prod_i i^{m_i} m_i! of the cycle type lam."""
    z = 1
    for part, m in multiplicities(lam).items():
        z *= part**m * factorial(m)
    return z


def conjugate(lam):
    """Transpose of the Young diagram."""
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > i) for i in range(lam[0]))


def distinct_permutations(items):
    """All distinct rearrangements of a multiset, lexicographic order."""
    items = sorted(items)
    n = len(items)

    def rec(remaining):
        if not remaining:
            yield ()
            return
        prev = object()
        for i, x in enumerate(remaining):
            if x == prev:
                continue
            prev = x
            for tail in rec(remaining[:i] + remaining[i + 1 :]):
                yield (x,) + tail

    if n == 0:
        yield ()
        return
    yield from rec(items)
