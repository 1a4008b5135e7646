"""Hessenberg functions, indifference graphs, transpose, blocks and triples."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


class NotNondecreasing(ValueError):
    """h(i) > h(i+1) somewhere."""


class BelowDiagonal(ValueError):
    """h(i) < i somewhere."""


class OutOfRange(ValueError):
    """h(i) outside [1, n]."""


class HessFn:
    """A nondecreasing function h:[n]->[n] with h(i) >= i, stored 1-based."""

    __slots__ = ("values", "n")

    def __init__(self, values):
        values = tuple(int(v) for v in values)
        n = len(values)
        if n == 0:
            raise ValueError("empty Hessenberg function")
        for i, v in enumerate(values, start=1):
            if v < 1 or v > n:
                raise OutOfRange(f"h({i})={v} outside [1,{n}]")
            if v < i:
                raise BelowDiagonal(f"h({i})={v} < {i}")
        if any(values[i] > values[i + 1] for i in range(n - 1)):
            raise NotNondecreasing(f"{values} is not nondecreasing")
        self.values = values
        self.n = n

    @classmethod
    def from_string(cls, text):
        return cls(int(tok) for tok in text.split(","))

    def __call__(self, i):
        return self.values[i - 1]

    def __eq__(self, other):
        return isinstance(other, HessFn) and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __lt__(self, other):
        return (self.n, self.values) < (other.n, other.values)

    def __repr__(self):
        return f"HessFn({','.join(map(str, self.values))})"

    def to_json(self):
        return list(self.values)

    # -- derived combinatorics -----------------------------------------------

    def edges(self):
        """Edges (i,j) with i < j <= h(i) of the indifference graph, lex order."""
        return [
            (i, j)
            for i in range(1, self.n + 1)
            for j in range(i + 1, self.values[i - 1] + 1)
        ]

    def complex_dimension(self):
        """sum_i (h(i) - i); half the real dimension of the associated spaces."""
        return sum(v - i for i, v in enumerate(self.values, start=1))

    def value_sum(self):
        return sum(self.values)

    def is_maximal(self):
        return all(v == self.n for v in self.values)

    def is_decomposable(self):
        return any(self.values[j - 1] == j for j in range(1, self.n))

    def transpose(self):
        """h^t(i) = n - max{j : h(j) < n+1-i}, with max of the empty set = 0."""
        n = self.n
        out = []
        for i in range(1, n + 1):
            imax = 0
            for j in range(1, n + 1):
                if self.values[j - 1] < n + 1 - i:
                    imax = j
            out.append(n - imax)
        return HessFn(out)

    def decompose(self):
        """Split at every j < n with h(j) = j into indecomposable blocks."""
        cuts = [0] + [j for j in range(1, self.n) if self.values[j - 1] == j]
        cuts.append(self.n)
        blocks = []
        for a, b in zip(cuts, cuts[1:]):
            blocks.append(HessFn(tuple(v - a for v in self.values[a:b])))
        return blocks


def validate(values):
    """Validate a value sequence, returning a HessFn or raising."""
    return HessFn(values)


@lru_cache(maxsize=None)
def enumerate_hessenberg(n):
    """All Hessenberg functions on [n] in lexicographic order; Catalan(n) many."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out = []

    def rec(prefix):
        i = len(prefix) + 1
        if i > n:
            out.append(HessFn(prefix))
            return
        lo = max(i, prefix[-1] if prefix else 1)
        for v in range(lo, n + 1):
            rec(prefix + (v,))

    rec(())
    return tuple(out)


@dataclass(frozen=True)
class ModularTriple:
    """A triple (h_minus, h_mid, h_plus) of type 1 or 2 with roof width r."""

    kind: str  # "type1" or "type2"
    r: int
    params: tuple  # (j0, j) for type1, (j,) for type2
    h_minus: HessFn
    h_mid: HessFn
    h_plus: HessFn

    def check(self):
        """Re-validate the defining conditions from scratch."""
        h, n, r = self.h_mid, self.h_mid.n, self.r
        if self.kind == "type1":
            j0, j = self.params
            if not (1 <= j0 < j < n and 1 <= r <= n - j):
                return False
            if [i for i in range(1, n + 1) if h(i) == j] != [j0]:
                return False
            if any(h(j) != h(j + s) for s in range(1, r + 1)):
                return False
            if any(h(i) in range(j + 1, j + r) for i in range(1, n + 1)):
                return False
            minus = list(h.values)
            minus[j0 - 1] = j - 1
            plus = list(h.values)
            plus[j0 - 1] = j + r
            return (
                self.h_minus.values == tuple(minus)
                and self.h_plus.values == tuple(plus)
            )
        if self.kind == "type2":
            (j,) = self.params
            if not (1 <= j < n and 1 <= r <= j):
                return False
            if h(j) + 1 != h(j + 1) or h(j + 1) == j + 1:
                return False
            if any(h(j - r + 1) != h(j - s) for s in range(r)):
                return False
            if any(h(i) in range(j - r + 1, j + 1) for i in range(1, n + 1)):
                return False
            minus = list(h.values)
            minus[j] = h(j)
            plus = list(h.values)
            for i in range(j - r + 1, j + 1):
                plus[i - 1] = h(j) + 1
            return (
                self.h_minus.values == tuple(minus)
                and self.h_plus.values == tuple(plus)
            )
        return False


def _middle_triples(h, r):
    n = h.n
    preimage = {v: [i for i in range(1, n + 1) if h(i) == v] for v in range(1, n + 1)}
    found = []
    # type 1: h(j) = ... = h(j+r), preimage of j a singleton {j0} with j0 < j,
    # no value lands strictly inside the roof
    for j in range(2, n):
        if j + r > n:
            continue
        if any(h(j) != h(j + s) for s in range(1, r + 1)):
            continue
        if len(preimage[j]) != 1:
            continue
        j0 = preimage[j][0]
        if not (1 <= j0 < j):
            continue
        if any(preimage[v] for v in range(j + 1, j + r)):
            continue
        minus = list(h.values)
        minus[j0 - 1] = j - 1
        plus = list(h.values)
        plus[j0 - 1] = j + r
        found.append(
            ModularTriple("type1", r, (j0, j), HessFn(minus), h, HessFn(plus))
        )
    # type 2: h jumps by one at j, constant on the r-window ending at j,
    # which is disjoint from the image of h
    for j in range(1, n):
        if r > j:
            continue
        if h(j) + 1 != h(j + 1) or h(j + 1) == j + 1:
            continue
        if any(h(j - r + 1) != h(j - s) for s in range(r)):
            continue
        if any(preimage[v] for v in range(j - r + 1, j + 1)):
            continue
        minus = list(h.values)
        minus[j] = h(j)
        plus = list(h.values)
        for i in range(j - r + 1, j + 1):
            plus[i - 1] = h(j) + 1
        found.append(ModularTriple("type2", r, (j,), HessFn(minus), h, HessFn(plus)))
    return found


def _candidate_middles_lower(h, r):
    """Middle candidates that could have h as their h_minus."""
    n = h.n
    cands = []
    # type 1: mid agrees with h except mid(j0) = j where h(j0) = j-1
    for j0 in range(1, n + 1):
        j = h(j0) + 1
        if j > n:
            continue
        mid = list(h.values)
        mid[j0 - 1] = j
        cands.append(mid)
    # type 2: mid agrees with h except mid(j+1) = h(j+1) + 1
    for j in range(1, n):
        if h(j + 1) + 1 > n:
            continue
        mid = list(h.values)
        mid[j] = h(j + 1) + 1
        cands.append(mid)
    return cands


def _candidate_middles_upper(h, r):
    """Middle candidates that could have h as their h_plus."""
    n = h.n
    cands = []
    # type 1: mid(j0) = j where h(j0) = j+r
    for j0 in range(1, n + 1):
        j = h(j0) - r
        if j < 1:
            continue
        mid = list(h.values)
        mid[j0 - 1] = j
        cands.append(mid)
    # type 2: mid on the window (j-r, j] is h(j+1) - 1
    for j in range(1, n):
        mid = list(h.values)
        for i in range(j - r + 1, j + 1):
            if i < 1:
                break
            mid[i - 1] = h(j + 1) - 1
        cands.append(mid)
    return cands


def find_triples(h, role, r):
    """All type-1/type-2 triples with h in the given slot, deterministic order.

    role is one of "lower", "middle", "upper".  Lower/upper searches propose
    the candidate middle from the parameters and validate the full predicate,
    avoiding a scan over all Hessenberg functions.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    if role == "middle":
        triples = _middle_triples(h, r)
    elif role in ("lower", "upper"):
        cands = (
            _candidate_middles_lower(h, r)
            if role == "lower"
            else _candidate_middles_upper(h, r)
        )
        triples = []
        seen = set()
        for mid in cands:
            try:
                midfn = HessFn(mid)
            except ValueError:
                continue
            if midfn.values in seen:
                continue
            seen.add(midfn.values)
            for t in _middle_triples(midfn, r):
                target = t.h_minus if role == "lower" else t.h_plus
                if target == h:
                    triples.append(t)
    else:
        raise ValueError(f"unknown role {role!r}")
    triples.sort(key=lambda t: (t.kind, t.params))
    for t in triples:
        assert t.check(), f"triple predicate failed for {t}"
    return triples
