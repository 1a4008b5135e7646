"""Symmetric functions of a fixed homogeneous degree with QPoly coefficients.

Supported bases: m (monomial), e (elementary), h (complete homogeneous),
p (power sum), s (Schur).  The monomial basis is the internal canonical one:
products are computed by multiset convolution of monomial supports, the
e/h/p generators expand trivially into m, and Schur functions enter and exit
through Jacobi-Trudi determinants in h.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from hessllt.partitions import distinct_permutations, partitions, z_lambda
from hessllt.qpoly import QPoly, _norm

BASES = ("m", "e", "h", "p", "s")


class DegreeMismatch(ValueError):
    """Operands have different homogeneous degrees."""


# ---------------------------------------------------------------------------
# monomial-basis structure constants


@lru_cache(maxsize=None)
def _mono_times_mono(lam, mu):
    """Expansion of m_lam * m_mu in the m basis, as {partition: int}.

    Works in len(lam)+len(mu) variables, enough for every partition in the
    product.  The coefficient of m_nu counts pairs of rearrangements summing
    to nu itself (the weakly decreasing representative).
    """
    if not lam:
        return {mu: 1}
    if not mu:
        return {lam: 1}
    nvars = len(lam) + len(mu)
    alphas = list(distinct_permutations(lam + (0,) * (nvars - len(lam))))
    betas = list(distinct_permutations(mu + (0,) * (nvars - len(mu))))
    counts = {}
    for a in alphas:
        for b in betas:
            v = tuple(x + y for x, y in zip(a, b))
            if all(v[i] >= v[i + 1] for i in range(nvars - 1)):
                key = tuple(x for x in v if x)
                counts[key] = counts.get(key, 0) + 1
    return counts


def _m_mult(d1, d2):
    """Multiply two m-expansions with arbitrary ring coefficients."""
    out = {}
    for lam, c1 in d1.items():
        for mu, c2 in d2.items():
            c = c1 * c2
            for nu, k in _mono_times_mono(lam, mu).items():
                cur = out.get(nu)
                cur = c * k if cur is None else cur + c * k
                out[nu] = cur
    return {k: v for k, v in out.items() if not _is_zero(v)}


def _is_zero(c):
    if isinstance(c, QPoly):
        return c.is_zero()
    return c == 0


# ---------------------------------------------------------------------------
# generator expansions into m


@lru_cache(maxsize=None)
def _gen_in_m(basis, k):
    if k == 0:
        return {(): 1}
    if basis == "e":
        return {(1,) * k: 1}
    if basis == "h":
        return {lam: 1 for lam in partitions(k)}
    if basis == "p":
        return {(k,): 1}
    raise ValueError(basis)


@lru_cache(maxsize=None)
def _jacobi_trudi_h(lam):
    """s_lam as a signed sum of h_mu via det(h_{lam_i - i + j})."""
    ell = len(lam)
    if ell == 0:
        return {(): 1}
    out = {}

    def expand(row, cols, sign, parts):
        if row == ell:
            key = tuple(sorted((x for x in parts if x), reverse=True))
            out[key] = out.get(key, 0) + sign
            return
        for idx, j in enumerate(cols):
            a = lam[row] - row + j
            if a < 0:
                continue
            rest = cols[:idx] + cols[idx + 1 :]
            expand(row + 1, rest, sign * (-1) ** idx, parts + (a,))

    expand(0, tuple(range(ell)), 1, ())
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _basis_elt_in_m(basis, lam):
    """m-expansion of the basis element indexed by lam, {partition: scalar}."""
    if basis == "m":
        return {lam: 1}
    if basis == "s":
        out = {}
        for hmu, sign in _jacobi_trudi_h(lam).items():
            for nu, c in _basis_elt_in_m("h", hmu).items():
                out[nu] = out.get(nu, 0) + sign * c
        return {k: v for k, v in out.items() if v}
    out = {(): 1}
    for part in lam:
        out = _m_mult(out, _gen_in_m(basis, part))
    return out


# ---------------------------------------------------------------------------
# transition matrices per degree


def _invert_fraction_matrix(mat):
    n = len(mat)
    aug = [
        [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(mat)
    ]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


@lru_cache(maxsize=None)
def _from_m_matrix(n, basis):
    """Matrix Ainv with m_{ps[j]} = sum_i Ainv[j][i] * B_{ps[i]}."""
    ps = partitions(n)
    index = {lam: i for i, lam in enumerate(ps)}
    a = [[0] * len(ps) for _ in ps]
    for i, lam in enumerate(ps):
        for nu, c in _basis_elt_in_m(basis, lam).items():
            a[i][index[nu]] = c
    return _invert_fraction_matrix(a)


# ---------------------------------------------------------------------------


class SymFunc:
    """Homogeneous symmetric function of fixed degree, coefficients in Q[q]."""

    __slots__ = ("degree", "basis", "terms")

    def __init__(self, degree, basis, terms):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        clean = {}
        for lam, c in terms.items():
            lam = tuple(lam)
            if sum(lam) != degree:
                raise ValueError(f"partition {lam} has size != degree {degree}")
            if any(a <= 0 for a in lam) or any(
                lam[i] < lam[i + 1] for i in range(len(lam) - 1)
            ):
                raise ValueError(f"{lam} is not a partition")
            if not isinstance(c, QPoly):
                c = QPoly((c,))
            if not c.is_zero():
                clean[lam] = c
        self.degree = degree
        self.basis = basis
        self.terms = clean

    @classmethod
    def zero(cls, degree, basis="m"):
        return cls(degree, basis, {})

    @classmethod
    def basis_element(cls, basis, lam, coeff=1):
        lam = tuple(lam)
        return cls(sum(lam), basis, {lam: QPoly((coeff,))})

    @classmethod
    def one(cls):
        return cls.basis_element("m", ())

    def is_zero(self):
        return not self.terms

    def coefficient(self, lam):
        return self.terms.get(tuple(lam), QPoly.zero())

    def map_coefficients(self, fn):
        return SymFunc(
            self.degree, self.basis, {lam: fn(c) for lam, c in self.terms.items()}
        )

    # -- basis conversion ---------------------------------------------------

    def convert(self, basis):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        if basis == self.basis:
            return SymFunc(self.degree, self.basis, dict(self.terms))
        in_m = self._to_m_terms()
        if basis == "m":
            return SymFunc(self.degree, "m", in_m)
        ps = partitions(self.degree)
        index = {lam: i for i, lam in enumerate(ps)}
        ainv = _from_m_matrix(self.degree, basis)
        out = {}
        for nu, c in in_m.items():
            for i, w in enumerate(ainv[index[nu]]):
                if w:
                    cur = out.get(ps[i])
                    add = c * w
                    out[ps[i]] = add if cur is None else cur + add
        return SymFunc(self.degree, basis, out)

    def _to_m_terms(self):
        if self.basis == "m":
            return dict(self.terms)
        out = {}
        for lam, c in self.terms.items():
            for nu, w in _basis_elt_in_m(self.basis, lam).items():
                cur = out.get(nu)
                add = c * w
                out[nu] = add if cur is None else cur + add
        return out

    # -- ring operations ----------------------------------------------------

    def _coerce_pair(self, other):
        if self.degree != other.degree:
            raise DegreeMismatch(
                f"degrees {self.degree} and {other.degree} differ"
            )
        if self.basis == other.basis:
            return self, other
        return self.convert("m"), other.convert("m")

    def __add__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        a, b = self._coerce_pair(other)
        out = dict(a.terms)
        for lam, c in b.terms.items():
            out[lam] = out[lam] + c if lam in out else c
        return SymFunc(a.degree, a.basis, out)

    def __sub__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return self.map_coefficients(lambda c: -c)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QPoly)):
            if not isinstance(other, QPoly):
                other = QPoly((other,))
            return self.map_coefficients(lambda c: c * other)
        if not isinstance(other, SymFunc):
            return NotImplemented
        a = self._to_m_terms() if self.basis != "m" else self.terms
        b = other._to_m_terms() if other.basis != "m" else other.terms
        return SymFunc(self.degree + other.degree, "m", _m_mult(a, b))

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, QPoly)):
            return self * other
        return NotImplemented

    def exact_div_scalar(self, divisor):
        """Divide every coefficient exactly by a QPoly."""
        if not isinstance(divisor, QPoly):
            divisor = QPoly((divisor,))
        return self.map_coefficients(lambda c: c.exact_div(divisor))

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.degree != other.degree:
            return False
        a = self if self.basis == "m" else self.convert("m")
        b = other if other.basis == "m" else other.convert("m")
        return a.terms == b.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        keys = sorted(self.terms, reverse=True)
        parts = []
        for lam in keys:
            name = f"{self.basis}{list(lam)}" if lam else "1"
            parts.append(f"({self.terms[lam]})*{name}")
        return " + ".join(parts)

    # -- serialization -------------------------------------------------------

    def to_json_dict(self):
        keys = sorted(self.terms, reverse=True)
        return {
            "degree": self.degree,
            "basis": self.basis,
            "terms": [
                {"partition": list(lam), "coeff": self.terms[lam].to_pairs()}
                for lam in keys
            ],
        }

    @classmethod
    def from_json_dict(cls, data):
        terms = {
            tuple(t["partition"]): QPoly.from_pairs(t["coeff"])
            for t in data["terms"]
        }
        return cls(data["degree"], data["basis"], terms)


class GradedSymFunc:
    """Sequence of degree-n symmetric functions indexed by half-degree."""

    __slots__ = ("degree", "layers")

    def __init__(self, degree, layers):
        layers = tuple(layers)
        for layer in layers:
            if layer.degree != degree:
                raise DegreeMismatch("layer degree differs from declared degree")
        self.degree = degree
        self.layers = layers

    def layer(self, k):
        if 0 <= k < len(self.layers):
            return self.layers[k]
        return SymFunc.zero(self.degree)

    def to_symfunc(self, basis="m"):
        """Collapse layers into a single SymFunc with q tracking the grading."""
        total = SymFunc.zero(self.degree, basis)
        for k, layer in enumerate(self.layers):
            total = total + layer.convert(basis) * QPoly.monomial(k)
        return total

    def __eq__(self, other):
        if isinstance(other, GradedSymFunc):
            other = other.to_symfunc()
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self.to_symfunc() == other

    def to_json_dict(self):
        return {
            "degree": self.degree,
            "layers": [layer.to_json_dict() for layer in self.layers],
        }


# ---------------------------------------------------------------------------
# classical operations


def omega(f):
    """The involution exchanging e_n and h_n; on p it is p_lam -> (-1)^(|lam|-l) p_lam."""
    p = f.convert("p")
    out = {
        lam: c * ((-1) ** (sum(lam) - len(lam))) for lam, c in p.terms.items()
    }
    return SymFunc(f.degree, "p", out).convert(f.basis)


def hall_pairing(f, g):
    """Hall inner product; <p_lam, p_mu> = delta * z_lam."""
    if f.degree != g.degree:
        raise DegreeMismatch(f"degrees {f.degree} and {g.degree} differ")
    fp, gp = f.convert("p"), g.convert("p")
    out = QPoly.zero()
    for lam, c in fp.terms.items():
        d = gp.terms.get(lam)
        if d is not None:
            out = out + c * d * z_lambda(lam)
    return out


def power_sum_scaling(f, rule):
    """Scale the p_lam coefficient by prod_i rule(lam_i); returns f's basis.

    This implements plethystic substitutions acting diagonally on power sums,
    e.g. rule(k) = q^k - 1 for f[(q-1)X] and rule(k) = 1 - q^k for f[(1-q)X].
    """
    p = f.convert("p")
    out = {}
    for lam, c in p.terms.items():
        for part in lam:
            gamma = rule(part)
            if not isinstance(gamma, QPoly):
                gamma = QPoly((gamma,))
            c = c * gamma
        if not c.is_zero():
            out[lam] = c
    return SymFunc(f.degree, "p", out).convert(f.basis)


def frobenius_from_character(n, chi, basis="p"):
    """Frobenius characteristic sum_lam chi(lam) p_lam / z_lam of a class function."""
    terms = {}
    for lam in partitions(n):
        if lam not in chi:
            raise ValueError(f"character value missing for cycle type {lam}")
        val = Fraction(chi[lam], z_lambda(lam))
        if val:
            terms[lam] = QPoly((val,))
    return SymFunc(n, "p", terms).convert(basis)


def h1n(n):
    """h_1^n, the pairing dual that extracts dimensions."""
    return SymFunc.basis_element("h", (1,) * n)
