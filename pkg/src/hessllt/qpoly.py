"""Exact univariate polynomials and truncated power series in q.

Coefficients are arbitrary-precision rationals; integers are kept as plain
ints and only promoted to Fraction when a denominator appears.  No floating
point anywhere.
"""

from __future__ import annotations

from fractions import Fraction


class InexactDivision(ArithmeticError):
    """Polynomial division left a nonzero remainder."""


def _norm(c):
    # keep exact coefficients as ints whenever possible
    if isinstance(c, Fraction):
        return int(c) if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    raise TypeError(f"exact coefficient expected, got {type(c).__name__}")


class QPoly:
    """Polynomial in q with exact rational coefficients, dense storage."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_norm(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def q(cls):
        return cls((0, 1))

    @classmethod
    def monomial(cls, k, c=1):
        return cls((0,) * k + (c,))

    @classmethod
    def const(cls, c):
        return cls((c,))

    @property
    def degree(self):
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QPoly((other,))
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return QPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QPoly((other,))
        if not isinstance(other, QPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QPoly((other,))
        if not isinstance(other, QPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return QPoly(())
            return QPoly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, QPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly(())
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        out = QPoly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def divmod(self, other):
        """Long division; quotient has Fraction coefficients when needed."""
        if not isinstance(other, QPoly):
            other = QPoly((other,))
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        db, lb = other.degree, other.coeffs[-1]
        quo = [0] * max(len(rem) - db, 0)
        for i in range(len(rem) - 1 - db, -1, -1):
            c = rem[i + db]
            if c == 0:
                continue
            f = Fraction(c, 1) / lb if not isinstance(c, Fraction) else c / lb
            quo[i] = _norm(f)
            for j, cb in enumerate(other.coeffs):
                rem[i + j] -= f * cb
                rem[i + j] = _norm(Fraction(rem[i + j]))
        return QPoly(quo), QPoly(rem)

    def exact_div(self, other):
        """Exact quotient; raises InexactDivision on a nonzero remainder."""
        quo, rem = self.divmod(other)
        if not rem.is_zero():
            raise InexactDivision(f"({self}) is not divisible by ({other})")
        return quo

    def shift(self, k):
        """Multiply by q^k."""
        if self.is_zero():
            return self
        return QPoly((0,) * k + self.coeffs)

    def reverse(self, top):
        """q^top * f(1/q); requires deg(f) <= top."""
        if self.degree > top:
            raise ValueError(f"degree {self.degree} exceeds top {top}")
        out = [0] * (top + 1)
        for i, c in enumerate(self.coeffs):
            out[top - i] = c
        return QPoly(out)

    def is_palindromic(self, top):
        return self.reverse(top) == self

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return _norm(acc)

    def to_pairs(self):
        """Dense [numerator, denominator] pairs, the canonical JSON form."""
        out = []
        for c in self.coeffs:
            f = Fraction(c)
            out.append([f.numerator, f.denominator])
        return out

    @classmethod
    def from_pairs(cls, pairs):
        return cls(tuple(Fraction(n, d) for n, d in pairs))

    def __repr__(self):
        return f"QPoly({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                q = "q" if i == 1 else f"q^{i}"
                if c == 1:
                    parts.append(q)
                elif c == -1:
                    parts.append(f"-{q}")
                else:
                    parts.append(f"{c}*{q}")
        s = " + ".join(parts)
        return s.replace("+ -", "- ")


def q_int(m):
    """[m]_q = 1 + q + ... + q^(m-1)."""
    if m < 0:
        raise ValueError("q-integer of a negative integer")
    return QPoly((1,) * m)


def q_factorial(m):
    """[m]_q! = prod_{i=1}^m [i]_q, with [0]_q! = 1."""
    if m < 0:
        raise ValueError("q-factorial of a negative integer")
    out = QPoly.one()
    for i in range(1, m + 1):
        out = out * q_int(i)
    return out


class QSeries:
    """Power series in q truncated at a fixed order.

    Coefficients are valid for exponents <= order; every arithmetic result
    carries the minimum order of its inputs.
    """

    __slots__ = ("coeffs", "order")

    DEFAULT_ORDER = 8

    def __init__(self, coeffs=(), order=DEFAULT_ORDER):
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        cs = [_norm(c) for c in coeffs][: order + 1]
        cs += [0] * (order + 1 - len(cs))
        self.coeffs = tuple(cs)
        self.order = order

    @classmethod
    def from_poly(cls, poly, order=DEFAULT_ORDER):
        return cls(poly.coeffs, order)

    def __getitem__(self, k):
        if k > self.order:
            raise IndexError(f"coefficient {k} beyond truncation order {self.order}")
        return self.coeffs[k] if k >= 0 else 0

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.order))

    def _coerce(self, other):
        if isinstance(other, QPoly):
            return QSeries.from_poly(other, self.order)
        if isinstance(other, (int, Fraction)):
            return QSeries((other,), self.order)
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if not isinstance(other, QSeries):
            return NotImplemented
        order = min(self.order, other.order)
        return QSeries(
            [self.coeffs[i] + other.coeffs[i] for i in range(order + 1)], order
        )

    __radd__ = __add__

    def __neg__(self):
        return QSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        if not isinstance(other, QSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        other = self._coerce(other)
        if not isinstance(other, QSeries):
            return NotImplemented
        order = min(self.order, other.order)
        out = [0] * (order + 1)
        for i, ca in enumerate(self.coeffs[: order + 1]):
            if ca:
                for j in range(order + 1 - i):
                    cb = other.coeffs[j]
                    if cb:
                        out[i + j] += ca * cb
        return QSeries(out, order)

    __rmul__ = __mul__

    def to_poly(self):
        return QPoly(self.coeffs)

    def __repr__(self):
        return f"QSeries({self.to_poly()} + O(q^{self.order + 1}))"
