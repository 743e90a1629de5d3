"""Exact polynomial arithmetic: characteristic polynomials over the integers,
Sturm root counting, and comparison of largest roots against thresholds of
the form ``a + b*sqrt(d)``.

Polynomials are coefficient sequences, highest degree first.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .errors import SolverError

Number = Union[int, Fraction]


class Comparison(str, enum.Enum):
    LESS = "Less"
    EQUAL = "Equal"
    GREATER = "Greater"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def of(cls, x: float, y: float) -> "Comparison":
        return cls.LESS if x < y else cls.GREATER if x > y else cls.EQUAL


@dataclass(frozen=True)
class IntPolynomial:
    """Monic polynomial with exact integer coefficients, highest degree first."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs or self.coeffs[0] != 1:
            raise ValueError("IntPolynomial must be monic")
        if not all(isinstance(c, int) for c in self.coeffs):
            raise TypeError("coefficients must be ints")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for c in self.coeffs:
            acc = acc * x + c
        return acc

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    def __str__(self) -> str:
        terms = []
        d = self.degree
        for i, c in enumerate(self.coeffs):
            k = d - i
            if c == 0:
                continue
            mag = abs(c)
            body = ("" if mag == 1 and k else str(mag)) + ("λ" if k else "") + (f"^{k}" if k > 1 else "")
            terms.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(terms) or "0"
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def char_poly(rows: Sequence[Sequence[int]]) -> IntPolynomial:
    """det(xI - M) by Faddeev-LeVerrier in exact integer arithmetic.

    Works for any square integer matrix; every division by ``k`` is exact.
    """
    n = len(rows)
    for r in rows:
        if len(r) != n:
            raise ValueError("matrix must be square")
        for x in r:
            if not isinstance(x, int) or isinstance(x, bool):
                if isinstance(x, Fraction) and x.denominator == 1:
                    continue
                raise TypeError("char_poly needs integer entries")
    a = [[int(x) for x in r] for r in rows]
    sparse = [[(j, x) for j, x in enumerate(r) if x] for r in a]
    coeffs = [1]
    m = [[0] * n for _ in range(n)]
    c = 1
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        new = []
        for i in range(n):
            row = [0] * n
            for j, x in sparse[i]:
                mj = m[j]
                for col in range(n):
                    if mj[col]:
                        row[col] += x * mj[col]
            row[i] += c
            new.append(row)
        m = new
        tr = 0
        for i in range(n):
            for j, x in sparse[i]:
                tr += x * m[j][i]
        q, r = divmod(-tr, k)
        if r:
            raise ArithmeticError("non-exact Faddeev-LeVerrier step")
        c = q
        coeffs.append(c)
    return IntPolynomial(tuple(coeffs))


# --- polynomial helpers over Q ---------------------------------------------

def _trim(p: list) -> list:
    i = 0
    while i < len(p) - 1 and p[i] == 0:
        i += 1
    return p[i:]


def poly_eval(p: Sequence[Number], x):
    acc = 0
    for c in p:
        acc = acc * x + c
    return acc


def poly_divmod(a: Sequence[Number], b: Sequence[Number]) -> tuple[list, list]:
    a = [Fraction(x) for x in a]
    b = _trim([Fraction(x) for x in b])
    if b == [0]:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [Fraction(0)], _trim(a)
    q = []
    lead = b[0]
    a = list(a)
    for i in range(len(a) - len(b) + 1):
        f = a[i] / lead
        q.append(f)
        if f:
            for j, bj in enumerate(b):
                a[i + j] -= f * bj
    rem = _trim(a[len(a) - len(b) + 1:] or [Fraction(0)])
    return q, rem


def poly_derivative(p: Sequence[Number]) -> list:
    d = len(p) - 1
    return [c * (d - i) for i, c in enumerate(p[:-1])] or [0]


def poly_gcd(a: Sequence[Number], b: Sequence[Number]) -> list:
    a = _trim([Fraction(x) for x in a])
    b = _trim([Fraction(x) for x in b])
    while b != [0]:
        a, b = b, poly_divmod(a, b)[1]
    if a == [0]:
        return a
    return [c / a[0] for c in a]


def squarefree_part(p: Sequence[Number]) -> list:
    g = poly_gcd(p, poly_derivative(p))
    if len(g) <= 1:
        return [Fraction(c) for c in p]
    return poly_divmod(p, g)[0]


def cauchy_bound(p: Sequence[Number]) -> Fraction:
    lead = Fraction(p[0])
    return 1 + max((abs(Fraction(c) / lead) for c in p[1:]), default=Fraction(0))


def _sign(x) -> int:
    return (x > 0) - (x < 0)


# --- quadratic surds ------------------------------------------------------

@dataclass(frozen=True)
class QuadraticSurd:
    """The real number ``a + b*sqrt(d)`` with rational a, b and integer d >= 0."""

    a: Fraction
    b: Fraction = Fraction(0)
    d: int = 0

    @classmethod
    def make(cls, a: Number, b: Number = 0, d: int = 0) -> "QuadraticSurd":
        a, b = Fraction(a), Fraction(b)
        if d < 0:
            raise ValueError("d must be nonnegative")
        r = math.isqrt(d)
        if r * r == d:
            return cls(a + b * r)
        # pull square factors out of d
        k = 2
        while k * k <= d:
            while d % (k * k) == 0:
                d //= k * k
                b *= k
            k += 1
        if b == 0:
            return cls(a)
        return cls(a, b, d)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def sign(self) -> int:
        sa, sb = _sign(self.a), _sign(self.b)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: compare a^2 with b^2 d
        return sa * _sign(self.a * self.a - self.b * self.b * self.d)

    def _coerce(self, other) -> "QuadraticSurd":
        if isinstance(other, QuadraticSurd):
            if other.b and self.b and other.d != self.d:
                raise ValueError("surds with different radicands")
            return other
        return QuadraticSurd(Fraction(other), Fraction(0), self.d)

    def __add__(self, other):
        o = self._coerce(other)
        d = self.d if self.b else o.d
        return QuadraticSurd(self.a + o.a, self.b + o.b, d)

    __radd__ = __add__

    def __mul__(self, other):
        o = self._coerce(other)
        d = self.d if self.b else o.d
        return QuadraticSurd(self.a * o.a + self.b * o.b * d, self.a * o.b + self.b * o.a, d)

    __rmul__ = __mul__

    def minimal_polynomial(self) -> list[Fraction]:
        if self.b == 0:
            return [Fraction(1), -self.a]
        return [Fraction(1), -2 * self.a, self.a * self.a - self.b * self.b * self.d]

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        return f"{self.a} + {self.b}*sqrt({self.d})"


Threshold = Union[int, Fraction, QuadraticSurd]


def as_surd(t: Threshold) -> QuadraticSurd:
    return t if isinstance(t, QuadraticSurd) else QuadraticSurd.make(t)


def eval_sign(p: Sequence[Number], t: QuadraticSurd) -> int:
    if t.is_rational:
        return _sign(poly_eval(p, t.a))
    return poly_eval(p, t).sign()


# --- Sturm sequences -------------------------------------------------------

class SturmChain:
    def __init__(self, p: Sequence[Number]):
        p0 = _trim([Fraction(c) for c in p])
        chain = [p0]
        if len(p0) > 1:
            chain.append(poly_derivative(p0))
            while len(chain[-1]) > 1:
                rem = poly_divmod(chain[-2], chain[-1])[1]
                if rem == [0]:
                    break
                chain.append([-c for c in rem])
        self.chain = chain

    @staticmethod
    def _variations(signs) -> int:
        signs = [s for s in signs if s]
        return sum(1 for x, y in zip(signs, signs[1:]) if x != y)

    def variations_at(self, t: QuadraticSurd) -> int:
        return self._variations(eval_sign(q, t) for q in self.chain)

    def variations_at_rational(self, x: Fraction) -> int:
        return self._variations(_sign(poly_eval(q, x)) for q in self.chain)

    def variations_at_infinity(self) -> int:
        return self._variations(_sign(q[0]) for q in self.chain)

    def count_between(self, a: Fraction, b: Fraction) -> int:
        """Distinct roots in (a, b); a and b must not be roots."""
        return self.variations_at_rational(a) - self.variations_at_rational(b)


def count_roots_above(p: Sequence[Number], t: Threshold) -> int:
    """Number of distinct real roots of ``p`` strictly greater than ``t``."""
    t = as_surd(t)
    p = _trim([Fraction(c) for c in p])
    m = t.minimal_polynomial()
    # strip the factor vanishing at t; m is irreducible over Q
    while len(p) > 1 and eval_sign(p, t) == 0:
        q, r = poly_divmod(p, m)
        if r != [0]:
            raise ArithmeticError("minimal polynomial does not divide p at its root")
        p = q
    if len(p) <= 1:
        return 0
    chain = SturmChain(p)
    return chain.variations_at(t) - chain.variations_at_infinity()


def compare_largest_root(p: Sequence[Number], t: Threshold) -> Comparison:
    """Exact trichotomy of the largest real root of ``p`` against ``t``."""
    t = as_surd(t)
    if count_roots_above(p, t) >= 1:
        return Comparison.GREATER
    if eval_sign(p, t) == 0:
        return Comparison.EQUAL
    return Comparison.LESS


def _isolate_max_root(sf: list, chain: SturmChain, bound: Fraction) -> tuple[Fraction, Fraction]:
    """Rational (lo, hi) holding the largest root and no other root of ``sf``."""
    lo, hi = -bound, bound
    while True:
        total = chain.count_between(lo, hi)
        if total == 1:
            return lo, hi
        mid = _nonroot_mid(sf, lo, hi)
        if chain.count_between(mid, hi) >= 1:
            lo = mid
        else:
            hi = mid


def _nonroot_mid(p: list, lo: Fraction, hi: Fraction, *others: list) -> Fraction:
    mid = (lo + hi) / 2
    step = (hi - lo) / 1024
    while any(poly_eval(q, mid) == 0 for q in (p,) + others):
        mid += step
        step /= 2
    return mid


def compare_max_roots(p1: Sequence[Number], p2: Sequence[Number], max_steps: int = 400) -> Comparison:
    """Exact comparison of the largest real roots of two polynomials."""
    sf1, sf2 = squarefree_part(p1), squarefree_part(p2)
    if len(sf1) <= 1 or len(sf2) <= 1:
        raise ValueError("polynomials must have positive degree")
    c1, c2 = SturmChain(sf1), SturmChain(sf2)
    if c1.variations_at_rational(-cauchy_bound(sf1)) == c1.variations_at_infinity():
        raise ValueError("first polynomial has no real root")
    if c2.variations_at_rational(-cauchy_bound(sf2)) == c2.variations_at_infinity():
        raise ValueError("second polynomial has no real root")
    bound = max(cauchy_bound(sf1), cauchy_bound(sf2))
    lo1, hi1 = _isolate_max_root(sf1, c1, bound)
    lo2, hi2 = _isolate_max_root(sf2, c2, bound)
    g = poly_gcd(sf1, sf2)
    gchain = SturmChain(g) if len(g) > 1 else None
    for _ in range(max_steps):
        if hi1 <= lo2:
            return Comparison.LESS
        if hi2 <= lo1:
            return Comparison.GREATER
        lo, hi = max(lo1, lo2), min(hi1, hi2)
        # endpoints are non-roots of sf1/sf2, hence of g
        if gchain is not None and lo < hi and gchain.count_between(lo, hi) >= 1:
            return Comparison.EQUAL
        mid = _nonroot_mid(sf1, lo1, hi1)
        if c1.count_between(mid, hi1):
            lo1 = mid
        else:
            hi1 = mid
        mid = _nonroot_mid(sf2, lo2, hi2)
        if c2.count_between(mid, hi2):
            lo2 = mid
        else:
            hi2 = mid
    raise SolverError("root isolation did not separate the largest roots", float(hi1 - lo1))
