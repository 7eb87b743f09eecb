"""Exact polynomials in q over the rationals, plus q-combinatorial basics.

A QPoly stores a dense tuple of coefficients in ascending degree, with no
trailing zero (the zero polynomial is the empty tuple).  Coefficients are
Python ints or fractions.Fraction; integer-valued Fractions are normalized
to int so the common all-integer computations stay on fast int arithmetic.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .guards import check_guard

Rational = int | Fraction


def _norm_coeff(c: Rational) -> Rational:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class QPoly:
    """Immutable polynomial in the variable q with exact rational coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        cs = [_norm_coeff(Fraction(c) if not isinstance(c, (int, Fraction)) else c)
              for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs: tuple[Rational, ...] = tuple(cs)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> QPoly:
        return cls()

    @classmethod
    def one(cls) -> QPoly:
        return cls((1,))

    @classmethod
    def const(cls, c: Rational) -> QPoly:
        return cls((c,))

    @classmethod
    def q_power(cls, k: int, c: Rational = 1) -> QPoly:
        """The monomial c*q^k."""
        if k < 0:
            raise ValueError("q-power degree must be nonnegative")
        return cls((0,) * k + (c,))

    # -- structure ---------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Rational, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree of a nonzero polynomial; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def coefficient(self, k: int) -> Rational:
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return 0

    def is_natural(self) -> bool:
        """True when every coefficient is a nonnegative integer."""
        return all(isinstance(c, int) and c >= 0 for c in self._coeffs)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: QPoly) -> QPoly:
        if not isinstance(other, QPoly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    def __neg__(self) -> QPoly:
        return QPoly(tuple(-c for c in self._coeffs))

    def __sub__(self, other: QPoly) -> QPoly:
        if not isinstance(other, QPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return QPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return QPoly(out)

    __rmul__ = __mul__

    def scale(self, r: Rational) -> QPoly:
        if r == 0:
            return QPoly()
        return QPoly(tuple(c * r for c in self._coeffs))

    def div_scalar(self, r: Rational) -> QPoly:
        """Exact division of every coefficient by a nonzero rational."""
        if r == 0:
            raise ZeroDivisionError("division of QPoly by zero scalar")
        return QPoly(tuple(Fraction(c) / r for c in self._coeffs))

    def __pow__(self, n: int) -> QPoly:
        if n < 0:
            raise ValueError("negative power of a QPoly")
        out = QPoly.one()
        for _ in range(n):
            out = out * self
        return out

    def eval_at(self, q0: Rational) -> Rational:
        """Exact Horner evaluation at a rational point."""
        acc: Rational = 0
        for c in reversed(self._coeffs):
            acc = acc * q0 + c
        return _norm_coeff(acc)

    # -- equality / hashing -------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, QPoly):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    # -- rendering -----------------------------------------------------------

    def to_text(self) -> str:
        """Canonical text form, ascending degree: `1 + 2*q + 2*q^2 + q^3`."""
        if not self._coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self._coeffs):
            if c == 0:
                continue
            parts.append((c, _term_text(abs(c), k)))
        out = parts[0][1] if parts[0][0] > 0 else "-" + parts[0][1]
        for c, text in parts[1:]:
            out += (" + " if c > 0 else " - ") + text
        return out

    def to_latex(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self._coeffs):
            if c == 0:
                continue
            parts.append((c, _term_latex(abs(c), k)))
        out = parts[0][1] if parts[0][0] > 0 else "-" + parts[0][1]
        for c, text in parts[1:]:
            out += ("+" if c > 0 else "-") + text
        return out

    def to_json_value(self) -> list:
        """Nonzero terms as [degree, "num", "den"] triples, ascending degree."""
        return [
            [k, str(Fraction(c).numerator), str(Fraction(c).denominator)]
            for k, c in enumerate(self._coeffs)
            if c != 0
        ]

    @classmethod
    def from_json_value(cls, value: list) -> QPoly:
        coeffs: dict[int, Fraction] = {}
        for k, num, den in value:
            coeffs[int(k)] = Fraction(int(num), int(den))
        if not coeffs:
            return cls()
        top = max(coeffs)
        return cls(tuple(coeffs.get(i, 0) for i in range(top + 1)))

    def __repr__(self) -> str:
        return f"QPoly({self.to_text()!r})"


def rational_text(c: Rational) -> str:
    c = _norm_coeff(c)
    if isinstance(c, int):
        return str(c)
    return f"{c.numerator}/{c.denominator}"


def rational_latex(c: Rational) -> str:
    c = _norm_coeff(c)
    if isinstance(c, int):
        return str(c)
    sign = "-" if c < 0 else ""
    return sign + r"\frac{%d}{%d}" % (abs(c.numerator), c.denominator)


def _term_text(c: Rational, k: int) -> str:
    if k == 0:
        return rational_text(c)
    qpart = "q" if k == 1 else f"q^{k}"
    if c == 1:
        return qpart
    return f"{rational_text(c)}*{qpart}"


def _term_latex(c: Rational, k: int) -> str:
    if k == 0:
        return rational_latex(c)
    qpart = "q" if k == 1 else "q^{%d}" % k
    if c == 1:
        return qpart
    return rational_latex(c) + qpart


def eval_at(p: QPoly, q0: Rational) -> Rational:
    return p.eval_at(q0)


# -- q-combinatorics ---------------------------------------------------------


def qbracket(n: int) -> QPoly:
    """The q-analogue of n: 1 + q + ... + q^(n-1).  Zero for n = 0."""
    if n < 0:
        raise ValueError("qbracket needs n >= 0")
    return QPoly((1,) * n)


def qfactorial(n: int) -> QPoly:
    """Product of qbracket(k) for k = 1..n; 1 for n = 0."""
    if n < 0:
        raise ValueError("qfactorial needs n >= 0")
    out = QPoly.one()
    for k in range(1, n + 1):
        out = out * qbracket(k)
    return out


def qrising(b: int, a: int) -> QPoly:
    """The rising q-bracket product [b][b+1]...[b+a-1]; 1 for a = 0."""
    if b < 0 or a < 0:
        raise ValueError("qrising needs b, a >= 0")
    out = QPoly.one()
    for k in range(b, b + a):
        out = out * qbracket(k)
    return out


def rising(n: int, k: int) -> int:
    """Classical increasing factorial n(n+1)...(n+k-1); 1 for k = 0."""
    if n < 0 or k < 0:
        raise ValueError("rising needs n, k >= 0")
    out = 1
    for i in range(n, n + k):
        out *= i
    return out


def inversions(perm) -> int:
    """Number of pairs i < j with perm[i] > perm[j]."""
    p = tuple(perm)
    return sum(
        1
        for i, j in itertools.combinations(range(len(p)), 2)
        if p[i] > p[j]
    )


def inversion_gf(n: int) -> QPoly:
    """Generating function of the inversion statistic over all permutations of n."""
    if n < 0:
        raise ValueError("inversion_gf needs n >= 0")
    check_guard("inversion-gf-n", n)
    counts = [0] * (n * (n - 1) // 2 + 1)
    for perm in itertools.permutations(range(n)):
        counts[inversions(perm)] += 1
    return QPoly(counts)
