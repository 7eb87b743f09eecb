"""Symmetric tensor powers of the quotient algebra.

An element of the n-th symmetric power is a map from canonical n-multisets
of normal monomials (stored as sorted tuples of (x-exp, y-exp) pairs) to
QPoly coefficients.  Products of m elements are computed in SCALED form,
i.e. the (n!)^(m-1)-multiple, which keeps all coefficients in N[q]; exact
division by the scalar recovers the plain product.

Two independent routes compute the scaled product: a closed formula that
expands every permutation-twisted column through the normal polynomials of
module `normal`, and an oracle that symmetrizes explicitly and then
normal-orders every column word with the rewriting engine.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from . import freealg, normal
from .guards import check_guard
from .qpoly import QPoly, Rational, rational_text

SymMonomial = tuple[tuple[int, int], ...]


def canonical(factors) -> SymMonomial:
    """Sort tensor factors into the canonical representative."""
    return tuple(sorted(tuple(f) for f in factors))


class FactorGrid:
    """m rows of n exponent pairs: row i is the i-th factor of the product."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple((int(a), int(b)) for a, b in row) for row in rows)
        if not rows or not rows[0]:
            raise ValueError("grid needs at least one row and one column")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise ValueError("all grid rows must have the same length")
        if any(a < 0 or b < 0 for row in rows for a, b in row):
            raise ValueError("grid exponents must be nonnegative")
        self.rows = rows

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    @classmethod
    def parse(cls, text: str) -> FactorGrid:
        """Parse `(a,b)(a,b);(a,b)(a,b)` with `;` separating rows."""
        rows = [normal.parse_monomial_seq(part) for part in text.split(";")]
        return cls(rows)

    def to_text(self) -> str:
        return ";".join(normal.monomial_seq_text(row) for row in self.rows)

    def __repr__(self) -> str:
        return f"FactorGrid({self.to_text()!r})"


class SymElement:
    """Finite QPoly combination of canonical symmetric monomials."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean: dict[SymMonomial, QPoly] = {}
        if terms:
            width = None
            for mono, coeff in terms.items():
                mono = canonical(mono)
                if width is None:
                    width = len(mono)
                elif len(mono) != width:
                    raise ValueError("mixed tensor widths in one element")
                if not isinstance(coeff, QPoly):
                    coeff = QPoly.const(coeff)
                if coeff:
                    clean[mono] = coeff
        self._terms = clean

    def items(self):
        return self._terms.items()

    def coefficient(self, mono) -> QPoly:
        return self._terms.get(canonical(mono), QPoly.zero())

    def is_zero(self) -> bool:
        return not self._terms

    def sorted_terms(self):
        return sorted(self._terms.items())

    def __eq__(self, other) -> bool:
        if isinstance(other, SymElement):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def scale(self, factor: Rational) -> SymElement:
        return SymElement(
            {mono: coeff.scale(factor) for mono, coeff in self._terms.items()}
        )

    def div_scalar(self, r: Rational) -> SymElement:
        return SymElement(
            {mono: coeff.div_scalar(r) for mono, coeff in self._terms.items()}
        )

    def is_natural(self) -> bool:
        return all(coeff.is_natural() for coeff in self._terms.values())

    def specialize(self, q0: Rational) -> dict[SymMonomial, Rational]:
        out = {}
        for mono, coeff in self._terms.items():
            val = coeff.eval_at(q0)
            if val != 0:
                out[mono] = val
        return out

    def to_text(self) -> str:
        if not self._terms:
            return "(0)"
        parts = []
        for mono, coeff in self.sorted_terms():
            piece = f"({coeff.to_text()})"
            for j, (b, c) in enumerate(mono, start=1):
                if b:
                    piece += f"*x{j}^{b}"
                if c:
                    piece += f"*y{j}^{c}"
            parts.append(piece)
        return " + ".join(parts)

    def to_latex(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, coeff in self.sorted_terms():
            vars_part = ""
            for j, (b, c) in enumerate(mono, start=1):
                if b:
                    vars_part += "x_{%d}" % j if b == 1 else "x_{%d}^{%d}" % (j, b)
                if c:
                    vars_part += "y_{%d}" % j if c == 1 else "y_{%d}^{%d}" % (j, c)
            parts.append(freealg._latex_coeff(coeff, bool(vars_part)) + vars_part)
        return " + ".join(parts)

    def to_json_value(self) -> list:
        return [
            {"factors": [[b, c] for b, c in mono], "coeff": coeff.to_json_value()}
            for mono, coeff in self.sorted_terms()
        ]

    @classmethod
    def from_json_value(cls, value: list) -> SymElement:
        return cls(
            {
                tuple((int(b), int(c)) for b, c in t["factors"]):
                    QPoly.from_json_value(t["coeff"])
                for t in value
            }
        )

    def __repr__(self) -> str:
        return f"SymElement({self.to_text()!r})"


def _check_grid(g: FactorGrid) -> None:
    check_guard("sym-tensor-n", g.n)
    check_guard("sym-factors-m", g.m)


def _sigma_tuples(n: int, m: int):
    """All (identity, s_2, ..., s_m) with each s_i a permutation of 0..n-1."""
    identity = tuple(range(n))
    for rest in itertools.product(itertools.permutations(range(n)), repeat=m - 1):
        yield (identity,) + rest


def _inverse(perm: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for pos, img in enumerate(perm):
        inv[img] = pos
    return tuple(inv)


def _twisted_columns(g: FactorGrid, sigma) -> list[tuple[tuple[int, int], ...]]:
    """Column j of the sigma-term: entry i is row i at column sigma_i^{-1}(j)."""
    inverses = [_inverse(s) for s in sigma]
    return [
        tuple(g.rows[i][inverses[i][j]] for i in range(g.m))
        for j in range(g.n)
    ]


def scaled_product_formula(g: FactorGrid) -> SymElement:
    """The (n!)^(m-1)-multiple of the product, via normal polynomials."""
    _check_grid(g)
    accum: dict[SymMonomial, QPoly] = {}
    for sigma in _sigma_tuples(g.n, g.m):
        per_column = []
        for col in _twisted_columns(g, sigma):
            asum = sum(a for a, _ in col)
            bsum = sum(b for _, b in col)
            expansions = []
            for k in range(bsum + 1):
                coeff = normal.npoly_q(col, k)
                if coeff:
                    expansions.append(((asum + k, bsum - k), coeff))
            per_column.append(expansions)
        _accumulate_tensor(accum, per_column)
    return SymElement(accum)


def scaled_product_oracle(g: FactorGrid) -> SymElement:
    """Same scaled product, via explicit symmetrization plus rewriting."""
    _check_grid(g)
    accum: dict[SymMonomial, QPoly] = {}
    for sigma in _sigma_tuples(g.n, g.m):
        per_column = []
        for col in _twisted_columns(g, sigma):
            word = "".join("x" * a + "y" * b for a, b in col)
            elem = freealg.normal_order(word)
            per_column.append(list(elem.items()))
        _accumulate_tensor(accum, per_column)
    return SymElement(accum)


def _accumulate_tensor(accum, per_column) -> None:
    """Expand a product of per-column expansions into canonical terms."""
    for combo in itertools.product(*per_column):
        coeff = QPoly.one()
        for _, c in combo:
            coeff = coeff * c
        mono = canonical(tuple(key for key, _ in combo))
        acc = accum.get(mono, QPoly.zero()) + coeff
        if acc:
            accum[mono] = acc
        else:
            accum.pop(mono, None)


def product(g: FactorGrid) -> SymElement:
    """The plain product: scaled product divided exactly by (n!)^(m-1)."""
    scale = math.factorial(g.n) ** (g.m - 1)
    return scaled_product_formula(g).div_scalar(scale)


def specialize_q1_product(g: FactorGrid) -> dict[SymMonomial, Rational]:
    """The scaled product at q = 1, straight from the binomial formula."""
    _check_grid(g)
    accum: dict[SymMonomial, Rational] = {}
    for sigma in _sigma_tuples(g.n, g.m):
        per_column = []
        for col in _twisted_columns(g, sigma):
            asum = sum(a for a, _ in col)
            bsum = sum(b for _, b in col)
            expansions = []
            for k in range(bsum + 1):
                count = normal.npoly_q1(col, k)
                if count:
                    expansions.append(((asum + k, bsum - k), count))
            per_column.append(expansions)
        for combo in itertools.product(*per_column):
            value = 1
            for _, c in combo:
                value *= c
            mono = canonical(tuple(key for key, _ in combo))
            total = accum.get(mono, 0) + value
            if total:
                accum[mono] = total
            else:
                accum.pop(mono, None)
    return accum


def specialized_sym_text(terms: dict[SymMonomial, Rational]) -> str:
    if not terms:
        return "(0)"
    parts = []
    for mono in sorted(terms):
        piece = f"({rational_text(terms[mono])})"
        for j, (b, c) in enumerate(mono, start=1):
            if b:
                piece += f"*x{j}^{b}"
            if c:
                piece += f"*y{j}^{c}"
        parts.append(piece)
    return " + ".join(parts)
