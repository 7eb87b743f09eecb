"""Words in the free algebra on x, y and normal ordering in the quotient.

The quotient relation is yx = q*xy + x^2.  A word rewrites to a linear
combination of normal words x^b y^c with coefficients in N[q]; MWElement
stores such combinations as a map (b, c) -> QPoly.  Rewriting is the
brute-force oracle that every closed-form coefficient formula in this
package is checked against, so it stays deliberately simple: replace one
yx factor at a time and merge like words eagerly.
"""

from __future__ import annotations

import functools
import re
from fractions import Fraction

from .guards import check_guard
from .qpoly import QPoly, Rational, rational_text

_WORD_RE = re.compile(r"^[xy]*$")

# Rewriting terminates: replacing yx by xy keeps the letter count and removes
# one (y, x) inversion; replacing yx by xx removes a y.  The pair
# (#y, inversions) strictly drops either way.


def parse_word(text: str) -> str:
    """Validate a word over the alphabet {x, y} (empty word allowed)."""
    if not _WORD_RE.match(text):
        raise ValueError(f"not a word over x,y: {text!r}")
    return text


class MWElement:
    """A normal-form element: finite map (x-exponent, y-exponent) -> QPoly."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean: dict[tuple[int, int], QPoly] = {}
        if terms:
            for (b, c), coeff in terms.items():
                if not isinstance(coeff, QPoly):
                    coeff = QPoly.const(coeff)
                if coeff:
                    clean[(b, c)] = coeff
        self._terms = clean

    @classmethod
    def zero(cls) -> MWElement:
        return cls()

    @classmethod
    def one(cls) -> MWElement:
        return cls({(0, 0): QPoly.one()})

    @classmethod
    def term(cls, b: int, c: int, coeff: QPoly | Rational = 1) -> MWElement:
        return cls({(b, c): coeff if isinstance(coeff, QPoly) else QPoly.const(coeff)})

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def coefficient(self, b: int, c: int) -> QPoly:
        return self._terms.get((b, c), QPoly.zero())

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: MWElement) -> MWElement:
        out = dict(self._terms)
        for key, coeff in other._terms.items():
            s = out.get(key, QPoly.zero()) + coeff
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return MWElement(out)

    def scale(self, factor: QPoly | Rational) -> MWElement:
        if not isinstance(factor, QPoly):
            factor = QPoly.const(factor)
        return MWElement({key: coeff * factor for key, coeff in self._terms.items()})

    def is_natural(self) -> bool:
        return all(coeff.is_natural() for coeff in self._terms.values())

    def __eq__(self, other) -> bool:
        if isinstance(other, MWElement):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def sorted_terms(self):
        """Terms in lexicographic (b, c) order."""
        return sorted(self._terms.items())

    def to_text(self) -> str:
        if not self._terms:
            return "(0)"
        parts = []
        for (b, c), coeff in self.sorted_terms():
            piece = f"({coeff.to_text()})"
            if b:
                piece += f"*x^{b}"
            if c:
                piece += f"*y^{c}"
            parts.append(piece)
        return " + ".join(parts)

    def to_latex(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (b, c), coeff in self.sorted_terms():
            parts.append(_latex_coeff(coeff, b or c) + _latex_vars((("x", b), ("y", c))))
        return " + ".join(parts)

    def to_json_value(self) -> list:
        return [
            {"x": b, "y": c, "coeff": coeff.to_json_value()}
            for (b, c), coeff in self.sorted_terms()
        ]

    @classmethod
    def from_json_value(cls, value: list) -> MWElement:
        return cls(
            {
                (int(t["x"]), int(t["y"])): QPoly.from_json_value(t["coeff"])
                for t in value
            }
        )

    def __repr__(self) -> str:
        return f"MWElement({self.to_text()!r})"


def _latex_coeff(coeff: QPoly, has_vars: bool) -> str:
    """Render a QPoly coefficient in front of variables, paper style."""
    body = coeff.to_latex()
    if not has_vars:
        return body
    if coeff == QPoly.one():
        return ""
    if len([c for c in coeff.coeffs if c != 0]) > 1:
        return f"({body})"
    return body


def _latex_vars(pairs) -> str:
    out = ""
    for name, exp in pairs:
        if exp == 0:
            continue
        out += name if exp == 1 else "%s^{%d}" % (name, exp)
    return out


def _is_normal(word: str) -> bool:
    return "yx" not in word


@functools.lru_cache(maxsize=None)
def _normal_order_cached(word: str, strategy: str) -> MWElement:
    find = str.find if strategy == "leftmost" else str.rfind
    pending: dict[str, QPoly] = {word: QPoly.one()}
    result: dict[tuple[int, int], QPoly] = {}
    while pending:
        w, coeff = pending.popitem()
        i = find(w, "yx")
        if i < 0:
            key = (w.count("x"), w.count("y"))
            acc = result.get(key, QPoly.zero()) + coeff
            if acc:
                result[key] = acc
            else:
                result.pop(key, None)
            continue
        swapped = w[:i] + "xy" + w[i + 2:]
        squared = w[:i] + "xx" + w[i + 2:]
        for nxt, extra in ((swapped, coeff * QPoly.q_power(1)), (squared, coeff)):
            acc = pending.get(nxt, QPoly.zero()) + extra
            if acc:
                pending[nxt] = acc
            else:
                pending.pop(nxt, None)
    return MWElement(result)


def normal_order(word: str, strategy: str = "leftmost") -> MWElement:
    """Rewrite a word to normal form by repeatedly replacing yx with q*xy + xx.

    strategy picks which yx factor is rewritten first ("leftmost" or
    "rightmost"); the result is the same either way, which the test suite
    checks rather than assumes.
    """
    parse_word(word)
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown rewrite strategy: {strategy!r}")
    check_guard("word-length", len(word))
    return _normal_order_cached(word, strategy)


def multiply(u: MWElement, v: MWElement) -> MWElement:
    """Product in the quotient algebra, returned in normal form.

    For normal terms, x^b1 y^c1 * x^b2 y^c2 = x^b1 (y^c1 x^b2) y^c2 and the
    outer x-prefix / y-suffix pass through rewriting untouched, so only the
    middle block is normal-ordered (and cached across calls).
    """
    out: dict[tuple[int, int], QPoly] = {}
    for (b1, c1), p1 in u.items():
        for (b2, c2), p2 in v.items():
            check_guard("word-length", c1 + b2)
            middle = _normal_order_cached("y" * c1 + "x" * b2, "leftmost")
            scale = p1 * p2
            for (bm, cm), pm in middle.items():
                key = (b1 + bm, cm + c2)
                acc = out.get(key, QPoly.zero()) + pm * scale
                if acc:
                    out[key] = acc
                else:
                    out.pop(key, None)
    return MWElement(out)


def monomial(pairs) -> MWElement:
    """Normal form of the product of factors x^a y^b taken left to right."""
    out = MWElement.one()
    for a, b in pairs:
        out = multiply(out, MWElement.term(a, b))
    return out


def specialize_q(u: MWElement, q0: Rational) -> dict[tuple[int, int], Rational]:
    """Evaluate every coefficient at q0, dropping terms that vanish."""
    out = {}
    for key, coeff in u.items():
        val = coeff.eval_at(q0)
        if val != 0:
            out[key] = val
    return out


def specialized_text(terms: dict[tuple[int, int], Rational]) -> str:
    """Text form of a specialize_q result, matching MWElement.to_text layout."""
    if not terms:
        return "(0)"
    parts = []
    for (b, c) in sorted(terms):
        piece = f"({rational_text(terms[(b, c)])})"
        if b:
            piece += f"*x^{b}"
        if c:
            piece += f"*y^{c}"
        parts.append(piece)
    return " + ".join(parts)
