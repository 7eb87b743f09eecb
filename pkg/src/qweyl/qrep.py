"""Operator representations and q-calculus identities, checked exactly.

The carrier space is the span of Laurent monomials x^t with rational
coefficients.  All operators (q-shift, q-derivative, Jackson integral, the
two generator actions) are evaluated at exact rational points q0, so every
check below is an exact Fraction equality; there are no tolerances.

Two representations of the quotient relation y.x = q x.y + x.x are covered:

  rho:  x acts as multiplication by x^(-1), y as -q^(-1) * (derivative at 1/q)
  iota: x acts as the Jackson integral, y as multiplication by x

plus the bracket identities obtained by pushing a product of mixed factors
through either representation applied to a single monomial.
"""

from __future__ import annotations

from fractions import Fraction

from . import freealg, normal
from .qpoly import Rational, rational_text


class LaurentFn:
    """Finite rational combination of integer powers of x (negative allowed)."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean: dict[int, Rational] = {}
        if terms:
            for t, c in terms.items():
                if c != 0:
                    clean[int(t)] = c
        self._terms = clean

    @classmethod
    def zero(cls) -> LaurentFn:
        return cls()

    @classmethod
    def monomial(cls, t: int, c: Rational = 1) -> LaurentFn:
        return cls({t: c})

    @classmethod
    def const(cls, c: Rational) -> LaurentFn:
        return cls({0: c})

    def items(self):
        return self._terms.items()

    def exponents(self):
        return self._terms.keys()

    def coefficient(self, t: int) -> Rational:
        return self._terms.get(t, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def value_at_zero(self) -> Rational:
        """Constant-term evaluation; defined only without negative exponents."""
        if any(t < 0 for t in self._terms):
            raise ValueError("evaluation at 0 needs nonnegative exponents")
        return self._terms.get(0, 0)

    def __add__(self, other: LaurentFn) -> LaurentFn:
        out = dict(self._terms)
        for t, c in other._terms.items():
            out[t] = out.get(t, 0) + c
        return LaurentFn(out)

    def __sub__(self, other: LaurentFn) -> LaurentFn:
        out = dict(self._terms)
        for t, c in other._terms.items():
            out[t] = out.get(t, 0) - c
        return LaurentFn(out)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, LaurentFn):
            return NotImplemented
        out: dict[int, Rational] = {}
        for t1, c1 in self._terms.items():
            for t2, c2 in other._terms.items():
                t = t1 + t2
                out[t] = out.get(t, 0) + c1 * c2
        return LaurentFn(out)

    __rmul__ = __mul__

    def scale(self, r: Rational) -> LaurentFn:
        return LaurentFn({t: c * r for t, c in self._terms.items()})

    def shift_exp(self, d: int) -> LaurentFn:
        """Multiply by x^d."""
        return LaurentFn({t + d: c for t, c in self._terms.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentFn):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for t in sorted(self._terms):
            c = self._terms[t]
            body = rational_text(abs(c)) + (f"*x^{t}" if t else "")
            parts.append((c, body))
        out = parts[0][1] if parts[0][0] > 0 else "-" + parts[0][1]
        for c, body in parts[1:]:
            out += (" + " if c > 0 else " - ") + body
        return out

    def __repr__(self) -> str:
        return f"LaurentFn({self.to_text()!r})"


def _check_point(q0: Rational) -> Fraction:
    q0 = Fraction(q0)
    if q0 == 0 or q0 == 1:
        raise ValueError("q0 must avoid 0 and 1")
    return q0


def _check_jackson_point(q0: Rational) -> Fraction:
    q0 = Fraction(q0)
    if not 0 < q0 < 1:
        raise ValueError("Jackson integration needs 0 < q0 < 1")
    return q0


def qint(s: int, q0: Fraction) -> Fraction:
    """The bracket value (q0^s - 1)/(q0 - 1), i.e. 1 + q0 + ... + q0^(s-1)."""
    return (q0 ** s - 1) / (q0 - 1)


def qint_rising(s: int, count: int, q0: Fraction) -> Fraction:
    """Product of brackets [s][s+1]...[s+count-1] evaluated at q0."""
    out = Fraction(1)
    for r in range(count):
        out *= qint(s + r, q0)
    return out


# -- operators ----------------------------------------------------------------


def q_shift(f: LaurentFn, q0: Rational) -> LaurentFn:
    """Substitute x -> q0*x: termwise x^t -> q0^t x^t."""
    q0 = Fraction(q0)
    if q0 == 0 and any(t < 0 for t in f.exponents()):
        raise ValueError("q0 = 0 undefined on negative exponents")
    return LaurentFn({t: c * q0 ** t for t, c in f.items()})


def q_derivative(f: LaurentFn, q0: Rational) -> LaurentFn:
    """The difference quotient (f(q0 x) - f(x)) / ((q0 - 1) x), termwise."""
    q0 = _check_point(q0)
    out: dict[int, Rational] = {}
    for t, c in f.items():
        if t == 0:
            continue
        out[t - 1] = out.get(t - 1, 0) + c * qint(t, q0)
    return LaurentFn(out)


def jackson_integral(f: LaurentFn, q0: Rational) -> LaurentFn:
    """The q-antiderivative, in closed form: x^t -> x^(t+1) / [t+1].

    Rejects exponents <= -1, where the defining geometric series diverges
    (or, at t = -1, the closed form has a vanishing denominator).
    """
    q0 = _check_jackson_point(q0)
    out: dict[int, Rational] = {}
    for t, c in f.items():
        if t <= -1:
            raise ValueError(f"divergent Jackson integral on exponent {t}")
        out[t + 1] = c * (1 - q0) / (1 - q0 ** (t + 1))
    return LaurentFn(out)


# -- generator actions ---------------------------------------------------------


def rho_x(f: LaurentFn, q0: Rational) -> LaurentFn:
    return f.shift_exp(-1)


def rho_y(f: LaurentFn, q0: Rational) -> LaurentFn:
    q0 = _check_point(q0)
    return q_derivative(f, 1 / q0).scale(-1 / q0)


def iota_x(f: LaurentFn, q0: Rational) -> LaurentFn:
    return jackson_integral(f, q0)


def iota_y(f: LaurentFn, q0: Rational) -> LaurentFn:
    return f.shift_exp(1)


_ACTIONS = {
    "rho": {"x": rho_x, "y": rho_y},
    "iota": {"x": iota_x, "y": iota_y},
}


def apply_word(word: str, f: LaurentFn, q0: Rational, representation: str = "rho") -> LaurentFn:
    """Apply a word letterwise, rightmost letter acting first."""
    freealg.parse_word(word)
    acts = _ACTIONS[representation]
    for letter in reversed(word):
        f = acts[letter](f, q0)
    return f


def apply_element(elem, f: LaurentFn, q0: Rational, representation: str = "rho") -> LaurentFn:
    """Apply a normal-form element: sum of coeff(q0) * x-action^b (y-action^c f)."""
    acts = _ACTIONS[representation]
    out = LaurentFn.zero()
    for (b, c), coeff in elem.items():
        g = f
        for _ in range(c):
            g = acts["y"](g, q0)
        for _ in range(b):
            g = acts["x"](g, q0)
        out = out + g.scale(coeff.eval_at(q0))
    return out


# -- relation and identity checks ----------------------------------------------


def check_rho_relation(f: LaurentFn, q0: Rational) -> bool:
    """y.x f == q x.y f + x.x f under the meromorphic action."""
    q0 = _check_point(q0)
    lhs = rho_y(rho_x(f, q0), q0)
    rhs = rho_x(rho_y(f, q0), q0).scale(q0) + rho_x(rho_x(f, q0), q0)
    return lhs == rhs


def check_iota_relation(f: LaurentFn, q0: Rational) -> bool:
    """y.x f == q x.y f + x.x f under the integral action."""
    q0 = _check_jackson_point(q0)
    lhs = iota_y(iota_x(f, q0), q0)
    rhs = iota_x(iota_y(f, q0), q0).scale(q0) + iota_x(iota_x(f, q0), q0)
    return lhs == rhs


def check_q_leibnitz(f: LaurentFn, g: LaurentFn, q0: Rational) -> bool:
    """d_q(fg) == f d_q(g) + (shift g) d_q(f)."""
    q0 = _check_point(q0)
    lhs = q_derivative(f * g, q0)
    rhs = f * q_derivative(g, q0) + q_shift(g, q0) * q_derivative(f, q0)
    return lhs == rhs


def check_fundamental(f: LaurentFn, q0: Rational) -> bool:
    """The q-derivative undoes the Jackson integral."""
    return q_derivative(jackson_integral(f, q0), q0) == f


def check_rota_baxter(f: LaurentFn, g: LaurentFn, q0: Rational) -> bool:
    """(Jf)(Jg) == J((Jf) g) + J(f * shift(Jg)): the twisted product rule."""
    q0 = _check_jackson_point(q0)
    jf = jackson_integral(f, q0)
    jg = jackson_integral(g, q0)
    rhs = jackson_integral(jf * g, q0) + jackson_integral(f * q_shift(jg, q0), q0)
    return jf * jg == rhs


def check_q_int_by_parts(f: LaurentFn, g: LaurentFn, q0: Rational) -> bool:
    """J(shift(f) d_q g) == f g - f(0) g(0) - J(g d_q f), for exponents >= 0."""
    q0 = _check_jackson_point(q0)
    if any(t < 0 for t in f.exponents()) or any(t < 0 for t in g.exponents()):
        raise ValueError("integration by parts needs nonnegative exponents")
    lhs = jackson_integral(q_shift(f, q0) * q_derivative(g, q0), q0)
    boundary = f.value_at_zero() * g.value_at_zero()
    rhs = f * g - LaurentFn.const(boundary) - jackson_integral(g * q_derivative(f, q0), q0)
    return lhs == rhs


def check_representation_soundness(
    word: str, f: LaurentFn, q0: Rational, representation: str = "rho"
) -> bool:
    """Letterwise application equals application of the normal form."""
    direct = apply_word(word, f, q0, representation)
    via_normal = apply_element(freealg.normal_order(word), f, q0, representation)
    return direct == via_normal


# -- bracket identities ---------------------------------------------------------


def _npoly_values(avec, bvec, q0: Fraction, formula: str):
    seq = tuple(zip(avec, bvec))
    bsum = sum(bvec)
    fn = normal.npoly_q if formula == "primary" else normal.npoly_q_alt
    return [fn(seq, k).eval_at(q0) for k in range(bsum + 1)]


def bracket_identity_sides(
    avec, bvec, t: int, q0: Rational,
    formula: str = "primary", representation: str = "rho", form: str = "derived",
) -> tuple[Fraction, Fraction]:
    """Both sides of the bracket identity, as exact rationals.

    The derived form is what pushing the product through the representation
    actually yields (rising-bracket products); the printed form keeps only a
    single top bracket per factor and is provided so its failures can be
    reported rather than silently corrected.
    """
    avec = tuple(int(a) for a in avec)
    bvec = tuple(int(b) for b in bvec)
    if len(avec) != len(bvec) or not avec:
        raise ValueError("need equal-length nonempty exponent vectors")
    if t < 1:
        raise ValueError("t must be a positive integer")
    if formula not in ("primary", "alternative"):
        raise ValueError(f"unknown formula: {formula!r}")
    if form not in ("derived", "printed"):
        raise ValueError(f"unknown form: {form!r}")
    q0 = _check_point(q0)
    n = len(avec)
    asum, bsum = sum(avec), sum(bvec)
    a_after = [sum(avec[i + 1:]) for i in range(n)]
    b_after = [sum(bvec[i + 1:]) for i in range(n)]
    nvals = _npoly_values(avec, bvec, q0, formula)

    if representation == "rho":
        if form == "derived":
            lhs = Fraction(1)
            for i in range(n):
                lhs *= qint_rising(t + b_after[i] + a_after[i], bvec[i], q0)
            rhs = sum(
                (nvals[k] * qint_rising(t, bsum - k, q0) for k in range(bsum + 1)),
                Fraction(0),
            )
        else:
            lhs = Fraction(1)
            for i in range(n):
                lhs *= qint(t + bvec[i] + b_after[i] + a_after[i] - 1, q0)
            rhs = sum(
                (nvals[k] * qint(t + bsum - k - 1, q0) for k in range(bsum + 1)),
                Fraction(0),
            )
    elif representation == "iota":
        if form == "derived":
            denom = Fraction(1)
            for i in range(n):
                denom *= qint_rising(t + bvec[i] + b_after[i] + a_after[i] + 1, avec[i], q0)
            lhs = 1 / denom
            rhs = sum(
                (nvals[k] / qint_rising(t + bsum - k + 1, asum + k, q0)
                 for k in range(bsum + 1)),
                Fraction(0),
            )
        else:
            denom = Fraction(1)
            for i in range(n):
                denom *= qint_rising(
                    t + avec[i] + a_after[i] + bvec[i] + b_after[i] + 1, avec[i], q0
                )
            lhs = 1 / denom
            rhs = sum(
                (nvals[k] / qint_rising(t + asum + bsum, asum + k, q0)
                 for k in range(bsum + 1)),
                Fraction(0),
            )
    else:
        raise ValueError(f"unknown representation: {representation!r}")
    return Fraction(lhs), Fraction(rhs)


def check_bracket_identity(
    avec, bvec, t: int, q0: Rational,
    formula: str = "primary", representation: str = "rho", form: str = "derived",
) -> bool:
    lhs, rhs = bracket_identity_sides(avec, bvec, t, q0, formula, representation, form)
    return lhs == rhs


def bracket_identity_report(avec, bvec, t: int, q0: Rational) -> dict:
    """Which readings of the bracket identities hold at this instance."""
    out = {}
    for representation in ("rho", "iota"):
        for formula in ("primary", "alternative"):
            for form in ("derived", "printed"):
                key = f"{representation}-{formula}-{form}"
                out[key] = check_bracket_identity(
                    avec, bvec, t, q0, formula, representation, form
                )
    return out
