"""Normal coordinates and normal polynomials, each by several independent routes.

The coordinate c(a, b, k) expresses y^a x^b in the normal basis:

    y^a x^b = sum over k of c(a, b, k) * x^(b+k) y^(a-k)

and the normal polynomial npoly(A, k) does the same for a product of mixed
factors x^(a_i) y^(b_i).  Every closed form here has a sibling computed a
different way (recursion, weighted subsets, chain sums, a q=1 binomial
formula, a brute-force map count) plus the rewriting oracle in freealg;
agreement of all routes is what the verification suites assert.
"""

from __future__ import annotations

import functools
import itertools
import math
import re

from . import freealg
from .guards import check_guard
from .qpoly import QPoly, qbracket, qrising, rising

_PAIR_RE = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)")

MonomialSeq = tuple[tuple[int, int], ...]


def parse_monomial_seq(text: str) -> MonomialSeq:
    """Parse `(a1,b1)(a2,b2)...` into a tuple of exponent pairs."""
    pairs = []
    pos = 0
    stripped = text.strip()
    while pos < len(stripped):
        m = _PAIR_RE.match(stripped, pos)
        if not m:
            raise ValueError(f"bad monomial sequence syntax at {stripped[pos:]!r}")
        pairs.append((int(m.group(1)), int(m.group(2))))
        pos = m.end()
    if not pairs:
        raise ValueError("monomial sequence needs at least one (a,b) pair")
    return tuple(pairs)


def monomial_seq_text(pairs: MonomialSeq) -> str:
    return "".join(f"({a},{b})" for a, b in pairs)


# -- the coordinate c(a, b, k) ------------------------------------------------


@functools.lru_cache(maxsize=None)
def c_recursive(a: int, b: int, k: int) -> QPoly:
    """c(a, b, k) by the defining recursion.

    Base case c(0, b, k) = delta(0, k); then
    c(a, b, k) = c(a-1, b, k) * q^(b+k) + c(a-1, b, k-1) * [b+k-1].
    """
    if a < 0 or b < 0:
        raise ValueError("c_recursive needs a, b >= 0")
    if k < 0 or k > a:
        return QPoly.zero()
    if a == 0:
        return QPoly.one()
    out = c_recursive(a - 1, b, k) * QPoly.q_power(b + k)
    if k >= 1:
        out = out + c_recursive(a - 1, b, k - 1) * qbracket(b + k - 1)
    return out


def c_subsets(a: int, b: int, k: int) -> QPoly:
    """c(a, b, k) as a weighted count of k-subsets of {1..a}.

    Weight of a subset A: q^(sum over i not in A of |A intersect [1, i-1]|),
    with the global prefactor [b]^(k) * q^((a-k)b).  Requires b >= 1.
    """
    if b < 1:
        raise ValueError("c_subsets requires b >= 1")
    if a < 0 or k < 0:
        raise ValueError("c_subsets needs a, k >= 0")
    check_guard("subset-sum-a", a)
    if k > a:
        return QPoly.zero()
    counts: dict[int, int] = {}
    for subset in itertools.combinations(range(1, a + 1), k):
        chosen = set(subset)
        seen = 0
        stat = 0
        for i in range(1, a + 1):
            if i in chosen:
                seen += 1
            else:
                stat += seen
        counts[stat] = counts.get(stat, 0) + 1
    inner = QPoly.zero()
    for stat, mult in counts.items():
        inner = inner + QPoly.q_power(stat, mult)
    return qrising(b, k) * QPoly.q_power((a - k) * b) * inner


def c_tform(a: int, b: int, k: int, printed_prefactor: bool = False) -> QPoly:
    """c(a, b, k) as a sum over increasing chains t_1 < ... < t_k in {1..a}.

    Chain weight: q^(sum over s of s*(t_{s+1} - t_s - 1)) with t_{k+1} = a+1.
    The prefactor is [b]^(k); printed_prefactor=True switches to the
    [b-1]^(k) variant so its disagreement can be recorded.
    """
    if b < 1:
        raise ValueError("c_tform requires b >= 1")
    if a < 0 or k < 0:
        raise ValueError("c_tform needs a, k >= 0")
    check_guard("subset-sum-a", a)
    if k > a:
        return QPoly.zero()
    counts: dict[int, int] = {}
    for chain in itertools.combinations(range(1, a + 1), k):
        ts = chain + (a + 1,)
        stat = sum((s + 1) * (ts[s + 1] - ts[s] - 1) for s in range(k))
        counts[stat] = counts.get(stat, 0) + 1
    inner = QPoly.zero()
    for stat, mult in counts.items():
        inner = inner + QPoly.q_power(stat, mult)
    prefactor = qrising(b - 1, k) if printed_prefactor else qrising(b, k)
    return prefactor * QPoly.q_power((a - k) * b) * inner


def c_oracle(a: int, b: int, k: int) -> QPoly:
    """c(a, b, k) read off the rewriting engine applied to y^a x^b."""
    if a < 0 or b < 0 or k < 0:
        raise ValueError("c_oracle needs a, b, k >= 0")
    if k > a:
        return QPoly.zero()
    check_guard("word-length", a + b)
    return freealg.normal_order("y" * a + "x" * b).coefficient(b + k, a - k)


# -- composition enumeration --------------------------------------------------


def compositions_bounded(k: int, bounds) -> list[tuple[int, ...]]:
    """All vectors p with 0 <= p_i <= bounds[i] and sum(p) = k, lexicographic."""
    bounds = tuple(bounds)
    out: list[tuple[int, ...]] = []

    def rec(i: int, left: int, prefix: tuple[int, ...]):
        if i == len(bounds):
            if left == 0:
                out.append(prefix)
            return
        if left > sum(bounds[i:]):
            return
        for p in range(min(left, bounds[i]) + 1):
            rec(i + 1, left - p, prefix + (p,))

    rec(0, k, ())
    return out


def _running_compositions(k: int, b_prefix_sums, n_parts: int) -> list[tuple[int, ...]]:
    """Vectors p with sum k and 0 <= p_i <= b_prefix_sums[i] - sum(p_1..p_{i-1})."""
    out: list[tuple[int, ...]] = []

    def rec(i: int, used: int, prefix: tuple[int, ...]):
        if i == n_parts:
            if used == k:
                out.append(prefix)
            return
        cap = b_prefix_sums[i] - used
        for p in range(0, min(cap, k - used) + 1):
            rec(i + 1, used + p, prefix + (p,))

    rec(0, 0, ())
    return out


# -- normal polynomials -------------------------------------------------------


def _check_seq(pairs) -> MonomialSeq:
    seq = tuple((int(a), int(b)) for a, b in pairs)
    if not seq:
        raise ValueError("monomial sequence needs at least one factor")
    if any(a < 0 or b < 0 for a, b in seq):
        raise ValueError("exponents must be nonnegative")
    return seq


def npoly_q(A, k: int) -> QPoly:
    """Normal polynomial via per-factor coordinates.

    Sums over compositions p of k with p_i <= b_i the products
    c(b_i, |a_{>i}| + |p_{>i}|, p_i) for i = 1..n-1.
    """
    seq = _check_seq(A)
    n = len(seq)
    if k < 0:
        return QPoly.zero()
    if n == 1:
        return QPoly.one() if k == 0 else QPoly.zero()
    avec = [a for a, _ in seq]
    bvec = [b for _, b in seq]
    a_suffix = _suffix_sums(avec)
    total = QPoly.zero()
    for p in compositions_bounded(k, bvec[: n - 1]):
        p_suffix = _suffix_sums(list(p))
        prod = QPoly.one()
        for i in range(n - 1):
            prod = prod * c_recursive(bvec[i], a_suffix[i + 1] + p_suffix[i + 1], p[i])
            if prod.is_zero():
                break
        total = total + prod
    return total


def npoly_q_alt(A, k: int) -> QPoly:
    """Normal polynomial via the running-total variant.

    Sums over compositions p of k with the running bound
    p_i <= b_1+..+b_i - (p_1+..+p_{i-1}) the products
    c(b_1+..+b_i - (p_1+..+p_{i-1}), a_{i+1}, p_i).
    """
    seq = _check_seq(A)
    n = len(seq)
    if k < 0:
        return QPoly.zero()
    if n == 1:
        return QPoly.one() if k == 0 else QPoly.zero()
    avec = [a for a, _ in seq]
    bvec = [b for _, b in seq]
    b_prefix = [sum(bvec[: i + 1]) for i in range(n - 1)]
    total = QPoly.zero()
    for p in _running_compositions(k, b_prefix, n - 1):
        prod = QPoly.one()
        used = 0
        for i in range(n - 1):
            prod = prod * c_recursive(b_prefix[i] - used, avec[i + 1], p[i])
            used += p[i]
            if prod.is_zero():
                break
        total = total + prod
    return total


def npoly_oracle(A, k: int) -> QPoly:
    """Normal polynomial read off the rewriting engine."""
    seq = _check_seq(A)
    total_len = sum(a + b for a, b in seq)
    check_guard("word-length", total_len)
    asum = sum(a for a, _ in seq)
    bsum = sum(b for _, b in seq)
    if k < 0 or k > bsum:
        return QPoly.zero()
    return freealg.monomial(seq).coefficient(asum + k, bsum - k)


def npoly_q1(A, k: int) -> int:
    """The q=1 normal coordinate via binomials and rising factorials."""
    seq = _check_seq(A)
    n = len(seq)
    if k < 0:
        return 0
    if n == 1:
        return 1 if k == 0 else 0
    avec = [a for a, _ in seq]
    bvec = [b for _, b in seq]
    a_suffix = _suffix_sums(avec)
    total = 0
    for p in compositions_bounded(k, bvec[: n - 1]):
        p_suffix = _suffix_sums(list(p))
        prod = 1
        for i in range(n - 1):
            prod *= math.comb(bvec[i], p[i]) * rising(
                a_suffix[i + 1] + p_suffix[i + 1], p[i]
            )
            if prod == 0:
                break
        total += prod
    return total


def _suffix_sums(vec: list[int]) -> list[int]:
    """suffix[i] = sum(vec[i:]); one extra trailing 0 entry."""
    out = [0] * (len(vec) + 1)
    for i in range(len(vec) - 1, -1, -1):
        out[i] = out[i + 1] + vec[i]
    return out


# -- brute-force map counting -------------------------------------------------


@functools.lru_cache(maxsize=None)
def _mk_count_vector(seq: MonomialSeq) -> tuple[int, ...]:
    """counts[k] = number of admissible maps with total image size k.

    Elements of the j-th target block may be claimed by at most one source
    from a strictly later block, or left unclaimed; enumerating one choice
    per target element walks exactly the disjoint-image maps.
    """
    n = len(seq)
    sources = []  # one entry per F-element: its block index
    for i, (a, _) in enumerate(seq):
        sources.extend([i] * a)
    choice_lists = []
    for j, (_, b) in enumerate(seq):
        later = [s for s, blk in enumerate(sources) if blk > j]
        choice_lists.extend([[None] + later] * b)
    bsum = sum(b for _, b in seq)
    counts = [0] * (bsum + 1)
    for assignment in itertools.product(*choice_lists):
        counts[sum(1 for t in assignment if t is not None)] += 1
    return tuple(counts)


def mk_count(A, k: int) -> int:
    """Count admissible maps of total image size k by direct enumeration."""
    seq = _check_seq(A)
    check_guard("map-count-total", sum(a + b for a, b in seq))
    counts = _mk_count_vector(seq)
    if k < 0 or k >= len(counts):
        return 0
    return counts[k]
