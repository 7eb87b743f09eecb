"""Enumeration guards shared by the whole package.

Every brute-force enumeration in the library is capped at a desk-scale
default.  Setting the environment variable QWEYL_MAX_GUARD to an integer
raises (never lowers) all caps at once.
"""

from __future__ import annotations

import os

ENV_VAR = "QWEYL_MAX_GUARD"

# Default caps, keyed by guard name so error messages can say which one fired.
DEFAULTS = {
    "inversion-gf-n": 9,       # |S_n| terms enumerated
    "word-length": 64,         # letters fed to the rewriting engine
    "subset-sum-a": 20,        # 2^a subsets enumerated
    "map-count-total": 14,     # exponential assignment enumeration
    "sym-tensor-n": 4,         # (n!)^(m-1) permutation tuples
    "sym-factors-m": 4,
}


class GuardError(ValueError):
    """An input exceeded an enumeration guard."""


def guard_limit(name: str) -> int:
    limit = DEFAULTS[name]
    raw = os.environ.get(ENV_VAR)
    if raw:
        limit = max(limit, int(raw))
    return limit


def check_guard(name: str, value: int) -> None:
    """Raise GuardError when value exceeds the (possibly raised) cap."""
    limit = guard_limit(name)
    if value > limit:
        raise GuardError(
            f"{name} guard: {value} exceeds limit {limit} "
            f"(set {ENV_VAR} to raise)"
        )
