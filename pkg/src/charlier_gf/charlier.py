"""Charlier, Stirling and derangement polynomial families."""

from __future__ import annotations

import itertools
from collections import Counter
from functools import lru_cache
from math import comb

from .polyring import ParamSet, Polynomial

DEFAULT_PERMUTATION_CAP = 10

_DERANGEMENT_RING = ParamSet(("alpha", "u"))
_ALPHA_RING = ParamSet(("alpha",))


class EnumerationCapError(ValueError):
    """Raised when a factorial-sized enumeration exceeds its configured cap."""


def _as_poly(p, ring: ParamSet | None = None) -> Polynomial:
    if isinstance(p, Polynomial):
        return p
    if isinstance(p, str):
        return (ring or ParamSet((p,))).var(p)
    return (ring or ParamSet(())).const(p)


@lru_cache(maxsize=4096)
def _rising(p: Polynomial, m: int) -> Polynomial:
    if m == 0:
        return p.ring.one()
    return _rising(p, m - 1) * (p + (m - 1))


def rising_factorial(p, m: int) -> Polynomial:
    """(p)_m = p (p+1) ... (p+m-1); accepts a Polynomial, a name or a number."""
    if m < 0:
        raise ValueError(f"rising factorial needs m >= 0, got {m}")
    return _rising(_as_poly(p), m)


@lru_cache(maxsize=None)
def stirling_cycle(n: int, k: int) -> int:
    """Unsigned Stirling number of the first kind; 0 outside 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        return 0
    if n == 0:
        return 1 if k == 0 else 0
    return stirling_cycle(n - 1, k - 1) + (n - 1) * stirling_cycle(n - 1, k)


def _pair_ring(a, r) -> tuple[Polynomial, Polynomial]:
    if isinstance(a, str) and isinstance(r, str):
        ring = ParamSet((a, r))
        return ring.var(a), ring.var(r)
    if isinstance(a, Polynomial):
        return a, _as_poly(r, a.ring)
    if isinstance(r, Polynomial):
        return _as_poly(a, r.ring), r
    ring = ParamSet(tuple(x for x in (a, r) if isinstance(x, str)))
    return _as_poly(a, ring), _as_poly(r, ring)


def charlier_C(n: int, a="a", r="r") -> Polynomial:
    """Renormalized Charlier polynomial sum_k binom(n,k) (a)_k r^(n-k).

    ``a`` and ``r`` may be names (a fresh two-variable ring is used),
    Polynomials sharing a ring, or numbers.
    """
    if n < 0:
        raise ValueError(f"charlier_C needs n >= 0, got {n}")
    a, r = _pair_ring(a, r)
    total = a.ring.zero()
    for k in range(n + 1):
        total = total + comb(n, k) * rising_factorial(a, k) * r ** (n - k)
    return total


def charlier_classical(n: int, a="a", r="r") -> Polynomial:
    """r^n * c_n(a, r) = sum_k binom(n,k) (-a)_k r^(n-k).

    The classical polynomial carries r^-1, so it is returned with the
    denominator cleared.
    """
    if n < 0:
        raise ValueError(f"charlier_classical needs n >= 0, got {n}")
    a, r = _pair_ring(a, r)
    total = a.ring.zero()
    for k in range(n + 1):
        total = total + comb(n, k) * rising_factorial(-a, k) * r ** (n - k)
    return total


def _cycle_lengths(perm: tuple[int, ...]) -> list[int]:
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        lengths.append(length)
    return lengths


def permutation_statistics(n: int, cap: int = DEFAULT_PERMUTATION_CAP) -> Counter:
    """Counter of (cycles of length > 1, fixed points) over all of S_n.

    Permutations are visited in lexicographic one-line order.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > cap:
        raise EnumerationCapError(f"n={n} exceeds the permutation cap {cap}")
    stats: Counter = Counter()
    for perm in itertools.permutations(range(n)):
        lengths = _cycle_lengths(perm)
        fixed = lengths.count(1)
        stats[(len(lengths) - fixed, fixed)] += 1
    return stats


@lru_cache(maxsize=None)
def derangement_poly2(n: int, cap: int = DEFAULT_PERMUTATION_CAP) -> Polynomial:
    """D_n(alpha, u) by brute force: alpha per nontrivial cycle, u per fixed point."""
    stats = permutation_statistics(n, cap)
    return Polynomial.from_terms(_DERANGEMENT_RING, dict(stats))


def derangement_poly(n: int, cap: int = DEFAULT_PERMUTATION_CAP) -> Polynomial:
    """D_n(alpha) = D_n(alpha, 0), derangements of [n] counted by cycles."""
    return derangement_poly2(n, cap).subs({"u": 0}, _ALPHA_RING)
