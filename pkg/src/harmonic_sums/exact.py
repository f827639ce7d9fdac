"""Exact scalar arithmetic: binomials, integer powers, Bernoulli numbers.

Everything in this package computes over arbitrary-precision rationals
(``fractions.Fraction``); there is no floating point anywhere.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction

__all__ = ["BernoulliCache", "bernoulli_plus", "binomial", "int_pow"]


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k), with C(n, k) = 0 for k < 0 or k > n."""
    if n < 0:
        raise ValueError(f"binomial: n must be nonnegative, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def int_pow(base: int | Fraction, exp: int) -> Fraction:
    """base**exp as an exact Fraction, with the convention 0**0 = 1.

    This is the single choke point for powers, so the 0**0 = 1 rule is
    applied consistently across the package (it is what makes the zero
    offset collapse onto the plain sums).
    """
    if exp == 0:
        return Fraction(1)
    base = Fraction(base)
    if not base and exp < 0:
        raise ValueError("int_pow: zero base with negative exponent")
    return base**exp


class BernoulliCache:
    """Append-only cache of Bernoulli numbers in the B_1 = +1/2 convention.

    Values are computed once from the defining recurrence

        B_m = -1/(m+1) * sum_{j=0}^{m-1} C(m+1, j) B_j      (B_1 = -1/2 kind)

    and the sign of the index-1 entry flipped on the way out (odd indices
    >= 3 vanish, so index 1 is the only one the convention changes).
    Growth is lock-guarded; readers always see a consistent prefix and the
    same index always yields the same value.
    """

    def __init__(self) -> None:
        self._first_kind: list[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._first_kind)

    def get(self, k: int) -> Fraction:
        if k < 0:
            raise ValueError(f"Bernoulli index must be nonnegative, got {k}")
        if k >= len(self._first_kind):
            with self._lock:
                self._grow(k)
        value = self._first_kind[k]
        return -value if k == 1 else value

    def _grow(self, k: int) -> None:
        values = self._first_kind
        for m in range(len(values), k + 1):
            acc = Fraction(0)
            for j, b_j in enumerate(values):
                acc += binomial(m + 1, j) * b_j
            values.append(-acc / (m + 1))


_CACHE = BernoulliCache()


def bernoulli_plus(k: int) -> Fraction:
    """The k-th Bernoulli number with the +1/2 convention at index 1."""
    return _CACHE.get(k)
