"""Binomial sums T_k and their inverse thresholds tau_k.

T_k(x) = sum_{i=1..k} C(x, i).  For k=2 this is the x-th triangular number
x(x+1)/2.  tau_k(x) is the least t with x <= T_k(t); it is the hard lower
bound on the number of queries needed to search a poset of x elements with
k positive answers allowed, and drives most of the pruning in this package.

Values are exact Python integers (arbitrary precision), so there is no
overflow to check for.
"""
from __future__ import annotations

import math


class BinomialTable:
    """Memo table for T_k(x) with a monotone-search inverse.

    The cache is only ever written with recomputed exact values, so
    concurrent duplicate inserts are harmless.
    """

    def __init__(self, max_k: int = 8):
        if max_k < 1:
            raise ValueError("max_k must be >= 1")
        self.max_k = max_k
        self.cache: dict[tuple[int, int], int] = {}

    def value(self, k: int, x: int) -> int:
        """T_k(x), exactly."""
        if k < 1:
            raise ValueError("k must be >= 1")
        if x < 0:
            raise ValueError("x must be >= 0")
        key = (k, x)
        got = self.cache.get(key)
        if got is None:
            got = sum(math.comb(x, i) for i in range(1, k + 1))
            self.cache[key] = got
        return got

    def tau(self, k: int, x: int) -> int:
        """Least t with x <= T_k(t)."""
        if k < 1:
            raise ValueError("k must be >= 1")
        if x < 0:
            raise ValueError("x must be >= 0")
        if x == 0:
            return 0
        if k == 1:
            return x
        if k == 2:
            # closed-form guess, then settle against the defining inequality
            t = (math.isqrt(8 * x + 1) - 1) // 2
        else:
            t = 1
            while self.value(k, t) < x:
                t *= 2
            t //= 2
        while self.value(k, t) < x:
            t += 1
        while t > 0 and self.value(k, t - 1) >= x:
            t -= 1
        return t


_TABLE = BinomialTable()


def binomial_sum(k: int, x: int) -> int:
    """T_k(x) = sum_{i=1..k} C(x, i)."""
    return _TABLE.value(k, x)


def tau(k: int, x: int) -> int:
    """The unique t >= 0 with T_k(t-1) < x <= T_k(t) (0 for x = 0)."""
    return _TABLE.tau(k, x)


def triangular(x: int) -> int:
    """T_2(x) = x(x+1)/2."""
    return x * (x + 1) // 2
