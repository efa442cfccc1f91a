"""Stirling numbers of both kinds by recurrence.

These are deliberately computed without any power series so they can serve
as an independent check on the series module.
"""
from __future__ import annotations

import math
from functools import lru_cache


def _check(n: int, k: int) -> None:
    if n < 0 or k < 0:
        raise ValueError(f"Stirling numbers need non-negative arguments, got ({n}, {k})")


@lru_cache(maxsize=None)
def _s1(n: int, k: int) -> int:
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0 or k > n:
        return 0
    # s1(n, k) = s1(n-1, k-1) - (n-1) s1(n-1, k)
    return _s1(n - 1, k - 1) - (n - 1) * _s1(n - 1, k)


@lru_cache(maxsize=None)
def _s2(n: int, k: int) -> int:
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0 or k > n:
        return 0
    return _s2(n - 1, k - 1) + k * _s2(n - 1, k)


def _warm(fn, n: int) -> None:
    # build the table row by row so deep first calls stay within the recursion limit
    for m in range(0, n, 64):
        for j in range(m + 1):
            fn(m, j)


def stirling_first(n: int, k: int) -> int:
    """Signed Stirling number of the first kind: (x)_n = sum_k s1(n, k) x^k."""
    _check(n, k)
    _warm(_s1, n)
    return _s1(n, k)


def stirling_second(n: int, k: int) -> int:
    """Stirling number of the second kind: x^n = sum_k s2(n, k) (x)_k."""
    _check(n, k)
    _warm(_s2, n)
    return _s2(n, k)


def stirling_first_signless(n: int, k: int) -> int:
    _check(n, k)
    return (-1) ** (n - k) * stirling_first(n, k) if k <= n else 0


def stirling_second_signed(n: int, k: int) -> int:
    _check(n, k)
    return (-1) ** (n - k) * stirling_second(n, k) if k <= n else 0


def binom(n: int, k: int) -> int:
    return math.comb(n, k) if 0 <= k <= n else 0


def compositions(total: int, parts: int):
    """Ordered tuples of ``parts`` positive integers summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest
