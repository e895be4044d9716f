"""Small integer helpers shared by the classifiers."""
from __future__ import annotations

from functools import lru_cache
from math import isqrt

_TRIAL_LIMIT = 10**12


def exact_sqrt(n: int) -> int | None:
    """Nonnegative ``m`` with ``m*m == n``, else None."""
    if n < 0:
        return None
    m = isqrt(n)
    return m if m * m == n else None


@lru_cache(maxsize=4096)
def _small_divisors(n: int) -> tuple[int, ...]:
    lo, hi = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            lo.append(i)
            if i * i != n:
                hi.append(n // i)
        i += 1
    return tuple(lo + hi[::-1])


def positive_divisors(n: int) -> tuple[int, ...]:
    """Sorted positive divisors of ``|n|``; ``n`` must be nonzero."""
    n = abs(n)
    if n == 0:
        raise ValueError("0 has infinitely many divisors")
    if n < _TRIAL_LIMIT:
        return _small_divisors(n)
    from sympy import divisors

    return tuple(int(x) for x in divisors(n))


def signed_divisors(n: int) -> tuple[int, ...]:
    pos = positive_divisors(n)
    return tuple(-x for x in reversed(pos)) + pos
