"""Exact integer helpers shared by the growth, asymptotic and oracle code.

Everything here works on Python ints, so there is no overflow at any size
the package uses (factorials into the tens of thousands of digits).
"""
from __future__ import annotations

import math
from functools import reduce

from .logvalue import LogValue

__all__ = [
    "divisors",
    "factorize",
    "radical",
    "tau",
    "binomial",
    "factorial",
    "log_factorial",
    "log_int",
    "is_prime",
]

_WHEEL = (4, 2, 4, 2, 4, 6, 2, 6)


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of ``|n|`` as ``{prime: exponent}``.

    Trial division by 2, 3, 5 and then a mod-30 wheel. Inputs are parameter
    sized (|ab|, or an index n), so nothing cleverer is warranted.
    """
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factorize 0")
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    p, i = 7, 0
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += _WHEEL[i]
        i = (i + 1) & 7
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = factorize(n)
    return f == {n: 1}


def divisors(n: int) -> list[int]:
    """Positive divisors of ``n`` in increasing order."""
    if n <= 0:
        raise ValueError(f"divisors() needs a positive integer, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def radical(k: int) -> int:
    """Product of the distinct primes dividing ``|k|``; radical(+-1) == 1."""
    if k == 0:
        raise ValueError("radical(0) is undefined")
    return reduce(lambda acc, p: acc * p, factorize(k), 1)


def tau(m: int) -> int:
    """Number of positive divisors of ``m``."""
    if m <= 0:
        raise ValueError(f"tau() needs a positive integer, got {m}")
    return math.prod(e + 1 for e in factorize(m).values())


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError("factorial of a negative number")
    return math.factorial(n)


def log_factorial(n: int) -> LogValue:
    """n! in log space, via lgamma (never materializes the big integer)."""
    if n < 0:
        raise ValueError("factorial of a negative number")
    return LogValue(math.lgamma(n + 1.0))


def log_int(x: int) -> float:
    """Natural log of a positive integer of any size.

    ``math.log`` handles big ints by splitting off the binary exponent, so
    the result keeps full double precision well past 10^4 digits.
    """
    if x <= 0:
        raise ValueError("log of a non-positive integer")
    return math.log(x)
