"""Log-space main terms and decay diagnostics for the gcd(a, b) > 1 case.

Main terms (``log`` is the natural log everywhere)::

    K_m  = m^(-1/2)                 m odd
         = m^(-1/2) exp(-1/(2m))    m even
    f(x) = K_m x^(dx) exp(-dx + sum_{d' | m, d' < m} x^(d'/m) / d'),  d = 1 - 1/m
    g(x) = x f(x)

f(n) ~ E_m(n) = |Hom(Z/mZ, Sym(n))| and g(n) ~ a_n(Z * Z/mZ) ~ a_n(BS(a, b)).
The closed forms are used at real arguments too (g(n/2), f(n - floor(n/ln n))).
"""
from __future__ import annotations

import math

from .logvalue import LogValue
from .numth import binomial, divisors, is_prime, log_int

__all__ = [
    "LogValue",
    "k_m",
    "divisor_sum_term",
    "log_f",
    "log_g",
    "ratio_to_main_term",
    "few_fixed_threshold",
    "binomial_tail_check",
    "few_fixed_decay",
    "complement_decay",
    "g_sandwich_check",
    "der_bound",
    "mc_bound",
]


def _check_m(m: int) -> None:
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")


def k_m(m: int) -> LogValue:
    _check_m(m)
    ln = -0.5 * math.log(m)
    if m % 2 == 0:
        ln -= 1.0 / (2 * m)
    return LogValue(ln)


def divisor_sum_term(m: int, x: float) -> float:
    """sum over proper divisors d of m of x^(d/m) / d."""
    _check_m(m)
    if x <= 0:
        raise ValueError("x must be positive")
    return math.fsum(x ** (d / m) / d for d in divisors(m)[:-1])


def log_f(m: int, x: float) -> LogValue:
    _check_m(m)
    if x < 1:
        raise ValueError("f is evaluated for x >= 1")
    delta = 1.0 - 1.0 / m
    return LogValue(k_m(m).ln + delta * x * math.log(x) - delta * x + divisor_sum_term(m, x))


def log_g(m: int, x: float) -> LogValue:
    return LogValue(math.log(x)) * log_f(m, x)


def ratio_to_main_term(exact: int, m: int, n: int, main: str = "f") -> float:
    """exact / f(n) (``main="f"``) or exact / g(n) (``main="g"``), by log subtraction."""
    if exact <= 0:
        raise ValueError("exact count must be positive")
    if main == "f":
        ref = log_f(m, n)
    elif main == "g":
        ref = log_g(m, n)
    else:
        raise ValueError(f"unknown main term {main!r}")
    return float(LogValue(log_int(exact)) / ref)


def few_fixed_threshold(n: int) -> int:
    return math.floor(n / math.log(n))


def _log_binomial(n: int, k: int) -> LogValue:
    return LogValue.from_int(binomial(n, k))


def binomial_tail_check(n: int) -> tuple[LogValue, LogValue]:
    """(C(n, t), exp(3 t ln ln n)) with t = floor(n/ln n), both in log space.

    Only meaningful from n = 16 on (ln ln n > 1 there).
    """
    if n < 16:
        raise ValueError("binomial bound check needs n >= 16")
    t = few_fixed_threshold(n)
    return _log_binomial(n, t), LogValue(3 * t * math.log(math.log(n)))


def few_fixed_decay(m: int, n: int) -> LogValue:
    """C(n, t) f(n - t) / f(n) with t = floor(n/ln n)."""
    _check_m(m)
    if n < 16:
        raise ValueError("needs n >= 16")
    t = few_fixed_threshold(n)
    return _log_binomial(n, t) * log_f(m, n - t) / log_f(m, n)


def complement_decay(m: int, n: int) -> LogValue:
    """n 3^(2n/3) g(n/2) / g(n)."""
    _check_m(m)
    if n < 4:
        raise ValueError("needs n >= 4")
    ln = math.log(n) + (2 * n / 3) * math.log(3)
    return LogValue(ln) * log_g(m, n / 2) / log_g(m, n)


def g_sandwich_check(m: int, n: float) -> tuple[LogValue, LogValue, LogValue]:
    """(K n (n/e)^(dn),  g(n),  K n (n/e)^(dn) e^n) with d = 1 - 1/m."""
    _check_m(m)
    if n < m:
        raise ValueError("sandwich holds for n >= m")
    delta = 1.0 - 1.0 / m
    lower = LogValue(k_m(m).ln + math.log(n) + delta * n * (math.log(n) - 1.0))
    return lower, log_g(m, n), LogValue(lower.ln + n)


def der_bound(n: int, d: int) -> LogValue:
    """min(d^(2n/d), 3^(2n/3)): derivations from a subgroup of index n/d into A/A_0."""
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    return LogValue(min((2 * n / d) * math.log(d), (2 * n / 3) * math.log(3)))


def mc_bound(n: int) -> int:
    """Bound on maximal subgroups of index n not containing the abelian normal subgroup."""
    if n < 2:
        raise ValueError("needs n >= 2")
    return n * n if is_prime(n) else 0
