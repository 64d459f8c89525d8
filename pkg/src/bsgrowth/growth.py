"""Exact subgroup-growth sequences.

Counts here are Python ints throughout. The two exact routes for the
coprime Baumslag-Solitar case (``gelman_count`` and ``semidirect_count``)
deliberately share no summation code: one is a multiplicative product over
the factorization of n, the other a sum over subgroup pairs of the
semidirect product Z[1/ab] x| Z.
"""
from __future__ import annotations

import enum
import math
from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .numth import binomial, divisors, factorial, factorize, is_prime, radical

__all__ = [
    "BSParams",
    "normalize",
    "SeriesKind",
    "Method",
    "GroupKind",
    "Group",
    "GrowthSeries",
    "FixCensus",
    "HallConsistencyError",
    "count_order_dividing",
    "order_dividing_counts",
    "hom_count_free_product",
    "hall_counts",
    "free_product_subgroup_counts",
    "gelman_count",
    "gelman_series",
    "subgroup_count_z_inv_k",
    "derivation_count_z",
    "semidirect_count",
    "max_count_coprime",
    "fixed_point_free_count",
    "fix_census",
    "census_threshold",
    "census_tail_fraction",
    "census_ratio",
    "shalev_upper_bound",
]


@dataclass(frozen=True)
class BSParams:
    """Normalized parameters of BS(a, b): a = m*u, b = m*v with gcd(u, v) = 1."""

    a: int
    b: int
    m: int
    u: int
    v: int
    rad_uv: int

    def __post_init__(self):
        if self.a == 0 or self.b == 0:
            raise ValueError("BS(a, b) needs nonzero a and b")
        if self.m * self.u != self.a or self.m * self.v != self.b:
            raise ValueError("inconsistent BSParams: m*u != a or m*v != b")
        if self.m < 1 or math.gcd(self.u, self.v) != 1:
            raise ValueError("inconsistent BSParams: m < 1 or gcd(u, v) != 1")
        if self.rad_uv != radical(self.u * self.v):
            raise ValueError("inconsistent BSParams: rad_uv")

    @property
    def coprime(self) -> bool:
        return self.m == 1

    def __str__(self) -> str:
        return f"BS({self.a},{self.b})"


def normalize(a: int, b: int) -> BSParams:
    if a == 0 or b == 0:
        raise ValueError(f"BS(a, b) needs nonzero a and b, got ({a}, {b})")
    m = math.gcd(abs(a), abs(b))
    u, v = a // m, b // m
    return BSParams(a, b, m, u, v, radical(u * v))


class SeriesKind(enum.Enum):
    ALL_SUBGROUPS = "subgroups"
    MAXIMAL_SUBGROUPS = "maximal"
    TRANSITIVE_REPS = "transitive"
    PRIMITIVE_REPS = "primitive"
    HOM_COUNTS = "hom"


class Method(enum.Enum):
    GELMAN = "gelman"
    SEMIDIRECT = "semidirect"
    HALL = "hall"
    ORACLE = "oracle"
    CLOSED_FORM = "closedform"


class GroupKind(enum.Enum):
    BS = "bs"
    FREE_PRODUCT = "freeproduct"
    Z = "z"
    Z_INV_K = "zinvk"


@dataclass(frozen=True)
class Group:
    kind: GroupKind
    params: BSParams | None = None
    m: int | None = None
    k: int | None = None

    @classmethod
    def bs(cls, params: BSParams) -> Group:
        return cls(GroupKind.BS, params=params)

    @classmethod
    def free_product(cls, m: int) -> Group:
        return cls(GroupKind.FREE_PRODUCT, m=m)

    @classmethod
    def z(cls) -> Group:
        return cls(GroupKind.Z)

    @classmethod
    def z_inv_k(cls, k: int) -> Group:
        return cls(GroupKind.Z_INV_K, k=k)

    def __str__(self) -> str:
        if self.kind is GroupKind.BS:
            return str(self.params)
        if self.kind is GroupKind.FREE_PRODUCT:
            return f"Z*Z/{self.m}Z"
        if self.kind is GroupKind.Z_INV_K:
            return f"Z[1/{self.k}]"
        return "Z"


@dataclass
class GrowthSeries:
    """Exact values ``n -> count`` together with where they came from."""

    kind: SeriesKind
    group: Group
    method: Method
    values: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        for n, v in self.values.items():
            if v < 0:
                raise ValueError(f"negative count {v} at n={n}")
        if self.kind is SeriesKind.ALL_SUBGROUPS and self.values.get(1, 1) != 1:
            raise ValueError("a group has exactly one subgroup of index 1")

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)

    def indices(self) -> list[int]:
        return sorted(self.values)

    def as_list(self) -> list[int]:
        return [self.values[n] for n in self.indices()]


class HallConsistencyError(ArithmeticError):
    """Raised when a hom sequence yields t_n < 0 or (n-1)! does not divide t_n."""


# ---------------------------------------------------------------------------
# Hom(Z/mZ, Sym(n)) and the free product Z * Z/mZ

_E_CACHE: dict[int, list[int]] = {}


def order_dividing_counts(m: int, N: int) -> list[int]:
    """[E_m(0), ..., E_m(N)] where E_m(n) = #{s in Sym(n) : s^m = 1}.

    Recurrence on the cycle through the point n: its length d divides m, and
    there are (n-1)!/(n-d)! ways to fill it.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if N < 0:
        raise ValueError("N must be >= 0")
    e = _E_CACHE.setdefault(m, [1])
    if len(e) <= N:
        divs = divisors(m)
        for n in range(len(e), N + 1):
            total = 0
            falling = 1  # (n-1)!/(n-d)! for the current d
            prev_d = 1
            for d in divs:
                if d > n:
                    break
                for j in range(prev_d, d):
                    falling *= n - j
                prev_d = d
                total += falling * e[n - d]
            e.append(total)
    return e[: N + 1]


def count_order_dividing(m: int, n: int) -> int:
    return order_dividing_counts(m, n)[n]


def hom_count_free_product(m: int, n: int) -> int:
    """|Hom(Z * Z/mZ, Sym(n))| = n! * E_m(n): y is free, x has order dividing m."""
    return factorial(n) * count_order_dividing(m, n)


def _as_callable(hom) -> Callable[[int], int]:
    if callable(hom):
        return hom
    if isinstance(hom, (Mapping, Sequence)):
        return hom.__getitem__
    raise TypeError("hom sequence must be callable or indexable by n")


def hall_counts(hom, N: int, group: Group | None = None) -> tuple[GrowthSeries, GrowthSeries]:
    """Transitive-representation and subgroup counts from hom counts.

    ``hom(n)`` is |Hom(G, Sym(n))| for n = 1..N (h_0 = 1 is implied). The
    transitive count peels off the orbit of the point 1:

        t_n = h_n - sum_{k=1}^{n-1} C(n-1, k-1) t_k h_{n-k},

    and a_n = t_n / (n-1)!. Negative t_n or an inexact division means the
    input was not a hom sequence; that raises rather than being patched.
    """
    h = _as_callable(hom)
    group = group or Group(GroupKind.Z)
    hs = [1] + [int(h(n)) for n in range(1, N + 1)]
    if N >= 1 and hs[1] != 1:
        raise HallConsistencyError(f"h_1 must be 1, got {hs[1]}")
    t = [0] * (N + 1)
    trans, subs = {}, {}
    fact = 1  # (n-1)!
    for n in range(1, N + 1):
        if n > 1:
            fact *= n - 1
        acc = hs[n]
        c = 1  # C(n-1, k-1)
        for k in range(1, n):
            acc -= c * t[k] * hs[n - k]
            c = c * (n - k) // k
        if acc < 0:
            raise HallConsistencyError(f"t_{n} = {acc} < 0")
        q, r = divmod(acc, fact)
        if r:
            raise HallConsistencyError(f"(n-1)! does not divide t_{n} at n={n}")
        t[n] = acc
        trans[n] = acc
        subs[n] = q
    return (
        GrowthSeries(SeriesKind.TRANSITIVE_REPS, group, Method.HALL, trans),
        GrowthSeries(SeriesKind.ALL_SUBGROUPS, group, Method.HALL, subs),
    )


_HALL_CACHE: dict[int, list[int]] = {}


def free_product_subgroup_counts(m: int, N: int) -> list[int]:
    """[a_0 (unused, 0), a_1, ..., a_N] for Z * Z/mZ via the Hall recursion."""
    cached = _HALL_CACHE.get(m)
    if cached is None or len(cached) <= N:
        _, subs = hall_counts(lambda n: hom_count_free_product(m, n), N, Group.free_product(m))
        cached = [0] + subs.as_list()
        _HALL_CACHE[m] = cached
    return cached[: N + 1]


# ---------------------------------------------------------------------------
# gcd(a, b) = 1: exact formulas


def _require_coprime(params: BSParams) -> None:
    if params.m != 1:
        raise ValueError(f"{params} has gcd {params.m} > 1; the coprime formulas do not apply")


def gelman_count(params: BSParams, n: int) -> int:
    """Sum of the divisors of n that are coprime to ab.

    Computed multiplicatively: sigma(p^e) for each prime power exactly
    dividing n, skipping primes that divide ab.
    """
    _require_coprime(params)
    if n < 1:
        raise ValueError("index must be >= 1")
    total = 1
    for p, e in factorize(n).items():
        if params.rad_uv % p:
            total *= (p ** (e + 1) - 1) // (p - 1)
    return total


def gelman_series(params: BSParams, N: int) -> GrowthSeries:
    """Gelman counts for n = 1..N with a divisor sieve (int64 is ample here)."""
    _require_coprime(params)
    acc = np.zeros(N + 1, dtype=np.int64)
    rad = params.rad_uv
    for d in range(1, N + 1):
        if math.gcd(d, rad) == 1:
            acc[d::d] += d
    values = dict(zip(range(1, N + 1), acc[1:].tolist()))
    return GrowthSeries(SeriesKind.ALL_SUBGROUPS, Group.bs(params), Method.GELMAN, values)


def subgroup_count_z_inv_k(k: int, n: int) -> int:
    """Index-n subgroups of Z[1/k]: one if n is coprime to k, else none."""
    if k == 0:
        raise ValueError("Z[1/0] is not defined")
    return 1 if math.gcd(n, radical(k)) == 1 else 0


def derivation_count_z(d: int) -> int:
    """|Der(Z, Z/dZ)|: a derivation on a free group is fixed by one free choice."""
    if d < 1:
        raise ValueError("d must be >= 1")
    return d


def semidirect_count(params: BSParams, n: int) -> int:
    """Subgroups of index n in Z[1/ab] x| Z, summed over (A_0, B_0) pairs.

    A_0 <= Z[1/ab] of index d (at most one, and always an ideal, hence
    invariant), B_0 <= Z of index n/d (exactly one), each pair contributing
    |Der(B_0, A/A_0)| = d.
    """
    _require_coprime(params)
    if n < 1:
        raise ValueError("index must be >= 1")
    ab = params.a * params.b
    total = 0
    for d in divisors(n):
        total += subgroup_count_z_inv_k(1, n // d) * subgroup_count_z_inv_k(ab, d) * derivation_count_z(d)
    return total


def max_count_coprime(params: BSParams, n: int) -> int:
    """Maximal subgroups of index n in BS(a, b), gcd(a, b) = 1 (closed formula).

    p + 1 at primes p not dividing ab, 0 everywhere else. At primes p | ab
    the true count is 1 (the unique index-p subgroup has prime index), which
    the permutation oracle reports; this function returns the formula value.
    """
    _require_coprime(params)
    if n < 1:
        raise ValueError("index must be >= 1")
    if not is_prime(n):
        return 0
    return n + 1 if params.rad_uv % n else 0


# ---------------------------------------------------------------------------
# fixed-point census of M(n) = {s in Sym(n) : s^m = 1}


@dataclass(frozen=True)
class FixCensus:
    """counts[k] = number of s in Sym(n) with s^m = 1 and exactly k fixed points."""

    m: int
    n: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != self.n + 1:
            raise ValueError("census needs n + 1 entries")

    @property
    def total(self) -> int:
        return sum(self.counts)


_F_CACHE: dict[int, list[int]] = {}


def fixed_point_free_count(m: int, j: int) -> int:
    """Fixed-point-free s in Sym(j) with s^m = 1, by inclusion-exclusion on E_m."""
    f = _F_CACHE.setdefault(m, [])
    if len(f) <= j:
        e = order_dividing_counts(m, j)
        for jj in range(len(f), j + 1):
            total = 0
            c = 1
            for i in range(jj + 1):
                term = c * e[jj - i]
                total += -term if i & 1 else term
                c = c * (jj - i) // (i + 1)
            f.append(total)
    return f[j]


def fix_census(m: int, n: int) -> FixCensus:
    if m < 1 or n < 0:
        raise ValueError("need m >= 1 and n >= 0")
    fixed_point_free_count(m, n)
    f = _F_CACHE[m]
    counts = tuple(binomial(n, k) * f[n - k] for k in range(n + 1))
    return FixCensus(m, n, counts)


def census_threshold(n: int) -> int:
    """floor(n / ln n), the fixed-point cutoff."""
    if n < 2:
        raise ValueError("threshold needs n >= 2")
    return math.floor(n / math.log(n))


def census_tail_fraction(m: int, n: int) -> Fraction:
    """Exact |B(n)| / |M(n)|: share of M(n) with at least floor(n/ln n) fixed points."""
    if m < 2 or n < 3:
        raise ValueError("census ratio needs m >= 2 and n >= 3")
    census = fix_census(m, n)
    thr = census_threshold(n)
    return Fraction(sum(census.counts[thr:]), census.total)


def census_ratio(m: int, n: int) -> float:
    return float(census_tail_fraction(m, n))


# ---------------------------------------------------------------------------
# gcd(a, b) > 1: upper bound


def shalev_upper_bound(params: BSParams, n: int) -> int:
    """Upper bound on a_n(BS(a, b)) when gcd(a, b) = m > 1.

    sum over d | n of a_{n/d}(Z * Z/mZ) * [gcd(d, uv) = 1] * D(n, d), with the
    derivation bound D(n, d) = min(d^(2n/d), 3^(2n/3)). Since d^(1/d) <= 3^(1/3)
    for every positive integer d, the minimum is always the integer d^(2n/d).
    """
    if params.m == 1:
        raise ValueError(f"{params} is coprime; use gelman_count")
    if n < 1:
        raise ValueError("index must be >= 1")
    a = free_product_subgroup_counts(params.m, n)
    total = 0
    for d in divisors(n):
        if math.gcd(d, params.rad_uv) == 1:
            total += a[n // d] * d ** (2 * n // d)
    return total
