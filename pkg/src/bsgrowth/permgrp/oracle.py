"""Brute-force subgroup counts from permutation representations.

A homomorphism BS(a, b) -> Sym(n) is a pair (X, Y) with Y^-1 X^a Y = X^b.
For every X in Sym(n) the admissible Y are exactly the conjugators taking
X^b to X^a, which are built from cycle matchings rather than found by
scanning Sym(n). Each pair is then classified as intransitive, transitive or
primitive, and

    a_n = #transitive / (n-1)!,     m_n = #primitive / (n-1)!.

The same machinery with X restricted to elements of order dividing m and Y
free counts Z * Z/mZ.
"""
from __future__ import annotations

import itertools
import math
from collections.abc import Iterator
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ..growth import BSParams, HallConsistencyError, normalize
from . import _kernels
from .perm import Permutation, compose, cycles, cycle_type, is_primitive, is_transitive, power

MAX_ORACLE_DEGREE = 7
MAX_ENUMERATION_DEGREE = 12

__all__ = [
    "MAX_ORACLE_DEGREE",
    "OracleCounts",
    "RepClass",
    "rep_class",
    "sym_array",
    "centralizer_array",
    "conjugator_array",
    "conjugator_solutions",
    "enumerate_order_dividing",
    "oracle_counts",
    "oracle_free_product",
]


@dataclass(frozen=True)
class OracleCounts:
    n: int
    total: int
    transitive: int
    primitive: int
    subgroups: int
    maximal: int

    def __post_init__(self):
        if not (0 <= self.primitive <= self.transitive <= self.total):
            raise HallConsistencyError(f"need primitive <= transitive <= total: {self}")
        f = math.factorial(self.n - 1)
        if self.transitive % f or self.primitive % f:
            raise HallConsistencyError(f"(n-1)! does not divide the transitive/primitive counts: {self}")
        if self.subgroups != self.transitive // f or self.maximal != self.primitive // f:
            raise HallConsistencyError(f"subgroup counts disagree with representation counts: {self}")

    @classmethod
    def from_reps(cls, n: int, total: int, transitive: int, primitive: int) -> OracleCounts:
        f = math.factorial(n - 1)
        if transitive % f or primitive % f:
            raise HallConsistencyError(f"(n-1)! = {f} does not divide t_n = {transitive} or p_n = {primitive}")
        return cls(n, total, transitive, primitive, transitive // f, primitive // f)


@dataclass(frozen=True)
class RepClass:
    x_image: Permutation
    y_image: Permutation
    satisfies_relation: bool
    transitive: bool
    primitive: bool


def rep_class(x: Permutation, y: Permutation, a: int, b: int) -> RepClass:
    """Classify the pair (x, y) as a candidate image of BS(a, b)'s generators."""
    n = len(x)
    lhs = compose(power(y, -1), compose(power(x, a), y))
    ok = lhs == power(x, b)
    trans = is_transitive([x, y], n)
    prim = trans and n >= 2 and is_primitive([x, y], n)
    return RepClass(x, y, ok, trans, prim)


@lru_cache(maxsize=None)
def sym_array(n: int) -> np.ndarray:
    """All of Sym(n) as an (n!, n) array, lexicographic order."""
    arr = np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(-1, n)
    arr.setflags(write=False)
    return arr


def _cycle_matchings(src: Permutation, dst: Permutation):
    """Per cycle length: (cycles of src, cycles of dst). None if cycle types differ."""
    by_len_src: dict[int, list[tuple[int, ...]]] = {}
    by_len_dst: dict[int, list[tuple[int, ...]]] = {}
    for c in cycles(src):
        by_len_src.setdefault(len(c), []).append(c)
    for c in cycles(dst):
        by_len_dst.setdefault(len(c), []).append(c)
    if {L: len(v) for L, v in by_len_src.items()} != {L: len(v) for L, v in by_len_dst.items()}:
        return None
    return [(by_len_src[L], by_len_dst[L]) for L in sorted(by_len_src)]


@lru_cache(maxsize=None)
def centralizer_array(p: Permutation) -> np.ndarray:
    """Every c with c p = p c, as rows of an array.

    c must carry each cycle of p onto a cycle of the same length, lining up
    with some rotation; choosing the target cycle and the rotation for every
    cycle enumerates the centralizer exactly once.
    """
    n = len(p)
    blocks = _cycle_matchings(p, p)
    per_length = []
    for cyc, _ in blocks:
        L, k = len(cyc[0]), len(cyc)
        options = []
        for targets in itertools.permutations(range(k)):
            for rot in itertools.product(range(L), repeat=k):
                pairs = []
                for t in range(k):
                    src, dst, r = cyc[t], cyc[targets[t]], rot[t]
                    pairs.extend((src[j], dst[(j + r) % L]) for j in range(L))
                options.append(pairs)
        per_length.append(options)
    rows = []
    for combo in itertools.product(*per_length):
        row = [0] * n
        for pairs in combo:
            for s, d in pairs:
                row[s] = d
        rows.append(row)
    arr = np.array(rows, dtype=np.int64).reshape(-1, n)
    arr.setflags(write=False)
    return arr


def conjugator_array(sigma: Permutation, a: int, b: int) -> np.ndarray:
    """All t with t^-1 sigma^a t = sigma^b, one per row (possibly zero rows)."""
    sa, sb = power(sigma, a), power(sigma, b)
    n = len(sigma)
    if cycle_type(sa) != cycle_type(sb):
        return np.empty((0, n), dtype=np.int64)
    # particular solution: t0 carries each cycle of sb onto a cycle of sa, step for step
    t0 = [0] * n
    for src_cycles, dst_cycles in _cycle_matchings(sb, sa):
        for cs, cd in zip(src_cycles, dst_cycles):
            for s, d in zip(cs, cd):
                t0[s] = d
    return centralizer_array(sa)[:, t0]


def conjugator_solutions(sigma: Permutation, a: int, b: int) -> Iterator[Permutation]:
    for row in conjugator_array(tuple(sigma), a, b):
        yield tuple(int(v) for v in row)


def enumerate_order_dividing(m: int, n: int) -> Iterator[Permutation]:
    """Each s in Sym(n) with s^m = 1, exactly once.

    The smallest unplaced point opens a cycle whose length divides m; the
    remaining points of that cycle are an ordered choice from what is left.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if n > MAX_ENUMERATION_DEGREE:
        raise ValueError(f"full enumeration is capped at n = {MAX_ENUMERATION_DEGREE}")
    lengths = [d for d in range(1, m + 1) if m % d == 0]
    img = list(range(n))

    def rec(free: list[int]) -> Iterator[Permutation]:
        if not free:
            yield tuple(img)
            return
        first, rest = free[0], free[1:]
        for d in lengths:
            if d - 1 > len(rest):
                break
            for others in itertools.permutations(rest, d - 1):
                cyc = (first,) + others
                for i, x in enumerate(cyc):
                    img[x] = cyc[(i + 1) % d]
                remaining = [x for x in rest if x not in others]
                yield from rec(remaining)
                for x in cyc:
                    img[x] = x

    yield from rec(list(range(n)))


def _tally(xs, ys_for, threads: int) -> tuple[int, int, int]:
    """Sum (total, transitive, primitive) over the x rows; ys_for(x) gives the y batch."""

    def work(chunk):
        tot = tr = pr = 0
        for x in chunk:
            ys = ys_for(x)
            if len(ys) == 0:
                continue
            flags = _kernels.classify_pairs(np.asarray(x, dtype=np.int64), ys)
            tot += len(ys)
            tr += int(np.count_nonzero(flags >= _kernels.TRANSITIVE))
            pr += int(np.count_nonzero(flags == _kernels.PRIMITIVE))
        return tot, tr, pr

    threads = max(1, int(threads))
    if threads == 1 or len(xs) < 2:
        return work(xs)
    chunks = [xs[i::threads] for i in range(threads)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(work, chunks))
    return tuple(sum(col) for col in zip(*parts))


def _check_degree(n: int) -> None:
    if not 1 <= n <= MAX_ORACLE_DEGREE:
        raise ValueError(f"oracle degree must be in 1..{MAX_ORACLE_DEGREE}, got {n}")


def oracle_counts(params: BSParams | tuple[int, int], n: int, threads: int = 1) -> OracleCounts:
    """Exact hom/transitive/primitive counts for BS(a, b) in degree n."""
    if not isinstance(params, BSParams):
        params = normalize(*params)
    _check_degree(n)
    a, b = params.a, params.b
    xs = [tuple(int(v) for v in row) for row in sym_array(n)]
    total, trans, prim = _tally(xs, lambda x: conjugator_array(x, a, b), threads)
    if n == 1:
        prim = 0  # the trivial action does not come from a maximal subgroup
    return OracleCounts.from_reps(n, total, trans, prim)


def oracle_free_product(m: int, n: int, threads: int = 1) -> OracleCounts:
    """Same counts for Z * Z/mZ = <x, y | x^m>: x of order dividing m, y arbitrary."""
    if m < 1:
        raise ValueError("m must be >= 1")
    _check_degree(n)
    xs = list(enumerate_order_dividing(m, n))
    every = sym_array(n)
    total, trans, prim = _tally(xs, lambda x: every, threads)
    if n == 1:
        prim = 0
    return OracleCounts.from_reps(n, total, trans, prim)
