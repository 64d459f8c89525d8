"""Seeded Monte Carlo: how often does a random element of M(n) plus a random
permutation generate Alt(n) or Sym(n)?

Elements of M(n) = {g in Sym(n) : g^m = 1} are drawn exactly uniformly
without enumerating M(n): the number of fixed points k is drawn with the
exact census weights C(n, k) F(n - k), then a uniform fixed-point-free
element on the other n - k points is built cycle by cycle.
"""
from __future__ import annotations

import math
import random
from dataclasses import asdict, dataclass

import numpy as np

from ..growth import fix_census, fixed_point_free_count
from ..numth import divisors
from .perm import Permutation, fix_count, is_alt_or_sym

__all__ = ["MonteCarloResult", "sample_order_dividing", "monte_carlo_generation"]


@dataclass(frozen=True)
class MonteCarloResult:
    m: int
    n: int
    trials: int
    seed: int
    threshold: int
    alt_or_sym: int
    few_fixed_trials: int
    few_fixed_alt_or_sym: int
    fraction_alt_or_sym: float
    fraction_given_few_fixed: float

    def to_dict(self) -> dict:
        return asdict(self)


def _weighted_index(rng: random.Random, weights) -> int:
    r = rng.randrange(sum(weights))
    for i, w in enumerate(weights):
        if r < w:
            return i
        r -= w
    raise AssertionError("unreachable")


def _fixed_point_free(m: int, points: list[int], rng: random.Random, img: list[int]) -> None:
    lengths = [d for d in divisors(m) if d > 1]
    pts = list(points)
    while pts:
        j = len(pts)
        # cycle through pts[0] has length d with weight (j-1)!/(j-d)! * F(j-d)
        weights = [
            math.perm(j - 1, d - 1) * fixed_point_free_count(m, j - d) if d <= j else 0
            for d in lengths
        ]
        d = lengths[_weighted_index(rng, weights)]
        first, rest = pts[0], pts[1:]
        others = rng.sample(rest, d - 1)
        cyc = [first] + others
        for i, x in enumerate(cyc):
            img[x] = cyc[(i + 1) % d]
        chosen = set(others)
        pts = [x for x in rest if x not in chosen]


def sample_order_dividing(m: int, n: int, rng: random.Random) -> Permutation:
    """A uniform element of {g in Sym(n) : g^m = 1}."""
    census = fix_census(m, n)
    k = _weighted_index(rng, census.counts)
    fixed = set(rng.sample(range(n), k))
    img = list(range(n))
    _fixed_point_free(m, [x for x in range(n) if x not in fixed], rng, img)
    return tuple(img)


def _trial_rng(seed: int, trial: int) -> random.Random:
    state = np.random.SeedSequence([seed, trial]).generate_state(4, dtype=np.uint64)
    return random.Random(int.from_bytes(state.tobytes(), "little"))


def monte_carlo_generation(m: int, n: int, trials: int, seed: int) -> MonteCarloResult:
    """Fractions of trials where <g, s> is Alt(n) or Sym(n), overall and given few fixed points.

    "Few" means fix_count(g) <= floor(n / ln n). Trial i draws from its own
    stream keyed by (seed, i), so results do not depend on evaluation order.
    """
    if not 3 <= n <= 20:
        raise ValueError(f"n must be in 3..20, got {n}")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if m < 2:
        raise ValueError("m must be >= 2")
    thr = math.floor(n / math.log(n))
    hits = few = few_hits = 0
    for i in range(trials):
        rng = _trial_rng(seed, i)
        g = sample_order_dividing(m, n, rng)
        s = list(range(n))
        rng.shuffle(s)
        ok = is_alt_or_sym([g, tuple(s)], n)
        hits += ok
        if fix_count(g) <= thr:
            few += 1
            few_hits += ok
    return MonteCarloResult(
        m=m,
        n=n,
        trials=trials,
        seed=seed,
        threshold=thr,
        alt_or_sym=hits,
        few_fixed_trials=few,
        few_fixed_alt_or_sym=few_hits,
        fraction_alt_or_sym=hits / trials,
        fraction_given_few_fixed=few_hits / few if few else math.nan,
    )
