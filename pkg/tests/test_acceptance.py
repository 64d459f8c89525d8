"""One test per acceptance criterion; each prints a PASS/FAIL line through ``report``."""
import math
import time

from bsgrowth import growth
from bsgrowth.asymptotic import few_fixed_decay, complement_decay, log_f, log_g
from bsgrowth.growth import (
    census_ratio,
    count_order_dividing,
    free_product_subgroup_counts,
    gelman_count,
    gelman_series,
    hall_counts,
    hom_count_free_product,
    max_count_coprime,
    normalize,
    order_dividing_counts,
    semidirect_count,
)
from bsgrowth.logvalue import LogValue
from bsgrowth.permgrp.montecarlo import monte_carlo_generation
from bsgrowth.permgrp.oracle import oracle_counts, oracle_free_product

from brute import order_dividing_brute


def _rel_err_f(m, n):
    ratio = LogValue.from_int(count_order_dividing(m, n)) / log_f(m, n)
    return abs(float(ratio) - 1)


def test_c01_coprime_counts_three_ways(report):
    t0 = time.perf_counter()
    bad = []
    for ab in [(1, 2), (2, 3), (3, 4)]:
        p = normalize(*ab)
        for n in range(1, 7):
            vals = (gelman_count(p, n), semidirect_count(p, n), oracle_counts(p, n).subgroups)
            if len(set(vals)) != 1:
                bad.append((ab, n, vals))
    dt = time.perf_counter() - t0
    ok = not bad and dt < 300
    report("C1 gelman = semidirect = oracle, n<=6", ok, f"mismatches={bad} time={dt:.1f}s")
    assert ok


def test_c02_maximal_formula_against_oracle(report):
    p = normalize(2, 3)
    formula = [max_count_coprime(p, n) for n in (2, 3, 4, 5)]
    oracle = [oracle_counts(p, n).maximal for n in (2, 3, 4, 5)]
    ok = formula == oracle
    report("C2 BS(2,3) maximal formula = oracle, n=2..5", ok, f"formula={formula} oracle={oracle}")
    assert ok


def test_c03_free_product_hall_vs_oracle(report):
    t0 = time.perf_counter()
    bad = []
    anchors = None
    for m in (2, 3):
        _, subs = hall_counts(lambda n: hom_count_free_product(m, n), 6)
        for n in range(1, 7):
            o = oracle_free_product(m, n).subgroups
            if subs[n] != o:
                bad.append((m, n, subs[n], o))
        if m == 2:
            anchors = (subs[2], subs[3])
    dt = time.perf_counter() - t0
    ok = not bad and anchors == (3, 7) and dt < 600
    report("C3 Z*Z/mZ hall = oracle, m=2,3, n<=6", ok, f"mismatches={bad} a2,a3={anchors} time={dt:.1f}s")
    assert ok


def test_c04_order_dividing_recurrence(report):
    bad = [(m, n) for m in (2, 3, 4, 6) for n in range(0, 8)
           if count_order_dividing(m, n) != len(order_dividing_brute(m, n))]
    prefix = order_dividing_counts(2, 6)
    ok = not bad and prefix == [1, 1, 2, 4, 10, 26, 76]
    report("C4 E_m recurrence = exhaustive count", ok, f"mismatches={bad} E_2={prefix}")
    assert ok


def test_c05_hom_count_main_term(report):
    t0 = time.perf_counter()
    details, ok = [], True
    for m in (2, 3):
        e100, e2000 = _rel_err_f(m, 100), _rel_err_f(m, 2000)
        details.append(f"m={m}: {e100:.4g} -> {e2000:.4g}")
        ok &= e2000 < e100 and e2000 <= 0.1
    dt = time.perf_counter() - t0
    ok &= dt < 60
    report("C5 |E_m/f - 1| shrinks, <= 0.1 at n=2000", ok, "; ".join(details) + f" time={dt:.1f}s")
    assert ok


def test_c06_subgroup_main_term(report):
    t0 = time.perf_counter()
    _, subs = hall_counts(lambda n: hom_count_free_product(2, n), 500)
    errs = {n: abs(float(LogValue.from_int(subs[n]) / log_g(2, n)) - 1) for n in (50, 500)}
    dt = time.perf_counter() - t0
    ok = errs[500] < 0.15 and errs[500] < errs[50] and dt < 120
    report("C6 |a_n/g - 1| < 0.15 at n=500, m=2", ok, f"n=50: {errs[50]:.4f} n=500: {errs[500]:.4f} time={dt:.1f}s")
    assert ok


def test_c07_fixed_point_census(report):
    grid = (50, 100, 200, 400, 800)
    r = [census_ratio(2, n) for n in grid]
    ok = all(x > y for x, y in zip(r, r[1:])) and r[-1] < 1e-6
    report("C7 census ratio decreasing, < 1e-6 at n=800", ok, " ".join(f"{x:.3g}" for x in r))
    assert ok


def test_c08_decay_quantities(report):
    grid = (1000, 3000, 10000)
    lim = math.log(1e-100)
    fewfixed = [few_fixed_decay(2, n).ln for n in grid]
    complement = [complement_decay(2, n).ln for n in grid]
    dec = lambda xs: all(x > y for x, y in zip(xs, xs[1:]))  # noqa: E731
    ok = fewfixed[-1] < lim and complement[-1] < lim and dec(fewfixed) and dec(complement)
    report("C8 decay quantities < 1e-100, decreasing", ok,
           f"ln fewfixed={[round(x, 1) for x in fewfixed]} ln complement={[round(x, 1) for x in complement]}")
    assert ok


def test_c09_quotient_lower_bound(report):
    p = normalize(2, 4)
    hall = free_product_subgroup_counts(2, 6)
    bad = []
    for n in range(1, 7):
        oc = oracle_counts(p, n)
        if oc.subgroups < hall[n] or oc.maximal > oc.subgroups:
            bad.append((n, oc.subgroups, hall[n], oc.maximal))
    ok = not bad
    report("C9 a_n(BS(2,4)) >= a_n(Z*Z/2Z), m_n <= a_n", ok, f"violations={bad}")
    assert ok


def test_c10_generation_probe(report):
    t0 = time.perf_counter()
    r = monte_carlo_generation(2, 12, 500, seed=42)
    dt = time.perf_counter() - t0
    ok = r.fraction_given_few_fixed >= 0.9 and dt < 120
    report("C10 P(Alt/Sym | few fixed) >= 0.9, n=12", ok,
           f"{r.few_fixed_alt_or_sym}/{r.few_fixed_trials} = {r.fraction_given_few_fixed:.4f} time={dt:.1f}s")
    assert ok


def test_c11_performance(report):
    p = normalize(2, 3)
    t0 = time.perf_counter()
    series = gelman_series(p, 10**6)
    t_gelman = time.perf_counter() - t0
    spot = all(series[n] == gelman_count(p, n) for n in (1, 999_983, 10**6, 720_720))

    growth._E_CACHE.pop(2, None)
    t0 = time.perf_counter()
    e = order_dividing_counts(2, 5000)
    t_e = time.perf_counter() - t0
    exact = isinstance(e[5000], int) and e[5000] == count_order_dividing(2, 5000) and e[5000].bit_length() > 64

    ok = t_gelman < 30 and t_e < 300 and spot and exact
    report("C11 performance", ok,
           f"gelman to 1e6 {t_gelman:.2f}s, E_2 to 5000 {t_e:.2f}s ({e[5000].bit_length()} bits)")
    assert ok
