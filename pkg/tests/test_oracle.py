import math

import numpy as np
import pytest

from bsgrowth.growth import (
    count_order_dividing,
    free_product_subgroup_counts,
    gelman_count,
    normalize,
    shalev_upper_bound,
)
from bsgrowth.permgrp.oracle import (
    OracleCounts,
    centralizer_array,
    conjugator_solutions,
    enumerate_order_dividing,
    oracle_counts,
    oracle_free_product,
    rep_class,
    sym_array,
)
from bsgrowth.permgrp.perm import from_cycles, identity, power
from bsgrowth.numth import factorial

from brute import compose, conjugators_brute, perm_pow, sym, transitive


def test_enumerate_order_dividing_examples():
    assert len(list(enumerate_order_dividing(2, 3))) == 4
    assert list(enumerate_order_dividing(1, 5)) == [identity(5)]
    assert len(list(enumerate_order_dividing(3, 3))) == 3


@pytest.mark.parametrize("m", range(1, 7))
def test_enumerate_order_dividing_counts(m):
    for n in range(0 if m == 1 else 1, 9):
        got = list(enumerate_order_dividing(m, n))
        assert len(got) == len(set(got)) == count_order_dividing(m, n)
        assert all(power(p, m) == identity(n) for p in got)


def test_conjugator_examples():
    assert len(list(conjugator_solutions(identity(3), 2, 5))) == 6
    c3 = from_cycles(3, [(0, 1, 2)])
    sols = list(conjugator_solutions(c3, 1, 2))
    assert len(sols) == 3
    assert sorted(sols) == sorted(conjugators_brute(c3, 1, 2))
    assert len(list(conjugator_solutions((1, 0), 2, 2))) == 2


def test_conjugators_match_exhaustive_search():
    for n in range(1, 6):
        for sigma in sym(n):
            for a, b in [(1, 2), (2, 3), (2, 4), (1, -1), (3, 3)]:
                got = sorted(conjugator_solutions(sigma, a, b))
                assert got == sorted(conjugators_brute(sigma, a, b))
                sa = perm_pow(sigma, a)
                if got:
                    cent = [t for t in sym(n) if compose(sa, t) == compose(t, sa)]
                    assert len(got) == len(cent) == len(centralizer_array(sa))


def test_rep_class():
    # a transposition inverts a 3-cycle by conjugation
    x, y = from_cycles(3, [(0, 1, 2)]), (1, 0, 2)
    rc = rep_class(x, y, 1, -1)
    assert rc.satisfies_relation and rc.transitive and rc.primitive
    rc = rep_class((1, 0, 2), identity(3), 1, 2)
    assert not rc.satisfies_relation and not rc.transitive


def test_oracle_examples():
    bs23 = oracle_counts((2, 3), 5)
    assert bs23.subgroups == 6
    assert bs23.maximal == 6
    assert oracle_counts((2, 2), 2).subgroups == 3
    assert oracle_free_product(2, 2).subgroups == 3
    assert oracle_free_product(2, 3).subgroups == 7
    assert oracle_free_product(2, 1).subgroups == 1
    assert oracle_free_product(2, 1).maximal == 0


def test_oracle_hom_totals_match_formula():
    for m in (2, 3):
        for n in range(1, 7):
            assert oracle_free_product(m, n).total == factorial(n) * count_order_dividing(m, n)


def test_oracle_transitive_matches_brute_scan():
    # independent: scan all pairs of Sym(4) directly
    n, (a, b) = 4, (2, 4)
    pairs = [(x, y) for x in sym(n) for y in sym(n)
             if compose(perm_pow(y, -1), compose(perm_pow(x, a), y)) == perm_pow(x, b)]
    got = oracle_counts((a, b), n)
    assert got.total == len(pairs)
    assert got.transitive == sum(transitive([x, y], n) for x, y in pairs)


@pytest.mark.parametrize("ab", [(1, 2), (2, 3), (3, 4), (1, -1), (-2, 3), (5, 1)])
def test_oracle_matches_gelman(ab):
    p = normalize(*ab)
    for n in range(1, 7):
        oc = oracle_counts(p, n)
        assert oc.subgroups == gelman_count(p, n)
        if n > 1 and not all(n % q for q in range(2, n)):
            assert oc.maximal == 0  # composite index


@pytest.mark.parametrize("m", [2, 3])
def test_oracle_matches_hall(m):
    hall = free_product_subgroup_counts(m, 6)
    for n in range(1, 7):
        assert oracle_free_product(m, n).subgroups == hall[n]


@pytest.mark.parametrize("ab", [(2, 4), (2, 2), (3, 6), (4, 6)])
def test_quotient_and_upper_bound(ab):
    p = normalize(*ab)
    for n in range(1, 7):
        oc = oracle_counts(p, n)
        fp = oracle_free_product(p.m, n)
        assert oc.subgroups >= fp.subgroups
        assert oc.maximal <= oc.subgroups
        assert oc.subgroups <= shalev_upper_bound(p, n)


def test_oracle_counts_invariants():
    with pytest.raises(ArithmeticError):
        OracleCounts(3, 10, 5, 0, 2, 0)
    with pytest.raises(ArithmeticError):
        OracleCounts.from_reps(3, 10, 3, 0)
    with pytest.raises(ValueError):
        oracle_counts((2, 3), 8)


def test_threads_do_not_change_totals():
    assert oracle_counts((2, 4), 5, threads=3) == oracle_counts((2, 4), 5)
    assert oracle_free_product(3, 5, threads=2) == oracle_free_product(3, 5)


@pytest.mark.slow
def test_degree_seven():
    assert oracle_counts((2, 3), 7).subgroups == gelman_count(normalize(2, 3), 7) == 8
    assert oracle_free_product(2, 7).subgroups == free_product_subgroup_counts(2, 7)[7]


def test_sym_array():
    assert sym_array(4).shape == (24, 4)
    assert len({tuple(r) for r in sym_array(4)}) == 24
    assert isinstance(sym_array(3), np.ndarray)
