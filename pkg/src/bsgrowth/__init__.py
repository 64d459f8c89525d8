"""Subgroup growth of Baumslag-Solitar groups BS(a, b) and of Z * Z/mZ.

Exact counts (Gelman's divisor sum, the semidirect-product derivation sum,
the Hall recursion on hom counts), log-space asymptotic main terms, and a
brute-force permutation-representation oracle to check them against.
"""
from .asymptotic import (
    der_bound,
    divisor_sum_term,
    g_sandwich_check,
    k_m,
    binomial_tail_check,
    few_fixed_decay,
    complement_decay,
    log_f,
    log_g,
    mc_bound,
    ratio_to_main_term,
)
from .growth import (
    BSParams,
    FixCensus,
    GrowthSeries,
    HallConsistencyError,
    census_ratio,
    count_order_dividing,
    derivation_count_z,
    fix_census,
    free_product_subgroup_counts,
    gelman_count,
    gelman_series,
    hall_counts,
    hom_count_free_product,
    max_count_coprime,
    normalize,
    semidirect_count,
    shalev_upper_bound,
    subgroup_count_z_inv_k,
)
from .logvalue import LogValue
from .numth import binomial, divisors, factorial, log_factorial, radical, tau

__version__ = "0.1.0"
