"""Permutation-representation oracle: enumeration, classification, Monte Carlo."""
from .montecarlo import MonteCarloResult, monte_carlo_generation, sample_order_dividing
from .oracle import (
    MAX_ORACLE_DEGREE,
    OracleCounts,
    RepClass,
    conjugator_solutions,
    enumerate_order_dividing,
    oracle_counts,
    oracle_free_product,
    rep_class,
)
from .perm import (
    Permutation,
    fix_count,
    from_cycles,
    group_order,
    is_alt_or_sym,
    is_primitive,
    orbits,
)
