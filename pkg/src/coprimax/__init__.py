"""coprimax: exact search and proof certificates for subsets of [1, n]
containing no k+1 pairwise coprime integers."""

from .arith import (compute_T_k, count_E, E_elements, in_F_k,
                    largest_prime_factor, make_basis, sieve_primes)
from .conj2 import verify_conjecture2, verify_entry
from .goodsets import is_good_set, is_l_good_under
from .scanner import h_density, scan_H
from .search import check_range, exact_f
from .sets import find_coprime_clique, is_admissible, is_pairwise_coprime
from .tables import builtin_table, load_table, save_table
from .theorems import (builtin_scheme, remark_counterexample, verify_counting,
                       verify_theorem1, verify_theorem2,
                       verify_uniqueness_chain_k4)

__version__ = "0.1.0"

__all__ = [
    "builtin_scheme", "builtin_table", "check_range", "compute_T_k",
    "count_E", "E_elements", "exact_f", "find_coprime_clique", "h_density",
    "in_F_k", "is_admissible", "is_good_set", "is_l_good_under",
    "is_pairwise_coprime", "largest_prime_factor", "load_table", "make_basis",
    "remark_counterexample", "save_table", "scan_H", "sieve_primes",
    "verify_conjecture2", "verify_counting", "verify_entry",
    "verify_theorem1", "verify_theorem2", "verify_uniqueness_chain_k4",
]
