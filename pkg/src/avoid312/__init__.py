"""Consecutive patterns of length 3 on 3-1-2-avoiding permutations.

Bijections to Dyck and Motzkin paths, occurrence statistics, and the
distribution tables ``a^tau_{n,k}`` computed by closed form, automaton DP,
generating-function expansion, and brute force.
"""

from .bijections import (
    delta_hat, krattenthaler, krattenthaler_inverse, mu, mu_inverse, nu, nu_inverse,
)
from .paths import (
    DyckPath, FixedFactor, MotzkinPath, Stat, count_statistic, deutsch, enumerate_dyck,
    enumerate_motzkin, first_return_decompose, irreducible_components, parse_dyck,
)
from .perm import (
    Mode, PatternQuery, Permutation, avoids_312, count_occurrences, enumerate_avoiders,
    ltr_decompose, standardize,
)

__version__ = "0.1.0"
