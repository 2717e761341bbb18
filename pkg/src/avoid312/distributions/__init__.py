"""Counting results: sequences, closed forms, DP, generating functions, brute force."""

from __future__ import annotations

from collections.abc import Sequence

from ..patterns import PATTERN_STATISTIC, check_tau
from .automaton import MarkedAutomaton, build_automaton
from .brute import (
    DEFAULT_BOUND, JOINT_TRIPLES, brute_rows, check_bound, consecutive_avoiders,
    distribution_brute, joint_distribution, monotone_equidistribution_check,
)
from .dp import distribution_dp
from .formulas import avoider_count, binom, catalan, closed_form, closed_row, motzkin
from .series import BivariateSeries, gf_series
from .tables import DistributionTable, crosscheck_bfile, read_bfile, write_bfile

__all__ = [
    "MarkedAutomaton", "build_automaton", "DEFAULT_BOUND", "JOINT_TRIPLES",
    "brute_rows", "consecutive_avoiders", "distribution_brute", "joint_distribution",
    "monotone_equidistribution_check", "distribution_dp", "avoider_count", "binom",
    "catalan", "closed_form", "closed_row", "motzkin", "BivariateSeries", "gf_series",
    "DistributionTable", "crosscheck_bfile", "read_bfile", "write_bfile",
    "METHODS", "GF_BOUND", "build_table",
]

METHODS = ("closed", "dp", "brute", "gf")

# series expansion is cubic-ish in the order; refuse beyond this unless asked
GF_BOUND = 60


def build_table(
    tau, ns: Sequence[int], method: str, bound: int = DEFAULT_BOUND, gf_bound: int = GF_BOUND
) -> DistributionTable:
    """Rows ``a^tau_{n,.}`` for every ``n`` in ``ns`` computed by one method."""
    tau = check_tau(tau)
    ns = sorted(set(ns))
    table = DistributionTable(tau, method)
    if method == "closed":
        for n in ns:
            table[n] = closed_row(tau, n)
    elif method == "dp":
        for n in ns:
            table[n] = distribution_dp(PATTERN_STATISTIC[tau], n)
    elif method == "brute":
        for n in ns:
            check_bound(n, bound)
        for n in ns:
            table[n] = brute_rows([tau], n, bound)[tau]
    elif method == "gf":
        top = max(ns) if ns else 0
        check_bound(top, gf_bound)
        series = gf_series(tau, top)
        for n in ns:
            table[n] = series.row(n)
    else:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    return table
