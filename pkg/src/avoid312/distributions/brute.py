"""Distributions by direct enumeration of S_n(3-1-2).

These are the reference oracles; they refuse ``n`` above a bound because
the work grows like the Catalan numbers.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Iterator, Sequence

from ..errors import BoundExceededError
from ..perm import Permutation, PatternQuery, count_occurrences, enumerate_avoiders

__all__ = [
    "DEFAULT_BOUND", "JOINT_TRIPLES", "window_counts", "brute_rows",
    "distribution_brute", "joint_distribution", "monotone_equidistribution_check",
    "consecutive_avoiders",
]

DEFAULT_BOUND = 12

# the two pairs of triples claimed to be equidistributed
JOINT_TRIPLES = (
    (("321", "132", "213"), ("123", "231", "213")),
    (("321", "231", "213"), ("123", "132", "213")),
)

# (a < b, b < c, a < c) -> pattern of the window a b c
_WINDOW = {
    (True, True, True): "123",
    (True, False, True): "132",
    (False, True, True): "213",
    (True, False, False): "231",
    (False, True, False): "312",
    (False, False, False): "321",
}


def check_bound(n: int, bound: int) -> None:
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > bound:
        raise BoundExceededError(
            f"n = {n} exceeds the brute-force bound {bound}; raise the bound explicitly"
        )


def window_counts(sigma: Sequence[int]) -> Counter:
    """How many length-3 windows of ``sigma`` match each pattern of S_3."""
    return Counter(
        _WINDOW[a < b, b < c, a < c] for a, b, c in zip(sigma, sigma[1:], sigma[2:])
    )


def _row(hist: Counter) -> list[int]:
    if not hist:
        return [0]
    return [hist[k] for k in range(max(hist) + 1)]


def brute_rows(taus: Iterable[str], n: int, bound: int = DEFAULT_BOUND) -> dict[str, list[int]]:
    """Rows for several length-3 patterns from a single pass over the avoiders."""
    check_bound(n, bound)
    taus = [str(t) for t in taus]
    hists = {t: Counter() for t in taus}
    for sigma in enumerate_avoiders(n):
        wc = window_counts(sigma)
        for t in taus:
            hists[t][wc[t]] += 1
    return {t: _row(h) for t, h in hists.items()}


def distribution_brute(tau, n: int, bound: int = DEFAULT_BOUND) -> list[int]:
    """Histogram of consecutive ``tau`` over S_n(3-1-2), any pattern length."""
    tau = str(tau)
    if len(tau) == 3 and tau in _WINDOW.values():
        return brute_rows([tau], n, bound)[tau]
    check_bound(n, bound)
    q = PatternQuery.parse(tau)
    return _row(Counter(count_occurrences(s, q) for s in enumerate_avoiders(n)))


def joint_distribution(n: int, bound: int = DEFAULT_BOUND) -> dict[tuple[str, str, str], Counter]:
    """For each triple in :data:`JOINT_TRIPLES`, the histogram of its occurrence counts."""
    check_bound(n, bound)
    triples = [t for pair in JOINT_TRIPLES for t in pair]
    hists = {t: Counter() for t in triples}
    for sigma in enumerate_avoiders(n):
        wc = window_counts(sigma)
        for t in triples:
            hists[t][tuple(wc[p] for p in t)] += 1
    return hists


def monotone_equidistribution_check(k: int, n: int, bound: int = DEFAULT_BOUND) -> bool:
    """Do consecutive ``12...k`` and ``k...21`` share a distribution on S_n(3-1-2)?"""
    if k < 2:
        raise ValueError("k must be at least 2")
    check_bound(n, bound)
    inc = Counter()
    dec = Counter()
    for sigma in enumerate_avoiders(n):
        up = down = 0
        rise = fall = 0  # length of the current monotone run ending here
        for a, b in zip(sigma, sigma[1:]):
            rise, fall = (rise + 1, 0) if a < b else (0, fall + 1)
            up += rise >= k - 1
            down += fall >= k - 1
        inc[up] += 1
        dec[down] += 1
    return inc == dec


def consecutive_avoiders(tau, n: int, bound: int = DEFAULT_BOUND) -> Iterator[Permutation]:
    """Members of S_n(3-1-2) with no consecutive occurrence of ``tau``."""
    check_bound(n, bound)
    q = PatternQuery.parse(str(tau))
    return (s for s in enumerate_avoiders(n) if count_occurrences(s, q) == 0)
