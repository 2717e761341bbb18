"""Catalan and Motzkin numbers, closed-form coefficients, avoider counts."""

from __future__ import annotations

from functools import lru_cache
from math import comb

from ..errors import ConsistencyError
from ..patterns import REPRESENTATIVE, check_tau

__all__ = [
    "binom", "catalan", "motzkin", "closed_form", "closed_row",
    "avoider_count", "trim_row",
]


def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero outside ``0 <= b <= a``."""
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    return comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def _motzkin_upto(n: int) -> tuple[int, ...]:
    seq = [1, 1]
    for m in range(2, n + 1):
        num = (2 * m + 1) * seq[m - 1] + (3 * m - 3) * seq[m - 2]
        seq.append(num // (m + 2))
    return tuple(seq[: n + 1])


def motzkin(n: int) -> int:
    """Motzkin numbers via ``(n+2) M_n = (2n+1) M_{n-1} + (3n-3) M_{n-2}``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return _motzkin_upto(max(n, 1))[n]


def _exact_div(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise ConsistencyError(f"non-exact division in {what}: {num} / {den}")
    return q


def _a213(n: int, k: int) -> int:
    c = binom(n - 1, 2 * k)
    if c == 0:
        return 0
    return 2 ** (n - 2 * k - 1) * catalan(k) * c


def _a321(n: int, k: int) -> int:
    total = 0
    for j in range(k + 1):
        inner = sum(
            binom(n + j + 1 - k, i + 1) * binom(n - i, i - j)
            for i in range(j, (n + j) // 2 + 1)
        )
        total += (-1) ** (k - j) * binom(n + j, n) * binom(n + 1, k - j) * inner
    return _exact_div(total, n + 1, f"a321({n},{k})")


def _a231(n: int, k: int) -> int:
    total = 0
    for j in range(k, (n - 1) // 2 + 1):
        term = _exact_div(
            binom(j, k) * binom(n - j, j) * binom(2 * n - 3 * j, n - j + 1),
            n - j, f"a231({n},{k}) term j={j}",
        )
        total += (-1) ** (j - k) * term
    return total


_CLOSED = {"213": _a213, "321": _a321, "231": _a231}


def closed_form(tau, n: int, k: int) -> int:
    """Number of 3-1-2-avoiders of length ``n`` with ``k`` consecutive ``tau``.

    Only defined for ``n >= 1``; 123 and 132 share the formulas of 321 and 231.
    """
    tau = check_tau(tau)
    if n < 1:
        raise ValueError("closed forms apply for n >= 1; the n = 0 row is [1]")
    if k < 0:
        return 0
    return _CLOSED[REPRESENTATIVE[tau]](n, k)


def trim_row(row: list[int]) -> list[int]:
    """Drop trailing zeros, keeping at least one entry."""
    end = len(row)
    while end > 1 and row[end - 1] == 0:
        end -= 1
    return row[:end]


def closed_row(tau, n: int) -> list[int]:
    if n == 0:
        check_tau(tau)
        return [1]
    # a length-n permutation has at most n - 2 windows of length 3
    return trim_row([closed_form(tau, n, k) for k in range(max(n - 1, 1))])


def avoider_count(tau, n: int) -> int:
    """``|S_n(3-1-2, tau)|`` for the consecutive pattern ``tau``."""
    tau = check_tau(tau)
    if n < 1:
        raise ValueError("n must be at least 1")
    rep = REPRESENTATIVE[tau]
    if rep == "213":
        return 2 ** (n - 1)
    if rep == "321":
        return motzkin(n)
    return _a231(n, 0)
