"""Permutations, pattern occurrences, and 3-1-2-avoiders.

A permutation is stored in one-line notation as a tuple of the integers
``1..n``.  Patterns are counted either *consecutively* (the occurrence must
fill a window of adjacent positions) or *classically* (any increasing
sequence of positions).

>>> sigma = Permutation.parse("4 3 1 7 2 5 6")
>>> count_occurrences(sigma, PatternQuery.parse("3-1-2"))
5
>>> count_occurrences(sigma, PatternQuery.parse("312"))
1
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from .errors import InvalidWordError

__all__ = [
    "EMPTY", "Permutation", "Word", "as_word", "Mode", "PatternQuery", "LtrDecomposition",
    "standardize", "count_occurrences", "ltr_decompose", "avoids_312",
    "enumerate_avoiders", "consecutive_profile",
]

EMPTY = "ε"

# a sequence of distinct positive integers, e.g. a subword of a permutation
Word = tuple[int, ...]


class Permutation(tuple):
    """A permutation of ``1..n`` in one-line notation."""

    __slots__ = ()

    def __new__(cls, values: Iterable[int] = ()):
        values = tuple(int(v) for v in values)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise InvalidWordError(f"not a permutation of 1..{len(values)}: {values}")
        return super().__new__(cls, values)

    @classmethod
    def _trusted(cls, values: Iterable[int]) -> Permutation:
        # skips validation; callers guarantee the invariant
        return tuple.__new__(cls, values)

    @classmethod
    def parse(cls, text: str) -> Permutation:
        text = text.strip()
        if text in ("", EMPTY):
            return cls()
        try:
            return cls(int(tok) for tok in text.replace(",", " ").split())
        except ValueError as exc:
            if isinstance(exc, InvalidWordError):
                raise
            raise InvalidWordError(f"cannot parse permutation from {text!r}") from None

    def __str__(self) -> str:
        return " ".join(map(str, self)) if self else EMPTY

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r})"


def as_word(w: Sequence[int]) -> Word:
    w = tuple(w)
    if len(set(w)) != len(w):
        raise InvalidWordError(f"word has repeated values: {w}")
    return w


def standardize(w: Sequence[int]) -> Permutation:
    """Return the permutation order-isomorphic to the word ``w``.

    >>> standardize((5, 8, 7))
    Permutation('1 3 2')
    """
    w = as_word(w)
    rank = {v: r for r, v in enumerate(sorted(w), start=1)}
    return Permutation._trusted(rank[v] for v in w)


class Mode(enum.Enum):
    CONSECUTIVE = "consecutive"
    CLASSICAL = "classical"


@dataclass(frozen=True)
class PatternQuery:
    pattern: Permutation
    mode: Mode = Mode.CONSECUTIVE

    def __post_init__(self):
        if not self.pattern:
            raise InvalidWordError("pattern must have length at least 1")
        if not isinstance(self.pattern, Permutation):
            object.__setattr__(self, "pattern", Permutation(self.pattern))

    @classmethod
    def parse(cls, text: str) -> PatternQuery:
        """``"3-1-2"`` is classical, ``"312"`` consecutive.

        Letters of consecutive patterns of length 10 or more need spaces.
        """
        text = text.strip()
        if "-" in text:
            return cls(Permutation(text.split("-")), Mode.CLASSICAL)
        if " " in text:
            return cls(Permutation(text.split()), Mode.CONSECUTIVE)
        return cls(Permutation(text), Mode.CONSECUTIVE)

    def __str__(self) -> str:
        sep = "-" if self.mode is Mode.CLASSICAL else ("" if len(self.pattern) < 10 else " ")
        return sep.join(map(str, self.pattern))


def _count_consecutive(sigma: Sequence[int], pattern: Sequence[int]) -> int:
    m = len(pattern)
    # window matches iff its entries, read in pattern-rank order, increase
    order = sorted(range(m), key=pattern.__getitem__)
    steps = list(zip(order, order[1:]))
    return sum(
        1
        for i in range(len(sigma) - m + 1)
        if all(sigma[i + a] < sigma[i + b] for a, b in steps)
    )


def _count_classical_3(sigma: Sequence[int], pattern: Sequence[int]) -> int:
    n = len(sigma)
    p0, p1, p2 = pattern
    last_above_mid = p2 > p1
    first_above_mid = p0 > p1
    first_above_last = p0 > p2
    # below[x] = number of entries left of the middle index that are < x
    below = [0] * (n + 2)
    total = 0
    for j, v in enumerate(sigma):
        for u in sigma[j + 1:]:
            if (u > v) != last_above_mid:
                continue
            # the first entry must lie strictly inside (lo, hi)
            lo = max(v if first_above_mid else 0, u if first_above_last else 0)
            hi = min(n + 1 if first_above_mid else v, n + 1 if first_above_last else u)
            if lo < hi:
                total += below[hi] - below[lo + 1]
        for x in range(v + 1, n + 2):
            below[x] += 1
    return total


def _count_classical(sigma: Sequence[int], pattern: Sequence[int]) -> int:
    m, n = len(pattern), len(sigma)
    if m == 3:
        return _count_classical_3(sigma, pattern)
    chosen: list[int] = []

    def extend(start: int) -> int:
        r = len(chosen)
        if r == m:
            return 1
        lo, hi = 0, n + 1
        for q, val in zip(pattern, chosen):
            if q < pattern[r]:
                lo = max(lo, val)
            else:
                hi = min(hi, val)
        found = 0
        for i in range(start, n - (m - r) + 1):
            if lo < sigma[i] < hi:
                chosen.append(sigma[i])
                found += extend(i + 1)
                chosen.pop()
        return found

    return extend(0)


def count_occurrences(sigma: Sequence[int], q: PatternQuery) -> int:
    """Number of (possibly overlapping) occurrences of ``q`` in ``sigma``."""
    if len(q.pattern) > len(sigma):
        return 0
    if q.mode is Mode.CONSECUTIVE:
        return _count_consecutive(sigma, q.pattern)
    return _count_classical(sigma, q.pattern)


def consecutive_profile(sigma: Sequence[int], m: int) -> dict[Permutation, int]:
    """Histogram of the standardized length-``m`` windows of ``sigma``."""
    profile: dict[Permutation, int] = {}
    for i in range(len(sigma) - m + 1):
        key = standardize(sigma[i:i + m])
        profile[key] = profile.get(key, 0) + 1
    return profile


@dataclass(frozen=True)
class LtrDecomposition:
    """Blocks ``(m_i, w_i)`` with ``m_i`` the left-to-right maxima."""

    blocks: tuple[tuple[int, Word], ...]

    @property
    def maxima(self) -> tuple[int, ...]:
        return tuple(m for m, _ in self.blocks)

    @property
    def words(self) -> tuple[Word, ...]:
        return tuple(w for _, w in self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def flatten(self) -> tuple[int, ...]:
        out: list[int] = []
        for m, w in self.blocks:
            out.append(m)
            out.extend(w)
        return tuple(out)


def ltr_decompose(sigma: Sequence[int]) -> LtrDecomposition:
    blocks: list[tuple[int, list[int]]] = []
    for v in sigma:
        if not blocks or v > blocks[-1][0]:
            blocks.append((v, []))
        else:
            blocks[-1][1].append(v)
    return LtrDecomposition(tuple((m, tuple(w)) for m, w in blocks))


def avoids_312(sigma: Sequence[int]) -> bool:
    """True iff ``sigma`` has no subsequence order-isomorphic to 312.

    Uses the block characterization: every entry ``a`` of ``w_i`` is the
    largest value below ``m_i`` among the entries from ``a`` onwards.
    """
    pos = 0
    for m, w in ltr_decompose(sigma):
        pos += 1
        for a in w:
            pos += 1
            # any later b with a < b < m would complete m, a, b as a 312
            for b in sigma[pos:]:
                if a < b < m:
                    return False
    return True


def enumerate_avoiders(n: int) -> Iterator[Permutation]:
    """Yield S_n(3-1-2) in lexicographic order.

    After a prefix with maximum ``mx``, the next entry is either the largest
    unused value below ``mx`` or any value above ``mx``; anything else would
    leave a gap that a later entry turns into a 312.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    prefix = [0] * n

    def rec(pos: int, unused: int, mx: int) -> Iterator[Permutation]:
        if pos == n:
            yield Permutation._trusted(prefix)
            return
        below = unused & ((1 << mx) - 1)
        if below:
            x = below.bit_length() - 1
            prefix[pos] = x
            yield from rec(pos + 1, unused & ~(1 << x), mx)
        for x in range(mx + 1, n + 1):
            prefix[pos] = x
            yield from rec(pos + 1, unused & ~(1 << x), x)

    yield from rec(0, ((1 << (n + 1)) - 1) & ~1, 0)
