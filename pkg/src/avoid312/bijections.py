"""Bijections between 3-1-2-avoiders, Dyck paths and Motzkin paths.

``krattenthaler`` sends a 3-1-2-avoider to the Dyck path whose runs are the
jumps between consecutive left-to-right maxima and whose falls have length
``|w_i| + 1``.  Conjugating Deutsch's involution by it gives ``delta_hat``.
``nu`` and ``mu`` restrict to avoiders of consecutive 321 and 123
respectively and land on Motzkin paths.
"""

from __future__ import annotations

import re
from collections.abc import Sequence

from .errors import InvalidPathError, NotAvoiderError, NotInDomainError
from .paths import DyckPath, MotzkinPath, deutsch
from .perm import (
    Mode, Permutation, PatternQuery, avoids_312, count_occurrences,
    ltr_decompose, standardize,
)

__all__ = [
    "krattenthaler", "krattenthaler_inverse", "delta_hat",
    "nu", "nu_inverse", "mu", "mu_inverse", "TRANSFORMS",
]

_CONS_123 = PatternQuery(Permutation((1, 2, 3)), Mode.CONSECUTIVE)
_RUN = re.compile(r"(U+)(D+)")


def _require_avoider(sigma: Sequence[int]) -> None:
    if not avoids_312(sigma):
        raise NotAvoiderError(f"{Permutation(sigma)} contains 3-1-2")


def krattenthaler(sigma: Sequence[int]) -> DyckPath:
    """The Dyck path K(sigma).

    >>> krattenthaler(Permutation.parse("4 3 6 5 2 7 8 1"))
    DyckPath('UUUUDDUUDDDUDUDD')
    """
    _require_avoider(sigma)
    parts = []
    prev = 0
    for m, w in ltr_decompose(sigma):
        parts.append("U" * (m - prev) + "D" * (len(w) + 1))
        prev = m
    return DyckPath._trusted("".join(parts))


def krattenthaler_inverse(path: str) -> Permutation:
    """Invert K: each w_i takes the largest unused values below m_i, decreasing."""
    path = path if isinstance(path, DyckPath) else DyckPath(path)
    n = len(path) // 2
    used = [False] * (n + 1)
    out: list[int] = []
    m = 0
    for ups, downs in _RUN.findall(str.__str__(path)):
        m += len(ups)
        used[m] = True
        out.append(m)
        v = m - 1
        for _ in range(len(downs) - 1):
            while used[v]:
                v -= 1
            used[v] = True
            out.append(v)
    return Permutation._trusted(out)


def delta_hat(sigma: Sequence[int]) -> Permutation:
    return krattenthaler_inverse(deutsch(krattenthaler(sigma)))


def nu(sigma: Sequence[int]) -> MotzkinPath:
    """Motzkin path of an avoider of 3-1-2 and consecutive 321.

    Each maximal block ``U^a D^b`` of K(sigma) becomes ``U^(a-1)`` followed by
    ``H`` (b = 1) or ``D`` (b = 2).
    """
    path = krattenthaler(sigma)
    out = []
    for ups, downs in _RUN.findall(str.__str__(path)):
        if len(downs) > 2:
            raise NotInDomainError(f"{Permutation(sigma)} contains consecutive 321")
        out.append("U" * (len(ups) - 1) + ("H" if len(downs) == 1 else "D"))
    return MotzkinPath._trusted("".join(out))


def nu_inverse(path: str) -> Permutation:
    path = path if isinstance(path, MotzkinPath) else MotzkinPath(path)
    swap = {"U": "U", "H": "UD", "D": "UDD"}
    return krattenthaler_inverse(DyckPath._trusted("".join(swap[c] for c in path)))


def _mu(w: tuple[int, ...]) -> str:
    # w is a permutation of 1..len(w)
    if not w:
        return ""
    p = w.index(1)
    left = standardize(w[:p])
    if p == len(w) - 1:
        return _mu(left) + "H"
    t = w[p + 1]
    rest = w[p + 2:]
    if rest and t != rest[0] + 1:
        raise NotInDomainError(f"successor condition fails at {t} after 1 in {Permutation(w)}")
    return _mu(left) + "U" + _mu(standardize(rest)) + "D"


def mu(w: Sequence[int]) -> MotzkinPath:
    """Motzkin path of a word whose standardization avoids 3-1-2 and consecutive 123.

    The minimum plays the role of 1 and successors are taken by value rank.

    >>> mu((2, 4, 3, 1, 6, 5, 8, 7))
    MotzkinPath('UHDUUHDD')
    """
    sigma = standardize(w)
    _require_avoider(sigma)
    if count_occurrences(sigma, _CONS_123):
        raise NotInDomainError(f"{sigma} contains consecutive 123")
    return MotzkinPath._trusted(_mu(sigma))


def _last_matching_up(steps: str) -> int:
    # index of the U matched by the final D
    depth = 0
    for i in range(len(steps) - 1, -1, -1):
        depth += 1 if steps[i] == "D" else (-1 if steps[i] == "U" else 0)
        if depth == 0:
            return i
    raise InvalidPathError("unbalanced")


def _mu_inverse(steps: str) -> list[int]:
    if not steps:
        return []
    if steps[-1] == "H":
        first = _mu_inverse(steps[:-1])
        return [v + 1 for v in first] + [1]
    i = _last_matching_up(steps)
    first = _mu_inverse(steps[:i])
    second = _mu_inverse(steps[i + 1:-1])
    base = len(first) + 1
    if not second:
        return [v + 1 for v in first] + [1, base + 1]
    s = second[0]
    # t = s + 1 in the combined block; values of the second part above s move up one
    tail = [base + v + (v > s) for v in second]
    return [v + 1 for v in first] + [1, base + s + 1] + tail


def mu_inverse(path: str) -> Permutation:
    path = path if isinstance(path, MotzkinPath) else MotzkinPath(path)
    return Permutation._trusted(_mu_inverse(str.__str__(path)))


# name -> (function, input kind, output kind); kinds are "perm", "word", "dyck", "motzkin"
TRANSFORMS = {
    "K": (krattenthaler, "perm", "dyck"),
    "K-inv": (krattenthaler_inverse, "dyck", "perm"),
    "delta": (deutsch, "dyck", "dyck"),
    "delta-hat": (delta_hat, "perm", "perm"),
    "nu": (nu, "perm", "motzkin"),
    "nu-inv": (nu_inverse, "motzkin", "perm"),
    "mu": (mu, "word", "motzkin"),
    "mu-inv": (mu_inverse, "motzkin", "perm"),
}
