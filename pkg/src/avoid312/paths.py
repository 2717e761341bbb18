"""Dyck and Motzkin paths as step strings, factor statistics, Deutsch's involution.

Paths are ``str`` subclasses over ``{U, D}`` (Dyck) or ``{U, H, D}``
(Motzkin), validated on construction.  The empty path prints as ``ε``.
"""

from __future__ import annotations

import enum
from collections.abc import Iterator
from dataclasses import dataclass

from .errors import InvalidPathError

__all__ = [
    "DyckPath", "MotzkinPath", "Stat", "FixedFactor", "StatisticId",
    "parse_dyck", "parse_motzkin", "first_return_decompose",
    "irreducible_components", "count_statistic", "deutsch",
    "enumerate_dyck", "enumerate_motzkin",
]

EMPTY = "ε"


def _validate(steps: str, alphabet: str) -> None:
    height = 0
    for i, c in enumerate(steps):
        if c == "U":
            height += 1
        elif c == "D":
            height -= 1
            if height < 0:
                raise InvalidPathError(f"negative height at index {i}")
        elif c not in alphabet:
            raise InvalidPathError(f"invalid step {c!r} at index {i}")
    if height != 0:
        raise InvalidPathError("unbalanced")


class _Path(str):
    ALPHABET = ""

    def __new__(cls, steps: str = ""):
        steps = steps.strip()
        if steps == EMPTY:
            steps = ""
        _validate(steps, cls.ALPHABET)
        return super().__new__(cls, steps)

    @classmethod
    def _trusted(cls, steps: str):
        return str.__new__(cls, steps)

    def __str__(self) -> str:
        return str.__str__(self) or EMPTY

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)!r})"


class DyckPath(_Path):
    ALPHABET = "UD"

    @property
    def semilength(self) -> int:
        return len(self) // 2


class MotzkinPath(_Path):
    ALPHABET = "UHD"


def parse_dyck(text: str) -> DyckPath:
    return DyckPath(text)


def parse_motzkin(text: str) -> MotzkinPath:
    return MotzkinPath(text)


class Stat(enum.Enum):
    """The step-word statistics that mirror consecutive patterns of length 3."""

    DDU = "DDU"
    DDD = "DDD"
    DUDD = "DUDD"
    DU_PLUS_DU = "DU+DU"     # D U^t D U, t >= 1
    DU2_PLUS_DD = "DU2+DD"   # D U^t D D, t >= 2

    @property
    def factor(self) -> str | None:
        return self.value if "+" not in self.value else None


@dataclass(frozen=True)
class FixedFactor:
    word: str

    def __post_init__(self):
        if not self.word or set(self.word) - set("UD"):
            raise ValueError(f"factor must be a nonempty word over U, D: {self.word!r}")


StatisticId = Stat | FixedFactor


def _count_factor(steps: str, word: str) -> int:
    m = len(word)
    return sum(1 for i in range(len(steps) - m + 1) if steps.startswith(word, i))


def _count_d_run_d(steps: str, min_run: int, last: str) -> int:
    # occurrences anchored at a D: D U^t D <last>, t >= min_run (t is the maximal U-run)
    count = 0
    n = len(steps)
    for i, c in enumerate(steps):
        if c != "D":
            continue
        j = i + 1
        while j < n and steps[j] == "U":
            j += 1
        if j - i - 1 >= min_run and j + 1 < n and steps[j] == "D" and steps[j + 1] == last:
            count += 1
    return count


def count_statistic(path: str, stat: StatisticId) -> int:
    """Count occurrences of a statistic in a step word (overlaps included).

    >>> count_statistic("UUUUDDDD", Stat.DDD)
    2
    """
    if isinstance(stat, FixedFactor):
        return _count_factor(path, stat.word)
    if stat is Stat.DU_PLUS_DU:
        return _count_d_run_d(path, 1, "U")
    if stat is Stat.DU2_PLUS_DD:
        return _count_d_run_d(path, 2, "D")
    return _count_factor(path, stat.factor)


def _match_table(steps: str) -> list[int]:
    # match[i] = index of the D closing the U at i
    match = [-1] * len(steps)
    stack: list[int] = []
    for i, c in enumerate(steps):
        if c == "U":
            stack.append(i)
        else:
            match[stack.pop()] = i
    return match


def first_return_decompose(path: DyckPath) -> tuple[DyckPath, DyckPath]:
    """Split ``path = U A D B`` at its first return to the axis."""
    if not path:
        raise InvalidPathError("cannot decompose the empty path")
    height = 0
    for i, c in enumerate(path):
        height += 1 if c == "U" else -1
        if height == 0:
            return DyckPath._trusted(path[1:i]), DyckPath._trusted(path[i + 1:])
    raise InvalidPathError("unbalanced")


def irreducible_components(path: DyckPath) -> list[DyckPath]:
    parts = []
    height = start = 0
    for i, c in enumerate(path):
        height += 1 if c == "U" else -1
        if height == 0:
            parts.append(DyckPath._trusted(path[start:i + 1]))
            start = i + 1
    return parts


def deutsch(path: DyckPath) -> DyckPath:
    """Deutsch's involution: ``U A D B -> U Δ(B) D Δ(A)``, empty to empty.

    Runs on an explicit stack of segments so that deep paths such as
    ``U^n D^n`` do not hit the recursion limit.
    """
    steps = str.__str__(path)
    match = _match_table(steps)
    out: list[str] = []
    # items are either literal steps or (lo, hi) segments still to transform
    todo: list[str | tuple[int, int]] = [(0, len(steps))]
    while todo:
        item = todo.pop()
        if isinstance(item, str):
            out.append(item)
            continue
        lo, hi = item
        if lo == hi:
            continue
        mid = match[lo]
        todo.extend(((lo + 1, mid), "D", (mid + 1, hi), "U"))
    return DyckPath._trusted("".join(out))


def enumerate_dyck(n: int) -> Iterator[DyckPath]:
    """All Dyck paths of semilength ``n``, lexicographic with U < D."""
    if n < 0:
        raise ValueError("n must be non-negative")
    buf: list[str] = []

    def rec(ups: int, downs: int) -> Iterator[DyckPath]:
        if downs == n:
            yield DyckPath._trusted("".join(buf))
            return
        if ups < n:
            buf.append("U")
            yield from rec(ups + 1, downs)
            buf.pop()
        if downs < ups:
            buf.append("D")
            yield from rec(ups, downs + 1)
            buf.pop()

    yield from rec(0, 0)


def enumerate_motzkin(n: int) -> Iterator[MotzkinPath]:
    """All Motzkin paths of length ``n``, lexicographic with U < H < D."""
    if n < 0:
        raise ValueError("n must be non-negative")
    buf: list[str] = []

    def rec(height: int) -> Iterator[MotzkinPath]:
        left = n - len(buf)
        if left == 0:
            yield MotzkinPath._trusted("".join(buf))
            return
        for step, dh in (("U", 1), ("H", 0), ("D", -1)):
            h = height + dh
            if 0 <= h <= left - 1:
                buf.append(step)
                yield from rec(h)
                buf.pop()

    yield from rec(0)
