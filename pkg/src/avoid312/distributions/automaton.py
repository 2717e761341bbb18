"""Deterministic automata over {U, D} whose marked transitions count a statistic."""

from __future__ import annotations

from dataclasses import dataclass

from ..paths import FixedFactor, Stat, StatisticId

__all__ = ["MarkedAutomaton", "build_automaton"]

ALPHABET = "UD"


@dataclass(frozen=True)
class MarkedAutomaton:
    """``delta[state][step] = (next_state, marked)``; states are ``0..n_states-1``."""

    n_states: int
    delta: tuple[dict[str, tuple[int, bool]], ...]
    start: int = 0

    def __post_init__(self):
        if len(self.delta) != self.n_states:
            raise ValueError("transition table size does not match n_states")
        for row in self.delta:
            if set(row) != set(ALPHABET):
                raise ValueError("automaton must be total over {U, D}")
            if any(not 0 <= q < self.n_states for q, _ in row.values()):
                raise ValueError("transition to unknown state")

    def run(self, steps: str) -> int:
        """Number of marked transitions taken while reading ``steps``."""
        q, marks = self.start, 0
        for c in steps:
            q, marked = self.delta[q][c]
            marks += marked
        return marks


def _factor_automaton(word: str) -> MarkedAutomaton:
    # KMP automaton: state = length of the longest prefix of word that is a suffix of the input
    m = len(word)
    fail = [0] * (m + 1)
    k = 0
    for i in range(1, m):
        while k and word[i] != word[k]:
            k = fail[k]
        if word[i] == word[k]:
            k += 1
        fail[i + 1] = k

    def step(q: int, c: str) -> int:
        while q and word[q] != c:
            q = fail[q]
        return q + 1 if word[q] == c else 0

    delta = []
    for q in range(m):
        row = {}
        for c in ALPHABET:
            nxt = step(q, c)
            if nxt == m:
                row[c] = (fail[m], True)
            else:
                row[c] = (nxt, False)
        delta.append(row)
    return MarkedAutomaton(m, tuple(delta))


# D U^t D U, t >= 1.  States: 0 idle, 1 after D, 2 after D U+, 3 after D U+ D.
_DU_PLUS_DU = (
    {"U": (0, False), "D": (1, False)},
    {"U": (2, False), "D": (1, False)},
    {"U": (2, False), "D": (3, False)},
    {"U": (2, True), "D": (1, False)},
)

# D U^t D D, t >= 2.  States: 0 idle, 1 after D, 2 after DU, 3 after D UU+, 4 after D UU+ D.
_DU2_PLUS_DD = (
    {"U": (0, False), "D": (1, False)},
    {"U": (2, False), "D": (1, False)},
    {"U": (3, False), "D": (1, False)},
    {"U": (3, False), "D": (4, False)},
    {"U": (2, False), "D": (1, True)},
)


def build_automaton(stat: StatisticId) -> MarkedAutomaton:
    if isinstance(stat, FixedFactor):
        return _factor_automaton(stat.word)
    if stat is Stat.DU_PLUS_DU:
        return MarkedAutomaton(4, _DU_PLUS_DU)
    if stat is Stat.DU2_PLUS_DD:
        return MarkedAutomaton(5, _DU2_PLUS_DD)
    return _factor_automaton(stat.factor)
