"""Distribution of a path statistic over Dyck n-paths by dynamic programming.

The DP walks the ``2n`` steps keeping, for every (height, automaton state),
the generating polynomial in ``z`` of the prefixes that reach it.  Polynomials
are packed into a single integer (coefficient ``k`` lives in bits
``[k*B, (k+1)*B)``), so adding polynomials is one integer addition and
multiplying by ``z`` is a shift.  ``B`` is wide enough that no coefficient
can carry into its neighbour: a coefficient never exceeds the number of
step words of length ``2n``.
"""

from __future__ import annotations

from ..paths import StatisticId
from .automaton import build_automaton
from .formulas import trim_row

__all__ = ["distribution_dp"]


def distribution_dp(stat: StatisticId, n: int) -> list[int]:
    """Row ``[a_{n,0}, a_{n,1}, ...]``: Dyck n-paths counted by occurrences of ``stat``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    auto = build_automaton(stat)
    ns = auto.n_states
    width = 2 * n + 2
    moves = [
        [(c, dh, *auto.delta[q][c]) for c, dh in (("U", 1), ("D", -1))]
        for q in range(ns)
    ]

    # layer[h * ns + q] = packed polynomial
    layer = [0] * ((n + 1) * ns)
    layer[auto.start] = 1
    for i in range(2 * n):
        top = min(i + 1, 2 * n - i - 1)
        nxt = [0] * ((n + 1) * ns)
        for h in range(min(i, 2 * n - i) + 1):
            base = h * ns
            for q in range(ns):
                val = layer[base + q]
                if not val:
                    continue
                for _, dh, q2, marked in moves[q]:
                    h2 = h + dh
                    if 0 <= h2 <= top:
                        nxt[h2 * ns + q2] += val << width if marked else val
        layer = nxt

    packed = sum(layer[:ns])
    mask = (1 << width) - 1
    row = []
    while packed:
        row.append(packed & mask)
        packed >>= width
    return trim_row(row or [0])
