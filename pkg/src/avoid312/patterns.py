"""The five non-trivial consecutive patterns of length 3 and their path statistics."""

from .paths import Stat
from .perm import Mode, PatternQuery, Permutation

TAUS = ("213", "321", "231", "123", "132")

# consecutive pattern -> Dyck-path statistic on K(sigma) counting its occurrences
PATTERN_STATISTIC = {
    "213": Stat.DDU,
    "321": Stat.DDD,
    "231": Stat.DUDD,
    "123": Stat.DU_PLUS_DU,
    "132": Stat.DU2_PLUS_DD,
}

# patterns sharing a distribution with a representative that has a closed form
REPRESENTATIVE = {"213": "213", "321": "321", "231": "231", "123": "321", "132": "231"}


def check_tau(tau) -> str:
    tau = str(tau).strip()
    if tau not in PATTERN_STATISTIC:
        raise ValueError(f"tau must be one of {', '.join(TAUS)}; got {tau!r}")
    return tau


def consecutive(tau) -> PatternQuery:
    return PatternQuery(Permutation(str(tau)), Mode.CONSECUTIVE)
