"""Exception types shared across the package."""


class InvalidWordError(ValueError):
    """A word or permutation failed validation (duplicates, bad range)."""


class InvalidPathError(ValueError):
    """A step string is not a valid Dyck or Motzkin path."""


class NotAvoiderError(ValueError):
    """The permutation contains the classical pattern 3-1-2."""


class NotInDomainError(ValueError):
    """Input lies outside the domain of a restricted bijection."""


class BoundExceededError(ValueError):
    """A brute-force computation was asked for n above its configured bound."""


class ConsistencyError(ArithmeticError):
    """An exactness check failed (non-exact division, non-integral coefficient)."""
