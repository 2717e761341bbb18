"""Truncated power series in ``t`` whose coefficients are polynomials in ``z`` over Q.

Enough arithmetic to expand the three algebraic generating functions
``A^tau(t, z)`` exactly: ring operations, division by a series whose
constant term divides every numerator coefficient, exact division by ``t``
and ``z``, and a Newton square root.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from fractions import Fraction

from ..errors import ConsistencyError
from ..patterns import REPRESENTATIVE, check_tau

__all__ = ["BivariateSeries", "gf_series"]

Poly = list[Fraction]  # coefficient i is the coefficient of z**i; [] is zero


def _trim(p: Poly) -> Poly:
    while p and p[-1] == 0:
        p.pop()
    return p


def _padd(a: Poly, b: Poly, sign: int = 1) -> Poly:
    out = list(a) + [Fraction(0)] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] += sign * c
    return _trim(out)


def _pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _pdiv_exact(a: Poly, b: Poly) -> Poly:
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(a)
    db = len(b) - 1
    quot = [Fraction(0)] * max(len(a) - db, 0)
    for i in range(len(quot) - 1, -1, -1):
        c = rem[i + db] / b[db]
        quot[i] = c
        if c:
            for j, y in enumerate(b):
                rem[i + j] -= c * y
    if any(rem):
        raise ConsistencyError("non-exact polynomial division")
    return _trim(quot)


class BivariateSeries:
    """``sum_{n <= order} c_n(z) t^n``, known modulo ``t^(order+1)``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Sequence]):
        self.coeffs: list[Poly] = [_trim([Fraction(c) for c in p]) for p in coeffs]
        if not self.coeffs:
            raise ValueError("a series needs at least the t^0 coefficient")

    @classmethod
    def from_terms(cls, terms: dict[tuple[int, int], int | Fraction], order: int) -> BivariateSeries:
        """Build from ``{(power of t, power of z): coefficient}``, dropping t-powers above ``order``."""
        coeffs: list[Poly] = [[] for _ in range(order + 1)]
        for (n, k), c in terms.items():
            if n <= order:
                p = coeffs[n]
                p.extend([Fraction(0)] * (k + 1 - len(p)))
                p[k] += c
        return cls(coeffs)

    @classmethod
    def one(cls, order: int) -> BivariateSeries:
        return cls.from_terms({(0, 0): 1}, order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def truncate(self, order: int) -> BivariateSeries:
        if order > self.order:
            raise ValueError(f"cannot raise truncation order {self.order} to {order}")
        return BivariateSeries(self.coeffs[: order + 1])

    def _pad(self, order: int) -> BivariateSeries:
        # zero-extend; only valid when the caller knows the dropped terms vanish
        return BivariateSeries(self.coeffs + [[] for _ in range(order - self.order)])

    def _coerce(self, other) -> BivariateSeries:
        if isinstance(other, BivariateSeries):
            return other
        return BivariateSeries.from_terms({(0, 0): other}, self.order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __add__(self, other) -> BivariateSeries:
        other = self._coerce(other)
        order = min(self.order, other.order)
        return BivariateSeries(_padd(a, b) for a, b in zip(self.coeffs[: order + 1], other.coeffs))

    __radd__ = __add__

    def __neg__(self) -> BivariateSeries:
        return BivariateSeries([-c for c in p] for p in self.coeffs)

    def __sub__(self, other) -> BivariateSeries:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> BivariateSeries:
        return self._coerce(other) - self

    def __mul__(self, other) -> BivariateSeries:
        if not isinstance(other, BivariateSeries):
            c = Fraction(other)
            return BivariateSeries([x * c for x in p] for p in self.coeffs)
        order = min(self.order, other.order)
        out: list[Poly] = []
        for n in range(order + 1):
            acc: Poly = []
            for i in range(n + 1):
                if self.coeffs[i] and other.coeffs[n - i]:
                    acc = _padd(acc, _pmul(self.coeffs[i], other.coeffs[n - i]))
            out.append(acc)
        return BivariateSeries(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> BivariateSeries:
        """Series quotient; each step divides exactly by the divisor's t^0 polynomial."""
        if not isinstance(other, BivariateSeries):
            return self * (1 / Fraction(other))
        lead = other.coeffs[0]
        if not lead:
            raise ConsistencyError("divisor has zero constant term in t")
        order = min(self.order, other.order)
        out: list[Poly] = []
        for n in range(order + 1):
            acc = self.coeffs[n]
            for i in range(1, n + 1):
                if other.coeffs[i] and out[n - i]:
                    acc = _padd(acc, _pmul(other.coeffs[i], out[n - i]), -1)
            out.append(_pdiv_exact(acc, lead))
        return BivariateSeries(out)

    def div_t(self) -> BivariateSeries:
        """Divide by ``t``; the order drops by one."""
        if self.coeffs[0]:
            raise ConsistencyError("non-exact division by t")
        if self.order == 0:
            raise ValueError("no terms left after dividing by t")
        return BivariateSeries(self.coeffs[1:])

    def div_z(self) -> BivariateSeries:
        if any(p and p[0] for p in self.coeffs):
            raise ConsistencyError("non-exact division by z")
        return BivariateSeries(p[1:] for p in self.coeffs)

    def sqrt(self) -> BivariateSeries:
        """Square root with constant term 1 by Newton's iteration ``x <- (x + s/x) / 2``.

        Each pass doubles the number of correct t-coefficients.
        """
        if self.coeffs[0] != [1]:
            raise ConsistencyError("square root needs constant term 1")
        x = BivariateSeries.one(0)
        known = 1
        while known <= self.order:
            known = min(2 * known, self.order + 1)
            x = x._pad(known - 1)
            s = self.truncate(known - 1)
            x = (x + s / x) * Fraction(1, 2)
        if x * x != self:
            raise ConsistencyError("Newton square root failed to converge")
        return x

    def coefficient(self, n: int, k: int) -> Fraction:
        if n > self.order:
            raise IndexError(f"t^{n} is beyond the truncation order {self.order}")
        p = self.coeffs[n]
        return p[k] if k < len(p) else Fraction(0)

    def row(self, n: int) -> list[int]:
        """Integer z-coefficients of t^n; raises unless they are non-negative integers."""
        if n > self.order:
            raise IndexError(f"t^{n} is beyond the truncation order {self.order}")
        p = self.coeffs[n]
        if any(c.denominator != 1 or c < 0 for c in p):
            raise ConsistencyError(f"t^{n} coefficient is not a non-negative integer polynomial")
        return [int(c) for c in p] or [0]

    def to_json(self) -> list[list[str]]:
        """Coefficient vectors per t-power; entries are decimal strings ("p/q" if not integral)."""
        return [[str(c) for c in p] for p in self.coeffs]

    def __repr__(self) -> str:
        return f"BivariateSeries(order={self.order}, coeffs={self.to_json()!r})"


def _gf_213(order: int) -> BivariateSeries:
    N = order + 1
    rad = BivariateSeries.from_terms({(0, 0): 1, (1, 0): -4, (2, 0): 4, (2, 1): -4}, N)
    top = BivariateSeries.from_terms({(0, 0): 1, (1, 0): -2, (1, 1): 2}, N) - rad.sqrt()
    return (top.div_t() * Fraction(1, 2)).div_z()


def _gf_321(order: int) -> BivariateSeries:
    N = order + 1
    # 1 - 2t - 3t^2 + tz(tz + 2t - 2)
    rad = BivariateSeries.from_terms(
        {(0, 0): 1, (1, 0): -2, (2, 0): -3, (2, 2): 1, (2, 1): 2, (1, 1): -2}, N
    )
    top = BivariateSeries.from_terms({(0, 0): 1, (1, 0): -1, (1, 1): 1}, N) - rad.sqrt()
    den = BivariateSeries.from_terms({(0, 1): 1, (1, 0): 1, (1, 1): -1}, order)
    return (top.div_t() * Fraction(1, 2)) / den


def _gf_231(order: int) -> BivariateSeries:
    N = order + 1
    # ((1 - z) t^2 + 1)^2 - 4t
    q = BivariateSeries.from_terms({(0, 0): 1, (2, 0): 1, (2, 1): -1}, N)
    rad = q * q - BivariateSeries.from_terms({(1, 0): 4}, N)
    top = BivariateSeries.from_terms({(0, 0): 1, (2, 0): -1, (2, 1): 1}, N) - rad.sqrt()
    den = BivariateSeries.from_terms({(0, 0): 1, (1, 0): -1, (1, 1): 1}, order)
    return (top.div_t() * Fraction(1, 2)) / den


_BUILDERS = {"213": _gf_213, "321": _gf_321, "231": _gf_231}


def gf_series(tau, order: int) -> BivariateSeries:
    """Expand ``A^tau(t, z)`` through ``t^order``.

    The result is checked to have constant term 1 and non-negative integer
    coefficients throughout.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    series = _BUILDERS[REPRESENTATIVE[check_tau(tau)]](order)
    if series.coeffs[0] != [1]:
        raise ConsistencyError("generating function must have constant term 1")
    for n in range(series.order + 1):
        series.row(n)
    return series
