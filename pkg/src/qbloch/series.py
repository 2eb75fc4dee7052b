"""Exact truncated power series over Python integers.

A TruncSeries holds the coefficients of a formal power series in q modulo
q^(N+1) for a fixed truncation order N.  All arithmetic is exact: every
stored coefficient equals the true integer coefficient of the corresponding
formal series.  Python ints never overflow, so coefficients with hundreds
of decimal digits are fine.
"""

from __future__ import annotations

from .errors import UsageError


def _mul_binomial(coeffs: list, d: int, c: int) -> list:
    """Return coeffs * (1 + c*q^d), truncated to the same length.

    Single pass; the zip stops at the shorter operand, which is exactly
    the truncation.
    """
    return coeffs[:d] + [a + c * b for a, b in zip(coeffs[d:], coeffs)]


def _div_binomial(coeffs: list, d: int) -> list:
    """Return coeffs / (1 - q^d) via running prefix sums with stride d."""
    out = list(coeffs)
    for i in range(d, len(out)):
        out[i] += out[i - d]
    return out


class TruncSeries:
    """A formal power series truncated at a fixed order, exact integer coefficients.

    coeffs[t] is the coefficient of q^t; len(coeffs) == order + 1.
    Instances are treated as immutable after construction.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order=None):
        coeffs = list(coeffs)
        if order is None:
            if not coeffs:
                raise UsageError("empty coefficient list needs an explicit order")
            order = len(coeffs) - 1
        if order < 0:
            raise UsageError(f"order must be non-negative, got {order}")
        if len(coeffs) > order + 1:
            raise UsageError(
                f"{len(coeffs)} coefficients do not fit order {order}")
        coeffs.extend([0] * (order + 1 - len(coeffs)))
        self.coeffs = coeffs
        self.order = order

    @classmethod
    def zero(cls, order: int) -> "TruncSeries":
        return cls([0], order)

    @classmethod
    def one(cls, order: int) -> "TruncSeries":
        return cls([1], order)

    @classmethod
    def monomial(cls, exponent: int, coefficient: int, order: int) -> "TruncSeries":
        """c*q^e as a series of the given order; exponents beyond it truncate to 0."""
        s = cls([0], order)
        if 0 <= exponent <= order:
            s.coeffs[exponent] = coefficient
        return s

    def _check_same_order(self, other: "TruncSeries") -> None:
        if self.order != other.order:
            raise UsageError(
                f"order mismatch: {self.order} vs {other.order}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    __hash__ = None

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        self._check_same_order(other)
        return TruncSeries([a + b for a, b in zip(self.coeffs, other.coeffs)],
                           self.order)

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        self._check_same_order(other)
        return TruncSeries([a - b for a, b in zip(self.coeffs, other.coeffs)],
                           self.order)

    def __neg__(self) -> "TruncSeries":
        return TruncSeries([-a for a in self.coeffs], self.order)

    def __mul__(self, other: "TruncSeries") -> "TruncSeries":
        """Cauchy product truncated at the common order.  Schoolbook; zero
        terms of the sparser operand are skipped, which makes products with
        pentagonal-type series run in O(sqrt(N) * N)."""
        self._check_same_order(other)
        n = self.order
        a, b = self.coeffs, other.coeffs
        if _nonzero_count(b) < _nonzero_count(a):
            a, b = b, a
        out = [0] * (n + 1)
        for i, ai in enumerate(a):
            if ai:
                for j in range(n + 1 - i):
                    bj = b[j]
                    if bj:
                        out[i + j] += ai * bj
        return TruncSeries(out, n)

    def mul_binomial(self, d: int, c: int) -> "TruncSeries":
        """Multiply by (1 + c*q^d) in one pass.  Requires d >= 1."""
        if d < 1:
            raise UsageError(f"binomial exponent must be >= 1, got {d}")
        return TruncSeries(_mul_binomial(self.coeffs, d, c), self.order)

    def div_binomial(self, d: int) -> "TruncSeries":
        """Divide by (1 - q^d); always well defined on truncated series."""
        if d < 1:
            raise UsageError(f"binomial exponent must be >= 1, got {d}")
        return TruncSeries(_div_binomial(self.coeffs, d), self.order)

    def shift(self, e: int) -> "TruncSeries":
        """Multiply by q^e (e >= 0), truncating at the order."""
        if e < 0:
            raise UsageError("shift exponent must be non-negative")
        if e == 0:
            return self
        return TruncSeries([0] * min(e, self.order + 1) + self.coeffs[:self.order + 1 - e],
                           self.order)

    def coeff(self, t: int):
        """The exact coefficient of q^t; t beyond the order is a usage error."""
        if not 0 <= t <= self.order:
            raise UsageError(f"index {t} outside truncation order {self.order}")
        return self.coeffs[t]

    def max_abs(self, upto=None):
        """Largest |coefficient| on [0, upto] and the smallest exponent attaining it.

        Returns (0, 0) for the zero series.
        """
        if upto is None:
            upto = self.order
        if not 0 <= upto <= self.order:
            raise UsageError(f"index {upto} outside truncation order {self.order}")
        best, witness = 0, 0
        for t in range(upto + 1):
            v = abs(self.coeffs[t])
            if v > best:
                best, witness = v, t
        return best, witness

    def is_bloch_polya(self, upto=None) -> bool:
        """True iff every coefficient on [0, upto] lies in {-1, 0, 1}."""
        if upto is None:
            upto = self.order
        if not 0 <= upto <= self.order:
            raise UsageError(f"index {upto} outside truncation order {self.order}")
        return all(-1 <= v <= 1 for v in self.coeffs[:upto + 1])

    def degree(self) -> int:
        """Largest exponent with a nonzero coefficient, or -1 for the zero series."""
        for t in range(self.order, -1, -1):
            if self.coeffs[t]:
                return t
        return -1

    def nonzero_items(self):
        """(exponent, coefficient) pairs for nonzero coefficients, ascending."""
        return [(t, v) for t, v in enumerate(self.coeffs) if v]

    def __repr__(self) -> str:
        head = ", ".join(f"{v}*q^{t}" for t, v in self.nonzero_items()[:6])
        more = "" if len(self.nonzero_items()) <= 6 else ", ..."
        return f"TruncSeries({head or '0'}{more}; order={self.order})"


def _nonzero_count(coeffs: list) -> int:
    return sum(1 for v in coeffs if v)


def pochhammer(start: int, step: int, L, N: int) -> TruncSeries:
    """Product of (1 - q^(start + step*i)) for i < L, truncated at order N.

    L=None means the infinite product; factors whose exponent exceeds N are
    1 modulo q^(N+1) and are skipped.  pochhammer(1, 1, m, N) is the finite
    q-factorial with m factors; pochhammer(k, 1, None, N) is the infinite
    product starting at q^k.
    """
    if start < 1:
        raise UsageError(f"start must be >= 1, got {start}")
    if step < 1:
        raise UsageError(f"step must be >= 1, got {step}")
    if L is not None and L < 0:
        raise UsageError(f"length must be >= 0, got {L}")
    coeffs = [1] + [0] * N
    i = 0
    d = start
    while (L is None or i < L) and d <= N:
        coeffs = _mul_binomial(coeffs, d, -1)
        i += 1
        d += step
    return TruncSeries(coeffs, N)


def qq_poly(m: int) -> TruncSeries:
    """The full polynomial (q;q)_m, at its exact degree m(m+1)/2."""
    if m < 0:
        raise UsageError(f"m must be >= 0, got {m}")
    return pochhammer(1, 1, m, m * (m + 1) // 2) if m else TruncSeries([1], 0)
