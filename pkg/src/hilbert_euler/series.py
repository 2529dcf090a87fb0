"""Truncated formal power series over exact rationals.

Every series carries a fixed truncation order N and stores the N+1
coefficients of 1, q, ..., q^N as Fractions. All arithmetic is exact;
operands of different orders are rejected rather than coerced.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


@dataclass(frozen=True, slots=True)
class TruncatedSeries:
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a series needs at least its constant term")
        if not all(type(c) is Fraction for c in self.coeffs):
            object.__setattr__(
                self, "coeffs", tuple(Fraction(c) for c in self.coeffs)
            )

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_terms(cls, values: Sequence[Fraction | int], order: int) -> "TruncatedSeries":
        """Series with the given low-degree coefficients, zero-padded to order."""
        if order < 0:
            raise ValueError(f"order must be >= 0, got {order}")
        if len(values) > order + 1:
            raise ValueError(f"{len(values)} coefficients exceed order {order}")
        coeffs = list(values) + [0] * (order + 1 - len(values))
        return cls(tuple(Fraction(c) for c in coeffs))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls.from_terms([1], order)

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls.from_terms([], order)

    def coefficient(self, s: int) -> Fraction:
        """Coefficient of q^s."""
        if not 0 <= s <= self.order:
            raise IndexError(f"degree {s} outside truncation order {self.order}")
        return self.coeffs[s]

    def integer_coefficients(self) -> list[int]:
        """All coefficients as ints; raises if any is not an integer."""
        out = []
        for s, c in enumerate(self.coeffs):
            if c.denominator != 1:
                raise ArithmeticError(f"coefficient of q^{s} is {c}, not an integer")
            out.append(c.numerator)
        return out

    def _match(self, other: "TruncatedSeries"):
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"expected TruncatedSeries, got {type(other).__name__}")
        if self.order != other.order:
            raise ValueError(
                f"truncation orders differ: {self.order} vs {other.order}"
            )

    def add(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._match(other)
        return TruncatedSeries(
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def mul(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Cauchy product, discarding degrees above the truncation order."""
        self._match(other)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * len(a)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j in range(len(a) - i):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
        return TruncatedSeries(tuple(out))

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse, coefficient by coefficient.

        With a = a_0 + a_1 q + ..., the inverse b satisfies b_0 = 1/a_0 and
        b_s = -(a_1 b_{s-1} + ... + a_s b_0) / a_0. Requires a_0 != 0.
        """
        a = self.coeffs
        if not a[0]:
            raise ZeroDivisionError("series with zero constant term has no inverse")
        out = [Fraction(1) / a[0]]
        for s in range(1, len(a)):
            acc = Fraction(0)
            for i in range(1, s + 1):
                if a[i]:
                    acc += a[i] * out[s - i]
            out.append(-acc / a[0])
        return TruncatedSeries(tuple(out))

    def int_pow(self, exponent: int) -> "TruncatedSeries":
        """Integer power by repeated squaring; negative exponents go through
        the inverse and so require an invertible series."""
        base = self if exponent >= 0 else self.inverse()
        e = abs(exponent)
        result = TruncatedSeries.one(self.order)
        while e:
            if e & 1:
                result = result.mul(base)
            e >>= 1
            if e:
                base = base.mul(base)
        return result

    def __add__(self, other):
        return self.add(other)

    def __mul__(self, other):
        return self.mul(other)

    def __pow__(self, exponent: int):
        return self.int_pow(exponent)


def one_minus_q(order: int, k: int = 1) -> TruncatedSeries:
    """The polynomial 1 - q^k as a series of the given order."""
    if k < 1:
        raise ValueError(f"exponent k must be >= 1, got {k}")
    terms: list[int] = [1]
    if k <= order:
        terms += [0] * (k - 1) + [-1]
    return TruncatedSeries.from_terms(terms, order)


def euler_product(euler_char: int, order: int) -> TruncatedSeries:
    """prod_{k>=1} (1 - q^k)^(-euler_char), truncated at the given order.

    Factors with k > order cannot contribute below q^(order+1), so the
    product stops at k = order. The result has integer coefficients for
    every integer euler_char; this is checked before returning.
    """
    result = TruncatedSeries.one(order)
    for k in range(1, order + 1):
        result = result.mul(one_minus_q(order, k).int_pow(-euler_char))
    result.integer_coefficients()
    return result
