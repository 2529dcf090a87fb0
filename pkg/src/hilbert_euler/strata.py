"""Euler characteristics of n-point spaces on a surface, stratum by stratum.

The symmetric power S^n X of a surface X decomposes into loci indexed by
partitions nu of n: a point of the stratum for nu is a configuration of
length(nu) distinct points weighted by the parts. Summing the strata gives
e(S^n X); weighting each stratum by the Euler characteristic of the punctual
fiber over it gives e(X^[n]) for the Hilbert scheme (Douady space) of n
points. Both sums depend on X only through e = e(X), so a surface here is
just an integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import groupby
from math import factorial

from .partitions import Partition, count_p_recurrence, iter_partitions


@dataclass(frozen=True, slots=True)
class SurfaceModel:
    """A surface, reduced to what the formulas consume: its Euler
    characteristic and the largest number of points to handle."""

    euler_char: int
    max_n: int

    def __post_init__(self):
        if self.max_n < 0:
            raise ValueError(f"max_n must be >= 0, got {self.max_n}")


@dataclass(frozen=True, slots=True)
class StratumReport:
    """One stratum's contribution: the partition, the Euler characteristic
    of the stratum, of the punctual fiber over it, and their product."""

    partition: Partition
    stratum_euler: Fraction
    fiber_euler: int
    tilde_euler: Fraction

    def __post_init__(self):
        if self.tilde_euler != self.stratum_euler * self.fiber_euler:
            raise ValueError(
                f"tilde_euler {self.tilde_euler} is not stratum * fiber "
                f"for {self.partition}"
            )
        expected_fiber = 1
        for part in self.partition.parts:
            expected_fiber *= count_p_recurrence(part)
        if self.fiber_euler != expected_fiber:
            raise ValueError(
                f"fiber_euler {self.fiber_euler} does not match "
                f"{self.partition} (expected {expected_fiber})"
            )


def falling_factorial(euler_char: int, m: int) -> int:
    """e (e-1) (e-2) ... (e-m+1), the number of injective maps from an
    m-element set into an e-element set when e >= 0. Empty product for m=0."""
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    out = 1
    for i in range(m):
        out *= euler_char - i
    return out


def _multiplicity_factorials(parts: tuple[int, ...]) -> int:
    """Product of alpha_i! over the distinct part values."""
    out = 1
    for _, run in groupby(parts):
        out *= factorial(sum(1 for _ in run))
    return out


def stratum_euler(partition: Partition, euler_char: int) -> Fraction:
    """Euler characteristic of the configuration stratum for a partition nu
    of n on a surface with Euler characteristic e:

        e (e-1) ... (e-k+1) / (alpha_1! alpha_2! ... alpha_n!)

    where k = length(nu) and alpha_i is the multiplicity of i in nu. The
    numerator counts ordered tuples of k distinct points; dividing by the
    multiplicity factorials forgets the order within equal weights. The
    value is an integer for every integer e; ArithmeticError otherwise.
    """
    value = Fraction(
        falling_factorial(euler_char, partition.length),
        _multiplicity_factorials(partition.parts),
    )
    if value.denominator != 1:
        raise ArithmeticError(
            f"stratum value {value} for {partition} at e={euler_char} "
            "is not an integer"
        )
    return value


def fiber_euler(partition: Partition) -> int:
    """Euler characteristic of the punctual fiber over a stratum point: the
    fiber is a product of punctual Hilbert schemes, one per part, and the
    scheme for a single point of weight m contributes p(m)."""
    out = 1
    for part in partition.parts:
        out *= count_p_recurrence(part)
    return out


def tilde_stratum_euler(partition: Partition, euler_char: int) -> Fraction:
    """Contribution of one stratum to e(X^[n]): fiber times stratum."""
    return stratum_euler(partition, euler_char) * fiber_euler(partition)


def stratum_report(partition: Partition, euler_char: int) -> StratumReport:
    stratum = stratum_euler(partition, euler_char)
    fiber = fiber_euler(partition)
    return StratumReport(
        partition=partition,
        stratum_euler=stratum,
        fiber_euler=fiber,
        tilde_euler=stratum * fiber,
    )


def _integral(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"{what} is {value}, not an integer")
    return value.numerator


def hilbert_euler_strata(n: int, euler_char: int) -> int:
    """e(X^[n]) for a surface X with e(X) = euler_char, as the sum of
    tilde_stratum_euler over all partitions of n.

    n = 0 needs no special case: the empty partition contributes the empty
    products, giving 1.
    """
    total = Fraction(0)
    for partition in iter_partitions(n):
        total += tilde_stratum_euler(partition, euler_char)
    return _integral(total, f"e(X^[{n}]) at e={euler_char}")


def symmetric_euler_strata(n: int, euler_char: int) -> int:
    """e(S^n X) as the sum of stratum_euler over all partitions of n, i.e.
    the same sum as hilbert_euler_strata without the fiber weights."""
    total = Fraction(0)
    for partition in iter_partitions(n):
        total += stratum_euler(partition, euler_char)
    return _integral(total, f"e(S^{n} X) at e={euler_char}")
