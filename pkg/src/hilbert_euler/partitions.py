"""Integer partitions: enumeration, multiplicity form, and the counting
function p(n) via the pentagonal-number recurrence."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Iterator


@dataclass(frozen=True, slots=True)
class Partition:
    """A partition of a non-negative integer, parts in non-increasing order.

    The empty tuple is the unique partition of 0.
    """

    parts: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.parts, tuple):
            object.__setattr__(self, "parts", tuple(self.parts))
        parts = self.parts
        if parts and parts[-1] < 1:
            raise ValueError(f"parts must be positive: {parts!r}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be non-increasing: {parts!r}")

    @property
    def n(self) -> int:
        """The number being partitioned (sum of the parts)."""
        return sum(self.parts)

    @property
    def length(self) -> int:
        """Number of parts."""
        return len(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self):
        # additive notation; the empty sum reads as 0
        return "+".join(str(part) for part in self.parts) if self.parts else "0"


@dataclass(frozen=True, slots=True)
class MultiplicityForm:
    """Dense multiplicity vector of a partition of n.

    alpha[i - 1] counts the parts equal to i, for 1 <= i <= n, so the vector
    always has length n and satisfies sum(i * alpha[i - 1]) == n.
    """

    alpha: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.alpha, tuple):
            object.__setattr__(self, "alpha", tuple(self.alpha))
        if any(a < 0 for a in self.alpha):
            raise ValueError(f"multiplicities must be non-negative: {self.alpha!r}")
        weight = sum(i * a for i, a in enumerate(self.alpha, start=1))
        if weight != len(self.alpha):
            raise ValueError(
                f"vector of length {len(self.alpha)} has weight {weight}; "
                "a dense multiplicity vector for n must have length n"
            )

    @property
    def n(self) -> int:
        return len(self.alpha)

    @property
    def length(self) -> int:
        """Number of parts of the underlying partition."""
        return sum(self.alpha)


def iter_partitions(n: int) -> Iterator[Partition]:
    """Yield all partitions of n in reverse-lexicographic order on the parts,
    so largest-first partitions come first:

        4, 3+1, 2+2, 2+1+1, 1+1+1+1

    For n = 0 the single yield is the empty partition.
    """
    if n < 0:
        raise ValueError(f"cannot partition {n}")
    if n == 0:
        yield Partition(())
        return
    part = [n]
    while True:
        yield Partition(tuple(part))
        # strip trailing 1s, decrement the last part > 1, then redistribute
        # the freed amount in chunks no larger than that part
        freed = 0
        while part and part[-1] == 1:
            part.pop()
            freed += 1
        if not part:
            return
        part[-1] -= 1
        freed += 1
        cap = part[-1]
        while freed > cap:
            part.append(cap)
            freed -= cap
        part.append(freed)


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n as a list, in the order of iter_partitions."""
    return list(iter_partitions(n))


def to_multiplicity(partition: Partition) -> MultiplicityForm:
    """Dense multiplicity vector of a partition."""
    alpha = [0] * partition.n
    for part in partition.parts:
        alpha[part - 1] += 1
    return MultiplicityForm(tuple(alpha))


def from_multiplicity(form: MultiplicityForm) -> Partition:
    """Inverse of to_multiplicity."""
    parts = []
    for value in range(len(form.alpha), 0, -1):
        parts.extend([value] * form.alpha[value - 1])
    return Partition(tuple(parts))


# p(0), p(1), ... computed so far; grown under _p_lock, read without it
# (list append never shrinks, so a racing reader sees a valid prefix).
_p_table = [1]
_p_lock = threading.Lock()


def count_p_recurrence(n: int) -> int:
    """Number of partitions of n, by Euler's pentagonal-number recurrence.

    p(n) = sum_{k>=1} (-1)^(k+1) * [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)]

    No enumeration is involved; results are memoized across calls.
    """
    if n < 0:
        raise ValueError(f"cannot partition {n}")
    if n < len(_p_table):
        return _p_table[n]
    with _p_lock:
        while len(_p_table) <= n:
            m = len(_p_table)
            total = 0
            k = 1
            while True:
                pent = k * (3 * k - 1) // 2
                if pent > m:
                    break
                sign = -1 if k % 2 == 0 else 1
                total += sign * _p_table[m - pent]
                pent = k * (3 * k + 1) // 2
                if pent <= m:
                    total += sign * _p_table[m - pent]
                k += 1
            _p_table.append(total)
    return _p_table[n]
