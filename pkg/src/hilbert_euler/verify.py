"""Brute-force oracles and the cross-route identity checker.

Each oracle recomputes a quantity by the most naive reliable method and
deliberately shares no code path with the function it certifies: tuples are
enumerated one by one instead of multiplied out, polynomial powers are taken
by schoolbook products instead of squaring, the stratum sum is re-expanded
as an explicit double sum over multiplicity vectors. run_all sweeps a grid
of (euler characteristic, point count) cells, runs every identity on each
cell, and reports failures as data rather than raising.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .partitions import count_p_recurrence, iter_partitions
from .series import euler_product, one_minus_q
from .strata import falling_factorial, stratum_report

# Brute-force cost grows exponentially-ish, so the oracles only ever run on
# these corners of the requested grid. The exact formulas run on all of it.
FALLING_ORACLE_MAX = 8
POWER_ORACLE_MAX_E = 6
POWER_ORACLE_MAX_N = 12


@dataclass(frozen=True, slots=True)
class GridConfig:
    """Inclusive ranges of Euler characteristics and point counts to check.

    Empty ranges are allowed and produce no cells. A non-empty n-range must
    start at 0 or above.
    """

    e_min: int = -6
    e_max: int = 24
    n_min: int = 0
    n_max: int = 30

    def __post_init__(self):
        if self.n_min <= self.n_max and self.n_min < 0:
            raise ValueError(f"point counts start at 0, got n_min={self.n_min}")


@dataclass(frozen=True, slots=True)
class CheckResult:
    """Outcome of one identity on one parameter cell. Expected and actual
    values are kept as decimal strings so a failed cell can always be
    diffed, whatever the magnitude."""

    check: str
    cell: str
    expected: str
    actual: str
    passed: bool


@dataclass(frozen=True, slots=True)
class VerificationReport:
    checks: tuple[CheckResult, ...]

    @property
    def total(self) -> int:
        return len(self.checks)

    @property
    def failed(self) -> int:
        return sum(1 for check in self.checks if not check.passed)

    @property
    def passed(self) -> int:
        return self.total - self.failed

    @property
    def all_passed(self) -> bool:
        return self.failed == 0

    def failures(self) -> list[CheckResult]:
        return [check for check in self.checks if not check.passed]


def injective_tuple_count(num_values: int, tuple_len: int) -> int:
    """Number of tuples of tuple_len pairwise-distinct elements drawn from a
    set of num_values, counted by explicit backtracking enumeration. No
    closed formula anywhere; this certifies falling_factorial for e >= 0.
    """
    if num_values < 0 or tuple_len < 0:
        raise ValueError("set size and tuple length must be non-negative")
    used = [False] * num_values

    def extend(depth: int) -> int:
        if depth == tuple_len:
            return 1
        found = 0
        for value in range(num_values):
            if not used[value]:
                used[value] = True
                found += extend(depth + 1)
                used[value] = False
        return found

    return extend(0)


def polynomial_power_coeff(exponent: int, degree: int) -> int:
    """Coefficient of q^degree in (p(0) + p(1)q + ... + p(degree)q^degree)
    raised to the exponent, by repeated schoolbook polynomial multiplication.

    Independent of the series module: plain int lists, no squaring shortcut,
    no rational arithmetic. Exponent must be >= 0.
    """
    if exponent < 0:
        raise ValueError(f"exponent must be >= 0, got {exponent}")
    if degree < 0:
        raise ValueError(f"degree must be >= 0, got {degree}")
    base = [count_p_recurrence(m) for m in range(degree + 1)]
    poly = [1] + [0] * degree
    for _ in range(exponent):
        product = [0] * (degree + 1)
        for i, left in enumerate(poly):
            if left:
                for j in range(degree + 1 - i):
                    product[i + j] += left * base[j]
        poly = product
    return poly[degree]


def _multiplicity_vectors(n: int):
    """All tuples (a_1, ..., a_n) of non-negative ints with sum i*a_i = n.
    For n = 0 the single vector is empty."""

    def extend(i: int, remaining: int, acc: list[int]):
        if i > n:
            if remaining == 0:
                yield tuple(acc)
            return
        for count in range(remaining // i + 1):
            acc.append(count)
            yield from extend(i + 1, remaining - i * count, acc)
            acc.pop()

    yield from extend(1, n, [])


def multinomial_sum_coeff(exponent: int, weight: int) -> int:
    """The coefficient of q^weight in the expanded power, as a double sum
    over multiplicity vectors (a_1, ..., a_n) with sum i*a_i = weight:

        sum  e(e-1)...(e-k+1) * prod_i p(i)^(a_i) / a_i!      k = sum a_i

    The falling factorial here is computed as e! / (e-k)!, not by the
    strata module's loop. Terms with k > e vanish and are skipped. The
    empty vector at weight 0 contributes the constant term 1.
    """
    if exponent < 0:
        raise ValueError(f"exponent must be >= 0, got {exponent}")
    if weight < 0:
        raise ValueError(f"weight must be >= 0, got {weight}")
    total = Fraction(0)
    for alpha in _multiplicity_vectors(weight):
        k = sum(alpha)
        if k > exponent:
            continue
        term = Fraction(factorial(exponent) // factorial(exponent - k))
        for i, a in enumerate(alpha, start=1):
            if a:
                term *= Fraction(count_p_recurrence(i) ** a, factorial(a))
        total += term
    if total.denominator != 1:
        raise ArithmeticError(f"multinomial sum {total} is not an integer")
    return total.numerator


def _clip(lo: int, hi: int, cap_lo: int, cap_hi: int) -> range:
    return range(max(lo, cap_lo), min(hi, cap_hi) + 1)


def _cell(check: str, cell: str, expected, actual) -> CheckResult:
    return CheckResult(
        check=check,
        cell=cell,
        expected=str(expected),
        actual=str(actual),
        passed=expected == actual,
    )


def run_all(config: GridConfig = GridConfig(), negative_control: bool = False) -> VerificationReport:
    """Run every identity check over the configured grid.

    Emitted checks, in order:

      falling-oracle      falling_factorial vs injective tuple enumeration
      power-oracle        euler_product coefficients vs schoolbook powers
      multinomial-oracle  stratum sum vs the explicit double sum
      integrality         stratum and fiber-weighted values have denominator 1
      vanishing           strata with more parts than e >= 0 contribute 0
      route-match         stratum sum vs euler_product coefficient
      macdonald-product   symmetric-power sum vs (1-q)^-e coefficient
      macdonald-binomial  symmetric-power sum vs binomial(e+n-1, n), e >= 1
      partition-count     stratum sum at e=1 vs the recurrence p(n)

    Oracle checks run on a clipped corner of the grid (brute force only
    scales so far); the rest run on every cell. With negative_control=True
    the stratum-route value fed to route-match is deliberately off by one
    on every cell with n >= 1, which must make the report fail; this keeps
    the harness itself falsifiable.
    """
    checks: list[CheckResult] = []

    for num_values in _clip(config.e_min, config.e_max, 0, FALLING_ORACLE_MAX):
        for tuple_len in _clip(config.n_min, config.n_max, 0, FALLING_ORACLE_MAX):
            checks.append(_cell(
                "falling-oracle",
                f"e={num_values},m={tuple_len}",
                injective_tuple_count(num_values, tuple_len),
                falling_factorial(num_values, tuple_len),
            ))

    for exponent in _clip(config.e_min, config.e_max, 0, POWER_ORACLE_MAX_E):
        for degree in _clip(config.n_min, config.n_max, 0, POWER_ORACLE_MAX_N):
            checks.append(_cell(
                "power-oracle",
                f"e={exponent},n={degree}",
                polynomial_power_coeff(exponent, degree),
                euler_product(exponent, degree).coefficient(degree),
            ))

    for exponent in _clip(config.e_min, config.e_max, 0, POWER_ORACLE_MAX_E):
        for weight in _clip(config.n_min, config.n_max, 0, POWER_ORACLE_MAX_N):
            expected = multinomial_sum_coeff(exponent, weight)
            actual = sum(
                stratum_report(partition, exponent).tilde_euler
                for partition in iter_partitions(weight)
            )
            checks.append(_cell(
                "multinomial-oracle", f"e={exponent},n={weight}", expected, actual,
            ))

    if config.n_min <= config.n_max:
        for euler_char in range(config.e_min, config.e_max + 1):
            product_coeffs = euler_product(euler_char, config.n_max).integer_coefficients()
            macdonald_coeffs = one_minus_q(config.n_max).int_pow(-euler_char).integer_coefficients()
            for n in range(config.n_min, config.n_max + 1):
                cell = f"e={euler_char},n={n}"
                hilbert_total = 0
                symmetric_total = 0
                worst_denominator = 1
                vanishing_violations = 0
                broken = None
                for partition in iter_partitions(n):
                    try:
                        report = stratum_report(partition, euler_char)
                    except ArithmeticError as exc:
                        broken = str(exc)
                        break
                    worst_denominator = max(
                        worst_denominator,
                        report.stratum_euler.denominator,
                        report.tilde_euler.denominator,
                    )
                    # denominators are 1 past stratum_report, so .numerator
                    # is the value
                    hilbert_total += report.tilde_euler.numerator
                    symmetric_total += report.stratum_euler.numerator
                    if 0 <= euler_char < partition.length and report.tilde_euler:
                        vanishing_violations += 1
                if broken is not None:
                    checks.append(CheckResult("integrality", cell, "1", broken, False))
                    continue
                checks.append(_cell("integrality", cell, 1, worst_denominator))
                if euler_char >= 0:
                    checks.append(_cell("vanishing", cell, 0, vanishing_violations))
                claimed = hilbert_total
                if negative_control and n >= 1:
                    claimed += 1
                checks.append(_cell("route-match", cell, product_coeffs[n], claimed))
                checks.append(_cell(
                    "macdonald-product", cell, macdonald_coeffs[n], symmetric_total,
                ))
                if euler_char >= 1:
                    checks.append(_cell(
                        "macdonald-binomial",
                        cell,
                        comb(euler_char + n - 1, n),
                        symmetric_total,
                    ))
                if euler_char == 1:
                    checks.append(_cell(
                        "partition-count", cell, count_p_recurrence(n), hilbert_total,
                    ))

    return VerificationReport(tuple(checks))
