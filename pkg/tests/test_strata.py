from fractions import Fraction
from math import comb

import pytest

from hilbert_euler.partitions import Partition, count_p_recurrence, iter_partitions
from hilbert_euler.series import euler_product, one_minus_q
from hilbert_euler.strata import (
    StratumReport,
    SurfaceModel,
    falling_factorial,
    fiber_euler,
    hilbert_euler_strata,
    stratum_euler,
    stratum_report,
    symmetric_euler_strata,
    tilde_stratum_euler,
)


def test_falling_factorial_values():
    assert falling_factorial(5, 0) == 1
    assert falling_factorial(5, 2) == 20
    assert falling_factorial(3, 4) == 0  # hits the zero factor
    assert falling_factorial(-2, 3) == -24
    assert falling_factorial(0, 0) == 1
    with pytest.raises(ValueError):
        falling_factorial(3, -1)


def test_stratum_euler_small_cases():
    # two distinct unweighted points on e=3: 3*2 ordered pairs, halved
    assert stratum_euler(Partition((1, 1)), 3) == 3
    # one double point and one simple point: 3*2 ordered, no symmetry
    assert stratum_euler(Partition((2, 1)), 3) == 6
    assert stratum_euler(Partition(()), 7) == 1
    assert stratum_euler(Partition((1,)), -2) == -2


def test_fiber_euler_is_product_of_partition_counts():
    assert fiber_euler(Partition((2,))) == 2
    assert fiber_euler(Partition((2, 2, 1))) == 4
    assert fiber_euler(Partition((5, 3))) == 7 * 3
    assert fiber_euler(Partition(())) == 1


def test_tilde_is_fiber_times_stratum():
    assert tilde_stratum_euler(Partition((2,)), 1) == 2
    for n in range(7):
        for p in iter_partitions(n):
            for e in (-3, 0, 1, 4):
                assert tilde_stratum_euler(p, e) == stratum_euler(p, e) * fiber_euler(p)


def test_stratum_report_consistency_enforced():
    report = stratum_report(Partition((2, 1)), 5)
    assert report.tilde_euler == report.stratum_euler * report.fiber_euler
    with pytest.raises(ValueError):
        StratumReport(Partition((2,)), Fraction(1), 2, Fraction(3))
    with pytest.raises(ValueError):
        StratumReport(Partition((2,)), Fraction(1), 3, Fraction(3))


def test_surface_model_validation():
    SurfaceModel(euler_char=-2, max_n=5)
    with pytest.raises(ValueError):
        SurfaceModel(euler_char=2, max_n=-1)


def test_zero_points_is_a_single_point():
    for e in (-6, -1, 0, 1, 2, 24):
        assert hilbert_euler_strata(0, e) == 1
        assert symmetric_euler_strata(0, e) == 1


def test_hilbert_euler_examples():
    assert hilbert_euler_strata(2, 1) == 2
    assert hilbert_euler_strata(2, 24) == 324
    assert hilbert_euler_strata(3, 24) == 3200
    assert hilbert_euler_strata(4, 0) == 0


def test_symmetric_euler_examples():
    assert symmetric_euler_strata(2, 3) == 6
    assert symmetric_euler_strata(3, 1) == 1
    assert [symmetric_euler_strata(n, 1) for n in range(11)] == [1] * 11


def test_strata_route_matches_product_route_small_grid():
    for e in range(-4, 7):
        coeffs = euler_product(e, 10).integer_coefficients()
        for n in range(11):
            assert hilbert_euler_strata(n, e) == coeffs[n], (e, n)


def test_symmetric_route_matches_binomials_small_grid():
    for e in range(-4, 7):
        inv = one_minus_q(10).int_pow(-e)
        for n in range(11):
            assert symmetric_euler_strata(n, e) == inv.coefficient(n), (e, n)
            if e >= 1:
                assert symmetric_euler_strata(n, e) == comb(e + n - 1, n)


def test_at_euler_char_one_both_reduce_to_partition_count():
    for n in range(31):
        assert hilbert_euler_strata(n, 1) == count_p_recurrence(n)


def test_strata_with_more_parts_than_euler_char_vanish():
    for e in range(5):
        for n in range(9):
            for p in iter_partitions(n):
                if p.length > e:
                    assert tilde_stratum_euler(p, e) == 0


def test_stratum_values_are_integers():
    for e in range(-4, 7):
        for n in range(9):
            for p in iter_partitions(n):
                assert stratum_euler(p, e).denominator == 1
                assert tilde_stratum_euler(p, e).denominator == 1
