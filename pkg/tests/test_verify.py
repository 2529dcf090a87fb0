import pytest

from hilbert_euler.verify import (
    GridConfig,
    injective_tuple_count,
    multinomial_sum_coeff,
    polynomial_power_coeff,
    run_all,
)


def test_injective_tuple_counts():
    assert injective_tuple_count(3, 2) == 6
    assert injective_tuple_count(5, 0) == 1
    assert injective_tuple_count(2, 3) == 0  # pigeonhole
    assert injective_tuple_count(0, 0) == 1
    assert injective_tuple_count(4, 4) == 24
    with pytest.raises(ValueError):
        injective_tuple_count(-1, 2)
    with pytest.raises(ValueError):
        injective_tuple_count(2, -1)


def test_polynomial_power_coefficients():
    assert polynomial_power_coeff(0, 0) == 1
    assert polynomial_power_coeff(0, 3) == 0
    assert polynomial_power_coeff(1, 5) == 7
    assert polynomial_power_coeff(2, 2) == 5  # p0*p2 + p1*p1 + p2*p0
    with pytest.raises(ValueError):
        polynomial_power_coeff(-1, 2)


def test_multinomial_sum_values():
    assert multinomial_sum_coeff(1, 3) == 3
    assert multinomial_sum_coeff(0, 1) == 0
    assert multinomial_sum_coeff(24, 1) == 24
    assert multinomial_sum_coeff(3, 0) == 1  # the empty vector
    with pytest.raises(ValueError):
        multinomial_sum_coeff(-2, 1)


def test_run_all_passes_on_a_small_grid():
    report = run_all(GridConfig(-2, 3, 0, 6))
    assert report.all_passed
    assert report.failed == 0
    assert report.passed == report.total > 0
    assert report.failures() == []


def test_run_all_is_deterministic():
    config = GridConfig(0, 2, 0, 5)
    assert run_all(config) == run_all(config)


def test_empty_grid_passes_vacuously():
    report = run_all(GridConfig(3, 2, 0, 10))
    assert report.total == 0
    assert report.all_passed


def test_oracle_checks_clip_to_their_budgets():
    # e range sits entirely above every oracle cap; only the exact-formula
    # checks should run
    report = run_all(GridConfig(10, 11, 9, 10))
    names = {check.check for check in report.checks}
    assert "falling-oracle" not in names
    assert "power-oracle" not in names
    assert "multinomial-oracle" not in names
    assert "route-match" in names
    assert report.all_passed


def test_negative_control_fails_and_names_cells():
    report = run_all(GridConfig(1, 1, 0, 3), negative_control=True)
    assert not report.all_passed
    failures = report.failures()
    assert [f.check for f in failures] == ["route-match"] * 3
    assert [f.cell for f in failures] == ["e=1,n=1", "e=1,n=2", "e=1,n=3"]
    for f in failures:
        assert f.expected != f.actual  # both values present for diffing
        assert int(f.actual) == int(f.expected) + 1


def test_grid_validation():
    with pytest.raises(ValueError):
        GridConfig(0, 1, -2, 5)
    GridConfig(0, 1, 5, 2)  # empty n range is fine, never iterated


def test_check_fields_are_strings():
    report = run_all(GridConfig(1, 1, 0, 0))
    for check in report.checks:
        assert isinstance(check.expected, str)
        assert isinstance(check.actual, str)
