"""Euler characteristics of the spaces of n points on a surface.

For a surface X with Euler characteristic e, the numbers e(X^[n]) of the
n-point Hilbert scheme (Douady space) are computed two independent ways:
as a sum over partition-indexed strata of the symmetric power, and as the
q^n coefficient of the product prod_{k>=1} (1 - q^k)^(-e). All arithmetic
is exact. The verify module cross-checks both routes and certifies each
constituent formula against a brute-force oracle.
"""

from .partitions import (
    MultiplicityForm,
    Partition,
    count_p_recurrence,
    enumerate_partitions,
    from_multiplicity,
    iter_partitions,
    to_multiplicity,
)
from .series import TruncatedSeries, euler_product, one_minus_q
from .strata import (
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
from .verify import (
    CheckResult,
    GridConfig,
    VerificationReport,
    injective_tuple_count,
    multinomial_sum_coeff,
    polynomial_power_coeff,
    run_all,
)

__all__ = [
    "CheckResult",
    "GridConfig",
    "MultiplicityForm",
    "Partition",
    "StratumReport",
    "SurfaceModel",
    "TruncatedSeries",
    "VerificationReport",
    "count_p_recurrence",
    "enumerate_partitions",
    "euler_product",
    "falling_factorial",
    "fiber_euler",
    "from_multiplicity",
    "hilbert_euler_strata",
    "injective_tuple_count",
    "iter_partitions",
    "multinomial_sum_coeff",
    "one_minus_q",
    "polynomial_power_coeff",
    "run_all",
    "stratum_euler",
    "stratum_report",
    "symmetric_euler_strata",
    "tilde_stratum_euler",
    "to_multiplicity",
]

__version__ = "0.1.0"
