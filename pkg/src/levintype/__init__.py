"""Levin-type sequence transformations.

The generalized transformation G_k^(n)(q_m, s_n, omega_n), its special cases
(Levin's L, the factorial-series S, M and the interpolating C), Richardson-type
variants, and rational approximants built from power-series partial sums.
Everything runs on floats or on exact fractions.
"""

from .engine import (TransformTable, g_explicit, g_recursive_table, levin_L, transform, transform_C,
                     transform_G, transform_M, weniger_S)
from .estimates import (RemainderEstimator, asymptotic_estimator, d_estimator, explicit_omega, t_estimator,
                        u_estimator, v_estimator)
from .numeric import FLOAT, RATIONAL, Polynomial, SingularError, field_named
from .rational import RationalApproximant, build_variant_approximant, check_order, pade_epsilon, predict
from .schedules import QSchedule, ScheduleError, parse_schedule
from .sequence import Sequence

__version__ = "0.1.0"

__all__ = [
    "FLOAT", "Polynomial", "QSchedule", "RATIONAL", "RationalApproximant", "RemainderEstimator",
    "ScheduleError", "Sequence", "SingularError", "TransformTable", "asymptotic_estimator",
    "build_variant_approximant", "check_order", "d_estimator", "explicit_omega", "field_named", "g_explicit",
    "g_recursive_table", "levin_L", "pade_epsilon", "parse_schedule", "predict", "t_estimator", "transform",
    "transform_C", "transform_G", "transform_M", "u_estimator", "v_estimator", "weniger_S",
]
