"""Test ideals, jumping numbers, thresholds and restricted test ideals."""

from .adjunction import (
    center_check,
    default_seed,
    f_pure_at,
    f_pure_check,
    fedder_lift,
    restricted_test_ideal,
)
from .core import (
    JumpCertificate,
    TestIdealResult,
    coarse_degree_bound,
    degree_bound,
    is_jumping_number,
    test_ideal,
    test_ideal_left_limit,
)
from .thresholds import FptResult, JumpsResult, candidates, fpt, jumping_numbers, nu, tau_padic
from .trational import TRational, multiplicative_order

__all__ = [
    "FptResult",
    "JumpCertificate",
    "JumpsResult",
    "TRational",
    "TestIdealResult",
    "candidates",
    "center_check",
    "coarse_degree_bound",
    "default_seed",
    "degree_bound",
    "f_pure_at",
    "f_pure_check",
    "fedder_lift",
    "fpt",
    "is_jumping_number",
    "jumping_numbers",
    "multiplicative_order",
    "nu",
    "restricted_test_ideal",
    "tau_padic",
    "test_ideal",
    "test_ideal_left_limit",
]
