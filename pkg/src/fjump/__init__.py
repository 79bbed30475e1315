"""Exact Frobenius roots, Cartier operators, test ideals and F-jumping numbers
over F_p[x_1, ..., x_n]."""

from .errors import FjumpError, ParseError, PreconditionError, RingMismatchError
from .frobenius import (
    CartierOp,
    OrbitReport,
    bracket_power,
    cartier_apply,
    frobenius_root,
    op_power,
    stable_image_desc,
    stable_sum_asc,
)
from .ideals import Ideal, ReducedGB, colon, colon_elem, contains, groebner, ideal_eq, intersect, normal_form
from .poly import MonomialOrder, Poly, Ring, is_prime, parse, total_degree
from .testideal import (
    JumpCertificate,
    TestIdealResult,
    TRational,
    center_check,
    degree_bound,
    f_pure_at,
    f_pure_check,
    fedder_lift,
    fpt,
    is_jumping_number,
    jumping_numbers,
    nu,
    restricted_test_ideal,
    test_ideal,
    test_ideal_left_limit,
)

__version__ = "0.1.0"
