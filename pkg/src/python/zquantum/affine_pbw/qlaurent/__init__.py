"""Exact arithmetic in Q[q, q^-1] and Q(q).

Values are evaluated at roots of unity through the quotient ring
Z[q]/(Phi_l) and at q = 1 by direct substitution.
"""
from ._cyclotomic import (
    CycloElement,
    PoleError,
    cyclotomic_factors,
    cyclotomic_polynomial,
    euler_phi,
    eval_at_root_of_unity,
    is_regular_at,
    specialize_q1,
)
from ._laurent import POLY_RING, Q, LaurentPoly
from ._qnumbers import (
    paren_q,
    q_binom,
    q_factorial,
    q_int,
    q_minus_inverse,
    q_power,
)
from ._ratfunc import (
    ONE,
    ZERO,
    RatFunc,
    parse_laurent,
    parse_ratfunc,
    parse_ratfunc_list,
    ratfunc_dot,
    ratfunc_sum,
)

__all__ = [
    "CycloElement",
    "LaurentPoly",
    "ONE",
    "POLY_RING",
    "PoleError",
    "Q",
    "RatFunc",
    "ZERO",
    "cyclotomic_factors",
    "cyclotomic_polynomial",
    "euler_phi",
    "eval_at_root_of_unity",
    "is_regular_at",
    "paren_q",
    "parse_laurent",
    "parse_ratfunc",
    "parse_ratfunc_list",
    "q_binom",
    "q_factorial",
    "q_int",
    "q_minus_inverse",
    "q_power",
    "ratfunc_dot",
    "ratfunc_sum",
    "specialize_q1",
]
