"""Exact linear algebra over Q(q).

Matrices are lists of rows of RatFunc. Each row is scaled by a common
denominator so that the work happens fraction-free over Q[q] inside a sympy
DomainMatrix (Bareiss elimination), and the scaling is undone at the end.
"""
import logging
from typing import List, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from .qlaurent import POLY_RING, RatFunc, ratfunc_dot
from .qlaurent._laurent import q_power_poly

log = logging.getLogger(__name__)

Matrix = List[List[RatFunc]]

_POLY_DOMAIN = POLY_RING.to_domain()


class SingularMatrixError(ZeroDivisionError):
    """Raised when a matrix over Q(q) that must be inverted is singular."""


def _check_square(rows: Sequence[Sequence[RatFunc]]) -> int:
    size = len(rows)
    if any(len(row) != size for row in rows):
        lengths = [len(row) for row in rows]
        raise ValueError(f"Expected a square matrix, got row lengths {lengths}")
    return size


def _clear_row(row: Sequence[RatFunc]) -> Tuple[RatFunc, list]:
    """Return (D, polys) with D * row[j] == polys[j] in Q[q]."""
    parts = [RatFunc.coerce(entry).parts() for entry in row]
    low = min((shift for shift, num, _ in parts if num), default=0)
    common = POLY_RING.one
    for _, num, den in parts:
        if num:
            common = common.lcm(den)
    scale = max(0, -low)
    polys = []
    for shift, num, den in parts:
        if not num:
            polys.append(POLY_RING.zero)
            continue
        polys.append(num * common.quo(den) * q_power_poly(shift + scale))
    return RatFunc.from_poly(common, scale), polys


def _to_domain_matrix(
    rows: Sequence[Sequence[RatFunc]],
) -> Tuple[List[RatFunc], DomainMatrix]:
    size = _check_square(rows)
    scales, polys = [], []
    for row in rows:
        scale, cleared = _clear_row(row)
        scales.append(scale)
        polys.append(cleared)
    return scales, DomainMatrix(polys, (size, size), _POLY_DOMAIN)


def determinant(rows: Sequence[Sequence[RatFunc]]) -> RatFunc:
    """Exact determinant of a square matrix over Q(q)."""
    if not rows:
        return RatFunc(1)
    scales, matrix = _to_domain_matrix(rows)
    det = RatFunc.from_poly(matrix.det())
    for scale in scales:
        det = det / scale
    return det


def inverse(rows: Sequence[Sequence[RatFunc]]) -> Matrix:
    """Exact inverse of a square matrix over Q(q).

    Raises:
        SingularMatrixError: if the determinant is zero.
    """
    size = _check_square(rows)
    if size == 0:
        return []
    scales, matrix = _to_domain_matrix(rows)
    log.debug("Inverting %dx%d matrix over Q[q]", size, size)
    try:
        numerators, den = matrix.inv_den()
    except DMNonInvertibleMatrixError:
        den = None
    if not den:
        raise SingularMatrixError(f"Singular {size}x{size} matrix over Q(q)")
    entries = numerators.to_list()
    # A = diag(1/D) B, hence A^-1 = B^-1 diag(D); each entry is reduced once.
    parts = [scale.parts() for scale in scales]
    return [
        [
            RatFunc._make(parts[j][0], entries[i][j] * parts[j][1], den)
            for j in range(size)
        ]
        for i in range(size)
    ]


def matmul(
    left: Sequence[Sequence[RatFunc]], right: Sequence[Sequence[RatFunc]]
) -> Matrix:
    if not left:
        return []
    inner = len(right)
    if any(len(row) != inner for row in left):
        raise ValueError("Matrix shapes do not match for multiplication")
    columns = len(right[0]) if right else 0
    return [
        [
            ratfunc_dot((row[k], right[k][j]) for k in range(inner))
            for j in range(columns)
        ]
        for row in left
    ]


def identity(size: int) -> Matrix:
    return [[RatFunc(int(i == j)) for j in range(size)] for i in range(size)]


def is_identity(rows: Sequence[Sequence[RatFunc]]) -> bool:
    return [list(row) for row in rows] == identity(len(rows))


def solve(rows: Sequence[Sequence[RatFunc]], rhs: Sequence[RatFunc]) -> List[RatFunc]:
    """Solve rows * x = rhs exactly."""
    inv = inverse(rows)
    return [ratfunc_dot(zip(inv_row, rhs)) for inv_row in inv]
