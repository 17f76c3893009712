"""Gram data of the pairing between the positive and negative Borel parts.

Only explicit pairing constants are modelled: the toral pairing, the constants
attached to real and imaginary root vectors, their products over PBW monomials,
and the matrices M_r governing the imaginary part together with their inverses.
"""
import logging
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import linalg
from .qlaurent import (
    LaurentPoly,
    RatFunc,
    cyclotomic_factors,
    eval_at_root_of_unity,
    is_regular_at,
    q_factorial,
    q_int,
    q_minus_inverse,
)
from .rootsys import CartanData, Root, bilinear, q_alpha

log = logging.getLogger(__name__)


class DeltaTableWarning(UserWarning):
    """Issued when a tabulated closed form of Delta_r disagrees with the determinant."""


class DeltaVanishesError(ArithmeticError):
    """Raised when Delta_r vanishes at a root of unity whose order is admissible."""


# ---------- Delta_r ----------


def _q2(exponent: int) -> LaurentPoly:
    """[2]_{q^exponent} = q^exponent + q^-exponent."""
    return q_int(2, exponent)


# Tabulated closed forms, keyed by type letter (with rank for E).
_CLOSED_FORMS: Dict[str, Callable[[int, int], LaurentPoly]] = {
    "A": lambda n, r: q_int(n + 1, r),
    "B": lambda n, r: _q2((2 * n - 1) * r),
    "C": lambda n, r: _q2((n + 1) * r),
    "D": lambda n, r: _q2((n - 1) * r) * _q2(r),
    "E6": lambda n, r: q_int(3, r) * (_q2(4 * r) - 1),
    "E7": lambda n, r: _q2(r) * (_q2(6 * r) - 1),
    "E8": lambda n, r: _q2(8 * r) + _q2(6 * r) - _q2(2 * r) - 1,
    "F": lambda n, r: _q2(6 * r) - 1,
    "G": lambda n, r: q_int(3, r) * (_q2(10 * r) + _q2(8 * r) - _q2(2 * r) - 1),
}

# Closed forms replacing table lines known to disagree with the determinant.
_ERRATA: Dict[str, Callable[[int, int], LaurentPoly]] = {
    "G": lambda n, r: _q2(4 * r) - 1,
}


def _table_key(data: CartanData) -> str:
    return data.label if data.type_letter == "E" else data.type_letter


def _check_r(r: int) -> None:
    if r < 1:
        raise ValueError(f"Invalid level r={r}")


def delta_closed(data: CartanData, r: int, corrected: bool = False) -> LaurentPoly:
    """The tabulated closed form of Delta_r.

    Args:
        data: affine Cartan data.
        r: positive integer.
        corrected: use the corrected closed form where the table line is wrong.
    """
    _check_r(r)
    key = _table_key(data)
    if corrected and key in _ERRATA:
        return _ERRATA[key](data.rank, r)
    return _CLOSED_FORMS[key](data.rank, r)


def has_erratum(data: CartanData) -> bool:
    return _table_key(data) in _ERRATA


def _q_cartan(data: CartanData, r: int, signed: bool = False) -> List[List[RatFunc]]:
    """([a_ij]_{q_i^r}) over I_0, optionally multiplied by (o(i) o(j))^r."""
    n = data.rank
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            entry = RatFunc(q_int(data.matrix[i][j], data.d[i] * r))
            if signed and r % 2 and data.sign(i) != data.sign(j):
                entry = -entry
            row.append(entry)
        rows.append(row)
    return rows


@lru_cache(maxsize=None)
def delta_det(data: CartanData, r: int) -> LaurentPoly:
    """Delta_r = det([a_ij]_{q_i^r}) over the finite Cartan matrix."""
    _check_r(r)
    log.debug("Computing Delta_%d for %s", r, data.label)
    return linalg.determinant(_q_cartan(data, r)).to_laurent()


@dataclass
class DeltaComparison:
    """Comparison of the closed form of Delta_r with the determinant.

    Attributes:
        type_label: e.g. "A2".
        r: level.
        closed: tabulated closed form.
        determinant: the determinant.
        sign: +1 or -1 when determinant == sign * closed, otherwise None.
        corrected_sign: the same for the corrected closed form, if one exists.
    """

    type_label: str
    r: int
    closed: LaurentPoly
    determinant: LaurentPoly
    sign: Optional[int]
    corrected_sign: Optional[int] = None

    @property
    def matches(self) -> bool:
        return self.sign is not None

    @property
    def matches_after_correction(self) -> bool:
        return self.matches or self.corrected_sign is not None


def _sign_between(a: LaurentPoly, b: LaurentPoly) -> Optional[int]:
    if a == b:
        return 1
    if a == -b:
        return -1
    return None


def compare_delta(data: CartanData, r: int) -> DeltaComparison:
    """Compare delta_det with delta_closed; mismatches issue a DeltaTableWarning."""
    closed, det = delta_closed(data, r), delta_det(data, r)
    comparison = DeltaComparison(data.label, r, closed, det, _sign_between(det, closed))
    if has_erratum(data):
        comparison.corrected_sign = _sign_between(
            det, delta_closed(data, r, corrected=True)
        )
    if not comparison.matches:
        warnings.warn(
            f"Closed form of Delta_{r} for {data.label} disagrees with the "
            f"determinant: table gives {closed}, determinant is {det}",
            DeltaTableWarning,
        )
    return comparison


# ---------- Gram matrices ----------


@dataclass(frozen=True)
class GramMatrix:
    """Square matrix over Q(q) indexed by I_0 x I_0.

    Attributes:
        r: delta-level.
        entries: rows in the order i = 1..n.
        kind: formula the entries were built from: "imaginary", "M" or "dual".
        type_label: type of the underlying Cartan data.
    """

    r: int
    entries: Tuple[Tuple[RatFunc, ...], ...]
    kind: str = "M"
    type_label: str = ""

    @property
    def size(self) -> int:
        return len(self.entries)

    def entry(self, i: int, j: int) -> RatFunc:
        """Entry (i, j) for i, j in I_0 = {1..n}."""
        return self.entries[i - 1][j - 1]

    def rows(self) -> List[List[RatFunc]]:
        return [list(row) for row in self.entries]


def _gram(rows: Sequence[Sequence[RatFunc]], r: int, kind: str, data: CartanData):
    return GramMatrix(r, tuple(tuple(row) for row in rows), kind, data.label)


def gram_imaginary(data: CartanData, r: int, s: int) -> GramMatrix:
    """pi(E_(r delta, i), F_(s delta, j)).

    The entry is delta_rs (o(i) o(j))^r [r a_ij]_{q_i} / (r (q_j^-1 - q_j)).
    """
    _check_r(r)
    _check_r(s)
    n = data.rank
    if r != s:
        return _gram([[RatFunc(0)] * n for _ in range(n)], r, "imaginary", data)
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            sign = 1 if r % 2 == 0 or data.sign(i) == data.sign(j) else -1
            numerator = q_int(r * data.matrix[i][j], data.d[i]) * sign
            denominator = -q_minus_inverse(data.d[j]) * r
            row.append(RatFunc(numerator) / denominator)
        rows.append(row)
    return _gram(rows, r, "imaginary", data)


def gram_real(alpha: Root, beta: Root) -> RatFunc:
    """pi(E_alpha, F_beta) = delta_{alpha beta} / (q_alpha^-1 - q_alpha)."""
    if not (alpha.is_real and beta.is_real):
        raise ValueError("gram_real expects two real roots")
    if alpha != beta:
        return RatFunc(0)
    return RatFunc(1) / -q_minus_inverse(alpha.norm)


def m_matrix(data: CartanData, r: int) -> GramMatrix:
    """M_r = ((o(i) o(j))^r [a_ij]_{q_i^r})."""
    _check_r(r)
    return _gram(_q_cartan(data, r, signed=True), r, "M", data)


@lru_cache(maxsize=None)
def _dual(data: CartanData, r: int) -> GramMatrix:
    return _gram(linalg.inverse(m_matrix(data, r).rows()), r, "dual", data)


@dataclass
class DualBasisReport:
    """Checks accompanying the inversion of M_r.

    Attributes:
        det_sign: s with det(M_r) = s * Delta_r.
        orthonormal: whether M_r * mu is the identity.
        foreign_factors: (i, j, m) for every cyclotomic factor Phi_m of a
            denominator of mu that does not divide Delta_r.
        regular_at: order -> whether every entry of mu is regular there.
    """

    type_label: str
    r: int
    det_sign: Optional[int]
    orthonormal: bool
    foreign_factors: List[Tuple[int, int, int]] = field(default_factory=list)
    regular_at: Dict[int, bool] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return (
            self.det_sign is not None
            and self.orthonormal
            and not self.foreign_factors
            and all(self.regular_at.values())
        )


def m_matrix_and_dual(
    data: CartanData, r: int, sample_orders: Sequence[int] = ()
) -> Tuple[GramMatrix, GramMatrix, DualBasisReport]:
    """M_r, its inverse mu and the report on mu.

    Raises:
        SingularMatrixError: if M_r is singular.
    """
    m = m_matrix(data, r)
    mu = _dual(data, r)
    mu_rows = mu.rows()
    delta = delta_det(data, r)
    det = linalg.determinant(m.rows())
    sign = _sign_between(det.to_laurent(), delta) if det.is_laurent else None
    report = DualBasisReport(
        data.label, r, sign, linalg.is_identity(linalg.matmul(m.rows(), mu_rows))
    )
    delta_factors = {order for order, _ in cyclotomic_factors(delta)}
    factored: Dict[LaurentPoly, List[Tuple[int, int]]] = {}
    for i, row in enumerate(mu_rows, start=1):
        for j, entry in enumerate(row, start=1):
            if entry.is_laurent:
                continue
            if entry.den not in factored:
                factored[entry.den] = cyclotomic_factors(entry.den)
            for order, _ in factored[entry.den]:
                if order not in delta_factors:
                    report.foreign_factors.append((i, j, order))
    for order in sample_orders:
        report.regular_at[order] = all(
            is_regular_at(entry, order) for row in mu_rows for entry in row
        )
    return m, mu, report


# ---------- monomials and toral elements ----------


def _real_factor(root: Root, exponent: int) -> RatFunc:
    """q_alpha^{C(n, 2)} [n]_{q_alpha}! / (q_alpha^-1 - q_alpha)^n."""
    d = root.norm
    value = RatFunc(q_alpha(root) ** (exponent * (exponent - 1) // 2))
    value = value * q_factorial(exponent, d)
    return value / (-q_minus_inverse(d)) ** exponent


def _normalization(root: Root, exponent: int, normalization: str) -> RatFunc:
    if normalization == "bare":
        return RatFunc(1)
    if normalization == "q-divided":
        return RatFunc(1) / q_factorial(exponent, root.norm)
    if normalization == "plain-divided":
        factorial = 1
        for j in range(2, exponent + 1):
            factorial *= j
        return RatFunc(Fraction(1, factorial))
    if normalization == "rescaled":
        return RatFunc(-q_minus_inverse(root.norm)) ** exponent
    raise ValueError(f"Invalid normalization: {normalization}")


def pair_monomials(n, m, imdiag: Optional[Callable[[Root], RatFunc]] = None) -> RatFunc:
    """Pairing of two PBW monomials given by exponent vectors.

    Mismatched exponents give 0. Each side's normalization (divided powers,
    bare powers or rescaled powers) divides or multiplies the raw value.

    Args:
        n: ExpVec of the E-side monomial.
        m: ExpVec of the F-side monomial.
        imdiag: pi(x_{r,i}, y_{r,i}) for the chosen imaginary bases; the
            constant 1 (the E^ / dual pair) by default.
    """
    left, right = n.as_dict(), m.as_dict()
    if set(left) != set(right):
        return RatFunc(0)
    value = RatFunc(1)
    for root, (exponent, normalization) in left.items():
        other, other_normalization = right[root]
        if exponent != other:
            return RatFunc(0)
        if root.is_real:
            value = value * _real_factor(root, exponent)
        else:
            factorial = 1
            for j in range(2, exponent + 1):
                factorial *= j
            value = value * factorial
            if imdiag is not None:
                value = value * RatFunc.coerce(imdiag(root)) ** exponent
        value = value * _normalization(root, exponent, normalization)
        value = value * _normalization(root, exponent, other_normalization)
    return value


def pair_toral(data: CartanData, lam: Sequence[int], mu: Sequence[int]) -> RatFunc:
    """pi(K_lambda, K_mu) = q^{-(lambda | mu)} for vectors of Q_infinity."""
    return RatFunc.q_power(-bilinear(data, lam, mu))


# ---------- admissible roots of unity ----------


def is_admissible(data: CartanData, ell: int) -> bool:
    """Whether ell is 1 or an odd order satisfying the type condition."""
    if ell < 1:
        raise ValueError(f"Invalid order ell={ell}")
    if ell == 1:
        return True
    if ell % 2 == 0:
        return False
    if data.type_letter == "A":
        return gcd(ell, data.rank + 1) == 1
    if data.label in ("E6", "G2"):
        return ell % 3 != 0
    return True


def admissible_orders(data: CartanData, bound: int) -> List[int]:
    if bound < 1:
        raise ValueError(f"Invalid bound={bound}")
    return [ell for ell in range(1, bound + 1) if is_admissible(data, ell)]


def first_admissible_orders(data: CartanData, count: int = 3) -> List[int]:
    found, ell = [], 1
    while len(found) < count:
        if is_admissible(data, ell):
            found.append(ell)
        ell += 1
    return found


@dataclass
class NonvanishingReport:
    """Values of Delta_r at a primitive ell-th root of unity for r <= checked_r."""

    type_label: str
    ell: int
    checked_r: int
    admissible: bool
    all_nonzero: bool
    counterexample_r: Optional[int] = None


def check_delta_nonvanishing(
    data: CartanData, ell: int, r_max: int, source: str = "determinant"
) -> NonvanishingReport:
    """Evaluate Delta_r at a primitive ell-th root of unity for 1 <= r <= r_max.

    Args:
        source: "determinant", "table" for the tabulated closed form or
            "corrected" for the closed form with known errata fixed.

    Raises:
        DeltaVanishesError: if ell is admissible and some Delta_r vanishes.
    """
    _check_r(r_max)
    admissible = is_admissible(data, ell)
    report = NonvanishingReport(data.label, ell, r_max, admissible, True)
    for r in range(1, r_max + 1):
        if source == "determinant":
            delta = delta_det(data, r)
        elif source in ("table", "corrected"):
            delta = delta_closed(data, r, corrected=source == "corrected")
        else:
            raise ValueError(f"Invalid source: {source}")
        if eval_at_root_of_unity(delta, ell).is_zero:
            report.all_nonzero = False
            report.counterexample_r = r
            break
    if admissible and not report.all_nonzero:
        raise DeltaVanishesError(
            f"Delta_{report.counterexample_r} of {data.label} vanishes at a "
            f"primitive root of unity of admissible order {ell}"
        )
    log.debug("Delta_r of %s at order %d: %s", data.label, ell, report)
    return report


__all__ = [
    "DeltaComparison",
    "DeltaTableWarning",
    "DeltaVanishesError",
    "DualBasisReport",
    "GramMatrix",
    "NonvanishingReport",
    "admissible_orders",
    "check_delta_nonvanishing",
    "compare_delta",
    "delta_closed",
    "delta_det",
    "first_admissible_orders",
    "gram_imaginary",
    "gram_real",
    "has_erratum",
    "is_admissible",
    "m_matrix",
    "m_matrix_and_dual",
    "pair_monomials",
    "pair_toral",
]
