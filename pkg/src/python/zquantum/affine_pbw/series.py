"""Truncated power series over commutative rings containing Q.

The two changes of variables between coefficient sequences are

    Psi: X -> Y with sum_s Y_s z^s = exp(sum_{r>=1} X_r z^r),
    Phi: Y -> X, the inverse of Psi,

both normalized so that X_0 = Y_0 = 1. They are computed with the recursions

    r Y_r = sum_{s=1}^{r} s X_s Y_{r-s},
    r X_r = r Y_r - sum_{s=1}^{r-1} (r - s) Y_s X_{r-s},

which only divide by integers.

Both recursions are graded: if X_r = P_r / D^r for polynomials P_r and a fixed
polynomial D, then Y_r = Q_r / D^r with Q_r given by the same recursion on the
P_r. Over Q(q) the transforms run on numerators in Q[q] and each output
coefficient is reduced once.
"""
from fractions import Fraction
from typing import Callable, Generic, Iterator, List, Optional, Sequence, Tuple, TypeVar

from sympy import QQ
from sympy.polys.rings import PolyElement

from .qlaurent import POLY_RING, RatFunc, paren_q
from .qlaurent._laurent import q_power_poly
from .typing import RingElement

C = TypeVar("C", bound=RingElement)
D = TypeVar("D", bound=RingElement)


class SeriesVec(Generic[C]):
    """Coefficients c_0, ..., c_T of a power series truncated at order T."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Sequence[C]):
        if not coeffs:
            raise ValueError("A truncated series needs at least the constant term")
        self._coeffs = tuple(coeffs)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> List[C]:
        return list(self._coeffs)

    def __getitem__(self, r: int) -> C:
        return self._coeffs[r]

    def __iter__(self) -> Iterator[C]:
        return iter(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SeriesVec):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self._coeffs, other._coeffs)
        )

    def _check_order(self, other: "SeriesVec") -> None:
        if self.order != other.order:
            raise ValueError(
                f"Series truncated at different orders: {self.order} and {other.order}"
            )

    def __add__(self, other: "SeriesVec[C]") -> "SeriesVec[C]":
        self._check_order(other)
        return SeriesVec([a + b for a, b in zip(self._coeffs, other._coeffs)])

    def __sub__(self, other: "SeriesVec[C]") -> "SeriesVec[C]":
        self._check_order(other)
        return SeriesVec([a - b for a, b in zip(self._coeffs, other._coeffs)])

    def __mul__(self, other: "SeriesVec[C]") -> "SeriesVec[C]":
        """Product of series, truncated at the common order."""
        self._check_order(other)
        zero = _zero_like(self._coeffs[0])
        product = []
        for r in range(self.order + 1):
            total = zero
            for s in range(r + 1):
                total = total + self._coeffs[s] * other._coeffs[r - s]
            product.append(total)
        return SeriesVec(product)

    def map(self, func: Callable[[C], D]) -> "SeriesVec[D]":
        """Apply func coefficientwise, e.g. a ring homomorphism."""
        return SeriesVec([func(c) for c in self._coeffs])

    def truncate(self, order: int) -> "SeriesVec[C]":
        if order > self.order:
            raise ValueError(f"Cannot extend a series of order {self.order} to {order}")
        return SeriesVec(self._coeffs[: order + 1])

    def __repr__(self) -> str:
        return "SeriesVec([" + ", ".join(str(c) for c in self._coeffs) + "])"


def _zero_like(element: C) -> C:
    return element * 0


def _is_one(element) -> bool:
    return element == 1


def _graded_denominator(coeffs: Sequence[RatFunc]) -> PolyElement:
    """A polynomial D such that D^r * coeffs[r] is a polynomial for every r >= 1.

    D collects f^ceil(m / r) for every square-free factor f of multiplicity m
    in the denominator of coeffs[r], and q^ceil(-shift / r) for negative
    powers of q.
    """
    common = POLY_RING.one
    for r, coeff in enumerate(coeffs[1:], start=1):
        shift, num, den = coeff.parts()
        if not num:
            continue
        if shift < 0:
            common = common.lcm(q_power_poly(-(shift // r)))
        for factor, multiplicity in den.sqf_list()[1]:
            common = common.lcm(factor ** -(-multiplicity // r))
    return common


def _graded_numerators(
    coeffs: Sequence[RatFunc],
) -> Tuple[List[PolyElement], List[PolyElement]]:
    """Numerators P_r with coeffs[r] = P_r / D^r, and the powers D^r."""
    common = _graded_denominator(coeffs)
    numerators, powers = [POLY_RING.one], [POLY_RING.one]
    for coeff in coeffs[1:]:
        powers.append(powers[-1] * common)
        shift, num, den = coeff.parts()
        if shift >= 0:
            num = num * q_power_poly(shift)
        else:
            den = den * q_power_poly(-shift)
        numerators.append(num * powers[-1].exquo(den))
    return numerators, powers


def _as_ratfuncs(coeffs: Sequence) -> Optional[List[RatFunc]]:
    if all(isinstance(c, RatFunc) for c in coeffs):
        return list(coeffs)
    return None


def _psi_graded(x: List[RatFunc]) -> SeriesVec[RatFunc]:
    p, powers = _graded_numerators(x)
    y = [POLY_RING.one]
    for r in range(1, len(x)):
        total = POLY_RING.zero
        for s in range(1, r + 1):
            total = total + p[s] * y[r - s] * s
        y.append(total.quo_ground(QQ(r)))
    return SeriesVec(
        [x[0]] + [RatFunc._make(0, y[r], powers[r]) for r in range(1, len(x))]
    )


def _phi_graded(y: List[RatFunc]) -> SeriesVec[RatFunc]:
    p, powers = _graded_numerators(y)
    x = [POLY_RING.one]
    for r in range(1, len(y)):
        total = POLY_RING.zero
        for s in range(1, r):
            total = total + p[s] * x[r - s] * (r - s)
        x.append(p[r] - total.quo_ground(QQ(r)))
    return SeriesVec(
        [y[0]] + [RatFunc._make(0, x[r], powers[r]) for r in range(1, len(y))]
    )


def psi_transform(x: SeriesVec[C]) -> SeriesVec[C]:
    """Y = Psi(X), the coefficients of exp(sum_{r>=1} X_r z^r).

    Raises:
        ValueError: if X_0 != 1.
    """
    if not _is_one(x[0]):
        raise ValueError(f"Psi requires X_0 = 1, got {x[0]}")
    ratfuncs = _as_ratfuncs(x.coeffs)
    if ratfuncs is not None:
        return _psi_graded(ratfuncs)
    y = [x[0]]
    zero = _zero_like(x[0])
    for r in range(1, x.order + 1):
        total = zero
        for s in range(1, r + 1):
            total = total + x[s] * y[r - s] * s
        y.append(total * Fraction(1, r))
    return SeriesVec(y)


def phi_transform(y: SeriesVec[C]) -> SeriesVec[C]:
    """X = Phi(Y), the inverse of psi_transform (with X_0 = 1).

    Raises:
        ValueError: if Y_0 != 1.
    """
    if not _is_one(y[0]):
        raise ValueError(f"Phi requires Y_0 = 1, got {y[0]}")
    ratfuncs = _as_ratfuncs(y.coeffs)
    if ratfuncs is not None:
        return _phi_graded(ratfuncs)
    x = [y[0]]
    zero = _zero_like(y[0])
    for r in range(1, y.order + 1):
        total = zero
        for s in range(1, r):
            total = total + y[s] * x[r - s] * (r - s)
        x.append(y[r] - total * Fraction(1, r))
    return SeriesVec(x)


def exp_composition(x: SeriesVec[C]) -> SeriesVec[C]:
    """exp(sum_{r>=1} X_r z^r) expanded directly as sum_m S^m / m!.

    Independent of the recursion used by psi_transform; X_0 is ignored.
    """
    zero = _zero_like(x[0])
    one = zero + 1
    exponent = SeriesVec([zero] + list(x)[1:])
    power = SeriesVec([one] + [zero] * x.order)
    total = power
    factorial = 1
    for m in range(1, x.order + 1):
        factorial *= m
        power = power * exponent
        total = total + power.map(lambda c: c * Fraction(1, factorial))
    return total


def log_composition(y: SeriesVec[C]) -> SeriesVec[C]:
    """log(Y) expanded directly as sum_m (-1)^{m+1} (Y - 1)^m / m.

    The constant term of the result is reported as 1 to match phi_transform.
    """
    zero = _zero_like(y[0])
    one = zero + 1
    u = SeriesVec([zero] + list(y)[1:])
    power = SeriesVec([one] + [zero] * y.order)
    total = SeriesVec([zero] * (y.order + 1))
    for m in range(1, y.order + 1):
        power = power * u
        sign = 1 if m % 2 else -1
        total = total + power.map(lambda c: c * Fraction(sign, m))
    return SeriesVec([one] + list(total)[1:])


def scale_variable(f: SeriesVec[C], factor: RatFunc) -> SeriesVec[C]:
    """The series f(factor * z): the r-th coefficient is multiplied by factor^r."""
    return SeriesVec([c * factor ** r for r, c in enumerate(f)])


def skew_derive(f: SeriesVec[C], base) -> SeriesVec[C]:
    """D_x f = (f(x z) - f(z)) / ((x - 1) z) with x = base.

    The coefficient of z^{n-1} in the result is (n)_x c_n; at x = 1 this is
    the ordinary derivative. The result is truncated at order T - 1.
    """
    if f.order == 0:
        return SeriesVec([_zero_like(f[0])])
    return SeriesVec([f[n] * paren_q(n, base) for n in range(1, f.order + 1)])
