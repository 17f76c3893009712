"""Evaluation of rational functions at roots of unity and at q = 1."""
from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple, Union

from sympy import QQ, cyclotomic_poly, totient
from sympy.polys.rings import PolyElement

from ._laurent import POLY_RING, Q_GEN, LaurentPoly, format_terms, qq_to_fraction
from ._ratfunc import RatFunc


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated at one of its poles.

    Args:
        factor: description of the denominator factor vanishing at the point.
        order: multiplicity of that factor in the denominator.
    """

    def __init__(self, message: str, factor: str, order: int = 1):
        super().__init__(message)
        self.factor = factor
        self.order = order


@lru_cache(maxsize=None)
def cyclotomic_polynomial(order: int) -> PolyElement:
    """The order-th cyclotomic polynomial as an element of Q[q]."""
    if order < 1:
        raise ValueError(f"Invalid root of unity order: {order}")
    coeffs = cyclotomic_poly(order, polys=True).all_coeffs()
    return POLY_RING.from_list([int(c) for c in coeffs])


@lru_cache(maxsize=None)
def euler_phi(order: int) -> int:
    return int(totient(order))


@lru_cache(maxsize=None)
def _orders_with_phi_at_most(degree: int) -> Tuple[int, ...]:
    # phi(m) >= sqrt(m / 2), so no m beyond 2 * degree^2 qualifies.
    return tuple(
        m for m in range(1, 2 * degree * degree + 2) if euler_phi(m) <= degree
    )


class CycloElement:
    """Element of Z[q]/(Phi_order), i.e. a value f(eps) at a primitive root eps.

    The residue is kept fully reduced, so equality is structural.
    """

    __slots__ = ("order", "residue")

    def __init__(self, order: int, residue: PolyElement):
        self.order = order
        self.residue = residue.rem(cyclotomic_polynomial(order))

    @classmethod
    def from_int(cls, order: int, value: int) -> "CycloElement":
        return cls(order, POLY_RING.ground_new(QQ.convert(value)))

    @property
    def is_zero(self) -> bool:
        return not self.residue

    def coefficients(self) -> List[Fraction]:
        """Coefficients of the residue, lowest degree first, of length phi(order)."""
        raw = dict(self.residue)
        return [
            qq_to_fraction(raw.get((e,), QQ.zero))
            for e in range(euler_phi(self.order))
        ]

    def value(self) -> Fraction:
        """The rational value of a residue of degree zero."""
        if not self.residue.is_ground:
            raise ValueError(f"{self} is not a rational number")
        return qq_to_fraction(self.residue.LC) if self.residue else Fraction(0)

    def _check(self, other: "CycloElement") -> "CycloElement":
        if isinstance(other, int):
            return CycloElement.from_int(self.order, other)
        if not isinstance(other, CycloElement) or other.order != self.order:
            raise ValueError(
                f"Cannot combine values at roots of unity of orders {self.order}"
                f" and {getattr(other, 'order', None)}"
            )
        return other

    def __add__(self, other):
        return CycloElement(self.order, self.residue + self._check(other).residue)

    __radd__ = __add__

    def __neg__(self):
        return CycloElement(self.order, -self.residue)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __mul__(self, other):
        return CycloElement(self.order, self.residue * self._check(other).residue)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = CycloElement.from_int(self.order, other)
        if not isinstance(other, CycloElement):
            return NotImplemented
        return self.order == other.order and self.residue == other.residue

    def __hash__(self) -> int:
        return hash((self.order, tuple(self.coefficients())))

    def __str__(self) -> str:
        terms = [(e, c) for e, c in enumerate(self.coefficients()) if c != 0]
        return f"{format_terms(terms, 'eps')} (eps of order {self.order})"

    def __repr__(self) -> str:
        return f"CycloElement({str(self)!r})"


def _as_ratfunc(f: Union[RatFunc, LaurentPoly, int, Fraction]) -> RatFunc:
    return RatFunc.coerce(f)


def is_regular_at(f: Union[RatFunc, LaurentPoly], order: int) -> bool:
    """Whether f has no pole at a primitive order-th root of unity."""
    phi = cyclotomic_polynomial(order)
    _, _, den = _as_ratfunc(f).parts()
    if den.degree() < phi.degree():
        return True
    return bool(den.rem(phi))


def eval_at_root_of_unity(
    f: Union[RatFunc, LaurentPoly], order: int
) -> CycloElement:
    """Value of f at a primitive order-th root of unity.

    Raises:
        PoleError: if the denominator vanishes there.
    """
    phi = cyclotomic_polynomial(order)
    shift, num, den = _as_ratfunc(f).parts()
    if shift >= 0:
        num = num * Q_GEN ** shift
    else:
        den = den * Q_GEN ** (-shift)
    den_residue = den.rem(phi)
    if not den_residue:
        multiplicity = _multiplicity(den, phi)
        raise PoleError(
            f"pole at a primitive root of unity of order {order}: "
            f"the denominator {LaurentPoly(den)} is divisible by Phi_{order}"
            f"^{multiplicity}",
            factor=f"Phi_{order}",
            order=multiplicity,
        )
    inverse, _, gcd = den_residue.gcdex(phi)
    inverse = inverse.quo_ground(gcd.LC)
    return CycloElement(order, num.rem(phi) * inverse)


def _multiplicity(poly: PolyElement, factor: PolyElement) -> int:
    count = 0
    while poly and not poly.rem(factor):
        poly = poly.quo(factor)
        count += 1
    return count


def specialize_q1(f: Union[RatFunc, LaurentPoly, int, Fraction]) -> Fraction:
    """The value f(1).

    Raises:
        PoleError: naming the power of (q - 1) dividing the denominator.
    """
    _, num, den = _as_ratfunc(f).parts()
    den_value = den.evaluate(Q_GEN, 1)
    if not den_value:
        multiplicity = _multiplicity(den, Q_GEN - 1)
        raise PoleError(
            f"pole at q = 1: the denominator {LaurentPoly(den)} is divisible by "
            f"(q - 1)^{multiplicity}",
            factor="q - 1",
            order=multiplicity,
        )
    return qq_to_fraction(num.evaluate(Q_GEN, 1)) / qq_to_fraction(den_value)


def cyclotomic_factors(f: Union[LaurentPoly, PolyElement]) -> List[Tuple[int, int]]:
    """Cyclotomic factors of a Laurent polynomial as sorted (m, multiplicity).

    Only Phi_m with phi(m) <= deg f can divide f; since phi(m) >= sqrt(m/2),
    the search stops at m = 2 * deg(f)^2.
    """
    poly = f.poly if isinstance(f, LaurentPoly) else f
    if not poly:
        raise ValueError("The zero polynomial has no factorization")
    found = []
    for m in _orders_with_phi_at_most(poly.degree()):
        if euler_phi(m) > poly.degree():
            continue
        multiplicity = _multiplicity(poly, cyclotomic_polynomial(m))
        if multiplicity:
            found.append((m, multiplicity))
            poly = poly.quo(cyclotomic_polynomial(m) ** multiplicity)
    return found
