"""Laurent polynomials in a single variable q with rational coefficients."""
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Tuple, Union

from sympy import QQ
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement, ring

POLY_RING, Q_GEN = ring("q", QQ)

Rational = Union[int, Fraction]


def to_qq(value):
    """Convert an int, Fraction or ground element to an element of QQ."""
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    return QQ.convert(value)


def qq_to_fraction(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def q_power_poly(exponent: int) -> PolyElement:
    return POLY_RING.from_dict({(exponent,): QQ.one})


def strip_q_power(poly: PolyElement) -> Tuple[int, PolyElement]:
    """Split poly = q^m * p with p(0) != 0. Returns (m, p)."""
    if not poly:
        return 0, poly
    low = min(monom[0] for monom in poly.itermonoms())
    if low == 0:
        return 0, poly
    return low, POLY_RING.from_dict(
        {(monom[0] - low,): coeff for monom, coeff in poly.iterterms()}
    )


def format_terms(terms: List[Tuple[int, Fraction]], var: str = "q") -> str:
    if not terms:
        return "0"
    pieces = []
    for exponent, coeff in reversed(terms):
        sign = "-" if coeff < 0 else "+"
        magnitude = abs(coeff)
        shown = str(magnitude) if magnitude.denominator == 1 else f"({magnitude})"
        if exponent == 0:
            body = shown
        else:
            power = var if exponent == 1 else f"{var}^{exponent}"
            body = power if magnitude == 1 else f"{shown}*{power}"
        pieces.append((sign, body))
    first_sign, first_body = pieces[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


class LaurentPoly:
    """Exact Laurent polynomial sum_e c_e q^e with rational coefficients.

    Stored as q^valuation * poly where poly is a sympy polynomial with a nonzero
    constant term (or the zero polynomial, in which case valuation is 0).
    Instances are immutable.
    """

    __slots__ = ("_valuation", "_poly", "_hash")

    def __init__(self, poly: Optional[PolyElement] = None, valuation: int = 0):
        if poly is None:
            poly = POLY_RING.zero
        shift, poly = strip_q_power(poly)
        self._poly = poly
        self._valuation = valuation + shift if poly else 0
        self._hash = None

    @classmethod
    def from_terms(cls, terms: Mapping[int, Rational]) -> "LaurentPoly":
        nonzero = {e: to_qq(c) for e, c in terms.items() if c != 0}
        if not nonzero:
            return cls()
        low = min(nonzero)
        return cls(
            POLY_RING.from_dict({(e - low,): c for e, c in nonzero.items()}), low
        )

    @classmethod
    def monomial(cls, exponent: int, coeff: Rational = 1) -> "LaurentPoly":
        return cls.from_terms({exponent: coeff})

    @classmethod
    def constant(cls, value: Rational) -> "LaurentPoly":
        return cls.from_terms({0: value})

    @property
    def poly(self) -> PolyElement:
        return self._poly

    @property
    def valuation(self) -> int:
        return self._valuation

    @property
    def is_zero(self) -> bool:
        return not self._poly

    @property
    def is_monomial(self) -> bool:
        return len(self._poly) == 1

    def terms(self) -> List[Tuple[int, Fraction]]:
        """Nonzero terms as (exponent, coefficient), exponents ascending."""
        return sorted(
            (monom[0] + self._valuation, qq_to_fraction(coeff))
            for monom, coeff in self._poly.iterterms()
        )

    def degree(self) -> int:
        if self.is_zero:
            raise ValueError("Degree of the zero Laurent polynomial is undefined")
        return self._poly.degree() + self._valuation

    def low_degree(self) -> int:
        if self.is_zero:
            raise ValueError("Degree of the zero Laurent polynomial is undefined")
        return self._valuation

    def coefficient(self, exponent: int) -> Fraction:
        shifted = exponent - self._valuation
        if shifted < 0:
            return Fraction(0)
        return qq_to_fraction(self._poly.get((shifted,), QQ.zero))

    def value_at_one(self) -> Fraction:
        return sum((c for _, c in self.terms()), Fraction(0))

    def substitute_power(self, k: int) -> "LaurentPoly":
        """The Laurent polynomial obtained by q -> q^k."""
        collected: Dict[int, Fraction] = {}
        for exponent, coeff in self.terms():
            collected[k * exponent] = collected.get(k * exponent, 0) + coeff
        return LaurentPoly.from_terms(collected)

    def bar(self) -> "LaurentPoly":
        return self.substitute_power(-1)

    def exquo(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient; raises ValueError if other does not divide self."""
        other = _coerce(other)
        if other is None or other.is_zero:
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        try:
            quotient = self._poly.exquo(other._poly)
        except ExactQuotientFailed:
            raise ValueError(f"{other} does not divide {self} in Q[q, q^-1]")
        return LaurentPoly(quotient, self._valuation - other._valuation)

    def is_integral(self) -> bool:
        """True if all coefficients are integers, i.e. self lies in Z[q, q^-1]."""
        return all(c.denominator == 1 for _, c in self.terms())

    # ---------- arithmetic ----------

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(-self._poly, self._valuation)

    def __pos__(self) -> "LaurentPoly":
        return self

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        low = min(self._valuation, other._valuation)
        poly = self._poly * q_power_poly(self._valuation - low) + other._poly * (
            q_power_poly(other._valuation - low)
        )
        return LaurentPoly(poly, low)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return LaurentPoly(self._poly * other._poly, self._valuation + other._valuation)

    __rmul__ = __mul__

    def __truediv__(self, other):
        from ._ratfunc import RatFunc

        return RatFunc.from_laurent(self) / other

    def __rtruediv__(self, other):
        from ._ratfunc import RatFunc

        return RatFunc.coerce(other) / RatFunc.from_laurent(self)

    def __pow__(self, exponent: int) -> "LaurentPoly":
        if exponent >= 0:
            return LaurentPoly(self._poly ** exponent, self._valuation * exponent)
        if self.is_monomial:
            ((_, coeff),) = self.terms()
            return LaurentPoly.monomial(self._valuation * exponent, coeff ** exponent)
        raise ValueError(f"{self} is not a unit of Q[q, q^-1]; use division instead")

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._valuation == other._valuation and self._poly == other._poly
        coerced = _coerce(other)
        if coerced is None:
            return NotImplemented
        return self == coerced

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._valuation, tuple(self.terms())))
        return self._hash

    def __str__(self) -> str:
        return format_terms(self.terms())

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"


def _coerce(value) -> Optional[LaurentPoly]:
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return LaurentPoly.constant(value)
    return None


Q = LaurentPoly.monomial(1)
