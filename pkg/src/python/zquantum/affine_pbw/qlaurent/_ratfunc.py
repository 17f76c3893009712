"""Rational functions in q in a canonical reduced form."""
import re
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple, Union

from sympy.polys.rings import PolyElement

from ._laurent import (
    POLY_RING,
    LaurentPoly,
    q_power_poly,
    strip_q_power,
    to_qq,
)


class RatFunc:
    """Element q^shift * num / den of the rational function field Q(q).

    Canonical form: num and den are coprime polynomials with nonzero constant
    terms, den is a primitive integer polynomial with positive constant
    coefficient and the power of q is held in ``shift``. Zero is stored as
    (0, 0, 1). Equality is a structural comparison of canonical forms.
    """

    __slots__ = ("_shift", "_num", "_den", "_hash")

    def __init__(self, value: Union[int, Fraction, LaurentPoly, "RatFunc"] = 0):
        other = RatFunc.coerce(value)
        self._shift, self._num, self._den = other._shift, other._num, other._den
        self._hash = None

    @classmethod
    def _raw(cls, shift: int, num: PolyElement, den: PolyElement) -> "RatFunc":
        obj = cls.__new__(cls)
        obj._shift, obj._num, obj._den, obj._hash = shift, num, den, None
        return obj

    @classmethod
    def _make(cls, shift: int, num: PolyElement, den: PolyElement) -> "RatFunc":
        if not den:
            raise ZeroDivisionError("division by the zero polynomial")
        if not num:
            return cls._raw(0, POLY_RING.zero, POLY_RING.one)
        num_shift, num = strip_q_power(num)
        den_shift, den = strip_q_power(den)
        shift += num_shift - den_shift
        if not den.is_ground:
            num, den = num.cancel(den)
        content, den = den.primitive()
        num = num.quo_ground(content)
        if den[(0,)] < 0:
            num, den = -num, -den
        return cls._raw(shift, num, den)

    @classmethod
    def from_laurent(
        cls, num: LaurentPoly, den: Optional[LaurentPoly] = None
    ) -> "RatFunc":
        if den is None:
            return cls._raw(num.valuation, num.poly, POLY_RING.one)
        return cls._make(num.valuation - den.valuation, num.poly, den.poly)

    @classmethod
    def from_poly(cls, poly: PolyElement, shift: int = 0) -> "RatFunc":
        """The value q^shift * poly for a polynomial of Q[q]."""
        return cls._make(shift, poly, POLY_RING.one)

    @classmethod
    def coerce(cls, value) -> "RatFunc":
        if isinstance(value, RatFunc):
            return value
        if isinstance(value, LaurentPoly):
            return cls.from_laurent(value)
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return cls._make(0, POLY_RING.ground_new(to_qq(value)), POLY_RING.one)
        raise TypeError(f"Cannot interpret {value!r} as a rational function of q")

    @classmethod
    def q_power(cls, exponent: int) -> "RatFunc":
        return cls._raw(exponent, POLY_RING.one, POLY_RING.one)

    def parts(self) -> Tuple[int, PolyElement, PolyElement]:
        """The canonical triple (shift, num, den) of sympy polynomials."""
        return self._shift, self._num, self._den

    @property
    def num(self) -> LaurentPoly:
        return LaurentPoly(self._num, self._shift)

    @property
    def den(self) -> LaurentPoly:
        return LaurentPoly(self._den, 0)

    @property
    def is_zero(self) -> bool:
        return not self._num

    @property
    def is_laurent(self) -> bool:
        return self._den == POLY_RING.one

    def to_laurent(self) -> LaurentPoly:
        if not self.is_laurent:
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.num

    def substitute_power(self, k: int) -> "RatFunc":
        """The rational function obtained by q -> q^k (k != 0)."""
        if k == 0:
            raise ValueError("Substitution q -> q^0 is not a field homomorphism")
        return RatFunc.from_laurent(
            self.num.substitute_power(k), self.den.substitute_power(k)
        )

    def bar(self) -> "RatFunc":
        return self.substitute_power(-1)

    # ---------- arithmetic ----------

    def __neg__(self) -> "RatFunc":
        return RatFunc._raw(self._shift, -self._num, self._den)

    def __pos__(self) -> "RatFunc":
        return self

    def __add__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        low = min(self._shift, other._shift)
        left = self._num * q_power_poly(self._shift - low)
        right = other._num * q_power_poly(other._shift - low)
        if self._den == other._den:
            return RatFunc._make(low, left + right, self._den)
        return RatFunc._make(
            low, left * other._den + right * self._den, self._den * other._den
        )

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return RatFunc._raw(0, POLY_RING.zero, POLY_RING.one)
        shift = self._shift + other._shift
        if self.is_laurent and other.is_laurent:
            return RatFunc._raw(shift, self._num * other._num, POLY_RING.one)
        return RatFunc._make(shift, self._num * other._num, self._den * other._den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        return RatFunc._make(-self._shift, self._den, self._num)

    def __truediv__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int) -> "RatFunc":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        if exponent == 0:
            return RatFunc._raw(0, POLY_RING.one, POLY_RING.one)
        return RatFunc._raw(
            self._shift * exponent, self._num ** exponent, self._den ** exponent
        )

    def __eq__(self, other) -> bool:
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return (
            self._shift == other._shift
            and self._num == other._num
            and self._den == other._den
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((tuple(self.num.terms()), tuple(self.den.terms())))
        return self._hash

    def __str__(self) -> str:
        if self.is_laurent:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RatFunc({str(self)!r})"


ONE = RatFunc(1)
ZERO = RatFunc(0)

Parts = Tuple[int, PolyElement, PolyElement]


def _reduce_sum(parts: Iterable[Parts]) -> RatFunc:
    """Sum of q^shift * num / den over a common denominator, reduced once."""
    groups: Dict[PolyElement, Tuple[int, PolyElement]] = {}
    for shift, num, den in parts:
        if not num:
            continue
        if den not in groups:
            groups[den] = (shift, num)
            continue
        other_shift, other_num = groups[den]
        low = min(shift, other_shift)
        merged = other_num * q_power_poly(other_shift - low)
        groups[den] = (low, merged + num * q_power_poly(shift - low))
    if not groups:
        return ZERO
    low = min(shift for shift, _ in groups.values())
    dens = list(groups)
    common = dens[0]
    for den in dens[1:]:
        common = common.lcm(den)
    total = POLY_RING.zero
    for den, (shift, num) in groups.items():
        total = total + num * common.exquo(den) * q_power_poly(shift - low)
    return RatFunc._make(low, total, common)


def ratfunc_sum(values: Iterable[RatFunc]) -> RatFunc:
    """sum(values), cancelling common factors once instead of after every term."""
    return _reduce_sum(RatFunc.coerce(value).parts() for value in values)


def ratfunc_dot(pairs: Iterable[Tuple[RatFunc, RatFunc]]) -> RatFunc:
    """sum(a * b for a, b in pairs), cancelling common factors once."""

    def products():
        for a, b in pairs:
            a_shift, a_num, a_den = RatFunc.coerce(a).parts()
            b_shift, b_num, b_den = RatFunc.coerce(b).parts()
            yield a_shift + b_shift, a_num * b_num, a_den * b_den

    return _reduce_sum(products())


_TERM = re.compile(
    r"""
    (?:(?P<coeff>\d+)|\((?P<frac>\d+/\d+)\))?   # optional coefficient
    (?:\*?(?P<var>q)                            # optional power of q
        (?:\^(?:\((?P<pexp>-?\d+)\)|(?P<exp>-?\d+)))?
    )?
    """,
    re.VERBOSE,
)
_PLAIN_RATIONAL = re.compile(r"[+-]?\d+(?:/\d+)?")


def _split_top_level(text: str, separators: str = "+-") -> List[Tuple[str, str]]:
    """Split text at separators outside parentheses; keeps the separator seen."""
    pieces, depth, sep, start = [], 0, "", 0
    for pos, char in enumerate(text):
        if char == "(":
            depth += 1
        elif char == ")":
            depth -= 1
            if depth < 0:
                raise ValueError(f"Unbalanced parentheses in {text!r}")
        elif char in separators and depth == 0:
            if pos > 0 and text[pos - 1] in "^(":
                continue
            pieces.append((sep, text[start:pos]))
            sep, start = char, pos + 1
    if depth != 0:
        raise ValueError(f"Unbalanced parentheses in {text!r}")
    pieces.append((sep, text[start:]))
    return pieces


def _unwrap(text: str) -> str:
    """Strip one pair of parentheses enclosing the whole of text."""
    if not (text.startswith("(") and text.endswith(")")):
        return text
    depth = 0
    for pos, char in enumerate(text):
        depth += {"(": 1, ")": -1}.get(char, 0)
        if depth == 0 and pos < len(text) - 1:
            return text
    return text[1:-1]


def parse_laurent(text: str) -> LaurentPoly:
    """Parse a sum of terms such as ``3*q^2 - q^-1 + (1/2)*q^(-4)``."""
    body = _unwrap(text.replace(" ", ""))
    if not body:
        raise ValueError("Invalid Laurent polynomial: empty string")
    if _PLAIN_RATIONAL.fullmatch(body):
        return LaurentPoly.constant(Fraction(body))
    total = LaurentPoly()
    for sep, term in _split_top_level(body):
        match = _TERM.fullmatch(term)
        if match is None or not (match["coeff"] or match["frac"] or match["var"]):
            if sep == "" and term == "":
                continue
            raise ValueError(f"Invalid Laurent polynomial term {term!r} in {text!r}")
        coeff = Fraction(match["coeff"] or match["frac"] or 1)
        exponent = int(match["pexp"] or match["exp"] or 1) if match["var"] else 0
        if sep == "-":
            coeff = -coeff
        total = total + LaurentPoly.monomial(exponent, coeff)
    return total


def parse_ratfunc(text: str) -> RatFunc:
    """Parse ``num`` or ``num/den``.

    Operands of a top-level ``/`` must be single terms or parenthesized:
    ``(q^2-1)/(q-1)`` and ``1/2`` are accepted, ``q^2-1/q-1`` is rejected as
    ambiguous.
    """
    body = text.replace(" ", "")
    if _PLAIN_RATIONAL.fullmatch(body):
        return RatFunc(Fraction(body))
    operands = [piece for _, piece in _split_top_level(body, separators="/")]
    if len(operands) == 1:
        return RatFunc(parse_laurent(body))
    if len(operands) > 2:
        raise ValueError(f"Ambiguous rational function {text!r}: more than one '/'")
    for operand in operands:
        bare = _unwrap(operand) == operand
        if bare and len(_split_top_level(operand.lstrip("+-"))) > 1:
            raise ValueError(
                f"Ambiguous rational function {text!r}: parenthesize {operand!r}"
            )
    num, den = (parse_laurent(operand) for operand in operands)
    if den.is_zero:
        raise ZeroDivisionError(f"Zero denominator in {text!r}")
    return RatFunc(num) / den


def parse_ratfunc_list(text: str) -> List[RatFunc]:
    """Parse a comma separated list of rational functions."""
    return [parse_ratfunc(item) for item in text.split(",")]
