"""Commutative model of the imaginary root vectors for one multiplicity index.

All imaginary root vectors attached to a fixed i in I_0 commute, so each family
is a polynomial in commuting generators with coefficients in Q(q). Generators
come in four flavours, distinguished by ``ImPoly.symbol``:

    "Et"  the generators E~_s (canonical coordinates),
    "E"   the root vectors E_s,
    "Eh"  the normalized root vectors E^_s = (s / [s]_{q_i}) E_s,
    "e"   the classical generators e~_s obtained at q = 1.

Generator s has delta-degree s. The E and E^ families are algebraically
independent over Q(q) in terms of the E~, so changing coordinates is an
injective ring map and identities may be checked in whichever coordinates are
cheapest.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterator, List, Mapping, Optional, Tuple, Union

from .qlaurent import (
    LaurentPoly,
    PoleError,
    RatFunc,
    is_regular_at,
    paren_q,
    q_int,
    q_minus_inverse,
    ratfunc_dot,
    specialize_q1,
)
from .series import SeriesVec, log_composition, phi_transform, psi_transform, scale_variable

log = logging.getLogger(__name__)

TILDE = "Et"
ROOT_VECTOR = "E"
HAT = "Eh"
CLASSICAL = "e"
SYMBOLS = (TILDE, ROOT_VECTOR, HAT, CLASSICAL)

Monomial = Tuple[Tuple[int, int], ...]
Scalar = Union[int, Fraction, LaurentPoly, RatFunc]


def _merge(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for s, e in b:
        exps[s] = exps.get(s, 0) + e
    return tuple(sorted(exps.items()))


def monomial_degree(monomial: Monomial) -> int:
    """delta-degree sum_s s * e_s of a monomial."""
    return sum(s * e for s, e in monomial)


class ImPoly:
    """Polynomial in commuting generators with RatFunc coefficients.

    Instances are immutable; zero coefficients are never stored.
    """

    __slots__ = ("_terms", "symbol")

    def __init__(self, terms: Optional[Mapping[Monomial, Scalar]] = None, symbol: str = TILDE):
        if symbol not in SYMBOLS:
            raise ValueError(f"Invalid generator symbol: {symbol}")
        self.symbol = symbol
        self._terms: Dict[Monomial, RatFunc] = {}
        for monomial, coeff in (terms or {}).items():
            coeff = RatFunc.coerce(coeff)
            if not coeff.is_zero:
                self._terms[tuple(sorted(monomial))] = coeff

    @classmethod
    def _from_clean(cls, terms: Dict[Monomial, RatFunc], symbol: str) -> "ImPoly":
        obj = cls.__new__(cls)
        obj._terms, obj.symbol = terms, symbol
        return obj

    @classmethod
    def _from_products(
        cls, products: Mapping[Monomial, List[Tuple[RatFunc, RatFunc]]], symbol: str
    ) -> "ImPoly":
        terms = {}
        for monomial, pairs in products.items():
            coeff = ratfunc_dot(pairs)
            if not coeff.is_zero:
                terms[monomial] = coeff
        return cls._from_clean(terms, symbol)

    @classmethod
    def constant(cls, value: Scalar, symbol: str = TILDE) -> "ImPoly":
        return cls({(): value}, symbol)

    @classmethod
    def generator(cls, s: int, symbol: str = TILDE) -> "ImPoly":
        if s < 1:
            raise ValueError(f"Invalid generator index: {s}")
        return cls({((s, 1),): 1}, symbol)

    # ---------- inspection ----------

    def terms(self) -> List[Tuple[Monomial, RatFunc]]:
        """(monomial, coefficient) pairs sorted by monomial."""
        return sorted(self._terms.items())

    def coefficient(self, monomial: Monomial) -> RatFunc:
        return self._terms.get(tuple(sorted(monomial)), RatFunc(0))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def degrees(self) -> List[int]:
        return sorted({monomial_degree(m) for m in self._terms})

    def is_homogeneous(self, degree: int) -> bool:
        return all(monomial_degree(m) == degree for m in self._terms)

    def max_index(self) -> int:
        return max((s for m in self._terms for s, _ in m), default=0)

    # ---------- arithmetic ----------

    def _lift(self, other) -> Optional["ImPoly"]:
        if isinstance(other, ImPoly):
            if other.symbol != self.symbol:
                raise ValueError(
                    f"Cannot combine polynomials in {self.symbol} and {other.symbol}"
                )
            return other
        try:
            return ImPoly.constant(RatFunc.coerce(other), self.symbol)
        except TypeError:
            return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for monomial, coeff in other._terms.items():
            total = terms.get(monomial)
            total = coeff if total is None else total + coeff
            if total.is_zero:
                terms.pop(monomial, None)
            else:
                terms[monomial] = total
        return ImPoly._from_clean(terms, self.symbol)

    __radd__ = __add__

    def __neg__(self) -> "ImPoly":
        return ImPoly._from_clean({m: -c for m, c in self._terms.items()}, self.symbol)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if not isinstance(other, ImPoly):
            try:
                scalar = RatFunc.coerce(other)
            except TypeError:
                return NotImplemented
            if scalar.is_zero:
                return ImPoly._from_clean({}, self.symbol)
            return ImPoly._from_clean(
                {m: c * scalar for m, c in self._terms.items()}, self.symbol
            )
        other = self._lift(other)
        products: Dict[Monomial, List[Tuple[RatFunc, RatFunc]]] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                products.setdefault(_merge(m1, m2), []).append((c1, c2))
        return ImPoly._from_products(products, self.symbol)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "ImPoly":
        if exponent < 0:
            raise ValueError("Negative powers of polynomials are not defined")
        result = ImPoly.constant(1, self.symbol)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, ImPoly):
            return self.symbol == other.symbol and self._terms == other._terms
        try:
            return self._terms == ImPoly.constant(RatFunc.coerce(other), self.symbol)._terms
        except TypeError:
            return NotImplemented

    __hash__ = None  # type: ignore

    # ---------- maps ----------

    def map_coefficients(
        self, func: Callable[[RatFunc], Scalar], symbol: Optional[str] = None
    ) -> "ImPoly":
        return ImPoly(
            {m: func(c) for m, c in self._terms.items()}, symbol or self.symbol
        )

    def bar(self) -> "ImPoly":
        """Apply q -> q^-1 to every coefficient."""
        return self.map_coefficients(RatFunc.bar)

    def specialize_q1(self) -> "ImPoly":
        """Coefficientwise value at q = 1; E~ generators are renamed e~.

        Raises:
            PoleError: if a coefficient has a pole at q = 1.
        """
        symbol = CLASSICAL if self.symbol == TILDE else self.symbol
        return self.map_coefficients(lambda c: RatFunc(specialize_q1(c)), symbol)

    def substitute(self, images: Mapping[int, "ImPoly"], symbol: str) -> "ImPoly":
        """Replace generator s by images[s] (all images in the given symbol)."""
        powers: Dict[Tuple[int, int], ImPoly] = {}

        def power(s: int, e: int) -> ImPoly:
            if (s, e) not in powers:
                powers[(s, e)] = images[s] if e == 1 else power(s, e - 1) * images[s]
            return powers[(s, e)]

        products: Dict[Monomial, List[Tuple[RatFunc, RatFunc]]] = {}
        for monomial, coeff in self._terms.items():
            term = ImPoly.constant(1, symbol)
            for s, e in monomial:
                term = term * power(s, e)
            for image_monomial, image_coeff in term._terms.items():
                products.setdefault(image_monomial, []).append((image_coeff, coeff))
        return ImPoly._from_products(products, symbol)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for monomial, coeff in self.terms():
            factors = "*".join(
                f"{self.symbol}_{s}" + (f"^{e}" if e > 1 else "") for s, e in monomial
            )
            if not factors:
                pieces.append(f"({coeff})")
            elif coeff == 1:
                pieces.append(factors)
            else:
                pieces.append(f"({coeff})*{factors}")
        return " + ".join(pieces)

    def __repr__(self) -> str:
        return f"ImPoly({str(self)!r})"


def bar(f: ImPoly) -> ImPoly:
    """Coefficientwise q -> q^-1, the action of the E <-> F mirror on coefficients."""
    return f.bar()


@dataclass(frozen=True)
class ImFamily:
    """Members F_r of an imaginary root vector family, indexed by r.

    Attributes:
        name: family name, e.g. "E", "Edot", "Edot_bracket".
        d: the symmetrizer d_i entering through q_i = q^{d_i}.
        k: the block parameter of the bracket/angle families (1 otherwise).
        members: mapping r -> polynomial.
    """

    name: str
    d: int
    k: int
    members: Dict[int, ImPoly] = field(compare=False)

    def __getitem__(self, r: int) -> ImPoly:
        return self.members[r]

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def items(self) -> List[Tuple[int, ImPoly]]:
        return sorted(self.members.items())

    @property
    def order(self) -> int:
        return max(self.members)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ImFamily):
            return NotImplemented
        return self.items() == other.items()


# ---------- scalars ----------


def _q_i(d: int, exponent: int = 1) -> RatFunc:
    return RatFunc.q_power(d * exponent)


def _c(d: int) -> RatFunc:
    """q_i - q_i^-1."""
    return RatFunc(q_minus_inverse(d))


def _hat_factor(d: int, s: int) -> RatFunc:
    """s / [s]_{q_i}, the factor with E^_s = (s / [s]_{q_i}) E_s."""
    return RatFunc(s) / q_int(s, d)


def _check_order(d: int, T: int) -> None:
    if d < 1:
        raise ValueError(f"Invalid symmetrizer d_i={d}")
    if T < 1:
        raise ValueError(f"Invalid truncation order T={T}")


# ---------- families in E~ coordinates ----------


def _log_input(d: int, T: int) -> SeriesVec:
    """The sequence 1, -(q_i - q_i^-1) E~_1, ..., -(q_i - q_i^-1) E~_T."""
    c = _c(d)
    return SeriesVec(
        [ImPoly.constant(1)] + [ImPoly.generator(s) * (-c) for s in range(1, T + 1)]
    )


@lru_cache(maxsize=None)
def _e_members(d: int, T: int) -> Tuple[ImPoly, ...]:
    log.debug("Computing E family for d=%d up to order %d", d, T)
    inverse_c = _c(d).inverse()
    x = phi_transform(_log_input(d, T))
    return (ImPoly.constant(1),) + tuple(x[r] * inverse_c for r in range(1, T + 1))


def family_E(d: int, T: int) -> ImFamily:
    """E_r for 1 <= r <= T, from log(1 - (q_i - q_i^-1) sum_s E~_s z^s).

    The generating series is read with z^s inside the sum.
    """
    _check_order(d, T)
    members = _e_members(d, T)
    return ImFamily("E", d, 1, {r: members[r] for r in range(1, T + 1)})


def family_E_log_oracle(d: int, T: int) -> ImFamily:
    """E_r from a direct expansion of the logarithm, independent of Phi."""
    _check_order(d, T)
    inverse_c = _c(d).inverse()
    x = log_composition(_log_input(d, T))
    return ImFamily("E", d, 1, {r: x[r] * inverse_c for r in range(1, T + 1)})


def family_Edot(d: int, T: int) -> ImFamily:
    """Edot_r with Edot_0 = 1 and Edot_r = q_i^r / [r]_{q_i} sum_s E~_s Edot_{r-s}."""
    _check_order(d, T)
    members = {0: ImPoly.constant(1)}
    for r in range(1, T + 1):
        total = ImPoly.constant(0)
        for s in range(1, r + 1):
            total = total + ImPoly.generator(s) * members[r - s]
        members[r] = total * (_q_i(d, r) / q_int(r, d))
    return ImFamily("Edot", d, 1, members)


def family_Edot_via_E(d: int, T: int) -> ImFamily:
    """Edot_r = -(1/r) sum_s q_i^s (s / [s]_{q_i}) E_s Edot_{r-s}."""
    _check_order(d, T)
    e = _e_members(d, T)
    members = {0: ImPoly.constant(1)}
    for r in range(1, T + 1):
        total = ImPoly.constant(0)
        for s in range(1, r + 1):
            total = total + e[s] * members[r - s] * (_q_i(d, s) * _hat_factor(d, s))
        members[r] = total * Fraction(-1, r)
    return ImFamily("Edot", d, 1, members)


@lru_cache(maxsize=None)
def _hat_members(d: int, T: int) -> Tuple[ImPoly, ...]:
    e = _e_members(d, T)
    return (ImPoly.constant(1),) + tuple(e[r] * _hat_factor(d, r) for r in range(1, T + 1))


def family_Ehat(d: int, T: int) -> ImFamily:
    """E^_r = (r / [r]_{q_i}) E_r."""
    _check_order(d, T)
    members = _hat_members(d, T)
    return ImFamily("Ehat", d, 1, {r: members[r] for r in range(1, T + 1)})


def divided_power_hat(d: int, r: int, k: int) -> ImPoly:
    """E^_r^k / k! with the plain factorial."""
    if k < 0:
        raise ValueError(f"Invalid divided power exponent: {k}")
    if k == 0:
        return ImPoly.constant(1)
    factorial = 1
    for j in range(2, k + 1):
        factorial *= j
    return _hat_members(d, r)[r] ** k * Fraction(1, factorial)


def family_Edot_angle(d: int, k: int, T: int) -> ImFamily:
    """Edot<k>_r from (r)_{q_i^-2} Edot<k>_r = sum_s q_i E~_{sk} Edot<k>_{r-s}."""
    _check_order(d, T)
    _check_k(k)
    base = _q_i(d, -2)
    members = {0: ImPoly.constant(1)}
    for r in range(1, T + 1):
        total = ImPoly.constant(0)
        for s in range(1, r + 1):
            total = total + ImPoly.generator(s * k) * members[r - s]
        members[r] = total * (_q_i(d) / paren_q(r, base))
    return ImFamily("Edot_angle", d, k, members)


def _check_k(k: int) -> None:
    if k < 1:
        raise ValueError(f"Invalid block parameter k={k}")


# ---------- the bracket family ----------


@lru_cache(maxsize=None)
def _bracket_by_recursion(d: int, k: int, T: int) -> Tuple[ImPoly, ...]:
    """Edot[k]_r in E coordinates by the explicit recursion."""
    members = [ImPoly.constant(1, ROOT_VECTOR)]
    for r in range(1, T + 1):
        total = ImPoly.constant(0, ROOT_VECTOR)
        for s in range(1, r + 1):
            weight = _q_i(d, k * s) * _hat_factor(d, s * k)
            total = total + ImPoly.generator(s * k, ROOT_VECTOR) * members[r - s] * weight
        members.append(total * Fraction(-1, r))
    return tuple(members)


@lru_cache(maxsize=None)
def _bracket_by_psi(d: int, k: int, T: int) -> Tuple[ImPoly, ...]:
    """Edot[k] as Psi of the sequence -(q_i^{kr} / r) E^_{rk}, in E^ coordinates."""
    x = [ImPoly.constant(1, HAT)] + [
        ImPoly.generator(r * k, HAT) * (_q_i(d, k * r) * Fraction(-1, r))
        for r in range(1, T + 1)
    ]
    return tuple(psi_transform(SeriesVec(x)))


def to_coordinates(poly: ImPoly, symbol: str, d: int) -> ImPoly:
    """Rewrite a polynomial in E, E^ or E~ generators in the given generators."""
    if poly.symbol == symbol:
        return poly
    top = max(poly.max_index(), 1)
    source = poly.symbol
    if symbol == TILDE and source in (ROOT_VECTOR, HAT):
        members = _e_members(d, top) if source == ROOT_VECTOR else _hat_members(d, top)
        images = {s: members[s] for s in range(1, top + 1)}
    elif (source, symbol) == (ROOT_VECTOR, HAT):
        images = {
            s: ImPoly.generator(s, HAT) * _hat_factor(d, s).inverse()
            for s in range(1, top + 1)
        }
    elif (source, symbol) == (HAT, ROOT_VECTOR):
        images = {
            s: ImPoly.generator(s, ROOT_VECTOR) * _hat_factor(d, s)
            for s in range(1, top + 1)
        }
    else:
        raise ValueError(f"Cannot rewrite {source} coordinates in {symbol} coordinates")
    return poly.substitute(images, symbol)


def family_Edot_bracket(
    d: int, k: int, T: int, method: str = "recursion", symbol: str = TILDE
) -> ImFamily:
    """Edot[k]_r for 0 <= r <= T.

    Args:
        method: "recursion" for the explicit recursion through E_{sk},
            "psi" for Psi applied to -(q_i^{kr} / r) E^_{rk}.
        symbol: coordinates of the result (E~ by default).
    """
    _check_order(d, T)
    _check_k(k)
    if method not in ("recursion", "psi"):
        raise ValueError(f"Invalid method: {method}")
    members = _bracket_members(d, k, T, method, symbol)
    return ImFamily("Edot_bracket", d, k, dict(enumerate(members)))


@lru_cache(maxsize=None)
def _bracket_members(
    d: int, k: int, T: int, method: str, symbol: str
) -> Tuple[ImPoly, ...]:
    if method == "recursion":
        raw = _bracket_by_recursion(d, k, T)
    else:
        raw = _bracket_by_psi(d, k, T)
    log.debug("Rewriting Edot[%d] (d=%d, T=%d) in %s coordinates", k, d, T, symbol)
    return tuple(to_coordinates(poly, symbol, d) for poly in raw)


# ---------- classical families ----------


def classical_Lambda(k: int, T: int) -> ImFamily:
    """Lambda<k>_r = Psi((1/r) e~_{rk})_r over Q."""
    _check_k(k)
    if T < 1:
        raise ValueError(f"Invalid truncation order T={T}")
    x = [ImPoly.constant(1, CLASSICAL)] + [
        ImPoly.generator(r * k, CLASSICAL) * Fraction(1, r) for r in range(1, T + 1)
    ]
    y = psi_transform(SeriesVec(x))
    return ImFamily("Lambda", 1, k, dict(enumerate(y)))


def specialize_family(family: ImFamily) -> ImFamily:
    """q = 1 specialization of every member."""
    return ImFamily(
        family.name + "|q=1",
        family.d,
        family.k,
        {r: poly.specialize_q1() for r, poly in family.items()},
    )


# ---------- reports ----------


@dataclass
class IdentityReport:
    """Outcome of comparing two computations member by member.

    Attributes:
        name: what was compared.
        holds: whether every member agreed.
        failing_index: first index where the two sides differ.
        lhs, rhs: the two sides at the failing index.
    """

    name: str
    holds: bool
    failing_index: Optional[int] = None
    lhs: Optional[ImPoly] = None
    rhs: Optional[ImPoly] = None


def _compare(name: str, pairs: List[Tuple[int, ImPoly, ImPoly]]) -> IdentityReport:
    for index, lhs, rhs in pairs:
        if lhs != rhs:
            return IdentityReport(name, False, index, lhs, rhs)
    return IdentityReport(name, True)


def check_double_definitions(d: int, k: int, T: int) -> List[IdentityReport]:
    """Compare the alternative constructions of E, Edot and Edot[k]."""
    reports = []
    e, oracle = family_E(d, T), family_E_log_oracle(d, T)
    reports.append(
        _compare(f"E log expansion (d={d})", [(r, e[r], oracle[r]) for r in e])
    )
    dot, dot_e = family_Edot(d, T), family_Edot_via_E(d, T)
    reports.append(
        _compare(f"Edot recursions (d={d})", [(r, dot[r], dot_e[r]) for r in dot])
    )
    by_recursion = _bracket_by_recursion(d, k, T)
    by_psi = [to_coordinates(p, ROOT_VECTOR, d) for p in _bracket_by_psi(d, k, T)]
    reports.append(
        _compare(
            f"Edot[{k}] recursion vs Psi (d={d})",
            [(r, by_recursion[r], by_psi[r]) for r in range(T + 1)],
        )
    )
    return reports


def check_specializations(d: int, k: int, T: int) -> List[IdentityReport]:
    """q = 1 values of E, E^, Edot[k] and Edot<k> against -e~ and Lambda<k>."""
    minus_e = {r: -ImPoly.generator(r, CLASSICAL) for r in range(1, T + 1)}
    lam = classical_Lambda(k, T)
    reports = []
    for family in (family_E(d, T), family_Ehat(d, T)):
        reports.append(
            _compare(
                f"{family.name}|q=1 = -e (d={d})",
                [(r, p.specialize_q1(), minus_e[r]) for r, p in family.items()],
            )
        )
    for family in (family_Edot_bracket(d, k, T), family_Edot_angle(d, k, T)):
        reports.append(
            _compare(
                f"{family.name}[k={k}]|q=1 = Lambda (d={d})",
                [(r, p.specialize_q1(), lam[r]) for r, p in family.items()],
            )
        )
    return reports


def check_series_relation(d: int, k: int, T: int) -> IdentityReport:
    """Edot<k>(q_i^-2 z) = (1 - (q_i - q_i^-1) sum_r E~_{rk} z^r) Edot<k>(z) mod z^{T+1}."""
    angle = family_Edot_angle(d, k, T)
    series = SeriesVec([angle[r] for r in range(T + 1)])
    lhs = scale_variable(series, _q_i(d, -2))
    factor = SeriesVec(
        [ImPoly.constant(1)]
        + [ImPoly.generator(r * k) * (-_c(d)) for r in range(1, T + 1)]
    )
    rhs = factor * series
    return _compare(
        f"generating series relation (d={d}, k={k})",
        [(r, lhs[r], rhs[r]) for r in range(T + 1)],
    )


def check_hat_dot_relation(d: int, T: int) -> IdentityReport:
    """E^_r = -r q_i^-r Edot_r - sum_{h<r} q_i^{h-r} E^_h Edot_{r-h}."""
    hat, dot = family_Ehat(d, T), family_Edot(d, T)
    pairs = []
    for r in range(1, T + 1):
        rhs = dot[r] * (_q_i(d, -r) * (-r))
        for h in range(1, r):
            rhs = rhs - hat[h] * dot[r - h] * _q_i(d, h - r)
        pairs.append((r, hat[r], rhs))
    return _compare(f"E^ / Edot relation (d={d})", pairs)


@dataclass
class CoefficientReport:
    """Coefficients of a family failing a property.

    Attributes:
        name: family and property.
        failures: (r, monomial, detail) for each failing coefficient.
    """

    name: str
    failures: List[Tuple[int, Monomial, str]] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.failures

    @property
    def first_index(self) -> Optional[int]:
        """Smallest r with a failing coefficient, None if every coefficient passes."""
        return min((r for r, _, _ in self.failures), default=None)


def integrality_report(family: ImFamily) -> CoefficientReport:
    """Record which coefficients lie outside Z[q, q^-1]; nothing is asserted."""
    report = CoefficientReport(f"{family.name} integrality")
    for r, poly in family.items():
        for monomial, coeff in poly.terms():
            if not (coeff.is_laurent and coeff.num.is_integral()):
                report.failures.append((r, monomial, str(coeff)))
    return report


def regularity_report(family: ImFamily, orders: List[int]) -> CoefficientReport:
    """Record the coefficients with a pole at a primitive root of unity of the given orders.

    Regularity is a property of the chosen coordinates. E_r has Laurent
    polynomial coefficients, but the E~_r coefficient of Edot_r is
    q_i^r / [r]_{q_i}, so Edot_r is regular at an odd order ell (coprime to
    d_i) for r < ell and first has a pole at r = ell.
    """
    report = CoefficientReport(f"{family.name} regularity at {orders}")
    for r, poly in family.items():
        for monomial, coeff in poly.terms():
            for order in orders:
                if not is_regular_at(coeff, order):
                    report.failures.append((r, monomial, f"pole at order {order}"))
    return report


__all__ = [
    "CLASSICAL",
    "HAT",
    "ROOT_VECTOR",
    "TILDE",
    "CoefficientReport",
    "IdentityReport",
    "ImFamily",
    "ImPoly",
    "PoleError",
    "bar",
    "check_double_definitions",
    "check_hat_dot_relation",
    "check_series_relation",
    "check_specializations",
    "classical_Lambda",
    "divided_power_hat",
    "family_E",
    "family_E_log_oracle",
    "family_Edot",
    "family_Edot_angle",
    "family_Edot_bracket",
    "family_Edot_via_E",
    "family_Ehat",
    "integrality_report",
    "monomial_degree",
    "regularity_report",
    "specialize_family",
    "to_coordinates",
]
