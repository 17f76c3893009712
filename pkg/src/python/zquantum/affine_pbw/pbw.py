"""Indexing of PBW monomials, toral basis elements and imaginary block transitions."""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np
from sympy.utilities.iterables import partitions

from . import linalg
from .imroots import HAT, CLASSICAL, ImPoly, classical_Lambda, family_Edot_bracket
from .qlaurent import (
    PoleError,
    RatFunc,
    is_regular_at,
    q_binom,
    q_minus_inverse,
    specialize_q1,
)
from .rootsys import CartanData, OrderedRoots, Root
from .typing import Partition, ToralIndex, Vector

log = logging.getLogger(__name__)

REAL_NORMALIZATIONS = ("q-divided", "bare", "rescaled")
IMAGINARY_NORMALIZATIONS = ("plain-divided", "bare")

INFINITY = "inf"


# ---------- exponent vectors ----------


@dataclass(frozen=True)
class ExpEntry:
    """Factor root^exp of a PBW monomial with its normalization.

    "q-divided" divides by [exp]_{q_alpha}!, "plain-divided" by exp!,
    "rescaled" multiplies by (q_alpha^-1 - q_alpha)^exp and "bare" does neither.
    """

    root: Root
    exp: int
    normalization: str

    def __post_init__(self):
        if self.exp < 1:
            raise ValueError(f"Invalid exponent {self.exp} for {self.root}")
        allowed = REAL_NORMALIZATIONS if self.root.is_real else IMAGINARY_NORMALIZATIONS
        if self.normalization not in allowed:
            raise ValueError(
                f"Invalid normalization {self.normalization} for {self.root}"
            )


def default_normalization(root: Root) -> str:
    return "q-divided" if root.is_real else "plain-divided"


class ExpVec:
    """Finitely supported exponents (n_alpha) on positive roots with multiplicity.

    With an ``order`` the factors are sorted by the convex order and iteration
    yields them in that order. Without one the vector is storage only: the
    factors keep the given sequence, which carries no ordering guarantee.
    Pairings, weights and serialization do not depend on the factor sequence;
    anything that does should call ``ordered`` first.
    """

    def __init__(
        self,
        support: Union[Mapping[Root, int], Iterable[ExpEntry]],
        order: Optional[OrderedRoots] = None,
        normalizations: Optional[Mapping[Root, str]] = None,
    ):
        if isinstance(support, Mapping):
            normalizations = normalizations or {}
            entries = [
                ExpEntry(root, exp, normalizations.get(root, default_normalization(root)))
                for root, exp in support.items()
                if exp
            ]
        else:
            entries = list(support)
        roots = [entry.root for entry in entries]
        if len(set(roots)) != len(roots):
            raise ValueError("Repeated root in exponent vector")
        if order is not None:
            entries.sort(key=lambda entry: order.position(entry.root))
        self._entries: Tuple[ExpEntry, ...] = tuple(entries)
        self.order = order

    def __iter__(self) -> Iterator[ExpEntry]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __getitem__(self, root: Root) -> int:
        for entry in self._entries:
            if entry.root == root:
                return entry.exp
        return 0

    def as_dict(self) -> Dict[Root, Tuple[int, str]]:
        return {entry.root: (entry.exp, entry.normalization) for entry in self._entries}

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExpVec):
            return NotImplemented
        return self.as_dict() == other.as_dict()

    def __add__(self, other: "ExpVec") -> "ExpVec":
        """Union of supports with exponents added; normalizations of self win."""
        exps: Dict[Root, int] = {}
        normalizations: Dict[Root, str] = {}
        for entry in list(other) + list(self):
            normalizations[entry.root] = entry.normalization
        for entry in list(self) + list(other):
            exps[entry.root] = exps.get(entry.root, 0) + entry.exp
        return ExpVec(exps, self.order or other.order, normalizations)

    def ordered(self, order: OrderedRoots) -> "ExpVec":
        """The same factors sorted by ``order``."""
        return ExpVec(self._entries, order)

    def with_normalization(self, real: str, imaginary: str) -> "ExpVec":
        return ExpVec(
            [
                ExpEntry(e.root, e.exp, real if e.root.is_real else imaginary)
                for e in self._entries
            ],
            self.order,
        )

    def divided(self) -> "ExpVec":
        """Divided powers: q-factorials on real roots, plain factorials on imaginary ones."""
        return self.with_normalization("q-divided", "plain-divided")

    def dual(self) -> "ExpVec":
        """The monomial of the dual basis: rescaled real powers, bare imaginary powers."""
        return self.with_normalization("rescaled", "bare")

    def __repr__(self) -> str:
        factors = ", ".join(
            f"{e.root}^{e.exp}[{e.normalization}]" for e in self._entries
        )
        return f"ExpVec({factors})"


def weight(v: ExpVec, size: Optional[int] = None) -> Vector:
    """sum_alpha n_alpha p(alpha) in the simple-root basis.

    Args:
        v: exponent vector.
        size: number of coordinates, needed only for an empty vector without order.
    """
    entries = list(v)
    if entries:
        size = len(entries[0].root.coords)
    elif size is None:
        if v.order is None:
            raise ValueError("The weight of an empty vector needs its size")
        size = v.order.data.rank + 1
    total = np.zeros(size, dtype=np.int64)
    for entry in entries:
        total += entry.exp * np.array(entry.root.projection(), dtype=np.int64)
    return tuple(int(c) for c in total)


def is_ordered(v: ExpVec, order: OrderedRoots) -> bool:
    """Whether consecutive factors are strictly increasing in the convex order."""
    roots = [entry.root for entry in v]
    return all(order.compare(a, b) == "less" for a, b in zip(roots, roots[1:]))


# ---------- toral elements ----------


class ToralElement:
    """Laurent polynomial in a single K_i with RatFunc coefficients.

    Attributes:
        i: index in I_0, I or I_infinity ("inf" for K_infinity).
        d: exponent of q_i = q^d.
    """

    __slots__ = ("i", "d", "_coeffs")

    def __init__(self, i: ToralIndex, d: int, coeffs: Mapping[int, RatFunc]):
        self.i, self.d = i, d
        self._coeffs: Dict[int, RatFunc] = {}
        for e, c in coeffs.items():
            c = RatFunc.coerce(c)
            if not c.is_zero:
                self._coeffs[e] = c

    @classmethod
    def one(cls, i: ToralIndex, d: int) -> "ToralElement":
        return cls(i, d, {0: RatFunc(1)})

    def degrees(self) -> List[int]:
        return sorted(self._coeffs)

    def terms(self) -> List[Tuple[int, RatFunc]]:
        return sorted(self._coeffs.items())

    def coefficient(self, degree: int) -> RatFunc:
        return self._coeffs.get(degree, RatFunc(0))

    def __mul__(self, other):
        if isinstance(other, ToralElement):
            if (other.i, other.d) != (self.i, self.d):
                raise ValueError(f"Cannot multiply K_{self.i} and K_{other.i} elements")
            product: Dict[int, RatFunc] = {}
            for e1, c1 in self._coeffs.items():
                for e2, c2 in other._coeffs.items():
                    product[e1 + e2] = product.get(e1 + e2, RatFunc(0)) + c1 * c2
            return ToralElement(self.i, self.d, product)
        scalar = RatFunc.coerce(other)
        return ToralElement(self.i, self.d, {e: c * scalar for e, c in self._coeffs.items()})

    __rmul__ = __mul__

    def shift(self, degree: int) -> "ToralElement":
        """Multiply by K_i^degree."""
        return ToralElement(self.i, self.d, {e + degree: c for e, c in self._coeffs.items()})

    def evaluate(self, m: int) -> RatFunc:
        """The value at K_i = q_i^m."""
        total = RatFunc(0)
        for e, c in self._coeffs.items():
            total = total + c * RatFunc.q_power(self.d * e * m)
        return total

    def __eq__(self, other) -> bool:
        if not isinstance(other, ToralElement):
            return NotImplemented
        return (self.i, self.d, self._coeffs) == (other.i, other.d, other._coeffs)

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        return " + ".join(f"({c})*K_{self.i}^{e}" for e, c in self.terms())

    def __repr__(self) -> str:
        return f"ToralElement({str(self)!r})"


def toral_element(i: ToralIndex, c: int, t: int, d: int = 1) -> ToralElement:
    """[K_i; c, t] = prod_{s=1}^t (q_i^{c-s+1} K_i - q_i^{-(c-s+1)} K_i^-1) / (q_i^s - q_i^-s)."""
    if t < 0:
        raise ValueError(f"Invalid toral bracket depth t={t}")
    result = ToralElement.one(i, d)
    for s in range(1, t + 1):
        denominator = RatFunc(q_minus_inverse(d * s))
        factor = ToralElement(
            i,
            d,
            {
                1: RatFunc.q_power(d * (c - s + 1)) / denominator,
                -1: -RatFunc.q_power(-d * (c - s + 1)) / denominator,
            },
        )
        result = result * factor
    return result


def basis_toral(i: ToralIndex, t: int, d: int = 1) -> ToralElement:
    """K_i^{-floor(t/2)} [K_i; 0, t]."""
    return toral_element(i, 0, t, d).shift(-(t // 2))


def toral_value_expected(m: int, c: int, t: int, d: int) -> RatFunc:
    """Value of [K_i; c, t] at K_i = q_i^m when m + c >= 0."""
    if m + c < 0:
        raise ValueError("Expected value is tabulated only for m + c >= 0")
    if m + c < t:
        return RatFunc(0)
    return RatFunc(q_binom(m + c, t, d))


def toral_index_set(data: CartanData, which: str = "I") -> List[ToralIndex]:
    """I_0 = {1..n}, I = {0..n} or I_infinity = I + {infinity}."""
    if which == "I_0":
        return list(range(1, data.rank + 1))
    if which == "I":
        return list(range(0, data.rank + 1))
    if which == "I_inf":
        return list(range(0, data.rank + 1)) + [INFINITY]
    raise ValueError(f"Invalid toral index set: {which}")


def toral_symmetrizer(data: CartanData, i: ToralIndex) -> int:
    """d_i, with q_infinity = q."""
    return 1 if i == INFINITY else data.d[i]


def basis_toral_monomial(
    data: CartanData, exponents: Mapping[ToralIndex, int], which: str = "I"
) -> Tuple[ToralElement, ...]:
    """Factors prod_i K_i^{-floor(t_i/2)} [K_i; 0, t_i] over the chosen index set."""
    indices = toral_index_set(data, which)
    unknown = set(exponents) - set(indices)
    if unknown:
        raise ValueError(f"Indices {sorted(map(str, unknown))} not in {which}")
    return tuple(
        basis_toral(i, exponents.get(i, 0), toral_symmetrizer(data, i)) for i in indices
    )


@dataclass
class ToralRegularityReport:
    """Regularity data of basis_toral(i, t) for t <= t_max.

    Attributes:
        coefficient_poles: (t, K-degree, order) for every coefficient in the
            K_i basis with a pole at a sampled order. These come from the
            factors q_i^s - q_i^-s of the denominators and are observations.
        values_checked: number of values at K_i = q_i^m found integral.
    """

    i: ToralIndex
    d: int
    t_max: int
    orders: List[int]
    coefficient_poles: List[Tuple[int, int, int]] = field(default_factory=list)
    values_checked: int = 0


def toral_regularity_report(
    i: ToralIndex, t_max: int, d: int, sample_orders: Sequence[int]
) -> ToralRegularityReport:
    """Check basis_toral(i, t), t <= t_max, at the sampled orders.

    Every value at K_i = q_i^m, |m| <= t_max + 1, must be a Laurent polynomial
    with integer coefficients, equal to q_i^{-m floor(t/2)} times the Gaussian
    binomial [m, t]_{q_i} for m >= 0. Poles of single coefficients are recorded.

    Raises:
        PoleError: if a value has a pole at a sampled order.
        ArithmeticError: if a value is not the expected integral one.
    """
    report = ToralRegularityReport(i, d, t_max, list(sample_orders))
    for t in range(t_max + 1):
        element = basis_toral(i, t, d)
        for degree, coeff in element.terms():
            for order in sample_orders:
                if not is_regular_at(coeff, order):
                    report.coefficient_poles.append((t, degree, order))
        for m in range(-t_max - 1, t_max + 2):
            value = element.evaluate(m)
            for order in sample_orders:
                if not is_regular_at(value, order):
                    raise PoleError(
                        f"Toral basis element with t={t}, d={d} has a pole at "
                        f"order {order} when K_{i} = q_{i}^{m}",
                        factor=f"Phi_{order}",
                    )
            if not (value.is_laurent and value.num.is_integral()):
                raise ArithmeticError(
                    f"Toral basis element with t={t}, d={d} takes the non-integral "
                    f"value {value} at K_{i} = q_{i}^{m}"
                )
            if m >= 0:
                expected = toral_value_expected(m, 0, t, d) * RatFunc.q_power(
                    -d * m * (t // 2)
                )
                if value != expected:
                    raise ArithmeticError(
                        f"Toral basis element with t={t}, d={d} at K_{i} = q_{i}^{m}: "
                        f"got {value}, expected {expected}"
                    )
            report.values_checked += 1
    return report


# ---------- imaginary block transitions ----------


def _partitions(r: int) -> List[Partition]:
    return [dict(p) for p in partitions(r)]


def _parts(partition: Partition) -> int:
    return sum(partition.values())


def _divided_hat_monomial(partition: Partition, k: int, symbol: str) -> ImPoly:
    """prod_z E^_{zk}^{n_z} / n_z! (or the classical e~ analogue)."""
    monomial = tuple(sorted((z * k, n) for z, n in partition.items()))
    denominator = 1
    for n in partition.values():
        denominator *= factorial(n)
    return ImPoly({monomial: Fraction(1, denominator)}, symbol)


def _family_monomial(members: Mapping[int, ImPoly], partition: Partition, symbol: str) -> ImPoly:
    result = ImPoly.constant(1, symbol)
    for z, n in partition.items():
        result = result * members[z] ** n
    return result


def _coordinates(poly: ImPoly, basis: List[Partition], k: int) -> List[RatFunc]:
    """Coefficients of poly in the divided monomials indexed by basis."""
    row = []
    for partition in basis:
        monomial = tuple(sorted((z * k, n) for z, n in partition.items()))
        scale = 1
        for n in partition.values():
            scale *= factorial(n)
        row.append(poly.coefficient(monomial) * scale)
    return row


def classical_transition(k: int, T: int) -> Dict[int, List[List[Fraction]]]:
    """Per degree r <= T, the matrix C with prod Lambda_z^{n_z} = sum C e~-divided monomials."""
    lam = classical_Lambda(k, T)
    blocks = {}
    for r in range(T + 1):
        basis = _partitions(r)
        rows = []
        for partition in basis:
            monomial = _family_monomial(dict(lam.items()), partition, CLASSICAL)
            rows.append([specialize_q1(c) for c in _coordinates(monomial, basis, k)])
        blocks[r] = rows
    return blocks


@dataclass
class BlockReport:
    """Round trip between Edot[k]-monomials and divided powers of E^ in one degree.

    Attributes:
        r: degree in units of k delta.
        basis: partitions of r indexing both monomial bases.
        forward: P with Edot[k]-monomial = sum P E^-divided monomial.
        backward: the inverse of P.
    """

    r: int
    basis: List[Partition]
    forward: List[List[RatFunc]]
    backward: List[List[RatFunc]]
    inverse_ok: bool
    reconstructs: bool
    classical_ok: bool

    @property
    def holds(self) -> bool:
        return self.inverse_ok and self.reconstructs and self.classical_ok


@dataclass
class BlockTransitionReport:
    d: int
    k: int
    T: int
    blocks: List[BlockReport] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return all(block.holds for block in self.blocks)


def block_transition_roundtrip(d: int, k: int, T: int) -> BlockTransitionReport:
    """Transition matrices between the Edot[k] and E^-divided-power blocks.

    Degree r blocks (delta-degree r k) are indexed by partitions of r. The
    forward matrix is read off in E^ coordinates, inverted exactly, and both
    directions are verified as identities of polynomials. At q = 1 the
    forward matrix must equal the classical transition up to the sign
    (-1)^{number of factors} coming from E^_r|_{q=1} = -e~_r.

    Raises:
        SingularMatrixError: if a block is not invertible.
    """
    bracket = family_Edot_bracket(d, k, T, symbol=HAT)
    classical = classical_transition(k, T)
    report = BlockTransitionReport(d, k, T)
    for r in range(T + 1):
        basis = _partitions(r)
        sources = [_family_monomial(bracket.members, p, HAT) for p in basis]
        targets = [_divided_hat_monomial(p, k, HAT) for p in basis]
        forward = [_coordinates(poly, basis, k) for poly in sources]
        backward = linalg.inverse(forward)
        inverse_ok = linalg.is_identity(linalg.matmul(forward, backward))
        reconstructs = all(
            _combine(forward[a], targets) == sources[a] for a in range(len(basis))
        ) and all(_combine(backward[a], sources) == targets[a] for a in range(len(basis)))
        classical_ok = all(
            specialize_q1(forward[a][b]) * (-1) ** _parts(basis[b]) == classical[r][a][b]
            for a in range(len(basis))
            for b in range(len(basis))
        )
        log.debug("Block r=%d (d=%d, k=%d): size %d", r, d, k, len(basis))
        report.blocks.append(
            BlockReport(r, basis, forward, backward, inverse_ok, reconstructs, classical_ok)
        )
    return report


def _combine(coefficients: Sequence[RatFunc], polys: Sequence[ImPoly]) -> ImPoly:
    total = ImPoly.constant(0, polys[0].symbol)
    for coeff, poly in zip(coefficients, polys):
        total = total + poly * coeff
    return total


__all__ = [
    "INFINITY",
    "BlockReport",
    "BlockTransitionReport",
    "ExpEntry",
    "ExpVec",
    "ToralElement",
    "ToralRegularityReport",
    "basis_toral",
    "basis_toral_monomial",
    "block_transition_roundtrip",
    "classical_transition",
    "default_normalization",
    "is_ordered",
    "toral_element",
    "toral_index_set",
    "toral_regularity_report",
    "toral_symmetrizer",
    "toral_value_expected",
    "weight",
]
