"""Untwisted affine root data, Weyl reflections and the convex order on roots.

Coordinates of lattice vectors are integer tuples over (alpha_0, ..., alpha_n),
optionally followed by the coefficient of alpha_infinity. Finite data follow
the Bourbaki numbering with a_ij = <alpha_i^vee, alpha_j>.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np
import sympy

from .qlaurent import LaurentPoly
from .typing import Vector

log = logging.getLogger(__name__)


DEFAULT_LEVEL = 6

# Classical series start at a minimal rank; exceptional types have fixed ranks.
_MINIMAL_RANK = {"A": 1, "B": 3, "C": 2, "D": 4}
_EXCEPTIONAL_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}

_POSITIVE_ROOT_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


class IotaValidationError(ValueError):
    """Raised when a word does not define a valid enumeration of real roots.

    Attributes:
        k: first offending index of the word, or None for coverage failures.
    """

    def __init__(self, message: str, k: Optional[int] = None):
        super().__init__(message)
        self.k = k


def minimal_rank(letter: str) -> int:
    """Smallest rank of the type letter, used when no rank is given."""
    letter = letter.strip().upper()
    if letter in _MINIMAL_RANK:
        return _MINIMAL_RANK[letter]
    if letter in _EXCEPTIONAL_RANKS:
        return _EXCEPTIONAL_RANKS[letter][0]
    raise ValueError(f"Invalid type label: {letter}")


def validate_type(type_label: str, rank: Optional[int] = None) -> Tuple[str, int]:
    """Normalize a type such as ("A", 2) or "E6" to (letter, rank).

    Raises:
        ValueError: for anything that is not an untwisted affine type.
    """
    label = type_label.strip().upper()
    letter, digits = label[:1], label[1:]
    if digits:
        if not digits.isdigit():
            raise ValueError(f"Invalid type label: {type_label}")
        if rank is not None and rank != int(digits):
            raise ValueError(f"Type label {type_label} contradicts rank {rank}")
        rank = int(digits)
    if rank is None:
        raise ValueError(f"Missing rank for type {type_label}")
    if letter in _MINIMAL_RANK:
        if rank < _MINIMAL_RANK[letter]:
            raise ValueError(
                f"Invalid type {letter}_{rank}: rank must be at least "
                f"{_MINIMAL_RANK[letter]}"
            )
    elif letter in _EXCEPTIONAL_RANKS:
        if rank not in _EXCEPTIONAL_RANKS[letter]:
            raise ValueError(f"Invalid type {letter}_{rank}")
    else:
        raise ValueError(f"Invalid type label: {type_label}")
    return letter, rank


def _finite_edges(letter: str, n: int) -> Dict[Tuple[int, int], int]:
    """Off-diagonal nonzero entries a_ij of the finite Cartan matrix (1-based)."""
    entries: Dict[Tuple[int, int], int] = {}

    def join(i: int, j: int, a_ij: int = -1, a_ji: int = -1):
        entries[(i, j)], entries[(j, i)] = a_ij, a_ji

    if letter == "E":
        chain = [(1, 3), (3, 4), (2, 4)] + [(k, k + 1) for k in range(4, n)]
        for i, j in chain:
            join(i, j)
        return entries
    if letter == "D":
        for i in range(1, n - 1):
            join(i, i + 1)
        join(n - 2, n)
        return entries
    for i in range(1, n):
        join(i, i + 1)
    if letter == "B":
        join(n - 1, n, -1, -2)
    elif letter == "C":
        join(n - 1, n, -2, -1)
    elif letter == "F":
        join(2, 3, -1, -2)
    elif letter == "G":
        join(1, 2, -3, -1)
    return entries


def dynkin_graph(letter: str, n: int) -> nx.Graph:
    """The finite Dynkin diagram on nodes 1..n (edges carry the pair (a_ij, a_ji))."""
    entries = _finite_edges(letter, n)
    graph = nx.Graph()
    graph.add_nodes_from(range(1, n + 1))
    for (i, j), a_ij in entries.items():
        if i < j:
            graph.add_edge(i, j, cartan=(a_ij, entries[(j, i)]))
    return graph


def _symmetrizers(graph: nx.Graph, matrix: np.ndarray) -> List[int]:
    """Coprime positive d with d_i a_ij = d_j a_ji, propagated along the diagram."""
    d: Dict[int, Fraction] = {1: Fraction(1)}
    for i, j in nx.bfs_edges(graph, 1):
        d[j] = d[i] * int(matrix[i - 1][j - 1]) / int(matrix[j - 1][i - 1])
    common = 1
    for value in d.values():
        common = common * value.denominator // gcd(common, value.denominator)
    scaled = [int(d[i] * common) for i in sorted(d)]
    divisor = 0
    for value in scaled:
        divisor = gcd(divisor, value)
    return [value // divisor for value in scaled]


def _finite_positive_roots(matrix: np.ndarray) -> List[Vector]:
    """Positive roots by closure of the simple roots under simple reflections."""
    n = matrix.shape[0]
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    found = set(simple)
    frontier = list(simple)
    while frontier:
        next_frontier = []
        for root in frontier:
            vec = np.array(root, dtype=np.int64)
            for i in range(n):
                image = vec.copy()
                image[i] -= int(matrix[i] @ vec)
                image_t = tuple(int(c) for c in image)
                if all(c >= 0 for c in image_t) and image_t not in found:
                    found.add(image_t)
                    next_frontier.append(image_t)
        frontier = next_frontier
    return sorted(found, key=lambda r: (sum(r), r))


@dataclass(frozen=True)
class CartanData:
    """Affine Cartan data of an untwisted affine type.

    Attributes:
        type_letter: one of A, B, C, D, E, F, G.
        rank: rank n of the finite type.
        matrix: affine Cartan matrix indexed by I = {0..n}.
        d: symmetrizers, DA symmetric, coprime with min(d) = 1.
        o: signs o(1..n) stored at positions 0..n-1.
        marks: coefficients of delta in the simple-root basis, marks[0] = 1.
    """

    type_letter: str
    rank: int
    matrix: Tuple[Tuple[int, ...], ...]
    d: Tuple[int, ...]
    o: Tuple[int, ...]
    marks: Tuple[int, ...]
    finite_positive_roots: Tuple[Vector, ...] = field(repr=False, compare=False)

    @property
    def label(self) -> str:
        return f"{self.type_letter}{self.rank}"

    @property
    def n(self) -> int:
        return self.rank

    @cached_property
    def cartan(self) -> np.ndarray:
        return np.array(self.matrix, dtype=np.int64)

    @cached_property
    def finite_cartan(self) -> np.ndarray:
        return self.cartan[1:, 1:]

    @cached_property
    def gram(self) -> np.ndarray:
        """Matrix of the bilinear form on Q_infinity = Q + Z alpha_infinity."""
        size = self.rank + 2
        gram = np.zeros((size, size), dtype=np.int64)
        gram[: size - 1, : size - 1] = np.diag(self.d) @ self.cartan
        gram[-1, 0] = gram[0, -1] = 1
        return gram

    @property
    def delta(self) -> Vector:
        return self.marks

    def sign(self, i: int) -> int:
        """o(i) for i in I_0 = {1..n}."""
        return self.o[i - 1]

    def level(self, coords: Sequence[int]) -> int:
        """Least N with N*delta - beta in Q_+ for a positive root beta."""
        return max(-(-c // m) for c, m in zip(coords, self.marks))


@lru_cache(maxsize=None)
def cartan_affine(type_label: str, n: Optional[int] = None) -> CartanData:
    """Build the affine Cartan data; node 0 is attached through the highest root.

    Raises:
        ValueError: for an invalid (type, rank) pair.
    """
    letter, n = validate_type(type_label, n)
    finite = np.eye(n, dtype=np.int64) * 2
    for (i, j), a_ij in _finite_edges(letter, n).items():
        finite[i - 1][j - 1] = a_ij
    graph = dynkin_graph(letter, n)
    d = _symmetrizers(graph, finite)
    positive = _finite_positive_roots(finite)
    expected = _POSITIVE_ROOT_COUNTS[letter](n)
    if len(positive) != expected:
        raise RuntimeError(
            f"Found {len(positive)} positive roots for {letter}_{n}, "
            f"expected {expected}"
        )
    theta = np.array(max(positive, key=sum), dtype=np.int64)
    # (alpha_i | alpha_j) = d_i a_ij on the finite part.
    form = np.diag(d) @ finite
    theta_form = theta @ form
    theta_norm = int(theta_form @ theta)
    affine = np.zeros((n + 1, n + 1), dtype=np.int64)
    affine[1:, 1:] = finite
    affine[0, 0] = 2
    for j in range(1, n + 1):
        a_0j = Fraction(-2 * int(theta_form[j - 1]), theta_norm)
        if a_0j.denominator != 1:
            raise RuntimeError(f"Non-integral affine Cartan entry a_0{j} = {a_0j}")
        affine[0, j] = int(a_0j)
        affine[j, 0] = -int(finite[j - 1] @ theta)
    d_affine = (theta_norm // 2,) + tuple(d)
    marks = (1,) + tuple(int(c) for c in theta)
    signs = o_sign_from_graph(graph)
    data = CartanData(
        type_letter=letter,
        rank=n,
        matrix=tuple(tuple(int(c) for c in row) for row in affine),
        d=d_affine,
        o=signs,
        marks=marks,
        finite_positive_roots=tuple(positive),
    )
    _check_cartan_invariants(data)
    log.debug("Built affine Cartan data for %s: d=%s marks=%s", data.label, d, marks)
    return data


def _check_cartan_invariants(data: CartanData) -> None:
    a = data.cartan
    size = data.rank + 1
    for i in range(size):
        if a[i, i] != 2:
            raise RuntimeError(f"a_{i}{i} != 2 for {data.label}")
        for j in range(size):
            if i != j and (a[i, j] > 0 or (a[i, j] == 0) != (a[j, i] == 0)):
                raise RuntimeError(f"Invalid Cartan entries at ({i}, {j})")
    symmetric = np.diag(data.d) @ a
    if not np.array_equal(symmetric, symmetric.T):
        raise RuntimeError(f"DA is not symmetric for {data.label}")
    if np.any(a @ np.array(data.marks)):
        raise RuntimeError(f"delta is not in the kernel of A for {data.label}")
    if data.marks[0] != 1 or min(data.d) != 1:
        raise RuntimeError(f"Unexpected normalization of d or marks for {data.label}")


def o_sign_from_graph(graph: nx.Graph) -> Tuple[int, ...]:
    signs = {1: 1}
    for i, j in nx.bfs_edges(graph, 1):
        signs[j] = -signs[i]
    return tuple(signs[i] for i in sorted(signs))


def o_sign(data: CartanData) -> Dict[int, int]:
    """The sign function o on I_0 with o(1) = +1 and o(i) o(j) = -1 on edges."""
    return {i: data.sign(i) for i in range(1, data.rank + 1)}


# ---------- roots ----------


@dataclass(frozen=True)
class Root:
    """A root in the simple-root basis.

    Attributes:
        coords: coefficients over alpha_0, ..., alpha_n.
        kind: "real" or "imaginary".
        mult_index: multiplicity index in I_0, present iff imaginary.
        norm: (alpha | alpha) / 2 for real roots, d_i for (r delta, i).
    """

    coords: Vector
    kind: str
    mult_index: Optional[int] = None
    norm: int = 1

    def __post_init__(self):
        if self.kind not in ("real", "imaginary"):
            raise ValueError(f"Invalid root kind: {self.kind}")
        if (self.kind == "imaginary") != (self.mult_index is not None):
            raise ValueError("mult_index must be given exactly for imaginary roots")

    @property
    def is_real(self) -> bool:
        return self.kind == "real"

    @property
    def is_positive(self) -> bool:
        return all(c >= 0 for c in self.coords) and any(self.coords)

    def projection(self) -> Vector:
        """The projection p to Phi_+ (forgets the multiplicity index)."""
        return self.coords

    def __str__(self) -> str:
        if self.kind == "imaginary":
            return f"({self.coords[0]}delta,{self.mult_index})"
        return "[" + ",".join(str(c) for c in self.coords) + "]"


def _pad(vec: Sequence[int], size: int) -> np.ndarray:
    if len(vec) > size:
        raise ValueError(f"Vector {tuple(vec)} has more than {size} coordinates")
    out = np.zeros(size, dtype=np.int64)
    out[: len(vec)] = vec
    return out


def bilinear(data: CartanData, mu: Sequence[int], nu: Sequence[int]) -> int:
    """(mu | nu) for vectors over alpha_0..alpha_n and optionally alpha_infinity."""
    if isinstance(mu, Root):
        mu = mu.coords
    if isinstance(nu, Root):
        nu = nu.coords
    size = data.rank + 2
    return int(_pad(mu, size) @ data.gram @ _pad(nu, size))


def simple_root(data: CartanData, i: Union[int, str]) -> Vector:
    """alpha_i as a coordinate vector; i = "inf" gives alpha_infinity."""
    if i == "inf":
        return tuple([0] * (data.rank + 1) + [1])
    return tuple(int(i == j) for j in range(data.rank + 1))


def reflect(data: CartanData, i: int, mu: Union[Root, Sequence[int]]):
    """s_i(mu) = mu - ((mu | alpha_i) / d_i) alpha_i.

    Raises:
        ValueError: if the image is not integral (alpha_infinity with d_i > 1).
    """
    if isinstance(mu, Root):
        image = reflect(data, i, mu.coords)
        return Root(tuple(image), mu.kind, mu.mult_index, mu.norm)
    pairing = bilinear(data, mu, simple_root(data, i))
    coefficient = Fraction(pairing, data.d[i])
    if coefficient.denominator != 1:
        raise ValueError(
            f"Reflection s_{i} of {tuple(mu)} leaves the lattice: "
            f"coefficient {coefficient}"
        )
    image = list(mu)
    image[i] -= int(coefficient)
    return tuple(image)


def _reflection_matrix(data: CartanData, i: int) -> np.ndarray:
    size = data.rank + 1
    s = np.eye(size, dtype=np.int64)
    s[i, :] -= data.cartan[i, :]
    return s


def q_alpha(root: Root) -> LaurentPoly:
    """q^{(alpha|alpha)/2} for a real root, q^{d_i} for (r delta, i)."""
    return LaurentPoly.monomial(root.norm)


def real_root(data: CartanData, coords: Sequence[int]) -> Root:
    coords = tuple(int(c) for c in coords)
    norm = Fraction(bilinear(data, coords, coords), 2)
    if norm <= 0 or norm.denominator != 1:
        raise ValueError(f"{coords} is not a real root of {data.label}")
    return Root(coords, "real", None, int(norm))


def imaginary_root(data: CartanData, r: int, i: int) -> Root:
    if r < 1 or not 1 <= i <= data.rank:
        raise ValueError(f"Invalid imaginary root ({r}delta, {i}) for {data.label}")
    return Root(tuple(r * m for m in data.marks), "imaginary", i, data.d[i])


def classify_real_root(data: CartanData, coords: Sequence[int]) -> Tuple[int, int]:
    """Write a positive real root as r delta + sign * alpha with alpha in Phi_{0,+}.

    Returns:
        (r, sign) with sign = -1 for r delta - alpha and +1 for r delta + alpha.

    Raises:
        ValueError: if coords is not a positive real root.
    """
    r = coords[0]
    finite = tuple(c - r * m for c, m in zip(coords[1:], data.marks[1:]))
    positive = set(data.finite_positive_roots)
    if finite in positive:
        return r, 1
    if tuple(-c for c in finite) in positive and r >= 1:
        return r, -1
    raise ValueError(f"{tuple(coords)} is not a positive real root of {data.label}")


def positive_real_roots(data: CartanData, level: int = DEFAULT_LEVEL) -> List[Root]:
    """Positive real roots within delta-level ``level``."""
    roots = []
    for r in range(0, level + 1):
        for alpha in data.finite_positive_roots:
            for sign in (-1, 1):
                coords = (r,) + tuple(
                    r * m + sign * a for m, a in zip(data.marks[1:], alpha)
                )
                if (sign == -1 and r == 0) or data.level(coords) > level:
                    continue
                roots.append(real_root(data, coords))
    return roots


def positive_roots_with_multiplicity(
    data: CartanData, level: int = DEFAULT_LEVEL
) -> List[Root]:
    """Real roots and (r delta, i), i in I_0, within the given delta-level."""
    imaginary = [
        imaginary_root(data, r, i)
        for r in range(1, level + 1)
        for i in range(1, data.rank + 1)
    ]
    return positive_real_roots(data, level) + imaginary


# ---------- the word iota ----------


@dataclass(frozen=True)
class IotaWord:
    """Periodic word iota: Z -> I.

    iota(k) = period_pos[(k - 1) mod p] for k >= 1 and
    iota(k) = period_nonpos[(-k) mod p'] for k <= 0.
    """

    period_pos: Tuple[int, ...]
    period_nonpos: Tuple[int, ...]

    def __post_init__(self):
        if not self.period_pos or not self.period_nonpos:
            raise ValueError("Both periods of the word iota must be nonempty")

    def __call__(self, k: int) -> int:
        if k >= 1:
            return self.period_pos[(k - 1) % len(self.period_pos)]
        return self.period_nonpos[(-k) % len(self.period_nonpos)]

    @classmethod
    def parse(cls, pos: str, nonpos: str) -> "IotaWord":
        def word(text: str) -> Tuple[int, ...]:
            try:
                return tuple(int(c) for c in text.split(",") if c.strip())
            except ValueError:
                raise ValueError(f"Invalid word: {text}")

        return cls(word(pos), word(nonpos))


class _ShippedWords(Mapping):
    """Words iota shipped for the types used in the acceptance checks.

    A1 is given literally. The others are the builder's words, validated up to
    the default delta-level the first time they are looked up.
    """

    _LITERAL = {"A1": IotaWord((0, 1), (1, 0))}
    LABELS = ("A1", "A2", "B3", "C2", "D4", "G2")

    def __getitem__(self, label: str) -> IotaWord:
        if label not in self.LABELS:
            raise KeyError(label)
        if label in self._LITERAL:
            return self._LITERAL[label]
        return _shipped_built_word(label)

    def __iter__(self) -> Iterator[str]:
        return iter(self.LABELS)

    def __len__(self) -> int:
        return len(self.LABELS)


@lru_cache(maxsize=None)
def _shipped_built_word(label: str) -> IotaWord:
    data = cartan_affine(label[0], int(label[1:]))
    word = _constructed_word(data)
    validate_iota(data, word, DEFAULT_LEVEL)
    return word


SHIPPED_WORDS: Mapping[str, IotaWord] = _ShippedWords()


def beta_sequence(
    data: CartanData, iota: IotaWord, ks: Sequence[int]
) -> Dict[int, Vector]:
    """beta_k for the requested k, computed with running products of reflections."""
    wanted = sorted(set(ks))
    result: Dict[int, Vector] = {}
    positive = [k for k in wanted if k >= 1]
    nonpositive = [k for k in wanted if k <= 0]
    wanted_set = set(wanted)
    size = data.rank + 1
    if positive:
        w = np.eye(size, dtype=np.int64)
        for k in range(1, positive[-1] + 1):
            if k in wanted_set:
                result[k] = tuple(int(c) for c in w[:, iota(k)])
            w = w @ _reflection_matrix(data, iota(k))
    if nonpositive:
        w = np.eye(size, dtype=np.int64)
        for k in range(0, nonpositive[0] - 1, -1):
            if k in wanted_set:
                result[k] = tuple(int(c) for c in w[:, iota(k)])
            w = w @ _reflection_matrix(data, iota(k))
    return result


def _dominant_translation_steps(data: CartanData) -> List[int]:
    """m_i = <lambda, alpha_i> for lambda = rho^vee, or 2 rho^vee when rho^vee
    is not in the coroot lattice."""
    n = data.rank
    finite = sympy.Matrix(data.finite_cartan.tolist())
    coefficients = finite.T.solve(sympy.ones(n, 1))
    if all(c.is_integer for c in coefficients):
        return [1] * n
    return [2] * n


def _translation_matrix(data: CartanData, steps: Sequence[int]) -> np.ndarray:
    """t_lambda on coordinates.

    alpha_i -> alpha_i - m_i delta for i >= 1 and
    alpha_0 -> alpha_0 + <lambda, theta> delta.
    """
    marks = np.array(data.marks, dtype=np.int64)
    size = data.rank + 1
    t = np.eye(size, dtype=np.int64)
    for i in range(1, size):
        t[:, i] -= steps[i - 1] * marks
    t[:, 0] += sum(m * s for m, s in zip(data.marks[1:], steps)) * marks
    return t


def _reduced_word(data: CartanData, w: np.ndarray) -> List[int]:
    """A reduced word of w found by repeatedly stripping right descents."""
    w = w.copy()
    size = data.rank + 1
    identity = np.eye(size, dtype=np.int64)
    recorded: List[int] = []
    while not np.array_equal(w, identity):
        for i in range(size):
            if np.all(w[:, i] <= 0):
                break
        else:
            raise RuntimeError("Element has no right descent but is not the identity")
        recorded.append(i)
        column = w[:, i].copy()
        for j in range(size):
            w[:, j] -= data.cartan[i, j] * column
        w[:, i] = -column
    return recorded[::-1]


def _constructed_word(data: CartanData) -> IotaWord:
    steps = _dominant_translation_steps(data)
    forward = _reduced_word(data, _translation_matrix(data, steps))
    backward = _reduced_word(data, _translation_matrix(data, [-s for s in steps]))
    first = beta_sequence(data, IotaWord(tuple(forward), tuple(backward)), [1])[1]
    if classify_real_root(data, first)[1] == -1:
        word = IotaWord(tuple(forward), tuple(backward))
    else:
        word = IotaWord(tuple(backward), tuple(forward))
    log.debug("Built iota for %s: %s", data.label, word)
    return word


def build_iota(
    data: CartanData,
    word: Optional[IotaWord] = None,
    level: int = DEFAULT_LEVEL,
) -> IotaWord:
    """Return a validated word iota for the given type.

    Without an explicit word, a shipped word is used when available; otherwise
    the periods are reduced words of the translations by +-lambda, with lambda
    a strictly dominant element of the coroot lattice.

    Raises:
        IotaValidationError: if the word fails validation.
    """
    if word is None:
        word = SHIPPED_WORDS.get(data.label)
    if word is None:
        word = _constructed_word(data)
    validate_iota(data, word, level)
    return word


def _index_range(iota: IotaWord, level: int) -> Tuple[int, int]:
    return (level + 1) * len(iota.period_pos), (level + 1) * len(iota.period_nonpos)


def validate_iota(
    data: CartanData, iota: IotaWord, level: int = DEFAULT_LEVEL
) -> None:
    """Check injectivity, positivity, shape and coverage of k -> beta_k.

    Raises:
        IotaValidationError: naming the first offending k.
    """
    for period in (iota.period_pos, iota.period_nonpos):
        for letter in period:
            if not 0 <= letter <= data.rank:
                raise IotaValidationError(
                    f"Letter {letter} of the word is not a node of {data.label}"
                )
    upper, lower = _index_range(iota, level)
    ks = list(range(1, upper + 1)) + list(range(0, -lower, -1))
    betas = beta_sequence(data, iota, ks)
    seen: Dict[Vector, int] = {}
    for k in sorted(ks, key=lambda k: (abs(k - 0.5), k)):
        beta = betas[k]
        try:
            real_root(data, beta)
            _, sign = classify_real_root(data, beta)
        except ValueError:
            raise IotaValidationError(
                f"beta_{k} = {beta} is not a positive real root", k=k
            )
        if (k >= 1) != (sign == -1):
            shape = "r delta - alpha" if k >= 1 else "r delta + alpha"
            raise IotaValidationError(
                f"beta_{k} = {beta} is not of the form {shape}", k=k
            )
        if beta in seen:
            raise IotaValidationError(
                f"beta_{k} = beta_{seen[beta]} = {beta}: the word is not reduced", k=k
            )
        seen[beta] = k
    for root in positive_real_roots(data, level):
        if root.coords not in seen:
            raise IotaValidationError(
                f"{root.coords} of level <= {level} is not reached within "
                f"k in [{-lower + 1}, {upper}]"
            )


class OrderedRoots:
    """Positive roots with multiplicity up to a delta-level, in convex order.

    Real roots beta_k (k >= 1) come first in increasing k, then (r delta, i)
    for r from the level bound down to 1 with i increasing, then beta_k for
    k <= 0 with k increasing to 0.
    """

    def __init__(self, data: CartanData, iota: IotaWord, level: int = DEFAULT_LEVEL):
        self.data = data
        self.iota = iota
        self.level = level
        upper, lower = _index_range(iota, level)
        betas = beta_sequence(
            data, iota, list(range(1, upper + 1)) + list(range(0, -lower, -1))
        )
        self.roots: List[Root] = []
        self.labels: List[str] = []
        self.index_of: Dict[Root, int] = {}
        for k in range(1, upper + 1):
            if data.level(betas[k]) <= level:
                self._append(real_root(data, betas[k]), f"beta_{k}", k)
        for r in range(level, 0, -1):
            for i in range(1, data.rank + 1):
                self._append(imaginary_root(data, r, i), f"({r}delta,{i})", None)
        for k in range(-lower + 1, 1):
            if data.level(betas[k]) <= level:
                self._append(real_root(data, betas[k]), f"beta_{k}", k)
        self._position = {root: pos for pos, root in enumerate(self.roots)}

    def _append(self, root: Root, label: str, k: Optional[int]) -> None:
        self.roots.append(root)
        self.labels.append(label)
        if k is not None:
            self.index_of[root] = k

    def __iter__(self) -> Iterator[Root]:
        return iter(self.roots)

    def __len__(self) -> int:
        return len(self.roots)

    def __contains__(self, root: Root) -> bool:
        return root in self._position

    def position(self, root: Root) -> int:
        try:
            return self._position[root]
        except KeyError:
            raise ValueError(f"{root} is not among the enumerated roots")

    def beta(self, k: int) -> Root:
        for root, index in self.index_of.items():
            if index == k:
                return root
        raise ValueError(f"beta_{k} is beyond the delta-level {self.level}")

    def label(self, root: Root) -> str:
        return self.labels[self.position(root)]

    def compare(self, alpha: Root, beta: Root) -> str:
        """"less", "equal" or "greater" according to the convex order."""
        a, b = self.position(alpha), self.position(beta)
        return "less" if a < b else "equal" if a == b else "greater"


def enumerate_ordered_roots(
    data: CartanData, iota: Optional[IotaWord] = None, level: int = DEFAULT_LEVEL
) -> OrderedRoots:
    if level < 1:
        raise ValueError(f"Invalid delta-level bound: {level}")
    if iota is None:
        iota = build_iota(data, level=level)
    return OrderedRoots(data, iota, level)
