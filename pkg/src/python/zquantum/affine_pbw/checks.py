"""Acceptance checks run by ``affine-pbw check-all``.

Each check returns a CheckResult; ``run_all`` runs them in a fixed order so the
output is deterministic.
"""
import logging
import warnings
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .imroots import (
    check_double_definitions,
    check_hat_dot_relation,
    check_series_relation,
    check_specializations,
)
from .pairing import (
    DeltaTableWarning,
    DeltaVanishesError,
    check_delta_nonvanishing,
    compare_delta,
    first_admissible_orders,
    has_erratum,
    m_matrix_and_dual,
    pair_monomials,
)
from .pbw import (
    ExpVec,
    block_transition_roundtrip,
    toral_index_set,
    toral_regularity_report,
    toral_symmetrizer,
)
from .qlaurent import LaurentPoly, PoleError, RatFunc
from .rootsys import (
    IotaValidationError,
    IotaWord,
    build_iota,
    cartan_affine,
    enumerate_ordered_roots,
    validate_iota,
)
from .series import SeriesVec, phi_transform, psi_transform
from .utils import RNDSEED

log = logging.getLogger(__name__)

ALL_TYPES: Tuple[Tuple[str, int], ...] = (
    ("A", 1),
    ("A", 2),
    ("A", 3),
    ("A", 4),
    ("B", 3),
    ("C", 2),
    ("D", 4),
    ("E", 6),
    ("E", 7),
    ("E", 8),
    ("F", 4),
    ("G", 2),
)

IOTA_TYPES: Tuple[Tuple[str, int], ...] = (("A", 1), ("A", 2), ("C", 2), ("G", 2))


class CheckFailed(Exception):
    """Raised when an acceptance check fails; the message names the failing item."""


@dataclass
class CheckResult:
    """Outcome of one acceptance check.

    Attributes:
        name: short name of the check.
        passed: whether every item passed.
        details: one line per item or observation.
    """

    name: str
    passed: bool
    details: List[str]


def _result(name: str, failures: List[str], notes: List[str]) -> CheckResult:
    return CheckResult(name, not failures, failures + notes)


def check_delta_table(
    types: Sequence[Tuple[str, int]] = ALL_TYPES, r_max: int = 6
) -> CheckResult:
    """Determinant against closed form, with one sign per type."""
    failures, notes = [], []
    for letter, rank in types:
        data = cartan_affine(letter, rank)
        signs = set()
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", DeltaTableWarning)
            comparisons = [compare_delta(data, r) for r in range(1, r_max + 1)]
        for comparison in comparisons:
            if comparison.matches:
                signs.add(comparison.sign)
            elif has_erratum(data) and comparison.corrected_sign is not None:
                signs.add(comparison.corrected_sign)
            else:
                failures.append(
                    f"{data.label} r={comparison.r}: closed form {comparison.closed} "
                    f"!= +-determinant {comparison.determinant}"
                )
        if len(signs) > 1:
            failures.append(f"{data.label}: sign depends on r")
        if caught and has_erratum(data):
            notes.append(
                f"{data.label}: table line disagrees with the determinant "
                f"(documented erratum, determinant = corrected form)"
            )
        elif signs:
            notes.append(f"{data.label}: det = {signs.pop():+d} * closed form")
    return _result("delta table", failures, notes)


def check_roots_of_unity(types: Sequence[Tuple[str, int]] = ALL_TYPES) -> CheckResult:
    """Delta_r nonzero at the first three admissible orders, r <= 2 ell."""
    failures, notes = [], []
    for letter, rank in types:
        data = cartan_affine(letter, rank)
        for ell in first_admissible_orders(data, 3):
            try:
                check_delta_nonvanishing(data, ell, 2 * ell)
            except DeltaVanishesError as error:
                failures.append(str(error))
    a2 = check_delta_nonvanishing(cartan_affine("A", 2), 3, 6)
    if a2.all_nonzero:
        failures.append("A2, ell=3: expected a vanishing Delta_r")
    else:
        notes.append(f"A2, ell=3: Delta_{a2.counterexample_r} vanishes")
    g2 = cartan_affine("G", 2)
    table = check_delta_nonvanishing(g2, 3, 6, source="table")
    determinant = check_delta_nonvanishing(g2, 3, 6)
    if determinant.all_nonzero:
        notes.append("G2, ell=3: not reproduced by the determinant (table erratum)")
    else:
        notes.append(f"G2, ell=3: Delta_{determinant.counterexample_r} vanishes")
    if not table.all_nonzero:
        notes.append(f"G2, ell=3: the table line vanishes at r={table.counterexample_r}")
    return _result("roots of unity", failures, notes)


def random_laurent(rng: np.random.Generator, spread: int = 2) -> LaurentPoly:
    """A Laurent polynomial with small integer coefficients and exponents in [-spread, spread]."""
    coeffs = rng.integers(-3, 4, size=2 * spread + 1)
    return LaurentPoly.from_terms(
        {e - spread: int(c) for e, c in enumerate(coeffs) if c}
    )


_DENOMINATORS = (
    LaurentPoly.constant(1),
    LaurentPoly.from_terms({0: 1, 1: 1}),
    LaurentPoly.from_terms({0: 1, 2: 1}),
    LaurentPoly.constant(2),
)


def random_ratfunc(rng: np.random.Generator) -> RatFunc:
    denominator = _DENOMINATORS[int(rng.integers(len(_DENOMINATORS)))]
    return RatFunc(random_laurent(rng)) / denominator


def check_bell_roundtrip(samples: int = 100, T: int = 12, seed: int = RNDSEED) -> CheckResult:
    """Phi(Psi(X)) = X and Psi(Phi(Y)) = Y on random sequences over Q(q)."""
    rng = np.random.default_rng(seed)
    failures = []
    for sample in range(samples):
        x = SeriesVec([RatFunc(1)] + [random_ratfunc(rng) for _ in range(T)])
        if phi_transform(psi_transform(x)) != x:
            failures.append(f"sample {sample}: Phi(Psi(X)) != X")
        if psi_transform(phi_transform(x)) != x:
            failures.append(f"sample {sample}: Psi(Phi(Y)) != Y")
    return _result("bell round trip", failures, [f"{samples} sequences, T={T}"])


def _identity_check(name: str, reports) -> CheckResult:
    failures = [
        f"{report.name}: differs at index {report.failing_index}"
        for report in reports
        if not report.holds
    ]
    return _result(name, failures, [f"{len(reports)} identities"])


def check_double_definitions_all(d_max: int = 3, k_max: int = 3, T: int = 6) -> CheckResult:
    reports = []
    for d in range(1, d_max + 1):
        for k in range(1, k_max + 1):
            reports.extend(check_double_definitions(d, k, T))
        reports.append(check_hat_dot_relation(d, T))
    return _identity_check("double definitions", reports)


def check_specializations_all(d_max: int = 3, k_max: int = 3, T: int = 6) -> CheckResult:
    reports = []
    for d in range(1, d_max + 1):
        for k in range(1, k_max + 1):
            reports.extend(check_specializations(d, k, T))
    return _identity_check("specialization square", reports)


def check_orthonormality(
    types: Sequence[Tuple[str, int]] = ALL_TYPES, r_max: int = 4
) -> CheckResult:
    failures = []
    for letter, rank in types:
        data = cartan_affine(letter, rank)
        orders = first_admissible_orders(data, 3)
        for r in range(1, r_max + 1):
            _, _, report = m_matrix_and_dual(data, r, orders)
            if not report.holds:
                failures.append(f"{data.label} r={r}: {report}")
    return _result("orthonormality", failures, [])


def _random_expvec(rng: np.random.Generator, order, size: int) -> ExpVec:
    roots = list(order)
    chosen = rng.choice(len(roots), size=size, replace=False)
    return ExpVec({roots[int(j)]: int(rng.integers(1, 4)) for j in chosen}, order)


def check_monomial_pairing(samples: int = 20, seed: int = RNDSEED) -> CheckResult:
    """Off-diagonal vanishing, symmetry and the monomial value on the diagonal."""
    rng = np.random.default_rng(seed)
    failures = []
    for letter, rank in (("A", 1), ("A", 2), ("C", 2)):
        roots = enumerate_ordered_roots(cartan_affine(letter, rank), level=2)
        for sample in range(samples):
            n = _random_expvec(rng, roots, 3)
            m = _random_expvec(rng, roots, 3)
            label = f"{letter}{rank} sample {sample}"
            if pair_monomials(n, m) != pair_monomials(m, n):
                failures.append(f"{label}: not symmetric")
            if n != m and not pair_monomials(n.divided(), m.dual()).is_zero:
                failures.append(f"{label}: nonzero off the diagonal")
            value = pair_monomials(n.divided(), n.dual())
            if not (value.is_laurent and value.num.is_monomial):
                failures.append(f"{label}: diagonal value {value} is not +-q^s")
            elif abs(value.num.terms()[0][1]) != 1:
                failures.append(f"{label}: diagonal value {value} is not +-q^s")
    return _result("monomial pairing", failures, [])


def check_series_relation_all(d_max: int = 3, k_max: int = 3, T: int = 6) -> CheckResult:
    reports = [
        check_series_relation(d, k, T)
        for d in range(1, d_max + 1)
        for k in range(1, k_max + 1)
    ]
    return _identity_check("generating series relation", reports)


def check_iota(types: Sequence[Tuple[str, int]] = IOTA_TYPES, level: int = 6) -> CheckResult:
    failures, notes = [], []
    for letter, rank in types:
        data = cartan_affine(letter, rank)
        try:
            word = build_iota(data, level=level)
            notes.append(f"{data.label}: {word.period_pos} / {word.period_nonpos}")
        except IotaValidationError as error:
            failures.append(f"{data.label}: {error}")
    corrupted = IotaWord((0, 0), (1, 0))
    try:
        validate_iota(cartan_affine("A", 1), corrupted, level)
        failures.append("corrupted A1 word was accepted")
    except IotaValidationError as error:
        if error.k is None:
            failures.append("corrupted A1 word was rejected without a location")
        else:
            notes.append(f"corrupted A1 word rejected at k={error.k}")
    return _result("iota validation", failures, notes)


def check_toral(
    types: Sequence[Tuple[str, int]] = ALL_TYPES, t_max: int = 6
) -> CheckResult:
    failures, notes = [], []
    poles = 0
    for letter, rank in types:
        data = cartan_affine(letter, rank)
        orders = [ell for ell in first_admissible_orders(data, 4) if ell > 1]
        for d in sorted({toral_symmetrizer(data, i) for i in toral_index_set(data, "I_inf")}):
            try:
                report = toral_regularity_report(0, t_max, d, orders)
            except (PoleError, ArithmeticError) as error:
                failures.append(f"{data.label} d={d}: {error}")
                continue
            poles += len(report.coefficient_poles)
    notes.append(f"{poles} coefficient poles recorded in the K basis")
    return _result("toral regularity", failures, notes)


def check_block_roundtrip(d_max: int = 2, k_max: int = 2, degree: int = 6) -> CheckResult:
    failures = []
    for d in range(1, d_max + 1):
        for k in range(1, k_max + 1):
            report = block_transition_roundtrip(d, k, degree // k)
            for block in report.blocks:
                if not block.holds:
                    failures.append(f"d={d} k={k} r={block.r}: {block}")
    return _result("block round trip", failures, [])


CHECKS: Dict[str, Callable[[], CheckResult]] = {
    "delta-table": check_delta_table,
    "roots-of-unity": check_roots_of_unity,
    "bell-roundtrip": check_bell_roundtrip,
    "double-definitions": check_double_definitions_all,
    "specialization": check_specializations_all,
    "orthonormality": check_orthonormality,
    "monomial-pairing": check_monomial_pairing,
    "series-relation": check_series_relation_all,
    "iota": check_iota,
    "toral": check_toral,
    "block-roundtrip": check_block_roundtrip,
}


def run_all(names: Optional[Sequence[str]] = None) -> List[CheckResult]:
    results = []
    for name in names or list(CHECKS):
        if name not in CHECKS:
            raise ValueError(f"Invalid check: {name}")
        log.info("Running check %s", name)
        results.append(CHECKS[name]())
    return results


def require(results: Sequence[CheckResult]) -> None:
    """Raise CheckFailed naming the first failing check."""
    for result in results:
        if not result.passed:
            raise CheckFailed(f"{result.name}: {result.details[0]}")
