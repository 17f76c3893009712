"""JSON encoding of the domain types.

``to_dict`` produces plain structures; ``save_*`` functions add the schema tag
and write to a path or an open file, ``load_*`` functions reverse them.
"""
from fractions import Fraction
from functools import singledispatch
from typing import Any, Dict, List, Mapping, Optional, Sequence

from .imroots import CoefficientReport, IdentityReport, ImFamily, ImPoly
from .pairing import DeltaComparison, DualBasisReport, GramMatrix, NonvanishingReport
from .pbw import BlockTransitionReport, ExpEntry, ExpVec, ToralElement
from .qlaurent import CycloElement, LaurentPoly, RatFunc
from .rootsys import CartanData, OrderedRoots, Root, imaginary_root, real_root
from .typing import DumpTarget, LoadSource
from .utils import check_schema, load_generic_dict, save_generic_dict


def _coefficient_to_json(value: Fraction) -> List[str]:
    return [str(value.numerator), str(value.denominator)]


def _partition_to_json(partition: Mapping[int, int]) -> Dict[str, int]:
    return {str(z): n for z, n in sorted(partition.items())}


def _matrix_to_json(rows: Sequence[Sequence[RatFunc]]) -> List[List[Dict]]:
    return [[to_dict(entry) for entry in row] for row in rows]


# ---------- serialization ----------


@singledispatch
def to_dict(obj):
    raise NotImplementedError(f"Serialization isn't implemented for {type(obj)}")


@to_dict.register
def _laurent_to_dict(poly: LaurentPoly):
    """
    Returns:
        A mapping with key "terms": [exponent, numerator, denominator] triples
        in ascending exponent order.
    """
    return {
        "terms": [
            [exponent] + _coefficient_to_json(coeff) for exponent, coeff in poly.terms()
        ]
    }


@to_dict.register
def _ratfunc_to_dict(value: RatFunc):
    return {"num": to_dict(value.num), "den": to_dict(value.den)}


@to_dict.register
def _cyclo_to_dict(value: CycloElement):
    return {
        "order": value.order,
        "residue": [_coefficient_to_json(c) for c in value.coefficients()],
    }


@to_dict.register
def _root_to_dict(root: Root):
    return {
        "coords": list(root.coords),
        "kind": root.kind,
        **({"mult_index": root.mult_index} if root.mult_index is not None else {}),
    }


@to_dict.register
def _cartan_to_dict(data: CartanData):
    return {
        "type": data.type_letter,
        "rank": data.rank,
        "matrix": [list(row) for row in data.matrix],
        "d": list(data.d),
        "o": list(data.o),
        "marks": list(data.marks),
    }


@to_dict.register
def _ordered_roots_to_dict(roots: OrderedRoots):
    return {
        "type": roots.data.label,
        "level": roots.level,
        "iota": {
            "positive": list(roots.iota.period_pos),
            "nonpositive": list(roots.iota.period_nonpos),
        },
        "roots": [
            {"label": roots.label(root), **to_dict(root)} for root in roots
        ],
    }


@to_dict.register
def _impoly_to_dict(poly: ImPoly):
    return {
        "symbol": poly.symbol,
        "terms": [
            {"exps": {str(s): e for s, e in monomial}, "coeff": to_dict(coeff)}
            for monomial, coeff in poly.terms()
        ],
    }


@to_dict.register
def _family_to_dict(family: ImFamily):
    return {
        "name": family.name,
        "d": family.d,
        "k": family.k,
        "members": {str(r): to_dict(poly) for r, poly in family.items()},
    }


@to_dict.register
def _gram_to_dict(matrix: GramMatrix):
    return {
        "r": matrix.r,
        "kind": matrix.kind,
        "type": matrix.type_label,
        "entries": _matrix_to_json(matrix.entries),
    }


@to_dict.register
def _expvec_to_dict(vector: ExpVec):
    return {
        "entries": [
            {
                "root": to_dict(entry.root),
                "exp": entry.exp,
                "normalization": entry.normalization,
            }
            for entry in vector
        ]
    }


@to_dict.register
def _toral_to_dict(element: ToralElement):
    return {
        "index": element.i,
        "d": element.d,
        "terms": [[degree, to_dict(coeff)] for degree, coeff in element.terms()],
    }


@to_dict.register
def _delta_comparison_to_dict(comparison: DeltaComparison):
    return {
        "type": comparison.type_label,
        "r": comparison.r,
        "closed": to_dict(comparison.closed),
        "determinant": to_dict(comparison.determinant),
        "matches": comparison.matches,
        "sign": comparison.sign,
        **(
            {"corrected_sign": comparison.corrected_sign}
            if comparison.corrected_sign is not None
            else {}
        ),
    }


@to_dict.register
def _nonvanishing_to_dict(report: NonvanishingReport):
    return {
        "type": report.type_label,
        "ell": report.ell,
        "checked_r": report.checked_r,
        "admissible": report.admissible,
        "all_nonzero": report.all_nonzero,
        **(
            {"counterexample_r": report.counterexample_r}
            if report.counterexample_r is not None
            else {}
        ),
    }


@to_dict.register
def _dual_report_to_dict(report: DualBasisReport):
    return {
        "type": report.type_label,
        "r": report.r,
        "det_sign": report.det_sign,
        "orthonormal": report.orthonormal,
        "foreign_factors": [list(f) for f in report.foreign_factors],
        "regular_at": {str(order): ok for order, ok in report.regular_at.items()},
    }


@to_dict.register
def _identity_report_to_dict(report: IdentityReport):
    return {
        "name": report.name,
        "holds": report.holds,
        **(
            {
                "failing_index": report.failing_index,
                "lhs": to_dict(report.lhs),
                "rhs": to_dict(report.rhs),
            }
            if not report.holds
            else {}
        ),
    }


@to_dict.register
def _coefficient_report_to_dict(report: CoefficientReport):
    return {
        "name": report.name,
        "holds": report.holds,
        "failures": [
            {"r": r, "exps": {str(s): e for s, e in monomial}, "detail": detail}
            for r, monomial, detail in report.failures
        ],
    }


@to_dict.register
def _block_report_to_dict(report: BlockTransitionReport):
    return {
        "d": report.d,
        "k": report.k,
        "T": report.T,
        "holds": report.holds,
        "blocks": [
            {
                "r": block.r,
                "basis": [_partition_to_json(p) for p in block.basis],
                "forward": _matrix_to_json(block.forward),
                "backward": _matrix_to_json(block.backward),
                "inverse_ok": block.inverse_ok,
                "reconstructs": block.reconstructs,
                "classical_ok": block.classical_ok,
            }
            for block in report.blocks
        ],
    }


# ---------- deserialization ----------


def _coefficient_from_json(pair: Sequence[str]) -> Fraction:
    return Fraction(int(pair[0]), int(pair[1]))


def laurent_from_dict(dictionary: Mapping[str, Any]) -> LaurentPoly:
    return LaurentPoly.from_terms(
        {int(term[0]): _coefficient_from_json(term[1:]) for term in dictionary["terms"]}
    )


def ratfunc_from_dict(dictionary: Mapping[str, Any]) -> RatFunc:
    return RatFunc.from_laurent(
        laurent_from_dict(dictionary["num"]), laurent_from_dict(dictionary["den"])
    )


def root_from_dict(dictionary: Mapping[str, Any], data: CartanData) -> Root:
    """Rebuild a root; the norm is recomputed from the Cartan data."""
    coords = tuple(int(c) for c in dictionary["coords"])
    if dictionary["kind"] == "real":
        return real_root(data, coords)
    if dictionary["kind"] == "imaginary":
        r = coords[0]
        root = imaginary_root(data, r, int(dictionary["mult_index"]))
        if root.coords != coords:
            raise ValueError(f"{coords} is not a multiple of delta for {data.label}")
        return root
    raise ValueError(f"Invalid root kind: {dictionary['kind']}")


def impoly_from_dict(dictionary: Mapping[str, Any]) -> ImPoly:
    terms = {}
    for term in dictionary["terms"]:
        monomial = tuple(sorted((int(s), int(e)) for s, e in term["exps"].items()))
        terms[monomial] = ratfunc_from_dict(term["coeff"])
    return ImPoly(terms, dictionary.get("symbol", "Et"))


def family_from_dict(dictionary: Mapping[str, Any]) -> ImFamily:
    return ImFamily(
        dictionary["name"],
        int(dictionary["d"]),
        int(dictionary["k"]),
        {int(r): impoly_from_dict(poly) for r, poly in dictionary["members"].items()},
    )


def gram_from_dict(dictionary: Mapping[str, Any]) -> GramMatrix:
    return GramMatrix(
        int(dictionary["r"]),
        tuple(
            tuple(ratfunc_from_dict(entry) for entry in row)
            for row in dictionary["entries"]
        ),
        dictionary.get("kind", "M"),
        dictionary.get("type", ""),
    )


def expvec_from_dict(
    dictionary: Mapping[str, Any], data: CartanData, order: Optional[OrderedRoots] = None
) -> ExpVec:
    return ExpVec(
        [
            ExpEntry(
                root_from_dict(entry["root"], data),
                int(entry["exp"]),
                entry["normalization"],
            )
            for entry in dictionary["entries"]
        ],
        order,
    )


# ---------- files ----------


def save_ratfunc(value: RatFunc, target: DumpTarget):
    save_generic_dict(to_dict(value), target, "ratfunc")


def load_ratfunc(source: LoadSource) -> RatFunc:
    dictionary = load_generic_dict(source)
    check_schema(dictionary, "ratfunc")
    return ratfunc_from_dict(dictionary)


def save_impoly(poly: ImPoly, target: DumpTarget):
    save_generic_dict(to_dict(poly), target, "impoly")


def load_impoly(source: LoadSource) -> ImPoly:
    dictionary = load_generic_dict(source)
    check_schema(dictionary, "impoly")
    return impoly_from_dict(dictionary)


def save_family(family: ImFamily, target: DumpTarget):
    save_generic_dict(to_dict(family), target, "family")


def load_family(source: LoadSource) -> ImFamily:
    dictionary = load_generic_dict(source)
    check_schema(dictionary, "family")
    return family_from_dict(dictionary)


def save_gram_matrix(matrix: GramMatrix, target: DumpTarget):
    save_generic_dict(to_dict(matrix), target, "gram-matrix")


def load_gram_matrix(source: LoadSource) -> GramMatrix:
    dictionary = load_generic_dict(source)
    check_schema(dictionary, "gram-matrix")
    return gram_from_dict(dictionary)


def save_expvec(vector: ExpVec, target: DumpTarget):
    save_generic_dict(to_dict(vector), target, "expvec")


def load_expvec(source: LoadSource, data: CartanData) -> ExpVec:
    dictionary = load_generic_dict(source)
    check_schema(dictionary, "expvec")
    return expvec_from_dict(dictionary, data)


def save_artifact(obj: Any, target: DumpTarget, artifact_name: str):
    """Save any serializable object under the given artifact name."""
    save_generic_dict(to_dict(obj), target, artifact_name)
