"""Command line interface.

    affine-pbw roots --type A --rank 1 --level 3
    affine-pbw delta --type A --rank 2 --r 3
    affine-pbw bell --psi 0,1,0,0
    affine-pbw check-all --format json

Global options may be given after the subcommand. Defaults are read from
AFFINE_PBW_* environment variables first (see Config.from_env).

Exit status: 0 on success, 1 when a computation or a check fails, 2 on a
usage or configuration error.
"""
import argparse
import logging
import re
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence

from .checks import CHECKS, CheckFailed, require, run_all
from .config import Config
from .imroots import (
    TILDE,
    ImFamily,
    family_E,
    family_E_log_oracle,
    family_Edot,
    family_Edot_angle,
    family_Edot_bracket,
    family_Edot_via_E,
    family_Ehat,
    integrality_report,
    regularity_report,
    specialize_family,
)
from .pairing import (
    check_delta_nonvanishing,
    compare_delta,
    gram_imaginary,
    m_matrix,
    m_matrix_and_dual,
    pair_monomials,
)
from .pbw import (
    INFINITY,
    ExpVec,
    basis_toral,
    toral_index_set,
    toral_regularity_report,
    toral_symmetrizer,
)
from .qlaurent import RatFunc, parse_ratfunc_list
from .rootsys import OrderedRoots, Root, enumerate_ordered_roots, imaginary_root
from .serialization import to_dict
from .series import SeriesVec, phi_transform, psi_transform
from .typing import ToralIndex
from .utils import save_generic_dict

log = logging.getLogger(__name__)

_FAMILIES: Dict[str, Callable[[int, int, int, str], ImFamily]] = {
    "E": lambda d, k, T, method: family_E(d, T),
    "E-log": lambda d, k, T, method: family_E_log_oracle(d, T),
    "Edot": lambda d, k, T, method: family_Edot(d, T),
    "Edot-via-E": lambda d, k, T, method: family_Edot_via_E(d, T),
    "Ehat": lambda d, k, T, method: family_Ehat(d, T),
    "angle": lambda d, k, T, method: family_Edot_angle(d, k, T),
    "bracket": lambda d, k, T, method: family_Edot_bracket(d, k, T, method, TILDE),
}

_FORMS = {
    "divided": lambda v: v.divided(),
    "dual": lambda v: v.dual(),
    "bare": lambda v: v.with_normalization("bare", "bare"),
}

_TOKEN = re.compile(r"(?:b(?P<k>-?\d+)|d(?P<r>\d+)\.(?P<i>\d+))(?:\^(?P<n>\d+))?")


class Output:
    """Collects one command's result as a JSON document and as text lines."""

    def __init__(self, artifact_name: str):
        self.artifact_name = artifact_name
        self.document: Dict[str, Any] = {}
        self.lines: List[str] = []
        self.failure: Optional[str] = None

    def write(self, config: Config, stream) -> None:
        if config.output_format == "json":
            save_generic_dict(self.document, stream, self.artifact_name)
            stream.write("\n")
        else:
            for line in self.lines:
                stream.write(line + "\n")


def _verdict(value: bool) -> str:
    return "true" if value else "false"


def _matrix_lines(rows: Sequence[Sequence[RatFunc]]) -> List[str]:
    return ["  [" + ", ".join(str(entry) for entry in row) + "]" for row in rows]


# ---------- commands ----------


def _roots(args: argparse.Namespace, config: Config) -> Output:
    order = enumerate_ordered_roots(config.cartan, config.iota(), config.level)
    out = Output("roots")
    out.document = to_dict(order)
    real = sum(1 for root in order if root.is_real)
    out.lines.append(
        f"{order.data.label}, delta-level {order.level}: "
        f"{real} real, {len(order) - real} imaginary"
    )
    for root in order:
        out.lines.append(f"{order.label(root):>14}  {root}  {root.kind}")
    return out


def _delta(args: argparse.Namespace, config: Config) -> Output:
    data = config.cartan
    levels = [args.r] if args.r is not None else range(1, config.truncation + 1)
    out = Output("delta")
    comparisons = [compare_delta(data, r) for r in levels]
    reports = [check_delta_nonvanishing(data, ell, 2 * ell) for ell in config.orders]
    out.document = {
        "comparisons": [to_dict(c) for c in comparisons],
        "nonvanishing": [to_dict(report) for report in reports],
    }
    for c in comparisons:
        out.lines.append(f"Delta_{c.r} ({c.type_label})")
        out.lines.append(f"  closed form: {c.closed}")
        out.lines.append(f"  determinant: {c.determinant}")
        out.lines.append(f"  match: {_verdict(c.matches)}")
        if not c.matches and c.corrected_sign is not None:
            out.lines.append("  match after known correction: true")
    for report in reports:
        status = "nonzero" if report.all_nonzero else f"vanishes at r={report.counterexample_r}"
        out.lines.append(
            f"order {report.ell} (admissible: {_verdict(report.admissible)}), "
            f"r <= {report.checked_r}: {status}"
        )
    mismatched = [c.r for c in comparisons if not c.matches_after_correction]
    if mismatched:
        out.failure = f"closed form disagrees with the determinant at r={mismatched}"
    return out


def _gram(args: argparse.Namespace, config: Config) -> Output:
    data = config.cartan
    if args.imaginary:
        matrix = gram_imaginary(data, args.r, args.s if args.s is not None else args.r)
    else:
        matrix = m_matrix(data, args.r)
    out = Output("gram-matrix")
    out.document = to_dict(matrix)
    out.lines.append(f"{matrix.kind} for {matrix.type_label}, r={matrix.r}:")
    out.lines.extend(_matrix_lines(matrix.rows()))
    return out


def _dual(args: argparse.Namespace, config: Config) -> Output:
    m, mu, report = m_matrix_and_dual(config.cartan, args.r, config.orders)
    out = Output("dual-basis")
    out.document = {"M": to_dict(m), "mu": to_dict(mu), "report": to_dict(report)}
    out.lines.append(f"M_{args.r} for {m.type_label}:")
    out.lines.extend(_matrix_lines(m.rows()))
    out.lines.append(f"mu_{args.r}:")
    out.lines.extend(_matrix_lines(mu.rows()))
    out.lines.append(f"orthonormal: {_verdict(report.orthonormal)}")
    out.lines.append(f"det(M) = {report.det_sign} * Delta_{args.r}")
    for order, ok in sorted(report.regular_at.items()):
        out.lines.append(f"regular at order {order}: {_verdict(ok)}")
    for i, j, order in report.foreign_factors:
        out.lines.append(f"entry ({i},{j}) has a pole at order {order} not shared by Delta")
    if not report.holds:
        out.failure = f"dual basis of M_{args.r} failed its checks"
    return out


def _bell(args: argparse.Namespace, config: Config) -> Output:
    if args.psi is not None:
        coeffs = parse_ratfunc_list(args.psi)
        if not coeffs[0].is_zero:
            raise ValueError(f"The constant term of the exponent must be 0, got {coeffs[0]}")
        result = psi_transform(SeriesVec([RatFunc(1)] + coeffs[1:])).coeffs
        name = "psi"
    else:
        coeffs = parse_ratfunc_list(args.phi)
        result = phi_transform(SeriesVec(coeffs)).coeffs
        # log Y has no constant term
        result = [RatFunc(0)] + result[1:]
        name = "phi"
    out = Output("bell")
    out.document = {"transform": name, "result": [to_dict(c) for c in result]}
    out.lines.append(", ".join(str(c) for c in result))
    return out


def _imroots(args: argparse.Namespace, config: Config) -> Output:
    d = args.d if args.d is not None else config.cartan.d[args.node]
    family = _FAMILIES[args.family](d, args.k, config.truncation, args.method)
    if args.at_one:
        family = specialize_family(family)
    integrality = integrality_report(family)
    regularity = regularity_report(family, config.orders)
    out = Output("family")
    out.document = {
        "family": to_dict(family),
        "integrality": to_dict(integrality),
        "regularity": to_dict(regularity),
    }
    out.lines.append(f"{family.name} (d={family.d}, k={family.k}):")
    for r, poly in family.items():
        out.lines.append(f"  [{r}] {poly}")
    out.lines.append(f"integral coefficients: {_verdict(integrality.holds)}")
    out.lines.append(f"regular at {config.orders}: {_verdict(regularity.holds)}")
    for r, monomial, detail in regularity.failures:
        out.lines.append(f"  [{r}] {dict(monomial)}: {detail}")
    return out


def parse_exponent_tokens(text: str, order: OrderedRoots) -> Dict[Root, int]:
    """Parse tokens such as ``b1^2,d3.1`` into exponents.

    ``b<k>`` is the real root beta_k and ``d<r>.<i>`` the imaginary root
    (r delta, i); a missing ``^<n>`` means exponent 1.
    """
    exponents: Dict[Root, int] = {}
    for token in filter(None, re.split(r"[,\s]+", text.strip())):
        match = _TOKEN.fullmatch(token)
        if match is None:
            raise ValueError(f"Invalid exponent token: {token}")
        if match["k"] is not None:
            root = order.beta(int(match["k"]))
        else:
            root = imaginary_root(order.data, int(match["r"]), int(match["i"]))
        exponents[root] = exponents.get(root, 0) + int(match["n"] or 1)
    return exponents


def _pair(args: argparse.Namespace, config: Config) -> Output:
    order = enumerate_ordered_roots(config.cartan, config.iota(), config.level)
    left = _FORMS[args.left_form](ExpVec(parse_exponent_tokens(args.left, order), order))
    right = _FORMS[args.right_form](ExpVec(parse_exponent_tokens(args.right, order), order))
    value = pair_monomials(left, right)
    out = Output("pairing")
    out.document = {"left": to_dict(left), "right": to_dict(right), "value": to_dict(value)}
    out.lines.append(str(value))
    return out


def _parse_toral_index(text: str) -> ToralIndex:
    return INFINITY if text in (INFINITY, "infinity") else int(text)


def _toral(args: argparse.Namespace, config: Config) -> Output:
    data = config.cartan
    indices = toral_index_set(data, args.index_set)
    if args.index is not None:
        index = _parse_toral_index(args.index)
        if index not in indices:
            raise ValueError(f"Invalid toral index {args.index} for {args.index_set}")
        indices = [index]
    t_max = args.t if args.t is not None else config.truncation
    out = Output("toral")
    out.document = {"elements": [], "reports": []}
    for i in indices:
        d = toral_symmetrizer(data, i)
        for t in range(t_max + 1):
            element = basis_toral(i, t, d)
            out.document["elements"].append({"t": t, **to_dict(element)})
            out.lines.append(f"K_{i} t={t}: {element}")
        report = toral_regularity_report(i, t_max, d, config.orders)
        out.document["reports"].append(
            {
                "index": str(i),
                "d": d,
                "t_max": t_max,
                "orders": report.orders,
                "values_checked": report.values_checked,
                "coefficient_poles": [list(pole) for pole in report.coefficient_poles],
            }
        )
        out.lines.append(
            f"K_{i}: {report.values_checked} values integral, "
            f"{len(report.coefficient_poles)} coefficient poles at {report.orders}"
        )
    return out


def _check_all(args: argparse.Namespace, config: Config) -> Output:
    results = run_all(args.only)
    out = Output("check-all")
    out.document = {
        "results": [
            {"name": r.name, "passed": r.passed, "details": r.details} for r in results
        ]
    }
    for result in results:
        out.lines.append(f"[{'PASS' if result.passed else 'FAIL'}] {result.name}")
        out.lines.extend(f"    {detail}" for detail in result.details)
    try:
        require(results)
    except CheckFailed as err:
        out.failure = str(err)
    return out


# ---------- parser ----------


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", dest="type_label", help="type letter or label, e.g. A or E6")
    common.add_argument("--rank", type=int)
    common.add_argument("--truncation", "-T", type=int, help="truncation order T")
    common.add_argument("--level", type=int, help="delta-level bound N")
    common.add_argument(
        "--ell", help="comma-separated orders of roots of unity to sample"
    )
    common.add_argument("--format", dest="output_format", choices=("text", "json"))
    common.add_argument("--log-level")
    common.add_argument(
        "--iota",
        metavar="POS;NONPOS",
        help="override of the word iota as two comma-separated periods",
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="affine-pbw",
        description="PBW bases of affine quantum groups with exact arithmetic.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler, help_text: str) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, parents=[common], help=help_text)
        sub.set_defaults(handler=handler)
        return sub

    command("roots", _roots, "positive roots in convex order")

    sub = command("delta", _delta, "Delta_r closed form against the determinant")
    sub.add_argument("--r", type=int, help="single level; default 1..T")

    sub = command("gram", _gram, "the matrix M_r or the imaginary Gram block")
    sub.add_argument("--r", type=int, required=True)
    sub.add_argument("--s", type=int, help="F-side level of the imaginary block")
    sub.add_argument("--imaginary", action="store_true")

    sub = command("dual", _dual, "M_r, its inverse mu and the orthonormality check")
    sub.add_argument("--r", type=int, required=True)

    sub = command("bell", _bell, "the Psi / Phi changes of variables")
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--psi", help="X_0..X_T with X_0 = 0, e.g. 0,1,0,0")
    group.add_argument("--phi", help="Y_0..Y_T with Y_0 = 1")

    sub = command("imroots", _imroots, "imaginary root vector families up to order T")
    sub.add_argument("--family", choices=sorted(_FAMILIES), default="E")
    sub.add_argument("--node", type=int, default=1, help="node i of I_0 supplying d_i")
    sub.add_argument("--d", type=int, help="symmetrizer d_i, overrides --node")
    sub.add_argument("--k", type=int, default=1)
    sub.add_argument("--method", choices=("recursion", "psi"), default="recursion")
    sub.add_argument("--at-one", action="store_true", help="specialize at q = 1")

    sub = command("pair", _pair, "pairing of two PBW monomials")
    sub.add_argument("--left", required=True, help="tokens b<k>^<n> or d<r>.<i>^<n>")
    sub.add_argument("--right", required=True)
    sub.add_argument("--left-form", choices=sorted(_FORMS), default="divided")
    sub.add_argument("--right-form", choices=sorted(_FORMS), default="dual")

    sub = command("toral", _toral, "toral basis elements and their regularity")
    sub.add_argument("--index", help="node index, or 'inf'")
    sub.add_argument("--index-set", choices=("I_0", "I", "I_inf"), default="I")
    sub.add_argument("--t", type=int, help="largest depth; default T")

    sub = command("check-all", _check_all, "run the acceptance suite")
    sub.add_argument("--only", action="append", choices=list(CHECKS))
    return parser


def _config_overrides(args: argparse.Namespace) -> Dict[str, Any]:
    overrides: Dict[str, Any] = {
        "type_label": args.type_label,
        "rank": args.rank,
        "truncation": args.truncation,
        "level": args.level,
        "output_format": args.output_format,
        "log_level": args.log_level,
    }
    if args.ell is not None:
        overrides["ell_sample"] = [int(c) for c in args.ell.split(",") if c.strip()]
    if args.iota is not None:
        positive, _, nonpositive = args.iota.partition(";")
        overrides["iota_override"] = (positive, nonpositive)
    return overrides


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:
        return int(exit_.code or 0)
    try:
        config = Config.from_env(_config_overrides(args))
    except ValueError as err:
        print(f"[error] {err}", file=sys.stderr)
        return 2
    logging.basicConfig(
        level=getattr(logging, config.log_level),
        format="%(levelname)s %(name)s: %(message)s",
    )
    log.debug("Running %s with %s", args.command, config)

    try:
        out = args.handler(args, config)
    except (ValueError, ArithmeticError) as err:
        print(f"[{args.command}] FAIL {err}", file=sys.stderr)
        return 1
    out.write(config, sys.stdout)
    if out.failure is not None:
        print(f"[{args.command}] FAIL {out.failure}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
