"""PBW bases of untwisted affine quantum groups with exact arithmetic.

Example:

    >>> from zquantum.affine_pbw import cartan_affine, compare_delta
    >>> compare_delta(cartan_affine("A", 2), 3).matches
    True
    >>> from zquantum.affine_pbw import RatFunc, SeriesVec, psi_transform
    >>> psi_transform(SeriesVec([RatFunc(1), RatFunc(1), RatFunc(0)])).coeffs[2]
    RatFunc('(1/2)')

The same computations are available from the ``affine-pbw`` command.
"""
from .config import Config
from .imroots import (
    ImFamily,
    ImPoly,
    family_E,
    family_Edot,
    family_Edot_angle,
    family_Edot_bracket,
    family_Ehat,
)
from .pairing import (
    GramMatrix,
    compare_delta,
    delta_closed,
    delta_det,
    is_admissible,
    m_matrix_and_dual,
    pair_monomials,
)
from .pbw import ExpVec, basis_toral, toral_element, weight
from .qlaurent import LaurentPoly, RatFunc, q_binom, q_factorial, q_int
from .rootsys import (
    CartanData,
    OrderedRoots,
    Root,
    build_iota,
    cartan_affine,
    enumerate_ordered_roots,
)
from .series import SeriesVec, phi_transform, psi_transform

__all__ = [
    "CartanData",
    "Config",
    "ExpVec",
    "GramMatrix",
    "ImFamily",
    "ImPoly",
    "LaurentPoly",
    "OrderedRoots",
    "RatFunc",
    "Root",
    "SeriesVec",
    "basis_toral",
    "build_iota",
    "cartan_affine",
    "compare_delta",
    "delta_closed",
    "delta_det",
    "enumerate_ordered_roots",
    "family_E",
    "family_Edot",
    "family_Edot_angle",
    "family_Edot_bracket",
    "family_Ehat",
    "is_admissible",
    "m_matrix_and_dual",
    "pair_monomials",
    "phi_transform",
    "psi_transform",
    "q_binom",
    "q_factorial",
    "q_int",
    "toral_element",
    "weight",
]
