from zquantum.affine_pbw.imroots import (
    TILDE,
    family_E,
    family_Edot,
    family_Edot_angle,
    family_Edot_bracket,
    family_Ehat,
)
from zquantum.affine_pbw.serialization import save_family


def compute_imaginary_family(
    family: str, d: int = 1, truncation: int = 6, k: int = 1, method: str = "recursion"
):
    """Compute an imaginary root vector family up to the truncation order.
    The result is serialized into a JSON under the file: "family.json"

    Args:
        family: one of "E", "Edot", "Ehat", "angle" or "bracket"
        d: the symmetrizer d_i
        truncation: truncation order T
        k: block parameter of the "angle" and "bracket" families
        method: "recursion" or "psi", for the "bracket" family
    """
    if family == "E":
        result = family_E(d, truncation)
    elif family == "Edot":
        result = family_Edot(d, truncation)
    elif family == "Ehat":
        result = family_Ehat(d, truncation)
    elif family == "angle":
        result = family_Edot_angle(d, k, truncation)
    elif family == "bracket":
        result = family_Edot_bracket(d, k, truncation, method, TILDE)
    else:
        raise ValueError(f"Invalid family: {family}")
    save_family(result, "family.json")
