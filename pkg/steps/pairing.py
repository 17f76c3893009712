from typing import List, Optional

from zquantum.affine_pbw.config import Config
from zquantum.affine_pbw.pairing import compare_delta, m_matrix_and_dual
from zquantum.affine_pbw.serialization import to_dict
from zquantum.affine_pbw.utils import save_generic_dict


def compute_delta(type_label: str, rank: Optional[int] = None, r_max: int = 6):
    """Compare the closed forms of Delta_r with the determinants for r <= r_max.
    The result is serialized into a JSON under the file: "delta.json"
    """
    config = Config(type_label=type_label, rank=rank)
    comparisons = [compare_delta(config.cartan, r) for r in range(1, r_max + 1)]
    save_generic_dict(
        {"comparisons": [to_dict(c) for c in comparisons]}, "delta.json", "delta"
    )


def compute_dual_basis(
    type_label: str,
    rank: Optional[int] = None,
    *,
    r: int,
    ell_sample: Optional[List[int]] = None,
):
    """Invert M_r and check the dual basis at the sampled roots of unity.
    The result is serialized into a JSON under the file: "dual-basis.json"
    """
    config = Config(type_label=type_label, rank=rank, ell_sample=ell_sample)
    m, mu, report = m_matrix_and_dual(config.cartan, r, config.orders)
    save_generic_dict(
        {"M": to_dict(m), "mu": to_dict(mu), "report": to_dict(report)},
        "dual-basis.json",
        "dual-basis",
    )
