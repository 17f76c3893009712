from typing import Optional

from zquantum.affine_pbw.config import Config
from zquantum.affine_pbw.rootsys import enumerate_ordered_roots
from zquantum.affine_pbw.serialization import save_artifact


def enumerate_roots(
    type_label: str,
    rank: Optional[int] = None,
    level: int = 6,
    iota_positive: Optional[str] = None,
    iota_nonpositive: Optional[str] = None,
):
    """Enumerate the positive roots up to the delta-level in convex order.
    The result is serialized into a JSON under the file: "roots.json"

    Args:
        type_label: type letter or full label, e.g. "A" or "E6"
        rank: rank of the finite type
        level: delta-level bound
        iota_positive, iota_nonpositive: optional periods of the word iota,
            as comma-separated node indices
    """
    iota_override = None
    if iota_positive is not None or iota_nonpositive is not None:
        iota_override = (iota_positive or "", iota_nonpositive or "")
    config = Config(
        type_label=type_label, rank=rank, level=level, iota_override=iota_override
    )
    order = enumerate_ordered_roots(config.cartan, config.iota(), config.level)
    save_artifact(order, "roots.json", "roots")
