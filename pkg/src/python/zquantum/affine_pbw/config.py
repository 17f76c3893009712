"""Run configuration shared by the command line and the workflow steps."""
import os
from typing import Any, Dict, List, Mapping, Optional, Tuple

from pydantic import BaseModel, field_validator, model_validator

from .pairing import first_admissible_orders
from .rootsys import (
    CartanData,
    IotaWord,
    build_iota,
    cartan_affine,
    minimal_rank,
    validate_type,
)

ENV_PREFIX = "AFFINE_PBW_"

_LIST_FIELDS = ("ell_sample",)


class Config(BaseModel):
    """Validated parameters of a computation.

    Attributes:
        type_label: type letter ("A") or full label ("E6").
        rank: rank of the finite type; implied by labels such as "E6" and
            otherwise defaulting to the smallest rank of the type.
        truncation: truncation order T of the series and families.
        level: delta-level bound N of root enumerations.
        ell_sample: orders of roots of unity to sample; defaults to the first
            three admissible orders of the type.
        output_format: "text" or "json".
        iota_override: (positive period, nonpositive period) as comma-separated words.
        log_level: name of the logging level.
    """

    type_label: str = "A"
    rank: Optional[int] = None
    truncation: int = 6
    level: int = 6
    ell_sample: Optional[List[int]] = None
    output_format: str = "text"
    iota_override: Optional[Tuple[str, str]] = None
    log_level: str = "WARNING"

    @field_validator("truncation", "level")
    @classmethod
    def _positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError(f"must be positive, got {value}")
        return value

    @field_validator("ell_sample")
    @classmethod
    def _orders(cls, value: Optional[List[int]]) -> Optional[List[int]]:
        if value is not None and any(ell < 1 for ell in value):
            raise ValueError(f"orders of roots of unity must be positive, got {value}")
        return value

    @field_validator("output_format")
    @classmethod
    def _format(cls, value: str) -> str:
        if value not in ("text", "json"):
            raise ValueError(f"Invalid output format: {value}")
        return value

    @field_validator("log_level")
    @classmethod
    def _log_level(cls, value: str) -> str:
        value = value.upper()
        if value not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"Invalid log level: {value}")
        return value

    @model_validator(mode="after")
    def _check_type(self) -> "Config":
        rank = self.rank
        if rank is None and len(self.type_label.strip()) == 1:
            rank = minimal_rank(self.type_label)
        letter, rank = validate_type(self.type_label, rank)
        self.type_label, self.rank = letter, rank
        return self

    @model_validator(mode="after")
    def _check_iota(self) -> "Config":
        if self.iota_override is not None:
            self.iota()
        return self

    @property
    def cartan(self) -> CartanData:
        return cartan_affine(self.type_label, self.rank)

    @property
    def orders(self) -> List[int]:
        if self.ell_sample is not None:
            return list(self.ell_sample)
        return first_admissible_orders(self.cartan, 3)

    def iota(self) -> IotaWord:
        """The validated word iota, honouring the override."""
        word = IotaWord.parse(*self.iota_override) if self.iota_override else None
        return build_iota(self.cartan, word, self.level)

    @classmethod
    def from_env(
        cls,
        overrides: Optional[Mapping[str, Any]] = None,
        environ: Optional[Mapping[str, str]] = None,
    ) -> "Config":
        """Defaults, then AFFINE_PBW_* variables, then explicit overrides.

        Overrides whose value is None are ignored.
        """
        environ = os.environ if environ is None else environ
        values: Dict[str, Any] = {}
        for name in cls.model_fields:
            raw = environ.get(ENV_PREFIX + name.upper())
            if raw is None:
                continue
            if name in _LIST_FIELDS:
                values[name] = [int(c) for c in raw.split(",") if c.strip()]
            elif name == "iota_override":
                positive, _, nonpositive = raw.partition(";")
                values[name] = (positive, nonpositive)
            else:
                values[name] = raw
        for name, value in (overrides or {}).items():
            if value is not None:
                values[name] = value
        return cls(**values)
