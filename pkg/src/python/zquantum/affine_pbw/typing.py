"""Types used across the affine PBW package."""
from os import PathLike
from typing import Any, Dict, Tuple, Union

from typing_extensions import Protocol


class Readable(Protocol):
    def read(self) -> str:
        pass


class Writeable(Protocol):
    def write(self, content: str):
        pass


class RingElement(Protocol):
    """Element of a commutative ring containing Q (RatFunc, ImPoly, Fraction)."""

    def __add__(self, other: Any) -> Any:
        pass

    def __sub__(self, other: Any) -> Any:
        pass

    def __mul__(self, other: Any) -> Any:
        pass


# Coordinates over the simple roots alpha_0, ..., alpha_n (and alpha_infinity).
Vector = Tuple[int, ...]

# Node of I_infinity: an integer of I, or "inf".
ToralIndex = Union[int, str]

# Partition of an integer as {part: multiplicity}.
Partition = Dict[int, int]

AnyPath = Union[str, bytes, PathLike]

LoadSource = Union[Readable, AnyPath]

DumpTarget = Union[Writeable, AnyPath]
