"""The ten multiplication methods, keyed by their table names."""

from __future__ import annotations

from enum import Enum

from .naive import (naive_kahan, naive_on_array, naive_standard, unroll_four,
                    unroll_three, unroll_two)
from .strassen import strassen_naive, strassen_winograd
from .winograd import winograd_original, winograd_scaled


class MethodId(str, Enum):
    # declaration order is the report's row order
    NaivKahan = "NaivKahan"
    NaivStandard = "NaivStandard"
    NaivOnArray = "NaivOnArray"
    NaivLoopUnrollingTwo = "NaivLoopUnrollingTwo"
    NaivLoopUnrollingThree = "NaivLoopUnrollingThree"
    NaivLoopUnrollingFour = "NaivLoopUnrollingFour"
    StrassenNaiv = "StrassenNaiv"
    StrassenWinograd = "StrassenWinograd"
    WinogradOriginal = "WinogradOriginal"
    WinogradScaled = "WinogradScaled"

    def __str__(self) -> str:
        return self.value

    @property
    def kernel(self):
        return KERNELS[self]

    @classmethod
    def parse(cls, name: str) -> "MethodId":
        try:
            return cls(name.strip())
        except ValueError:
            valid = ", ".join(m.value for m in cls)
            raise ValueError(f"unknown method {name!r}; valid names: {valid}") from None


REFERENCE = MethodId.NaivKahan

KERNELS = {
    MethodId.NaivKahan: naive_kahan,
    MethodId.NaivStandard: naive_standard,
    MethodId.NaivOnArray: naive_on_array,
    MethodId.NaivLoopUnrollingTwo: unroll_two,
    MethodId.NaivLoopUnrollingThree: unroll_three,
    MethodId.NaivLoopUnrollingFour: unroll_four,
    MethodId.StrassenNaiv: strassen_naive,
    MethodId.StrassenWinograd: strassen_winograd,
    MethodId.WinogradOriginal: winograd_original,
    MethodId.WinogradScaled: winograd_scaled,
}

NAIVE_FAMILY = (
    MethodId.NaivKahan,
    MethodId.NaivStandard,
    MethodId.NaivOnArray,
    MethodId.NaivLoopUnrollingTwo,
    MethodId.NaivLoopUnrollingThree,
    MethodId.NaivLoopUnrollingFour,
)


def multiply(A, B, method: MethodId | str = MethodId.NaivStandard):
    """Multiply with the named method."""
    if not isinstance(method, MethodId):
        method = MethodId.parse(method)
    return KERNELS[method](A, B)
