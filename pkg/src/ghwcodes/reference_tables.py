"""Published SSWD tables for eight example codes, transcribed verbatim.

Each table holds two codes; each code maps r to its r-SSWD as {weight: count}.
The r values are those listed for each code.
"""

from __future__ import annotations

from dataclasses import dataclass

from .constructions import ConstructionSpec


@dataclass(frozen=True)
class ReferenceCode:
    code_id: str
    spec: ConstructionSpec
    n: int
    d: int
    sswd: dict[int, dict[int, int]]


TABLES: dict[int, tuple[ReferenceCode, ...]] = {
    1: (
        ReferenceCode("C1", ConstructionSpec.t33(2, 4, 2, (2, 3)), 20, 10, {
            1: {10: 12, 12: 2, 16: 1},
            2: {15: 16, 16: 12, 18: 6, 20: 1},
            3: {18: 8, 19: 4, 20: 3},
        }),
        ReferenceCode("C2", ConstructionSpec.t33(2, 4, 3, (2, 3)), 35, 18, {
            1: {18: 12, 20: 2, 24: 1},
            2: {27: 16, 28: 12, 30: 6, 32: 1},
            3: {32: 8, 33: 4, 34: 3},
        }),
    ),
    2: (
        ReferenceCode("C1", ConstructionSpec.t35(3, 4, 1, (1, 2)), 37, 24, {
            1: {24: 9, 25: 27, 27: 4},
            2: {33: 93, 34: 36, 36: 1},
            3: {36: 37, 37: 3},
        }),
        ReferenceCode("C2", ConstructionSpec.t35(3, 4, 1, (1, 3)), 28, 18, {
            1: {18: 12, 19: 27, 27: 1},
            2: {24: 9, 25: 108, 27: 4, 28: 9},
            3: {27: 28, 28: 12},
        }),
    ),
    3: (
        ReferenceCode("C1", ConstructionSpec.t42(2, 5, 2, 3), 22, 10, {
            1: {10: 6, 11: 16, 12: 6, 14: 2, 16: 1},
            2: {16: 60, 17: 48, 18: 35, 19: 8, 20: 3, 22: 1},
            3: {19: 48, 20: 87, 21: 12, 22: 8},
            4: {21: 22, 22: 9},
        }),
        # the r = 1 entries sum to 30, but the code has 31 one-dimensional subcodes
        ReferenceCode("C2", ConstructionSpec.t42(2, 5, 2, 4), 14, 6, {
            1: {6: 6, 7: 16, 8: 7, 14: 1},
            2: {10: 77, 11: 56, 12: 7, 14: 15},
            3: {12: 91, 13: 28, 14: 36},
            4: {13: 14, 14: 17},
        }),
    ),
    4: (
        ReferenceCode("C1", ConstructionSpec.t51(3, 3, 3), 10, 6, {
            1: {6: 4, 7: 6, 8: 3},
            2: {9: 10, 10: 3},
            3: {10: 1},
        }),
        ReferenceCode("C2", ConstructionSpec.t51(5, 4, 5), 151, 120, {
            1: {120: 51, 121: 65, 122: 30, 123: 10},
            2: {145: 661, 146: 135, 147: 10},
            3: {150: 151, 151: 5},
        }),
    ),
}

# weight hierarchy of the binary [24, 12, 8] Golay code
GOLAY_24_HIERARCHY = (8, 12, 14, 15, 16, 18, 19, 20, 21, 22, 23, 24)
