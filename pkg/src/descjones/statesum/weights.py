"""Local weights of the state sum.

Colors are attached to the four ends of a crossing by their semantic
labels i, j, k, l.  Which end carries which label depends on the family:
the layout strings below list the labels at (south-west, south-east,
north-west, north-east).
"""

from __future__ import annotations

from functools import lru_cache

from ..algebra.cyclotensor import CycloTensor
from ..algebra.cyclotomic import CyclotomicNumber
from ..rmatrix import v_symbol
from .diagram import CROSSING_KINDS, DiagramError

LAYOUT = {"X1": "klji", "X2": "jkil", "X3": "ijlk", "X4": "klji"}

SEGMENT_KINDS = ("up", "down", "cap", "cup")


def crossing_weight(kind: str, i: int, j: int, k: int, l: int, m: int, n: int, N: int) -> CyclotomicNumber:
    """Weight of one crossing with spectral parameters (m, n)."""
    if kind not in CROSSING_KINDS:
        raise DiagramError(f"unknown crossing kind {kind!r}")
    z = CyclotomicNumber.zeta(N)
    family, positive = kind[:2], kind.endswith("+")
    if positive and family != "X4":
        return v_symbol(i, j - m, k - n, l, N) * z ** (k - l - n + (k - i - n) * m)
    if positive:
        return v_symbol(k, l, i - m, j - n - 1, N, conjugate=True) * z ** (j - 1 - k - n + (j - l - n) * m)
    if family != "X4":
        return v_symbol(i, j - n, k - m, l, N, conjugate=True) * z ** (l - k + (l - j + 1 + n) * m)
    return v_symbol(k, l, i - n, j - m - 1, N) * z ** (k - j + 1 + (k - i + 1 + n) * m)


def segment_weight(kind: str, i: int, j: int) -> int:
    """Every segment, cup and cap carries delta_{i,j}."""
    if kind not in SEGMENT_KINDS:
        raise ValueError(f"unknown segment kind {kind!r}")
    return 1 if i == j else 0


def positional_weight(kind: str, sw: int, se: int, nw: int, ne: int, m: int, n: int, N: int) -> CyclotomicNumber:
    """Weight with colors given by position instead of label."""
    labels = dict(zip(LAYOUT[kind[:2]], (sw, se, nw, ne)))
    return crossing_weight(kind, labels["i"], labels["j"], labels["k"], labels["l"], m, n, N)


@lru_cache(maxsize=512)
def crossing_operator(kind: str, N: int, m: int, n: int) -> CycloTensor:
    """Transfer operator W[nw, ne, sw, se] mapping bottom colors to top colors."""
    return CycloTensor.from_entries(
        N, (N, N, N, N), lambda nw, ne, sw, se: positional_weight(kind, sw, se, nw, ne, m, n, N)
    )
