"""Transfer-matrix contraction of sliced diagrams.

The running state is a CycloTensor whose leading axes are the colors of
the current strands, left to right, followed by the colors of the input
strands.  Each slice is applied in turn, so a diagram of width w costs
O(slices * N^(w+2)) multiplications instead of the N^(arcs) naive sum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from ..algebra.cyclotensor import CycloTensor, apply_two_site
from ..algebra.cyclotomic import CyclotomicNumber
from .diagram import CROSSING_KINDS, LongKnotDiagram, Slice, validate_diagram
from .weights import crossing_operator


def _prime_factors(n: int) -> set[int]:
    out, p = set(), 2
    while p * p <= n:
        while n % p == 0:
            out.add(p)
            n //= p
        p += 1
    if n > 1:
        out.add(n)
    return out


@dataclass(frozen=True)
class InvariantMatrix:
    """<D>_{N,n}: row index is the outgoing color, column the incoming one."""

    N: int
    color: int
    knot: str
    matrix: CycloTensor

    def entry(self, i: int, j: int) -> CyclotomicNumber:
        return self.matrix.entry(i, j)

    def __eq__(self, other) -> bool:
        if not isinstance(other, InvariantMatrix):
            return NotImplemented
        return self.N == other.N and self.matrix == other.matrix

    __hash__ = None  # type: ignore[assignment]

    def is_diagonal(self) -> bool:
        return all(self.entry(i, j).is_zero() for i in range(self.N) for j in range(self.N) if i != j)

    def scalar(self) -> CyclotomicNumber | None:
        """The common diagonal value when the matrix is a multiple of the identity."""
        if not self.is_diagonal():
            return None
        first = self.entry(0, 0)
        if all(self.entry(i, i) == first for i in range(1, self.N)):
            return first
        return None

    def in_ring(self) -> bool:
        """Entries lie in Z[1/N, zeta]: the common denominator has only primes dividing N."""
        return _prime_factors(self.matrix.den) <= _prime_factors(self.N)

    def to_json(self) -> dict:
        return {
            "N": self.N,
            "color": self.color,
            "knot": self.knot,
            "entries": [[self.entry(i, j).to_json() for j in range(self.N)] for i in range(self.N)],
        }

    def __str__(self) -> str:
        value = self.scalar()
        if value is not None:
            return f"({value}) * 1_{self.N}"
        rows = ["[" + ", ".join(str(self.entry(i, j)) for j in range(self.N)) + "]" for i in range(self.N)]
        return "[" + ", ".join(rows) + "]"


def _identity_on(N: int, strands: int) -> CycloTensor:
    """Identity tangle on ``strands`` strands, axes (out..., in...)."""
    eye = CycloTensor.identity(N, N)
    state = eye
    for _ in range(strands - 1):
        state = state.outer(eye)
    order = [2 * a for a in range(strands)] + [2 * a + 1 for a in range(strands)]
    return state.transpose(order)


def apply_slice(state: CycloTensor, width: int, s: Slice, N: int, m: int, n: int) -> tuple[CycloTensor, int]:
    """Apply one slice to a state whose first ``width`` axes are the current strands."""
    p = s.pos
    if s.event in CROSSING_KINDS:
        return apply_two_site(crossing_operator(s.event, N, m % N, n % N), state, p, p + 1), width
    if s.event == "cup":
        rank = len(state.shape)
        grown = state.outer(CycloTensor.identity(N, N))
        return grown.moveaxis([rank, rank + 1], [p, p + 1]), width + 2
    if s.event == "cap":
        return state.trace(p, p + 1), width - 2
    return state, width


def tangle_tensor(slices: Sequence[Slice], strands_in: int, N: int, m: int, n: int) -> CycloTensor:
    """Contract a tangle; axes are (top colors..., bottom colors...).

    A tangle without inputs must start with a cup, which then seeds the state.
    """
    slices = list(slices)
    if strands_in == 0:
        if not slices or slices[0].event != "cup":
            raise ValueError("a tangle without inputs must start with a cup")
        state, width = CycloTensor.identity(N, N), 2
        slices = slices[1:]
    else:
        state, width = _identity_on(N, strands_in), strands_in
    for s in slices:
        state, width = apply_slice(state, width, s, N, m, n)
    return state


def contract(d: LongKnotDiagram, N: int, n: int, knot: str | None = None, m: int | None = None) -> InvariantMatrix:
    """<D>_{N,n} with both spectral parameters equal to the color (unless ``m`` is given)."""
    if N < 1:
        raise ValueError("N must be at least 1")
    d = validate_diagram(d)
    m = n if m is None else m
    state = tangle_tensor(d.slices, 1, N, m, n)
    return InvariantMatrix(N, n, knot if knot is not None else d.name, state)


def naive_contract(d: LongKnotDiagram, N: int, n: int) -> InvariantMatrix:
    """Full state sum over every coloring of the arcs, for small diagrams only."""
    import itertools

    from .weights import positional_weight

    d = validate_diagram(d)
    # label the arcs as the transfer would create them
    arcs = [0]
    count = 1
    pieces = []
    for s in d.slices:
        p = s.pos
        if s.event in CROSSING_KINDS:
            top = [count, count + 1]
            count += 2
            pieces.append(("x", s.event, arcs[p], arcs[p + 1], top[0], top[1]))
            arcs[p:p + 2] = top
        elif s.event == "cup":
            arcs[p:p] = [count, count]
            count += 1
        elif s.event == "cap":
            pieces.append(("eq", arcs[p], arcs[p + 1]))
            del arcs[p:p + 2]
    out_arc = arcs[0]
    rows = [[CyclotomicNumber.zero(N) for _ in range(N)] for _ in range(N)]
    for colors in itertools.product(range(N), repeat=count):
        value = CyclotomicNumber.one(N)
        for piece in pieces:
            if piece[0] == "eq":
                if colors[piece[1]] != colors[piece[2]]:
                    value = None
                    break
            else:
                _, kind, sw, se, nw, ne = piece
                value = value * positional_weight(kind, colors[sw], colors[se], colors[nw], colors[ne], n, n, N)
                if value.is_zero():
                    break
        if value is not None and not value.is_zero():
            i, j = colors[out_arc], colors[0]
            rows[i][j] = rows[i][j] + value
    return InvariantMatrix(N, n, d.name, CycloTensor.from_entries(N, (N, N), lambda i, j: rows[i][j]))
