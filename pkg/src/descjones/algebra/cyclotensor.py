"""Exact dense tensors over Q(zeta_N).

A tensor keeps one numpy object array of integers per power-basis
coordinate, shape ``(phi,) + shape``, and a single positive common
denominator.  Contractions run as a handful of numpy ``tensordot`` calls
on Python integers followed by reduction modulo Phi_N.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from .cyclotomic import CyclotomicNumber, field


def _zeros(shape) -> np.ndarray:
    out = np.empty(shape, dtype=object)
    out.fill(0)
    return out


class CycloTensor:
    """Immutable exact tensor with entries in Q(zeta_N)."""

    __slots__ = ("N", "num", "den")

    def __init__(self, N: int, num: np.ndarray, den: int = 1):
        self.N = N
        self.num = num
        self.den = den

    @property
    def phi(self) -> int:
        return self.num.shape[0]

    @property
    def shape(self) -> tuple[int, ...]:
        return self.num.shape[1:]

    # construction

    @classmethod
    def from_entries(cls, N: int, shape: Sequence[int], entry: Callable[..., CyclotomicNumber | int | Fraction]) -> "CycloTensor":
        """Build from a function of the multi-index."""
        phi = field(N).phi
        shape = tuple(shape)
        values = {}
        den = 1
        for idx in np.ndindex(*shape):
            v = entry(*idx)
            if not isinstance(v, CyclotomicNumber):
                v = CyclotomicNumber.rational(N, v)
            if not v.is_zero():
                values[idx] = v
                den = den * v.denominator // math.gcd(den, v.denominator)
        num = _zeros((phi,) + shape)
        for idx, v in values.items():
            scale = den // v.denominator
            for e, c in enumerate(v.numerator):
                if c:
                    num[(e,) + idx] = c * scale
        return cls(N, num, den)

    @classmethod
    def from_nested(cls, N: int, rows) -> "CycloTensor":
        arr = np.empty(np.shape(rows)[:2], dtype=object)
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                arr[i, j] = v
        return cls.from_entries(N, arr.shape, lambda *idx: arr[idx])

    @classmethod
    def identity(cls, N: int, size: int) -> "CycloTensor":
        return cls.from_entries(N, (size, size), lambda i, j: 1 if i == j else 0)

    @classmethod
    def zeros(cls, N: int, shape: Sequence[int]) -> "CycloTensor":
        return cls(N, _zeros((field(N).phi,) + tuple(shape)), 1)

    # access

    def entry(self, *idx: int) -> CyclotomicNumber:
        return CyclotomicNumber._raw(self.N, [int(self.num[(e,) + idx]) for e in range(self.phi)], self.den)

    def to_nested(self) -> list:
        """Nested lists of CyclotomicNumber."""
        def build(prefix):
            if len(prefix) == len(self.shape):
                return self.entry(*prefix)
            return [build(prefix + (i,)) for i in range(self.shape[len(prefix)])]
        return build(())

    def is_zero(self) -> bool:
        return not any(int(c) for c in self.num.flat)

    # arithmetic

    def _check(self, other: "CycloTensor") -> None:
        if other.N != self.N:
            raise ValueError("orders differ")

    def normalized(self) -> "CycloTensor":
        g = self.den
        for c in self.num.flat:
            if g == 1:
                return self
            g = math.gcd(g, int(c))
        if g == 1:
            return self
        return CycloTensor(self.N, self.num // g, self.den // g)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycloTensor):
            return NotImplemented
        if other.N != self.N or other.shape != self.shape:
            return False
        return bool(np.all(self.num * other.den == other.num * self.den))

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "CycloTensor") -> "CycloTensor":
        self._check(other)
        g = math.gcd(self.den, other.den)
        den = self.den // g * other.den
        return CycloTensor(self.N, self.num * (den // self.den) + other.num * (den // other.den), den).normalized()

    def __neg__(self) -> "CycloTensor":
        return CycloTensor(self.N, -self.num, self.den)

    def __sub__(self, other: "CycloTensor") -> "CycloTensor":
        return self + (-other)

    def scale(self, c: CyclotomicNumber | int | Fraction) -> "CycloTensor":
        if not isinstance(c, CyclotomicNumber):
            c = CyclotomicNumber.rational(self.N, c)
        full = [None] * (2 * self.phi - 1)
        for a in range(self.phi):
            ca = c.numerator[a]
            if not ca:
                continue
            for b in range(self.phi):
                term = self.num[b] * ca
                full[a + b] = term if full[a + b] is None else full[a + b] + term
        return self._from_full(full, self.shape, self.den * c.denominator)

    def _from_full(self, full: list, shape: tuple[int, ...], den: int) -> "CycloTensor":
        f = field(self.N)
        out = _zeros((self.phi,) + shape)
        for d, block in enumerate(full):
            if block is None:
                continue
            if d < self.phi:
                out[d] = out[d] + block
            else:
                row = f.power_rows[d]
                for e in range(self.phi):
                    if row[e]:
                        out[e] = out[e] + block * row[e]
        return CycloTensor(self.N, out, den).normalized()

    def contract(self, other: "CycloTensor", axes) -> "CycloTensor":
        """numpy.tensordot semantics on the entry axes."""
        self._check(other)
        full: list = [None] * (2 * self.phi - 1)
        shape = None
        for a in range(self.phi):
            A = self.num[a]
            if not np.any(A):
                continue
            for b in range(other.phi):
                B = other.num[b]
                if not np.any(B):
                    continue
                term = np.tensordot(A, B, axes=axes)
                shape = term.shape
                full[a + b] = term if full[a + b] is None else full[a + b] + term
        if shape is None:
            shape = np.tensordot(
                np.zeros(self.shape, dtype=object), np.zeros(other.shape, dtype=object), axes=axes
            ).shape
        return self._from_full(full, shape, self.den * other.den)

    def __matmul__(self, other: "CycloTensor") -> "CycloTensor":
        return self.contract(other, axes=([len(self.shape) - 1], [0]))

    def outer(self, other: "CycloTensor") -> "CycloTensor":
        return self.contract(other, axes=0)

    def transpose(self, axes: Sequence[int]) -> "CycloTensor":
        return CycloTensor(self.N, self.num.transpose((0,) + tuple(a + 1 for a in axes)), self.den)

    def moveaxis(self, source, destination) -> "CycloTensor":
        src = [s + 1 for s in np.atleast_1d(source)]
        dst = [d + 1 for d in np.atleast_1d(destination)]
        return CycloTensor(self.N, np.moveaxis(self.num, src, dst), self.den)

    def reshape(self, shape: Sequence[int]) -> "CycloTensor":
        return CycloTensor(self.N, self.num.reshape((self.phi,) + tuple(shape)), self.den)

    def trace(self, axis1: int, axis2: int) -> "CycloTensor":
        return CycloTensor(self.N, np.trace(self.num, axis1=axis1 + 1, axis2=axis2 + 1), self.den).normalized()

    def to_json(self) -> dict:
        return {
            "order": self.N,
            "shape": list(self.shape),
            "entries": [self.entry(*idx).to_json() for idx in np.ndindex(*self.shape)],
        }


def kron_operator(a: CycloTensor, b: CycloTensor) -> CycloTensor:
    """Tensor product of two matrices as a 4-index operator [i, j, k, l].

    Rows are (i, j) and columns (k, l), with i, k on the first factor.
    """
    return a.outer(b).transpose((0, 2, 1, 3))


def operator_matrix(t: CycloTensor) -> CycloTensor:
    """Flatten a 2r-index operator into a square matrix, row-major."""
    r = len(t.shape) // 2
    rows = int(np.prod(t.shape[:r]))
    return t.reshape((rows, rows))


def apply_two_site(op: CycloTensor, state: CycloTensor, p: int, q: int) -> CycloTensor:
    """Apply a 4-index operator [out1, out2, in1, in2] to axes p, q of ``state``."""
    moved = op.contract(state, axes=([2, 3], [p, q]))
    # result axes: out1, out2, then the remaining state axes in order
    rest = [ax for ax in range(len(state.shape)) if ax not in (p, q)]
    order = [None] * len(state.shape)
    order[p] = 0
    order[q] = 1
    for k, ax in enumerate(rest):
        order[ax] = k + 2
    return moved.transpose(order)
