"""Finite-level truncations Z[q]/((q;q)_n) of the Habiro ring."""

from __future__ import annotations

import threading
from functools import lru_cache

from . import dense
from .laurent import LaurentPolynomial


class _Modulus:
    """Reduction data for the ideal generated by (q;q)_level."""

    def __init__(self, level: int):
        self.level = level
        p = [1]
        for j in range(1, level + 1):
            new = p + [0] * j
            for i, c in enumerate(p):
                new[i + j] -= c
            p = dense.trim(new)
        self.poly = p
        self.degree = len(p) - 1
        self._rev_inv: list[int] = [p[-1]]
        # q^-1 = -g where (q;q)_level = 1 + q*g
        self._inv_q_powers = [self.rem([-c for c in p[1:]])]
        self._lock = threading.Lock()

    def rem(self, a: list[int]) -> list[int]:
        a = dense.trim(list(a))
        if len(a) <= self.degree:
            return a
        need = len(a) - self.degree
        if len(self._rev_inv) < need:
            self._rev_inv = dense.series_inverse(self.poly[::-1], max(need, 2 * len(self._rev_inv)))
        return dense.divmod_unit(a, self.poly, self._rev_inv)[1]

    def mulmod(self, a: list[int], b: list[int]) -> list[int]:
        return self.rem(dense.mul(a, b))

    def inv_q_power(self, s: int) -> list[int]:
        """Representative of q^-s."""
        result = [1]
        i = 0
        while s:
            with self._lock:
                while len(self._inv_q_powers) <= i:
                    last = self._inv_q_powers[-1]
                    self._inv_q_powers.append(self.mulmod(last, last))
                base = self._inv_q_powers[i]
            if s & 1:
                result = self.mulmod(result, base)
            s >>= 1
            i += 1
        return result

    def reduce(self, p: LaurentPolynomial) -> list[int]:
        if p.is_zero():
            return []
        offset, coeffs = p.dense()
        if self.degree == 0:
            return []
        if offset >= 0:
            return self.rem([0] * offset + coeffs)
        # split into the part with negative exponents and the rest
        cut = -offset
        low, high = coeffs[:cut], coeffs[cut:]
        out = self.rem(high)
        if any(low):
            low_rem = self.rem(low)
            out = dense.add(out, self.mulmod(low_rem, self.inv_q_power(cut)))
        return out


@lru_cache(maxsize=None)
def _modulus(level: int) -> _Modulus:
    if level < 1:
        raise ValueError("truncation level must be positive")
    return _Modulus(level)


def qq_poly(level: int) -> LaurentPolynomial:
    """(q;q)_level as a polynomial."""
    return LaurentPolynomial.from_dense(0, _modulus(level).poly)


class HabiroTruncation:
    """Class of a Laurent polynomial modulo (q;q)_level.

    The stored representative is canonical: a polynomial of degree below
    deg (q;q)_level with no negative exponents.
    """

    __slots__ = ("level", "_rep")

    def __init__(self, value, level: int):
        self.level = level
        if isinstance(value, HabiroTruncation):
            if value.level < level:
                raise ValueError("cannot lift a truncation to a higher level")
            value = value.representative
        value = LaurentPolynomial.coerce(value)
        self._rep = tuple(_modulus(level).reduce(value))

    @classmethod
    def _from_dense(cls, coeffs: list[int], level: int) -> "HabiroTruncation":
        h = cls.__new__(cls)
        h.level = level
        h._rep = tuple(coeffs)
        return h

    @property
    def representative(self) -> LaurentPolynomial:
        return LaurentPolynomial.from_dense(0, list(self._rep))

    def is_zero(self) -> bool:
        return not self._rep

    def _coerce(self, other) -> "HabiroTruncation":
        if isinstance(other, HabiroTruncation):
            if other.level != self.level:
                raise ValueError(f"levels differ: {self.level} vs {other.level}")
            return other
        return HabiroTruncation(other, self.level)

    def __eq__(self, other) -> bool:
        try:
            other = self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self._rep == other._rep

    def __hash__(self) -> int:
        return hash((self.level, self._rep))

    def __add__(self, other) -> "HabiroTruncation":
        other = self._coerce(other)
        return HabiroTruncation._from_dense(dense.add(list(self._rep), list(other._rep)), self.level)

    __radd__ = __add__

    def __neg__(self) -> "HabiroTruncation":
        return HabiroTruncation._from_dense([-c for c in self._rep], self.level)

    def __sub__(self, other) -> "HabiroTruncation":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "HabiroTruncation":
        return self._coerce(other) - self

    def __mul__(self, other) -> "HabiroTruncation":
        other = self._coerce(other)
        return HabiroTruncation._from_dense(
            _modulus(self.level).mulmod(list(self._rep), list(other._rep)), self.level
        )

    __rmul__ = __mul__

    def project(self, level: int) -> "HabiroTruncation":
        """Image at a lower level (the projective-system map)."""
        if level > self.level:
            raise ValueError("projection must go to a lower level")
        return HabiroTruncation(self.representative, level)

    def at_root(self, N: int, k: int = 1):
        """Evaluate at q = zeta_N^k; well defined for N <= level."""
        if N > self.level:
            raise ValueError(f"(q;q)_{self.level} does not vanish at a primitive {N}-th root")
        return self.representative.at_root(N, k)

    def to_json(self) -> dict:
        return {"level": self.level, "representative": self.representative.to_json()}

    def __str__(self) -> str:
        return f"{self.representative} mod (q;q)_{self.level}"

    def __repr__(self) -> str:
        return f"HabiroTruncation({str(self)!r})"


def habiro_reduce(p, level: int) -> HabiroTruncation:
    return HabiroTruncation(p, level)
