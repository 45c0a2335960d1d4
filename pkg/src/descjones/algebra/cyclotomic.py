"""Exact arithmetic in the cyclotomic field Q(zeta_N).

An element is stored as an integer numerator vector over the power basis
1, z, ..., z^(phi-1) together with a positive common denominator.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

Scalar = Union[int, Fraction, "CyclotomicNumber"]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(N: int) -> tuple[int, ...]:
    """Coefficients of Phi_N, lowest degree first."""
    if N < 1:
        raise ValueError("order must be positive")
    num = [-1] + [0] * (N - 1) + [1]
    for d in range(1, N):
        if N % d == 0:
            div = list(cyclotomic_polynomial(d))
            # exact division by a monic polynomial
            quo = [0] * (len(num) - len(div) + 1)
            for i in range(len(num) - 1, len(div) - 2, -1):
                c = num[i]
                if c:
                    quo[i - len(div) + 1] = c
                    for j, dj in enumerate(div):
                        num[i - len(div) + 1 + j] -= c * dj
            num = quo
    return tuple(num)


class _Field:
    """Precomputed reduction data for Q(zeta_N)."""

    def __init__(self, N: int):
        self.N = N
        phi_poly = cyclotomic_polynomial(N)
        self.phi = len(phi_poly) - 1
        rows = max(N, 2 * self.phi - 1)
        # power_rows[e] = coordinates of z^e in the power basis
        cur = [1] + [0] * (self.phi - 1)
        power_rows = []
        for _ in range(rows):
            power_rows.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for j in range(self.phi):
                    cur[j] -= top * phi_poly[j]
        self.power_rows = power_rows
        self.units = [a for a in range(1, max(N, 2)) if math.gcd(a, N) == 1]

    def reduce_product(self, full: Sequence[int]) -> list[int]:
        """Reduce a coefficient list of length up to 2*phi-1 (or N) modulo Phi_N."""
        out = list(full[: self.phi]) + [0] * max(0, self.phi - len(full))
        for d in range(self.phi, len(full)):
            c = full[d]
            if c:
                row = self.power_rows[d]
                for e in range(self.phi):
                    if row[e]:
                        out[e] += c * row[e]
        return out


@lru_cache(maxsize=None)
def field(N: int) -> _Field:
    return _Field(N)


def _normalize(num: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        num = [-c for c in num]
        den = -den
    g = den
    for c in num:
        if g == 1:
            break
        g = math.gcd(g, c)
    if g > 1:
        num = [c // g for c in num]
        den //= g
    return tuple(num), den


class CyclotomicNumber:
    """Element of Q(zeta_N) in canonical power-basis form."""

    __slots__ = ("N", "_num", "_den")

    def __init__(self, N: int, coefficients: Sequence[int | Fraction | str] | None = None):
        f = field(N)
        coeffs = [Fraction(c) for c in (coefficients or [])]
        if len(coeffs) > f.phi:
            raise ValueError("too many coefficients for this order; use from_power_sum")
        coeffs += [Fraction(0)] * (f.phi - len(coeffs))
        den = 1
        for c in coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        num = [int(c * den) for c in coeffs]
        self.N = N
        self._num, self._den = _normalize(num, den)

    @classmethod
    def _raw(cls, N: int, num: Sequence[int], den: int = 1) -> "CyclotomicNumber":
        z = cls.__new__(cls)
        z.N = N
        z._num, z._den = _normalize(list(num), den)
        return z

    @classmethod
    def from_power_sum(cls, N: int, coeffs: Sequence[int | Fraction]) -> "CyclotomicNumber":
        """sum_e coeffs[e] * z^e for any number of coefficients."""
        f = field(N)
        den = 1
        for c in coeffs:
            if isinstance(c, Fraction):
                den = den * c.denominator // math.gcd(den, c.denominator)
        out = [0] * f.phi
        for e, c in enumerate(coeffs):
            if c:
                c = int(c * den)
                row = f.power_rows[e % N]
                for j in range(f.phi):
                    if row[j]:
                        out[j] += c * row[j]
        return cls._raw(N, out, den)

    @classmethod
    def zeta(cls, N: int, k: int = 1) -> "CyclotomicNumber":
        f = field(N)
        return cls._raw(N, f.power_rows[k % N])

    @classmethod
    def rational(cls, N: int, value: int | Fraction) -> "CyclotomicNumber":
        value = Fraction(value)
        return cls._raw(N, [value.numerator] + [0] * (field(N).phi - 1), value.denominator)

    @classmethod
    def zero(cls, N: int) -> "CyclotomicNumber":
        return cls._raw(N, [0] * field(N).phi)

    @classmethod
    def one(cls, N: int) -> "CyclotomicNumber":
        return cls.rational(N, 1)

    # access

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    @property
    def numerator(self) -> tuple[int, ...]:
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational number")
        return Fraction(self._num[0], self._den)

    # arithmetic

    def _coerce(self, other) -> "CyclotomicNumber":
        if isinstance(other, CyclotomicNumber):
            if other.N != self.N:
                raise ValueError(f"orders differ: {self.N} vs {other.N}")
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.rational(self.N, other)
        raise TypeError(f"cannot combine CyclotomicNumber with {type(other).__name__}")

    def __eq__(self, other) -> bool:
        try:
            other = self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self) -> int:
        return hash((self.N, self._num, self._den))

    def __neg__(self) -> "CyclotomicNumber":
        return CyclotomicNumber._raw(self.N, [-c for c in self._num], self._den)

    def __add__(self, other) -> "CyclotomicNumber":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if self._den == other._den:
            return CyclotomicNumber._raw(self.N, [a + b for a, b in zip(self._num, other._num)], self._den)
        return CyclotomicNumber._raw(
            self.N,
            [a * other._den + b * self._den for a, b in zip(self._num, other._num)],
            self._den * other._den,
        )

    __radd__ = __add__

    def __sub__(self, other) -> "CyclotomicNumber":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "CyclotomicNumber":
        return self._coerce(other) - self

    def __mul__(self, other) -> "CyclotomicNumber":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self._num, other._num
        phi = len(a)
        full = [0] * (2 * phi - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        full[i + j] += ai * bj
        return CyclotomicNumber._raw(self.N, field(self.N).reduce_product(full), self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "CyclotomicNumber":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "CyclotomicNumber":
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "CyclotomicNumber":
        if k < 0:
            return self.inverse() ** (-k)
        result = CyclotomicNumber.one(self.N)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def galois(self, a: int) -> "CyclotomicNumber":
        """Image under z -> z^a (a coprime to N)."""
        f = field(self.N)
        out = [0] * f.phi
        for e, c in enumerate(self._num):
            if c:
                row = f.power_rows[(a * e) % self.N]
                for j in range(f.phi):
                    if row[j]:
                        out[j] += c * row[j]
        return CyclotomicNumber._raw(self.N, out, self._den)

    def conjugate(self) -> "CyclotomicNumber":
        return self.galois(self.N - 1)

    def norm(self) -> Fraction:
        """Product of all Galois conjugates."""
        return (self * self._conjugate_product()).to_fraction()

    def _conjugate_product(self) -> "CyclotomicNumber":
        result = CyclotomicNumber.one(self.N)
        for a in field(self.N).units:
            if a != 1:
                result = result * self.galois(a)
        return result

    def inverse(self) -> "CyclotomicNumber":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        others = self._conjugate_product()
        n = (self * others).to_fraction()
        return others * (1 / n)

    # serialization and display

    def to_json(self) -> dict:
        return {"order": self.N, "coefficients": [str(c) for c in self.coefficients]}

    @classmethod
    def from_json(cls, data: dict) -> "CyclotomicNumber":
        return cls(int(data["order"]), [Fraction(c) for c in data["coefficients"]])

    def __str__(self) -> str:
        parts = []
        for e, c in enumerate(self._num):
            if not c:
                continue
            mono = "" if e == 0 else ("z" if e == 1 else f"z^{e}")
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        text = " ".join(parts) or "0"
        if self._den != 1:
            text = f"({text})/{self._den}"
        return text

    def __repr__(self) -> str:
        return f"CyclotomicNumber({self.N}, {str(self)!r})"


def cyclo_inverse(z: CyclotomicNumber) -> CyclotomicNumber:
    return z.inverse()


def double_angle(x: Scalar, N: int) -> Scalar:
    """<<x>>_N = (1 + x + ... + x^(N-1)) / N."""
    total = 0
    power = 1
    for _ in range(N):
        total = total + power
        power = power * x
    if isinstance(total, CyclotomicNumber):
        return total * Fraction(1, N)
    return Fraction(total) / N


def root_pochhammer(N: int, n: int, conjugate: bool = False) -> CyclotomicNumber:
    """(z)_n = prod_{k=1}^n (1 - z^k), or with z replaced by its conjugate."""
    return _root_pochhammer_table(N, conjugate)[n]


@lru_cache(maxsize=None)
def _root_pochhammer_table(N: int, conjugate: bool) -> tuple[CyclotomicNumber, ...]:
    sign = -1 if conjugate else 1
    out = [CyclotomicNumber.one(N)]
    for k in range(1, 2 * N + 1):
        out.append(out[-1] * (1 - CyclotomicNumber.zeta(N, sign * k)))
    return tuple(out)


@lru_cache(maxsize=None)
def root_pochhammer_inverse(N: int, n: int, conjugate: bool = False) -> CyclotomicNumber:
    """1/(z)_n for 0 <= n < N."""
    if not 0 <= n < N:
        raise ValueError("(z)_n vanishes for n >= N")
    return root_pochhammer(N, n, conjugate).inverse()
