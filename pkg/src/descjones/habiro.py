"""Cyclotomic (Habiro) expansion of colored Jones polynomials.

J_n(q) = sum_{k<n} c_{n,k}(q) H_k(q) with the kernel
c_{n,k}(q) = q^{-kn} (q^{n+1};q)_k (q^{n-1};q^{-1})_k.
"""

from __future__ import annotations

import threading
from pathlib import Path
from typing import Callable, Sequence

from .algebra.laurent import (
    BivariateLaurent,
    LaurentPolynomial,
    RationalLaurent,
    exact_divide,
    pochhammer,
    qpoch,
)

BUILTIN_KNOTS = ("3_1", "4_1", "5_2")


class UnknownKnotError(ValueError):
    pass


class InconsistentDataError(ValueError):
    pass


def _q(e: int = 1) -> LaurentPolynomial:
    return LaurentPolynomial.monomial(e)


def kernel_cnk(n: int, k: int) -> LaurentPolynomial:
    """c_{n,k}(q); zero whenever 1 <= n <= k."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    return (qpoch(k, start=n + 1) * qpoch(k, start=n - 1, step=-1)).shift(-k * n)


def kernel_x(k: int) -> BivariateLaurent:
    """c_k(x, q) = x^{-k} (qx;q)_k (q^{-1}x;q^{-1})_k."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    x = BivariateLaurent.x()
    up = pochhammer(BivariateLaurent.monomial(1, 1), BivariateLaurent.q(), k)
    down = pochhammer(BivariateLaurent.monomial(-1, 1), BivariateLaurent.q(-1), k)
    return up * down * x ** (-k)


def gamma_kn(k: int, n: int) -> RationalLaurent:
    """Coefficient of J_n in the expansion of H_k."""
    if k < 0 or n < 1:
        raise ValueError("need k >= 0 and n >= 1")
    if n >= k + 2:
        return RationalLaurent(0)
    num = (1 - _q(n)) * (1 - _q(2 * n))
    twice = k * (k + 3) + n * (n - 3)
    num = num.shift(twice // 2 + 1) * (-1 if (k - n - 1) % 2 else 1)
    return RationalLaurent(num, qpoch(k + n + 1) * qpoch(k - n + 1))


def _gamma_over_common(k: int, n: int) -> LaurentPolynomial:
    """gamma_{k,n} times the common denominator (q;q)_{2k+2} (q;q)_k."""
    g = gamma_kn(k, n)
    # (q;q)_{2k+2}/(q;q)_{k+n+1} and (q;q)_k/(q;q)_{k-n+1} are products of factors
    cof = qpoch(k + 1 - n, start=k + n + 2) * qpoch(n - 1, start=k - n + 2)
    return g.num * cof


class HabiroSequence:
    """Lazily computed, cached sequence H_0, H_1, ... for one knot."""

    def __init__(self, knot: str, provider: Callable[[int], LaurentPolynomial], kind: str):
        self.knot = knot
        self.kind = kind
        self._provider = provider
        self._cache: dict[int, LaurentPolynomial] = {}
        self._lock = threading.Lock()

    def __getitem__(self, k: int) -> LaurentPolynomial:
        if k < 0:
            return LaurentPolynomial()
        hit = self._cache.get(k)
        if hit is not None:
            return hit
        with self._lock:
            if k not in self._cache:
                self._cache[k] = self._provider(k)
            return self._cache[k]

    def mirror(self) -> "HabiroSequence":
        base = self
        name = self.knot[:-1] if self.knot.endswith("*") else self.knot + "*"
        return HabiroSequence(name, lambda k: base[k].invert_q(), f"mirror:{self.kind}")

    def __repr__(self) -> str:
        return f"HabiroSequence({self.knot!r}, {self.kind!r})"


def _h31(k: int) -> LaurentPolynomial:
    return LaurentPolynomial.monomial(k * (k + 3) // 2, (-1) ** k)


def _h41(k: int) -> LaurentPolynomial:
    return LaurentPolynomial.constant(1)


def q_binomial(k: int, s: int) -> LaurentPolynomial:
    if s < 0 or s > k:
        return LaurentPolynomial()
    return exact_divide(qpoch(k), qpoch(s) * qpoch(k - s))


def _h52_closed(k: int) -> LaurentPolynomial:
    total = LaurentPolynomial()
    for s in range(k + 1):
        total = total + q_binomial(k, s).shift(s * (s + 1))
    return total.shift(k * (k + 3) // 2) * (-1) ** k


class _Recursion52:
    """H^{5_2}_k from its three-term q-difference equation."""

    def __init__(self):
        self._values = [LaurentPolynomial.constant(1)]
        self._lock = threading.Lock()

    def __call__(self, k: int) -> LaurentPolynomial:
        if k < 0:
            return LaurentPolynomial()
        with self._lock:
            vals = self._values
            while len(vals) <= k:
                j = len(vals) - 2  # solve the equation indexed by j for H_{j+2}
                h1 = vals[j + 1] if j + 1 >= 0 else LaurentPolynomial()
                h0 = vals[j] if j >= 0 else LaurentPolynomial()
                a = (1 + _q(1) - _q(2 + j) + _q(4 + 2 * j)).shift(3 + j)
                b = (_q(1 + j) - 1).shift(6 + 2 * j)
                rhs = LaurentPolynomial.constant(1 if j + 2 == 0 else 0)
                vals.append(rhs - a * h1 + b * h0)
            return vals[k]


habiro_recursion_52 = _Recursion52()

_PROVIDERS: dict[str, tuple[Callable[[int], LaurentPolynomial], str]] = {
    "3_1": (_h31, "closed-form-3_1"),
    "4_1": (_h41, "constant-4_1"),
    "5_2": (_h52_closed, "closed-form-5_2"),
}

_SEQUENCES: dict[str, HabiroSequence] = {}


def habiro_sequence(knot: str) -> HabiroSequence:
    """Shared sequence for a built-in knot; a trailing ``*`` selects the mirror."""
    if knot in _SEQUENCES:
        return _SEQUENCES[knot]
    base = knot.rstrip("*")
    mirrors = len(knot) - len(base)
    if base not in _PROVIDERS:
        raise UnknownKnotError(f"unknown knot {knot!r}; built-ins are {', '.join(BUILTIN_KNOTS)}")
    if mirrors % 2 == 0:
        provider, kind = _PROVIDERS[base]
        seq = HabiroSequence(base, provider, kind)
    else:
        seq = habiro_sequence(base).mirror()
    _SEQUENCES[knot] = seq
    return seq


def recursion_sequence_52() -> HabiroSequence:
    return HabiroSequence("5_2", habiro_recursion_52, "recursion-5_2")


def builtin_habiro(knot: str, k: int) -> LaurentPolynomial:
    if k < 0:
        raise ValueError("k must be nonnegative")
    return habiro_sequence(knot)[k]


def mirror_habiro(seq: HabiroSequence, k: int) -> LaurentPolynomial:
    return seq[k].invert_q()


def as_sequence(knot_or_seq) -> HabiroSequence:
    if isinstance(knot_or_seq, HabiroSequence):
        return knot_or_seq
    return habiro_sequence(knot_or_seq)


def jones_from_habiro(seq, n: int) -> LaurentPolynomial:
    """Colored Jones polynomial J_n, normalized to 1 at the unknot."""
    if n < 1:
        raise ValueError("color n must be at least 1")
    seq = as_sequence(seq)
    total = LaurentPolynomial()
    kernel = LaurentPolynomial.constant(1)
    for k in range(n):
        total = total + kernel * seq[k]
        # c_{n,k+1} = c_{n,k} q^{-n} (1 - q^{n+1+k}) (1 - q^{n-1-k})
        kernel = (kernel * ((1 - _q(n + 1 + k)) * (1 - _q(n - 1 - k)))).shift(-n)
    return total


def habiro_from_jones(jones: Sequence[LaurentPolynomial], k: int) -> LaurentPolynomial:
    """H_k from J_1, ..., J_{k+1} (``jones[0]`` is J_1)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if len(jones) < k + 1:
        raise ValueError(f"need J_1..J_{k + 1}, got {len(jones)} values")
    num = LaurentPolynomial()
    for n in range(1, k + 2):
        num = num + _gamma_over_common(k, n) * LaurentPolynomial.coerce(jones[n - 1])
    try:
        return exact_divide(num, qpoch(2 * k + 2) * qpoch(k))
    except ValueError as exc:
        raise InconsistentDataError(f"H_{k} does not cancel to a Laurent polynomial") from exc


def load_habiro_file(path: str | Path, knot: str = "user") -> HabiroSequence:
    """Read lines ``k<TAB>[[exp, "coeff"], ...]`` into a sequence."""
    import json

    values: dict[int, LaurentPolynomial] = {}
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        try:
            k_text, poly_text = line.split("\t", 1)
            values[int(k_text)] = LaurentPolynomial.from_json(json.loads(poly_text))
        except (ValueError, TypeError) as exc:
            raise ValueError(f"{path}:{lineno}: malformed Habiro line") from exc
    count = len(values)
    if sorted(values) != list(range(count)):
        raise ValueError(f"{path}: indices must be exactly 0..{count - 1}")

    def provider(k: int) -> LaurentPolynomial:
        if k >= count:
            raise IndexError(f"{knot}: only H_0..H_{count - 1} were supplied")
        return values[k]

    return HabiroSequence(knot, provider, "user-supplied list")


def dump_habiro_lines(seq: HabiroSequence, count: int) -> str:
    import json

    return "".join(f"{k}\t{json.dumps(seq[k].to_json())}\n" for k in range(count))
