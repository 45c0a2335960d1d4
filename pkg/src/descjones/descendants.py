"""Descendant colored Jones invariants DJ^{(m)}.

The descendant twists the cyclotomic expansion by q^{km}:

    DJ^{(m)}_n(q) = sum_k c_{n,k}(q) H_k(q) q^{km}
    DJ^{(m)}(x,q) = sum_k c_k(x,q) H_k(q) q^{km}
    DJ^{(m)}(q)   = sum_k (q;q)_k (q^-1;q^-1)_k H_k(q) q^{km}

The last sum only makes sense in the Habiro ring, so it is exposed as a
truncation or as an evaluation at a root of unity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .algebra.cyclotomic import CyclotomicNumber, root_pochhammer, root_pochhammer_inverse
from .algebra.habiro_ring import HabiroTruncation, habiro_reduce
from .algebra.laurent import BivariateLaurent, LaurentPolynomial, qpoch
from .habiro import HabiroSequence, as_sequence, kernel_x
from .report import Report

MODES = ("colored", "x", "habiro", "root")


@dataclass(frozen=True)
class DescendantValue:
    knot: str
    m: int
    mode: str
    parameter: int
    payload: Any

    def to_json(self) -> dict:
        return {
            "knot": self.knot,
            "m": self.m,
            "mode": self.mode,
            "parameter": self.parameter,
            "value": self.payload.to_json() if hasattr(self.payload, "to_json") else
            [t.to_json() for t in self.payload],
        }


def _q(e: int = 1) -> LaurentPolynomial:
    return LaurentPolynomial.monomial(e)


def dj_colored(knot, m: int, n: int) -> LaurentPolynomial:
    if n < 1:
        raise ValueError("color n must be at least 1")
    seq = as_sequence(knot)
    total = LaurentPolynomial()
    kernel = LaurentPolynomial.constant(1)
    for k in range(n):
        total = total + (kernel * seq[k]).shift(k * m)
        kernel = (kernel * ((1 - _q(n + 1 + k)) * (1 - _q(n - 1 - k)))).shift(-n)
    return total


def dj_x(knot, m: int, kmax: int) -> list[BivariateLaurent]:
    """Terms c_k(x,q) H_k(q) q^{km} for k < kmax."""
    if kmax < 1:
        raise ValueError("kmax must be at least 1")
    seq = as_sequence(knot)
    return [kernel_x(k) * BivariateLaurent.coerce(seq[k].shift(k * m)) for k in range(kmax)]


def _habiro_terms(seq: HabiroSequence, m: int, count: int) -> LaurentPolynomial:
    total = LaurentPolynomial()
    up = LaurentPolynomial.constant(1)
    for k in range(count):
        # (q;q)_k (q^-1;q^-1)_k = (-1)^k q^{-k(k+1)/2} (q;q)_k^2
        weight = (up * up).shift(-k * (k + 1) // 2) * (-1 if k % 2 else 1)
        total = total + (weight * seq[k]).shift(k * m)
        up = up * (1 - _q(k + 1))
    return total


def dj_habiro(knot, m: int, level: int) -> HabiroTruncation:
    if level < 1:
        raise ValueError("level must be at least 1")
    return habiro_reduce(_habiro_terms(as_sequence(knot), m, level), level)


def dj_eval_root(knot, m: int, N: int) -> CyclotomicNumber:
    """DJ^{(m)} at q = zeta_N; only k < N contribute."""
    if N < 1:
        raise ValueError("N must be at least 1")
    seq = as_sequence(knot)
    z = CyclotomicNumber.zeta(N)
    total = CyclotomicNumber.zero(N)
    for k in range(N):
        weight = root_pochhammer(N, k) * root_pochhammer(N, k, conjugate=True)
        total = total + weight * seq[k].at_root(N) * z ** (k * m)
    return total


def fourier_recover(knot, N: int) -> list[CyclotomicNumber]:
    """(zeta;zeta)_k (zeta^-1;zeta^-1)_k H_k(zeta) for k < N, from DJ^{(0..N-1)}(zeta)."""
    z = CyclotomicNumber.zeta(N)
    values = [dj_eval_root(knot, m, N) for m in range(N)]
    out = []
    for k in range(N):
        acc = CyclotomicNumber.zero(N)
        for m, v in enumerate(values):
            acc = acc + v * z ** (-k * m)
        out.append(acc * Fraction(1, N))
    return out


def fourier_direct(knot, N: int) -> list[CyclotomicNumber]:
    seq = as_sequence(knot)
    return [
        root_pochhammer(N, k) * root_pochhammer(N, k, conjugate=True) * seq[k].at_root(N)
        for k in range(N)
    ]


def mirror_descendant(knot, m: int, param: int, mode: str = "colored") -> DescendantValue:
    """Descendant of the mirror knot through DJ^{K*,(m)}(x,q) = DJ^{K,(-m)}(1/x, 1/q)."""
    seq = as_sequence(knot)
    if mode == "colored":
        payload = dj_colored(seq, -m, param).invert_q()
    elif mode == "x":
        payload = [t.invert_q().invert_x() for t in dj_x(seq, -m, param)]
    elif mode == "habiro":
        payload = habiro_reduce(dj_habiro(seq, -m, param).representative.invert_q(), param)
    elif mode == "root":
        payload = dj_eval_root(seq, -m, param).conjugate()
    else:
        raise ValueError(f"unknown mode {mode!r}")
    name = seq.knot[:-1] if seq.knot.endswith("*") else seq.knot + "*"
    return DescendantValue(name, m, mode, param, payload)


def descendant(knot, m: int, param: int, mode: str = "colored") -> DescendantValue:
    seq = as_sequence(knot)
    if mode == "colored":
        payload = dj_colored(seq, m, param)
    elif mode == "x":
        payload = dj_x(seq, m, param)
    elif mode == "habiro":
        payload = dj_habiro(seq, m, param)
    elif mode == "root":
        payload = dj_eval_root(seq, m, param)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return DescendantValue(seq.knot, m, mode, param, payload)


# the two-parameter 5_2 family

def _dj_ab_exponent(a: int, b: int, k: int, l: int) -> int:
    twice = -(2 * k + l + 1) * l
    if twice % 2:
        raise ArithmeticError("non-integral exponent in the 5_2 double sum")
    return twice // 2 + a * k + b * l


def dj_ab_52(a: int, b: int, N: int) -> CyclotomicNumber:
    """DJ_{a,b} of 5_2 at q = zeta_N."""
    if N < 1:
        raise ValueError("N must be at least 1")
    z = CyclotomicNumber.zeta(N)
    total = CyclotomicNumber.zero(N)
    for s in range(N):
        sq = root_pochhammer(N, s) ** 2
        for l in range(s + 1):
            k = s - l
            term = sq * root_pochhammer_inverse(N, l) * z ** _dj_ab_exponent(a, b, k, l)
            total = total + (term if l % 2 == 0 else -term)
    return total


def dj_ab_52_series(a: int, b: int, count: int) -> LaurentPolynomial:
    """Partial double sum over k + l < count, as a Laurent polynomial."""
    total = LaurentPolynomial()
    for s in range(count):
        full = qpoch(s)
        for l in range(s + 1):
            k = s - l
            # (q;q)_s^2 / (q;q)_l = (q;q)_s (q^{l+1};q)_{s-l}
            term = (full * qpoch(s - l, start=l + 1)).shift(_dj_ab_exponent(a, b, k, l))
            total = total + (term if l % 2 == 0 else -term)
    return total


def dj_ab_52_habiro(a: int, b: int, level: int) -> HabiroTruncation:
    return habiro_reduce(dj_ab_52_series(a, b, level), level)


def _lp(terms: dict[int, int]) -> LaurentPolynomial:
    return LaurentPolynomial(terms)


# DJ_{a,b} = sum_m coeff_m * (q DJ^{(m)}) + constant; both coefficients and
# constant as Laurent polynomials in q.
IDENTITIES_52: tuple[tuple[tuple[int, int], dict[int, LaurentPolynomial], LaurentPolynomial], ...] = (
    ((1, 0), {0: _lp({0: 3, -1: -1}), 1: _lp({0: 1, 1: -3}), 2: _lp({2: 1})}, _lp({})),
    ((-1, 0), {0: _lp({1: 3}), 1: _lp({2: -3}), 2: _lp({3: 1})}, _lp({})),
    ((1, -1), {0: _lp({0: 3, -2: 1, -1: -1}), 1: _lp({0: 1, -1: -1, 1: -3}), 2: _lp({2: 1})},
     _lp({-2: -1, -1: 1})),
    ((0, -1), {0: _lp({0: -1}), 1: _lp({1: 1})}, _lp({0: 1})),
    ((-1, -1), {0: _lp({1: 2}), 1: _lp({2: -1})}, _lp({})),
)


def _identity_label(ab: tuple[int, int]) -> str:
    return f"DJ_{{{ab[0]},{ab[1]}}}"


def verify_52_identities(level: int | None = None, N: int | None = None) -> Report:
    """Check the five linear relations between DJ_{a,b} and DJ^{(0)}, DJ^{(1)}, DJ^{(2)}."""
    if (level is None) == (N is None):
        raise ValueError("give exactly one of level or N")
    report = Report()
    if level is not None:
        base = {m: dj_habiro("5_2", m, level) for m in range(3)}
        for ab, coeffs, const in IDENTITIES_52:
            lhs = dj_ab_52_habiro(ab[0], ab[1], level)
            rhs = habiro_reduce(const, level)
            for m, c in coeffs.items():
                rhs = rhs + habiro_reduce(c.shift(1), level) * base[m]
            report.add(lhs == rhs, "5_2", _identity_label(ab), f"level={level}", lhs, rhs)
    else:
        base = {m: dj_eval_root("5_2", m, N) for m in range(3)}
        z = CyclotomicNumber.zeta(N)
        for ab, coeffs, const in IDENTITIES_52:
            lhs = dj_ab_52(ab[0], ab[1], N)
            rhs = const.at_root(N)
            for m, c in coeffs.items():
                rhs = rhs + c.at_root(N) * z * base[m]
            report.add(lhs == rhs, "5_2", _identity_label(ab), f"N={N}", lhs, rhs)
    return report
