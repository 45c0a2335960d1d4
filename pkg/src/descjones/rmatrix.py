"""Cyclotomic R-matrix r(x; m, n) at a primitive N-th root of unity.

All matrices are CycloTensor operators indexed [i, j, k, l] with rows
(i, j) and columns (k, l); i and k live on the first tensor factor.
Spectral parameters are exact rationals embedded in Q(zeta_N).
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .algebra.cyclotensor import CycloTensor, apply_two_site, kron_operator
from .algebra.cyclotomic import (
    CyclotomicNumber,
    double_angle,
    root_pochhammer,
    root_pochhammer_inverse,
)
from .report import Report

Scalar = int | Fraction | CyclotomicNumber


class PoleError(ZeroDivisionError):
    """A w-function was evaluated at one of its poles."""


def prin(k: int, N: int) -> int:
    """Representative of k modulo N in 0..N-1."""
    return k % N


def hev(k: int, N: int) -> int:
    """1 when 0 <= k <= N-1, else 0."""
    return 1 if 0 <= k < N else 0


def as_field(x: Scalar, N: int) -> CyclotomicNumber:
    if isinstance(x, CyclotomicNumber):
        if x.N != N:
            raise ValueError("scalar lives in a different cyclotomic field")
        return x
    return CyclotomicNumber.rational(N, x)


def _key(x: Scalar) -> tuple:
    if isinstance(x, CyclotomicNumber):
        return ("z", x.N, x.numerator, x.denominator)
    return ("r", Fraction(x))


class _WTable:
    """w(y|t) and 1/w(y|t) for |t| <= span, with poles marked as None."""

    def __init__(self, y: CyclotomicNumber, span: int):
        N = y.N
        factors = [1 - y * CyclotomicNumber.zeta(N, t) for t in range(N)]
        inverses = [None if f.is_zero() else f.inverse() for f in factors]
        one = CyclotomicNumber.one(N)
        w: dict[int, CyclotomicNumber | None] = {0: one}
        winv: dict[int, CyclotomicNumber | None] = {0: one}
        for t in range(1, span + 1):
            f, fi = factors[t % N], inverses[t % N]
            w[t] = None if w[t - 1] is None or fi is None else w[t - 1] * fi
            winv[t] = None if winv[t - 1] is None else winv[t - 1] * f
        for t in range(-1, -span - 1, -1):
            f, fi = factors[(t + 1) % N], inverses[(t + 1) % N]
            w[t] = None if w[t + 1] is None else w[t + 1] * f
            winv[t] = None if winv[t + 1] is None or fi is None else winv[t + 1] * fi
        self.w = w
        self.winv = winv

    def value(self, t: int) -> CyclotomicNumber:
        v = self.w.get(t)
        if v is None:
            raise PoleError(f"w evaluated at a pole (index {t})")
        return v

    def inverse(self, t: int) -> CyclotomicNumber:
        v = self.winv.get(t)
        if v is None or v.is_zero():
            raise PoleError(f"1/w evaluated at a pole (index {t})")
        return v


@lru_cache(maxsize=256)
def _w_table_cached(key: tuple, N: int, span: int) -> _WTable:
    if key[0] == "z":
        y = CyclotomicNumber._raw(N, key[2], key[3])
    else:
        y = CyclotomicNumber.rational(N, key[1])
    return _WTable(y, span)


def _w_table(y: CyclotomicNumber, span: int) -> _WTable:
    return _w_table_cached(_key(y), y.N, span)


def w_eval(x: Scalar, n: int, N: int) -> CyclotomicNumber:
    """w(x|n): 1/prod_{k=1}^n (1 - x z^k) for n >= 0, continued by w(x|n)(1-xz^n) = w(x|n-1)."""
    x = as_field(x, N)
    return _w_table(x, max(abs(n), 1)).value(n)


def h_matrix(y: Scalar, m: int, N: int) -> CycloTensor:
    """Gauge matrix <i|h(y,m)|j> = z^{(j-i)m} <<y z^{j-i}>>_N."""
    y = as_field(y, N)
    z = CyclotomicNumber.zeta(N)
    return CycloTensor.from_entries(
        N, (N, N), lambda i, j: z ** ((j - i) * m) * double_angle(y * z ** (j - i), N)
    )


def h_polynomial(m: int, N: int) -> list[CycloTensor]:
    """Matrices H_a with h(y, m) = sum_a y^a H_a; h is polynomial in y of degree < N."""
    z = CyclotomicNumber.zeta(N)
    return [
        CycloTensor.from_entries(
            N, (N, N), lambda i, j, a=a: z ** ((j - i) * (m + a)) * Fraction(1, N)
        )
        for a in range(N)
    ]


def r_spectral(x: Scalar, m: int, n: int, N: int) -> CycloTensor:
    """The spectral R-matrix r(x; m, n)."""
    x = as_field(x, N)
    z = CyclotomicNumber.zeta(N)
    m, n = m % N, n % N
    span = 2 * N + 1
    tx = _w_table(x, span)
    ts = _w_table(x * z ** -1, span)
    pref = double_angle(x, N)
    zpow = [z ** e for e in range(N)]

    def entry(i, j, k, l):
        return (
            pref
            * zpow[((i - k + n) * (l - j)) % N]
            * ts.value(j - i - m)
            * tx.value(l - k + n)
            * ts.inverse(j - k + n - m)
            * ts.inverse(l - i)
        )

    return CycloTensor.from_entries(N, (N, N, N, N), entry)


@lru_cache(maxsize=None)
def _v_core(a: int, b: int, c: int, d: int, N: int, conjugate: bool) -> CyclotomicNumber:
    if not (hev(a + b, N) and hev(c + d, N)):
        return CyclotomicNumber.zero(N)
    bar, plain = (not conjugate), conjugate
    return (
        root_pochhammer_inverse(N, a, bar)
        * root_pochhammer_inverse(N, c, plain)
        * root_pochhammer_inverse(N, b, bar)
        * root_pochhammer_inverse(N, d, plain)
        * N
    )


def v_symbol(i: int, j: int, k: int, l: int, N: int, conjugate: bool = False) -> CyclotomicNumber:
    """V_{i,j,k,l}(z); with ``conjugate`` the same symbol at the conjugate root."""
    return _v_core(prin(j - i - 1, N), prin(l - k, N), prin(i - l, N), prin(k - j, N), N, conjugate)


def r_at_one(m: int, n: int, N: int) -> CycloTensor:
    """r(1; m, n) from the V-symbol closed form."""
    z = CyclotomicNumber.zeta(N)
    return CycloTensor.from_entries(
        N,
        (N, N, N, N),
        lambda i, j, k, l: v_symbol(i, j - m, k - n, l, N) * z ** (k - l - n + (k - i - n) * m),
    )


def identity_matrix(N: int) -> CycloTensor:
    return CycloTensor.identity(N, N)


def compose(a: CycloTensor, b: CycloTensor) -> CycloTensor:
    """Operator product a.b of two 4-index operators."""
    return a.contract(b, axes=([2, 3], [0, 1]))


def gauge_limit_oracle(m: int, n: int, N: int, x: Scalar = 2) -> CycloTensor:
    """h_2(x,0) r(x;m,n) h_2(1/x,0), which equals r(1;m,n) for any admissible x."""
    x = as_field(x, N)
    eye = identity_matrix(N)
    left = kron_operator(eye, h_matrix(x, 0, N))
    right = kron_operator(eye, h_matrix(x.inverse(), 0, N))
    return compose(compose(left, r_spectral(x, m, n, N)), right)


def fourier_matrix(N: int, inverse: bool = False) -> CycloTensor:
    z = CyclotomicNumber.zeta(N)
    if inverse:
        return CycloTensor.from_entries(N, (N, N), lambda i, j: z ** (-i * j) * Fraction(1, N))
    return CycloTensor.from_entries(N, (N, N), lambda i, j: z ** (i * j))


def fourier_conjugate(r: CycloTensor) -> CycloTensor:
    """(F x F) r (F^-1 x F^-1)."""
    N = r.N
    F, Fi = fourier_matrix(N), fourier_matrix(N, inverse=True)
    return compose(compose(kron_operator(F, F), r), kron_operator(Fi, Fi))


def fourier_r_closed_form(x: Scalar, m: int, n: int, N: int) -> CycloTensor:
    """Closed form of the Fourier-conjugated R-matrix."""
    x = as_field(x, N)
    z = CyclotomicNumber.zeta(N)

    def entry(i, j, k, l):
        left, right = prin(i - m - 1, N), prin(k - m - 1, N)
        if left + j != right + l or l < j:
            return 0
        return (
            z ** ((j - n) * k)
            * x ** (l - j)
            * root_pochhammer(N, l)
            * root_pochhammer(N, left)
            * root_pochhammer_inverse(N, j)
            * root_pochhammer_inverse(N, l - j)
            * root_pochhammer_inverse(N, right)
        )

    return CycloTensor.from_entries(N, (N, N, N, N), entry)


def f_function(x: Scalar, y: Scalar, zz: Scalar, N: int) -> CyclotomicNumber:
    """f(x,y|z) = sum_{a=0}^{N-1} w(x|a)/w(y|a) z^a, defined when (1-y^N) z^N = 1 - x^N."""
    x, y, zz = as_field(x, N), as_field(y, N), as_field(zz, N)
    if (1 - y ** N) * zz ** N != 1 - x ** N:
        raise ValueError("f(x,y|z) needs (1 - y^N) z^N = 1 - x^N")
    tx, ty = _w_table(x, N), _w_table(y, N)
    total = CyclotomicNumber.zero(N)
    for a in range(N):
        total = total + tx.value(a) * ty.inverse(a) * zz ** a
    return total


def f_special_value(x: Scalar, a: int, b: int, N: int) -> CyclotomicNumber:
    """Closed form of f(x z^a, x/z | z^-b)."""
    x = as_field(x, N)
    pa, pb = prin(a, N), prin(b, N)
    if pa + pb >= N:
        return CyclotomicNumber.zero(N)
    return (
        x ** pb
        * _w_table(x, N).inverse(pa)
        * double_angle(x, N).inverse()
        * root_pochhammer(N, pa + pb)
        * root_pochhammer_inverse(N, pa)
        * root_pochhammer_inverse(N, pb)
    )


# Yang-Baxter on V x V x V, as 6-index tensors [a, b, c, a', b', c']

def _on_12(r: CycloTensor) -> CycloTensor:
    eye = identity_matrix(r.N)
    return r.outer(eye).transpose((0, 1, 4, 2, 3, 5))


def _on_23(r: CycloTensor) -> CycloTensor:
    eye = identity_matrix(r.N)
    return eye.outer(r).transpose((0, 2, 3, 1, 4, 5))


def yang_baxter_sides(r12: CycloTensor, r13: CycloTensor, r23: CycloTensor) -> tuple[CycloTensor, CycloTensor]:
    lhs = apply_two_site(r12, apply_two_site(r13, _on_23(r23), 0, 2), 0, 1)
    rhs = apply_two_site(r23, apply_two_site(r13, _on_12(r12), 0, 2), 1, 2)
    return lhs, rhs


def yang_baxter_holds(x: Scalar | None, y: Scalar | None, m1: int, m2: int, m3: int, N: int) -> bool:
    """r12(x) r13(xy) r23(y) = r23(y) r13(xy) r12(x); x = y = None uses r(1)."""
    if x is None:
        r12, r13, r23 = r_at_one(m1, m2, N), r_at_one(m1, m3, N), r_at_one(m2, m3, N)
    else:
        xf, yf = as_field(x, N), as_field(y, N)
        r12 = r_spectral(xf, m1, m2, N)
        r13 = r_spectral(xf * yf, m1, m3, N)
        r23 = r_spectral(yf, m2, m3, N)
    lhs, rhs = yang_baxter_sides(r12, r13, r23)
    return lhs == rhs


def diagonal_matrix(N: int, values: Sequence[CyclotomicNumber]) -> CycloTensor:
    return CycloTensor.from_entries(N, (N, N), lambda i, j: values[i] if i == j else 0)


def _label(x) -> str:
    return "1" if x is None else str(x)


def rmatrix_suite(N_values: Iterable[int] = (2, 3, 4),
                  pairs: Sequence[tuple[Scalar, Scalar]] = ((2, 3), (-3, Fraction(1, 2))),
                  yang_baxter: bool = True) -> Report:
    """Every R-matrix identity, each as one report line."""
    report = Report()
    for N in N_values:
        z = CyclotomicNumber.zeta(N)
        x0, y0 = pairs[0]
        xf, yf = as_field(x0, N), as_field(y0, N)
        # w-function identities
        for t in range(-2 * N, 2 * N + 1):
            lhs = w_eval(xf, t, N) * (1 - xf * z ** t)
            report.add(lhs == w_eval(xf, t - 1, N), "w:recurrence", None, f"N={N},n={t}", lhs, w_eval(xf, t - 1, N))
            lhs = (1 - xf ** N) * w_eval(xf, t + N, N)
            report.add(lhs == w_eval(xf, t, N), "w:quasi-periodic", None, f"N={N},n={t}", lhs, w_eval(xf, t, N))
        for s, t in itertools.product(range(-N, N + 1), repeat=2):
            lhs = w_eval(xf, s + t, N)
            rhs = w_eval(xf, s, N) * w_eval(xf * z ** s, t, N)
            report.add(lhs == rhs, "w:addition", None, f"N={N},m={s},n={t}", lhs, rhs)
        # gauge matrices
        for m in range(N):
            lhs = h_matrix(xf, m, N) @ h_matrix(yf, m, N)
            rhs = h_matrix(xf * yf, m, N)
            report.add(lhs == rhs, "h1", m, f"N={N},x={x0},y={y0}", "h(x)h(y)", "h(xy)" if lhs == rhs else "differs")
            poly = h_polynomial(m, N)
            acc = poly[0]
            for a in range(1, N):
                acc = acc + poly[a].scale(yf ** a)
            report.add(acc == h_matrix(yf, m, N), "h:polynomial-in-y", m, f"N={N}", "sum y^a H_a", "h(y)")
            diag = fourier_matrix(N) @ h_matrix(xf, m, N) @ fourier_matrix(N, inverse=True)
            expect = diagonal_matrix(N, [xf ** prin(j - m, N) for j in range(N)])
            report.add(diag == expect, "fourier:h", m, f"N={N},x={x0}", "F h F^-1", "diag(x^prin(j-m))")
        eye = identity_matrix(N)
        for m, n in itertools.product(range(N), repeat=2):
            r = r_spectral(xf, m, n, N)
            target = r_spectral(xf * yf, m, n, N)
            via1 = compose(compose(kron_operator(h_matrix(yf, m + 1, N), eye), r),
                           kron_operator(h_matrix(yf.inverse(), m + 1, N), eye))
            via2 = compose(compose(kron_operator(eye, h_matrix(yf.inverse(), 0, N)), r),
                           kron_operator(eye, h_matrix(yf, 0, N)))
            report.add(via1 == target, "h2:first-factor", m, f"N={N},n={n}", "h1 r h1^-1", "r(xy)")
            report.add(via2 == target, "h2:second-factor", m, f"N={N},n={n}", "h2^-1 r h2", "r(xy)")
            one = r_at_one(m, n, N)
            report.add(one == gauge_limit_oracle(m, n, N, x0), "r1:closed-form", m, f"N={N},n={n}",
                       "V-symbol", "gauge limit")
            closed = fourier_r_closed_form(xf, m, n, N)
            report.add(closed == fourier_conjugate(r), "fourier:r", m, f"N={N},n={n}",
                       "closed form", "(FxF) r (FxF)^-1")
        report.extend(standard_specialization_checks(N))
        # f-function and q-binomial
        for a, b in itertools.product(range(-1, N + 1), repeat=2):
            lhs = f_function(xf * z ** a, xf * z ** -1, z ** -b, N)
            rhs = f_special_value(xf, a, b, N)
            report.add(lhs == rhs, "f:special-value", None, f"N={N},a={a},b={b}", lhs, rhs)
        for s in range(N):
            lhs = CyclotomicNumber.one(N)
            for j in range(s):
                lhs = lhs * (1 - xf * z ** j)
            rhs = CyclotomicNumber.zero(N)
            for t in range(s + 1):
                rhs = rhs + (-xf) ** t * z ** (t * (t - 1) // 2) * root_pochhammer(N, s) \
                    * root_pochhammer_inverse(N, t) * root_pochhammer_inverse(N, s - t)
            report.add(lhs == rhs, "q-binomial", None, f"N={N},s={s}", lhs, rhs)
        if yang_baxter:
            report.extend(yang_baxter_report(N, pairs))
    return report


def standard_specialization_checks(N: int, x: Scalar = 1) -> Report:
    """Structure of the Fourier closed form at m = n = -1.

    There it should be the standard colored Jones R-matrix: weight
    conserving (i + j = k + l), upper triangular (zero for l < j), and a
    solution of the braid relation.
    """
    report = Report()
    R = fourier_r_closed_form(x, -1, -1, N)
    conserving = all(
        R.entry(i, j, k, l).is_zero()
        for i, j, k, l in itertools.product(range(N), repeat=4)
        if i + j != k + l or l < j
    )
    report.add(conserving, "standard:weight", -1, f"N={N}", "i+j=k+l,l>=j", "holds" if conserving else "violated")
    lhs, rhs = yang_baxter_sides(R, R, R)
    report.add(lhs == rhs, "standard:braid", -1, f"N={N}", "R12R13R23", "R23R13R12")
    return report


def yang_baxter_report(N: int, pairs: Sequence[tuple[Scalar, Scalar]]) -> Report:
    report = Report()
    for x, y in list(pairs) + [(None, None)]:
        cache: dict = {}

        def r(xv, a, b):
            key = (_key(xv) if xv is not None else None, a, b)
            if key not in cache:
                cache[key] = r_at_one(a, b, N) if xv is None else r_spectral(xv, a, b, N)
            return cache[key]

        for m1, m2, m3 in itertools.product(range(N), repeat=3):
            if x is None:
                r12, r13, r23 = r(None, m1, m2), r(None, m1, m3), r(None, m2, m3)
            else:
                xf, yf = as_field(x, N), as_field(y, N)
                r12, r13, r23 = r(xf, m1, m2), r(xf * yf, m1, m3), r(yf, m2, m3)
            lhs, rhs = yang_baxter_sides(r12, r13, r23)
            report.add(lhs == rhs, "YB", f"({m1},{m2},{m3})", f"N={N},x={_label(x)},y={_label(y)}",
                       "r12r13r23", "r23r13r12")
    return report


def matrix_dump(op: CycloTensor) -> dict:
    """A 4-index operator as its N^2 x N^2 matrix: size, then row-major entries."""
    from .algebra.cyclotensor import operator_matrix

    flat = operator_matrix(op)
    size = flat.shape[0]
    return {"size": size, "entries": [flat.entry(a, b).to_json() for a in range(size) for b in range(size)]}
