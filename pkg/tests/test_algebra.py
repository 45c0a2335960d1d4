import itertools
import json
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from descjones.algebra import dense
from descjones.algebra.cyclotensor import CycloTensor, apply_two_site, kron_operator
from descjones.algebra.cyclotomic import (
    CyclotomicNumber,
    cyclotomic_polynomial,
    double_angle,
    root_pochhammer,
)
from descjones.algebra.habiro_ring import HabiroTruncation, habiro_reduce, qq_poly
from descjones.algebra.laurent import (
    BivariateLaurent,
    LaurentPolynomial,
    RationalLaurent,
    exact_divide,
    pochhammer,
    qpoch,
    substitute,
)
from helpers import lp, to_complex

small_int = st.integers(-6, 6)
laurents = st.dictionaries(st.integers(-8, 12), st.integers(-9, 9), max_size=7).map(LaurentPolynomial)
bivariates = st.dictionaries(st.tuples(st.integers(-4, 5), st.integers(-3, 3)), st.integers(-5, 5),
                             max_size=5).map(BivariateLaurent)
orders = st.integers(1, 12)


def cyclos(N):
    return st.lists(st.integers(-5, 5), min_size=1, max_size=2 * N).map(
        lambda cs: CyclotomicNumber.from_power_sum(N, cs))


q = LaurentPolynomial.monomial(1)


# Laurent polynomials

def test_pochhammer_examples():
    assert qpoch(0) == 1
    assert qpoch(3) == lp({0: 1, 1: -1, 2: -1, 4: 1, 5: 1, 6: -1})
    x = BivariateLaurent.x()
    qx = BivariateLaurent.monomial(1, 1)
    assert pochhammer(qx, BivariateLaurent.q(), 1) == 1 - qx
    assert x.x_degrees() == (1, 1)


def test_pochhammer_against_sympy():
    t = sp.symbols("q")
    for k, start, step in [(4, 1, 1), (3, 5, -1), (5, -2, 2), (0, 3, 1)]:
        expected = sp.expand(sp.prod([1 - t ** (start + j * step) for j in range(k)]))
        got = qpoch(k, start, step)
        as_sympy = sum(c * t ** e for e, c in got.items())
        assert sp.expand(as_sympy - expected) == 0


def test_substitution_examples():
    p = BivariateLaurent.q() + BivariateLaurent.x()
    assert substitute(p, "x->q^a", 2) == q + q ** 2
    assert substitute(q ** 2, "q->1/q") == LaurentPolynomial.monomial(-2)
    assert substitute(1 - q, "q->zeta", 4) == CyclotomicNumber(4, [1, -1])
    assert substitute(BivariateLaurent.x(), "x->1/x") == BivariateLaurent.x(-1)
    with pytest.raises(ValueError):
        substitute(q, "q->q^2")


def test_printing_and_json():
    p = lp({-2: 1, -1: -1, 0: 1, 1: -1, 2: 1})
    assert str(p) == "q^-2 - q^-1 + 1 - q + q^2"
    assert p.to_json() == [[-2, "1"], [-1, "-1"], [0, "1"], [1, "-1"], [2, "1"]]
    assert LaurentPolynomial.from_json(json.loads(json.dumps(p.to_json()))) == p


def test_negative_power_only_for_units():
    assert (-q) ** -3 == LaurentPolynomial.monomial(-3, -1)
    with pytest.raises(ValueError):
        (1 + q) ** -1


@given(laurents, laurents, laurents)
def test_laurent_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == 0


@given(laurents, laurents)
def test_laurent_mul_matches_evaluation(a, b):
    for v in (Fraction(2), Fraction(-1, 3)):
        assert (a * b).evaluate(v) == a.evaluate(v) * b.evaluate(v)


@given(laurents)
def test_invert_q_is_involution(a):
    assert a.invert_q().invert_q() == a


@given(laurents, laurents)
def test_exact_divide_inverts_multiplication(a, b):
    if b.is_zero():
        return
    assert exact_divide(a * b, b) == a


def test_exact_divide_rejects_non_divisible():
    with pytest.raises(ValueError):
        exact_divide(1 + q ** 2, 1 + q)
    with pytest.raises(ValueError):
        exact_divide(q, 2 + 3 * q)


@given(st.lists(st.integers(-10 ** 6, 10 ** 6), min_size=1, max_size=60),
       st.lists(st.integers(-10 ** 6, 10 ** 6), min_size=1, max_size=60))
def test_kronecker_product_matches_schoolbook(a, b):
    expected = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            expected[i + j] += x * y
    assert dense.mul(a, b) == dense.trim(expected)


def test_rational_laurent():
    r = RationalLaurent(1 - q ** 2, 1 - q)
    assert r.is_laurent() and r.to_laurent() == 1 + q
    assert RationalLaurent(1, 1 - q) == RationalLaurent(1 + q, 1 - q ** 2)
    assert not RationalLaurent(1, 1 - q).is_laurent()


@given(bivariates, bivariates, st.integers(-3, 4))
def test_bivariate_substitution_is_homomorphism(a, b, n):
    assert (a * b).subs_x_qpow(n) == a.subs_x_qpow(n) * b.subs_x_qpow(n)
    assert (a + b).subs_x_qpow(n) == a.subs_x_qpow(n) + b.subs_x_qpow(n)


# cyclotomic numbers

def test_cyclotomic_polynomial_matches_sympy():
    t = sp.symbols("t")
    for N in range(1, 31):
        expected = sp.Poly(sp.cyclotomic_poly(N, t), t).all_coeffs()[::-1]
        assert list(cyclotomic_polynomial(N)) == [int(c) for c in expected]


def test_inverse_examples():
    assert CyclotomicNumber.one(5).inverse() == 1
    assert CyclotomicNumber.zeta(7).inverse() == CyclotomicNumber.zeta(7, 6)
    z = CyclotomicNumber.zeta(4)
    assert (1 - z).inverse() == (1 + z) * Fraction(1, 2)
    with pytest.raises(ZeroDivisionError):
        CyclotomicNumber.zero(3).inverse()


def test_double_angle_examples():
    assert double_angle(1, 5) == 1
    for N in range(2, 9):
        assert double_angle(CyclotomicNumber.zeta(N), N) == 0
    assert double_angle(2, 3) == Fraction(7, 3)


@given(st.integers(-20, 20).filter(lambda v: v != 1), st.integers(1, 9))
def test_double_angle_identity(x, N):
    assert double_angle(x, N) * N * (1 - x) == 1 - Fraction(x) ** N


@pytest.mark.parametrize("N", range(2, 9))
def test_product_of_one_minus_roots_is_N(N):
    assert root_pochhammer(N, N - 1) == N
    for k in range(N):
        assert root_pochhammer(N, k) * root_pochhammer(N, N - 1 - k, conjugate=True) == N


@settings(max_examples=60)
@given(orders.flatmap(lambda N: st.tuples(st.just(N), cyclos(N), cyclos(N), cyclos(N))))
def test_field_axioms(data):
    N, a, b, c = data
    assert a * (b + c) == a * b + a * c
    assert a.conjugate().conjugate() == a
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    if not a.is_zero():
        assert a * a.inverse() == 1
    assert abs(to_complex(a * b) - to_complex(a) * to_complex(b)) < 1e-6 * (1 + abs(to_complex(a * b)))


@given(orders, st.integers(-40, 40))
def test_conjugate_of_power(N, k):
    assert CyclotomicNumber.zeta(N, k).conjugate() == CyclotomicNumber.zeta(N, N - k)


@given(orders, st.fractions(max_denominator=20))
def test_conjugation_fixes_rationals(N, r):
    assert CyclotomicNumber.rational(N, r).conjugate() == r


def test_cyclotomic_json_round_trip():
    x = CyclotomicNumber(6, [Fraction(1, 3), -2])
    data = json.loads(json.dumps(x.to_json()))
    assert data == {"order": 6, "coefficients": ["1/3", "-2"]}
    assert CyclotomicNumber.from_json(data) == x


def test_galois_twisted_evaluation():
    p = 1 + q
    assert p.at_root(5, 2) == 1 + CyclotomicNumber.zeta(5, 2)


# Habiro truncations

def test_habiro_reduce_examples():
    assert habiro_reduce(LaurentPolynomial.monomial(-1), 1) == 1
    assert habiro_reduce(qpoch(2) * q ** 5, 2).is_zero()
    # sympy: rem(q**10, (q;q)_3) = 5q^5 + 2q^4 - 4q^3 - 5q^2 - q + 4
    assert habiro_reduce(q ** 10, 3).representative == lp({0: 4, 1: -1, 2: -5, 3: -4, 4: 2, 5: 5})


def test_habiro_reduce_matches_sympy_remainder():
    t = sp.symbols("q")
    for level, e in [(3, 10), (4, 17), (5, 40)]:
        expected = sp.Poly(sp.rem(t ** e, sp.expand(sp.prod([1 - t ** j for j in range(1, level + 1)])), t), t)
        got = habiro_reduce(q ** e, level).representative
        assert {k[0]: int(v) for k, v in expected.terms()} == got.terms


@settings(max_examples=40)
@given(laurents, laurents, st.integers(1, 7))
def test_reduction_ignores_ideal_multiples(p, r, level):
    assert habiro_reduce(p + qq_poly(level) * r, level) == habiro_reduce(p, level)


@settings(max_examples=40)
@given(laurents, st.integers(1, 7), st.integers(0, 4))
def test_truncation_levels_are_compatible(p, low, extra):
    high = low + extra
    assert habiro_reduce(p, high).project(low) == habiro_reduce(p, low)


@settings(max_examples=40)
@given(laurents, laurents, st.integers(1, 6))
def test_truncation_is_ring_map(a, b, level):
    assert habiro_reduce(a * b, level) == habiro_reduce(a, level) * habiro_reduce(b, level)
    assert habiro_reduce(a - b, level) == habiro_reduce(a, level) - habiro_reduce(b, level)


@settings(max_examples=30)
@given(laurents, st.integers(1, 6))
def test_truncation_evaluates_at_roots(p, level):
    h = habiro_reduce(p, level)
    for N in range(1, level + 1):
        assert h.at_root(N) == p.at_root(N)


def test_q_inverse_in_truncation():
    for level in range(1, 8):
        assert habiro_reduce(q, level) * habiro_reduce(LaurentPolynomial.monomial(-1), level) == 1


# exact tensors

def _pure_matmul(a, b, N):
    n, k, m = len(a), len(b), len(b[0])
    zero = CyclotomicNumber.zero(N)
    out = [[zero for _ in range(m)] for _ in range(n)]
    for i, j, t in itertools.product(range(n), range(m), range(k)):
        out[i][j] = out[i][j] + a[i][t] * b[t][j]
    return out


@pytest.mark.parametrize("N", [1, 3, 4, 5])
def test_tensor_matmul_matches_scalar_arithmetic(N):
    z = CyclotomicNumber.zeta(N)
    a = [[z ** (i * j + 1) + Fraction(i, 3) for j in range(3)] for i in range(2)]
    b = [[1 - z ** (i + 2 * j) for j in range(4)] for i in range(3)]
    A, B = CycloTensor.from_nested(N, a), CycloTensor.from_nested(N, b)
    assert (A @ B).to_nested() == _pure_matmul(a, b, N)
    assert A @ B == CycloTensor.from_nested(N, _pure_matmul(a, b, N))


def test_kron_and_two_site_application():
    N = 3
    z = CyclotomicNumber.zeta(N)
    a = CycloTensor.from_entries(N, (N, N), lambda i, j: z ** (i + 2 * j) + i)
    b = CycloTensor.from_entries(N, (N, N), lambda i, j: Fraction(j + 1, 2) - z ** (i * j))
    op = kron_operator(a, b)
    for i, j, k, l in itertools.product(range(N), repeat=4):
        assert op.entry(i, j, k, l) == a.entry(i, k) * b.entry(j, l)
    state = CycloTensor.from_entries(N, (N, N, N), lambda x, y, w: z ** (x * y + w) - w)
    applied = apply_two_site(op, state, 0, 2)
    for x, y, w in itertools.product(range(N), repeat=3):
        expected = CyclotomicNumber.zero(N)
        for u, v in itertools.product(range(N), repeat=2):
            expected = expected + a.entry(x, u) * b.entry(w, v) * state.entry(u, y, v)
        assert applied.entry(x, y, w) == expected


def test_tensor_trace_and_moveaxis():
    N = 4
    t = CycloTensor.from_entries(N, (N, 2, N), lambda i, j, k: CyclotomicNumber.zeta(N, i + k) * (j + 1))
    tr = t.trace(0, 2)
    for j in range(2):
        expected = sum((t.entry(i, j, i) for i in range(N)), CyclotomicNumber.zero(N))
        assert tr.entry(j) == expected
    moved = t.moveaxis([2], [0])
    assert moved.shape == (N, N, 2)
    assert moved.entry(3, 1, 1) == t.entry(1, 1, 3)
