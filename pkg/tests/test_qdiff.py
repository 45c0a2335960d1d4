import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from descjones.algebra.laurent import BivariateLaurent, LaurentPolynomial
from descjones.descendants import dj_colored
from descjones.habiro import UnknownKnotError
from descjones.qdiff import (
    QDiffOperator,
    SequenceIndexError,
    builtin_relation,
    classical_limit,
    cubic_discriminant,
    displayed_b31,
    displayed_b41,
    displayed_operator_report,
    op_apply,
    relation_31,
    relation_41,
    relation_52,
    span_coefficients_52,
    span_reduction_check_52,
    unit_multiple,
    verify_relation,
)
from helpers import lp

Q, S = QDiffOperator.Q(), QDiffOperator.S()
q = LaurentPolynomial.monomial(1)


def f41(m):
    return dj_colored("4_1", m, 3)


def test_shift_and_multiplication_actions():
    assert op_apply(S, f41, 0, x_qpow=3) == dj_colored("4_1", 1, 3)
    assert op_apply(Q, f41, 2, x_qpow=3) == q ** 2 * f41(2)
    commutator = S * Q - QDiffOperator.scalar(BivariateLaurent.q()) * Q * S
    assert commutator.is_zero()
    for m in range(-2, 3):
        assert op_apply(S * Q, f41, m, x_qpow=3) == op_apply(QDiffOperator.scalar(BivariateLaurent.q()) * Q * S, f41, m, x_qpow=3)


coeffs = st.dictionaries(st.tuples(st.integers(-2, 2), st.integers(-1, 1)), st.integers(-3, 3), max_size=3)
operators = st.dictionaries(st.tuples(st.integers(-2, 2), st.integers(-2, 2)), coeffs.map(BivariateLaurent),
                            max_size=3).map(QDiffOperator)


@settings(max_examples=40, deadline=None)
@given(operators, operators, st.integers(1, 5), st.integers(-3, 3))
def test_normal_ordering_is_composition(a, b, n, m):
    f = lambda k: dj_colored("3_1", k, n)
    inner = lambda k: op_apply(b, f, k, x_qpow=n)
    assert op_apply(a * b, f, m, x_qpow=n) == op_apply(a, inner, m, x_qpow=n)


@given(operators)
def test_operator_json_round_trip(a):
    assert QDiffOperator.from_json(json.loads(json.dumps(a.to_json()))) == a


def test_relation_examples():
    rel = relation_41()
    f = lambda m: dj_colored("4_1", m, 4)
    assert op_apply(rel.lhs, f, 1, x_qpow=4) == rel.rhs_value(1, x_qpow=4) == 1
    rhs = relation_52().rhs_value(3, x_qpow=5)
    assert rhs == q ** 10


@pytest.mark.parametrize("knot,ms,ns", [
    ("3_1", range(-4, 5), range(1, 9)),
    ("4_1", range(-5, 6), range(1, 9)),
    ("5_2", range(0, 6), range(1, 7)),
])
def test_recursions_hold(knot, ms, ns):
    report = verify_relation(knot, ms, ns)
    assert report.ok, report.failures[:3]


@pytest.mark.parametrize("knot", ["3_1", "4_1", "5_2"])
def test_recursions_hold_in_habiro_ring(knot):
    report = verify_relation(knot, range(-2, 4), level=8)
    assert report.ok


def test_builtin_relation_errors():
    with pytest.raises(UnknownKnotError):
        builtin_relation("3_1*")
    with pytest.raises(UnknownKnotError):
        builtin_relation("7_4")


def test_missing_sequence_values_are_reported():
    def partial(m):
        if m > 2:
            raise KeyError(m)
        return LaurentPolynomial.constant(1)

    with pytest.raises(SequenceIndexError):
        op_apply(S, partial, 2, x_qpow=1)


def test_displayed_operators():
    assert displayed_b31() == relation_31().lhs
    assert unit_multiple(displayed_b41(), relation_41().lhs) is None
    target = relation_41().lhs
    assert unit_multiple(S * target, target) == (1, 0, 1)
    assert unit_multiple(-(Q * S * target), target) == (-1, 1, 1)


def test_classical_limits():
    assert classical_limit(relation_52().lhs) == lp({2: 5, 3: -7, 4: 4, 5: -1})
    assert classical_limit(relation_52().lhs) == -lp({2: 1}) * lp({0: -5, 1: 7, 2: -4, 3: 1})
    assert classical_limit(relation_41().lhs) == lp({-1: 1, 0: -1, 1: 1})
    assert classical_limit(relation_41().lhs) * lp({1: 1}) == lp({0: 1, 1: -1, 2: 1})
    assert classical_limit(relation_31().lhs) == lp({1: 2, 2: -1})
    assert classical_limit(displayed_b41()) == lp({-1: 1, 1: -1, 2: 1})


def test_discriminants():
    assert cubic_discriminant(lp({3: 1, 2: -4, 1: 7, 0: -5})) == -23
    assert cubic_discriminant([-1, 0, 0, 1]) == -27
    assert cubic_discriminant(lp({3: 1, 2: -6, 1: 11, 0: -6})) == 4
    with pytest.raises(ValueError):
        cubic_discriminant([1, 2, 3])


def test_span_of_higher_descendants():
    rel = relation_52()
    assert rel.lhs.coefficient_at(0, -2).is_zero()
    assert rel.lhs.coefficient_at(0, -1).is_zero()
    assert rel.lhs.coefficient_at(1, -2).is_zero()
    assert set(span_coefficients_52()) == {3, 4}
    report = span_reduction_check_52(8)
    assert report.ok, report.text()


def test_displayed_operator_report():
    assert [c.status for c in displayed_operator_report("3_1")] == ["PASS"]
    lines = list(displayed_operator_report("4_1"))
    assert [c.status for c in lines] == ["INFO"] and "not a unit multiple" in lines[0].note
    assert len(displayed_operator_report("5_2")) == 0
