"""Test helpers: floating-point views of exact values, used only for comparison with frozen references."""

import cmath

from descjones.algebra.cyclotomic import CyclotomicNumber
from descjones.algebra.laurent import LaurentPolynomial


def to_complex(x: CyclotomicNumber, k: int = 1) -> complex:
    z = cmath.exp(2j * cmath.pi * k / x.N)
    return sum(float(c) * z ** e for e, c in enumerate(x.coefficients))


def lp(terms: dict) -> LaurentPolynomial:
    return LaurentPolynomial(terms)
