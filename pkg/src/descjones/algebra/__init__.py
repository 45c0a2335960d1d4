"""Exact arithmetic: Laurent polynomials, cyclotomic fields, Habiro truncations, tensors."""

from .cyclotensor import CycloTensor, apply_two_site, kron_operator
from .cyclotomic import CyclotomicNumber, cyclotomic_polynomial, double_angle, root_pochhammer
from .habiro_ring import HabiroTruncation, habiro_reduce
from .laurent import BivariateLaurent, LaurentPolynomial, RationalLaurent, exact_divide, pochhammer, qpoch, substitute

__all__ = [
    "BivariateLaurent", "CycloTensor", "CyclotomicNumber", "HabiroTruncation", "LaurentPolynomial",
    "RationalLaurent", "apply_two_site", "cyclotomic_polynomial", "double_angle", "exact_divide",
    "habiro_reduce", "kron_operator", "pochhammer", "qpoch", "root_pochhammer", "substitute",
]
