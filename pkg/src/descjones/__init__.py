"""Descendant colored Jones invariants and root-of-unity state sums, in exact arithmetic."""

from .algebra import (
    BivariateLaurent,
    CycloTensor,
    CyclotomicNumber,
    HabiroTruncation,
    LaurentPolynomial,
    RationalLaurent,
)
from .descendants import (
    descendant,
    dj_colored,
    dj_eval_root,
    dj_habiro,
    dj_x,
    mirror_descendant,
    verify_52_identities,
)
from .habiro import (
    HabiroSequence,
    InconsistentDataError,
    UnknownKnotError,
    builtin_habiro,
    habiro_from_jones,
    habiro_sequence,
    jones_from_habiro,
    load_habiro_file,
)
from .qdiff import QDiffOperator, builtin_relation, classical_limit, verify_relation
from .report import Report
from .rmatrix import r_at_one, r_spectral, rmatrix_suite

__version__ = "0.1.0"

__all__ = [
    "BivariateLaurent", "CycloTensor", "CyclotomicNumber", "HabiroSequence", "HabiroTruncation",
    "InconsistentDataError", "LaurentPolynomial", "QDiffOperator", "RationalLaurent", "Report",
    "UnknownKnotError", "builtin_habiro", "builtin_relation", "classical_limit", "descendant",
    "dj_colored", "dj_eval_root", "dj_habiro", "dj_x", "habiro_from_jones", "habiro_sequence",
    "jones_from_habiro", "load_habiro_file", "mirror_descendant", "r_at_one", "r_spectral",
    "rmatrix_suite", "verify_52_identities", "verify_relation",
]
