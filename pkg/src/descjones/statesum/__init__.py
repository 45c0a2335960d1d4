"""State-sum invariants <K>_{N,n} of long-knot diagrams."""

from .checks import (
    conjecture2_check,
    conjugation_symmetry_check,
    invariance_check,
    kink_checks,
    oracle_check,
    weight_relation_checks,
)
from .contract import InvariantMatrix, contract, naive_contract, tangle_tensor
from .diagram import (
    BUILTIN_DIAGRAMS,
    CROSSING_KINDS,
    DiagramError,
    LongKnotDiagram,
    Slice,
    braid_closure_diagram,
    builtin_diagram,
    insert_curl_pair,
    load_diagram,
    slide_translate,
    validate_diagram,
)
from .oracle import naive_sum_41
from .weights import crossing_operator, crossing_weight, segment_weight

__all__ = [
    "BUILTIN_DIAGRAMS", "CROSSING_KINDS", "DiagramError", "InvariantMatrix", "LongKnotDiagram", "Slice",
    "braid_closure_diagram", "builtin_diagram", "conjecture2_check", "conjugation_symmetry_check",
    "contract", "crossing_operator", "crossing_weight", "insert_curl_pair", "invariance_check",
    "kink_checks", "load_diagram", "naive_contract", "naive_sum_41", "oracle_check", "segment_weight",
    "slide_translate", "tangle_tensor", "validate_diagram", "weight_relation_checks",
]
