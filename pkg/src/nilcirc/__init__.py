"""Exact nilpotence decisions for circulant step-sum matrices, with oracles."""

from .circring import CirculantElem, geom_sum, shift_power
from .congruence import Lemma1Instance, count_closed_form, count_enumerate, count_recursive, validate
from .errors import (
    BudgetExceeded,
    CoprimalityViolated,
    DivisibilityViolated,
    InputError,
    InvalidInput,
    InvalidPrime,
    Overflow,
    ShapeMismatch,
    TooLarge,
)
from .nilpotence import (
    ZmClause,
    ZmVerdict,
    ZpVerdict,
    decide_zm,
    decide_zm_via_primes,
    decide_zp,
    index_expansion,
    index_formula,
)
from .oracle import (
    OracleReport,
    frobenius_check,
    geometric_identity_check,
    min_nilpotent_index,
    verify_corollary1,
    verify_theorem1,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "CirculantElem",
    "CoprimalityViolated",
    "DivisibilityViolated",
    "InputError",
    "InvalidInput",
    "InvalidPrime",
    "Lemma1Instance",
    "OracleReport",
    "Overflow",
    "ShapeMismatch",
    "TooLarge",
    "ZmClause",
    "ZmVerdict",
    "ZpVerdict",
    "count_closed_form",
    "count_enumerate",
    "count_recursive",
    "decide_zm",
    "decide_zm_via_primes",
    "decide_zp",
    "frobenius_check",
    "geom_sum",
    "geometric_identity_check",
    "index_expansion",
    "index_formula",
    "min_nilpotent_index",
    "shift_power",
    "validate",
    "verify_corollary1",
    "verify_theorem1",
]
