"""Brute-force ground truth and the harnesses that compare closed forms to it.

The index search multiplies one factor at a time on purpose: every
intermediate power is inspected, and no code is shared with the closed-form
side beyond the ring primitives themselves.
"""

from __future__ import annotations

import dataclasses
import time
from dataclasses import dataclass
from typing import Optional

from . import circring
from .circring import CirculantElem
from .errors import InvalidInput
from .nilpotence import ZmVerdict, decide_zm, decide_zp
from .numutil import is_prime


@dataclass(frozen=True)
class OracleReport:
    n: int
    m: int
    modulus: int
    oracle_index: Optional[int]
    predicted_nilpotent: bool
    predicted_index: Optional[int]
    agree: bool
    elapsed: float

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "modulus": self.modulus,
            "oracle_index": self.oracle_index,
            "predicted_nilpotent": self.predicted_nilpotent,
            "predicted_index": self.predicted_index,
            "agree": self.agree,
            "elapsed": self.elapsed,
        }


def min_nilpotent_index(a: CirculantElem, bound: int) -> Optional[int]:
    """Smallest k in [1, bound] with a**k = 0, by iterated multiplication."""
    if bound < 1:
        raise InvalidInput(f"bound must be >= 1, got {bound}")
    acc = a
    for k in range(1, bound + 1):
        if circring.is_zero(acc):
            return k
        acc = circring.mul(acc, a)
    return None


def _agree(oracle_index: Optional[int], predicted_nilpotent: bool,
           predicted_index: Optional[int]) -> bool:
    if (oracle_index is not None) != predicted_nilpotent:
        return False
    if oracle_index is not None and predicted_index is not None:
        return oracle_index == predicted_index
    return True


def verify_theorem1(n: int, m: int, p: int) -> OracleReport:
    """Compare decide_zp with the index search over Z_p, bound n.

    Bound n is sound: a nilpotent n x n matrix has index at most n.
    """
    start = time.perf_counter()
    verdict = decide_zp(n, m, p)
    found = min_nilpotent_index(circring.geom_sum(n, m, p), n)
    agree = _agree(found, verdict.nilpotent, verdict.index)
    return OracleReport(
        n, m, p, found, verdict.nilpotent, verdict.index, agree,
        time.perf_counter() - start,
    )


def verify_corollary1(n: int, m: int) -> OracleReport:
    """Compare decide_zm with the index search over Z_m, bound n."""
    start = time.perf_counter()
    verdict = decide_zm(n, m)
    found = min_nilpotent_index(circring.geom_sum(n, m, m), n)
    if found is not None:
        assert found <= n  # the promised bound; unreachable to violate with bound=n
    agree = _agree(found, verdict.nilpotent, None)
    return OracleReport(
        n, m, m, found, verdict.nilpotent, None, agree,
        time.perf_counter() - start,
    )


def with_exact_index(verdict: ZmVerdict) -> ZmVerdict:
    """Fill ZmVerdict.exact_index from the index search (bound n)."""
    if not verdict.nilpotent:
        return verdict
    found = min_nilpotent_index(
        circring.geom_sum(verdict.n, verdict.m, verdict.m), verdict.n
    )
    return dataclasses.replace(verdict, exact_index=found)


def frobenius_check(a: CirculantElem, b: CirculantElem, k: int) -> bool:
    """x -> x**(p**k) must be a ring homomorphism in characteristic p."""
    if not is_prime(a.modulus):
        raise InvalidInput(f"modulus {a.modulus} is not prime")
    if k < 0:
        raise InvalidInput(f"k must be >= 0, got {k}")
    e = a.modulus**k
    additive = circring.power(circring.add(a, b), e) == circring.add(
        circring.power(a, e), circring.power(b, e)
    )
    multiplicative = circring.power(circring.mul(a, b), e) == circring.mul(
        circring.power(a, e), circring.power(b, e)
    )
    return additive and multiplicative


def geometric_identity_check(n: int, m: int, q: int) -> bool:
    """(I + S + ... + S**(m-1)) * (I - S) must equal I - S**m."""
    t = circring.geom_sum(n, m, q)
    one = circring.identity(n, q)
    minus_s = circring.scalar_mul(q - 1, circring.shift_power(n, q, 1))
    lhs = circring.mul(t, circring.add(one, minus_s))
    minus_sm = circring.scalar_mul(q - 1, circring.shift_power(n, q, m))
    rhs = circring.add(one, minus_sm)
    return lhs == rhs
