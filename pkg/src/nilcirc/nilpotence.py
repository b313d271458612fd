"""Nilpotence decisions for the step-sum circulant T = I + S + ... + S**(m-1).

Over Z_p the decision is exact: write n = p**a * n_star and m = p**b * m_star
with the starred parts coprime to p; T is nilpotent iff b >= 1 and
n_star | m_star, and then its index is ceil(p**a / (p**b - 1)). Over Z_m two
independent routes are provided: the literal two-clause predicate, and the
reduction to decide_zp at every prime factor of m.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from . import circring
from .circring import CirculantElem
from .errors import InvalidInput, InvalidPrime
from .numutil import ceil_div, factorize, is_prime, p_adic_valuation, pow_checked


class ZmClause(enum.Enum):
    SAME_PRIME_POWERS = "same_prime_powers"
    MULTI_PRIME_DIVIDES = "multi_prime_divides"
    NOT_NILPOTENT = "not_nilpotent"


@dataclass(frozen=True)
class ZpVerdict:
    n: int
    m: int
    p: int
    a: int
    b: int
    n_star: int
    m_star: int
    nilpotent: bool
    index: Optional[int] = None
    qdiv: Optional[int] = None
    rdiv: Optional[int] = None

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "p": self.p,
            "a": self.a,
            "b": self.b,
            "n_star": self.n_star,
            "m_star": self.m_star,
            "nilpotent": self.nilpotent,
            "index": self.index,
        }


@dataclass(frozen=True)
class ZmVerdict:
    n: int
    m: int
    nilpotent: bool
    clause: ZmClause
    per_prime: tuple[ZpVerdict, ...] = ()
    exact_index: Optional[int] = None

    def to_json_dict(self) -> dict:
        out = {
            "n": self.n,
            "m": self.m,
            "nilpotent": self.nilpotent,
            "clause": self.clause.value,
            "per_prime": [v.to_json_dict() for v in self.per_prime],
        }
        if self.exact_index is not None:
            out["index"] = self.exact_index
        return out


@dataclass(frozen=True)
class NecessityReport:
    n: int
    m: int
    p: int
    row_sum_ok: bool
    oracle_nilpotent: bool
    p_divides_m: bool
    n_divides_m_pk: bool
    implication_ok: bool


# ---------------------------------------------------------------------------
# Z_p


def index_formula(a: int, b: int, p: int) -> int:
    """ceil(p**a / (p**b - 1)) with checked arithmetic."""
    if not is_prime(p):
        raise InvalidPrime(f"{p} is not prime")
    if b < 1:
        raise InvalidInput(f"index formula needs b >= 1, got {b}")
    return ceil_div(pow_checked(p, a), pow_checked(p, b) - 1)


def index_expansion(a: int, b: int, p: int) -> tuple[int, int, int]:
    """The same index as p**r * (1 + p**b + ... + p**(b*(q-1))) + 1, a = b*q + r.

    Only defined for a >= b (one full division step); below that T itself is
    already zero and the expansion is bypassed.
    """
    if b < 1:
        raise InvalidInput(f"expansion needs b >= 1, got {b}")
    if a < b:
        raise InvalidInput(f"expansion needs a >= b, got a={a}, b={b}")
    qdiv, rdiv = divmod(a, b)
    geo = sum(pow_checked(p, b * i) for i in range(qdiv))
    value = pow_checked(p, rdiv) * geo + 1
    return qdiv, rdiv, value


def decide_zp(n: int, m: int, p: int) -> ZpVerdict:
    """Decide nilpotence of T over Z_p and compute the exact index.

    The divisibility condition "n | m * p**k for some k" holds iff the p-free
    part of n divides the p-free part of m, which is what gets tested.
    """
    if n < 1 or m < 1:
        raise InvalidInput(f"decide_zp needs n, m >= 1, got n={n}, m={m}")
    va = p_adic_valuation(n, p)  # also validates p
    vb = p_adic_valuation(m, p)
    a, n_star = va.exponent, va.cofactor
    b, m_star = vb.exponent, vb.cofactor
    nilpotent = b >= 1 and m_star % n_star == 0
    if not nilpotent:
        return ZpVerdict(n, m, p, a, b, n_star, m_star, False)
    qdiv, rdiv = divmod(a, b)
    return ZpVerdict(
        n, m, p, a, b, n_star, m_star, True,
        index=index_formula(a, b, p), qdiv=qdiv, rdiv=rdiv,
    )


# ---------------------------------------------------------------------------
# Z_m


def decide_zm(n: int, m: int) -> ZmVerdict:
    """The literal two-clause predicate over Z_m.

    Nilpotent iff either m and n are powers of one common prime (n = 1
    counts, as the zeroth power), or m has at least two distinct prime
    factors and n divides m.
    """
    if m < 2:
        raise InvalidInput(f"decide_zm needs m >= 2, got {m}")
    if n < 1:
        raise InvalidInput(f"decide_zm needs n >= 1, got {n}")
    m_primes = factorize(m).primes()
    if len(m_primes) == 1:
        p = m_primes[0]
        if n == 1 or factorize(n).primes() == (p,):
            return ZmVerdict(n, m, True, ZmClause.SAME_PRIME_POWERS)
    elif m % n == 0:
        return ZmVerdict(n, m, True, ZmClause.MULTI_PRIME_DIVIDES)
    return ZmVerdict(n, m, False, ZmClause.NOT_NILPOTENT)


def decide_zm_via_primes(n: int, m: int) -> ZmVerdict:
    """Nilpotent over Z_m iff nilpotent over Z_p for every prime p | m."""
    if m < 2:
        raise InvalidInput(f"decide_zm needs m >= 2, got {m}")
    if n < 1:
        raise InvalidInput(f"decide_zm needs n >= 1, got {n}")
    verdicts = tuple(decide_zp(n, m, p) for p in factorize(m).primes())
    nilpotent = all(v.nilpotent for v in verdicts)
    if not nilpotent:
        clause = ZmClause.NOT_NILPOTENT
    elif len(verdicts) == 1:
        clause = ZmClause.SAME_PRIME_POWERS
    else:
        clause = ZmClause.MULTI_PRIME_DIVIDES
    return ZmVerdict(n, m, nilpotent, clause, per_prime=verdicts)


# ---------------------------------------------------------------------------
# executable proof steps


def _nilpotent_verdict_with_split(n: int, m: int, p: int) -> ZpVerdict:
    v = decide_zp(n, m, p)
    if not v.nilpotent:
        raise InvalidInput(f"T(n={n}, m={m}) is not nilpotent over Z_{p}")
    if v.a < v.b:
        raise InvalidInput(
            f"needs a >= b (one full division step), got a={v.a}, b={v.b}"
        )
    return v


def witness_nonvanishing(n: int, m: int, p: int) -> tuple[CirculantElem, bool]:
    """T**(index-1) against its predicted closed form.

    The prediction is the indicator of multiples of p**r, scaled by
    m_star**q / n_star (an exact integer, nonzero mod p), with a = b*q + r.
    Returns the computed power and whether it matches the prediction.
    """
    v = _nilpotent_verdict_with_split(n, m, p)
    t = circring.geom_sum(n, m, p)
    computed = circring.power(t, v.index - 1)
    scale = pow_checked(v.m_star, v.qdiv) // v.n_star
    predicted = circring.scalar_mul(
        scale, circring.multiples_indicator(n, p, pow_checked(p, v.rdiv))
    )
    return computed, computed == predicted


def annihilation_check(n: int, m: int, p: int) -> bool:
    """The indicator of multiples of p**r kills T: their product is zero mod p."""
    v = _nilpotent_verdict_with_split(n, m, p)
    indicator = circring.multiples_indicator(n, p, pow_checked(p, v.rdiv))
    t = circring.geom_sum(n, m, p)
    return circring.is_zero(circring.mul(indicator, t))


def necessity_checks(n: int, m: int, p: int, k_bound: int = 6) -> NecessityReport:
    """Check the two facts forced by nilpotence.

    (1) The coefficient sum of T**k is m**k mod p (all-ones eigenvector), for
    k up to k_bound. (2) If the brute-force oracle finds T nilpotent, then
    p | m and n | m * p**k for some k <= v_p(n) + 1.
    """
    from .oracle import min_nilpotent_index  # deferred: oracle imports this module

    if not is_prime(p):
        raise InvalidPrime(f"{p} is not prime")
    t = circring.geom_sum(n, m, p)
    row_sum_ok = all(
        circring.row_sum(circring.power(t, k)) == pow(m, k, p)
        for k in range(1, k_bound + 1)
    )
    oracle_nilpotent = min_nilpotent_index(t, n) is not None
    p_divides_m = m % p == 0
    a = p_adic_valuation(n, p).exponent
    n_divides_m_pk = any((m * p**k) % n == 0 for k in range(a + 2))
    implication_ok = (not oracle_nilpotent) or (p_divides_m and n_divides_m_pk)
    return NecessityReport(
        n, m, p, row_sum_ok, oracle_nilpotent, p_divides_m, n_divides_m_pk,
        implication_ok,
    )
